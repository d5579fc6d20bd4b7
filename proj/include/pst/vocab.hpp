#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace pst {

// Fixed symbol alphabet shared by every model in an experiment. Specials come
// first so their ids are stable: pad=0, bos=1, eos=2, sep=3. The token list is
// versioned through a content hash that checkpoints embed, so models trained
// against different alphabets refuse to mix.
class Vocabulary {
public:
    static constexpr int kPad = 0;
    static constexpr int kBos = 1;
    static constexpr int kEos = 2;
    static constexpr int kSep = 3;

    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> tokens);

    // The alphabet used by the synthetic arithmetic tasks: specials, digits,
    // lowercase letters, 'Q', space and punctuation. Fixed order.
    static Vocabulary standard();

    static Vocabulary load(const std::string& path);
    void save(const std::string& path) const;

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(int id) const { return tokens_.at(static_cast<size_t>(id)); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    // Token id for a symbol; throws ConfigError for unknown symbols.
    int id(const std::string& symbol) const;
    bool contains(const std::string& symbol) const { return index_.count(symbol) > 0; }

    // Character-level encoding of plain text (no specials inserted).
    std::vector<int> encode(const std::string& text) const;
    // Inverse of encode; special tokens are skipped.
    std::string decode(const std::vector<int>& ids) const;

    // FNV-1a over the newline-joined token list; identifies the alphabet.
    uint64_t hash() const { return hash_; }

private:
    void build_index();

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> index_;
    uint64_t hash_ = 0;
};

} // namespace pst
