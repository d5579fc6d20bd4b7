#pragma once

#include <cstddef>
#include <vector>

#include "pst/vocab.hpp"

namespace pst {

// A bounded sequence of vocabulary ids. Responses produced by sampling carry
// their terminating eos as the last id when generation stopped on eos; a
// sequence holds at most one eos and only in last position.
struct TokenSeq {
    std::vector<int> ids;

    TokenSeq() = default;
    explicit TokenSeq(std::vector<int> v) : ids(std::move(v)) {}

    size_t size() const { return ids.size(); }
    bool empty() const { return ids.empty(); }

    bool ends_with_eos() const { return !ids.empty() && ids.back() == Vocabulary::kEos; }

    // Number of non-eos tokens; a response whose only token is eos counts as
    // having no content.
    size_t content_size() const { return ids.size() - (ends_with_eos() ? 1 : 0); }

    bool operator==(const TokenSeq& other) const { return ids == other.ids; }
};

// Validates the TokenSeq shape invariants against a vocabulary: ids in range,
// at most one eos and, if present, last. Throws ConfigError on violation.
void validate_token_seq(const TokenSeq& seq, int vocab_size);

} // namespace pst
