#pragma once

#include <stdexcept>
#include <string>

namespace pst {

// Invalid or inconsistent configuration / user input. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite values or other numeric failures at runtime. CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Sequence does not fit the model context window.
class LengthError : public std::runtime_error {
public:
    explicit LengthError(const std::string& what) : std::runtime_error(what) {}
};

// File IO problems: missing files, truncation, parse failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Checkpoint integrity: bad magic, wrong version, checksum or vocab-hash mismatch.
class CheckpointError : public std::runtime_error {
public:
    explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pst
