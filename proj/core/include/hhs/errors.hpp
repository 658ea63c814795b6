#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhs {

// Malformed input file. `line` is 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : std::runtime_error(line > 0 ? "parse error (line " + std::to_string(line) + "): " + reason
                                      : "parse error: " + reason),
          line_(line), reason_(reason) {}

    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

// An internal contract was violated. These are fail-fast: they indicate a bug
// in this library, not bad user input (CLI exit code 3).
class InternalInvariantError : public std::logic_error {
public:
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

class HorizontalDirectionError : public InternalInvariantError {
public:
    HorizontalDirectionError() : InternalInvariantError("direction is horizontal (dy = 0)") {}
};

class DuplicateNormalError : public InternalInvariantError {
public:
    explicit DuplicateNormalError(int idA, int idB)
        : InternalInvariantError("duplicate normals for half-planes " + std::to_string(idA) +
                                 " and " + std::to_string(idB)),
          idA_(idA), idB_(idB) {}
    int idA() const { return idA_; }
    int idB() const { return idB_; }

private:
    int idA_, idB_;
};

class InternalOrderMismatchError : public InternalInvariantError {
public:
    explicit InternalOrderMismatchError(const std::string& what) : InternalInvariantError(what) {}
};

class SeedNotHitError : public InternalInvariantError {
public:
    explicit SeedNotHitError(const std::string& what) : InternalInvariantError(what) {}
};

class BadIndexError : public std::out_of_range {
public:
    explicit BadIndexError(const std::string& what) : std::out_of_range(what) {}
};

// A cover problem position not covered by any interval.
class UncoverableError : public std::runtime_error {
public:
    explicit UncoverableError(int position)
        : std::runtime_error("position " + std::to_string(position) + " lies in no interval"),
          position_(position) {}
    int position() const { return position_; }

private:
    int position_;
};

}  // namespace hhs
