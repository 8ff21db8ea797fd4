#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kempe {

/// Malformed or out-of-contract input (bad graph6, violated precondition).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state-space cap was exceeded; `partial_count` is how far we got.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t partial_count)
        : std::runtime_error(what), partial_count_(partial_count)
    {
    }

    std::uint64_t partial_count() const noexcept { return partial_count_; }

private:
    std::uint64_t partial_count_;
};

/// A certificate check failed; the message names the failed condition.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kempe
