#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace racktwist {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: out-of-range indices, malformed tables, violated preconditions.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two objects that must live on the same rack (or share an order m) do not.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// A configured size cap (orbit size, tensor dimension, Clifford n) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A self-check that cannot fail for consistent inputs failed anyway.
class InternalError : public Error {
public:
    using Error::Error;
};

/// First failing instance of an exhaustive check. `index` holds up to three
/// element indices (x, y, z); unused slots are zero.
struct Witness {
    std::array<std::size_t, 3> index{};
    std::string what;
};

struct CheckResult {
    std::optional<Witness> failure;

    bool ok() const { return !failure.has_value(); }
    explicit operator bool() const { return ok(); }

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::size_t x, std::size_t y, std::size_t z, std::string what)
    {
        return CheckResult{Witness{{x, y, z}, std::move(what)}};
    }
};

} // namespace racktwist
