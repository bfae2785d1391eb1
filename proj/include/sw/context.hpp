#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sw {

using BigInt = boost::multiprecision::cpp_int;
using Row = std::vector<std::int64_t>;
using Matrix = std::vector<Row>;

// Errors carry the CLI exit code they map to.
struct Error : std::runtime_error {
    int code;
    Error(const std::string& what, int c) : std::runtime_error(what), code(c) {}
};
struct InputError : Error {
    explicit InputError(const std::string& w) : Error(w, 2) {}
};
struct Unsupported : Error {
    explicit Unsupported(const std::string& w) : Error(w, 3) {}
};
struct NotRestricted : InputError {
    using InputError::InputError;
};
struct ShiftUndefined : InputError {
    using InputError::InputError;
};
struct NotPRegular : InputError {
    using InputError::InputError;
};
struct ExcludedClass : InputError {
    using InputError::InputError;
};
struct GapTooLarge : InputError {
    using InputError::InputError;
};

struct Context {
    int p = 2;
    int f = 1;
    int e = 1;
    int n = 1;

    auto operator<=>(const Context&) const = default;

    void validate() const;
    std::int64_t q() const;  // p^f
    int embeddings() const { return e * f; }
    Context with_n(int m) const { return Context{p, f, e, m}; }
    std::string str() const;
};

bool is_prime(std::int64_t x);

// Integer helpers shared by every module.
std::int64_t ipow64(std::int64_t b, int k);  // throws Unsupported on overflow
BigInt ipow(std::int64_t b, int k);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
BigInt mod_floor(const BigInt& a, const BigInt& m);

// eta_n = (n-1, ..., 1, 0)
Row eta(int n);

}  // namespace sw
