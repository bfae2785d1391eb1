#include "sw/context.hpp"

#include <limits>

namespace sw {

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

void Context::validate() const {
    if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
    if (f < 1 || e < 1 || n < 1) throw InputError("f, e, n must be positive");
    (void)q();
}

std::int64_t Context::q() const { return ipow64(p, f); }

std::string Context::str() const {
    return "p=" + std::to_string(p) + " f=" + std::to_string(f) + " e=" + std::to_string(e) +
           " n=" + std::to_string(n);
}

std::int64_t ipow64(std::int64_t b, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (b != 0 && (r > std::numeric_limits<std::int64_t>::max() / 4 / (b < 0 ? -b : b)))
            throw Unsupported("integer overflow computing " + std::to_string(b) + "^" + std::to_string(k));
        r *= b;
    }
    return r;
}

BigInt ipow(std::int64_t b, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

Row eta(int n) {
    Row r(n);
    for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
    return r;
}

}  // namespace sw
