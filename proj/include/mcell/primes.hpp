#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace mcell {

using Prime = std::uint64_t;

bool is_prime(std::uint64_t n);
Prime next_prime(std::uint64_t n);  // smallest prime > n

// Factor n >= 1 into (prime, exponent) pairs, ascending primes.
std::vector<std::pair<Prime, unsigned>> factorize(std::uint64_t n);

// Natural number extended with infinity; exponents k_p of Baer types live here.
struct ExtNat {
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t v = 0;

    ExtNat() = default;
    explicit ExtNat(std::uint32_t n) : v(n) {}
    static ExtNat inf() { return ExtNat(kInf); }
    static ExtNat fin(std::uint32_t n) { return ExtNat(n); }

    bool is_inf() const { return v == kInf; }
    bool is_zero() const { return v == 0; }
    std::uint32_t finite() const { return v; }  // callers check is_inf first

    bool operator==(const ExtNat& o) const { return v == o.v; }
    bool operator!=(const ExtNat& o) const { return v != o.v; }
    bool operator<(const ExtNat& o) const { return v < o.v; }
    bool operator<=(const ExtNat& o) const { return v <= o.v; }
    bool operator>(const ExtNat& o) const { return v > o.v; }
    bool operator>=(const ExtNat& o) const { return v >= o.v; }

    ExtNat operator+(const ExtNat& o) const {
        if (is_inf() || o.is_inf()) return inf();
        return ExtNat(v + o.v);
    }

    std::string to_string() const { return is_inf() ? "inf" : std::to_string(v); }
};

}  // namespace mcell
