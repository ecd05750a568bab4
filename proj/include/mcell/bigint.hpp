#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcell {

// Arbitrary-precision signed integer, sign + base-2^32 magnitude.
// Covers what the Smith normal form oracle and the telescope bookkeeping
// need: ring ops, divmod, gcd, valuations, decimal printing.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_uint64(std::uint64_t v);
    static BigInt from_decimal(const std::string& s);

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ > 0 && mag_.size() == 1 && mag_[0] == 1; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division (C semantics): q = trunc(a/b), r = a - q*b.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(*this, o) >= 0; }

    bool divisible_by(const BigInt& d) const;
    static BigInt gcd(BigInt a, BigInt b);

    // Largest e with p^e | *this; requires nonzero value, p >= 2.
    unsigned valuation(std::uint64_t p) const;

    // Fits in int64 (for interop with small-entry paths)?
    bool fits_int64() const;
    std::int64_t to_int64() const;

    std::string to_string() const;

    static int cmp(const BigInt& a, const BigInt& b);

private:
    int sign_ = 0;                       // -1, 0, +1
    std::vector<std::uint32_t> mag_;     // little-endian limbs, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    std::uint32_t divmod_small(std::uint32_t d);  // in place, returns remainder
};

}  // namespace mcell
