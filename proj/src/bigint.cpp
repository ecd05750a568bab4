#include "mcell/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mcell {

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (m) {
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt BigInt::from_uint64(std::uint64_t v) {
    BigInt r;
    if (!v) return r;
    r.sign_ = 1;
    while (v) {
        r.mag_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
    return r;
}

BigInt BigInt::from_decimal(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("empty integer literal");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (!r.is_zero() && sign < 0) r.sign_ = -1;
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (is_zero() || o.is_zero()) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    return r;
}

std::uint32_t BigInt::divmod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag_[i];
        mag_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    // Binary long division on magnitudes; sizes here are small.
    q.assign(a.size(), 0);
    r.clear();
    int bits = static_cast<int>(a.size()) * 32;
    for (int i = bits - 1; i >= 0; --i) {
        // r <<= 1
        std::uint32_t carry = 0;
        for (auto& limb : r) {
            std::uint32_t nc = limb >> 31;
            limb = (limb << 1) | carry;
            carry = nc;
        }
        if (carry) r.push_back(1);
        // r |= bit i of a
        if ((a[i / 32] >> (i % 32)) & 1) {
            if (r.empty()) r.push_back(0);
            r[0] |= 1;
        }
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[i / 32] |= (std::uint32_t(1) << (i % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt division by zero");
    if (a.is_zero()) {
        q = BigInt();
        r = BigInt();
        return;
    }
    if (cmp_mag(a.mag_, b.mag_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    BigInt qq, rr;
    if (b.mag_.size() == 1) {
        qq.mag_ = a.mag_;
        qq.sign_ = 1;
        std::uint32_t rem = qq.divmod_small(b.mag_[0]);
        if (rem) {
            rr.sign_ = 1;
            rr.mag_.push_back(rem);
        }
    } else {
        divmod_mag(a.mag_, b.mag_, qq.mag_, rr.mag_);
        qq.sign_ = qq.mag_.empty() ? 0 : 1;
        rr.sign_ = rr.mag_.empty() ? 0 : 1;
    }
    // Attach signs, truncated semantics: sign(q) = sign(a)*sign(b), sign(r) = sign(a).
    if (!qq.is_zero()) qq.sign_ = a.sign_ * b.sign_;
    if (!rr.is_zero()) rr.sign_ = a.sign_;
    q = qq;
    r = rr;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::divisible_by(const BigInt& d) const {
    if (d.is_zero()) return is_zero();
    return (*this % d).is_zero();
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

unsigned BigInt::valuation(std::uint64_t p) const {
    if (is_zero()) throw std::domain_error("valuation of zero");
    BigInt v = abs();
    BigInt bp = from_uint64(p);
    unsigned e = 0;
    for (;;) {
        BigInt q, r;
        divmod(v, bp, q, r);
        if (!r.is_zero()) break;
        v = q;
        ++e;
    }
    return e;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    std::uint64_t m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ >= 0) return m <= static_cast<std::uint64_t>(INT64_MAX);
    return m <= static_cast<std::uint64_t>(INT64_MAX) + 1;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit int64");
    std::uint64_t m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt v = abs();
    std::string digits;
    while (!v.is_zero()) {
        std::uint32_t rem = v.divmod_small(1000000000u);
        if (v.is_zero()) {
            digits = std::to_string(rem) + digits;
        } else {
            std::string chunk = std::to_string(rem);
            digits = std::string(9 - chunk.size(), '0') + chunk + digits;
        }
    }
    return (sign_ < 0 ? "-" : "") + digits;
}

}  // namespace mcell
