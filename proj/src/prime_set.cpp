#include "mcell/prime_set.hpp"

#include <algorithm>
#include <sstream>

namespace mcell {

PrimeSet PrimeSet::intersect(const PrimeSet& o) const {
    if (!cofinite_ && !o.cofinite_) {
        std::set<Prime> r;
        for (Prime p : listed_)
            if (o.listed_.count(p)) r.insert(p);
        return finite(std::move(r));
    }
    if (cofinite_ && o.cofinite_) {
        std::set<Prime> r = listed_;
        r.insert(o.listed_.begin(), o.listed_.end());
        return cofinite(std::move(r));
    }
    const PrimeSet& fin = cofinite_ ? o : *this;
    const PrimeSet& cof = cofinite_ ? *this : o;
    std::set<Prime> r;
    for (Prime p : fin.listed_)
        if (cof.contains(p)) r.insert(p);
    return finite(std::move(r));
}

Prime PrimeSet::smallest() const {
    if (!cofinite_) return *listed_.begin();
    Prime p = 2;
    while (listed_.count(p)) p = next_prime(p);
    return p;
}

std::string PrimeSet::to_string() const {
    std::ostringstream os;
    if (cofinite_) {
        os << "P";
        if (!listed_.empty()) {
            os << "\\{";
            bool first = true;
            for (Prime p : listed_) {
                if (!first) os << ",";
                os << p;
                first = false;
            }
            os << "}";
        }
    } else {
        os << "{";
        bool first = true;
        for (Prime p : listed_) {
            if (!first) os << ",";
            os << p;
            first = false;
        }
        os << "}";
    }
    return os.str();
}

BaerType::BaerType(ExtNat tail, std::map<Prime, ExtNat> exceptions) : tail_(tail) {
    for (auto& [p, k] : exceptions)
        if (k != tail) exceptions_.emplace(p, k);
}

BaerType BaerType::inverted(const std::set<Prime>& ps) {
    std::map<Prime, ExtNat> ex;
    for (Prime p : ps) ex.emplace(p, ExtNat::inf());
    return BaerType(ExtNat::fin(0), std::move(ex));
}

ExtNat BaerType::value_at(Prime p) const {
    auto it = exceptions_.find(p);
    return it == exceptions_.end() ? tail_ : it->second;
}

PrimeSet BaerType::infinite_support() const {
    std::set<Prime> listed;
    if (tail_.is_inf()) {
        for (auto& [p, k] : exceptions_)
            if (!k.is_inf()) listed.insert(p);
        return PrimeSet::cofinite(std::move(listed));
    }
    for (auto& [p, k] : exceptions_)
        if (k.is_inf()) listed.insert(p);
    return PrimeSet::finite(std::move(listed));
}

PrimeSet BaerType::positive_support() const {
    std::set<Prime> listed;
    if (!tail_.is_zero()) {
        for (auto& [p, k] : exceptions_)
            if (k.is_zero()) listed.insert(p);
        return PrimeSet::cofinite(std::move(listed));
    }
    for (auto& [p, k] : exceptions_)
        if (!k.is_zero()) listed.insert(p);
    return PrimeSet::finite(std::move(listed));
}

std::optional<std::uint64_t> BaerType::total_finite_exponent() const {
    if (!tail_.is_zero()) return std::nullopt;
    std::uint64_t sum = 0;
    for (auto& [p, k] : exceptions_) {
        if (k.is_inf()) return std::nullopt;
        sum += k.finite();
    }
    return sum;
}

BaerType BaerType::plus(const BaerType& o) const {
    std::map<Prime, ExtNat> ex;
    std::set<Prime> ps;
    for (auto& [p, k] : exceptions_) ps.insert(p);
    for (auto& [p, k] : o.exceptions_) ps.insert(p);
    for (Prime p : ps) ex.emplace(p, value_at(p) + o.value_at(p));
    return BaerType(tail_ + o.tail_, std::move(ex));
}

int BaerType::cmp(const BaerType& a, const BaerType& b) {
    // Lexicographic on (k_2, k_3, k_5, ...): beyond the largest exception of
    // either type every value equals the tail, so walking primes up to that
    // bound and then comparing tails is exact.
    Prime bound = 2;
    if (!a.exceptions_.empty()) bound = std::max(bound, a.exceptions_.rbegin()->first);
    if (!b.exceptions_.empty()) bound = std::max(bound, b.exceptions_.rbegin()->first);
    for (Prime p = 2; p <= bound; p = next_prime(p)) {
        ExtNat ka = a.value_at(p), kb = b.value_at(p);
        if (ka != kb) return ka < kb ? -1 : 1;
    }
    if (a.tail_ != b.tail_) return a.tail_ < b.tail_ ? -1 : 1;
    return 0;
}

bool baer_equivalent(const BaerType& a, const BaerType& b) {
    if (a.tail() != b.tail()) return false;  // differ at infinitely many primes
    std::set<Prime> ps;
    for (auto& [p, k] : a.exceptions()) ps.insert(p);
    for (auto& [p, k] : b.exceptions()) ps.insert(p);
    for (Prime p : ps) {
        ExtNat ka = a.value_at(p), kb = b.value_at(p);
        if (ka.is_inf() != kb.is_inf()) return false;  // inf vs finite is an infinite gap
    }
    return true;
}

}  // namespace mcell
