#include "mcell/telescope.hpp"

#include <queue>
#include <sstream>

namespace mcell {

BigInt TelescopePrefix::product() const {
    BigInt p(1);
    for (Prime a : multipliers) p = p * BigInt::from_uint64(a);
    return p;
}

std::string TelescopePrefix::to_string() const {
    std::ostringstream os;
    os << "S^1";
    for (Prime a : multipliers) os << " --" << a << "--> S^1";
    if (exhausted) os << " (complete)";
    return os.str();
}

namespace {

struct HeapEntry {
    BigInt value;  // p^exp
    Prime p;
    std::uint32_t exp;
};

struct HeapCmp {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        return BigInt::cmp(a.value, b.value) > 0;  // min-heap
    }
};

// Smallest prime > after with a positive exponent, if any.
bool next_positive_prime(const BaerType& t, Prime after, Prime* out) {
    if (t.tail().is_zero()) {
        // only exception primes can carry positive exponents
        for (auto& [p, k] : t.exceptions())
            if (p > after && !k.is_zero()) {
                *out = p;
                return true;
            }
        return false;
    }
    Prime p = next_prime(after);
    while (t.value_at(p).is_zero()) p = next_prime(p);
    *out = p;
    return true;
}

}  // namespace

TelescopePrefix telescope_prefix(const BaerType& t, std::size_t n) {
    TelescopePrefix out;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCmp> heap;
    Prime frontier = 0;  // all positive primes <= admitted so far are in the heap
    bool more_primes = true;

    auto admit = [&]() {
        // keep admitting primes while their first power could be the minimum
        while (more_primes) {
            Prime q;
            if (!next_positive_prime(t, frontier, &q)) {
                more_primes = false;
                break;
            }
            if (!heap.empty() && BigInt::cmp(BigInt::from_uint64(q), heap.top().value) > 0) break;
            heap.push({BigInt::from_uint64(q), q, 1});
            frontier = q;
        }
    };

    while (out.multipliers.size() < n) {
        admit();
        if (heap.empty()) {
            out.exhausted = true;
            break;
        }
        HeapEntry e = heap.top();
        heap.pop();
        out.multipliers.push_back(e.p);
        out.m_sequence.push_back(e.value);
        ExtNat kp = t.value_at(e.p);
        if (kp.is_inf() || e.exp < kp.finite())
            heap.push({e.value * BigInt::from_uint64(e.p), e.p, e.exp + 1});
    }
    return out;
}

GroupExpr cokernel_of_unit_inclusion(const BaerType& t) {
    std::vector<GroupExpr> parts;
    std::set<Prime> exception_primes;
    for (auto& [p, k] : t.exceptions()) {
        exception_primes.insert(p);
        if (k.is_inf())
            parts.push_back(GroupExpr::prufer(p));
        else if (!k.is_zero())
            parts.push_back(GroupExpr::cyclic(p, k.finite()));
    }
    if (t.tail().is_inf()) {
        parts.push_back(GroupExpr::family_sum(PrimeSet::cofinite(exception_primes),
                                              {FamilyFactor::PruferEach, 1}));
    } else if (!t.tail().is_zero()) {
        parts.push_back(GroupExpr::family_sum(PrimeSet::cofinite(exception_primes),
                                              {FamilyFactor::CyclicPow, t.tail().finite()}));
    }
    return normalize(GroupExpr::sum(std::move(parts)));
}

}  // namespace mcell
