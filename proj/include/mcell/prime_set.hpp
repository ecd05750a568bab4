#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "mcell/primes.hpp"

namespace mcell {

// Finite or cofinite set of primes; membership is decidable either way.
class PrimeSet {
public:
    static PrimeSet none() { return PrimeSet(false, {}); }
    static PrimeSet all() { return PrimeSet(true, {}); }
    static PrimeSet finite(std::set<Prime> members) { return PrimeSet(false, std::move(members)); }
    static PrimeSet cofinite(std::set<Prime> excluded) { return PrimeSet(true, std::move(excluded)); }

    bool is_cofinite() const { return cofinite_; }
    bool contains(Prime p) const { return cofinite_ ? !listed_.count(p) : listed_.count(p) > 0; }
    bool empty() const { return !cofinite_ && listed_.empty(); }
    bool is_all() const { return cofinite_ && listed_.empty(); }

    // Finite part: members if finite, excluded primes if cofinite.
    const std::set<Prime>& listed() const { return listed_; }

    PrimeSet complement() const { return PrimeSet(!cofinite_, listed_); }

    PrimeSet intersect(const PrimeSet& o) const;
    PrimeSet unite(const PrimeSet& o) const { return complement().intersect(o.complement()).complement(); }

    // Smallest member; set must be nonempty.
    Prime smallest() const;

    bool operator==(const PrimeSet& o) const { return cofinite_ == o.cofinite_ && listed_ == o.listed_; }
    bool operator!=(const PrimeSet& o) const { return !(*this == o); }

    // "{}", "{2,3}", "P", "P\{2,3}"
    std::string to_string() const;

private:
    PrimeSet(bool cofinite, std::set<Prime> listed) : cofinite_(cofinite), listed_(std::move(listed)) {}

    bool cofinite_ = false;
    std::set<Prime> listed_;
};

// Eventually constant prime-indexed exponent sequence (k_p): finitely many
// exceptions plus a tail value at every other prime.  Classifies rank-one
// torsion-free groups containing 1.
class BaerType {
public:
    BaerType() : tail_(ExtNat::fin(0)) {}
    explicit BaerType(ExtNat tail) : tail_(tail) {}
    BaerType(ExtNat tail, std::map<Prime, ExtNat> exceptions);

    static BaerType zero() { return BaerType(); }                       // type of Z
    static BaerType all_inf() { return BaerType(ExtNat::inf()); }       // type of Q
    static BaerType inverted(const std::set<Prime>& ps);                // type of Z[1/p : p in ps]

    ExtNat value_at(Prime p) const;
    ExtNat tail() const { return tail_; }
    const std::map<Prime, ExtNat>& exceptions() const { return exceptions_; }

    bool is_zero() const { return tail_.is_zero() && exceptions_.empty(); }
    bool is_all_inf() const { return tail_.is_inf() && exceptions_.empty(); }

    // {p : k_p = inf} and {p : k_p > 0}; finite or cofinite by eventual constancy.
    PrimeSet infinite_support() const;
    PrimeSet positive_support() const;

    // Sum of all k_p when finite (tail 0, all exceptions finite), else nullopt.
    std::optional<std::uint64_t> total_finite_exponent() const;

    // Pointwise sum of types (tensor product of the rank-one groups).
    BaerType plus(const BaerType& o) const;

    bool operator==(const BaerType& o) const { return tail_ == o.tail_ && exceptions_ == o.exceptions_; }
    bool operator!=(const BaerType& o) const { return !(*this == o); }

    // Lexicographic order on the sequence (k_2, k_3, k_5, ...).
    static int cmp(const BaerType& a, const BaerType& b);

private:
    ExtNat tail_;
    std::map<Prime, ExtNat> exceptions_;  // never stores a value equal to tail_
};

// Agreement at all but finitely many primes, with finite differences where
// both values are finite.  Separate predicate; never folded into normalize.
bool baer_equivalent(const BaerType& a, const BaerType& b);

}  // namespace mcell
