#pragma once

#include <string>
#include <vector>

#include "mcell/bigint.hpp"
#include "mcell/group.hpp"

namespace mcell {

// Finite prefix of the telescope of a rank-one type: the prime powers p^j
// (j <= k_p) enumerated in increasing order give the m-sequence, and alpha_i
// is the unique prime dividing m_i.
struct TelescopePrefix {
    std::vector<Prime> multipliers;   // alpha_1 ... alpha_n
    std::vector<BigInt> m_sequence;   // m_1 < m_2 < ... (prime powers)
    bool exhausted = false;           // the type ran out of prime powers before n

    BigInt product() const;           // alpha_1 * ... * alpha_n
    std::string to_string() const;    // "S^1 --a1--> S^1 --a2--> ..."
};

// First n entries of the canonical enumeration.  When the total prime-power
// count of the type is finite and smaller than n, the full finite telescope
// comes back with the exhausted flag set instead of an error.
TelescopePrefix telescope_prefix(const BaerType& t, std::size_t n);

// Cokernel of the unit inclusion Z -> S for S of the given type:
// the sum of Z(p^inf) over infinite entries and Z/q^{k_q} over finite nonzero
// ones; tails contribute a symbolic family sum over a cofinite prime set.
GroupExpr cokernel_of_unit_inclusion(const BaerType& t);

}  // namespace mcell
