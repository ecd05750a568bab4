#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcell {

// Agreement report: symbolic hom/ext/tensor/tor and the radical against the
// brute-force oracle, over all pairs of finite abelian groups of order up to
// the bound (joint order capped at 2^16).
struct SweepReport {
    std::uint64_t bound = 0;
    std::uint64_t group_count = 0;
    std::uint64_t pair_count = 0;
    std::uint64_t bifunctor_checks = 0;
    std::uint64_t radical_checks = 0;
    std::uint64_t deep_checks = 0;  // presentation/SNF cross-checks on small pairs
    std::vector<std::string> mismatches;
    double seconds = 0.0;

    bool clean() const { return mismatches.empty(); }
};

SweepReport conformance_sweep(std::uint64_t bound, bool deep = false);

// All finite abelian groups of order <= bound, in primary form.
std::vector<std::vector<std::uint64_t>> enumerate_finite_abelian(std::uint64_t bound);

}  // namespace mcell
