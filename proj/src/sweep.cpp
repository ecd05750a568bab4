#include "mcell/sweep.hpp"

#include <chrono>
#include <functional>

#include "mcell/homalg.hpp"
#include "mcell/oracle.hpp"
#include "mcell/radical.hpp"

namespace mcell {

namespace {

std::uint64_t ipow(std::uint64_t p, unsigned k) {
    std::uint64_t r = 1;
    while (k--) r *= p;
    return r;
}

// p-groups of order <= bound: partitions of exponents, as prime-power lists.
void p_groups(Prime p, std::uint64_t bound, std::vector<std::vector<std::uint64_t>>& out) {
    // DFS over non-increasing exponent sequences
    std::vector<unsigned> parts;
    std::uint64_t order = 1;
    std::function<void(unsigned)> rec = [&](unsigned max_exp) {
        for (unsigned e = max_exp; e >= 1; --e) {
            std::uint64_t q = ipow(p, e);
            if (order > bound / q) continue;
            parts.push_back(e);
            order *= q;
            std::vector<std::uint64_t> g;
            for (unsigned x : parts) g.push_back(ipow(p, x));
            out.push_back(std::move(g));
            rec(e);
            order /= q;
            parts.pop_back();
        }
    };
    unsigned top = 0;
    while (ipow(p, top + 1) <= bound) ++top;
    rec(top);
}

}  // namespace

std::vector<std::vector<std::uint64_t>> enumerate_finite_abelian(std::uint64_t bound) {
    // per-prime lists (including the trivial p-part), then the product DFS
    std::vector<Prime> primes;
    for (Prime p = 2; p <= bound; p = next_prime(p)) primes.push_back(p);

    std::vector<std::vector<std::uint64_t>> out = {{}};  // the trivial group
    for (Prime p : primes) {
        std::vector<std::vector<std::uint64_t>> locals;
        p_groups(p, bound, locals);
        std::vector<std::vector<std::uint64_t>> next = out;
        for (auto& base : out) {
            std::uint64_t base_order = 1;
            for (auto q : base) base_order *= q;
            for (auto& loc : locals) {
                std::uint64_t loc_order = 1;
                for (auto q : loc) loc_order *= q;
                if (loc_order > bound / std::max<std::uint64_t>(base_order, 1)) continue;
                if (base_order * loc_order > bound) continue;
                std::vector<std::uint64_t> combined = base;
                combined.insert(combined.end(), loc.begin(), loc.end());
                next.push_back(std::move(combined));
            }
        }
        out = std::move(next);
    }
    return out;
}

SweepReport conformance_sweep(std::uint64_t bound, bool deep) {
    auto start = std::chrono::steady_clock::now();
    SweepReport rep;
    rep.bound = bound;

    auto raw = enumerate_finite_abelian(bound);
    std::vector<oracle::FiniteAb> groups;
    std::vector<GroupExpr> exprs;
    std::vector<oracle::Elements> elems;
    for (auto& orders : raw) {
        oracle::FiniteAb g(orders);
        exprs.push_back(g.to_group_expr());
        elems.emplace_back(g);
        groups.push_back(std::move(g));
    }
    rep.group_count = groups.size();

    const std::pair<BifunctorKind, oracle::BifKind> kinds[] = {
        {BifunctorKind::Hom, oracle::BifKind::Hom},
        {BifunctorKind::Tensor, oracle::BifKind::Tensor},
        {BifunctorKind::Tor, oracle::BifKind::Tor},
        {BifunctorKind::Ext, oracle::BifKind::Ext},
    };

    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = 0; j < groups.size(); ++j) {
            if (groups[i].order() * groups[j].order() > oracle::kDefaultJointBound) continue;
            ++rep.pair_count;
            for (auto& [sym_kind, orc_kind] : kinds) {
                BifValue sym = bifunctor(sym_kind, exprs[i], exprs[j]);
                oracle::FiniteAb orc = oracle::finite_bifunctor_on(orc_kind, groups[i], elems[j]);
                ++rep.bifunctor_checks;
                if (!sym.supported() || sym.get() != orc.to_group_expr()) {
                    rep.mismatches.push_back(std::string(bifunctor_name(sym_kind)) + "(" +
                                             exprs[i].to_string() + ", " + exprs[j].to_string() +
                                             "): symbolic " +
                                             (sym.supported() ? sym.get().to_string() : "unsupported") +
                                             " vs oracle " + orc.to_string());
                }
            }
            {
                RadicalResult sym = radical(exprs[i], exprs[j]);
                unsigned stages = 0;
                oracle::FiniteAb orc = oracle::structure_of_subgroup(
                    elems[j], oracle::finite_radical_elements(groups[i], elems[j], &stages));
                ++rep.radical_checks;
                if (!sym.supported || sym.radical_subgroup != orc.to_group_expr() ||
                    sym.stages != stages) {
                    rep.mismatches.push_back(
                        "radical(" + exprs[i].to_string() + ", " + exprs[j].to_string() +
                        "): symbolic " +
                        (sym.supported ? sym.radical_subgroup.to_string() : "unsupported") +
                        " vs oracle " + orc.to_string());
                }
            }
            if (deep && groups[i].order() * groups[j].order() <= 1024) {
                oracle::FiniteAb fast =
                    oracle::finite_bifunctor(oracle::BifKind::Tensor, groups[i], groups[j]);
                oracle::FiniteAb slow = oracle::tensor_by_presentation(groups[i], groups[j]);
                ++rep.deep_checks;
                if (fast != slow)
                    rep.mismatches.push_back("tensor presentation route disagrees on (" +
                                             exprs[i].to_string() + ", " + exprs[j].to_string() +
                                             ")");
            }
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace mcell
