#include "doctest.h"

#include <random>

#include "mcell/oracle.hpp"
#include "mcell/parse.hpp"
#include "mcell/telescope.hpp"

using namespace mcell;

namespace {

// Independent enumeration: sieve all prime powers p^j <= cap with j <= k_p,
// sort by value, take the first n.  Cross-checks the heap-based enumerator.
std::vector<std::uint64_t> brute_prime_powers(const BaerType& t, std::uint64_t cap) {
    std::vector<std::uint64_t> out;
    for (Prime p = 2; p <= cap; p = next_prime(p)) {
        ExtNat k = t.value_at(p);
        std::uint64_t v = 1;
        for (std::uint32_t j = 1; k.is_inf() || j <= k.finite(); ++j) {
            if (v > cap / p) break;
            v *= p;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BaerType random_type(std::mt19937_64& rng) {
    std::vector<Prime> primes = {2, 3, 5, 7, 11, 13};
    std::map<Prime, ExtNat> ex;
    for (Prime p : primes)
        if (rng() % 2) ex.emplace(p, rng() % 4 ? ExtNat::fin(rng() % 7) : ExtNat::inf());
    ExtNat tail = rng() % 3 ? ExtNat::fin(rng() % 2) : (rng() % 2 ? ExtNat::fin(2) : ExtNat::inf());
    return BaerType(tail, std::move(ex));
}

}  // namespace

TEST_CASE("telescope of Z[1/p]: powers of the single prime ascending") {
    TelescopePrefix t = telescope_prefix(BaerType::inverted({3}), 4);
    CHECK(t.multipliers == std::vector<Prime>{3, 3, 3, 3});
    REQUIRE(t.m_sequence.size() == 4);
    CHECK(t.m_sequence[0] == BigInt(3));
    CHECK(t.m_sequence[1] == BigInt(9));
    CHECK(t.m_sequence[2] == BigInt(27));
    CHECK(t.m_sequence[3] == BigInt(81));
    CHECK(!t.exhausted);
}

TEST_CASE("telescope of the tail-1 type: first power of each prime") {
    TelescopePrefix t = telescope_prefix(BaerType(ExtNat::fin(1)), 5);
    CHECK(t.multipliers == std::vector<Prime>{2, 3, 5, 7, 11});
    for (size_t i = 0; i < 5; ++i) CHECK(t.m_sequence[i] == BigInt::from_uint64(t.multipliers[i]));
}

TEST_CASE("telescope of Q: all prime powers ascending") {
    TelescopePrefix t = telescope_prefix(BaerType::all_inf(), 6);
    std::vector<std::uint64_t> want_m = {2, 3, 4, 5, 7, 8};
    std::vector<Prime> want_a = {2, 3, 2, 5, 7, 2};
    CHECK(t.multipliers == want_a);
    for (size_t i = 0; i < 6; ++i) CHECK(t.m_sequence[i] == BigInt::from_uint64(want_m[i]));
}

TEST_CASE("telescope exhaustion returns the full finite telescope with a flag") {
    BaerType t(ExtNat::fin(0), {{2, ExtNat::fin(3)}});
    TelescopePrefix p = telescope_prefix(t, 10);
    CHECK(p.exhausted);
    CHECK(p.multipliers == std::vector<Prime>{2, 2, 2});
    CHECK(p.to_string() == "S^1 --2--> S^1 --2--> S^1 --2--> S^1 (complete)");
    CHECK(telescope_prefix(BaerType::zero(), 1).exhausted);
    CHECK(telescope_prefix(BaerType::zero(), 0).multipliers.empty());
}

TEST_CASE("telescope enumeration matches brute-force sieve on random types") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 50; ++it) {
        BaerType t = random_type(rng);
        TelescopePrefix pre = telescope_prefix(t, 24);
        auto brute = brute_prime_powers(t, 1u << 20);
        for (size_t i = 0; i < pre.m_sequence.size() && i < brute.size(); ++i) {
            CHECK(pre.m_sequence[i] == BigInt::from_uint64(brute[i]));
            CHECK(brute[i] % pre.multipliers[i] == 0);
        }
        // m-sequence strictly increasing
        for (size_t i = 0; i + 1 < pre.m_sequence.size(); ++i)
            CHECK(pre.m_sequence[i] < pre.m_sequence[i + 1]);
    }
}

TEST_CASE("valuation bookkeeping: v_p(prod alpha) = #powers of p among m-sequence") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 50; ++it) {
        BaerType t = random_type(rng);
        TelescopePrefix pre = telescope_prefix(t, 1 + rng() % 64);
        BigInt prod = pre.product();
        for (Prime p : {2, 3, 5, 7, 11, 13, 17}) {
            unsigned count = 0;
            for (Prime a : pre.multipliers)
                if (a == p) ++count;
            if (prod.is_one() && count == 0) continue;
            CHECK(prod.valuation(p) == count);
        }
    }
}

TEST_CASE("colimit divisibility contract: every p^j (j <= k_p) divides some prefix product") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        BaerType t = random_type(rng);
        for (Prime p : {2, 3, 5, 7, 11, 101}) {
            ExtNat kp = t.value_at(p);
            std::uint32_t cap = kp.is_inf() ? 6 : std::min<std::uint32_t>(kp.finite(), 6);
            for (std::uint32_t j = 1; j <= cap; ++j) {
                std::uint64_t pj = 1;
                for (std::uint32_t i = 0; i < j; ++i) pj *= p;
                if (pj > 120000) break;  // keep the sieve cheap
                // enough prefix to enumerate every prime power <= p^j
                std::size_t needed = brute_prime_powers(t, pj).size();
                TelescopePrefix pre = telescope_prefix(t, needed);
                CHECK(pre.product().divisible_by(BigInt::from_uint64(pj)));
            }
        }
    }
}

TEST_CASE("cokernel of the unit inclusion") {
    // Z[1/p]: the Prufer group
    CHECK(cokernel_of_unit_inclusion(BaerType::inverted({5})) == GroupExpr::prufer(5));
    // Z: trivial
    CHECK(cokernel_of_unit_inclusion(BaerType::zero()) == GroupExpr::trivial());
    // single finite entry: cokernel of multiplication by p^k
    BaerType t8(ExtNat::fin(0), {{2, ExtNat::fin(3)}});
    CHECK(cokernel_of_unit_inclusion(t8) == parse_group("Z/8"));
    // mixed finite entries agree with the SNF cokernel of the full product
    BaerType tm(ExtNat::fin(0), {{2, ExtNat::fin(2)}, {3, ExtNat::fin(1)}, {5, ExtNat::fin(1)}});
    oracle::IntMatrix m(1, 1);
    m.at(0, 0) = telescope_prefix(tm, 64).product();
    CHECK(cokernel_of_unit_inclusion(tm) == oracle::cokernel_of_presentation(m).to_group_expr());
    // tail 1: symbolic family sum over a cofinite set
    GroupExpr s = cokernel_of_unit_inclusion(BaerType(ExtNat::fin(1)));
    CHECK(s.kind() == GroupKind::FamilySum);
    CHECK(s.to_string() == "Sum_{p in P} Z/p");
    // Q: all Prufer groups
    CHECK(cokernel_of_unit_inclusion(BaerType::all_inf()).to_string() == "Sum_{p in P} Z(p^inf)");
    // tail 2 with exceptions
    BaerType tt(ExtNat::fin(2), {{3, ExtNat::inf()}, {5, ExtNat::fin(0)}});
    CHECK(cokernel_of_unit_inclusion(tt).to_string() == "Z(3^inf) + Sum_{p in P\\{3,5}} Z/p^2");
}

TEST_CASE("finite-type telescope exhausts to the cokernel") {
    // once the telescope is exhausted, coker(mult by prod(alpha)) on Z equals
    // the cokernel of the unit inclusion
    std::mt19937_64 rng(43);
    for (int it = 0; it < 20; ++it) {
        std::map<Prime, ExtNat> ex;
        for (Prime p : {2, 3, 5})
            if (rng() % 2) ex.emplace(p, ExtNat::fin(1 + rng() % 3));
        BaerType t(ExtNat::fin(0), std::move(ex));
        TelescopePrefix pre = telescope_prefix(t, 64);
        REQUIRE(pre.exhausted);
        if (pre.multipliers.empty()) {
            CHECK(cokernel_of_unit_inclusion(t) == GroupExpr::trivial());
            continue;
        }
        oracle::IntMatrix m(1, 1);
        m.at(0, 0) = pre.product();
        CHECK(oracle::cokernel_of_presentation(m).to_group_expr() == cokernel_of_unit_inclusion(t));
    }
}
