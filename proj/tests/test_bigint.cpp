#include "doctest.h"

#include <cstdint>
#include <random>

#include "mcell/bigint.hpp"
#include "mcell/primes.hpp"

using mcell::BigInt;

TEST_CASE("bigint small arithmetic matches int64") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q.to_int64() == a / b);
            CHECK(r.to_int64() == a % b);
        }
    }
}

TEST_CASE("bigint divmod identity on large operands") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        BigInt a(1), b(1);
        int na = 1 + int(rng() % 6), nb = 1 + int(rng() % 3);
        for (int j = 0; j < na; ++j) a = a * BigInt::from_uint64(rng() % 1000000007 + 2);
        for (int j = 0; j < nb; ++j) b = b * BigInt::from_uint64(rng() % 1000003 + 2);
        if (rng() % 2) a = -a;
        if (rng() % 2) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint decimal round trip and powers") {
    BigInt p(1);
    for (int i = 0; i < 100; ++i) p = p * BigInt(2);
    CHECK(p.to_string() == "1267650600228229401496703205376");  // 2^100
    CHECK(BigInt::from_decimal("1267650600228229401496703205376") == p);
    CHECK(BigInt::from_decimal("-15") == BigInt(-15));
    CHECK(p.valuation(2) == 100);
    CHECK((p * BigInt(9)).valuation(3) == 2);
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(-4), BigInt(6)) == BigInt(2));
    BigInt a = BigInt::from_decimal("123456789123456789");
    BigInt b = BigInt::from_decimal("987654321987654321");
    BigInt g = BigInt::gcd(a, b);
    CHECK(a.divisible_by(g));
    CHECK(b.divisible_by(g));
}

TEST_CASE("prime helpers") {
    CHECK(mcell::is_prime(2));
    CHECK(mcell::is_prime(97));
    CHECK(!mcell::is_prime(1));
    CHECK(!mcell::is_prime(91));
    CHECK(mcell::next_prime(2) == 3);
    CHECK(mcell::next_prime(13) == 17);
    auto f = mcell::factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<mcell::Prime, unsigned>{2, 3});
    CHECK(f[1] == std::pair<mcell::Prime, unsigned>{3, 2});
    CHECK(f[2] == std::pair<mcell::Prime, unsigned>{5, 1});
}
