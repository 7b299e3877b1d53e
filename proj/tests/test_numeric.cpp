#include <doctest.h>

#include <random>

#include "purefields/numeric.hpp"

using namespace purefields;

TEST_CASE("is_squarefree basics") {
    CHECK(is_squarefree(Int(10)));
    CHECK_FALSE(is_squarefree(Int(12)));
    CHECK(is_squarefree(Int(-3)));
    CHECK(is_squarefree(Int(-1)));
    CHECK_FALSE(is_squarefree(Int(-9)));
    CHECK_THROWS_AS(is_squarefree(Int(0)), std::invalid_argument);
}

TEST_CASE("is_squarefree against trial division") {
    auto brute = [](long m) {
        m = std::abs(m);
        for (long d = 2; d * d <= m; ++d)
            if (m % (d * d) == 0) return false;
        return true;
    };
    for (long m = -300; m <= 300; ++m) {
        if (m == 0) continue;
        CHECK(is_squarefree(Int(m)) == brute(m));
    }
}

TEST_CASE("is_squarefree certification of large inputs") {
    Int p("1000003"), q("1000033");
    CHECK(is_squarefree(p * q));
    CHECK_FALSE(is_squarefree(p * p));
    CHECK_THROWS_AS(is_squarefree(p * p * q * q * Int("1000000000000000003")),
                    uncertified_error);
}

TEST_CASE("isqrt_exact") {
    CHECK(isqrt_exact(Int(0)) == 0);
    CHECK(isqrt_exact(Int(144)) == 12);
    CHECK_THROWS_AS(isqrt_exact(Int(2)), math_error);
    CHECK_THROWS_AS(isqrt_exact(Int(-4)), math_error);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        Int s(1);
        int limbs = 1 + static_cast<int>(rng() % 3);
        for (int l = 0; l < limbs; ++l) s = s * Int(std::to_string(rng() % 1000000000));
        s += 1;  // up to ~10^27, comfortably past 10^40 when squared twice
        CHECK(isqrt_exact(s * s) == s);
    }
    Int big("1" + std::string(40, '0'));  // 10^40
    CHECK(isqrt_exact(big * big) == big);
}

TEST_CASE("factor_small and valuation") {
    auto f = factor_small(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<long, unsigned>(2, 3));
    CHECK(f[1] == std::pair<long, unsigned>(3, 2));
    CHECK(f[2] == std::pair<long, unsigned>(5, 1));
    CHECK(valuation(Int(48), Int(2)) == 4);
    CHECK(residue_rep(Int(-3), 16) == 13);
    CHECK(residue_rep(Int(32), 16) == 16);
}
