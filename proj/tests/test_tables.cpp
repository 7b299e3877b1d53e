#include <doctest.h>

#include <set>

#include "purefields/tables.hpp"

using namespace purefields;

TEST_CASE("lookup_pattern spec examples") {
    CHECK(lookup_pattern(3, Int(10)).id == "3.2");
    CHECK(lookup_pattern(6, Int(17)).id == "6.5");
    CHECK(lookup_pattern(8, Int(33)).id == "8.2");
    CHECK(lookup_pattern(3, Int(-3)).id == "3.1");  // -3 = 6 mod 9
    CHECK(lookup_pattern(4, Int(-3)).id == "4.3");  // -3 = 13 mod 16
    CHECK_THROWS_AS(lookup_pattern(5, Int(25)), math_error);
}

TEST_CASE("residue coverage per degree") {
    for (unsigned n = 3; n <= 9; ++n) {
        long n2 = static_cast<long>(n) * n;
        std::set<long> seen;
        for (const BasisPattern& pat : patterns().for_degree(n)) {
            for (long r : pat.residues) {
                CHECK(r >= 1);
                CHECK(r <= n2);
                CHECK(seen.insert(r).second);  // disjoint across patterns
            }
        }
        for (long r : omitted_residues(n)) CHECK(seen.insert(r).second);
        CHECK(seen.size() == static_cast<size_t>(n2));
    }
}

TEST_CASE("instantiate frozen examples") {
    IntegralBasis b31 = instantiate(patterns().by_id("3.1"), Int(2));
    CHECK(b31.disc == -108);
    CHECK(b31.den == 1);

    IntegralBasis b82 = instantiate(patterns().by_id("8.2"), Int(17));
    CHECK(b82.disc == Int(-1024) * pow_int(Int(17), 7));
    std::vector<long> dens;
    for (const ElementRep& e : b82.elements()) dens.push_back(to_long(e.den));
    CHECK(dens == std::vector<long>{1, 1, 1, 1, 2, 2, 4, 8});

    IntegralBasis b94 = instantiate(patterns().by_id("9.4"), Int(10));
    CHECK(b94.disc == pow_int(Int(3), 12) * pow_int(Int(10), 8));
    ElementRep row7 = b94.element(6);
    CHECK(row7.den == 3);
    CHECK(row7.num == std::vector<Int>{Int(1), Int(0), Int(0), Int(1), Int(0), Int(0), Int(1),
                                       Int(0), Int(0)});

    CHECK_THROWS_AS(instantiate(patterns().by_id("3.1"), Int(10)), std::invalid_argument);
}

TEST_CASE("pattern disc divides the power-basis disc with square quotient") {
    for (unsigned n = 3; n <= 9; ++n)
        for (const BasisPattern& pat : patterns().for_degree(n)) {
            for (long r : pat.residues) {
                Int m(r);
                if (!is_squarefree(m) || m == 1) continue;
                Int q = power_basis_disc(n, m) / pat.disc(m);
                CHECK(pat.disc(m) * q == power_basis_disc(n, m));
                Int root = isqrt_exact(abs(q));
                CHECK(root * root == abs(q));
                break;
            }
        }
}

TEST_CASE("validate_pattern spec examples") {
    CHECK(validate_pattern(patterns().by_id("3.2"), Int(10)).ok());
    CHECK(validate_pattern(patterns().by_id("4.2"), Int(73)).ok());
    CHECK(validate_pattern(patterns().by_id("6.4"), Int(26)).ok());
}

TEST_CASE("every pattern validates on small members, negative included") {
    for (unsigned n = 3; n <= 9; ++n)
        for (const BasisPattern& pat : patterns().for_degree(n)) {
            int done = 0;
            long n2 = static_cast<long>(n) * n;
            for (long k = 0; done < 2 && k < 6; ++k) {
                Int m = Int(pat.residues[k % pat.residues.size()]) + (k / 2) * n2;
                if (m == 1 || !is_squarefree(m)) continue;
                CAPTURE(pat.id);
                CAPTURE(m.get_str());
                CHECK(validate_pattern(pat, m).ok());
                ++done;
            }
            for (long k = 1; k < 8; ++k) {
                Int m = Int(pat.residues[0]) - k * n2;
                if (m == -1 || m == 0 || !is_squarefree(m)) continue;
                CAPTURE(pat.id);
                CAPTURE(m.get_str());
                CHECK(validate_pattern(pat, m).ok());
                break;
            }
        }
}
