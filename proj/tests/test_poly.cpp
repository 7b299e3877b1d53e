#include <doctest.h>

#include "purefields/field_element.hpp"
#include "purefields/poly.hpp"

using namespace purefields;

namespace {

Poly from_longs(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly arithmetic canonical form") {
    Poly z = from_longs({0, 0});
    CHECK(z.is_zero());
    Poly p = from_longs({-2, 0, 0, 1});  // x^3 - 2
    CHECK(p.degree() == 3);
    CHECK(p.is_monic());
    CHECK((p - p).is_zero());
    CHECK((p * from_longs({1})) == p);
    CHECK(p.eval(Rat(2)) == 6);
    CHECK(p.derivative() == from_longs({0, 0, 3}));
}

TEST_CASE("resultant and discriminant on frozen values") {
    // disc(x^3 - 2) = -108
    CHECK(poly_disc(Poly::pure(3, Int(2))) == Rat(-108));
    // disc(x^2 - 1) = 4
    CHECK(poly_disc(from_longs({-1, 0, 1})) == Rat(4));
    // disc(x^3 - x^2 - 3x - 3) = -300, the field discriminant of Q(10^(1/3))
    CHECK(poly_disc(from_longs({-3, -3, -1, 1})) == Rat(-300));
    // res of coprime linears: res(x-2, x-3) = 1*(3-2)... direct check
    CHECK(resultant(from_longs({-2, 1}), from_longs({-3, 1})) == Rat(-1));
    CHECK(resultant(from_longs({-2, 1}), from_longs({6, 1})) == Rat(8));
}

TEST_CASE("pure polynomial discriminant closed form for n=3..9") {
    for (unsigned n = 3; n <= 9; ++n) {
        for (long m = -50; m <= 50; ++m) {
            if (m == 0) continue;
            Rat direct = poly_disc(Poly::pure(n, Int(m)));
            CHECK(direct == Rat(power_basis_disc(n, Int(m))));
        }
    }
}

TEST_CASE("discriminant multiplicativity spot check") {
    // disc((x^2-x-1)^2) = 0 (repeated roots)
    Poly f = from_longs({-1, -1, 1});
    CHECK(poly_disc(f * f) == Rat(0));
}
