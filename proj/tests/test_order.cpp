#include <doctest.h>

#include <random>

#include "purefields/order.hpp"

using namespace purefields;

namespace {

ElementRep elem(std::vector<long> num, long den = 1) {
    ElementRep e;
    for (long v : num) e.num.emplace_back(v);
    e.den = den;
    return e;
}

// Independent charpoly oracle: resultant_y(y^n - m, q*x - a(y)) / q^n,
// computed through integer resultants at n+1 points and interpolation.
Poly charpoly_resultant(const PureField& field, const ElementRep& e) {
    const unsigned n = field.n;
    std::vector<Rat> xs, ys;
    Rat qn;
    mpz_pow_ui(qn.get_num().get_mpz_t(), e.den.get_mpz_t(), n);
    for (unsigned i = 0; i <= n; ++i) {
        Rat x(static_cast<long>(i));
        std::vector<Rat> g(n, Rat(0));
        g[0] = Rat(e.den) * x - Rat(e.num[0]);
        for (unsigned j = 1; j < n; ++j) g[j] = -Rat(e.num[j]);
        Rat r = resultant(Poly::pure(n, field.m), Poly(std::move(g)));
        xs.push_back(x);
        ys.push_back(r / qn);
    }
    Poly acc;
    for (unsigned i = 0; i <= n; ++i) {
        Poly term = Poly::constant(1);
        Rat scale(1);
        for (unsigned j = 0; j <= n; ++j) {
            if (i == j) continue;
            term = term * Poly(std::vector<Rat>{-xs[j], Rat(1)});
            scale *= xs[i] - xs[j];
        }
        acc = acc + term * (ys[i] / scale);
    }
    return acc;
}

}  // namespace

TEST_CASE("charpoly frozen examples") {
    PureField f32{3, Int(2)};
    CHECK(charpoly(f32, elem({0, 1, 0})) == Poly::pure(3, Int(2)));

    PureField f310{3, Int(10)};
    Poly p = charpoly(f310, elem({1, 1, 1}, 3));
    CHECK(p == Poly(std::vector<Rat>{Rat(-3), Rat(-3), Rat(-1), Rat(1)}));

    PureField f45{4, Int(5)};
    Poly q = charpoly(f45, elem({1, 0, 1, 0}, 2));
    CHECK(q == Poly(std::vector<Rat>{Rat(1), Rat(2), Rat(-1), Rat(-2), Rat(1)}));
}

TEST_CASE("charpoly of theta is the defining polynomial for every degree") {
    for (unsigned n = 3; n <= 9; ++n)
        for (long m : {2L, -5L, 10L}) {
            PureField f{n, Int(m)};
            CHECK(charpoly(f, theta_power(n, 1)) == Poly::pure(n, Int(m)));
        }
}

TEST_CASE("charpoly agrees with the resultant oracle on random elements") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        unsigned n = 3 + trial % 7;
        long ms[] = {2, 5, -3, 10, -7};
        PureField f{n, Int(ms[trial % 5])};
        ElementRep e;
        for (unsigned i = 0; i < n; ++i) e.num.emplace_back(coef(rng));
        e.den = 1 + trial % 4;
        CHECK(charpoly(f, e) == charpoly_resultant(f, e));
    }
}

TEST_CASE("is_algebraic_integer spec examples") {
    CHECK(is_algebraic_integer(PureField{3, Int(10)}, elem({1, 1, 1}, 3)));
    CHECK_FALSE(is_algebraic_integer(PureField{3, Int(2)}, elem({1, 1, 1}, 3)));
    CHECK(is_algebraic_integer(PureField{8, Int(5)}, elem({0, 1, 0, 0, 0, 1, 0, 0}, 2)));
}

TEST_CASE("maximal_order frozen examples") {
    IntegralBasis b32 = maximal_order(PureField{3, Int(2)});
    CHECK(b32.disc == -108);
    CHECK(b32.den == 1);
    CHECK(b32.mat == IntMatrix::identity(3));

    IntegralBasis b310 = maximal_order(PureField{3, Int(10)});
    CHECK(b310.disc == -300);
    auto els = b310.elements();
    CHECK(els[0] == elem({1, 0, 0}));
    CHECK(els[1] == elem({0, 1, 0}));
    CHECK(els[2] == elem({1, 1, 1}, 3));

    IntegralBasis b45 = maximal_order(PureField{4, Int(5)});
    CHECK(b45.disc == -2000);
    auto els4 = b45.elements();
    CHECK(els4[2] == elem({1, 0, 1, 0}, 2));
    CHECK(els4[3] == elem({0, 1, 0, 1}, 2));
}

TEST_CASE("field_discriminant dual route") {
    CHECK(field_discriminant(maximal_order(PureField{3, Int(10)})) == -300);
    CHECK(field_discriminant(power_basis(PureField{5, Int(2)})) == 50000);
    CHECK(field_discriminant(power_basis(PureField{3, Int(2)})) == -108);
}

TEST_CASE("element_index spec examples") {
    IndexReport r1 = element_index(power_basis(PureField{4, Int(2)}), {Int(1), Int(0), Int(0)});
    CHECK(r1.index == 1);
    CHECK(r1.primitive);

    IndexReport r2 = element_index(maximal_order(PureField{3, Int(10)}), {Int(0), Int(1)});
    CHECK(r2.index == 1);

    IndexReport r3 = element_index(maximal_order(PureField{8, Int(-3)}),
                                   {Int(-1), Int(-1), Int(0), Int(1), Int(1), Int(0), Int(-1)});
    CHECK(r3.index == 1);
}

TEST_CASE("element_index degenerate subfield element") {
    // alpha = theta^2 generates the quadratic subfield of Q(m^(1/4)).
    IndexReport r = element_index(power_basis(PureField{4, Int(2)}), {Int(0), Int(1), Int(0)});
    CHECK_FALSE(r.primitive);
    CHECK(r.index == 0);
    // sign symmetry on a primitive element
    IndexReport a = element_index(power_basis(PureField{4, Int(2)}), {Int(1), Int(2), Int(-3)});
    IndexReport b = element_index(power_basis(PureField{4, Int(2)}), {Int(-1), Int(-2), Int(3)});
    CHECK(a.index == b.index);
}

TEST_CASE("disc_element = index^2 * D_K on random coords") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> coef(-5, 5);
    int done = 0;
    for (int trial = 0; done < 60; ++trial) {
        unsigned n = 3 + trial % 7;
        long ms[] = {2, 3, 5, 10, -2, -5, 17, 26};
        Int m(ms[trial % 8]);
        IntegralBasis basis = maximal_order(PureField{n, m});
        std::vector<Int> coords;
        bool nonzero = false;
        for (unsigned i = 0; i + 1 < n; ++i) {
            long v = coef(rng);
            if (v) nonzero = true;
            coords.emplace_back(v);
        }
        if (!nonzero) continue;
        IndexReport rep = element_index(basis, coords);
        if (!rep.primitive) continue;
        CHECK(rep.disc_element == rep.index * rep.index * basis.disc);
        ++done;
    }
}

TEST_CASE("theorem 1: denominator primes divide n and not m") {
    for (unsigned n = 3; n <= 9; ++n) {
        for (long m = -60; m <= 60; ++m) {
            if (m == 0 || m == 1 || m == -1 || !is_squarefree(Int(m))) continue;
            IntegralBasis basis = maximal_order(PureField{n, Int(m)});
            for (const ElementRep& e : basis.elements()) {
                for (auto& [p, exp] : factor_small(to_long(e.den))) {
                    CHECK(n % p == 0);
                    CHECK(Int(m) % p != 0);
                }
            }
            Int ratio = power_basis_disc(n, Int(m)) / basis.disc;
            CHECK(isqrt_exact(abs(ratio)) * isqrt_exact(abs(ratio)) == abs(ratio));
        }
    }
}

TEST_CASE("all prime factors of n dividing m gives the power basis") {
    struct Case { unsigned n; long m; } cases[] = {
        {3, 3}, {3, 6}, {4, 2}, {4, 6}, {5, 5}, {5, 10}, {6, 6}, {6, 30},
        {7, 7}, {7, 14}, {8, 2}, {8, 10}, {9, 3}, {9, 6},
    };
    for (auto [n, m] : cases) {
        IntegralBasis basis = maximal_order(PureField{n, Int(m)});
        CHECK(basis.den == 1);
        CHECK(basis.mat == IntMatrix::identity(n));
    }
}

TEST_CASE("newton probe agrees with the exact integrality test") {
    std::mt19937 rng(5);
    int checked = 0;
    for (int trial = 0; checked < 200; ++trial) {
        unsigned n = 3 + trial % 7;
        long ms[] = {2, 5, -3, 10, 17, 33, 65, -7};
        Int m(ms[trial % 8]);
        IntegralBasis basis = maximal_order(PureField{n, m});
        for (auto& [p, exp] : factor_small(static_cast<long>(n))) {
            std::vector<long> e(n);
            bool nonzero = false;
            for (unsigned i = 0; i < n; ++i) {
                e[i] = static_cast<long>(rng() % static_cast<unsigned long>(p));
                if (e[i]) nonzero = true;
            }
            if (!nonzero) e[rng() % n] = 1;
            ElementRep cand;
            cand.num.assign(n, Int(0));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j <= i; ++j) cand.num[j] += Int(e[i]) * basis.mat.at(i, j);
            cand.den = basis.den * p;
            cand.canonicalize();
            bool exact = is_algebraic_integer(basis.field, cand);
            bool fast = detail::newton_integrality_probe(basis, p, e);
            CHECK(exact == fast);
            CHECK_FALSE(exact);  // the order is maximal already
            ++checked;
        }
    }
}
