#include <doctest.h>

#include <random>

#include "purefields/forms.hpp"
#include "purefields/tables.hpp"
#include "purefields/order.hpp"

using namespace purefields;

namespace {

// Several square-free members per case class, mixed signs.
std::vector<Int> class_members(const BasisPattern& pat, size_t want) {
    std::vector<Int> ms;
    long n2 = static_cast<long>(pat.n) * pat.n;
    for (long k = -3; static_cast<long>(ms.size()) < static_cast<long>(want) && k < 40; ++k) {
        for (long r : pat.residues) {
            Int m = Int(r) + Int(k) * n2;
            if (m == 0 || m == 1 || m == -1 || !is_squarefree(m)) continue;
            ms.push_back(m);
            if (ms.size() >= want) break;
        }
    }
    return ms;
}

}  // namespace

TEST_CASE("explicit form lookup errors") {
    CHECK_THROWS_AS(explicit_index_form(5, "5.2"), math_error);
    CHECK_THROWS_AS(explicit_index_form(7, "7.1"), math_error);
    CHECK_NOTHROW(explicit_index_form(3, "3.1"));
    CHECK_NOTHROW(explicit_index_form(6, "6.1"));
}

TEST_CASE("explicit form frozen point values") {
    const ExplicitForm& f31 = explicit_index_form(3, "3.1");
    // x2^3 - m x3^3 at (1, 0): 1 for every m
    CHECK(f31.value({Int(1), Int(0)}, Int(2)) == 1);
    CHECK(f31.value({Int(0), Int(1)}, Int(2)) == -2);

    const ExplicitForm& f32 = explicit_index_form(3, "3.2");
    // 3x2^3+3x2^2x3+x2x3^2-kx3^3 at (0,1), m=10 (k=1): -1
    CHECK(f32.value({Int(0), Int(1)}, Int(10)) == -1);

    const ExplicitForm& f41 = explicit_index_form(4, "4.1");
    CHECK(f41.factor_values_at({Int(1), Int(0), Int(0)}, Int(2)) ==
          std::vector<Int>{Int(1), Int(1)});

    const ExplicitForm& f43 = explicit_index_form(4, "4.3");
    auto v = f43.factor_values_at({Int(1), Int(1), Int(0)}, Int(-3));  // k = -1
    CHECK(v == std::vector<Int>{Int(-1), Int(1)});

    const ExplicitForm& f61 = explicit_index_form(6, "6.1");
    CHECK(f61.factor_values_at({Int(1), Int(0), Int(0), Int(0), Int(0)}, Int(2)) ==
          std::vector<Int>{Int(1), Int(1), Int(1)});
}

TEST_CASE("explicit forms match element_index at random points") {
    const char* cases[] = {"3.1", "3.2", "3.3", "4.1", "4.2", "4.3", "5.1", "6.1"};
    std::mt19937 rng(97);
    std::uniform_int_distribution<long> coef(-10, 10);
    for (const char* id : cases) {
        const BasisPattern& pat = patterns().by_id(id);
        const ExplicitForm& form = explicit_index_form(pat.n, id);
        for (const Int& m : class_members(pat, 3)) {
            IntegralBasis basis = instantiate(pat, m);
            int done = 0;
            while (done < 40) {
                std::vector<Int> coords;
                bool nonzero = false;
                for (unsigned i = 0; i + 1 < pat.n; ++i) {
                    long c = coef(rng);
                    if (c) nonzero = true;
                    coords.emplace_back(c);
                }
                if (!nonzero) continue;
                IndexReport rep = element_index(basis, coords);
                CAPTURE(id);
                CAPTURE(m.get_str());
                CHECK(abs(form.value(coords, m)) == rep.index);
                ++done;
            }
        }
    }
}

TEST_CASE("printed factor degrees and homogeneity in x") {
    struct Expect { const char* id; std::vector<unsigned> degs; } table[] = {
        {"3.1", {3}}, {"3.2", {3}}, {"3.3", {3}},
        {"4.1", {2, 4}}, {"4.2", {2, 4}}, {"4.3", {2, 4}},
        {"5.1", {10}}, {"6.1", {3, 6, 6}},
    };
    for (const auto& e : table) {
        const ExplicitForm& form = explicit_index_form(patterns().by_id(e.id).n, e.id);
        REQUIRE(form.factors.size() == e.degs.size());
        for (size_t i = 0; i < e.degs.size(); ++i)
            CHECK(form.factors[i].total_x_degree() == e.degs[i]);
    }
    // f(t*x) = t^deg f(x)
    const ExplicitForm& f61 = explicit_index_form(6, "6.1");
    std::vector<Int> x{Int(1), Int(-2), Int(3), Int(1), Int(2)};
    std::vector<Int> x2, x3;
    for (const Int& v : x) x2.push_back(2 * v), x3.push_back(3 * v);
    for (size_t i = 0; i < 3; ++i) {
        unsigned d = f61.factors[i].total_x_degree();
        Int base = f61.factors[i].eval(x, Int(7));
        CHECK(f61.factors[i].eval(x2, Int(7)) == pow_int(Int(2), d) * base);
        CHECK(f61.factors[i].eval(x3, Int(7)) == pow_int(Int(3), d) * base);
    }
}

TEST_CASE("case 4.3 identity holds as a polynomial (5^4 grid certificate)") {
    const ExplicitForm& form = explicit_index_form(4, "4.3");
    // Degrees per variable are at most 4 in x and 2 in k, so vanishing of
    // lhs - rhs on a 5-point grid per variable proves the identity.
    for (long k = -2; k <= 2; ++k) {
        Int m = 5 + 8 * Int(k);
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long c = -2; c <= 2; ++c) {
                    auto f = form.factor_values_at({Int(a), Int(b), Int(c)}, m);
                    Int sq = 2 * Int(a) * Int(c) - Int(b) * Int(b) + Int(c) * Int(c);
                    CHECK(f[1] - 4 * f[0] * f[0] == (8 * Int(k) + 5) * sq * sq);
                }
    }
}
