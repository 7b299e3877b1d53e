#include "purefields/field_element.hpp"

namespace purefields {

PureField checked_field(unsigned n, const Int& m) {
    if (n < 3 || n > 9) throw std::invalid_argument("field: n must be in [3, 9]");
    if (m == 0 || m == 1 || m == -1)
        throw std::invalid_argument("field: m must differ from 0, 1, -1");
    if (!is_squarefree(m)) throw std::invalid_argument("field: m must be square-free");
    return PureField{n, m};
}

void ElementRep::canonicalize() {
    if (den == 0) throw std::invalid_argument("element: zero denominator");
    if (den < 0) {
        den = -den;
        for (Int& a : num) a = -a;
    }
    Int g = den;
    for (const Int& a : num) g = gcd(g, a);
    if (g > 1) {
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
        for (Int& a : num) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    }
}

ElementRep theta_power(unsigned n, unsigned k) {
    ElementRep e;
    e.num.assign(n, Int(0));
    e.num[k % n] = 1;  // k < n expected
    return e;
}

Poly charpoly_matrix(std::vector<std::vector<Rat>> h) {
    const size_t n = h.size();
    // Similarity reduction to upper Hessenberg form.
    for (size_t j = 0; j + 2 < n; ++j) {
        size_t piv = n;
        for (size_t i = j + 1; i < n; ++i)
            if (h[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(h[piv], h[j + 1]);
            for (size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][j + 1]);
        }
        for (size_t k = j + 2; k < n; ++k) {
            if (h[k][j] == 0) continue;
            Rat t = h[k][j] / h[j + 1][j];
            for (size_t c = 0; c < n; ++c) h[k][c] -= t * h[j + 1][c];
            for (size_t r = 0; r < n; ++r) h[r][j + 1] += t * h[r][k];
        }
    }
    // Characteristic polynomials of leading principal minors.
    std::vector<Poly> p(n + 1);
    p[0] = Poly::constant(1);
    for (size_t m = 1; m <= n; ++m) {
        Poly t = Poly::monomial(1, 1) - Poly::constant(h[m - 1][m - 1]);
        p[m] = t * p[m - 1];
        Rat sub(1);
        for (size_t i = m - 1; i-- > 0;) {
            sub *= h[i + 1][i];
            p[m] = p[m] - p[i] * (h[i][m - 1] * sub);
        }
    }
    return p[n];
}

Poly charpoly(const PureField& field, const ElementRep& elem) {
    const unsigned n = field.n;
    if (elem.num.size() != n) throw std::invalid_argument("charpoly: coordinate size mismatch");
    if (elem.den < 1) throw std::invalid_argument("charpoly: denominator must be >= 1");
    // Multiplication matrix over the power basis: row i = coords of elem * theta^i.
    std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n, Rat(0)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            unsigned k = i + j;
            Rat v(elem.num[j], elem.den);
            v.canonicalize();
            if (k >= n) {
                k -= n;
                v *= Rat(field.m);
            }
            mat[i][k] += v;
        }
    return charpoly_matrix(std::move(mat));
}

Int power_basis_disc(unsigned n, const Int& m) {
    Int d = pow_int(Int(n), n) * pow_int(-m, n - 1);
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

}  // namespace purefields
