#ifndef PUREFIELDS_FIELD_ELEMENT_HPP
#define PUREFIELDS_FIELD_ELEMENT_HPP

#include <vector>

#include "purefields/poly.hpp"

namespace purefields {

// K = Q(m^(1/n)) with 3 <= n <= 9 and m square-free, m not in {0, 1, -1}.
struct PureField {
    unsigned n = 0;
    Int m;

    bool operator==(const PureField& o) const { return n == o.n && m == o.m; }
};

// Validates the PureField preconditions (including certified square-freeness).
PureField checked_field(unsigned n, const Int& m);

// (a0 + a1*theta + ... + a_{n-1}*theta^{n-1}) / q with q >= 1.
struct ElementRep {
    std::vector<Int> num;
    Int den = 1;

    // Divides out gcd(a0, ..., a_{n-1}, q); keeps q positive.
    void canonicalize();
    bool operator==(const ElementRep& o) const { return num == o.num && den == o.den; }
};

ElementRep theta_power(unsigned n, unsigned k);  // theta^k as an ElementRep

// Characteristic polynomial of elem acting on K, monic of degree n, exact.
// Computed from the multiplication matrix of elem over the power basis.
Poly charpoly(const PureField& field, const ElementRep& elem);

// Characteristic polynomial of an exact rational matrix (Hessenberg method).
Poly charpoly_matrix(std::vector<std::vector<Rat>> h);

// disc(x^n - m) = (-1)^(n(n-1)/2) * n^n * (-m)^(n-1); closed form used as a
// cross-check against poly_disc.
Int power_basis_disc(unsigned n, const Int& m);

}  // namespace purefields

#endif
