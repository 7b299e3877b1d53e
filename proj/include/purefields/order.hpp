#ifndef PUREFIELDS_ORDER_HPP
#define PUREFIELDS_ORDER_HPP

#include <utility>
#include <vector>

#include "purefields/field_element.hpp"
#include "purefields/intmatrix.hpp"

namespace purefields {

// An order (or sub-lattice of one) in K = Q(m^(1/n)), stored canonically:
// lattice = (1/den) * row span of mat, with mat in lower-triangular HNF over
// the power basis 1, theta, ..., theta^(n-1).
struct IntegralBasis {
    PureField field;
    Int den;        // common denominator, >= 1
    IntMatrix mat;  // n x n HNF; basis element b_i = row i / den
    Int disc;       // discriminant of this lattice

    unsigned n() const { return field.n; }
    ElementRep element(size_t i) const;
    std::vector<ElementRep> elements() const;
    // Per-row (q_i, numerators mod q_i): captures the shape (a0+a1*x+...)/q
    // that is preserved under the period shifts.
    std::vector<std::pair<Int, std::vector<Int>>> structure_signature() const;
    bool contains(const ElementRep& e) const;
    Int index_over_theta() const;  // [this : Z[theta]]
};

IntegralBasis power_basis(const PureField& field);

// Lattice spanned by the given rows, HNF-canonicalized; disc derived from the
// basis-change determinant.  `formal` skips the square-free check on m, for
// evaluations that are polynomial identities in m.
IntegralBasis basis_from_rows(unsigned n, const Int& m, const std::vector<ElementRep>& rows,
                              bool formal = false);

// True iff charpoly(field, elem) has integer coefficients.
bool is_algebraic_integer(const PureField& field, const ElementRep& elem);

// Maximal order of the field, from scratch.  Starting at the power basis,
// for each prime p | n (ascending) all candidates (e1 b1 + ... + en bn)/p
// with e in [0,p)^n are tested for integrality; an integral candidate
// enlarges the lattice via HNF and the prime restarts.  Terminates because
// each enlargement divides the discriminant by p^2.
IntegralBasis maximal_order(const PureField& field);

// Discriminant as det of the trace-form Gram matrix; throws math_error if it
// disagrees with the basis-change value stored in `basis.disc`.
Int field_discriminant(const IntegralBasis& basis);

struct IndexReport {
    std::vector<Int> coords;  // x2 .. xn
    Int index;                // I(alpha); 0 when alpha is not primitive
    Int disc_element;         // disc of charpoly(alpha) = index^2 * D_K
    bool primitive = true;
};

// Index of alpha = x2 b2 + ... + xn bn (x1 = 0).  Non-primitive alpha
// (vanishing element discriminant) is reported with index 0.
IndexReport element_index(const IntegralBasis& basis, const std::vector<Int>& coords);

namespace detail {
// Fast integrality test for (sum e_i b_i)/p used inside maximal_order;
// exposed for cross-validation against is_algebraic_integer in tests.
bool newton_integrality_probe(const IntegralBasis& basis, long p, const std::vector<long>& e);
}  // namespace detail

}  // namespace purefields

#endif
