#ifndef PUREFIELDS_FACTORS_HPP
#define PUREFIELDS_FACTORS_HPP

#include <array>
#include <string>
#include <vector>

#include "purefields/tables.hpp"

namespace purefields {

// Exact arithmetic in Q[c, t] / (Phi_n(c), t^n - m): c a primitive n-th root
// of unity, t the principal n-th root of m.  Elements are integer coordinate
// vectors over the monomials c^a t^b, a < phi(n), b < n (callers scale away
// denominators).  This is where products over conjugate differences are
// evaluated without any floating point.
class CycloRing {
  public:
    CycloRing(unsigned n, Int m);
    using Elem = std::vector<Int>;

    unsigned dim() const { return phi_ * n_; }
    Elem zero() const { return Elem(dim(), Int(0)); }
    // c^a t^b with a in [0, n), b in [0, n); c-powers above phi(n) reduce.
    Elem monomial(unsigned a, unsigned b, const Int& coeff = Int(1)) const;
    void add_monomial(Elem& e, unsigned a, unsigned b, const Int& coeff) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    // The rational part if e is a pure scalar, nullopt encoded as throw.
    bool is_scalar(const Elem& e) const;
    const Int& scalar(const Elem& e) const;

    unsigned n() const { return n_; }
    const Int& m() const { return m_; }

  private:
    unsigned n_, phi_;
    Int m_;
    // red_[a] expresses c^a (a < 2n) over c^0..c^(phi-1), integer rows.
    std::vector<std::vector<long>> red_;
};

// Values of the index-form factors at integer coordinates: the linear forms
// alpha^(i) - alpha^(j) are grouped by the difference class d = (i - j) mod n
// (d = n/2 -> f1, d even -> f2, d odd -> f3; for n = 4 only d = 2 and d odd),
// each group product divided by its per-case normalization constant.
struct FactorSet {
    PureField field;
    std::string case_id;
    std::vector<Int> values;  // f1, f2 (and f3 for n = 6, 8)
    Int index;                // |product| cross-checked against element_index
};

// Factor degrees by difference-class pair counts: (2,4), (3,6,6), (4,8,16).
std::vector<unsigned> factor_degrees(unsigned n);

FactorSet factor_values(const PureField& field, const IntegralBasis& basis,
                        const std::vector<Int>& coords);

// The paper's per-case factor identities, checked exactly at integer points:
//   "4.3": f2 - 4 f1^2 == (8k+5) (2 x2 x4 - x3^2 + x4^2)^2
//   "6.4": 4m | (f2 - 9 f3)
//   "8.3": m | (f3 - 16 f2^2)
//   "8.4": m | (f2 - 4 f1^2)
bool check_identity(const std::string& identity_id, const Int& m, const std::vector<Int>& coords);

namespace detail {
// Per-case normalization: group product G_g = gamma * c^u * t^w * Q^|g| * f_g.
struct FactorNorm {
    long gamma_num;
    long gamma_den;
    unsigned c_exp;
    unsigned t_exp;
};
struct CaseNorms {
    std::string case_id;
    std::vector<FactorNorm> norms;
};
const CaseNorms& case_norms(const std::string& case_id);
// Re-derives (|gamma|, c_exp, t_exp) from scratch for one case and sample m;
// used by tests to confirm the frozen table.
CaseNorms calibrate_case(const BasisPattern& pattern, const std::vector<Int>& sample_ms);
}  // namespace detail

}  // namespace purefields

#endif
