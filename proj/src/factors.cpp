#include "purefields/factors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "purefields/forms.hpp"

namespace purefields {

namespace {

// Cyclotomic polynomial coefficients (monic, constant first) for n in [3, 9].
std::vector<long> cyclotomic(unsigned n) {
    switch (n) {
        case 3: return {1, 1, 1};
        case 4: return {1, 0, 1};
        case 5: return {1, 1, 1, 1, 1};
        case 6: return {1, -1, 1};
        case 7: return {1, 1, 1, 1, 1, 1, 1};
        case 8: return {1, 0, 0, 0, 1};
        case 9: return {1, 0, 0, 1, 0, 0, 1};
        default: throw std::invalid_argument("cyclotomic: n out of range");
    }
}

}  // namespace

CycloRing::CycloRing(unsigned n, Int m) : n_(n), m_(std::move(m)) {
    std::vector<long> phi_poly = cyclotomic(n);
    phi_ = static_cast<unsigned>(phi_poly.size()) - 1;
    red_.assign(2 * n_, std::vector<long>(phi_, 0));
    for (unsigned a = 0; a < phi_ && a < 2 * n_; ++a) red_[a][a] = 1;
    for (unsigned a = phi_; a < 2 * n_; ++a) {
        // c^a = c * c^(a-1); shift then fold the overflow via Phi_n.
        std::vector<long> shifted(phi_ + 1, 0);
        for (unsigned i = 0; i < phi_; ++i) shifted[i + 1] = red_[a - 1][i];
        long over = shifted[phi_];
        for (unsigned i = 0; i < phi_; ++i) red_[a][i] = shifted[i] - over * phi_poly[i];
    }
}

CycloRing::Elem CycloRing::monomial(unsigned a, unsigned b, const Int& coeff) const {
    Elem e = zero();
    add_monomial(e, a, b, coeff);
    return e;
}

void CycloRing::add_monomial(Elem& e, unsigned a, unsigned b, const Int& coeff) const {
    if (coeff == 0) return;
    for (unsigned i = 0; i < phi_; ++i)
        if (red_[a][i]) e[i * n_ + b] += coeff * red_[a][i];
}

CycloRing::Elem CycloRing::mul(const Elem& x, const Elem& y) const {
    // Accumulate on the (c-exponent, t-exponent) grid, then fold t^n = m and
    // the cyclotomic relation.
    std::vector<Int> grid((2 * phi_ - 1) * (2 * n_ - 1), Int(0));
    for (unsigned a1 = 0; a1 < phi_; ++a1)
        for (unsigned b1 = 0; b1 < n_; ++b1) {
            const Int& xv = x[a1 * n_ + b1];
            if (xv == 0) continue;
            for (unsigned a2 = 0; a2 < phi_; ++a2)
                for (unsigned b2 = 0; b2 < n_; ++b2) {
                    const Int& yv = y[a2 * n_ + b2];
                    if (yv == 0) continue;
                    grid[(a1 + a2) * (2 * n_ - 1) + b1 + b2] += xv * yv;
                }
        }
    Elem out = zero();
    for (unsigned a = 0; a < 2 * phi_ - 1; ++a)
        for (unsigned b = 0; b < 2 * n_ - 1; ++b) {
            Int v = grid[a * (2 * n_ - 1) + b];
            if (v == 0) continue;
            unsigned bb = b;
            if (bb >= n_) {
                bb -= n_;
                v *= m_;
            }
            add_monomial(out, a, bb, v);
        }
    return out;
}

CycloRing::Elem CycloRing::sub(const Elem& x, const Elem& y) const {
    Elem out(x);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
    return out;
}

bool CycloRing::is_scalar(const Elem& e) const {
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i] != 0) return false;
    return true;
}

const Int& CycloRing::scalar(const Elem& e) const {
    if (!is_scalar(e)) throw math_error("CycloRing: element is not a rational scalar");
    return e[0];
}

std::vector<unsigned> factor_degrees(unsigned n) {
    switch (n) {
        case 4: return {2, 4};
        case 6: return {3, 6, 6};
        case 8: return {4, 8, 16};
        default: throw std::invalid_argument("factor_degrees: n must be 4, 6 or 8");
    }
}

namespace {

// Unordered conjugate pairs (i < j) grouped by the difference class d = j - i:
// d = n/2 -> group 0, other even d -> group 1, odd d -> group 2 (n = 4 has
// only groups 0 and 1).
std::vector<std::vector<std::pair<unsigned, unsigned>>> difference_groups(unsigned n) {
    size_t ngroups = (n == 4) ? 2 : 3;
    std::vector<std::vector<std::pair<unsigned, unsigned>>> groups(ngroups);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            unsigned d = j - i;
            size_t g;
            if (d == n / 2)
                g = 0;
            else if (d % 2 == 0)
                g = 1;
            else
                g = (n == 4) ? 1 : 2;
            groups[g].emplace_back(i, j);
        }
    return groups;
}

// Conjugate embeddings of Q * alpha as ring elements: beta_i = sum_j x_j *
// row_j(c^i t) with integer coordinates.
std::vector<CycloRing::Elem> embed_conjugates(const CycloRing& ring, const IntegralBasis& basis,
                                              const std::vector<Int>& coords) {
    const unsigned n = ring.n();
    std::vector<CycloRing::Elem> beta(n, ring.zero());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 1; j < n; ++j) {
            if (coords[j - 1] == 0) continue;
            for (unsigned l = 0; l < n; ++l) {
                const Int& a = basis.mat.at(j, l);
                if (a == 0) continue;
                ring.add_monomial(beta[i], (i * l) % n, l, a * coords[j - 1]);
            }
        }
    return beta;
}

std::vector<CycloRing::Elem> group_products(const CycloRing& ring, const IntegralBasis& basis,
                                            const std::vector<Int>& coords) {
    const unsigned n = ring.n();
    auto beta = embed_conjugates(ring, basis, coords);
    auto groups = difference_groups(n);
    std::vector<CycloRing::Elem> prods;
    for (const auto& g : groups) {
        CycloRing::Elem acc = ring.monomial(0, 0);
        for (auto [i, j] : g) acc = ring.mul(acc, ring.sub(beta[i], beta[j]));
        prods.push_back(std::move(acc));
    }
    return prods;
}

// Divides the group product by gamma * c^u * t^w * Q^|g|; exact or throws.
Int apply_norm(const CycloRing& ring, const CycloRing::Elem& prod, const detail::FactorNorm& nm,
               const Int& den_pow) {
    const unsigned n = ring.n();
    unsigned u = nm.c_exp % n, w = nm.t_exp % n, extra = nm.t_exp / n;
    CycloRing::Elem z = ring.mul(prod, ring.monomial((n - u) % n, (n - w) % n));
    if (!ring.is_scalar(z)) throw math_error("factor normalization mismatch: non-scalar residue");
    Int denom = Int(nm.gamma_num) * den_pow;
    for (unsigned e = 0; e < extra + (w > 0 ? 1 : 0); ++e) denom *= ring.m();
    Int num = ring.scalar(z) * nm.gamma_den;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    if (r != 0) throw math_error("factor normalization mismatch: non-integral value");
    return q;
}

}  // namespace

FactorSet factor_values(const PureField& field, const IntegralBasis& basis,
                        const std::vector<Int>& coords) {
    const unsigned n = field.n;
    if (n != 4 && n != 6 && n != 8)
        throw std::invalid_argument("factor_values: factor structure exists for n = 4, 6, 8");
    IndexReport rep = element_index(basis, coords);
    if (!rep.primitive)
        throw std::invalid_argument("factor_values: alpha generates a proper subfield");

    const BasisPattern& pattern = lookup_pattern(n, field.m);
    const detail::CaseNorms& norms = detail::case_norms(pattern.id);
    CycloRing ring(n, field.m);
    auto prods = group_products(ring, basis, coords);
    auto degs = factor_degrees(n);

    FactorSet fs;
    fs.field = field;
    fs.case_id = pattern.id;
    fs.index = rep.index;
    Int prod(1);
    for (size_t g = 0; g < prods.size(); ++g) {
        Int den_pow = pow_int(basis.den, degs[g]);
        Int v = apply_norm(ring, prods[g], norms.norms[g], den_pow);
        prod *= v;
        fs.values.push_back(std::move(v));
    }
    if (abs(prod) != rep.index)
        throw math_error("factor normalization mismatch: |f1*f2*...| != index");
    return fs;
}

bool check_identity(const std::string& identity_id, const Int& m, const std::vector<Int>& coords) {
    if (identity_id == "4.3") {
        const ExplicitForm& form = explicit_index_form(4, "4.3");
        std::vector<Int> f = form.factor_values_at(coords, m);
        Int k = form.param_value(m);
        Int sq = 2 * coords[0] * coords[2] - coords[1] * coords[1] + coords[2] * coords[2];
        return f[1] - 4 * f[0] * f[0] == (8 * k + 5) * sq * sq;
    }
    PureField field = checked_field(identity_id[0] == '6' ? 6 : 8, m);
    const BasisPattern& pattern = lookup_pattern(field.n, m);
    if (pattern.id != identity_id)
        throw std::invalid_argument("check_identity: m is not in the class of case " + identity_id);
    IntegralBasis basis = instantiate(pattern, m);
    FactorSet fs = factor_values(field, basis, coords);
    if (identity_id == "6.4") {
        Int v = fs.values[1] - 9 * fs.values[2];
        return mpz_divisible_p(v.get_mpz_t(), Int(4 * m).get_mpz_t());
    }
    if (identity_id == "8.3") {
        Int v = fs.values[2] - 16 * fs.values[1] * fs.values[1];
        return mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t());
    }
    if (identity_id == "8.4") {
        Int v = fs.values[1] - 4 * fs.values[0] * fs.values[0];
        return mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t());
    }
    throw std::invalid_argument("check_identity: unknown identity " + identity_id);
}

namespace detail {

namespace {

// Frozen normalization constants, derived once with calibrate_case and
// re-verified in the test suite.  PLACEHOLDER until calibration runs.
const CaseNorms kNorms[] = {
    {"4.1", {{1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"4.2", {{1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"4.3", {{1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"6.1", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"6.2", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"6.3", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"6.4", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"6.5", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"6.6", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"8.1", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"8.2", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"8.3", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
    {"8.4", {{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
};

// Deterministic coordinate points used both for calibration and for its
// re-verification.
std::vector<std::vector<Int>> calibration_points(unsigned n) {
    std::vector<std::vector<Int>> pts;
    unsigned long state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long>((state >> 33) % 7) - 3;
    };
    for (unsigned i = 0; i < n - 1; ++i) {
        std::vector<Int> unit(n - 1, Int(0));
        unit[i] = 1;
        pts.push_back(unit);
    }
    pts.push_back(std::vector<Int>(n - 1, Int(1)));
    while (pts.size() < static_cast<size_t>(n) + 11) {
        std::vector<Int> p;
        bool nonzero = false;
        for (unsigned i = 0; i + 1 < n; ++i) {
            long v = next();
            if (v) nonzero = true;
            p.emplace_back(v);
        }
        if (nonzero) pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace

const CaseNorms& case_norms(const std::string& case_id) {
    for (const CaseNorms& c : kNorms)
        if (c.case_id == case_id) return c;
    throw math_error("no factor normalization for case " + case_id);
}

CaseNorms calibrate_case(const BasisPattern& pattern, const std::vector<Int>& sample_ms) {
    const unsigned n = pattern.n;
    auto degs = factor_degrees(n);
    const size_t ngroups = degs.size();
    if (sample_ms.size() < 2)
        throw std::invalid_argument("calibrate_case: need at least two sample fields");
    CaseNorms result;
    result.case_id = pattern.id;
    result.norms.assign(ngroups, FactorNorm{0, 1, 0, 0});

    struct Sample {
        Int m;
        Int den;
        CycloRing ring;
        std::vector<std::vector<CycloRing::Elem>> prods;  // per point, per group
    };
    std::vector<Sample> samples;
    for (const Int& m : sample_ms) {
        IntegralBasis basis = instantiate(pattern, m);
        Sample s{m, basis.den, CycloRing(n, m), {}};
        for (const auto& pt : calibration_points(n)) {
            IndexReport rep = element_index(basis, pt);
            if (!rep.primitive || rep.index == 0) continue;
            auto gp = group_products(s.ring, basis, pt);
            bool ok = true;
            for (const auto& e : gp) {
                bool zero = true;
                for (const Int& v : e)
                    if (v != 0) zero = false;
                if (zero) ok = false;
            }
            if (!ok) continue;
            s.prods.push_back(std::move(gp));
            if (s.prods.size() >= 8) break;
        }
        if (s.prods.size() < 4) throw math_error("calibrate_case: not enough usable points");
        samples.push_back(std::move(s));
    }

    for (size_t g = 0; g < ngroups; ++g) {
        // Find the monomial c^u t^w under which every product is a rational
        // scalar and the content is the same for all sample fields (t^n = m
        // makes w ambiguous for a single field, so constancy across several
        // |m| pins it down).
        bool found = false;
        for (unsigned w = 0; w < 2 * n && !found; ++w)
            for (unsigned u = 0; u < n && !found; ++u) {
                Rat gamma;
                bool ok = true;
                for (const Sample& s : samples) {
                    Int mdiv(1);
                    for (unsigned e = 0; e < w / n + (w % n > 0 ? 1 : 0); ++e) mdiv *= s.m;
                    Int den_pow = pow_int(s.den, degs[g]) * mdiv;
                    Int gnum(0), gden(1);
                    for (const auto& gp : s.prods) {
                        CycloRing::Elem z = s.ring.mul(
                            gp[g], s.ring.monomial((n - u) % n, (n - w % n) % n));
                        if (!s.ring.is_scalar(z)) {
                            ok = false;
                            break;
                        }
                        Rat v(s.ring.scalar(z), den_pow);
                        v.canonicalize();
                        gnum = gcd(gnum, v.get_num());
                        gden = lcm(gden, v.get_den());
                    }
                    if (!ok) break;
                    Rat content(gnum, gden);
                    content.canonicalize();
                    if (&s == &samples.front())
                        gamma = content;
                    else if (content != gamma)
                        ok = false;
                }
                if (ok) {
                    result.norms[g] =
                        FactorNorm{to_long(gamma.get_num()), to_long(gamma.get_den()), u, w};
                    found = true;
                }
            }
        if (!found)
            throw math_error("calibrate_case: no m-uniform normalization found for case " +
                             pattern.id);
    }
    return result;
}

}  // namespace detail

}  // namespace purefields
