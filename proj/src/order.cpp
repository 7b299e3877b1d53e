#include "purefields/order.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace purefields {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

// Power-basis coordinates of b_i * b_j: convolution folded by theta^n = m.
// Rows are numerators at denominator den, so the product has denominator den^2.
std::vector<Int> product_numerators(const IntMatrix& mat, const Int& m, size_t i, size_t j) {
    const size_t n = mat.cols();
    std::vector<Int> u(n, Int(0));
    for (size_t a = 0; a < n; ++a) {
        if (mat.at(i, a) == 0) continue;
        for (size_t b = 0; b < n; ++b) {
            if (mat.at(j, b) == 0) continue;
            size_t k = a + b;
            Int v = mat.at(i, a) * mat.at(j, b);
            if (k >= n) {
                k -= n;
                v *= m;
            }
            u[k] += v;
        }
    }
    return u;
}

// Solve sum_k t_k * row_k = target over Q (rows lower-triangular, full rank).
std::vector<Rat> triangular_solve(const IntMatrix& mat, std::vector<Rat> target) {
    const size_t n = mat.cols();
    std::vector<Rat> t(n, Rat(0));
    for (size_t k = n; k-- > 0;) {
        Rat tk = target[k] / Rat(mat.at(k, k));
        t[k] = tk;
        if (tk != 0)
            for (size_t c = 0; c <= k; ++c) target[c] -= tk * Rat(mat.at(k, c));
    }
    return t;
}

std::vector<long> prime_divisors(unsigned n) {
    std::vector<long> ps;
    for (auto& [p, e] : factor_small(static_cast<long>(n))) ps.push_back(p);
    return ps;
}

}  // namespace

ElementRep IntegralBasis::element(size_t i) const {
    ElementRep e{mat.row(i), den};
    e.canonicalize();
    return e;
}

std::vector<ElementRep> IntegralBasis::elements() const {
    std::vector<ElementRep> out;
    for (size_t i = 0; i < mat.rows(); ++i) out.push_back(element(i));
    return out;
}

std::vector<std::pair<Int, std::vector<Int>>> IntegralBasis::structure_signature() const {
    std::vector<std::pair<Int, std::vector<Int>>> sig;
    for (const ElementRep& e : elements()) {
        std::vector<Int> residues;
        for (const Int& a : e.num) residues.push_back(mod_floor(a, e.den));
        sig.emplace_back(e.den, std::move(residues));
    }
    return sig;
}

bool IntegralBasis::contains(const ElementRep& e) const {
    std::vector<Rat> target(field.n);
    for (unsigned i = 0; i < field.n; ++i) {
        Rat v(e.num[i] * den, e.den);
        v.canonicalize();
        target[i] = v;
    }
    for (const Rat& t : triangular_solve(mat, target))
        if (t.get_den() != 1) return false;
    return true;
}

Int IntegralBasis::index_over_theta() const {
    Rat idx(pow_int(den, field.n), diagonal_product(mat));
    idx.canonicalize();
    if (idx.get_den() != 1)
        throw math_error("index_over_theta: lattice does not contain Z[theta]");
    return idx.get_num();
}

IntegralBasis power_basis(const PureField& field) {
    return IntegralBasis{field, Int(1), IntMatrix::identity(field.n),
                         power_basis_disc(field.n, field.m)};
}

IntegralBasis basis_from_rows(unsigned n, const Int& m, const std::vector<ElementRep>& rows,
                              bool formal) {
    PureField field = formal ? PureField{n, m} : checked_field(n, m);
    Int common(1);
    for (const ElementRep& r : rows) common = lcm(common, r.den);
    IntMatrix stack;
    for (const ElementRep& r : rows) {
        if (r.num.size() != n) throw std::invalid_argument("basis_from_rows: bad row size");
        Int scale = common / r.den;
        std::vector<Int> row(n);
        for (unsigned j = 0; j < n; ++j) row[j] = r.num[j] * scale;
        stack.append_row(row);
    }
    IntMatrix h = hnf_rows(stack);
    if (h.rows() != n) throw math_error("basis_from_rows: rows do not span a full lattice");
    // Remove any common factor of the denominator and all entries.
    Int g = common;
    for (size_t i = 0; i < n && g > 1; ++i)
        for (size_t j = 0; j <= i && g > 1; ++j) g = gcd(g, h.at(i, j));
    if (g > 1) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j <= i; ++j)
                if (h.at(i, j) != 0)
                    mpz_divexact(h.at(i, j).get_mpz_t(), h.at(i, j).get_mpz_t(), g.get_mpz_t());
        mpz_divexact(common.get_mpz_t(), common.get_mpz_t(), g.get_mpz_t());
    }
    Rat scale2(diagonal_product(h), pow_int(common, n));
    scale2.canonicalize();
    Rat disc = Rat(power_basis_disc(n, m)) * scale2 * scale2;
    if (disc.get_den() != 1) throw math_error("basis_from_rows: non-integral discriminant");
    return IntegralBasis{field, common, std::move(h), disc.get_num()};
}

bool is_algebraic_integer(const PureField& field, const ElementRep& elem) {
    return charpoly(field, elem).has_integer_coeffs();
}

// ---------------------------------------------------------------------------
// Fast integrality filter.
//
// (sum e_i b_i)/p is an algebraic integer iff p^k | sigma_k(y) for k = 1..n,
// where sigma_k are the elementary symmetric functions of y = sum e_i b_i.
// The sigma_k are recovered from power sums s_k = tr(y^k) by Newton's
// identities, all computed modulo p^N in machine words.  N is large enough
// that the divisions by k in Newton's identities leave at least n exact
// p-adic digits.
// ---------------------------------------------------------------------------

namespace {

struct ModArith {
    long p = 0;
    unsigned N = 0;
    u64 mod = 0;  // p^N

    // Precision: the Newton recurrences shed nu_p(k) digits per division, so
    // n + nu_p(n!) + 2 digits leave at least n exact ones for the p^k | sigma_k
    // checks.  The modulus stays below 2^30, keeping all products in u64.
    static ModArith make(long p, unsigned n) {
        ModArith ma;
        ma.p = p;
        unsigned nu = 0;
        for (unsigned k = 2; k <= n; ++k)
            for (long t = static_cast<long>(k); t % p == 0; t /= p) ++nu;
        ma.N = n + nu + 2;
        ma.mod = 1;
        for (unsigned i = 0; i < ma.N; ++i) ma.mod *= static_cast<u64>(p);
        if (ma.mod >= (u64(1) << 30)) throw math_error("ModArith: modulus out of range");
        return ma;
    }
    u64 mul(u64 a, u64 b) const { return a * b % mod; }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= mod ? s - mod : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + mod - b; }
    u64 reduce(const Int& v) const {
        Int r = mod_floor(v, Int(static_cast<unsigned long>(mod)));
        return r.get_ui();
    }
};

u64 egcd_inverse(u64 a, u64 m) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw math_error("egcd_inverse: not invertible");
    long long res = t % static_cast<long long>(m);
    if (res < 0) res += static_cast<long long>(m);
    return static_cast<u64>(res);
}

// Per (lattice, prime) tables for the filter, plus the radical of O/pO.
struct Round {
    unsigned n = 0;
    long p = 0;
    ModArith ma;
    std::vector<u64> trace;              // tr(b_i) mod p^N
    std::vector<std::vector<u64>> gram;  // tr(b_i b_j) mod p^N
    std::vector<std::vector<u64>> sc;    // sc[i*n+j][k]: coords of b_i b_j in basis
    std::vector<std::vector<long>> radical;  // F_p-basis of Rad(O/pO), entries in [0,p)
    std::array<u64, 16> inv{};           // inverses of 1..n coprime to p, mod p^N
};

// B-basis coordinates of b_i b_j; nullopt (with the product element set) when
// the lattice is not multiplicatively closed.
std::optional<std::vector<Int>> product_coords(const IntegralBasis& L, size_t i, size_t j,
                                               ElementRep* product_out) {
    const unsigned n = L.field.n;
    std::vector<Int> u = product_numerators(L.mat, L.field.m, i, j);
    std::vector<Rat> target(n);
    for (unsigned k = 0; k < n; ++k) {
        Rat v(u[k], L.den);
        v.canonicalize();
        target[k] = v;
    }
    std::vector<Rat> t = triangular_solve(L.mat, target);
    std::vector<Int> coords(n);
    for (unsigned k = 0; k < n; ++k) {
        if (t[k].get_den() != 1) {
            if (product_out) {
                product_out->num = std::move(u);
                product_out->den = L.den * L.den;
                product_out->canonicalize();
            }
            return std::nullopt;
        }
        coords[k] = t[k].get_num();
    }
    return coords;
}

void vec_mul_into(const Round& r, const std::vector<u64>& a, const std::vector<u64>& b,
                  std::vector<u64>& out) {
    const unsigned n = r.n;
    std::fill(out.begin(), out.end(), 0);
    for (unsigned i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            u64 c = r.ma.mul(a[i], b[j]);
            const std::vector<u64>& s = r.sc[i * n + j];
            for (unsigned k = 0; k < n; ++k)
                if (s[k]) out[k] = r.ma.add(out[k], r.ma.mul(c, s[k]));
        }
    }
}

// Radical of O/pO as kernel of the iterated Frobenius x -> x^(p^s), p^s >= n.
std::vector<std::vector<long>> radical_basis(const Round& r) {
    const unsigned n = r.n;
    const long p = r.p;
    // Multiplication mod p.
    auto mulp = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> out(n, 0);
        for (unsigned i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < n; ++j) {
                if (!b[j]) continue;
                long c = a[i] * b[j] % p;
                const std::vector<u64>& s = r.sc[i * n + j];
                for (unsigned k = 0; k < n; ++k)
                    out[k] = (out[k] + c * static_cast<long>(s[k] % static_cast<u64>(p))) % p;
            }
        }
        return out;
    };
    // Frobenius matrix: column i = (b_i)^p.
    std::vector<std::vector<long>> frob(n, std::vector<long>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
        std::vector<long> x(n, 0);
        x[i] = 1;
        std::vector<long> acc = x;
        for (long k = 1; k < p; ++k) acc = mulp(acc, x);
        for (unsigned k = 0; k < n; ++k) frob[k][i] = acc[k];
    }
    unsigned s = 1;
    long ps = p;
    while (static_cast<unsigned>(ps) < n) ps *= p, ++s;
    // F^s
    auto matmul = [&](const std::vector<std::vector<long>>& A,
                      const std::vector<std::vector<long>>& B) {
        std::vector<std::vector<long>> C(n, std::vector<long>(n, 0));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned k = 0; k < n; ++k) {
                if (!A[i][k]) continue;
                for (unsigned j = 0; j < n; ++j)
                    C[i][j] = (C[i][j] + A[i][k] * B[k][j]) % p;
            }
        return C;
    };
    std::vector<std::vector<long>> fs = frob;
    for (unsigned k = 1; k < s; ++k) fs = matmul(frob, fs);
    // Kernel via Gaussian elimination mod p.
    std::vector<std::vector<long>> m = fs;
    std::vector<int> pivot_col(n, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = n;
        for (unsigned row = rank; row < n; ++row)
            if (m[row][col] % p != 0) {
                piv = row;
                break;
            }
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        long inv = static_cast<long>(egcd_inverse(static_cast<u64>((m[rank][col] % p + p) % p),
                                                  static_cast<u64>(p)));
        for (unsigned c = 0; c < n; ++c) m[rank][c] = (m[rank][c] % p + p) % p * inv % p;
        for (unsigned row = 0; row < n; ++row) {
            if (row == rank) continue;
            long f = (m[row][col] % p + p) % p;
            if (!f) continue;
            for (unsigned c = 0; c < n; ++c)
                m[row][c] = ((m[row][c] - f * m[rank][c]) % p + p) % p;
        }
        pivot_col[rank++] = static_cast<int>(col);
    }
    std::vector<std::vector<long>> kernel;
    for (unsigned col = 0; col < n; ++col) {
        bool is_pivot = false;
        for (unsigned k = 0; k < rank; ++k)
            if (pivot_col[k] == static_cast<int>(col)) is_pivot = true;
        if (is_pivot) continue;
        std::vector<long> v(n, 0);
        v[col] = 1;
        for (unsigned k = 0; k < rank; ++k)
            v[pivot_col[k]] = (p - m[k][col] % p) % p;
        kernel.push_back(v);
    }
    return kernel;
}

// Builds the per-prime tables; on failure returns the product element that
// must be adjoined first (lattice not multiplicatively closed).
std::optional<ElementRep> build_round(const IntegralBasis& L, long p, Round& out) {
    const unsigned n = L.field.n;
    out.n = n;
    out.p = p;
    out.ma = ModArith::make(p, n);
    for (unsigned k = 1; k <= n; ++k)
        out.inv[k] = (k % p) ? egcd_inverse(k % out.ma.mod, out.ma.mod) : 0;
    out.trace.assign(n, 0);
    out.gram.assign(n, std::vector<u64>(n, 0));
    out.sc.assign(static_cast<size_t>(n) * n, {});

    std::vector<Int> trace_exact(n);
    for (unsigned i = 0; i < n; ++i) {
        Rat t(Int(n) * L.mat.at(i, 0), L.den);
        t.canonicalize();
        if (t.get_den() != 1) throw math_error("maximal_order: non-integral basis trace");
        trace_exact[i] = t.get_num();
        out.trace[i] = out.ma.reduce(trace_exact[i]);
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            ElementRep bad;
            auto coords = product_coords(L, i, j, &bad);
            if (!coords) return bad;
            std::vector<u64> c(n);
            Int tij(0);
            for (unsigned k = 0; k < n; ++k) {
                c[k] = out.ma.reduce((*coords)[k]);
                tij += (*coords)[k] * trace_exact[k];
            }
            out.sc[i * n + j] = c;
            out.sc[j * n + i] = std::move(c);
            u64 g = out.ma.reduce(tij);
            out.gram[i][j] = g;
            out.gram[j][i] = g;
        }
    out.radical = radical_basis(out);
    return std::nullopt;
}

// Scratch buffers reused across candidates (the enumeration visits up to p^8
// of them per round, so the chain must not allocate).
struct ChainWorkspace {
    std::array<u64, 16> s{}, sigma{};
    std::vector<std::vector<u64>> pow;
    explicit ChainWorkspace(unsigned n) : pow(6, std::vector<u64>(n, 0)) {}
};

// Newton chain: checks p^k | sigma_k for k = 1..n given e (small non-negative
// integers), s1 = tr(y) and w = Gram * e, everything mod p^N.
bool newton_chain(const Round& r, const std::vector<long>& e, u64 s1, const std::vector<u64>& w,
                  ChainWorkspace& ws) {
    const unsigned n = r.n;
    const long p = r.p;
    u64 mod = r.ma.mod;
    auto mulm = [&](u64 a, u64 b) { return static_cast<u64>((u128)a * b % mod); };

    if (s1 % static_cast<u64>(p) != 0) return false;

    auto& s = ws.s;
    auto& sigma = ws.sigma;
    s[1] = s1;
    sigma[0] = 1;
    sigma[1] = s[1];

    unsigned npow = 0;  // filled prefix of ws.pow; pow[k] = coords of y^(k+1)
    auto ensure_pow = [&](unsigned k) {
        if (npow == 0) {
            for (unsigned i = 0; i < n; ++i) ws.pow[0][i] = static_cast<u64>(e[i]);
            npow = 1;
        }
        while (npow < k) {
            vec_mul_into(r, ws.pow[npow - 1], ws.pow[0], ws.pow[npow]);
            ++npow;
        }
    };
    auto pairing = [&](const std::vector<u64>& u, const std::vector<u64>& v) {
        u64 acc = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (!u[i]) continue;
            u64 row = 0;
            for (unsigned j = 0; j < n; ++j)
                if (v[j]) row = r.ma.add(row, r.ma.mul(r.gram[i][j], v[j]));
            acc = r.ma.add(acc, r.ma.mul(u[i], row));
        }
        return acc;
    };

    u64 pk = static_cast<u64>(p);  // p^k, tracked against the current modulus
    for (unsigned k = 2; k <= n; ++k) {
        // s_k = tr(y^k) via the Gram pairing of half powers.
        unsigned hi = (k + 1) / 2, lo = k / 2;
        if (k == 2) {
            u64 acc = 0;  // e entries are small, so the sum stays far below 2^63
            for (unsigned i = 0; i < n; ++i)
                if (e[i]) acc += static_cast<u64>(e[i]) * w[i];
            s[2] = acc % r.ma.mod;
        } else if (lo == 1) {
            ensure_pow(hi);
            u64 acc = 0;
            for (unsigned i = 0; i < n; ++i)
                if (ws.pow[hi - 1][i]) acc = r.ma.add(acc, r.ma.mul(ws.pow[hi - 1][i], w[i]));
            s[k] = acc;
        } else {
            ensure_pow(hi);
            s[k] = pairing(ws.pow[hi - 1], ws.pow[lo - 1]);
        }
        // k * sigma_k = sum_{i=1..k} (-1)^(i-1) sigma_{k-i} s_i
        u64 acc = 0;
        bool plus = true;
        for (unsigned i = 1; i <= k; ++i) {
            u64 term = mulm(sigma[k - i] % mod, s[i] % mod);
            acc = plus ? (acc + term) % mod : (acc + mod - term) % mod;
            plus = !plus;
        }
        // Divide by k, shedding p-adic digits for the p-part.
        long kk = static_cast<long>(k);
        while (kk % p == 0) {
            if (acc % static_cast<u64>(p) != 0)
                throw math_error("newton_chain: inconsistent divisibility");
            acc /= static_cast<u64>(p);
            mod /= static_cast<u64>(p);
            acc %= mod;
            kk /= p;
        }
        if (kk > 1) acc = mulm(acc, r.inv[kk] % mod);
        sigma[k] = acc;
        // Check p^k | sigma_k (mod must retain at least k digits).
        if (mod < pk * static_cast<u64>(p))
            throw math_error("newton_chain: precision exhausted");
        pk *= static_cast<u64>(p);
        if (acc % pk != 0) return false;
    }
    return true;
}

// Enumerates candidates over the radical subspace; returns the first
// integral (sum e_i b_i)/p found, or nullopt when the prime is exhausted.
std::optional<ElementRep> find_enlargement(const IntegralBasis& L, const Round& r) {
    const unsigned n = r.n;
    const long p = r.p;
    const size_t dim = r.radical.size();
    if (dim == 0) return std::nullopt;

    // Per-direction increments for the incremental odometer state.
    std::vector<u64> ds1(dim, 0);
    std::vector<std::vector<u64>> dw(dim, std::vector<u64>(n, 0));
    for (size_t t = 0; t < dim; ++t) {
        for (unsigned i = 0; i < n; ++i) {
            if (!r.radical[t][i]) continue;
            u64 c = static_cast<u64>(r.radical[t][i]);
            ds1[t] = r.ma.add(ds1[t], r.ma.mul(c, r.trace[i]));
            for (unsigned j = 0; j < n; ++j)
                dw[t][j] = r.ma.add(dw[t][j], r.ma.mul(c, r.gram[i][j]));
        }
    }

    std::vector<long> g(dim, 0), e(n, 0);
    u64 s1 = 0;
    std::vector<u64> w(n, 0);
    ChainWorkspace ws(n);
    for (;;) {
        // Odometer step.
        size_t t = 0;
        while (t < dim && g[t] == p - 1) {
            g[t] = 0;
            for (unsigned i = 0; i < n; ++i) e[i] -= (p - 1) * r.radical[t][i];
            s1 = r.ma.sub(s1, r.ma.mul(static_cast<u64>(p - 1), ds1[t]));
            for (unsigned j = 0; j < n; ++j)
                w[j] = r.ma.sub(w[j], r.ma.mul(static_cast<u64>(p - 1), dw[t][j]));
            ++t;
        }
        if (t == dim) return std::nullopt;
        ++g[t];
        for (unsigned i = 0; i < n; ++i) e[i] += r.radical[t][i];
        s1 = r.ma.add(s1, ds1[t]);
        for (unsigned j = 0; j < n; ++j) w[j] = r.ma.add(w[j], dw[t][j]);

        if (!newton_chain(r, e, s1, w, ws)) continue;

        // Exact confirmation before enlarging.
        ElementRep cand;
        cand.num.assign(n, Int(0));
        for (unsigned i = 0; i < n; ++i)
            if (e[i])
                for (unsigned j = 0; j <= i; ++j) cand.num[j] += Int(e[i]) * L.mat.at(i, j);
        cand.den = L.den * p;
        cand.canonicalize();
        if (!is_algebraic_integer(L.field, cand))
            throw math_error("maximal_order: filter accepted a non-integral candidate");
        return cand;
    }
}

}  // namespace

namespace detail {
bool newton_integrality_probe(const IntegralBasis& basis, long p, const std::vector<long>& e) {
    Round r;
    auto missing = build_round(basis, p, r);
    if (missing) throw math_error("newton_integrality_probe: lattice not closed");
    const unsigned n = r.n;
    u64 s1 = 0;
    std::vector<u64> w(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (!e[i]) continue;
        u64 c = static_cast<u64>(e[i]);
        s1 = r.ma.add(s1, r.ma.mul(c, r.trace[i]));
        for (unsigned j = 0; j < n; ++j) w[j] = r.ma.add(w[j], r.ma.mul(c, r.gram[i][j]));
    }
    ChainWorkspace ws(n);
    return newton_chain(r, e, s1, w, ws);
}
}  // namespace detail

IntegralBasis maximal_order(const PureField& field) {
    IntegralBasis L = power_basis(field);
    for (long p : prime_divisors(field.n)) {
        for (int guard = 0;; ++guard) {
            if (guard > 200) throw math_error("maximal_order: runaway enlargement");
            Round r;
            auto missing = build_round(L, p, r);
            if (missing) {
                std::vector<ElementRep> rows = L.elements();
                rows.push_back(*missing);
                L = basis_from_rows(field.n, field.m, rows, /*formal=*/true);
                continue;
            }
            auto found = find_enlargement(L, r);
            if (!found) break;
            std::vector<ElementRep> rows = L.elements();
            rows.push_back(*found);
            L = basis_from_rows(field.n, field.m, rows, /*formal=*/true);
        }
    }
    return L;
}

Int field_discriminant(const IntegralBasis& basis) {
    const unsigned n = basis.field.n;
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
    Int den2 = basis.den * basis.den;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            std::vector<Int> u = product_numerators(basis.mat, basis.field.m, i, j);
            Rat t(Int(n) * u[0], den2);
            t.canonicalize();
            gram[i][j] = t;
            gram[j][i] = t;
        }
    Poly cp = charpoly_matrix(std::move(gram));
    Rat det = cp.eval(Rat(0));
    if (n % 2) det = -det;
    if (det.get_den() != 1) throw math_error("field_discriminant: non-integral determinant");
    if (det.get_num() != basis.disc)
        throw math_error("field_discriminant: trace-form and index routes disagree");
    return det.get_num();
}

IndexReport element_index(const IntegralBasis& basis, const std::vector<Int>& coords) {
    const unsigned n = basis.field.n;
    if (coords.size() != n - 1)
        throw std::invalid_argument("element_index: expected n-1 coordinates x2..xn");
    bool all_zero = true;
    for (const Int& x : coords)
        if (x != 0) all_zero = false;
    if (all_zero) throw std::invalid_argument("element_index: coordinates must not all vanish");

    ElementRep alpha;
    alpha.num.assign(n, Int(0));
    for (unsigned j = 1; j < n; ++j) {
        if (coords[j - 1] == 0) continue;
        for (unsigned c = 0; c < n; ++c) alpha.num[c] += coords[j - 1] * basis.mat.at(j, c);
    }
    alpha.den = basis.den;
    alpha.canonicalize();

    Poly cp = charpoly(basis.field, alpha);
    if (!cp.has_integer_coeffs())
        throw math_error("element_index: basis element combination is not integral");
    Rat d = poly_disc(cp);
    IndexReport rep;
    rep.coords = coords;
    if (d == 0) {
        rep.index = 0;
        rep.disc_element = 0;
        rep.primitive = false;
        return rep;
    }
    rep.disc_element = d.get_num();
    Int ratio;
    Int rem;
    mpz_fdiv_qr(ratio.get_mpz_t(), rem.get_mpz_t(), rep.disc_element.get_mpz_t(),
                basis.disc.get_mpz_t());
    if (rem != 0 || ratio < 0)
        throw math_error("element_index: disc(alpha)/disc(K) is not a positive integer");
    rep.index = isqrt_exact(ratio);
    return rep;
}

}  // namespace purefields
