#include "purefields/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace purefields {

namespace {

std::vector<std::string> split_segments(const std::string& text) {
    std::vector<std::string> segs;
    std::string cur;
    bool comment = false;
    for (char ch : text) {
        if (ch == '#') comment = true;
        if (ch == '\n') comment = false;
        if (comment) continue;
        if (ch == ';') {
            segs.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    segs.push_back(cur);
    return segs;
}

}  // namespace

bool BasisPattern::covers(const Int& m) const {
    long r = residue_rep(m, static_cast<long>(n) * n);
    for (long x : residues)
        if (x == r) return true;
    return false;
}

long BasisPattern::base_residue() const {
    long base = residues[0] % modulus;
    if (base == 0) base = modulus;
    for (long r : residues) {
        long b = r % modulus;
        if (b == 0) b = modulus;
        if (b != base)
            throw math_error("pattern " + id + ": residues are not a single class mod " +
                             std::to_string(modulus));
    }
    return base;
}

Int BasisPattern::k_of(const Int& m) const {
    Int diff = m - base_residue();
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(modulus)))
        throw std::invalid_argument("pattern " + id + ": m not in class");
    return diff / modulus;
}

PatternTable PatternTable::load(const std::string& dir) {
    PatternTable table;
    table.by_n_.resize(7);
    for (unsigned n = 3; n <= 9; ++n) {
        std::string path = dir + "/basis_n" + std::to_string(n) + ".txt";
        std::ifstream in(path);
        if (!in) throw std::runtime_error("pattern table not found: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        BasisPattern cur;
        bool open = false;
        auto flush = [&] {
            if (!open) return;
            if (cur.rows.size() != n) throw std::runtime_error("pattern " + cur.id + ": expected " + std::to_string(n) + " rows");
            if (cur.modulus == 0) cur.modulus = static_cast<long>(n) * n;
            table.by_n_[n - 3].push_back(cur);
            cur = BasisPattern{};
            open = false;
        };
        for (const std::string& seg : split_segments(buf.str())) {
            std::istringstream ss(seg);
            std::string key;
            if (!(ss >> key)) continue;
            if (key == "case") {
                flush();
                open = true;
                ss >> cur.id;
                cur.n = n;
            } else if (key == "residues") {
                long r;
                while (ss >> r) cur.residues.push_back(r);
            } else if (key == "mod") {
                ss >> cur.modulus;
            } else if (key == "row") {
                ElementRep e;
                std::string q, colon, a;
                ss >> q >> colon;
                if (colon != ":") throw std::runtime_error("pattern row: expected ':'");
                e.den = Int(q);
                while (ss >> a) e.num.emplace_back(a);
                if (e.num.size() != n) throw std::runtime_error("pattern row: expected " + std::to_string(n) + " coefficients");
                cur.rows.push_back(std::move(e));
            } else if (key == "disc") {
                std::string sign, cst, mpow;
                ss >> sign >> cst >> mpow;
                cur.disc_sign = (sign == "-") ? -1 : 1;
                cur.disc_const = Int(cst);
                if (mpow.rfind("m^", 0) != 0) throw std::runtime_error("pattern disc: expected m^<e>");
                cur.disc_exp = static_cast<unsigned>(std::stoul(mpow.substr(2)));
            } else {
                throw std::runtime_error("pattern table: unknown key '" + key + "'");
            }
        }
        flush();
    }
    return table;
}

const BasisPattern& PatternTable::lookup(unsigned n, const Int& m) const {
    if (n < 3 || n > 9) throw std::invalid_argument("lookup_pattern: n must be in [3, 9]");
    for (const BasisPattern& p : by_n_[n - 3])
        if (p.covers(m)) return p;
    throw math_error("lookup_pattern: inconsistent residue (m shares a square factor with n)");
}

const BasisPattern& PatternTable::by_id(const std::string& id) const {
    for (const auto& vec : by_n_)
        for (const BasisPattern& p : vec)
            if (p.id == id) return p;
    throw std::invalid_argument("unknown pattern id: " + id);
}

const std::vector<BasisPattern>& PatternTable::for_degree(unsigned n) const {
    if (n < 3 || n > 9) throw std::invalid_argument("for_degree: n must be in [3, 9]");
    return by_n_[n - 3];
}

const PatternTable& patterns() {
    static PatternTable table;
    static std::once_flag once;
    std::call_once(once, [] {
        const char* env = std::getenv("PUREFIELDS_DATA");
        table = PatternTable::load(env ? env : PUREFIELDS_DEFAULT_DATA_DIR);
    });
    return table;
}

std::vector<long> omitted_residues(unsigned n) {
    std::vector<long> out;
    long n2 = static_cast<long>(n) * n;
    for (long r = 1; r <= n2; ++r) {
        bool omit = false;
        for (auto& [p, e] : factor_small(static_cast<long>(n)))
            if (r % (p * p) == 0) omit = true;
        if (omit) out.push_back(r);
    }
    return out;
}

const BasisPattern& lookup_pattern(unsigned n, const Int& m) { return patterns().lookup(n, m); }

IntegralBasis instantiate(const BasisPattern& pattern, const Int& m, bool formal) {
    if (!pattern.covers(m))
        throw std::invalid_argument("instantiate: m is not in the residue class of pattern " +
                                    pattern.id);
    IntegralBasis basis = basis_from_rows(pattern.n, m, pattern.rows, formal);
    Int formula = pattern.disc(m);
    if (basis.disc != formula)
        throw math_error("instantiate: pattern " + pattern.id +
                         " disc formula disagrees with lattice determinant");
    return basis;
}

bool PatternReport::ok() const {
    if (!disc_match || !structure_match) return false;
    for (bool b : integral)
        if (!b) return false;
    return true;
}

PatternReport validate_pattern(const BasisPattern& pattern, const Int& m) {
    PatternReport rep;
    rep.pattern_id = pattern.id;
    rep.m = m;
    PureField field = checked_field(pattern.n, m);
    for (const ElementRep& row : pattern.rows)
        rep.integral.push_back(is_algebraic_integer(field, row));
    IntegralBasis inst = instantiate(pattern, m);
    IntegralBasis mo = maximal_order(field);
    rep.disc_match = (mo.disc == pattern.disc(m));
    rep.structure_match = (mo.den == inst.den && mo.mat == inst.mat);
    return rep;
}

}  // namespace purefields
