#include "purefields/poly.hpp"

#include <sstream>

namespace purefields {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& a) {
    Poly p;
    if (a != 0) p.c_ = {a};
    return p;
}

Poly Poly::monomial(const Rat& a, size_t n) {
    Poly p;
    if (a != 0) {
        p.c_.assign(n + 1, Rat(0));
        p.c_[n] = a;
    }
    return p;
}

Poly Poly::pure(unsigned n, const Int& m) {
    Poly p;
    p.c_.assign(n + 1, Rat(0));
    p.c_[0] = Rat(-m);
    p.c_[n] = 1;
    return p;
}

bool Poly::has_integer_coeffs() const {
    for (const Rat& a : c_)
        if (a.get_den() != 1) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> r(c_);
    for (Rat& a : r) a = -a;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& a) const {
    std::vector<Rat> r(c_);
    for (Rat& x : r) x *= a;
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Poly Poly::rem(const Poly& o) const {
    if (o.is_zero()) throw std::invalid_argument("poly rem: division by zero polynomial");
    std::vector<Rat> r(c_);
    const int dg = o.degree();
    while (static_cast<int>(r.size()) - 1 >= dg) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dg) break;
        Rat q = r.back() / o.leading();
        size_t shift = r.size() - 1 - dg;
        for (int i = 0; i <= dg; ++i) r[shift + i] -= q * o[i];
        r.pop_back();
    }
    return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) os << "-", a = -a;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Rat resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) {
        // res(f, c) = c^deg f for constants; res with 0 is 0 unless both constant.
        if (f.degree() <= 0 && g.degree() <= 0) return Rat(1);
        return Rat(0);
    }
    Poly a = f, b = g;
    Rat acc(1);
    bool swapped = false;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((f.degree() * g.degree()) % 2) acc = -acc;
        swapped = true;
    }
    (void)swapped;
    while (b.degree() > 0) {
        Poly r = a.rem(b);
        Rat lb = b.leading();
        int dr = r.is_zero() ? -1 : r.degree();
        if (r.is_zero()) return Rat(0);
        Rat p;
        mpz_pow_ui(p.get_num().get_mpz_t(), lb.get_num().get_mpz_t(), a.degree() - dr);
        mpz_pow_ui(p.get_den().get_mpz_t(), lb.get_den().get_mpz_t(), a.degree() - dr);
        p.canonicalize();
        acc *= p;
        if ((a.degree() * b.degree()) % 2) acc = -acc;
        a = b;
        b = r;
    }
    // b is a non-zero constant now: res(a, b) = b^deg a.
    Rat lb = b.leading(), p;
    mpz_pow_ui(p.get_num().get_mpz_t(), lb.get_num().get_mpz_t(), a.degree());
    mpz_pow_ui(p.get_den().get_mpz_t(), lb.get_den().get_mpz_t(), a.degree());
    p.canonicalize();
    return acc * p;
}

Rat poly_disc(const Poly& p) {
    if (p.degree() < 2) throw std::invalid_argument("poly_disc: degree must be >= 2");
    const int d = p.degree();
    Rat r = resultant(p, p.derivative()) / p.leading();
    if ((d * (d - 1) / 2) % 2) r = -r;
    return r;
}

}  // namespace purefields
