#ifndef PUREFIELDS_POLY_HPP
#define PUREFIELDS_POLY_HPP

#include <string>
#include <vector>

#include "purefields/numeric.hpp"

namespace purefields {

// Dense univariate polynomial over Q, canonical form: no trailing zero
// coefficients, zero polynomial = empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& a);
    // x^n with rational coefficient.
    static Poly monomial(const Rat& a, size_t n);
    // x^n - m, the defining polynomial of an n-th root of m.
    static Poly pure(unsigned n, const Int& m);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool has_integer_coeffs() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& a) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    // Euclidean remainder of *this by o (o non-zero).
    Poly rem(const Poly& o) const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Resultant of f and g, exact, via the Euclidean remainder sequence over Q.
Rat resultant(const Poly& f, const Poly& g);

// Discriminant (-1)^(d(d-1)/2) res(p, p') / lc(p); requires deg p >= 2.
Rat poly_disc(const Poly& p);

}  // namespace purefields

#endif
