#ifndef PUREFIELDS_FORMS_HPP
#define PUREFIELDS_FORMS_HPP

#include <string>
#include <vector>

#include "purefields/numeric.hpp"

namespace purefields {

// Sparse multivariate polynomial with integer coefficients in the variables
// x2..xn plus one parameter slot (m or k, depending on the case).
class MPoly {
  public:
    struct Term {
        long coeff;
        std::vector<unsigned> xexp;  // exponents of x2..xn
        unsigned pexp;               // exponent of the parameter
    };

    MPoly() = default;
    // Parses e.g. "3*x2^3 + 3*x2^2*x3 + x2*x3^2 - k*x3^3"; the parameter
    // letter is 'm' or 'k', nvars = n-1 variables x2..xn.
    static MPoly parse(const std::string& text, unsigned nvars, char param);

    Int eval(const std::vector<Int>& coords, const Int& param) const;
    unsigned total_x_degree() const;  // max over terms, x-variables only
    const std::vector<Term>& terms() const { return terms_; }
    unsigned nvars() const { return nvars_; }

  private:
    std::vector<Term> terms_;
    unsigned nvars_ = 0;
};

// Index form transcribed from the explicit per-case displays, as a product
// of one or more factors.
struct ExplicitForm {
    std::string case_id;
    char param;  // 'm' or 'k'
    std::vector<MPoly> factors;

    Int param_value(const Int& m) const;  // m itself, or k with m = base + k*M
    // Values of the individual factors at integer coords for the field m.
    std::vector<Int> factor_values_at(const std::vector<Int>& coords, const Int& m) const;
    Int value(const std::vector<Int>& coords, const Int& m) const;  // product
};

// Cases with a printed index form: 3.1, 3.2, 3.3, 4.1, 4.2, 4.3, 5.1, 6.1.
// Throws math_error("no explicit form printed") for any other case.
const ExplicitForm& explicit_index_form(unsigned n, const std::string& case_id);

}  // namespace purefields

#endif
