#ifndef PUREFIELDS_NUMERIC_HPP
#define PUREFIELDS_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace purefields {

using Int = mpz_class;
using Rat = mpq_class;

// Mathematical failure (as opposed to caller misuse, which gets
// std::invalid_argument). The CLI maps the two to different exit codes.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Square-freeness cannot be decided without factoring the input.
struct uncertified_error : math_error {
    explicit uncertified_error(const std::string& what) : math_error(what) {}
};

// True iff no prime square divides m; sign is ignored.  Trial division by
// primes up to 10^6, then the cofactor is classified: below 10^18 it is a
// product of at most two primes > 10^6, so a perfect-square test settles it.
// Larger cofactors raise uncertified_error; m = 0 is rejected.
bool is_squarefree(const Int& m);

// Exact integer square root; throws math_error if a is negative or not a
// perfect square (which signals a bug upstream: every disc ratio we take
// roots of is a square by construction).
Int isqrt_exact(const Int& a);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// p-adic valuation of a != 0.
unsigned valuation(Int a, const Int& p);

// Prime factorization of small n (fits in long); pairs (p, exponent).
std::vector<std::pair<long, unsigned>> factor_small(long n);

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return a.get_si();
}

// Least non-negative residue.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Residue representative in [1, modulus] (the class tables index residues
// this way, with modulus standing in for 0).
inline long residue_rep(const Int& a, long modulus) {
    long r = to_long(mod_floor(a, Int(modulus)));
    return r == 0 ? modulus : r;
}

}  // namespace purefields

#endif
