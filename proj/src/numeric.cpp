#include "purefields/numeric.hpp"

#include <mutex>

namespace purefields {

namespace {

constexpr unsigned long kTrialBound = 1000000;

const std::vector<unsigned long>& small_primes() {
    static std::vector<unsigned long> primes;
    static std::once_flag once;
    std::call_once(once, [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        for (unsigned long p = 2; p * p <= kTrialBound; ++p)
            if (!composite[p])
                for (unsigned long q = p * p; q <= kTrialBound; q += p) composite[q] = true;
        for (unsigned long p = 2; p <= kTrialBound; ++p)
            if (!composite[p]) primes.push_back(p);
    });
    return primes;
}

}  // namespace

bool is_squarefree(const Int& m) {
    if (m == 0) throw std::invalid_argument("is_squarefree: m must be non-zero");
    Int r = abs(m);
    if (r == 1) return true;
    for (unsigned long p : small_primes()) {
        if (Int(p) * p > r) break;
        if (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
            mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
            if (mpz_divisible_ui_p(r.get_mpz_t(), p)) return false;
        }
    }
    // All prime factors of the cofactor exceed 10^6.
    if (r == 1) return true;
    if (mpz_perfect_square_p(r.get_mpz_t())) return false;
    Int bound = Int(kTrialBound);
    if (r < bound * bound) return true;             // cofactor is prime
    if (r < bound * bound * bound) return true;     // p*q with p != q (p = q excluded above)
    if (mpz_perfect_power_p(r.get_mpz_t())) return false;
    throw uncertified_error("is_squarefree: cannot certify square-freeness of large cofactor");
}

Int isqrt_exact(const Int& a) {
    if (a < 0) throw math_error("isqrt_exact: negative argument");
    Int s, rem;
    mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
    if (rem != 0) throw math_error("isqrt_exact: not a perfect square");
    return s;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

unsigned valuation(Int a, const Int& p) {
    if (a == 0) throw std::invalid_argument("valuation: zero argument");
    unsigned v = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

std::vector<std::pair<long, unsigned>> factor_small(long n) {
    if (n < 1) throw std::invalid_argument("factor_small: n must be positive");
    std::vector<std::pair<long, unsigned>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace purefields
