#ifndef PUREFIELDS_TABLES_HPP
#define PUREFIELDS_TABLES_HPP

#include <string>
#include <vector>

#include "purefields/order.hpp"

namespace purefields {

// Symbolic integral-basis template for one residue class family of m mod n^2.
struct BasisPattern {
    std::string id;               // "3.1" ... "9.5"
    unsigned n = 0;
    std::vector<long> residues;   // covered r mod n^2, in [1, n^2]
    long modulus = 0;             // natural modulus M (n^2 or the coarser class the case merges to)
    std::vector<ElementRep> rows; // numerators are m-independent integers
    int disc_sign = 1;
    Int disc_const;
    unsigned disc_exp = 0;

    Int disc(const Int& m) const { return Int(disc_sign) * disc_const * pow_int(m, disc_exp); }
    bool covers(const Int& m) const;
    // Parameter k with m = base + k*modulus, base = smallest residue mod modulus.
    Int k_of(const Int& m) const;
    long base_residue() const;
};

class PatternTable {
  public:
    // Parses one file per n from `dir` (basis_n3.txt .. basis_n9.txt).
    static PatternTable load(const std::string& dir);

    const BasisPattern& lookup(unsigned n, const Int& m) const;
    const BasisPattern& by_id(const std::string& id) const;
    const std::vector<BasisPattern>& for_degree(unsigned n) const;

  private:
    std::vector<std::vector<BasisPattern>> by_n_;  // index n-3
};

// Default table, loaded once from $PUREFIELDS_DATA or the built-in data dir.
const PatternTable& patterns();

// Residues r in [1, n^2] sharing a square factor with n (no square-free m
// falls in them).
std::vector<long> omitted_residues(unsigned n);

const BasisPattern& lookup_pattern(unsigned n, const Int& m);

// Concrete basis for m in the pattern's class; disc set from the pattern
// formula and cross-checked against the lattice determinant.  `formal`
// allows non-square-free m (integer index values are polynomial in the class
// parameter, so formal instantiation is sound for modular sweeps).
IntegralBasis instantiate(const BasisPattern& pattern, const Int& m, bool formal = false);

struct PatternReport {
    std::string pattern_id;
    Int m;
    std::vector<bool> integral;  // per row
    bool disc_match = false;
    bool structure_match = false;
    bool ok() const;
};

// Checks the pattern against the from-scratch maximal order at m: every row
// integral, formula disc equal, and identical canonical HNF structure.
PatternReport validate_pattern(const BasisPattern& pattern, const Int& m);

}  // namespace purefields

#endif
