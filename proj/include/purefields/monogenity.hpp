#ifndef PUREFIELDS_MONOGENITY_HPP
#define PUREFIELDS_MONOGENITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "purefields/tables.hpp"

namespace purefields {

// Residue family m = residue + k*modulus; modulus may refine the pattern
// class (e.g. mod 32 splits for the quartic case 4.2).
struct ResidueClass {
    long residue = 0;
    long modulus = 0;
};

struct SolvabilityResult {
    bool solvable = false;
    std::vector<long> witness_x;  // x2..xn residues mod q when solvable
    long witness_k = 0;
};

// Index form equation modulo q for the whole class: enumerates x2..xn and k
// over [0, q); the index at fixed coordinates is an integer polynomial in k,
// so exact evaluation at m = residue + k*modulus decides the congruence
// I == +-1 (mod q) for every field of the class.
SolvabilityResult index_form_solvable_mod(unsigned n, const ResidueClass& cls, unsigned long q,
                                          bool parallel = true);

enum class Verdict { Monogenic, NotMonogenic, Unknown };
enum class Reason {
    PowerBasis,
    Witness,
    ModQObstruction,
    DivisibilityObstruction,
    PaperTheorem,
    Conjecture,
    Open,
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

struct Classification {
    Verdict verdict = Verdict::Unknown;
    Reason reason = Reason::Open;
    unsigned long obstruction_q = 0;              // for ModQObstruction
    std::string obstruction_case;                 // for DivisibilityObstruction
    std::optional<std::vector<Int>> witness;      // verified index-1 generator coords
    std::string conjecture;                       // attached conjecture text, if any
};

// Decision tree over the residue-class case list.  Monogenic verdicts are
// re-checked through element_index == 1; mod-q verdicts are backed by a
// fresh (memoized per class) solvability sweep.
Classification classify(unsigned n, const Int& m);

struct SearchReport {
    unsigned long bound = 0;
    Int best_index;   // minimum index over primitive elements of the box
    std::vector<Int> best_coords;
    unsigned long index_one_count = 0;
    unsigned long searched = 0;
};

// Enumerates coords in [-B, B]^(n-1) up to the sign symmetry (first non-zero
// coordinate positive) and minimizes the element index.
SearchReport search_small_index(const PureField& field, unsigned long bound,
                                bool parallel = true);

}  // namespace purefields

#endif
