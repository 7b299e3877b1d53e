#ifndef PUREFIELDS_PERIODICITY_HPP
#define PUREFIELDS_PERIODICITY_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "purefields/tables.hpp"

namespace purefields {

// n0 = prod p^floor(n*h/2) over the prime powers p^h of n; shifting m by
// n0^n preserves the integral-basis structure.
Int compute_n0(unsigned n);

struct DivisibilityRecord {
    unsigned j = 0;
    Int P_j;       // coefficient polynomial value at m
    Int required;  // q^(n-j)
    bool holds = false;
};

// The coefficient conditions q^(n-j) | P_j(m) for (a0 + a1 th + ...)/q; all
// hold iff the element is an algebraic integer.  Records come in descending j.
std::vector<DivisibilityRecord> charpoly_divisibility(const PureField& field,
                                                      const std::vector<Int>& numerators,
                                                      const Int& q);

// True iff the maximal orders at m and m + n0^n have the same structure
// (identical row denominators and numerator residues).  Both values must be
// square-free.
bool check_shift_invariance(unsigned n, const Int& m);

struct ExhaustiveMode { Int range; };          // all square-free |m| <= range in the class
struct SampledMode { unsigned count; };        // first `count` square-free m >= 2
struct ResidueSweepMode { long p; };           // smallest representative per k mod p^n
using VerifyMode = std::variant<ExhaustiveMode, SampledMode, ResidueSweepMode>;

struct PeriodRecord {
    unsigned n = 0;
    long r = 0;
    Int k;
    Int m;
    std::string status;  // pass | fail | skipped-nonsquarefree
};

struct VerifyResult {
    std::vector<PatternReport> reports;
    std::vector<PeriodRecord> records;
    size_t passed = 0, failed = 0, skipped = 0;
};

std::string record_line(const PeriodRecord& rec);

VerifyResult verify_period(unsigned n, long r, const VerifyMode& mode, bool parallel = true);
void write_report(std::ostream& os, const VerifyResult& result);

// One work unit of a sweep: contiguous segments of the k space, either plain
// ranges (n <= 5) or k-residue ranges modulo p^n per prime p | n.
struct JobSegment {
    long p = 0;  // 0: plain k-range; otherwise residues mod p^n
    Int k_lo, k_hi;
};

struct PeriodJob {
    unsigned job_id = 0;
    unsigned node = 0;
    unsigned n = 0;
    long r = 0;
    std::vector<JobSegment> segments;
};

// Deterministic balanced partition: ceil(nodes/#residues) chunks per residue,
// round-robin node assignment; the jobs exactly cover the k domain.
std::vector<PeriodJob> partition_jobs(unsigned n, const std::vector<long>& residues,
                                      unsigned nodes);

std::string job_line(const PeriodJob& job);
PeriodJob parse_job_line(const std::string& line);
void write_jobs(std::ostream& os, const std::vector<PeriodJob>& jobs);
std::vector<PeriodJob> read_jobs(std::istream& is);

}  // namespace purefields

#endif
