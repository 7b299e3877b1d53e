#include "purefields/periodicity.hpp"

#include <ostream>
#include <sstream>

#include "purefields/sweep.hpp"

namespace purefields {

Int compute_n0(unsigned n) {
    if (n < 2) throw std::invalid_argument("compute_n0: n must be >= 2");
    Int n0(1);
    for (auto& [p, h] : factor_small(static_cast<long>(n)))
        n0 *= pow_int(Int(p), n * h / 2);
    return n0;
}

std::vector<DivisibilityRecord> charpoly_divisibility(const PureField& field,
                                                      const std::vector<Int>& numerators,
                                                      const Int& q) {
    if (q < 1) throw std::invalid_argument("charpoly_divisibility: q must be >= 1");
    const unsigned n = field.n;
    // P_j(m) are the charpoly coefficients of the numerator element.
    Poly cp = charpoly(field, ElementRep{numerators, Int(1)});
    std::vector<DivisibilityRecord> records;
    for (unsigned j = n; j-- > 0;) {
        DivisibilityRecord rec;
        rec.j = j;
        Rat c = cp[j];
        if (c.get_den() != 1)
            throw math_error("charpoly_divisibility: non-integral numerator charpoly");
        rec.P_j = c.get_num();
        rec.required = pow_int(q, n - j);
        rec.holds = mpz_divisible_p(rec.P_j.get_mpz_t(), rec.required.get_mpz_t());
        records.push_back(std::move(rec));
    }
    return records;
}

bool check_shift_invariance(unsigned n, const Int& m) {
    Int shift = pow_int(compute_n0(n), n);
    Int m2 = m + shift;
    PureField f1 = checked_field(n, m);
    PureField f2 = checked_field(n, m2);
    return maximal_order(f1).structure_signature() == maximal_order(f2).structure_signature();
}

std::string record_line(const PeriodRecord& rec) {
    std::ostringstream os;
    os << "n=" << rec.n << " r=" << rec.r << " k=" << rec.k.get_str()
       << " m=" << rec.m.get_str() << " status=" << rec.status;
    return os.str();
}

namespace {

struct Candidate {
    Int k, m;
    bool squarefree;
};

bool usable(const Int& m) { return m != 0 && m != 1 && m != -1 && is_squarefree(m); }

// Candidate list per mode; skipped progression members are kept for the log.
std::vector<Candidate> select_candidates(unsigned n, long r, const VerifyMode& mode) {
    const long n2 = static_cast<long>(n) * n;
    std::vector<Candidate> out;
    if (const auto* ex = std::get_if<ExhaustiveMode>(&mode)) {
        Int k_lo = (-(ex->range) - r) / n2 - 1;
        Int k_hi = (ex->range - r) / n2 + 1;
        for (Int k = k_lo; k <= k_hi; ++k) {
            Int m = r + k * n2;
            if (abs(m) > ex->range || m == 0 || m == 1 || m == -1) continue;
            out.push_back({k, m, is_squarefree(m)});
        }
    } else if (const auto* sm = std::get_if<SampledMode>(&mode)) {
        unsigned found = 0;
        for (Int k(0); found < sm->count; ++k) {
            Int m = r + k * n2;
            if (m < 2) continue;
            bool sf = is_squarefree(m);
            out.push_back({k, m, sf});
            if (sf) ++found;
        }
    } else {
        const auto& rs = std::get<ResidueSweepMode>(mode);
        Int pn = pow_int(Int(rs.p), n);
        for (Int kappa(0); kappa < pn; ++kappa) {
            for (Int k = kappa;; k += pn) {
                Int m = r + k * n2;
                if (m < 2) continue;
                bool sf = is_squarefree(m);
                out.push_back({k, m, sf});
                if (sf) break;
            }
        }
    }
    return out;
}

}  // namespace

VerifyResult verify_period(unsigned n, long r, const VerifyMode& mode, bool parallel) {
    const BasisPattern& pattern = patterns().lookup(n, Int(r));
    std::vector<Candidate> cands = select_candidates(n, r, mode);

    VerifyResult result;
    result.records.resize(cands.size());
    std::vector<PatternReport> reports(cands.size());
    std::vector<char> has_report(cands.size(), 0);

    sweep::run(
        cands.size(),
        [&](size_t i) {
            const Candidate& c = cands[i];
            PeriodRecord rec{n, r, c.k, c.m, "skipped-nonsquarefree"};
            if (c.squarefree) {
                PatternReport rep = validate_pattern(pattern, c.m);
                rec.status = rep.ok() ? "pass" : "fail";
                reports[i] = std::move(rep);
                has_report[i] = 1;
            }
            result.records[i] = std::move(rec);
        },
        parallel);

    for (size_t i = 0; i < cands.size(); ++i) {
        if (has_report[i]) result.reports.push_back(std::move(reports[i]));
        if (result.records[i].status == "pass")
            ++result.passed;
        else if (result.records[i].status == "fail")
            ++result.failed;
        else
            ++result.skipped;
    }
    return result;
}

void write_report(std::ostream& os, const VerifyResult& result) {
    for (const PeriodRecord& rec : result.records) os << record_line(rec) << "\n";
}

std::vector<PeriodJob> partition_jobs(unsigned n, const std::vector<long>& residues,
                                      unsigned nodes) {
    if (nodes < 1) throw std::invalid_argument("partition_jobs: nodes must be >= 1");
    if (residues.empty()) throw std::invalid_argument("partition_jobs: no residues");

    // k domain per residue: plain range up to n0^n / n^2 for n <= 5, or the
    // concatenated k-residue spaces mod p^n for each p | n.
    std::vector<JobSegment> domain;
    if (n <= 5) {
        Int total = pow_int(compute_n0(n), n) / (static_cast<long>(n) * n);
        domain.push_back({0, Int(0), total});
    } else {
        for (auto& [p, h] : factor_small(static_cast<long>(n)))
            domain.push_back({p, Int(0), pow_int(Int(p), n)});
    }
    Int domain_size(0);
    for (const JobSegment& s : domain) domain_size += s.k_hi - s.k_lo;

    unsigned chunks = (nodes + residues.size() - 1) / residues.size();
    if (chunks == 0) chunks = 1;

    std::vector<PeriodJob> jobs;
    unsigned id = 0;
    for (long r : residues) {
        // Split the concatenated domain into `chunks` near-equal pieces.
        Int base = domain_size / static_cast<long>(chunks);
        Int extra = domain_size % static_cast<long>(chunks);
        size_t seg = 0;
        Int seg_pos = domain[0].k_lo;
        for (unsigned c = 0; c < chunks; ++c) {
            Int want = base + (Int(c) < extra ? 1 : 0);
            PeriodJob job;
            job.job_id = id;
            job.node = id % nodes;
            job.n = n;
            job.r = r;
            while (want > 0 && seg < domain.size()) {
                Int avail = domain[seg].k_hi - seg_pos;
                Int take = avail < want ? avail : want;
                if (take > 0)
                    job.segments.push_back({domain[seg].p, seg_pos, seg_pos + take});
                seg_pos += take;
                want -= take;
                if (seg_pos == domain[seg].k_hi) {
                    ++seg;
                    if (seg < domain.size()) seg_pos = domain[seg].k_lo;
                }
            }
            jobs.push_back(std::move(job));
            ++id;
        }
    }
    return jobs;
}

std::string job_line(const PeriodJob& job) {
    std::ostringstream os;
    os << "job=" << job.job_id << " node=" << job.node << " n=" << job.n << " r=" << job.r
       << " seg=";
    for (size_t i = 0; i < job.segments.size(); ++i) {
        if (i) os << ",";
        os << job.segments[i].p << ":" << job.segments[i].k_lo.get_str() << ":"
           << job.segments[i].k_hi.get_str();
    }
    return os.str();
}

PeriodJob parse_job_line(const std::string& line) {
    PeriodJob job;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad job line: " + line);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "job")
            job.job_id = std::stoul(val);
        else if (key == "node")
            job.node = std::stoul(val);
        else if (key == "n")
            job.n = std::stoul(val);
        else if (key == "r")
            job.r = std::stol(val);
        else if (key == "seg") {
            std::istringstream segs(val);
            std::string one;
            while (std::getline(segs, one, ',')) {
                auto c1 = one.find(':');
                auto c2 = one.find(':', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw std::invalid_argument("bad job segment: " + one);
                JobSegment s;
                s.p = std::stol(one.substr(0, c1));
                s.k_lo = Int(one.substr(c1 + 1, c2 - c1 - 1));
                s.k_hi = Int(one.substr(c2 + 1));
                job.segments.push_back(std::move(s));
            }
        }
    }
    return job;
}

void write_jobs(std::ostream& os, const std::vector<PeriodJob>& jobs) {
    for (const PeriodJob& j : jobs) os << job_line(j) << "\n";
}

std::vector<PeriodJob> read_jobs(std::istream& is) {
    std::vector<PeriodJob> jobs;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) jobs.push_back(parse_job_line(line));
    return jobs;
}

}  // namespace purefields
