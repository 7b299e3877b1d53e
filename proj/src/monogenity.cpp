#include "purefields/monogenity.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <tuple>

#include "purefields/sweep.hpp"

namespace purefields {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Monogenic: return "Monogenic";
        case Verdict::NotMonogenic: return "NotMonogenic";
        default: return "Unknown";
    }
}

std::string to_string(Reason r) {
    switch (r) {
        case Reason::PowerBasis: return "power-basis";
        case Reason::Witness: return "witness";
        case Reason::ModQObstruction: return "mod-q-obstruction";
        case Reason::DivisibilityObstruction: return "divisibility-obstruction";
        case Reason::PaperTheorem: return "paper-theorem";
        case Reason::Conjecture: return "conjecture";
        default: return "open";
    }
}

SolvabilityResult index_form_solvable_mod(unsigned n, const ResidueClass& cls, unsigned long q,
                                          bool parallel) {
    if (q < 2) throw std::invalid_argument("index_form_solvable_mod: q must be >= 2");
    if (cls.residue < 1 || cls.modulus < 1)
        throw std::invalid_argument("index_form_solvable_mod: bad residue class");

    const BasisPattern& pat = lookup_pattern(n, Int(cls.residue));
    std::vector<IntegralBasis> bases;
    for (unsigned long k = 0; k < q; ++k) {
        Int mk = Int(cls.residue) + Int(cls.modulus) * static_cast<long>(k);
        const BasisPattern& pk = lookup_pattern(n, mk);
        if (pk.id != pat.id)
            throw std::invalid_argument(
                "index_form_solvable_mod: class crosses pattern boundaries");
        bases.push_back(instantiate(pk, mk, /*formal=*/true));
    }

    size_t tuples = 1;
    for (unsigned i = 0; i + 1 < n; ++i) tuples *= q;

    std::mutex mu;
    std::vector<std::pair<size_t, long>> hits;  // (tuple index, k)
    sweep::run(
        tuples,
        [&](size_t ti) {
            if (ti == 0) return;  // all-zero coordinates
            std::vector<Int> coords(n - 1);
            size_t rest = ti;
            for (unsigned i = 0; i + 1 < n; ++i) {
                coords[i] = static_cast<long>(rest % q);
                rest /= q;
            }
            for (unsigned long k = 0; k < q; ++k) {
                IndexReport rep = element_index(bases[k], coords);
                if (rep.index == 0) continue;
                unsigned long r = mpz_fdiv_ui(rep.index.get_mpz_t(), q);
                if (r == 1 || r == q - 1) {
                    std::lock_guard<std::mutex> lock(mu);
                    hits.emplace_back(ti, static_cast<long>(k));
                }
            }
        },
        parallel);

    SolvabilityResult res;
    if (hits.empty()) return res;
    auto best = *std::min_element(hits.begin(), hits.end());
    res.solvable = true;
    res.witness_k = best.second;
    size_t rest = best.first;
    for (unsigned i = 0; i + 1 < n; ++i) {
        res.witness_x.push_back(static_cast<long>(rest % q));
        rest /= q;
    }
    return res;
}

namespace {

// The paper's mod-q sweeps, memoized; a NotMonogenic verdict must always be
// backed by an actual run.
bool class_unsolvable(unsigned n, long residue, long modulus, unsigned long q) {
    static std::map<std::tuple<unsigned, long, long, unsigned long>, bool> cache;
    static std::mutex mu;
    auto key = std::make_tuple(n, residue, modulus, q);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool unsolvable = !index_form_solvable_mod(n, ResidueClass{residue, modulus}, q).solvable;
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = unsolvable;
    return unsolvable;
}

Classification monogenic_with_witness(const PureField& field, std::vector<Int> witness,
                                      Reason reason) {
    IntegralBasis basis = maximal_order(field);
    IndexReport rep = element_index(basis, witness);
    if (rep.index != 1)
        throw math_error("classify: recorded witness does not have index one");
    Classification c;
    c.verdict = Verdict::Monogenic;
    c.reason = reason;
    c.witness = std::move(witness);
    return c;
}

Classification not_monogenic_mod_q(unsigned n, long residue, long modulus, unsigned long q) {
    if (!class_unsolvable(n, residue, modulus, q))
        throw math_error("classify: expected mod-" + std::to_string(q) +
                         " obstruction is absent");
    Classification c;
    c.verdict = Verdict::NotMonogenic;
    c.reason = Reason::ModQObstruction;
    c.obstruction_q = q;
    return c;
}

Classification not_monogenic_divisibility(const std::string& case_id) {
    Classification c;
    c.verdict = Verdict::NotMonogenic;
    c.reason = Reason::DivisibilityObstruction;
    c.obstruction_case = case_id;
    return c;
}

Classification unknown_conjecture(const std::string& text) {
    Classification c;
    c.verdict = Verdict::Unknown;
    c.reason = Reason::Conjecture;
    c.conjecture = text;
    return c;
}

std::vector<Int> power_generator_coords(unsigned n) {
    std::vector<Int> w(n - 1, Int(0));
    w[0] = 1;  // alpha = theta
    return w;
}

}  // namespace

Classification classify(unsigned n, const Int& m) {
    PureField field = checked_field(n, m);
    const BasisPattern& pat = lookup_pattern(n, m);
    const std::string& id = pat.id;
    const bool power_case = id == "3.1" || id == "4.1" || id == "5.1" || id == "6.1" ||
                            id == "7.1" || id == "8.1" || id == "9.1";
    if (power_case) return monogenic_with_witness(field, power_generator_coords(n), Reason::PowerBasis);

    if (n == 4) {
        if (m == 73 || m == 89) return monogenic_with_witness(field, {Int(2), Int(1), Int(1)}, Reason::Witness);
        if (m == -3) return monogenic_with_witness(field, {Int(1), Int(1), Int(0)}, Reason::Witness);
        if (id == "4.2") {
            if (residue_rep(m, 16) == 1) return not_monogenic_mod_q(4, 1, 16, 2);
            return unknown_conjecture(
                "for m = 9+16k the only monogenic fields are m = 73 and m = 89; "
                "the minimal index is conjectured to be 8 otherwise");
        }
        return not_monogenic_divisibility("4.3");
    }
    if (n == 5) {
        if (m == 7) return monogenic_with_witness(field, {Int(0), Int(-2), Int(-1), Int(2)}, Reason::Witness);
        return unknown_conjecture(
            "conjectured not monogenic with minimal index 5 (classes r = 1, 7, 18, 24)");
    }
    if (n == 6) {
        long r = residue_rep(m, 36);
        if (id == "6.2") return not_monogenic_mod_q(6, r, 36, 2);
        if (id == "6.3") return not_monogenic_mod_q(6, r, 36, 3);
        if (id == "6.4") return not_monogenic_divisibility("6.4");
        if (id == "6.5") return not_monogenic_mod_q(6, r, 36, 6);
        if (id == "6.6") return not_monogenic_mod_q(6, r, 36, 3);
    }
    if (n == 8) {
        if (m == -3) return monogenic_with_witness(
            field, {Int(-1), Int(-1), Int(0), Int(1), Int(1), Int(0), Int(-1)}, Reason::Witness);
        if (id == "8.2") {
            Classification c;
            c.verdict = Verdict::NotMonogenic;
            c.reason = Reason::PaperTheorem;
            c.conjecture = "the minimal index of these fields is conjectured to be 128";
            return c;
        }
        if (id == "8.3") {
            if (m == 5) return unknown_conjecture("the minimal index of m = 5 is conjectured to be 16");
            return not_monogenic_divisibility("8.3");
        }
        if (id == "8.4") return not_monogenic_divisibility("8.4");
    }
    Classification c;  // cubic 3.2/3.3, septic and nonic non-power classes
    c.verdict = Verdict::Unknown;
    c.reason = Reason::Open;
    return c;
}

SearchReport search_small_index(const PureField& field, unsigned long bound, bool parallel) {
    if (bound < 1) throw std::invalid_argument("search_small_index: bound must be >= 1");
    const unsigned n = field.n;
    IntegralBasis basis = maximal_order(field);

    const unsigned long side = 2 * bound + 1;
    size_t total = 1;
    for (unsigned i = 0; i + 1 < n; ++i) {
        total *= side;
        if (total > (size_t(1) << 33))
            throw std::invalid_argument("search_small_index: box too large");
    }

    SearchReport best;
    best.bound = bound;
    std::atomic<unsigned long> ones{0}, searched{0};
    std::mutex mu;
    sweep::run(
        total,
        [&](size_t ti) {
            std::vector<Int> coords(n - 1);
            size_t rest = ti;
            long lead = 0;
            for (unsigned i = 0; i + 1 < n; ++i) {
                long v = static_cast<long>(rest % side) - static_cast<long>(bound);
                rest /= side;
                coords[i] = v;
                if (lead == 0) lead = v;
            }
            if (lead <= 0) return;  // canonical sign representatives only
            IndexReport rep = element_index(basis, coords);
            searched.fetch_add(1, std::memory_order_relaxed);
            if (!rep.primitive) return;
            if (rep.index == 1) ones.fetch_add(1, std::memory_order_relaxed);
            std::lock_guard<std::mutex> lock(mu);
            if (best.best_coords.empty() || rep.index < best.best_index ||
                (rep.index == best.best_index && coords < best.best_coords)) {
                best.best_index = rep.index;
                best.best_coords = coords;
            }
        },
        parallel);
    best.index_one_count = ones.load();
    best.searched = searched.load();
    return best;
}

}  // namespace purefields
