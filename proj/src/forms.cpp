#include "purefields/forms.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "purefields/tables.hpp"

namespace purefields {

MPoly MPoly::parse(const std::string& text, unsigned nvars, char param) {
    MPoly poly;
    poly.nvars_ = nvars;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        Term t{sign, std::vector<unsigned>(nvars, 0), 0};
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                long v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + (text[i++] - '0');
                t.coeff *= v;
                saw_factor = true;
            } else if (i < text.size() && (text[i] == 'x' || text[i] == param)) {
                unsigned* slot;
                if (text[i] == 'x') {
                    ++i;
                    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                        throw std::invalid_argument("MPoly::parse: expected variable index");
                    unsigned idx = text[i++] - '0';
                    if (idx < 2 || idx - 2 >= nvars)
                        throw std::invalid_argument("MPoly::parse: variable out of range");
                    slot = &t.xexp[idx - 2];
                } else {
                    ++i;
                    slot = &t.pexp;
                }
                unsigned e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    e = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        e = e * 10 + (text[i++] - '0');
                }
                *slot += e;
                saw_factor = true;
            } else {
                throw std::invalid_argument("MPoly::parse: unexpected character at " +
                                            std::to_string(i));
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw std::invalid_argument("MPoly::parse: empty term");
        poly.terms_.push_back(std::move(t));
        skip_ws();
    }
    return poly;
}

Int MPoly::eval(const std::vector<Int>& coords, const Int& param) const {
    if (coords.size() != nvars_) throw std::invalid_argument("MPoly::eval: wrong coord count");
    Int acc(0);
    for (const Term& t : terms_) {
        Int v(t.coeff);
        for (unsigned j = 0; j < nvars_; ++j)
            if (t.xexp[j]) v *= pow_int(coords[j], t.xexp[j]);
        if (t.pexp) v *= pow_int(param, t.pexp);
        acc += v;
    }
    return acc;
}

unsigned MPoly::total_x_degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) {
        unsigned s = 0;
        for (unsigned e : t.xexp) s += e;
        d = std::max(d, s);
    }
    return d;
}

Int ExplicitForm::param_value(const Int& m) const {
    if (param == 'm') return m;
    return patterns().by_id(case_id).k_of(m);
}

std::vector<Int> ExplicitForm::factor_values_at(const std::vector<Int>& coords,
                                                const Int& m) const {
    Int p = param_value(m);
    std::vector<Int> vals;
    for (const MPoly& f : factors) vals.push_back(f.eval(coords, p));
    return vals;
}

Int ExplicitForm::value(const std::vector<Int>& coords, const Int& m) const {
    Int acc(1);
    for (const Int& v : factor_values_at(coords, m)) acc *= v;
    return acc;
}

namespace {

std::map<std::string, ExplicitForm> build_explicit_forms() {
    std::map<std::string, ExplicitForm> forms;
    auto add = [&](const std::string& id, unsigned nvars, char param,
                   std::vector<std::string> factor_texts) {
        ExplicitForm f;
        f.case_id = id;
        f.param = param;
        for (const std::string& text : factor_texts) f.factors.push_back(MPoly::parse(text, nvars, param));
        forms.emplace(id, std::move(f));
    };

    add("3.1", 2, 'm', {"x2^3 - m*x3^3"});
    add("3.2", 2, 'k', {"3*x2^3 + 3*x2^2*x3 + x2*x3^2 - k*x3^3"});
    add("3.3", 2, 'k', {"3*x2^3 + 6*x2^2*x3 + 4*x2*x3^2 - k*x3^3"});

    add("4.1", 3, 'm',
        {"x2^2 - m*x4^2",
         "x2^4 + 2*m*x2^2*x4^2 + m^2*x4^4 + 4*m*x3^4 - 8*m*x2*x4*x3^2"});
    add("4.2", 3, 'k',
        {"-x2*x4 - 2*x2^2 + x4^2*k",
         "x4^4*k^2 - 2*x4^3*x2*k - 16*x4^2*x3*x2*k + 4*x4^2*x2^2*k + 8*x4^2*x3^2*k"
         " - 16*x4*x3^2*x2*k + 16*x4*x3^3*k + 8*x3^4*k"
         " + 2*x4^2*x2^2 - 2*x4^2*x3*x2 + x4^2*x3^2 - 2*x4*x3^2*x2 + 4*x2^3*x4"
         " + 2*x4*x3^3 + x3^4 + 4*x2^4"});
    add("4.3", 3, 'k',
        {"-x2*x4 - x2^2 + 2*x4^2*k + x4^2",
         "16*x4^4*k^2 + 24*x4^4*k + 16*x4^3*x2*k - 16*x4^2*x3^2*k + 16*x4^2*x2^2*k"
         " - 32*x4*x3^2*x2*k + 8*x3^4*k"
         " + 9*x4^4 + 12*x4^3*x2 - 10*x4^2*x3^2 + 16*x4^2*x2^2 + 8*x2^3*x4"
         " - 20*x4*x3^2*x2 + 4*x2^4 + 5*x3^4"});

    add("5.1", 4, 'm',
        {"-75*m^4*x2*x3^2*x4^3*x5^4 + 45*m^4*x2^2*x3*x4^2*x5^5 + 40*m^4*x2*x3^3*x4*x5^5"
         " - 40*m^4*x2*x3*x4^5*x5^3"
         " - 75*m^2*x2^4*x3^3*x4^2*x5 - 40*m^2*x2^3*x3^5*x4*x5 + 45*m^2*x2^5*x3^2*x4*x5^2"
         " + 40*m^2*x2^5*x3*x4^3*x5 + 75*m^3*x2^3*x3*x4^4*x5^2"
         " + 75*m^3*x2^2*x3^4*x4*x5^3 + 50*m^3*x2^4*x3*x4*x5^4 - 200*m^3*x2^3*x3^2*x4^2*x5^3"
         " + 200*m^3*x2^2*x3^3*x4^3*x5^2"
         " - 45*m^3*x2^2*x3^2*x4^5*x5 - 45*m^3*x2*x3^5*x4^2*x5^2 - 50*m^3*x2*x3^4*x4^4*x5"
         " - 20*m^5*x3^2*x4*x5^7 + 5*m^5*x2*x3*x5^8"
         " + 35*m^5*x3*x4^3*x5^6 - 15*m^5*x2*x4^2*x5^7 - 5*m^4*x2^3*x4*x5^6"
         " + 20*m^4*x2*x4^7*x5^2 + 25*m^4*x2^2*x4^4*x5^4"
         " - 25*m^4*x3^4*x4^2*x5^4 + 25*m^4*x3^3*x4^4*x5^3 - 5*m^4*x3*x4^8*x5"
         " - 10*m^4*x2^2*x3^2*x5^6 + 10*m^4*x3^2*x4^6*x5^2"
         " - 15*m*x2^7*x3^2*x5 - 20*m*x2^7*x3*x4^2 + 5*m*x2^8*x4*x5 + 35*m*x2^6*x3^3*x4"
         " + 20*m^2*x2^2*x3^7*x5 - 5*m^2*x2^6*x3*x5^3"
         " + 25*m^2*x2^4*x3^4*x5^2 - 25*m^2*x2^4*x3^2*x4^4 + 25*m^2*x2^3*x3^4*x4^3"
         " - 5*m^2*x2*x3^8*x4 - 10*m^2*x2^6*x4^2*x5^2"
         " + 10*m^2*x2^2*x3^6*x4^2 - 35*m^3*x2^3*x4^6*x5 + 15*m^3*x2^2*x3*x4^7"
         " - 35*m^3*x2*x3^6*x5^3 + 5*m^3*x2*x3^3*x4^6 + 15*m^3*x3^7*x4*x5^2"
         " + 5*m^3*x3^6*x4^3*x5 - 25*m^3*x2^4*x4^3*x5^3 - 25*m^3*x2^3*x3^3*x5^4"
         " + x2^10 - m^4*x4^10 - m^2*x3^10 + x5^10*m^6"
         " - 11*m^5*x4^5*x5^5 + 11*m^4*x3^5*x5^5 - 11*m*x2^5*x3^5 + 11*m^2*x2^5*x4^5"
         " - 2*m^3*x2^5*x5^5 + 2*m^3*x3^5*x4^5"});

    add("6.1", 5, 'm',
        {"-3*m*x2*x4*x6 + x2^3 + m*x4^3 + m^2*x6^3",
         "18*m^2*x2^2*x3*x5*x6^2 - 18*m^2*x2*x3^2*x5^2*x6 - 3*m^3*x3^2*x6^4 - 2*m^2*x2^3*x6^3"
         " + 3*m^2*x2^2*x5^4 + 3*m^2*x3^4*x6^2"
         " + 2*m^2*x3^3*x5^3 - 3*m*x2^4*x5^2 - 6*m^3*x2*x5^2*x6^3 + 6*m^3*x3*x5^3*x6^2"
         " - 6*m*x2^3*x3^2*x6 + 6*m*x2^2*x3^3*x5 + m^4*x6^6"
         " - m^3*x5^6 - m*x3^6 + x2^6",
         "x2^6 + 64*m^2*x4^6 + m^4*x6^6 + 27*m^3*x5^6 + 27*m*x3^6 - 216*m^2*x3^3*x4*x5*x6"
         " - 72*m*x2^3*x3*x4*x5 + 12*m^3*x2*x4*x6^4"
         " + 108*m^3*x4^2*x5^2*x6^2 - 108*m^3*x4*x5^4*x6 + 36*m^2*x2^2*x4^2*x6^2"
         " - 96*m^2*x2*x4^4*x6 + 144*m^2*x2*x4^3*x5^2"
         " + 144*m^2*x3^2*x4^3*x6 + 324*m^2*x3^2*x4^2*x5^2 - 288*m^2*x3*x4^4*x5"
         " + 12*m*x2^4*x4*x6 + 108*m*x2^2*x3^2*x4^2"
         " - 108*m*x2*x3^4*x4 - 18*m^3*x2*x5^2*x6^3 + 54*m^3*x3*x5^3*x6^2"
         " - 18*m*x2^3*x3^2*x6 + 54*m*x2^2*x3^3*x5"
         " - 72*m^3*x3*x4*x5*x6^3 - 216*m^2*x2*x3*x4*x5^3 - 54*m^2*x2^2*x3*x5*x6^2"
         " + 162*m^2*x2*x3^2*x5^2*x6"
         " - 16*m^3*x4^3*x6^3 - 16*m*x2^3*x4^3 + 9*m^3*x3^2*x6^4 + 2*m^2*x2^3*x6^3"
         " + 27*m^2*x2^2*x5^4 + 27*m^2*x3^4*x6^2"
         " - 54*m^2*x3^3*x5^3 + 9*m*x2^4*x5^2"});
    return forms;
}

}  // namespace

const ExplicitForm& explicit_index_form(unsigned n, const std::string& case_id) {
    static std::map<std::string, ExplicitForm> forms;
    static std::once_flag once;
    std::call_once(once, [] { forms = build_explicit_forms(); });
    auto it = forms.find(case_id);
    if (it == forms.end() || it->second.factors.front().nvars() != n - 1)
        throw math_error("no explicit form printed for case " + case_id);
    return it->second;
}

}  // namespace purefields
