#ifndef CSP_PARAMS_HPP
#define CSP_PARAMS_HPP

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csp/intpoly.hpp"

namespace csp {

// Polynomial with integer coefficients in the formal parameters a, b, q.
// Small and dense in intent: family tables and solver output never go past
// degree 2 per variable. Parsed from / printed in the compact table syntax
// with implicit multiplication, e.g. "3ab-2a-b-9" or "-2q^2-2q-2".
class ParamPoly {
  public:
    using Exponents = std::array<int, 3>;  // a, b, q

    ParamPoly() = default;

    static ParamPoly constant(mpz_class v) {
        ParamPoly p;
        if (v != 0) p.terms_[{0, 0, 0}] = std::move(v);
        return p;
    }

    static ParamPoly variable(char var) {
        ParamPoly p;
        Exponents e{0, 0, 0};
        e[var_index(var)] = 1;
        p.terms_[e] = 1;
        return p;
    }

    // Univariate construction: coeffs[i] * var^i.
    static ParamPoly from_univariate(char var, const std::vector<mpz_class>& coeffs) {
        ParamPoly p;
        const std::size_t vi = var_index(var);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            Exponents e{0, 0, 0};
            e[vi] = static_cast<int>(i);
            p.terms_[e] = coeffs[i];
        }
        return p;
    }

    static ParamPoly parse(const std::string& text) {
        ParamPoly out;
        std::size_t i = 0;
        const std::string s = strip_spaces(text);
        if (s.empty()) throw std::invalid_argument("ParamPoly: empty expression");
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            }
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
            mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
            coeff *= sign;
            Exponents e{0, 0, 0};
            bool saw_var = false;
            while (i < s.size() && (s[i] == 'a' || s[i] == 'b' || s[i] == 'q')) {
                const std::size_t vi = var_index(s[i]);
                ++i;
                int exp = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::string ed;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed.push_back(s[i++]);
                    if (ed.empty()) throw std::invalid_argument("ParamPoly: missing exponent in " + text);
                    exp = std::stoi(ed);
                }
                e[vi] += exp;
                saw_var = true;
            }
            if (digits.empty() && !saw_var)
                throw std::invalid_argument("ParamPoly: cannot parse term in \"" + text + "\"");
            out.add_term(e, coeff);
        }
        return out;
    }

    void add_term(const Exponents& e, const mpz_class& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0}); }

    bool uses(char var) const {
        const std::size_t vi = var_index(var);
        for (const auto& [e, c] : terms_)
            if (e[vi] != 0) return true;
        return false;
    }

    mpz_class eval(const std::map<char, mpz_class>& assignment) const {
        mpz_class total = 0;
        for (const auto& [e, c] : terms_) {
            mpz_class term = c;
            for (std::size_t vi = 0; vi < 3; ++vi) {
                if (e[vi] == 0) continue;
                auto it = assignment.find(kVars[vi]);
                if (it == assignment.end())
                    throw std::invalid_argument(std::string("ParamPoly::eval: missing value for ") + kVars[vi]);
                for (int k = 0; k < e[vi]; ++k) term *= it->second;
            }
            total += term;
        }
        return total;
    }

    friend ParamPoly operator+(const ParamPoly& x, const ParamPoly& y) {
        ParamPoly out = x;
        for (const auto& [e, c] : y.terms_) out.add_term(e, c);
        return out;
    }

    friend ParamPoly operator-(const ParamPoly& x, const ParamPoly& y) {
        ParamPoly out = x;
        for (const auto& [e, c] : y.terms_) out.add_term(e, -c);
        return out;
    }

    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
        ParamPoly out;
        for (const auto& [e1, c1] : x.terms_)
            for (const auto& [e2, c2] : y.terms_)
                out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        return out;
    }

    friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }
    friend bool operator<(const ParamPoly& x, const ParamPoly& y) {
        return std::lexicographical_compare(
            x.terms_.begin(), x.terms_.end(), y.terms_.begin(), y.terms_.end(),
            [](const auto& l, const auto& r) {
                if (l.first != r.first) return l.first < r.first;
                return cmp(l.second, r.second) < 0;
            });
    }

    // Table syntax, monomials by descending total degree then descending
    // exponents, matching the way the classification tables are written.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponents, mpz_class>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
            const int tl = l.first[0] + l.first[1] + l.first[2];
            const int tr = r.first[0] + r.first[1] + r.first[2];
            if (tl != tr) return tl > tr;
            return l.first > r.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : sorted) {
            mpz_class abs_c = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? "-" : "+");
            }
            const bool has_var = e[0] || e[1] || e[2];
            if (!has_var || abs_c != 1) os << abs_c.get_str();
            for (std::size_t vi = 0; vi < 3; ++vi) {
                if (e[vi] == 0) continue;
                os << kVars[vi];
                if (e[vi] > 1) os << "^" << e[vi];
            }
        }
        return os.str();
    }

  private:
    static constexpr char kVars[3] = {'a', 'b', 'q'};

    static std::size_t var_index(char v) {
        switch (v) {
            case 'a': return 0;
            case 'b': return 1;
            case 'q': return 2;
            default: throw std::invalid_argument(std::string("ParamPoly: unknown variable ") + v);
        }
    }

    static std::string strip_spaces(const std::string& s) {
        std::string out;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
        return out;
    }

    std::map<Exponents, mpz_class> terms_;
};

}  // namespace csp

#endif
