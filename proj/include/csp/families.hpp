#ifndef CSP_FAMILIES_HPP
#define CSP_FAMILIES_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "csp/cs_core.hpp"
#include "csp/errors.hpp"
#include "csp/families_data.hpp"
#include "csp/intpoly.hpp"
#include "csp/params.hpp"
#include "csp/sturm.hpp"

namespace csp {

inline constexpr long long kDefaultEnumerationBudget = 100'000'000;

enum class PositivityKind { always, never, le_bound, ge_bound, computed };

struct PositivityRule {
    PositivityKind kind = PositivityKind::computed;
    char var = 'a';
    mpz_class bound;

    std::string to_string() const {
        switch (kind) {
            case PositivityKind::always: return "always";
            case PositivityKind::never: return "never";
            case PositivityKind::le_bound: return std::string(1, var) + "<=" + bound.get_str();
            case PositivityKind::ge_bound: return std::string(1, var) + ">=" + bound.get_str();
            case PositivityKind::computed: return "computed";
        }
        return "computed";
    }
};

// One row of a classification table: a parametric coefficient tuple together
// with its positivity condition. Every integer instantiation is a CS
// polynomial of the stated degree.
struct Family {
    std::string id;
    int degree = 0;
    std::vector<char> params;       // subset of {a, b, q}
    std::vector<ParamPoly> coeffs;  // c_0 .. c_{degree-1}
    PositivityRule positivity;
    std::string solver;  // parameter-recovery strategy used by classify
};

struct Classification {
    std::string family_id;
    std::map<char, mpz_class> params;
};

namespace detail {

inline PositivityRule parse_positivity(const std::string& s) {
    PositivityRule r;
    if (s == "always") {
        r.kind = PositivityKind::always;
    } else if (s == "never") {
        r.kind = PositivityKind::never;
    } else if (s == "computed") {
        r.kind = PositivityKind::computed;
    } else {
        auto pos = s.find("<=");
        if (pos != std::string::npos) {
            r.kind = PositivityKind::le_bound;
        } else {
            pos = s.find(">=");
            if (pos == std::string::npos) throw std::invalid_argument("bad positivity rule: " + s);
            r.kind = PositivityKind::ge_bound;
        }
        r.var = s[0];
        r.bound = mpz_class(s.substr(pos + 2));
    }
    return r;
}

inline std::vector<Family> load_catalog() {
    std::vector<Family> out;
    for (const auto& row : families_data::kRows) {
        Family f;
        f.id = row.id;
        f.degree = row.degree;
        for (const char* p = row.params; *p; ++p) f.params.push_back(*p);
        for (int i = 0; i < row.degree; ++i) f.coeffs.push_back(ParamPoly::parse(row.coeffs[static_cast<std::size_t>(i)]));
        f.positivity = parse_positivity(row.positivity);
        f.solver = row.solver;
        out.push_back(std::move(f));
    }
    return out;
}

inline const std::vector<Family>& full_catalog() {
    static const std::vector<Family> all = load_catalog();
    return all;
}

}  // namespace detail

// The classification table rows of the given degree (2..7), in table order.
inline std::vector<Family> catalog(int degree) {
    if (degree < 2 || degree > 7) throw std::invalid_argument("catalog: degree must be between 2 and 7");
    std::vector<Family> out;
    for (const auto& f : detail::full_catalog())
        if (f.degree == degree) out.push_back(f);
    return out;
}

inline const Family& family_by_id(const std::string& id) {
    for (const auto& f : detail::full_catalog())
        if (f.id == id) return f;
    throw std::invalid_argument("family_by_id: unknown id " + id);
}

// Evaluate a family row at an integer parameter assignment. The assignment
// must cover exactly the family's parameters.
inline IntPoly instantiate(const Family& family, const std::map<char, mpz_class>& params) {
    if (params.size() != family.params.size())
        throw std::invalid_argument("instantiate: parameter assignment does not match family " + family.id);
    for (char v : family.params)
        if (!params.count(v))
            throw std::invalid_argument(std::string("instantiate: missing parameter ") + v + " for " + family.id);
    std::vector<mpz_class> c(static_cast<std::size_t>(family.degree) + 1);
    for (int i = 0; i < family.degree; ++i) c[static_cast<std::size_t>(i)] = family.coeffs[static_cast<std::size_t>(i)].eval(params);
    c[static_cast<std::size_t>(family.degree)] = 1;
    return IntPoly::from_ascending(std::move(c));
}

namespace detail {

// Solve entry == value for a single parameter when the entry is linear in
// exactly that parameter.
inline std::optional<mpz_class> solve_linear_entry(const ParamPoly& entry, char var, const mpz_class& value) {
    // entry must be of the form slope * var + nu with no other parameter
    std::map<char, mpz_class> at0{{var, 0}}, at1{{var, 1}}, at2{{var, 2}};
    mpz_class nu, slope;
    try {
        nu = entry.eval(at0);
        slope = entry.eval(at1) - nu;
        if (entry.eval(at2) - nu != 2 * slope) return std::nullopt;  // nonlinear in var
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // entry involves another parameter
    }
    if (slope == 0) return std::nullopt;
    mpz_class num = value - nu;
    if (!mpz_divisible_p(num.get_mpz_t(), slope.get_mpz_t())) return std::nullopt;
    return mpz_class(num / slope);
}

inline std::optional<std::map<char, mpz_class>> recover_params(const Family& family, const IntPoly& f) {
    std::map<char, mpz_class> params;
    if (family.solver == "sumdiv") {
        // the two-parameter divisor rows: a = c1 + c4, then b from c4 = ab - 5
        mpz_class a = f.coeff(1) + f.coeff(4);
        if (a == 0) return std::nullopt;
        mpz_class num = f.coeff(4) + 5;
        if (!mpz_divisible_p(num.get_mpz_t(), a.get_mpz_t())) return std::nullopt;
        params['a'] = a;
        params['b'] = num / a;
        return params;
    }
    for (char var : family.params) {
        bool solved = false;
        for (int i = 0; i < family.degree && !solved; ++i) {
            const ParamPoly& entry = family.coeffs[static_cast<std::size_t>(i)];
            if (!entry.uses(var)) continue;
            auto v = solve_linear_entry(entry, var, f.coeff(i));
            if (v) {
                params[var] = *v;
                solved = true;
            }
        }
        if (!solved) return std::nullopt;
    }
    return params;
}

}  // namespace detail

// Identify a CS polynomial of degree 2..5 as an instance of a table row.
// Returns the first matching (family, parameters) in table order; returns
// nullopt when f is not a CS polynomial. Matches are verified by
// re-instantiation, so a returned classification is always sound.
inline std::optional<Classification> classify(const IntPoly& f) {
    const int n = f.degree();
    if (n < 2 || n > 5) throw std::invalid_argument("classify: supported degrees are 2..5");
    if (!f.is_doubly_monic()) return std::nullopt;
    if (!is_cs_quick(f)) return std::nullopt;
    for (const auto& family : catalog(n)) {
        auto params = detail::recover_params(family, f);
        if (!params) continue;
        if (instantiate(family, *params) == f) return Classification{family.id, *params};
    }
    // the tables are complete for degrees 2..5, so this is unreachable for a
    // genuine CS polynomial
    throw std::logic_error("classify: CS polynomial missed by the classification tables: " + f.to_string());
}

// Evaluate the family's positivity condition at a parameter point. Where the
// table carries an exact condition this is a table lookup; for the rows
// marked "computed" the instantiated polynomial is tested directly.
inline bool positivity_holds(const Family& family, const std::map<char, mpz_class>& params) {
    switch (family.positivity.kind) {
        case PositivityKind::always: return true;
        case PositivityKind::never: return false;
        case PositivityKind::le_bound: {
            auto it = params.find(family.positivity.var);
            if (it == params.end()) throw std::invalid_argument("positivity_holds: missing parameter");
            return it->second <= family.positivity.bound;
        }
        case PositivityKind::ge_bound: {
            auto it = params.find(family.positivity.var);
            if (it == params.end()) throw std::invalid_argument("positivity_holds: missing parameter");
            return it->second >= family.positivity.bound;
        }
        case PositivityKind::computed: return is_positive(instantiate(family, params));
    }
    return false;
}

// Exhaustive scan: all CS polynomials of the given degree whose coefficients
// c_1 .. c_{n-1} lie in the given closed intervals (c_0 is forced to
// (-1)^n), sorted by ascending coefficient tuple. Refuses boxes larger than
// the budget.
inline std::vector<IntPoly> brute_force_enumerate(int degree,
                                                  const std::vector<std::pair<long, long>>& bounds,
                                                  long long budget = kDefaultEnumerationBudget) {
    if (degree < 2) throw std::invalid_argument("brute_force_enumerate: degree must be at least 2");
    if (static_cast<int>(bounds.size()) != degree - 1)
        throw std::invalid_argument("brute_force_enumerate: need bounds for c_1 .. c_{n-1}");
    long long volume = 1;
    for (auto [lo, hi] : bounds) {
        if (lo > hi) throw std::invalid_argument("brute_force_enumerate: empty interval");
        volume *= (hi - lo + 1);
        if (volume > budget) {
            std::ostringstream os;
            os << "brute_force_enumerate: box volume " << volume << "+ exceeds budget " << budget;
            throw budget_error(os.str());
        }
    }
    std::vector<IntPoly> hits;
    std::vector<long> cur(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) cur[i] = bounds[i].first;
    const long c0 = degree % 2 == 0 ? 1 : -1;
    while (true) {
        long sum = 0;
        for (long v : cur) sum += v;
        // f(1) = 1 + c0 + sum must be +-1
        const long f1 = 1 + c0 + sum;
        if (f1 == 1 || f1 == -1) {
            std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
            c[0] = c0;
            for (std::size_t i = 0; i < cur.size(); ++i) c[i + 1] = cur[i];
            c[static_cast<std::size_t>(degree)] = 1;
            IntPoly f = IntPoly::from_ascending(std::move(c));
            if (is_cs_quick(f)) hits.push_back(std::move(f));
        }
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == bounds[i].second) {
            cur[i] = bounds[i].first;
            ++i;
        }
        if (i == cur.size()) break;
        ++cur[i];
    }
    std::sort(hits.begin(), hits.end(), [](const IntPoly& x, const IntPoly& y) {
        for (int i = 1; i <= x.degree(); ++i) {
            int c = cmp(x.coeff(i), y.coeff(i));
            if (c != 0) return c < 0;
        }
        return false;
    });
    return hits;
}

// CSV rendering of a catalog, one row per family.
inline std::string families_csv(int degree) {
    std::ostringstream os;
    os << "id,degree,params";
    for (int i = 0; i < degree; ++i) os << ",c" << i;
    os << ",positivity\n";
    for (const auto& f : catalog(degree)) {
        os << f.id << "," << f.degree << ",";
        for (char v : f.params) os << v;
        for (const auto& c : f.coeffs) os << "," << c.to_string();
        os << "," << f.positivity.to_string() << "\n";
    }
    return os.str();
}

}  // namespace csp

#endif
