#ifndef CSP_DIOPH6_HPP
#define CSP_DIOPH6_HPP

#include <gmpxx.h>

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csp/cs_core.hpp"
#include "csp/errors.hpp"
#include "csp/intpoly.hpp"
#include "csp/params.hpp"
#include "csp/sturm.hpp"

namespace csp::dioph6 {

inline constexpr long kDefaultQBound = 64;

// The three sign choices behind the degree-6 system: eps1 = f(1),
// eps2 = det(I - wedge^2 A), eps3 = the cubic-condition value (whose square
// is det(I - wedge^3 A)).
struct SignTriple {
    int eps1 = 1, eps2 = 1, eps3 = 1;
};

struct Provenance {
    long q = 0;
    SignTriple signs;
    std::optional<mpz_class> divisor;  // d = p + 2q; absent for the w = 0 regime
};

// One solution row for a fixed q: either a single coefficient tuple
// (c_0 .. c_5) or a one-parameter family in a.
struct Degree6Solution {
    bool parametric = false;
    std::vector<mpz_class> tuple;        // when finite
    std::vector<ParamPoly> param_tuple;  // when parametric
    Provenance origin;

    IntPoly instantiate(const mpz_class& a) const {
        if (!parametric) throw std::logic_error("Degree6Solution: not parametric");
        std::vector<mpz_class> c(7);
        for (int i = 0; i < 6; ++i) c[static_cast<std::size_t>(i)] = param_tuple[static_cast<std::size_t>(i)].eval({{'a', a}});
        c[6] = 1;
        return IntPoly::from_ascending(std::move(c));
    }

    IntPoly as_poly() const {
        if (parametric) throw std::logic_error("Degree6Solution: parametric row has no single polynomial");
        std::vector<mpz_class> c = tuple;
        c.push_back(1);
        return IntPoly::from_ascending(std::move(c));
    }
};

// ---------------------------------------------------------------------------
// the degree-6 condition polynomials in the coefficients (c_0 = 1 implied)

// value of the quartic condition; equals det(I - wedge^2 A)
inline mpz_class eq_quartic(const std::vector<mpz_class>& c) {
    const mpz_class &c1 = c[1], &c2 = c[2], &c3 = c[3], &c4 = c[4], &c5 = c[5];
    return c1 * c1 * c1 * c1 - c1 * c1 * c1 * c3 + c1 * c1 * c2 * c4 - c1 * c1 * c4 * c4 -
           2 * c1 * c1 * c1 * c5 - c1 * c2 * c2 * c5 + 3 * c1 * c1 * c3 * c5 + c1 * c4 * c4 * c5 +
           c2 * c2 * c5 * c5 - 3 * c1 * c3 * c5 * c5 - c2 * c4 * c5 * c5 + 2 * c1 * c5 * c5 * c5 +
           c3 * c5 * c5 * c5 - c5 * c5 * c5 * c5 - 3 * c1 * c1 * c2 + c2 * c2 * c2 +
           3 * c1 * c1 * c4 - 3 * c2 * c2 * c4 + 3 * c2 * c4 * c4 - c4 * c4 * c4 +
           6 * c1 * c2 * c5 - 6 * c1 * c4 * c5 - 3 * c2 * c5 * c5 + 3 * c4 * c5 * c5;
}

// value of the cubic condition; its square equals det(I - wedge^3 A)
inline mpz_class eq_cubic(const std::vector<mpz_class>& c) {
    const mpz_class &c1 = c[1], &c2 = c[2], &c3 = c[3], &c4 = c[4], &c5 = c[5];
    return c1 * c1 * c1 + c1 * c1 * c4 + c1 * c3 * c5 + c2 * c5 * c5 + c5 * c5 * c5 -
           4 * c1 * c2 + c3 * c3 - 4 * c2 * c4 - 2 * c1 * c5 - 4 * c4 * c5 + 4 * c3 + 4;
}

inline mpz_class eq_linear(const std::vector<mpz_class>& c) {
    return c[1] + c[2] + c[3] + c[4] + c[5] + 2;
}

namespace detail {

using csp::detail::u64;

inline std::vector<long> divisors_signed(long long n) {
    if (n == 0) throw std::invalid_argument("divisors_signed: zero");
    long long a = n < 0 ? -n : n;
    std::vector<long> out;
    for (long long d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(static_cast<long>(d));
        out.push_back(static_cast<long>(-d));
        if (d != a / d) {
            out.push_back(static_cast<long>(a / d));
            out.push_back(static_cast<long>(-(a / d)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Assemble c_3, c_4, c_5 from (c_1, c_2, p, q, eps1) and validate the full
// system; returns the tuple c_0..c_5 or nullopt when the signs disagree.
inline std::optional<std::vector<mpz_class>> assemble(const mpz_class& c1, const mpz_class& c2,
                                                      long p, long q, const SignTriple& signs) {
    std::vector<mpz_class> c(6);
    c[0] = 1;
    c[1] = c1;
    c[2] = c2;
    c[4] = c2 + p;
    c[5] = c1 + q;
    c[3] = -c[1] - c[2] - c[4] - c[5] - 2 + signs.eps1;
    if (eq_linear(c) != signs.eps1) return std::nullopt;
    if (eq_quartic(c) != signs.eps2) return std::nullopt;
    if (eq_cubic(c) != signs.eps3) return std::nullopt;
    return c;
}

// Exact integer roots of A x^2 + B x + C = 0 (A != 0).
inline std::vector<mpz_class> integer_quadratic_roots(const mpz_class& A, const mpz_class& B,
                                                      const mpz_class& C) {
    std::vector<mpz_class> roots;
    mpz_class disc = B * B - 4 * A * C;
    if (disc < 0) return roots;
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return roots;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    for (int sign : {1, -1}) {
        mpz_class num = -B + sign * s;
        mpz_class den = 2 * A;
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
            roots.push_back(num / den);
        }
        if (s == 0) break;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Coefficients of the combined condition alpha c1^2 + beta c1 + gamma c2 +
// delta = 0 obtained by substituting the definition of w into the cubic
// condition, for fixed (p, q, eps1, eps3).
struct LinearC2Equation {
    mpz_class alpha, beta, gamma, delta;
};

inline LinearC2Equation linear_c2_equation(long p, long q, int eps1, int eps3) {
    LinearC2Equation e;
    const long P = p, Q = q;
    e.alpha = eps1;
    e.beta = mpz_class(eps1) * (Q - 4) - mpz_class(Q) * (P - 2 * Q);
    e.gamma = mpz_class(Q) * Q - 4 * eps1;
    e.delta = mpz_class(-2 * eps1) * (P + Q) + (mpz_class(P) * P - 2 * mpz_class(P) * Q + mpz_class(Q) * Q * Q + mpz_class(Q) * Q) + 1 - eps3;
    return e;
}

// Parametric families from one linear-in-c2 equation: residue classes of c1
// modulo |gamma| that make c2 integral, merged to the smallest modulus and
// emitted with balanced representatives. Appends (c1(a), c2(a)) pairs.
inline void solve_parametric_linear_c2(const LinearC2Equation& e,
                                       std::vector<std::pair<ParamPoly, ParamPoly>>& out) {
    const mpz_class gamma_abs = abs(e.gamma);
    const long M = static_cast<long>(gamma_abs.get_si());
    if (M == 0) throw std::logic_error("solve_parametric_linear_c2: gamma is zero");
    std::vector<long> residues;
    for (long r = 0; r < M; ++r) {
        mpz_class v = e.alpha * r * r + e.beta * r + e.delta;
        if (mpz_divisible_p(v.get_mpz_t(), gamma_abs.get_mpz_t())) residues.push_back(r);
    }
    if (residues.empty()) return;
    // merge full residue classes modulo the smallest divisor of M that works
    long modulus = M;
    std::vector<long> classes = residues;
    for (long d = 1; d < M; ++d) {
        if (M % d != 0) continue;
        std::set<long> cand;
        for (long r : residues) cand.insert(r % d);
        if (static_cast<long>(cand.size()) * (M / d) != static_cast<long>(residues.size())) continue;
        bool all = true;
        std::set<long> have(residues.begin(), residues.end());
        for (long c : cand)
            for (long k = 0; k < M / d && all; ++k)
                if (!have.count((c + k * d) % M)) all = false;
        if (all) {
            modulus = d;
            classes.assign(cand.begin(), cand.end());
            break;
        }
    }
    std::vector<long> reps;
    for (long c : classes) {
        long rep = c % modulus;
        if (2 * rep > modulus) rep -= modulus;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    for (long rep : reps) {
        // c1 = modulus * a + rep; c2 = -(alpha c1^2 + beta c1 + delta)/gamma
        ParamPoly c1 = ParamPoly::from_univariate('a', {mpz_class(rep), mpz_class(modulus)});
        std::vector<mpz_class> num = {
            e.alpha * rep * rep + e.beta * rep + e.delta,
            e.alpha * 2 * rep * modulus + e.beta * modulus,
            e.alpha * modulus * modulus,
        };
        std::vector<mpz_class> c2c(3);
        for (int i = 0; i < 3; ++i) {
            mpz_class v = -num[static_cast<std::size_t>(i)];
            if (!mpz_divisible_p(v.get_mpz_t(), e.gamma.get_mpz_t()))
                throw std::logic_error("solve_parametric_linear_c2: non-integral family coefficient");
            c2c[static_cast<std::size_t>(i)] = v / e.gamma;
        }
        out.emplace_back(std::move(c1), ParamPoly::from_univariate('a', c2c));
    }
}

// Build the six coefficient entries of a parametric row from polynomials
// c1(a), c2(a), p(a).
inline Degree6Solution make_parametric_row(const ParamPoly& c1, const ParamPoly& c2,
                                           const ParamPoly& p, long q, const SignTriple& signs,
                                           std::optional<mpz_class> divisor) {
    Degree6Solution row;
    row.parametric = true;
    row.param_tuple.resize(6);
    const ParamPoly qq = ParamPoly::constant(q);
    row.param_tuple[0] = ParamPoly::constant(1);
    row.param_tuple[1] = c1;
    row.param_tuple[2] = c2;
    row.param_tuple[4] = c2 + p;
    row.param_tuple[5] = c1 + qq;
    ParamPoly sum = row.param_tuple[1] + row.param_tuple[2] + row.param_tuple[4] + row.param_tuple[5];
    row.param_tuple[3] = ParamPoly::constant(signs.eps1 - 2) - sum;
    row.origin = {q, signs, std::move(divisor)};
    return row;
}

inline void validate_parametric_row(const Degree6Solution& row) {
    for (long a : {-3L, 0L, 2L, 7L}) {
        std::vector<mpz_class> c(6);
        for (int i = 0; i < 6; ++i) c[static_cast<std::size_t>(i)] = row.param_tuple[static_cast<std::size_t>(i)].eval({{'a', mpz_class(a)}});
        if (abs(eq_linear(c)) != 1 || abs(eq_quartic(c)) != 1 || abs(eq_cubic(c)) != 1)
            throw std::logic_error("dioph6: parametric row fails the defining system");
    }
}

}  // namespace detail

struct SolveOptions {
    long q_bound = kDefaultQBound;
    bool mod3_pruning = false;  // optional divisor filter for 3 | q (must not change results)
};

// All degree-6 CS polynomials with c_5 - c_1 = q, as finite tuples plus the
// parametric families that appear for q in {-1, 0, 1}. Rows are grouped by
// the sign pair (eps1, eps2) in the order (+,+), (-,+), (+,-), (-,-); within
// a group, parametric rows precede finite ones and finite tuples are sorted
// descending. Every row is checked against the defining system before being
// returned.
inline std::vector<Degree6Solution> solve_q(long q, const SolveOptions& opts = {}) {
    if (q > opts.q_bound || q < -opts.q_bound) {
        std::ostringstream os;
        os << "solve_q: |q| = " << (q < 0 ? -q : q) << " exceeds the configured bound " << opts.q_bound;
        throw budget_error(os.str());
    }
    std::vector<Degree6Solution> out;
    const std::pair<int, int> sign_order[4] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
    for (auto [eps1, eps2] : sign_order) {
        const long long D = static_cast<long long>(eps2) - static_cast<long long>(eps1) * q * q * q;
        std::vector<Degree6Solution> block;
        if (D != 0) {
            std::vector<std::vector<mpz_class>> finite;
            for (long d : detail::divisors_signed(D)) {
                if (opts.mod3_pruning && q % 3 == 0) {
                    // with 3 | q the system forces d^3 = p^3 = -eps2 (mod 3)
                    long want = ((-eps2) % 3 + 3) % 3;
                    if (((d % 3) + 3) % 3 != want) continue;
                }
                const long p = d - 2 * q;
                const long w = static_cast<long>(D / d);
                if (q == 0) {
                    // w is forced to -p^2; the surviving divisor leaves a
                    // one-parameter family per sign of eps3
                    if (-static_cast<long long>(p) * p != w) continue;
                    for (int eps3 : {1, -1}) {
                        auto eq = detail::linear_c2_equation(p, q, eps1, eps3);
                        std::vector<std::pair<ParamPoly, ParamPoly>> fams;
                        detail::solve_parametric_linear_c2(eq, fams);
                        for (auto& [c1, c2] : fams) {
                            auto row = detail::make_parametric_row(c1, c2, ParamPoly::constant(p), q,
                                                                   {eps1, eps2, eps3}, mpz_class(d));
                            detail::validate_parametric_row(row);
                            block.push_back(std::move(row));
                        }
                    }
                    continue;
                }
                // eliminate c2 via the definition of w: c2 = (q(p-2q)c1 - K)/q^2
                const mpz_class K = mpz_class(p) * p - 2 * mpz_class(p) * q + mpz_class(q) * q * q + mpz_class(q) * q + w;
                const mpz_class q2 = mpz_class(q) * q;
                for (int eps3 : {1, -1}) {
                    // cubic condition: eps1(c1^2+(q-4)c1-4c2-2p-2q) - w + 1 - eps3 = 0
                    // with c2 = (q(p-2q)c1 - K)/q^2 substituted; cleared by q^2
                    const mpz_class qa = mpz_class(eps1) * q2;
                    const mpz_class qb = mpz_class(eps1) * (mpz_class(q) - 4) * q2 - 4 * mpz_class(eps1) * mpz_class(q) * (mpz_class(p) - 2 * q);
                    const mpz_class qc = 4 * mpz_class(eps1) * K + q2 * (mpz_class(eps1) * (-2 * mpz_class(p) - 2 * mpz_class(q)) - w + 1 - eps3);
                    for (const mpz_class& c1 : detail::integer_quadratic_roots(qa, qb, qc)) {
                        mpz_class num = mpz_class(q) * (mpz_class(p) - 2 * q) * c1 - K;
                        if (!mpz_divisible_p(num.get_mpz_t(), q2.get_mpz_t())) continue;
                        mpz_class c2 = num / q2;
                        auto tuple = detail::assemble(c1, c2, p, q, {eps1, eps2, eps3});
                        if (tuple) finite.push_back(std::move(*tuple));
                    }
                }
            }
            std::sort(finite.begin(), finite.end(), [](const auto& x, const auto& y) { return x > y; });
            finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
            for (auto& t : finite) {
                Degree6Solution row;
                row.parametric = false;
                row.origin.q = q;
                row.origin.signs = {eps1, eps2, static_cast<int>(eq_cubic(t).get_si())};
                row.origin.divisor = t[4] - t[2] + 2 * q;
                row.tuple = std::move(t);
                block.push_back(std::move(row));
            }
        } else {
            // q^3 = eps1 eps2 with |q| = 1: the two infinite regimes
            // regime A: p = -2q, divisor d = 0
            for (int eps3 : {1, -1}) {
                auto eq = detail::linear_c2_equation(-2 * q, q, eps1, eps3);
                std::vector<std::pair<ParamPoly, ParamPoly>> fams;
                detail::solve_parametric_linear_c2(eq, fams);
                for (auto& [c1, c2] : fams) {
                    auto row = detail::make_parametric_row(c1, c2, ParamPoly::constant(-2 * q), q,
                                                           {eps1, eps2, eps3}, mpz_class(0));
                    detail::validate_parametric_row(row);
                    block.push_back(std::move(row));
                }
            }
            // order regime-A rows by ascending c1 constant term (their
            // residue representatives), merging the two eps3 sub-cases
            auto c1_const = [](const Degree6Solution& s) { return s.param_tuple[1].eval({{'a', 0}}); };
            std::sort(block.begin(), block.end(), [&](const Degree6Solution& x, const Degree6Solution& y) {
                return c1_const(x) < c1_const(y);
            });
            // regime B: w = 0, c1 quadratic with p free
            std::vector<Degree6Solution> regime_b;
            for (int eps3 : {1, -1}) {
                // c1^2 + B(p) c1 + C(p) = eps1(eps3 - 1), with
                // B = -4qp + q + 4 and C = 4p^2 - (8q+2)p + 2q + 4;
                // the discriminant collapses to the constant 1 + 4 eps1 (eps3 - 1)
                const long disc = 1 + 4 * static_cast<long>(eps1) * (eps3 - 1);
                if (disc < 0) continue;
                long s = 0;
                while (s * s < disc) ++s;
                if (s * s != disc) continue;
                for (int sign : {1, -1}) {
                    // c1(p) = (4qp - q - 4 + sign*s)/2 = 2q p + beta0
                    const long beta0_num = -q - 4 + sign * s;
                    if (beta0_num % 2 != 0) continue;
                    const long beta0 = beta0_num / 2;
                    // shift p = a + t so the constant term of c1 lands in {-1, 0}
                    long r = ((beta0 % 2) + 2) % 2;  // 0 or 1
                    if (r == 1) r = -1;
                    const long t = (r - beta0) / (2 * q);
                    // c1(a) = 2q a + r
                    ParamPoly c1 = ParamPoly::from_univariate('a', {mpz_class(r), mpz_class(2 * q)});
                    ParamPoly p_poly = ParamPoly::from_univariate('a', {mpz_class(t), mpz_class(1)});
                    // c2 = q(p - 2q) c1 - (p^2 - 2pq + q^3 + q^2)
                    ParamPoly qc = ParamPoly::constant(q);
                    ParamPoly c2 = qc * (p_poly - ParamPoly::constant(2 * q)) * c1 -
                                   (p_poly * p_poly - ParamPoly::constant(2 * q) * p_poly +
                                    ParamPoly::constant(static_cast<long>(q) * q * q + static_cast<long>(q) * q));
                    auto row = detail::make_parametric_row(c1, c2, p_poly, q, {eps1, eps2, eps3}, std::nullopt);
                    detail::validate_parametric_row(row);
                    regime_b.push_back(std::move(row));
                }
            }
            std::sort(regime_b.begin(), regime_b.end(), [&](const Degree6Solution& x, const Degree6Solution& y) {
                const mpz_class cx = c1_const(x), cy = c1_const(y);
                if (cx != cy) return cx < cy;
                return x.origin.signs.eps3 > y.origin.signs.eps3;
            });
            for (auto& r : regime_b) block.push_back(std::move(r));
        }
        for (auto& r : block) out.push_back(std::move(r));
    }
    return out;
}

// The eight structured divisors of eps2 - eps1 q^3 for q >= 2 (four values
// and their negatives; duplicates collapse for small q).
inline std::vector<mpz_class> basic_divisors(long q, int eps1, int eps2) {
    if (q < 2) throw std::invalid_argument("basic_divisors: q must be at least 2");
    if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
        throw std::invalid_argument("basic_divisors: signs must be +-1");
    const mpz_class Q = q;
    std::vector<mpz_class> base;
    if (eps1 == eps2) {
        base = {1, Q - 1, Q * Q + Q + 1, Q * Q * Q - 1};
    } else {
        base = {1, Q + 1, Q * Q - Q + 1, Q * Q * Q + 1};
    }
    std::set<mpz_class> s;
    for (const auto& v : base) {
        s.insert(v);
        s.insert(-v);
    }
    return std::vector<mpz_class>(s.begin(), s.end());
}

// Whether a degree-6 CS polynomial with q = c_5 - c_1 >= 2 has p + 2q among
// the structured divisors.
inline bool is_basic(const IntPoly& f) {
    if (f.degree() != 6) throw std::invalid_argument("is_basic: degree must be 6");
    if (!is_cs_quick(f)) throw std::invalid_argument("is_basic: not a CS polynomial");
    std::vector<mpz_class> c(f.coeffs().begin(), f.coeffs().end());
    mpz_class qz = c[5] - c[1];
    if (qz < 2) throw std::invalid_argument("is_basic: requires q = c5 - c1 >= 2");
    const long q = static_cast<long>(qz.get_si());
    const int eps1 = static_cast<int>(eq_linear(c).get_si());
    const int eps2 = static_cast<int>(eq_quartic(c).get_si());
    const mpz_class d = c[4] - c[2] + 2 * qz;
    auto basics = basic_divisors(q, eps1, eps2);
    return std::find(basics.begin(), basics.end(), d) != basics.end();
}

// ---------------------------------------------------------------------------
// table emission

struct TableRow {
    long q = 0;
    Degree6Solution solution;
    std::string positivity;  // "yes"/"no" for tuples; a condition for families
};

namespace detail {

struct ParametricAnnotation {
    long q;
    const char* coeffs[5];  // c1..c5
    const char* condition;
};

// Positivity conditions carried by the parametric rows with 0 <= q <= 1,
// keyed by the exact coefficient expressions.
inline constexpr ParametricAnnotation kParametricPositivity[] = {
    {0, {"2a+1", "a^2-a", "-2a^2-2a-2", "a^2-a-1", "2a+1"}, "a<=0"},
    {0, {"2a+1", "a^2-a-1", "-2a^2-2a-2", "a^2-a-2", "2a+1"}, "a<=-1"},
    {0, {"2a+1", "a^2-a-1", "-2a^2-2a-2", "a^2-a", "2a+1"}, "a<=0"},
    {0, {"2a+1", "a^2-a-2", "-2a^2-2a-2", "a^2-a-1", "2a+1"}, "a<=-1"},
    {1, {"3a-1", "3a^2-a+4", "-6a^2-4a-6", "3a^2-a+2", "3a"}, "always"},
    {1, {"3a", "3a^2+a+4", "-6a^2-8a-8", "3a^2+a+2", "3a+1"}, "always"},
    {1, {"2a-1", "a^2-3a", "-2a^2+a-1", "a^2-2a+1", "2a"}, "always"},
    {1, {"2a", "a^2-2a-1", "-2a^2-a-1", "a^2-a", "2a+1"}, "a<=0"},
    {1, {"5a-2", "5a^2-11a+2", "-10a^2+12a-2", "5a^2-11a", "5a-1"}, "a<=0"},
    {1, {"5a-1", "5a^2-9a", "-10a^2+8a", "5a^2-9a-2", "5a"}, "a<=0"},
    {1, {"5a", "5a^2-7a-2", "-10a^2+4a+2", "5a^2-7a-4", "5a+1"}, "a<=-1"},
    {1, {"5a+2", "5a^2-3a-4", "-10a^2-4a+2", "5a^2-3a-6", "5a+3"}, "a<=-1"},
    {1, {"2a-1", "a^2-3a", "-2a^2+a-2", "a^2-2a", "2a"}, "a<=0"},
    {1, {"2a", "a^2-2a-1", "-2a^2-a-3", "a^2-a", "2a+1"}, "a<=2"},
    {1, {"2a-1", "a^2-3a", "-2a^2+a-3", "a^2-2a+1", "2a"}, "a<=3"},
    {1, {"2a", "a^2-2a-2", "-2a^2-a-2", "a^2-a", "2a+1"}, "a<=0"},
};

inline std::string parametric_positivity(const Degree6Solution& row) {
    for (const auto& ann : kParametricPositivity) {
        if (ann.q != row.origin.q) continue;
        bool match = true;
        for (int i = 0; i < 5 && match; ++i)
            if (!(ParamPoly::parse(ann.coeffs[i]) == row.param_tuple[static_cast<std::size_t>(i) + 1])) match = false;
        if (match) return ann.condition;
    }
    return "unknown";
}

}  // namespace detail

// Solutions for every q in [q_lo, q_hi], grouped by q, with a positivity
// column: exact yes/no for finite tuples, the carried condition for the
// parametric rows. solve_q calls for distinct q run concurrently.
inline std::vector<TableRow> emit_table(long q_lo, long q_hi, const SolveOptions& opts = {}) {
    if (q_lo < 0 || q_lo > q_hi) throw std::invalid_argument("emit_table: need 0 <= q_lo <= q_hi");
    std::vector<std::future<std::vector<Degree6Solution>>> jobs;
    for (long q = q_lo; q <= q_hi; ++q)
        jobs.push_back(std::async(std::launch::async, [q, &opts] { return solve_q(q, opts); }));
    std::vector<TableRow> out;
    for (long q = q_lo; q <= q_hi; ++q) {
        for (auto& sol : jobs[static_cast<std::size_t>(q - q_lo)].get()) {
            TableRow row;
            row.q = q;
            if (sol.parametric) {
                row.positivity = detail::parametric_positivity(sol);
            } else {
                row.positivity = is_positive(sol.as_poly()) ? "yes" : "no";
            }
            row.solution = std::move(sol);
            out.push_back(std::move(row));
        }
    }
    return out;
}

inline std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "q,c0,c1,c2,c3,c4,c5,positivity\n";
    for (const auto& r : rows) {
        os << r.q;
        if (r.solution.parametric) {
            for (const auto& e : r.solution.param_tuple) os << "," << e.to_string();
        } else {
            for (const auto& v : r.solution.tuple) os << "," << v.get_str();
        }
        os << "," << r.positivity << "\n";
    }
    return os.str();
}

}  // namespace csp::dioph6

#endif
