#ifndef CSP_STURM_HPP
#define CSP_STURM_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "csp/intpoly.hpp"

namespace csp {

namespace detail {

// Polynomials over Q, ascending powers, used only inside the Sturm chain.
using RatPoly = std::vector<mpq_class>;

inline void rat_normalize(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rat_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rat_from(const IntPoly& f) {
    RatPoly p(f.coeffs().begin(), f.coeffs().end());
    rat_normalize(p);
    return p;
}

inline RatPoly rat_derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
    rat_normalize(d);
    return d;
}

inline RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    while (rat_deg(a) >= rat_deg(b)) {
        mpq_class q = a.back() / b.back();
        const int shift = rat_deg(a) - rat_deg(b);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] -= q * b[i];
        a.pop_back();
        rat_normalize(a);
        if (a.empty()) break;
    }
    return a;
}

inline RatPoly rat_monic(RatPoly p) {
    if (p.empty()) return p;
    mpq_class lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline RatPoly rat_gcd(RatPoly a, RatPoly b) {
    rat_normalize(a);
    rat_normalize(b);
    while (!b.empty()) {
        RatPoly r = rat_rem(a, b);
        a = std::move(b);
        b = rat_monic(std::move(r));
    }
    return rat_monic(std::move(a));
}

inline int sign_at_zero(const RatPoly& p) { return p.empty() ? 0 : sgn(p.front()); }

inline int sign_at_plus_inf(const RatPoly& p) { return p.empty() ? 0 : sgn(p.back()); }

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace detail

// Exact count of distinct real roots of f in the open interval (0, +inf),
// via a Sturm chain over rationals. Roots at 0 are excluded (any power of x
// is stripped first); multiple roots are counted once (the squarefree part
// is used).
inline int count_positive_real_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("count_positive_real_roots: zero polynomial");
    detail::RatPoly p = detail::rat_from(f);
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    if (detail::rat_deg(p) < 1) return 0;
    detail::RatPoly g = detail::rat_gcd(p, detail::rat_derivative(p));
    if (detail::rat_deg(g) > 0) {
        // divide out repeated roots: p / g by long division (exact)
        detail::RatPoly q(p.size() - g.size() + 1, 0);
        detail::RatPoly r = p;
        while (detail::rat_deg(r) >= detail::rat_deg(g)) {
            mpq_class c = r.back() / g.back();
            const int shift = detail::rat_deg(r) - detail::rat_deg(g);
            q[static_cast<std::size_t>(shift)] = c;
            for (std::size_t i = 0; i < g.size(); ++i) r[i + static_cast<std::size_t>(shift)] -= c * g[i];
            detail::rat_normalize(r);
            if (r.empty()) break;
        }
        p = std::move(q);
        detail::rat_normalize(p);
    }
    if (detail::rat_deg(p) < 1) return 0;

    std::vector<detail::RatPoly> chain{p, detail::rat_derivative(p)};
    while (!chain.back().empty() && detail::rat_deg(chain.back()) >= 1) {
        detail::RatPoly r = detail::rat_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    std::vector<int> at0, atInf;
    at0.reserve(chain.size());
    atInf.reserve(chain.size());
    for (const auto& q : chain) {
        at0.push_back(detail::sign_at_zero(q));
        atInf.push_back(detail::sign_at_plus_inf(q));
    }
    return detail::sign_variations(at0) - detail::sign_variations(atInf);
}

// Positivity test for a doubly monic polynomial of degree n: true iff
// (-1)^n f(t) > 0 for every t < 0. Writing g(s) = (-1)^n f(-s), g is monic
// with g(0) = 1, so the condition is exactly that g has no root in (0, inf).
inline bool is_positive(const IntPoly& f) {
    if (!f.is_doubly_monic()) throw std::invalid_argument("is_positive: polynomial must be doubly monic");
    const int n = f.degree();
    std::vector<mpz_class> g(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        mpz_class c = f.coeff(i);
        if ((n + i) % 2 != 0) c = -c;
        g[static_cast<std::size_t>(i)] = c;
    }
    return count_positive_real_roots(IntPoly::from_ascending(std::move(g))) == 0;
}

}  // namespace csp

#endif
