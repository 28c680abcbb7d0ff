#ifndef CSP_INTPOLY_HPP
#define CSP_INTPOLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csp/intmatrix.hpp"

namespace csp {

// Dense univariate polynomial with exact integer coefficients, stored in
// ascending powers: coeffs()[i] is the coefficient of x^i. The zero
// polynomial has an empty coefficient vector and degree -1.
class IntPoly {
  public:
    IntPoly() = default;

    static IntPoly from_ascending(std::vector<mpz_class> c) {
        IntPoly p;
        p.c_ = std::move(c);
        p.normalize();
        return p;
    }

    static IntPoly from_descending(std::vector<mpz_class> c) {
        std::reverse(c.begin(), c.end());
        return from_ascending(std::move(c));
    }

    static IntPoly constant(mpz_class v) { return from_ascending({std::move(v)}); }

    static IntPoly monomial(int deg, mpz_class coeff = 1) {
        if (deg < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
        std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1);
        c.back() = std::move(coeff);
        return from_ascending(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    // Coefficient of x^i (zero beyond the degree).
    const mpz_class& coeff(int i) const {
        static const mpz_class zero = 0;
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }

    std::vector<mpz_class> coeffs_descending() const {
        std::vector<mpz_class> out(c_.rbegin(), c_.rend());
        return out;
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Monic with constant term (-1)^degree.
    bool is_doubly_monic() const {
        if (!is_monic()) return false;
        return c_.front() == (degree() % 2 == 0 ? 1 : -1);
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<mpz_class> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return from_ascending(std::move(d));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return from_ascending(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return from_ascending(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return from_ascending(std::move(c));
    }

    friend IntPoly operator*(const mpz_class& s, const IntPoly& p) {
        std::vector<mpz_class> c(p.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
        return from_ascending(std::move(c));
    }

    // Total ordering for deterministic output: by degree, then by the
    // coefficient tuple from the leading term down.
    friend bool operator<(const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            int c = cmp(a.coeff(i), b.coeff(i));
            if (c != 0) return c < 0;
        }
        return false;
    }

    // Human-readable form in descending powers, e.g. "x^4-x+1".
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const mpz_class& c = coeff(i);
            if (c == 0) continue;
            mpz_class abs_c = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? "-" : "+");
            }
            if (i == 0 || abs_c != 1) os << abs_c.get_str();
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

// Companion matrix of a monic polynomial: superdiagonal ones and last row
// (-c_0, ..., -c_{n-1}); its characteristic polynomial is f.
inline IntMatrix companion(const IntPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("companion: degree must be at least 1");
    IntMatrix a(n);
    for (int i = 0; i + 1 < n; ++i) a.at(i, i + 1) = 1;
    for (int j = 0; j < n; ++j) a.at(n - 1, j) = -f.coeff(j);
    return a;
}

// Characteristic polynomial det(xI - M), computed exactly by evaluating the
// determinant at x = 0..N and interpolating with Newton forward differences
// over rationals. The result is integral; this is asserted.
inline IntPoly char_poly(const IntMatrix& m) {
    const int n = m.order();
    if (n == 0) return IntPoly::constant(1);
    std::vector<mpz_class> vals(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        IntMatrix a = IntMatrix::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = (i == j ? mpz_class(t) : mpz_class(0)) - m.at(i, j);
        vals[static_cast<std::size_t>(t)] = a.det();
    }
    // forward differences: vals[j] becomes Delta^j at 0
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i) vals[static_cast<std::size_t>(i)] -= vals[static_cast<std::size_t>(i - 1)];
    // chi(x) = sum_j Delta^j/j! * x(x-1)...(x-j+1)
    std::vector<mpq_class> acc(static_cast<std::size_t>(n) + 1, 0);
    std::vector<mpq_class> basis{1};
    mpz_class factorial = 1;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            factorial *= j;
            basis.resize(static_cast<std::size_t>(j) + 1, 0);
            for (int i = j; i >= 1; --i)
                basis[static_cast<std::size_t>(i)] =
                    basis[static_cast<std::size_t>(i - 1)] - mpq_class(j - 1) * basis[static_cast<std::size_t>(i)];
            basis[0] = -mpq_class(j - 1) * basis[0];
        }
        mpq_class w(vals[static_cast<std::size_t>(j)], factorial);
        w.canonicalize();
        for (int i = 0; i <= j; ++i) acc[static_cast<std::size_t>(i)] += w * basis[static_cast<std::size_t>(i)];
    }
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        mpq_class v = acc[static_cast<std::size_t>(i)];
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("char_poly: interpolation produced a non-integer");
        out[static_cast<std::size_t>(i)] = v.get_num();
    }
    return IntPoly::from_ascending(std::move(out));
}

// k-th exterior power of a monic polynomial: the characteristic polynomial
// of the k-th exterior power of any matrix realizing f. Monic of degree
// C(deg f, k), independent of the matrix representative.
inline IntPoly exterior_power_poly(const IntPoly& f, int k) {
    if (!f.is_monic()) throw std::invalid_argument("exterior_power_poly: polynomial must be monic");
    if (k < 1 || k > f.degree()) throw std::invalid_argument("exterior_power_poly: k out of range");
    if (k == 1) return f;
    return char_poly(exterior_power_matrix(companion(f), k));
}

// Signed reciprocal f*(t) = (-1)^n t^n f(1/t); the characteristic polynomial
// of the inverse matrix. Requires a doubly monic input so that f* is again
// monic.
inline IntPoly signed_reciprocal(const IntPoly& f) {
    if (!f.is_doubly_monic())
        throw std::invalid_argument("signed_reciprocal: polynomial must be doubly monic");
    const int n = f.degree();
    const int sign = n % 2 == 0 ? 1 : -1;
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = sign * f.coeff(n - i);
    return IntPoly::from_ascending(std::move(c));
}

}  // namespace csp

#endif
