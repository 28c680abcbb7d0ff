#ifndef CSP_INTMATRIX_HPP
#define CSP_INTMATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csp/detail/combinatorics.hpp"

namespace csp {

// Dense square matrix over the integers. All arithmetic is exact; there is
// no floating point anywhere in this module.
class IntMatrix {
  public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int order) : n_(order), e_(static_cast<std::size_t>(order) * order) {
        if (order < 0) throw std::invalid_argument("IntMatrix: negative order");
    }
    IntMatrix(int order, std::vector<mpz_class> entries) : n_(order), e_(std::move(entries)) {
        if (order < 0 || e_.size() != static_cast<std::size_t>(order) * order)
            throw std::invalid_argument("IntMatrix: entry count does not match order");
    }

    static IntMatrix identity(int order) {
        IntMatrix m(order);
        for (int i = 0; i < order; ++i) m.at(i, i) = 1;
        return m;
    }

    int order() const { return n_; }

    mpz_class& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const mpz_class& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    IntMatrix operator-(const IntMatrix& rhs) const {
        require_same_order(rhs);
        IntMatrix out(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
        return out;
    }

    IntMatrix operator+(const IntMatrix& rhs) const {
        require_same_order(rhs);
        IntMatrix out(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
        return out;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        require_same_order(rhs);
        IntMatrix out(n_);
        mpz_class acc;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                acc = 0;
                for (int k = 0; k < n_; ++k) acc += at(i, k) * rhs.at(k, j);
                out.at(i, j) = acc;
            }
        return out;
    }

    // Exact determinant by fraction-free (Bareiss) elimination with row
    // pivoting. Every division below is exact by construction.
    mpz_class det() const {
        if (n_ == 0) return 1;
        std::vector<mpz_class> a = e_;
        auto el = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * n_ + j]; };
        int sign = 1;
        mpz_class prev = 1;
        for (int k = 0; k + 1 < n_; ++k) {
            if (el(k, k) == 0) {
                int r = k + 1;
                while (r < n_ && el(r, k) == 0) ++r;
                if (r == n_) return 0;
                for (int j = k; j < n_; ++j) std::swap(el(k, j), el(r, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n_; ++i) {
                for (int j = k + 1; j < n_; ++j) {
                    mpz_class num = el(i, j) * el(k, k) - el(i, k) * el(k, j);
                    mpz_divexact(el(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                }
                el(i, k) = 0;
            }
            prev = el(k, k);
        }
        return sign == 1 ? el(n_ - 1, n_ - 1) : mpz_class(-el(n_ - 1, n_ - 1));
    }

    // Minor with the given row/column index sets (sorted, same size).
    mpz_class minor_det(const std::vector<int>& rows, const std::vector<int>& cols) const {
        const int k = static_cast<int>(rows.size());
        IntMatrix sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        return sub.det();
    }

    // Adjugate, so that A * adjugate(A) = det(A) * I. Only used at small
    // orders (cofactor expansion via minors).
    IntMatrix adjugate() const {
        IntMatrix out(n_);
        if (n_ == 1) {
            out.at(0, 0) = 1;
            return out;
        }
        std::vector<int> all(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) all[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                std::vector<int> rows, cols;
                for (int r = 0; r < n_; ++r)
                    if (r != i) rows.push_back(r);
                for (int c = 0; c < n_; ++c)
                    if (c != j) cols.push_back(c);
                mpz_class m = minor_det(rows, cols);
                out.at(j, i) = ((i + j) % 2 == 0) ? m : mpz_class(-m);
            }
        return out;
    }

  private:
    void require_same_order(const IntMatrix& rhs) const {
        if (n_ != rhs.n_) throw std::invalid_argument("IntMatrix: order mismatch");
    }

    int n_;
    std::vector<mpz_class> e_;
};

inline mpz_class det(const IntMatrix& m) { return m.det(); }

// k-th exterior power: the C(n,k) x C(n,k) matrix of k x k minors, rows and
// columns indexed by the k-subsets of {1..n} in lexicographic order.
inline IntMatrix exterior_power_matrix(const IntMatrix& m, int k) {
    const int n = m.order();
    if (k < 1 || k > n) throw std::invalid_argument("exterior_power_matrix: k out of range");
    if (k == 1) return m;
    const auto subs = detail::k_subsets(n, k);
    const int N = static_cast<int>(subs.size());
    IntMatrix out(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out.at(i, j) = m.minor_det(subs[static_cast<std::size_t>(i)], subs[static_cast<std::size_t>(j)]);
    return out;
}

}  // namespace csp

#endif
