#ifndef CSP_FINITE_FIELD_HPP
#define CSP_FINITE_FIELD_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csp/detail/combinatorics.hpp"
#include "csp/detail/modarith.hpp"
#include "csp/errors.hpp"
#include "csp/intpoly.hpp"

namespace csp {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x00c5bab1e5eed001ull;
inline constexpr std::uint64_t kDefaultTrialDivisionBound = 10'000'000ull;

// Polynomial over the prime field F_p, residues in [0, p), ascending powers.
// The zero polynomial has an empty coefficient vector.
class FpPoly {
  public:
    using u64 = detail::u64;

    explicit FpPoly(u64 p) : p_(check_modulus(p)) {}

    FpPoly(u64 p, std::vector<u64> coeffs) : p_(check_modulus(p)), c_(std::move(coeffs)) {
        for (auto& v : c_) v %= p_;
        normalize();
    }

    static FpPoly from_signed(u64 p, const std::vector<long long>& coeffs_ascending) {
        check_modulus(p);
        std::vector<u64> c(coeffs_ascending.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            long long r = coeffs_ascending[i] % static_cast<long long>(p);
            if (r < 0) r += static_cast<long long>(p);
            c[i] = static_cast<u64>(r);
        }
        return FpPoly(p, std::move(c));
    }

    static FpPoly x(u64 p) { return FpPoly(p, {0, 1}); }
    static FpPoly one(u64 p) { return FpPoly(p, {1}); }

    u64 modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 coeff(int i) const { return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)]; }
    u64 leading() const { return c_.empty() ? 0 : c_.back(); }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    // Deterministic total order: by degree, then coefficients from x^0 up.
    friend bool operator<(const FpPoly& a, const FpPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c_ < b.c_;
    }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        a.require_same_field(b);
        std::vector<u64> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::add_mod(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p_);
        return FpPoly(a.p_, std::move(c));
    }

    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        a.require_same_field(b);
        std::vector<u64> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::sub_mod(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p_);
        return FpPoly(a.p_, std::move(c));
    }

    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        a.require_same_field(b);
        if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
        std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = detail::add_mod(c[i + j], detail::mul_mod(a.c_[i], b.c_[j], a.p_), a.p_);
        }
        return FpPoly(a.p_, std::move(c));
    }

    FpPoly scaled(u64 s) const {
        std::vector<u64> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = detail::mul_mod(c_[i], s % p_, p_);
        return FpPoly(p_, std::move(c));
    }

    FpPoly monic() const {
        if (is_zero() || is_monic()) return *this;
        return scaled(detail::inv_mod(leading(), p_));
    }

    // Quotient and remainder; the divisor may have any nonzero leading
    // coefficient.
    friend std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) {
        a.require_same_field(b);
        if (b.is_zero()) throw std::domain_error("FpPoly: division by zero");
        if (a.degree() < b.degree()) return {FpPoly(a.p_), a};
        const u64 p = a.p_;
        const u64 inv_lead = detail::inv_mod(b.leading(), p);
        std::vector<u64> r = a.c_;
        std::vector<u64> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
        for (int i = a.degree(); i >= b.degree(); --i) {
            u64 top = r[static_cast<std::size_t>(i)];
            if (top == 0) continue;
            u64 factor = detail::mul_mod(top, inv_lead, p);
            q[static_cast<std::size_t>(i - b.degree())] = factor;
            for (int j = 0; j <= b.degree(); ++j) {
                auto idx = static_cast<std::size_t>(i - b.degree() + j);
                r[idx] = detail::sub_mod(r[idx], detail::mul_mod(factor, b.coeff(j), p), p);
            }
        }
        return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
    }

    friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divrem(a, b).first; }
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divrem(a, b).second; }

    FpPoly derivative() const {
        if (c_.size() <= 1) return FpPoly(p_);
        std::vector<u64> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = detail::mul_mod(c_[i], i % p_, p_);
        return FpPoly(p_, std::move(d));
    }

    u64 eval(u64 x) const {
        u64 acc = 0;
        x %= p_;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = detail::add_mod(detail::mul_mod(acc, x, p_), *it, p_);
        return acc;
    }

    // Residue form in descending powers, e.g. "x^3+x^2+1".
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            u64 c = coeff(i);
            if (c == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || c != 1) os << c;
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    static u64 check_modulus(u64 p) {
        if (p >= (1ull << 63)) throw std::invalid_argument("FpPoly: modulus must be below 2^63");
        if (!detail::is_prime_u64(p)) throw std::invalid_argument("FpPoly: modulus is not prime");
        return p;
    }

    void require_same_field(const FpPoly& other) const {
        if (p_ != other.p_) throw std::invalid_argument("FpPoly: mixed moduli");
    }

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    u64 p_;
    std::vector<u64> c_;
};

// Coefficient-wise reduction of an integer polynomial mod p.
inline FpPoly reduce_mod_p(const IntPoly& f, detail::u64 p) {
    FpPoly probe(p);  // validates primality and size of p
    std::vector<detail::u64> c(f.coeffs().size());
    mpz_class pz = static_cast<unsigned long>(p);
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpz_class r = f.coeffs()[i] % pz;
        if (r < 0) r += pz;
        c[i] = static_cast<detail::u64>(r.get_ui());
    }
    return FpPoly(p, std::move(c));
}

inline FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// g = gcd(a, b) together with u satisfying u*a = g (mod b).
inline std::pair<FpPoly, FpPoly> half_ext_gcd(FpPoly a, FpPoly b) {
    const detail::u64 p = a.modulus();
    FpPoly u0 = FpPoly::one(p), u1(p);
    FpPoly r0 = std::move(a), r1 = std::move(b);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        FpPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {r0, u0};
    detail::u64 inv = detail::inv_mod(r0.leading(), p);
    return {r0.scaled(inv), u0.scaled(inv)};
}

inline FpPoly pow_mod(const FpPoly& base, const mpz_class& exp, const FpPoly& mod) {
    if (sgn(exp) < 0) throw std::invalid_argument("pow_mod: negative exponent");
    FpPoly result = FpPoly::one(base.modulus()) % mod;
    FpPoly b = base % mod;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % mod;
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = (result * b) % mod;
    }
    return result;
}

inline FpPoly pow_mod(const FpPoly& base, detail::u64 exp, const FpPoly& mod) {
    return pow_mod(base, mpz_class(static_cast<unsigned long>(exp)), mod);
}

// ---------------------------------------------------------------------------
// factorization: squarefree part -> distinct degree -> equal degree splitting

namespace detail {

inline FpPoly pth_root(const FpPoly& f) {
    // over F_p the Frobenius fixes scalars, so g(x)^p = g(x^p): take the
    // coefficients at indices divisible by p
    const u64 p = f.modulus();
    std::vector<u64> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return FpPoly(p, std::move(c));
}

inline void squarefree_decompose(const FpPoly& f, int outer_mult, std::vector<std::pair<FpPoly, int>>& out) {
    const u64 p = f.modulus();
    if (f.degree() < 1) return;
    FpPoly fd = f.derivative();
    if (fd.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * static_cast<int>(p), out);
        return;
    }
    FpPoly g = gcd(f, fd);
    FpPoly w = f / g;
    int i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, g);
        FpPoly fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac.monic(), i * outer_mult);
        w = std::move(y);
        g = g / w;
        ++i;
    }
    if (!g.is_one()) squarefree_decompose(pth_root(g), outer_mult * static_cast<int>(p), out);
}

// distinct-degree split of a monic squarefree polynomial: list of
// (product of all irreducible factors of degree d, d)
inline std::vector<std::pair<FpPoly, int>> distinct_degree_split(const FpPoly& f) {
    std::vector<std::pair<FpPoly, int>> out;
    const u64 p = f.modulus();
    FpPoly rest = f;
    FpPoly h = FpPoly::x(p) % rest;
    int d = 0;
    while (rest.degree() > 0 && 2 * (d + 1) <= rest.degree()) {
        ++d;
        h = pow_mod(h, p, rest);
        FpPoly g = gcd(h - FpPoly::x(p), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

// Cantor-Zassenhaus equal-degree splitting of a monic product of distinct
// irreducible factors, all of degree d.
inline void equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const u64 p = f.modulus();
    FpPoly splitter(p);
    while (true) {
        std::vector<u64> rc(static_cast<std::size_t>(f.degree()));
        for (auto& v : rc) v = rng() % p;
        FpPoly r(p, std::move(rc));
        if (r.is_zero()) continue;
        FpPoly t(p);
        if (p == 2) {
            // trace map over F_{2^d}
            FpPoly acc = r % f;
            t = acc;
            for (int i = 1; i < d; ++i) {
                acc = (acc * acc) % f;
                t = t + acc;
            }
            t = gcd(t, f);
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            FpPoly s = pow_mod(r, e, f);
            t = gcd(s - FpPoly::one(p), f);
        }
        if (t.degree() > 0 && t.degree() < f.degree()) {
            splitter = std::move(t);
            break;
        }
    }
    equal_degree_split(splitter, d, rng, out);
    equal_degree_split(f / splitter, d, rng, out);
}

}  // namespace detail

// Full factorization of a nonzero polynomial over F_p into monic irreducible
// factors with multiplicities. Output is sorted by (degree, coefficient
// tuple), so it is deterministic for a fixed seed.
inline std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f,
                                                  std::uint64_t seed = kDefaultFactorSeed) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    std::vector<std::pair<FpPoly, int>> out;
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FpPoly, int>> squarefree;
    detail::squarefree_decompose(f.monic(), 1, squarefree);
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : detail::distinct_degree_split(part)) {
            std::vector<FpPoly> irr;
            detail::equal_degree_split(prod, d, rng, irr);
            for (auto& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

// Rabin irreducibility test: x^{p^n} = x (mod f) and, for every prime l | n,
// gcd(x^{p^{n/l}} - x, f) = 1.
inline bool is_irreducible(const FpPoly& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
    if (n == 1) return true;
    const detail::u64 p = f.modulus();
    const FpPoly x = FpPoly::x(p);
    const FpPoly fm = f.monic();

    auto frobenius_iterate = [&](int steps) {
        FpPoly h = x % fm;
        for (int i = 0; i < steps; ++i) h = pow_mod(h, p, fm);
        return h;
    };

    if (!(frobenius_iterate(n) == x % fm)) return false;
    int rest = n;
    for (int l = 2; l * l <= rest; ++l) {
        if (rest % l != 0) continue;
        while (rest % l == 0) rest /= l;
        if (gcd(frobenius_iterate(n / l) - x, fm).degree() != 0) return false;
    }
    if (rest > 1 && gcd(frobenius_iterate(n / rest) - x, fm).degree() != 0) return false;
    return true;
}

namespace detail {

// Distinct prime factors of n by trial division up to the bound. If the
// cofactor left after trial division is composite, the factorization is
// incomplete and nullopt is returned.
inline std::optional<std::vector<mpz_class>> prime_factors_bounded(mpz_class n, u64 bound) {
    std::vector<mpz_class> primes;
    auto strip = [&](u64 d) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            primes.emplace_back(static_cast<unsigned long>(d));
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= static_cast<unsigned long>(d);
        }
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d <= bound && mpz_cmp_ui(n.get_mpz_t(), 1) > 0; d += 6) {
        if (mpz_class(d) * d > n && mpz_probab_prime_p(n.get_mpz_t(), 40)) break;
        strip(d);
        strip(d + 2);
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            primes.push_back(n);
        } else {
            return std::nullopt;
        }
    }
    return primes;
}

}  // namespace detail

// True iff a root of the irreducible polynomial f generates the full
// multiplicative group of F_{p^n}. Needs the prime factorization of p^n - 1,
// obtained by trial division up to the given bound; if the remaining
// cofactor is composite the test refuses with undecided_error rather than
// guessing.
inline bool is_primitive(const FpPoly& f, std::uint64_t trial_bound = kDefaultTrialDivisionBound) {
    if (f.degree() < 1) throw std::invalid_argument("is_primitive: constant polynomial");
    if (f.coeff(0) == 0) throw std::invalid_argument("is_primitive: zero constant term");
    if (!is_irreducible(f)) throw std::invalid_argument("is_primitive: polynomial is reducible");
    const detail::u64 p = f.modulus();
    const int n = f.degree();
    mpz_class order;
    mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    order -= 1;
    auto primes = detail::prime_factors_bounded(order, trial_bound);
    if (!primes) {
        std::ostringstream os;
        os << "is_primitive: undecided, cannot factor " << order.get_str()
           << " by trial division up to " << trial_bound;
        throw undecided_error(os.str());
    }
    const FpPoly fm = f.monic();
    const FpPoly x = FpPoly::x(p);
    for (const auto& l : *primes) {
        if (pow_mod(x, order / l, fm).is_one()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// extension fields F_{p^m}

class ExtFieldElem;

// F_{p^m} presented as F_p[y]/(modulus), with the modulus chosen as the
// lexicographically smallest monic irreducible of degree m (ascending search
// over constant-first coefficient tuples), so element representations are
// reproducible across runs.
class ExtField : public std::enable_shared_from_this<ExtField> {
  public:
    using u64 = detail::u64;

    static std::shared_ptr<const ExtField> make(u64 p, int m) {
        static std::mutex mu;
        static std::map<std::pair<u64, int>, std::shared_ptr<const ExtField>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(p, m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto field = std::shared_ptr<const ExtField>(new ExtField(p, m));
        cache.emplace(key, field);
        return field;
    }

    u64 p() const { return p_; }
    int extension_degree() const { return m_; }
    const FpPoly& modulus() const { return modulus_; }

    mpz_class order() const {
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(m_));
        return q;
    }

    ExtFieldElem zero() const;
    ExtFieldElem one() const;
    ExtFieldElem embed(u64 scalar) const;
    ExtFieldElem from_rep(std::vector<u64> rep) const;
    ExtFieldElem random_element(std::mt19937_64& rng) const;

  private:
    ExtField(u64 p, int m) : p_(p), m_(m), modulus_(find_modulus(p, m)) {}

    static FpPoly find_modulus(u64 p, int m) {
        if (m < 1) throw std::invalid_argument("ExtField: extension degree must be positive");
        FpPoly probe(p);  // validates p
        if (m == 1) return FpPoly::x(p);
        // ascending search: tuple (c_0,...,c_{m-1}) ordered as a base-p counter
        std::vector<u64> c(static_cast<std::size_t>(m) + 1, 0);
        c.back() = 1;
        while (true) {
            FpPoly candidate(p, c);
            if (is_irreducible(candidate)) return candidate;
            int i = 0;
            while (i < m && c[static_cast<std::size_t>(i)] == p - 1) {
                c[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == m) throw std::logic_error("ExtField: no irreducible polynomial found");
            ++c[static_cast<std::size_t>(i)];
        }
    }

    u64 p_;
    int m_;
    FpPoly modulus_;
};

class ExtFieldElem {
  public:
    using u64 = detail::u64;

    ExtFieldElem(std::shared_ptr<const ExtField> field, std::vector<u64> rep)
        : field_(std::move(field)), rep_(std::move(rep)) {
        rep_.resize(static_cast<std::size_t>(field_->extension_degree()), 0);
    }

    const std::shared_ptr<const ExtField>& field() const { return field_; }
    const std::vector<u64>& rep() const { return rep_; }

    bool is_zero() const {
        return std::all_of(rep_.begin(), rep_.end(), [](u64 v) { return v == 0; });
    }
    bool is_one() const {
        if (rep_.empty() || rep_[0] != 1) return false;
        return std::all_of(rep_.begin() + 1, rep_.end(), [](u64 v) { return v == 0; });
    }

    friend bool operator==(const ExtFieldElem& a, const ExtFieldElem& b) {
        return a.field_.get() == b.field_.get() && a.rep_ == b.rep_;
    }

    friend ExtFieldElem operator+(const ExtFieldElem& a, const ExtFieldElem& b) {
        a.require_same_field(b);
        const u64 p = a.field_->p();
        std::vector<u64> r(a.rep_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::add_mod(a.rep_[i], b.rep_[i], p);
        return ExtFieldElem(a.field_, std::move(r));
    }

    friend ExtFieldElem operator-(const ExtFieldElem& a, const ExtFieldElem& b) {
        a.require_same_field(b);
        const u64 p = a.field_->p();
        std::vector<u64> r(a.rep_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::sub_mod(a.rep_[i], b.rep_[i], p);
        return ExtFieldElem(a.field_, std::move(r));
    }

    friend ExtFieldElem operator*(const ExtFieldElem& a, const ExtFieldElem& b) {
        a.require_same_field(b);
        const u64 p = a.field_->p();
        const int m = a.field_->extension_degree();
        const auto& mod = a.field_->modulus();
        std::vector<u64> conv(static_cast<std::size_t>(2 * m - 1), 0);
        for (int i = 0; i < m; ++i) {
            if (a.rep_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < m; ++j) {
                auto idx = static_cast<std::size_t>(i + j);
                conv[idx] = detail::add_mod(conv[idx], detail::mul_mod(a.rep_[static_cast<std::size_t>(i)], b.rep_[static_cast<std::size_t>(j)], p), p);
            }
        }
        for (int i = 2 * m - 2; i >= m; --i) {
            u64 c = conv[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            conv[static_cast<std::size_t>(i)] = 0;
            for (int j = 0; j < m; ++j) {
                auto idx = static_cast<std::size_t>(i - m + j);
                conv[idx] = detail::sub_mod(conv[idx], detail::mul_mod(c, mod.coeff(j), p), p);
            }
        }
        conv.resize(static_cast<std::size_t>(m));
        return ExtFieldElem(a.field_, std::move(conv));
    }

    ExtFieldElem pow(const mpz_class& exp) const {
        if (sgn(exp) < 0) return inverse().pow(mpz_class(-exp));
        ExtFieldElem result = field_->one();
        if (exp == 0) return result;
        const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = result * result;
            if (mpz_tstbit(exp.get_mpz_t(), i)) result = result * (*this);
        }
        return result;
    }

    ExtFieldElem pow(u64 exp) const { return pow(mpz_class(static_cast<unsigned long>(exp))); }

    ExtFieldElem inverse() const {
        if (is_zero()) throw std::domain_error("ExtFieldElem: zero has no inverse");
        FpPoly rep_poly(field_->p(), rep_);
        auto [g, u] = half_ext_gcd(rep_poly, field_->modulus());
        if (g.degree() != 0) throw std::logic_error("ExtFieldElem: modulus is not irreducible");
        FpPoly inv = u % field_->modulus();
        std::vector<u64> r(static_cast<std::size_t>(field_->extension_degree()), 0);
        for (int i = 0; i <= inv.degree(); ++i) r[static_cast<std::size_t>(i)] = inv.coeff(i);
        return ExtFieldElem(field_, std::move(r));
    }

  private:
    void require_same_field(const ExtFieldElem& other) const {
        if (field_.get() != other.field_.get())
            throw std::invalid_argument("ExtFieldElem: mixed fields");
    }

    std::shared_ptr<const ExtField> field_;
    std::vector<u64> rep_;
};

inline ExtFieldElem ExtField::zero() const {
    return ExtFieldElem(shared_from_this(), std::vector<u64>(static_cast<std::size_t>(m_), 0));
}
inline ExtFieldElem ExtField::one() const { return embed(1); }
inline ExtFieldElem ExtField::embed(u64 scalar) const {
    std::vector<u64> r(static_cast<std::size_t>(m_), 0);
    r[0] = scalar % p_;
    return ExtFieldElem(shared_from_this(), std::move(r));
}
inline ExtFieldElem ExtField::from_rep(std::vector<u64> rep) const {
    if (rep.size() > static_cast<std::size_t>(m_)) throw std::invalid_argument("ExtField: representative too long");
    for (auto& v : rep) v %= p_;
    return ExtFieldElem(shared_from_this(), std::move(rep));
}
inline ExtFieldElem ExtField::random_element(std::mt19937_64& rng) const {
    std::vector<u64> r(static_cast<std::size_t>(m_));
    for (auto& v : r) v = rng() % p_;
    return ExtFieldElem(shared_from_this(), std::move(r));
}

// ---------------------------------------------------------------------------
// root extraction in an extension field

namespace detail {

// polynomials over an extension field, ascending powers; local helpers for
// root finding only
using KPoly = std::vector<ExtFieldElem>;

inline void kp_normalize(KPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline int kp_deg(const KPoly& f) { return static_cast<int>(f.size()) - 1; }

inline KPoly kp_rem(KPoly a, const KPoly& b) {
    kp_normalize(a);
    const ExtFieldElem lead_inv = b.back().inverse();
    while (kp_deg(a) >= kp_deg(b)) {
        ExtFieldElem factor = a.back() * lead_inv;
        const int shift = kp_deg(a) - kp_deg(b);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + static_cast<std::size_t>(shift)] = a[i + static_cast<std::size_t>(shift)] - factor * b[i];
        kp_normalize(a);
        if (a.empty()) break;
    }
    return a;
}

inline KPoly kp_quot(const KPoly& a0, const KPoly& b) {
    KPoly a = a0;
    kp_normalize(a);
    const ExtFieldElem lead_inv = b.back().inverse();
    if (kp_deg(a) < kp_deg(b)) return {};
    KPoly q(static_cast<std::size_t>(kp_deg(a) - kp_deg(b)) + 1, b.back().field()->zero());
    while (kp_deg(a) >= kp_deg(b)) {
        ExtFieldElem factor = a.back() * lead_inv;
        const int shift = kp_deg(a) - kp_deg(b);
        q[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + static_cast<std::size_t>(shift)] = a[i + static_cast<std::size_t>(shift)] - factor * b[i];
        kp_normalize(a);
        if (a.empty()) break;
    }
    return q;
}

inline KPoly kp_monic(KPoly f) {
    kp_normalize(f);
    if (f.empty() || f.back().is_one()) return f;
    ExtFieldElem inv = f.back().inverse();
    for (auto& c : f) c = c * inv;
    return f;
}

inline KPoly kp_gcd(KPoly a, KPoly b) {
    kp_normalize(a);
    kp_normalize(b);
    while (!b.empty()) {
        KPoly r = kp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return kp_monic(std::move(a));
}

inline KPoly kp_mulmod(const KPoly& a, const KPoly& b, const KPoly& mod) {
    const auto field = mod.back().field();
    if (a.empty() || b.empty()) return {};
    KPoly c(a.size() + b.size() - 1, field->zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return kp_rem(std::move(c), mod);
}

inline KPoly kp_powmod(const KPoly& base, const mpz_class& exp, const KPoly& mod) {
    const auto field = mod.back().field();
    KPoly result{field->one()};
    if (exp == 0) return result;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    KPoly b = kp_rem(base, mod);
    for (std::size_t i = bits; i-- > 0;) {
        result = kp_mulmod(result, result, mod);
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = kp_mulmod(result, b, mod);
    }
    return result;
}

inline KPoly kp_embed(const FpPoly& f, const std::shared_ptr<const ExtField>& field) {
    KPoly out;
    out.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) out.push_back(field->embed(f.coeff(i)));
    return out;
}

// One root of an irreducible g over F_p inside F_{p^m} (requires deg g | m),
// located by randomized splitting of the embedded polynomial.
inline ExtFieldElem find_root(const FpPoly& g, const std::shared_ptr<const ExtField>& field,
                              std::mt19937_64& rng) {
    const u64 p = field->p();
    const int m = field->extension_degree();
    KPoly h = kp_monic(kp_embed(g, field));
    const mpz_class q = field->order();
    const mpz_class half = (q - 1) / 2;
    while (kp_deg(h) > 1) {
        ExtFieldElem r = field->random_element(rng);
        KPoly s;
        if (p == 2) {
            // trace of r*X over F_2
            KPoly u{field->zero(), r};
            u = kp_rem(u, h);
            KPoly acc = u;
            s = u;
            for (int i = 1; i < m; ++i) {
                acc = kp_mulmod(acc, acc, h);
                if (s.size() < acc.size()) s.resize(acc.size(), field->zero());
                for (std::size_t j = 0; j < acc.size(); ++j) s[j] = s[j] + acc[j];
                kp_normalize(s);
            }
        } else {
            KPoly base{r, field->one()};  // X + r
            s = kp_powmod(base, half, h);
            if (s.empty())
                s = KPoly{field->zero() - field->one()};
            else
                s[0] = s[0] - field->one();
            kp_normalize(s);
        }
        if (s.empty()) continue;
        KPoly t = kp_gcd(s, h);
        const int dt = kp_deg(t);
        if (dt <= 0 || dt >= kp_deg(h)) continue;
        h = (2 * dt <= kp_deg(h)) ? std::move(t) : kp_quot(h, t);
        h = kp_monic(std::move(h));
    }
    return field->zero() - h[0];
}

}  // namespace detail

// Least m such that f splits into linear factors over F_{p^m}: the lcm of
// the degrees of its irreducible factors. Fully deterministic (no
// equal-degree splitting is needed).
inline int splitting_degree(const FpPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("splitting_degree: zero polynomial");
    if (f.degree() < 1) return 1;
    std::vector<std::pair<FpPoly, int>> squarefree;
    detail::squarefree_decompose(f.monic(), 1, squarefree);
    long long m = 1;
    for (const auto& [part, mult] : squarefree) {
        (void)mult;
        for (const auto& [prod, d] : detail::distinct_degree_split(part)) {
            (void)prod;
            m = std::lcm(m, static_cast<long long>(d));
        }
    }
    return static_cast<int>(m);
}

// All roots of f in the given extension field, listed with multiplicity.
// Each returned root is verified by evaluation. The field must be large
// enough, i.e. its degree must be a multiple of every irreducible-factor
// degree of f.
inline std::vector<ExtFieldElem> roots_in_extension(const FpPoly& f,
                                                    const std::shared_ptr<const ExtField>& field,
                                                    std::uint64_t seed = kDefaultFactorSeed) {
    if (f.is_zero()) throw std::invalid_argument("roots_in_extension: zero polynomial");
    if (f.modulus() != field->p()) throw std::invalid_argument("roots_in_extension: field characteristic mismatch");
    const int need = splitting_degree(f);
    if (field->extension_degree() % need != 0) {
        std::ostringstream os;
        os << "roots_in_extension: field F_{p^" << field->extension_degree()
           << "} too small, need extension degree divisible by " << need;
        throw std::invalid_argument(os.str());
    }
    std::mt19937_64 rng(seed);
    const detail::u64 p = f.modulus();
    std::vector<ExtFieldElem> roots;
    for (const auto& [g, mult] : factor(f, seed)) {
        const int d = g.degree();
        ExtFieldElem alpha = field->zero();
        if (d == 1) {
            // monic x + c: root is -c
            alpha = field->embed(detail::sub_mod(0, g.coeff(0), p));
        } else {
            alpha = detail::find_root(g, field, rng);
        }
        ExtFieldElem conj = alpha;
        for (int i = 0; i < d; ++i) {
            if (i > 0) conj = conj.pow(p);
            // verify by evaluation
            ExtFieldElem val = field->zero();
            for (int ci = f.degree(); ci >= 0; --ci) val = val * conj + field->embed(f.coeff(ci));
            if (!val.is_zero()) throw std::logic_error("roots_in_extension: root verification failed");
            for (int rep = 0; rep < mult; ++rep) roots.push_back(conj);
        }
    }
    if (static_cast<int>(roots.size()) != f.degree())
        throw std::logic_error("roots_in_extension: wrong number of roots");
    return roots;
}

// ---------------------------------------------------------------------------
// regularity over F_p

namespace detail {

// First subset of the listed roots, of size between 1 and kmax, whose
// product is 1 (depth-first over increasing index tuples), if any.
inline std::optional<std::pair<int, std::vector<int>>> find_unit_product(
    const std::vector<ExtFieldElem>& roots, int kmax, int kmin = 1) {
    const int n = static_cast<int>(roots.size());
    std::vector<int> chosen;
    std::vector<ExtFieldElem> stack;
    std::optional<std::pair<int, std::vector<int>>> hit;

    auto dfs = [&](auto&& self, int next) -> bool {
        const int depth = static_cast<int>(chosen.size());
        if (depth >= kmin && depth >= 1 && stack.back().is_one()) {
            hit = std::make_pair(depth, chosen);
            return true;
        }
        if (depth == kmax) return false;
        for (int i = next; i < n; ++i) {
            ExtFieldElem prod = depth == 0 ? roots[static_cast<std::size_t>(i)]
                                           : stack.back() * roots[static_cast<std::size_t>(i)];
            chosen.push_back(i);
            stack.push_back(std::move(prod));
            if (self(self, i + 1)) return true;
            chosen.pop_back();
            stack.pop_back();
        }
        return false;
    };
    dfs(dfs, 0);
    return hit;
}

inline void require_doubly_monic(const FpPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("regularity: polynomial must be monic");
    const int n = f.degree();
    const u64 want = (n % 2 == 0) ? 1 : f.modulus() - 1;
    if (f.coeff(0) != want % f.modulus())
        throw std::invalid_argument("regularity: polynomial must be doubly monic");
}

}  // namespace detail

// k-regularity over F_p by the root-product criterion: no product of k roots
// at strictly increasing indices (roots listed with multiplicity in the
// splitting field) equals 1.
inline bool is_k_regular_mod_p(const FpPoly& f, int k, std::uint64_t seed = kDefaultFactorSeed) {
    detail::require_doubly_monic(f);
    const int n = f.degree();
    if (k < 1 || k > n / 2) throw std::invalid_argument("is_k_regular_mod_p: k out of range");
    auto field = ExtField::make(f.modulus(), splitting_degree(f));
    auto roots = roots_in_extension(f, field, seed);
    return !detail::find_unit_product(roots, k, k).has_value();
}

inline bool is_regular_mod_p(const FpPoly& f, std::uint64_t seed = kDefaultFactorSeed) {
    detail::require_doubly_monic(f);
    const int n = f.degree();
    if (n / 2 < 1) return true;
    auto field = ExtField::make(f.modulus(), splitting_degree(f));
    auto roots = roots_in_extension(f, field, seed);
    return !detail::find_unit_product(roots, n / 2, 1).has_value();
}

// ---------------------------------------------------------------------------
// the determinant route: det(I - wedge^k A) over F_p, used to cross-check
// the root-product criterion

namespace detail {

class FpMatrix {
  public:
    FpMatrix(u64 p, int n) : p_(p), n_(n), e_(static_cast<std::size_t>(n) * n, 0) {}

    u64& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    u64 at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    int order() const { return n_; }

    u64 det() const {
        std::vector<u64> a = e_;
        auto el = [&](int i, int j) -> u64& { return a[static_cast<std::size_t>(i) * n_ + j]; };
        u64 result = 1;
        bool negate = false;
        for (int k = 0; k < n_; ++k) {
            int pivot = k;
            while (pivot < n_ && el(pivot, k) == 0) ++pivot;
            if (pivot == n_) return 0;
            if (pivot != k) {
                for (int j = k; j < n_; ++j) std::swap(el(k, j), el(pivot, j));
                negate = !negate;
            }
            result = mul_mod(result, el(k, k), p_);
            const u64 inv = inv_mod(el(k, k), p_);
            for (int i = k + 1; i < n_; ++i) {
                if (el(i, k) == 0) continue;
                const u64 factor = mul_mod(el(i, k), inv, p_);
                for (int j = k; j < n_; ++j)
                    el(i, j) = sub_mod(el(i, j), mul_mod(factor, el(k, j), p_), p_);
            }
        }
        return negate ? sub_mod(0, result, p_) : result;
    }

    u64 minor_det(const std::vector<int>& rows, const std::vector<int>& cols) const {
        const int k = static_cast<int>(rows.size());
        FpMatrix sub(p_, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        return sub.det();
    }

  private:
    u64 p_;
    int n_;
    std::vector<u64> e_;
};

}  // namespace detail

// det(I - wedge^k A_p) != 0 where A_p is the companion matrix of f over F_p.
inline bool is_k_regular_mod_p_via_det(const FpPoly& f, int k) {
    detail::require_doubly_monic(f);
    const int n = f.degree();
    if (k < 1 || k > n / 2) throw std::invalid_argument("is_k_regular_mod_p_via_det: k out of range");
    const detail::u64 p = f.modulus();
    detail::FpMatrix a(p, n);
    for (int i = 0; i + 1 < n; ++i) a.at(i, i + 1) = 1;
    for (int j = 0; j < n; ++j) a.at(n - 1, j) = detail::sub_mod(0, f.coeff(j), p);
    const auto subs = detail::k_subsets(n, k);
    const int N = static_cast<int>(subs.size());
    detail::FpMatrix m(p, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            detail::u64 v = a.minor_det(subs[static_cast<std::size_t>(i)], subs[static_cast<std::size_t>(j)]);
            m.at(i, j) = detail::sub_mod(i == j ? 1 : 0, v, p);
        }
    return m.det() != 0;
}

}  // namespace csp

#endif
