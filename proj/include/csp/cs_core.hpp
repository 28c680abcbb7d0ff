#ifndef CSP_CS_CORE_HPP
#define CSP_CS_CORE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "csp/finite_field.hpp"
#include "csp/intmatrix.hpp"
#include "csp/intpoly.hpp"
#include "csp/sturm.hpp"

namespace csp {

inline constexpr std::uint64_t kWitnessTrialDivisionBound = 1'000'000ull;

// One CS_k condition: the exact value of det(I - wedge^k A) for the
// companion matrix A of the input, and whether it lies in {+1, -1}.
struct CsConditionResult {
    int k = 0;
    mpz_class det_value;
    bool holds = false;
};

enum class WitnessKind {
    prime,                 // a prime dividing det(I - wedge^k A); violates k-regularity mod p
    composite,             // |det| has no prime factor within the trial bound and is composite
    rational_obstruction,  // det = 0: not k-regular over Q
};

struct CsWitness {
    int k = 0;
    WitnessKind kind = WitnessKind::prime;
    mpz_class value;  // the prime, or the unfactored |det| for composite
};

// Full verdict for one polynomial.
struct CsReport {
    IntPoly input;
    bool doubly_monic = false;
    std::vector<CsConditionResult> conditions;  // k = 1 .. floor(n/2)
    bool is_cs = false;
    bool is_positive = false;
    std::vector<CsWitness> witnesses;  // one entry per failed condition
};

// The CS_k condition for a monic integer polynomial, decided on its
// companion matrix; by representative independence this settles CS_k for
// every integer matrix with characteristic polynomial f.
inline CsConditionResult cs_condition(const IntPoly& f, int k) {
    if (!f.is_monic()) throw std::invalid_argument("cs_condition: polynomial must be monic");
    const int n = f.degree();
    if (k < 1 || k > n / 2) throw std::invalid_argument("cs_condition: k out of range");
    CsConditionResult r;
    r.k = k;
    if (k == 1) {
        r.det_value = f.eval(mpz_class(1));
    } else {
        IntMatrix e = exterior_power_matrix(companion(f), k);
        r.det_value = (IntMatrix::identity(e.order()) - e).det();
    }
    r.holds = (r.det_value == 1 || r.det_value == -1);
    return r;
}

namespace detail {

inline std::optional<CsWitness> witness_for_failed(int k, const mpz_class& det_value,
                                                   std::uint64_t bound) {
    CsWitness w;
    w.k = k;
    if (det_value == 0) {
        w.kind = WitnessKind::rational_obstruction;
        w.value = 0;
        return w;
    }
    mpz_class d = abs(det_value);
    if (d == 1) return std::nullopt;
    auto check = [&](u64 p) -> bool { return mpz_divisible_ui_p(d.get_mpz_t(), p) != 0; };
    if (check(2)) {
        w.kind = WitnessKind::prime;
        w.value = 2;
        return w;
    }
    if (check(3)) {
        w.kind = WitnessKind::prime;
        w.value = 3;
        return w;
    }
    for (u64 c = 5; c <= bound; c += 6) {
        if (check(c)) {
            w.kind = WitnessKind::prime;
            w.value = static_cast<unsigned long>(c);
            return w;
        }
        if (check(c + 2)) {
            w.kind = WitnessKind::prime;
            w.value = static_cast<unsigned long>(c + 2);
            return w;
        }
        if (mpz_class(c) * c > d) break;  // remainder is prime
    }
    // no factor within the bound: d itself is either prime or composite
    if (mpz_probab_prime_p(d.get_mpz_t(), 40)) {
        w.kind = WitnessKind::prime;
        w.value = d;
    } else {
        w.kind = WitnessKind::composite;
        w.value = d;
    }
    return w;
}

}  // namespace detail

// Complete verdict. Accepts monic polynomials of degree >= 2 whose constant
// term is +1 or -1 (the companion matrix must lie in GL(n, Z) for the CS
// conditions to be meaningful); anything else is rejected. is_cs additionally
// requires the constant term to be exactly (-1)^n.
inline CsReport verify(const IntPoly& f, bool with_witnesses = true,
                       std::uint64_t witness_bound = kWitnessTrialDivisionBound) {
    if (!f.is_monic()) throw std::invalid_argument("verify: polynomial must be monic");
    if (f.degree() < 2) throw std::invalid_argument("verify: degree must be at least 2");
    if (!(f.coeff(0) == 1 || f.coeff(0) == -1))
        throw std::invalid_argument("verify: constant term must be +1 or -1");
    CsReport rep;
    rep.input = f;
    rep.doubly_monic = f.is_doubly_monic();
    const int n = f.degree();
    bool all_hold = true;
    for (int k = 1; k <= n / 2; ++k) {
        CsConditionResult c = cs_condition(f, k);
        if (!c.holds) {
            all_hold = false;
            if (with_witnesses) {
                auto w = detail::witness_for_failed(k, c.det_value, witness_bound);
                if (w) rep.witnesses.push_back(*w);
            }
        }
        rep.conditions.push_back(std::move(c));
    }
    rep.is_cs = rep.doubly_monic && all_hold;
    rep.is_positive = rep.doubly_monic && is_positive(f);
    return rep;
}

// Same verdict as verify(...).is_cs with early exit, for enumeration loops.
inline bool is_cs_quick(const IntPoly& f) {
    if (!f.is_doubly_monic() || f.degree() < 2) return false;
    const int n = f.degree();
    for (int k = 1; k <= n / 2; ++k) {
        mpz_class v = cs_condition(f, k).det_value;
        if (!(v == 1 || v == -1)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// structural regularity criteria over F_p

// Signed reciprocal over F_p (doubly monic input, i.e. constant term
// congruent to (-1)^n).
inline FpPoly fp_signed_reciprocal(const FpPoly& f) {
    detail::require_doubly_monic(f);
    const int n = f.degree();
    const detail::u64 p = f.modulus();
    std::vector<detail::u64> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        detail::u64 v = f.coeff(n - i);
        c[static_cast<std::size_t>(i)] = (n % 2 == 0) ? v : detail::sub_mod(0, v, p);
    }
    return FpPoly(p, std::move(c));
}

// 2-regularity via the reciprocal criterion: a 1-regular doubly monic f of
// degree > 3 is 2-regular over F_p iff f and f* have no common quadratic
// divisor over the algebraic closure, i.e. iff deg gcd(f, f*) < 2 (the gcd
// degree does not change under field extension).
inline bool is_2_regular_via_reciprocal(const FpPoly& f) {
    detail::require_doubly_monic(f);
    if (f.degree() <= 3) throw std::invalid_argument("is_2_regular_via_reciprocal: degree must exceed 3");
    if (f.eval(1) == 0) throw std::invalid_argument("is_2_regular_via_reciprocal: input is not 1-regular");
    return gcd(f, fp_signed_reciprocal(f)).degree() < 2;
}

// Exterior square of a polynomial over F_p: lift to Z, take the exterior
// power there, reduce back. (The construction commutes with reduction.)
inline FpPoly fp_exterior_square(const FpPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("fp_exterior_square: polynomial must be monic");
    std::vector<mpz_class> lift(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) lift[static_cast<std::size_t>(i)] = static_cast<unsigned long>(f.coeff(i));
    return reduce_mod_p(exterior_power_poly(IntPoly::from_ascending(std::move(lift)), 2), f.modulus());
}

// 3-regularity via the exterior-square criterion, for separable doubly
// monic f: degree > 6 asks that f^{wedge 2} and f* have no common root
// (gcd = 1); degree exactly 6 asks that f* does not divide f^{wedge 2}.
inline bool is_3_regular_via_exterior(const FpPoly& f) {
    detail::require_doubly_monic(f);
    const int n = f.degree();
    if (n < 6) throw std::invalid_argument("is_3_regular_via_exterior: degree must be at least 6");
    FpPoly sep = gcd(f, f.derivative());
    if (sep.degree() != 0) {
        std::ostringstream os;
        os << "is_3_regular_via_exterior: input is inseparable, gcd(f, f') = " << sep.to_string();
        throw std::invalid_argument(os.str());
    }
    const FpPoly wedge2 = fp_exterior_square(f);
    const FpPoly star = fp_signed_reciprocal(f);
    if (n == 6) return !(wedge2 % star).is_zero();
    return gcd(wedge2, star).degree() == 0;
}

// ---------------------------------------------------------------------------
// degree-7 closed forms: for doubly monic f of degree 7 with c1 + c6 = 0 and
// c2 + c5 = 0 and f(1) = eps1 in {+1,-1}, det(I - wedge^2 A) equals eps1 and
// det(I - wedge^3 A) is the following polynomial in (c1, c2, c3).

inline mpz_class degree7_cs3_closed_form(const mpz_class& c1, const mpz_class& c2,
                                         const mpz_class& c3, int eps1) {
    if (eps1 != 1 && eps1 != -1) throw std::invalid_argument("degree7_cs3_closed_form: eps1 must be +1 or -1");
    const mpz_class c1_2 = c1 * c1, c1_3 = c1_2 * c1, c1_4 = c1_3 * c1, c1_5 = c1_4 * c1,
                    c1_6 = c1_5 * c1, c1_7 = c1_6 * c1;
    const mpz_class c2_2 = c2 * c2, c2_3 = c2_2 * c2;
    const mpz_class c3_2 = c3 * c3, c3_3 = c3_2 * c3;
    if (eps1 == 1) {
        return c1_7 + c1_6 + 6 * c1_5 * c2 - 2 * c1_5 * c3 - 9 * c1_5 + 4 * c1_4 * c2 +
               9 * c1_3 * c2_2 + 8 * c1_4 * c3 - 10 * c1_3 * c2 * c3 + c1_3 * c3_2 - 30 * c1_4 -
               19 * c1_3 * c2 - c1_2 * c2_2 + 4 * c1 * c2_3 + 35 * c1_3 * c3 + 18 * c1_2 * c2 * c3 -
               8 * c1 * c2_2 * c3 - 17 * c1_2 * c3_2 + 4 * c1 * c2 * c3_2 - 41 * c1_3 -
               45 * c1_2 * c2 - 13 * c1 * c2_2 - 4 * c2_3 + 57 * c1_2 * c3 + 38 * c1 * c2 * c3 +
               16 * c2_2 * c3 - 25 * c1 * c3_2 - 20 * c2 * c3_2 + 8 * c3_3 - 32 * c1_2 -
               34 * c1 * c2 - 15 * c2_2 + 39 * c1 * c3 + 34 * c2 * c3 - 19 * c3_2 - 14 * c1 -
               12 * c2 + 13 * c3 - 3;
    }
    return -c1_7 - c1_6 - 6 * c1_5 * c2 + 2 * c1_5 * c3 + 11 * c1_5 - 4 * c1_4 * c2 -
           9 * c1_3 * c2_2 - 8 * c1_4 * c3 + 10 * c1_3 * c2 * c3 - c1_3 * c3_2 + 22 * c1_4 +
           29 * c1_3 * c2 + c1_2 * c2_2 - 4 * c1 * c2_3 - 37 * c1_3 * c3 - 18 * c1_2 * c2 * c3 +
           8 * c1 * c2_2 * c3 + 17 * c1_2 * c3_2 - 4 * c1 * c2 * c3_2 + 5 * c1_3 + 27 * c1_2 * c2 +
           21 * c1 * c2_2 + 4 * c2_3 - 23 * c1_2 * c3 - 46 * c1 * c2 * c3 - 16 * c2_2 * c3 +
           25 * c1 * c3_2 + 20 * c2 * c3_2 - 8 * c3_3 - 8 * c1_2 - 8 * c1 * c2 - c2_2 +
           11 * c1 * c3 + 6 * c2 * c3 - 5 * c3_2 - 2 * c2 + c3 + 1;
}

}  // namespace csp

#endif
