#pragma once

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "quotdt/bigint.hpp"

namespace quotdt {

class WeightPolynomial;

/// An element of the Tate subring Z[L^{1/2}, L^{-1/2}] of the ring of motivic
/// weights, stored as a Laurent polynomial in the internal variable
///
///     u = -L^{1/2},   so   L = u^2,  L^{1/2} = -u,  L^{-1/2} = -u^{-1}.
///
/// The u-basis makes effectivity a coefficient-nonnegativity check and makes
/// the lambda operations monomial-multiplicative. The map holds no zero
/// coefficients (canonical form).
class TateClass {
public:
    TateClass() = default;

    static TateClass zero() { return {}; }
    static TateClass one() { return integer(1); }
    static TateClass integer(Bigint value);
    /// coeff * u^u_exp
    static TateClass monomial(long u_exp, Bigint coeff = 1);
    /// L^k = u^{2k}
    static TateClass lefschetz(long k) { return monomial(2 * k); }
    /// L^{h/2} = (-u)^h; h may be odd or negative.
    static TateClass half_lefschetz(long h);
    /// [P^m] = 1 + L + ... + L^m, m >= 0.
    static TateClass projective(long m);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// true iff the class is a single monomial c*u^k (nonzero).
    bool is_monomial() const { return coeffs_.size() == 1; }

    /// u-exponent -> coefficient, ascending exponent, no zeros.
    const std::map<long, Bigint>& terms() const { return coeffs_; }
    Bigint coeff(long u_exp) const;

    TateClass& operator+=(const TateClass& rhs);
    TateClass& operator-=(const TateClass& rhs);
    TateClass& operator*=(const TateClass& rhs);
    TateClass operator-() const;
    TateClass& scale(const Bigint& factor);

    friend TateClass operator+(TateClass a, const TateClass& b) { return a += b; }
    friend TateClass operator-(TateClass a, const TateClass& b) { return a -= b; }
    friend TateClass operator*(const TateClass& a, const TateClass& b);
    bool operator==(const TateClass& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const TateClass& rhs) const { return !(*this == rhs); }

    /// Euler-characteristic realization: the ring map with chi(u) = 1,
    /// i.e. the sum of all coefficients. Fixed so that chi(L^{-1/2}) = -1.
    Bigint euler_char() const;

    /// Weight realization L^{1/2} -> q, i.e. u -> -q.
    WeightPolynomial weight_specialize() const;

    /// Effectivity in the Tate ring: every u-coefficient nonnegative
    /// (N-combinations of the generators (-L^{1/2})^n).
    bool is_effective() const;

    /// true iff only even u-exponents occur (the class lies in Z[L^{±1}]).
    bool is_l_integral() const;

    std::string to_string_u() const;
    std::string to_string_l() const;
    std::string to_latex() const;

    /// {"u": {"<exponent>": "<decimal coefficient>", ...}}
    nlohmann::json to_json() const;
    static TateClass from_json(const nlohmann::json& j);

private:
    std::map<long, Bigint> coeffs_;

    void add_term(long u_exp, const Bigint& c);
};

/// A Laurent polynomial in the weight variable q (the image of the Tate ring
/// under L^{1/2} -> q). Canonical form: no zero coefficients.
class WeightPolynomial {
public:
    WeightPolynomial() = default;

    static WeightPolynomial monomial(long q_exp, Bigint coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, Bigint>& terms() const { return coeffs_; }
    Bigint coeff(long q_exp) const;

    WeightPolynomial& operator+=(const WeightPolynomial& rhs);
    WeightPolynomial& operator-=(const WeightPolynomial& rhs);
    friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
    friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) { return a -= b; }
    friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);
    bool operator==(const WeightPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const WeightPolynomial& rhs) const { return !(*this == rhs); }

    /// Evaluation at q = 1 (sum of coefficients).
    Bigint evaluate_at_one() const;

    /// Reinterpret q^2 as a new variable (used for the substitution
    /// q^2 = xyz^2). Throws if an odd exponent is present.
    WeightPolynomial halve_exponents() const;

    std::string to_string(const std::string& var = "q") const;
    nlohmann::json to_json(const std::string& var = "q") const;
    static WeightPolynomial from_json(const nlohmann::json& j, const std::string& var = "q");

private:
    std::map<long, Bigint> coeffs_;

    friend class TateClass;
    void add_term(long q_exp, const Bigint& c);
};

} // namespace quotdt
