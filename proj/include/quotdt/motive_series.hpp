#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "quotdt/tate_class.hpp"

namespace quotdt {

/// Truncated power series in t with TateClass coefficients. All arithmetic is
/// exact modulo t^{order+1}; binary operations on series of different orders
/// truncate to the smaller one. Equality requires equal orders.
class MotiveSeries {
public:
    explicit MotiveSeries(long order);

    static MotiveSeries one(long order);
    static MotiveSeries constant(long order, TateClass c);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const TateClass& coeff(long n) const;
    void set_coeff(long n, TateClass c);

    MotiveSeries& operator+=(const MotiveSeries& rhs);
    MotiveSeries& operator-=(const MotiveSeries& rhs);
    friend MotiveSeries operator+(MotiveSeries a, const MotiveSeries& b) { return a += b; }
    friend MotiveSeries operator-(MotiveSeries a, const MotiveSeries& b) { return a -= b; }
    friend MotiveSeries operator*(const MotiveSeries& a, const MotiveSeries& b);
    MotiveSeries& operator*=(const MotiveSeries& rhs);

    /// Multiplicative inverse; requires constant term 1.
    MotiveSeries inverse() const;

    MotiveSeries truncated(long new_order) const;

    /// Multiply every coefficient by c.
    MotiveSeries& scale(const TateClass& c);

    bool operator==(const MotiveSeries& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const MotiveSeries& rhs) const { return !(*this == rhs); }

    /// {"order": N, "coeffs": [<TateClass JSON>, ...]}
    nlohmann::json to_json() const;
    static MotiveSeries from_json(const nlohmann::json& j);

private:
    std::vector<TateClass> coeffs_; // index n = coefficient of t^n, size order+1
};

/// (1 - s t^{t_exp})^{-exponent} expanded to the given order, for a monomial
/// s = c u^k. The exponent may be any integer (negative exponents terminate).
MotiveSeries power_factor(long order, const TateClass& s, long t_exp, const Bigint& exponent);

/// A(s t^e) re-truncated to A's order. s must be a monomial with coefficient
/// +1 or -1 (the substitutions t -> (-L^{1/2})^n t used throughout).
MotiveSeries substitute(const MotiveSeries& a, const TateClass& s, long e);

/// Motivic exponential: for A = sum_{n>=1,k} a_{n,k} u^k t^n returns
/// prod_{n,k} (1 - u^k t^n)^{-a_{n,k}}, the unique group-homomorphism
/// extension of sum_m sigma^m to arbitrary Tate coefficients. Requires zero
/// constant term.
MotiveSeries exp_series(const MotiveSeries& a);

/// Inverse of exp_series, computed by induction on t-degree. Requires
/// constant term 1.
MotiveSeries log_series(const MotiveSeries& a);

/// Power structure induced by Exp/Log: A^c = Exp(c * Log A). Requires
/// constant term 1.
MotiveSeries power(const MotiveSeries& a, const TateClass& exponent);

/// Lambda operation sigma^n, the t^n coefficient of Exp(c t). On monomials
/// sigma^n(u^k) = u^{nk}.
TateClass sigma(const TateClass& c, unsigned n);

/// Class of the ordered configuration space F(A^d, k) of k pairwise-distinct
/// points, via Stirling inversion of L^{dk} = sum_j S(k,j) [F(A^d, j)].
TateClass config_class(unsigned d, unsigned k);

/// Stirling number of the second kind S(n, j).
Bigint stirling2(unsigned n, unsigned j);

} // namespace quotdt
