#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "quotdt/motive_series.hpp"

namespace quotdt {

// ---------------------------------------------------------------------------
// Integer q-series (coefficients of t^0..t^N stored densely).
// ---------------------------------------------------------------------------

using IntSeries = std::vector<Bigint>;

IntSeries int_series_mul(const IntSeries& a, const IntSeries& b);
/// Multiplicative inverse; requires a[0] == 1.
IntSeries int_series_inverse(const IntSeries& a);
/// Multiply a in place by (1 - sign q^m)^{-exponent}, sign = +1 or -1.
void int_series_mul_factor(IntSeries& a, int sign, long m, const Bigint& exponent);

/// MacMahon function M(q) = prod_{m>=1} (1 - q^m)^{-m} to the given order.
IntSeries macmahon(long order);

/// M((-1)^r q)^{r * exponent_chi}: the enumerative DT series of rank r with
/// Euler-characteristic (or conjectural Chern-number) exponent.
IntSeries dt_series(unsigned r, long long exponent_chi, long order);

/// The integral of c3(T_Y tensor omega_Y) of a smooth projective 3-fold with
/// Chern numbers c1.c2 and c3. Twisting the Chern roots x_i by -(x1+x2+x3)
/// collapses the degree-3 part to c3 - c1.c2 (no c1^3 term survives).
long long chern_exponent(long long c1c2, long long c3);

// ---------------------------------------------------------------------------
// Motivic generating functions.
// ---------------------------------------------------------------------------

/// Z_r(A^3, t) = prod_{m>=1} prod_{k=0}^{rm-1} (1 - L^{k+2-rm/2} t^m)^{-1}
/// in the unsigned variable: the t^n coefficient is [Quot_{A^3}(O^r, n)]_vir.
MotiveSeries z_affine(unsigned r, long order);

/// The signed punctual series P_r((-1)^r t) = Exp of
/// (-1)^r t L^{-3/2} [P^{r-1}]_vir / ((1-(-L^{-1/2})^r t)(1-(-L^{1/2})^r t)).
/// The unsigned P_r(t) is substitute(result, (-1)^r, 1).
MotiveSeries p_punctual(unsigned r, long order);

/// Omega_{r,n} = (-L^{1/2})^{-rn-2} [P^{rn-1}], the Exp-generators of the
/// signed punctual series.
TateClass omega(unsigned r, unsigned n);

struct ChernNumbers {
    long long c1c2 = 0;
    long long c3 = 0;
    bool c1_is_zero = false; // declared Calabi-Yau-like vanishing of c1
};

/// The input 3-fold: its motive [Y] (required L-integral for the motivic
/// series), Euler characteristic, and optionally Chern numbers.
struct ThreefoldInput {
    std::optional<TateClass> motive;
    long long euler = 0;
    std::optional<ChernNumbers> chern;

    static ThreefoldInput from_motive(TateClass m);

    /// Throws std::invalid_argument on inconsistent data (euler vs chi of the
    /// motive; declared c1 = 0 forces c3 = euler).
    void validate() const;
};

enum class ZMode { power, closed_form };

/// Z_r(Y, (-1)^r t): either as P_r((-1)^r t)^{[Y]} (power) or as the closed
/// Exp form with numerator t [Y x P^{r-1}]_vir (closed_form). Both agree.
MotiveSeries z_threefold(const ThreefoldInput& y, unsigned r, long order, ZMode mode);

// ---------------------------------------------------------------------------
// Vanishing-cycle weight series.
// ---------------------------------------------------------------------------

/// Truncated series in t over WeightPolynomial (variable w = xyz^2).
class WeightSeries {
public:
    explicit WeightSeries(long order);
    static WeightSeries one(long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const WeightPolynomial& coeff(long n) const;
    void set_coeff(long n, WeightPolynomial c);

    /// Multiply in place by (1 - w^{w_exp} t^{t_exp})^{-1}.
    void mul_geometric(long w_exp, long t_exp);

    bool operator==(const WeightSeries& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const WeightSeries& rhs) const { return !(*this == rhs); }

    nlohmann::json to_json(const std::string& var = "w") const;

private:
    std::vector<WeightPolynomial> coeffs_;
};

/// Both sides of the weight identity
///   sum_n h_n(w) w^{-n^2-rn} t^n = prod_{m,k} (1 - w^{k+2-rm} t^m)^{-1}:
/// first the left-hand side obtained from z_affine via t -> L^{-r/2} t and
/// the weight realization L -> w, then the right-hand product.
std::pair<WeightSeries, WeightSeries> vc_weight_sides(unsigned r, long order);

/// Asserts the identity above and returns the series of normalized Hodge
/// coefficients h_n(w) w^{-n^2-rn}. Throws
/// std::runtime_error("identity violation") on mismatch.
WeightSeries vc_weight_series(unsigned r, long order);

} // namespace quotdt
