#include "quotdt/gen_functions.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace quotdt {

IntSeries int_series_mul(const IntSeries& a, const IntSeries& b) {
    size_t n = std::min(a.size(), b.size());
    IntSeries out(n, Bigint(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

IntSeries int_series_inverse(const IntSeries& a) {
    if (a.empty() || a[0] != 1) throw std::domain_error("not invertible");
    IntSeries out(a.size(), Bigint(0));
    out[0] = 1;
    for (size_t d = 1; d < a.size(); ++d) {
        Bigint acc = 0;
        for (size_t i = 1; i <= d; ++i)
            if (i < a.size()) acc += a[i] * out[d - i];
        out[d] = -acc;
    }
    return out;
}

void int_series_mul_factor(IntSeries& a, int sign, long m, const Bigint& exponent) {
    if (m < 1) throw std::invalid_argument("int_series_mul_factor: m must be >= 1");
    long order = static_cast<long>(a.size()) - 1;
    // (1 - sign q^m)^{-e} = sum_j binom(e+j-1, j) sign^j q^{mj}
    IntSeries factor(a.size(), Bigint(0));
    factor[0] = 1;
    int sign_pow = 1;
    for (long j = 1; j * m <= order; ++j) {
        sign_pow *= sign;
        factor[j * m] = binomial(exponent + j - 1, static_cast<unsigned long>(j)) * sign_pow;
    }
    a = int_series_mul(a, factor);
}

IntSeries macmahon(long order) {
    if (order < 0) throw std::invalid_argument("macmahon: negative order");
    IntSeries out(order + 1, Bigint(0));
    out[0] = 1;
    for (long m = 1; m <= order; ++m) int_series_mul_factor(out, +1, m, Bigint(m));
    return out;
}

IntSeries dt_series(unsigned r, long long exponent_chi, long order) {
    if (order < 0) throw std::invalid_argument("dt_series: negative order");
    IntSeries out(order + 1, Bigint(0));
    out[0] = 1;
    // M((-1)^r q)^{r chi} = prod_m (1 - ((-1)^r q)^m)^{-m r chi}
    for (long m = 1; m <= order; ++m) {
        int sign = (r % 2 != 0 && m % 2 != 0) ? -1 : +1;
        int_series_mul_factor(out, sign, m, Bigint(m) * r * exponent_chi);
    }
    return out;
}

long long chern_exponent(long long c1c2, long long c3) {
    return c3 - c1c2;
}

MotiveSeries z_affine(unsigned r, long order) {
    if (r < 1) throw std::invalid_argument("z_affine: rank must be >= 1");
    MotiveSeries out = MotiveSeries::one(order);
    for (long m = 1; m <= order; ++m) {
        for (long k = 0; k < static_cast<long>(r) * m; ++k) {
            // L^{k+2-rm/2} = (-1)^{rm} u^{2k+4-rm}
            long u_exp = 2 * k + 4 - static_cast<long>(r) * m;
            Bigint sign = (static_cast<long>(r) * m % 2 != 0) ? -1 : 1;
            out *= power_factor(order, TateClass::monomial(u_exp, sign), m, 1);
        }
    }
    return out;
}

namespace {

// (-1)^r t L^{-3/2} [P^{r-1}]_vir / ((1-(-L^{-1/2})^r t)(1-(-L^{1/2})^r t)),
// with an optional extra factor in the numerator; the Exp argument of the
// punctual series and of the closed threefold form.
MotiveSeries punctual_exp_argument(unsigned r, long order, const TateClass& extra) {
    TateClass numerator = TateClass::half_lefschetz(-3);                  // L^{-3/2}
    numerator *= TateClass::half_lefschetz(-(static_cast<long>(r) - 1));  // L^{-(r-1)/2}
    numerator *= TateClass::projective(static_cast<long>(r) - 1);         // [P^{r-1}]
    numerator *= extra;
    if (r % 2 != 0) numerator.scale(-1);                                  // (-1)^r
    MotiveSeries arg(order);
    arg.set_coeff(1, numerator);
    // (-L^{-1/2})^r = u^{-r} and (-L^{1/2})^r = u^r
    arg *= power_factor(order, TateClass::monomial(-static_cast<long>(r)), 1, 1);
    arg *= power_factor(order, TateClass::monomial(static_cast<long>(r)), 1, 1);
    return arg;
}

} // namespace

MotiveSeries p_punctual(unsigned r, long order) {
    if (r < 1) throw std::invalid_argument("p_punctual: rank must be >= 1");
    return exp_series(punctual_exp_argument(r, order, TateClass::one()));
}

TateClass omega(unsigned r, unsigned n) {
    if (r < 1 || n < 1) throw std::invalid_argument("omega: r and n must be >= 1");
    long rn = static_cast<long>(r) * n;
    return TateClass::monomial(-rn - 2) * TateClass::projective(rn - 1);
}

ThreefoldInput ThreefoldInput::from_motive(TateClass m) {
    ThreefoldInput y;
    y.euler = m.euler_char().convert_to<long long>();
    y.motive = std::move(m);
    return y;
}

void ThreefoldInput::validate() const {
    if (motive && motive->euler_char() != euler)
        throw std::invalid_argument("ThreefoldInput: euler does not match chi of the motive");
    if (chern && chern->c1_is_zero) {
        if (chern->c1c2 != 0)
            throw std::invalid_argument("ThreefoldInput: c1 = 0 declared but c1c2 nonzero");
        if (chern->c3 != euler)
            throw std::invalid_argument("ThreefoldInput: c1 = 0 declared but c3 != euler");
    }
}

MotiveSeries z_threefold(const ThreefoldInput& y, unsigned r, long order, ZMode mode) {
    if (r < 1) throw std::invalid_argument("z_threefold: rank must be >= 1");
    y.validate();
    if (!y.motive)
        throw std::invalid_argument("closed-form requires [Y]");
    if (!y.motive->is_l_integral())
        throw std::invalid_argument("z_threefold: [Y] must be L-integral (no odd cohomology)");
    if (mode == ZMode::power)
        return power(p_punctual(r, order), *y.motive);
    return exp_series(punctual_exp_argument(r, order, *y.motive));
}

WeightSeries::WeightSeries(long order) {
    if (order < 0) throw std::invalid_argument("WeightSeries: negative order");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

WeightSeries WeightSeries::one(long order) {
    WeightSeries s(order);
    s.coeffs_[0] = WeightPolynomial::monomial(0);
    return s;
}

const WeightPolynomial& WeightSeries::coeff(long n) const {
    if (n < 0 || n > order()) throw std::out_of_range("WeightSeries::coeff");
    return coeffs_[static_cast<size_t>(n)];
}

void WeightSeries::set_coeff(long n, WeightPolynomial c) {
    if (n < 0 || n > order()) throw std::out_of_range("WeightSeries::set_coeff");
    coeffs_[static_cast<size_t>(n)] = std::move(c);
}

void WeightSeries::mul_geometric(long w_exp, long t_exp) {
    if (t_exp < 1) throw std::invalid_argument("mul_geometric: t exponent must be >= 1");
    long n = order();
    std::vector<WeightPolynomial> out(coeffs_.size());
    for (long d = 0; d <= n; ++d) {
        WeightPolynomial acc;
        for (long j = 0; d - j * t_exp >= 0; ++j)
            acc += coeffs_[d - j * t_exp] * WeightPolynomial::monomial(w_exp * j);
        out[d] = std::move(acc);
    }
    coeffs_ = std::move(out);
}

nlohmann::json WeightSeries::to_json(const std::string& var) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.to_json(var));
    return nlohmann::json{{"order", order()}, {"coeffs", arr}};
}

std::pair<WeightSeries, WeightSeries> vc_weight_sides(unsigned r, long order) {
    if (r < 1) throw std::invalid_argument("vc_weight_series: rank must be >= 1");
    // LHS: t -> L^{-r/2} t applied to Z_r(A^3, t), then L -> w coefficient-wise
    MotiveSeries renormalized =
        substitute(z_affine(r, order), TateClass::half_lefschetz(-static_cast<long>(r)), 1);
    WeightSeries lhs(order);
    for (long n = 0; n <= order; ++n) {
        // after renormalization each coefficient is L-integral, so the weight
        // polynomial has only even q-exponents and q^2 = w is well defined
        lhs.set_coeff(n, renormalized.coeff(n).weight_specialize().halve_exponents());
    }
    // RHS: prod_{m>=1} prod_{k<rm} (1 - w^{k+2-rm} t^m)^{-1}
    WeightSeries rhs = WeightSeries::one(order);
    for (long m = 1; m <= order; ++m)
        for (long k = 0; k < static_cast<long>(r) * m; ++k)
            rhs.mul_geometric(k + 2 - static_cast<long>(r) * m, m);
    return {lhs, rhs};
}

WeightSeries vc_weight_series(unsigned r, long order) {
    auto [lhs, rhs] = vc_weight_sides(r, order);
    if (lhs != rhs) throw std::runtime_error("identity violation");
    return rhs;
}

} // namespace quotdt
