#include "quotdt/motive_series.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace quotdt {

MotiveSeries::MotiveSeries(long order) {
    if (order < 0) throw std::invalid_argument("MotiveSeries: negative order");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

MotiveSeries MotiveSeries::one(long order) {
    return constant(order, TateClass::one());
}

MotiveSeries MotiveSeries::constant(long order, TateClass c) {
    MotiveSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
}

const TateClass& MotiveSeries::coeff(long n) const {
    if (n < 0 || n > order()) throw std::out_of_range("MotiveSeries::coeff");
    return coeffs_[static_cast<size_t>(n)];
}

void MotiveSeries::set_coeff(long n, TateClass c) {
    if (n < 0 || n > order()) throw std::out_of_range("MotiveSeries::set_coeff");
    coeffs_[static_cast<size_t>(n)] = std::move(c);
}

MotiveSeries& MotiveSeries::operator+=(const MotiveSeries& rhs) {
    long n = std::min(order(), rhs.order());
    coeffs_.resize(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

MotiveSeries& MotiveSeries::operator-=(const MotiveSeries& rhs) {
    long n = std::min(order(), rhs.order());
    coeffs_.resize(static_cast<size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

MotiveSeries operator*(const MotiveSeries& a, const MotiveSeries& b) {
    long n = std::min(a.order(), b.order());
    MotiveSeries out(n);
    for (long i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

MotiveSeries& MotiveSeries::operator*=(const MotiveSeries& rhs) {
    *this = *this * rhs;
    return *this;
}

MotiveSeries MotiveSeries::inverse() const {
    if (!coeffs_[0].is_one()) throw std::domain_error("not invertible");
    long n = order();
    MotiveSeries out(n);
    out.coeffs_[0] = TateClass::one();
    for (long d = 1; d <= n; ++d) {
        TateClass acc;
        for (long i = 1; i <= d; ++i) acc += coeffs_[i] * out.coeffs_[d - i];
        out.coeffs_[d] = -acc;
    }
    return out;
}

MotiveSeries MotiveSeries::truncated(long new_order) const {
    if (new_order < 0) throw std::invalid_argument("truncated: negative order");
    MotiveSeries out(new_order);
    long n = std::min(new_order, order());
    for (long i = 0; i <= n; ++i) out.coeffs_[i] = coeffs_[i];
    return out;
}

MotiveSeries& MotiveSeries::scale(const TateClass& c) {
    for (auto& a : coeffs_) a = a * c;
    return *this;
}

nlohmann::json MotiveSeries::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.to_json());
    return nlohmann::json{{"order", order()}, {"coeffs", arr}};
}

MotiveSeries MotiveSeries::from_json(const nlohmann::json& j) {
    long order = j.at("order").get<long>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || static_cast<long>(arr.size()) != order + 1)
        throw std::invalid_argument("MotiveSeries JSON: coeffs length must be order+1");
    MotiveSeries s(order);
    for (long i = 0; i <= order; ++i) s.coeffs_[i] = TateClass::from_json(arr[i]);
    return s;
}

MotiveSeries power_factor(long order, const TateClass& s, long t_exp, const Bigint& exponent) {
    if (!s.is_monomial()) throw std::invalid_argument("power_factor: s must be a monomial");
    if (t_exp < 1) throw std::invalid_argument("power_factor: t exponent must be >= 1");
    long k = s.terms().begin()->first;
    const Bigint& c = s.terms().begin()->second;
    // (1 - s t^m)^{-e} = sum_j binom(e+j-1, j) s^j t^{mj}
    MotiveSeries out(order);
    out.set_coeff(0, TateClass::one());
    Bigint s_pow = 1;
    for (long j = 1; j * t_exp <= order; ++j) {
        s_pow *= c;
        Bigint b = binomial(exponent + j - 1, static_cast<unsigned long>(j));
        out.set_coeff(j * t_exp, TateClass::monomial(k * j, b * s_pow));
    }
    return out;
}

MotiveSeries substitute(const MotiveSeries& a, const TateClass& s, long e) {
    if (!s.is_monomial()) throw std::invalid_argument("substitution requires monomial");
    long k = s.terms().begin()->first;
    const Bigint& c = s.terms().begin()->second;
    if (c != 1 && c != -1)
        throw std::invalid_argument("substitution requires monomial with coefficient +1 or -1");
    if (e < 1) throw std::invalid_argument("substitution requires e >= 1");
    long n = a.order();
    MotiveSeries out(n);
    for (long m = 0; m * e <= n; ++m) {
        if (a.coeff(m).is_zero()) continue;
        // s^m = c^m u^{km}
        TateClass factor = TateClass::monomial(k * m, (c == -1 && m % 2 != 0) ? Bigint(-1) : Bigint(1));
        out.set_coeff(m * e, a.coeff(m) * factor);
    }
    return out;
}

MotiveSeries exp_series(const MotiveSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("exp_series: argument must have zero constant term");
    long n = a.order();
    MotiveSeries out = MotiveSeries::one(n);
    for (long m = 1; m <= n; ++m)
        for (const auto& [k, c] : a.coeff(m).terms())
            out *= power_factor(n, TateClass::monomial(k), m, c);
    return out;
}

MotiveSeries log_series(const MotiveSeries& a) {
    if (!a.coeff(0).is_one())
        throw std::domain_error("log_series: argument must have constant term 1");
    long n = a.order();
    MotiveSeries b(n);
    // exp_tracker = Exp(b restricted to degrees < m), updated as terms appear
    MotiveSeries exp_tracker = MotiveSeries::one(n);
    for (long m = 1; m <= n; ++m) {
        TateClass bm = a.coeff(m) - exp_tracker.coeff(m);
        if (bm.is_zero()) continue;
        b.set_coeff(m, bm);
        for (const auto& [k, c] : bm.terms())
            exp_tracker *= power_factor(n, TateClass::monomial(k), m, c);
    }
    return b;
}

MotiveSeries power(const MotiveSeries& a, const TateClass& exponent) {
    return exp_series(log_series(a).scale(exponent));
}

TateClass sigma(const TateClass& c, unsigned n) {
    if (n == 0) return TateClass::one();
    MotiveSeries arg(static_cast<long>(n));
    arg.set_coeff(1, c);
    return exp_series(arg).coeff(static_cast<long>(n));
}

Bigint stirling2(unsigned n, unsigned j) {
    if (j > n) return 0;
    if (n == 0) return j == 0 ? 1 : 0;
    if (j == 0) return 0;
    // S(n, j) = j S(n-1, j) + S(n-1, j-1)
    std::vector<Bigint> row(n + 1);
    row[0] = 1; // S(0,0)
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned l = std::min(i, n); l >= 1; --l)
            row[l] = Bigint(l) * row[l] + row[l - 1];
        row[0] = 0; // S(i, 0) = 0 for i >= 1
    }
    return row[j];
}

TateClass config_class(unsigned d, unsigned k) {
    if (d < 1 || k < 1) throw std::invalid_argument("config_class: d and k must be >= 1");
    // L^{dk} = sum_{j<=k} S(k,j) [F(A^d, j)], solved upward for [F(A^d, k)]
    std::vector<TateClass> f(k + 1);
    for (unsigned m = 1; m <= k; ++m) {
        TateClass acc = TateClass::lefschetz(static_cast<long>(d) * m);
        for (unsigned j = 1; j < m; ++j) {
            TateClass term = f[j];
            term.scale(stirling2(m, j));
            acc -= term;
        }
        f[m] = acc;
    }
    return f[k];
}

} // namespace quotdt
