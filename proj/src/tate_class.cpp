#include "quotdt/tate_class.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace quotdt {

void TateClass::add_term(long u_exp, const Bigint& c) {
    if (c == 0) return;
    auto it = coeffs_.find(u_exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(u_exp, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

TateClass TateClass::integer(Bigint value) {
    return monomial(0, std::move(value));
}

TateClass TateClass::monomial(long u_exp, Bigint coeff) {
    TateClass c;
    if (coeff != 0) c.coeffs_.emplace(u_exp, std::move(coeff));
    return c;
}

TateClass TateClass::half_lefschetz(long h) {
    // L^{h/2} = (L^{1/2})^h = (-u)^h
    return monomial(h, (h % 2 != 0) ? Bigint(-1) : Bigint(1));
}

TateClass TateClass::projective(long m) {
    if (m < 0) throw std::invalid_argument("projective: m must be >= 0");
    TateClass c;
    for (long j = 0; j <= m; ++j) c.coeffs_.emplace(2 * j, 1);
    return c;
}

bool TateClass::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Bigint TateClass::coeff(long u_exp) const {
    auto it = coeffs_.find(u_exp);
    return it == coeffs_.end() ? Bigint(0) : it->second;
}

TateClass& TateClass::operator+=(const TateClass& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
    return *this;
}

TateClass& TateClass::operator-=(const TateClass& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
    return *this;
}

TateClass operator*(const TateClass& a, const TateClass& b) {
    TateClass out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

TateClass& TateClass::operator*=(const TateClass& rhs) {
    *this = *this * rhs;
    return *this;
}

TateClass TateClass::operator-() const {
    TateClass out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

TateClass& TateClass::scale(const Bigint& factor) {
    if (factor == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, c] : coeffs_) c *= factor;
    return *this;
}

Bigint TateClass::euler_char() const {
    Bigint sum = 0;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
}

WeightPolynomial TateClass::weight_specialize() const {
    // u -> -q, so c*u^k -> c*(-1)^k q^k
    WeightPolynomial w;
    for (const auto& [e, c] : coeffs_) w.add_term(e, (e % 2 != 0) ? -c : c);
    return w;
}

bool TateClass::is_effective() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

bool TateClass::is_l_integral() const {
    for (const auto& [e, c] : coeffs_)
        if (e % 2 != 0) return false;
    return true;
}

namespace {

std::string bigint_str(const Bigint& b) { return b.str(); }

// Renders one term and appends it to out with " + " / " - " joiners.
void append_term(std::string& out, const Bigint& coeff, const std::string& var_part) {
    Bigint c = coeff;
    if (out.empty()) {
        if (c < 0) {
            out += "-";
            c = -c;
        }
    } else {
        out += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
    }
    if (var_part.empty()) {
        out += bigint_str(c);
    } else if (c == 1) {
        out += var_part;
    } else {
        out += bigint_str(c) + "*" + var_part;
    }
}

std::string power_of(const std::string& var, long exp) {
    if (exp == 0) return "";
    if (exp == 1) return var;
    if (exp > 1) return var + "^" + std::to_string(exp);
    return var + "^(" + std::to_string(exp) + ")";
}

// Exponent of L is u_exp/2; halves render as "L^(3/2)".
std::string l_power(long u_exp) {
    if (u_exp == 0) return "";
    if (u_exp == 2) return "L";
    if (u_exp % 2 == 0) {
        long m = u_exp / 2;
        return (m > 0) ? "L^" + std::to_string(m) : "L^(" + std::to_string(m) + ")";
    }
    return "L^(" + std::to_string(u_exp) + "/2)";
}

} // namespace

std::string TateClass::to_string_u() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        append_term(out, it->second, power_of("u", it->first));
    return out;
}

std::string TateClass::to_string_l() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        // c*u^k = c*(-1)^k * L^{k/2}
        Bigint c = (it->first % 2 != 0) ? -it->second : it->second;
        append_term(out, c, l_power(it->first));
    }
    return out;
}

std::string TateClass::to_latex() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Bigint c = (it->first % 2 != 0) ? -it->second : it->second;
        long k = it->first;
        std::string var;
        if (k != 0) {
            var = "\\mathbb{L}";
            if (k != 2) {
                var += "^{";
                if (k % 2 == 0)
                    var += std::to_string(k / 2);
                else
                    var += std::to_string(k) + "/2";
                var += "}";
            }
        }
        append_term(out, c, var);
    }
    return out;
}

nlohmann::json TateClass::to_json() const {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [e, c] : coeffs_) exps[std::to_string(e)] = bigint_str(c);
    return nlohmann::json{{"u", exps}};
}

TateClass TateClass::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("u") || !j["u"].is_object())
        throw std::invalid_argument("TateClass JSON must be {\"u\": {exp: coeff, ...}}");
    TateClass out;
    for (const auto& [key, value] : j["u"].items()) {
        long e = std::stol(key);
        Bigint c(value.get<std::string>());
        out.add_term(e, c);
    }
    return out;
}

void WeightPolynomial::add_term(long q_exp, const Bigint& c) {
    if (c == 0) return;
    auto it = coeffs_.find(q_exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(q_exp, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

WeightPolynomial WeightPolynomial::monomial(long q_exp, Bigint coeff) {
    WeightPolynomial w;
    if (coeff != 0) w.coeffs_.emplace(q_exp, std::move(coeff));
    return w;
}

Bigint WeightPolynomial::coeff(long q_exp) const {
    auto it = coeffs_.find(q_exp);
    return it == coeffs_.end() ? Bigint(0) : it->second;
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
    return *this;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
    WeightPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

Bigint WeightPolynomial::evaluate_at_one() const {
    Bigint sum = 0;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
}

WeightPolynomial WeightPolynomial::halve_exponents() const {
    WeightPolynomial out;
    for (const auto& [e, c] : coeffs_) {
        if (e % 2 != 0)
            throw std::domain_error("halve_exponents: odd exponent present");
        out.coeffs_.emplace(e / 2, c);
    }
    return out;
}

std::string WeightPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        append_term(out, it->second, power_of(var, it->first));
    return out;
}

nlohmann::json WeightPolynomial::to_json(const std::string& var) const {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [e, c] : coeffs_) exps[std::to_string(e)] = bigint_str(c);
    return nlohmann::json{{var, exps}};
}

WeightPolynomial WeightPolynomial::from_json(const nlohmann::json& j, const std::string& var) {
    if (!j.is_object() || !j.contains(var) || !j[var].is_object())
        throw std::invalid_argument("WeightPolynomial JSON must be {\"" + var + "\": {exp: coeff, ...}}");
    WeightPolynomial out;
    for (const auto& [key, value] : j[var].items())
        out.add_term(std::stol(key), Bigint(value.get<std::string>()));
    return out;
}

} // namespace quotdt
