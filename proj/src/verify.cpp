#include "quotdt/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "quotdt/oracle.hpp"
#include "quotdt/parallel.hpp"
#include "quotdt/plane_partitions.hpp"

namespace quotdt {

bool VerificationReport::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

nlohmann::json VerificationReport::to_json(bool include_timings) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json jc{{"identity", c.identity},
                          {"params", c.params},
                          {"status", c.pass ? "pass" : "fail"}};
        if (c.first_discrepancy) {
            jc["first_discrepancy"] = nlohmann::json{{"degree", c.first_discrepancy->degree},
                                                     {"expected", c.first_discrepancy->expected},
                                                     {"actual", c.first_discrepancy->actual}};
        }
        if (include_timings) jc["elapsed_ms"] = static_cast<long>(c.elapsed_ms + 0.5);
        arr.push_back(std::move(jc));
    }
    return nlohmann::json{{"suite", suite}, {"passed", all_pass()}, {"cases", arr}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"axioms",      "identities", "euler",
                                                   "effectivity", "oracle",     "all"};
    return names;
}

const std::vector<PinnedCount>& pinned_oracle_counts() {
    // Frozen outputs of the serial reference enumeration; see tests/ for the
    // cross-checks against the parallel kernels. (1,3,2) has no ncquot pin:
    // the unconstrained n = 3 enumeration is outside the default budget.
    static const std::vector<PinnedCount> pins = {
        {1, 2, 2, "112", "1792"},
        {1, 2, 3, "1053", "85293"},
        {2, 2, 2, "736", "9472"},
        {2, 2, 3, "13365", "872613"},
        {1, 3, 2, "1120", nullptr},
    };
    return pins;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Case {
    std::string identity;
    nlohmann::json params;
    std::function<std::optional<Discrepancy>()> run;
};

std::optional<Discrepancy> compare_series(const MotiveSeries& expected, const MotiveSeries& actual) {
    long n = std::min(expected.order(), actual.order());
    for (long d = 0; d <= n; ++d)
        if (expected.coeff(d) != actual.coeff(d))
            return Discrepancy{d, expected.coeff(d).to_string_l(), actual.coeff(d).to_string_l()};
    if (expected.order() != actual.order())
        return Discrepancy{n + 1, "order " + std::to_string(expected.order()),
                           "order " + std::to_string(actual.order())};
    return std::nullopt;
}

std::optional<Discrepancy> compare_weight_series(const WeightSeries& expected,
                                                 const WeightSeries& actual) {
    long n = std::min(expected.order(), actual.order());
    for (long d = 0; d <= n; ++d)
        if (expected.coeff(d) != actual.coeff(d))
            return Discrepancy{d, expected.coeff(d).to_string("w"), actual.coeff(d).to_string("w")};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Random generators for the property suites (deterministic per seed).
// ---------------------------------------------------------------------------

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}

    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    TateClass tate_class(bool effective = false, int max_terms = 3) {
        TateClass c;
        int terms = static_cast<int>(uniform(1, max_terms));
        for (int i = 0; i < terms; ++i) {
            long coeff = uniform(effective ? 0 : -3, 3);
            c += TateClass::monomial(uniform(-3, 3), Bigint(coeff));
        }
        return c;
    }

    MotiveSeries unit_series(long order) {
        MotiveSeries s = MotiveSeries::one(order);
        for (long n = 1; n <= order; ++n)
            if (uniform(0, 3) != 0) s.set_coeff(n, tate_class());
        return s;
    }

    MotiveSeries zero_const_series(long order, bool effective = false) {
        MotiveSeries s(order);
        for (long n = 1; n <= order; ++n)
            if (uniform(0, 3) != 0) s.set_coeff(n, tate_class(effective));
        return s;
    }
};

unsigned long long case_seed(unsigned base, const std::string& name) {
    unsigned long long h = 1469598103934665603ull;
    for (char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h ^ base;
}

std::string instance_tag(int k, const std::string& what) {
    return what + " (instance " + std::to_string(k) + ")";
}

// Named threefold models used by the closed-form identity.
struct NamedThreefold {
    const char* name;
    TateClass motive;
};

std::vector<NamedThreefold> threefold_models() {
    return {
        {"point", TateClass::one()},
        {"affine3", TateClass::lefschetz(3)},
        {"p3", TateClass::projective(3)},
        {"p1cube", TateClass::projective(1) * TateClass::projective(1) * TateClass::projective(1)},
    };
}

// ---------------------------------------------------------------------------
// Suite construction.
// ---------------------------------------------------------------------------

void add_euler_specialization_cases(std::vector<Case>& cases, const VerifyOptions& opts);
void add_series_effectivity_cases(std::vector<Case>& cases, const VerifyOptions& opts);

void add_axiom_cases(std::vector<Case>& cases, const VerifyOptions& opts) {
    const long N = opts.order;
    const int instances = opts.instances;
    const unsigned seed = opts.seed;
    const PowerFn pw = opts.power_impl ? opts.power_impl
                                       : [](const MotiveSeries& a, const TateClass& c) {
                                             return power(a, c);
                                         };
    auto params = nlohmann::json{{"order", N}, {"instances", instances}, {"seed", opts.seed}};

    auto add_axiom = [&](int which, const char* name,
                         std::function<std::optional<Discrepancy>(Rng&, const PowerFn&)> body) {
        std::string id = std::string("power_axiom_") + std::to_string(which) + "_" + name;
        cases.push_back({id, params,
                         [id, seed, instances, pw, body]() -> std::optional<Discrepancy> {
                             Rng rng(case_seed(seed, id));
                             for (int k = 0; k < instances; ++k) {
                                 auto d = body(rng, pw);
                                 if (d) {
                                     d->actual = instance_tag(k, d->actual);
                                     return d;
                                 }
                             }
                             return std::nullopt;
                         }});
    };

    add_axiom(1, "unit_exponent", [N](Rng& rng, const PowerFn& pw) {
        auto a = rng.unit_series(N);
        return compare_series(MotiveSeries::one(N), pw(a, TateClass::zero()));
    });
    add_axiom(2, "identity_exponent", [N](Rng& rng, const PowerFn& pw) {
        auto a = rng.unit_series(N);
        return compare_series(a, pw(a, TateClass::one()));
    });
    add_axiom(3, "multiplicative_base", [N](Rng& rng, const PowerFn& pw) {
        auto a = rng.unit_series(N);
        auto b = rng.unit_series(N);
        auto m = rng.tate_class();
        return compare_series(pw(a * b, m), pw(a, m) * pw(b, m));
    });
    add_axiom(4, "additive_exponent", [N](Rng& rng, const PowerFn& pw) {
        auto a = rng.unit_series(N);
        auto m = rng.tate_class();
        auto m2 = rng.tate_class();
        return compare_series(pw(a, m + m2), pw(a, m) * pw(a, m2));
    });
    add_axiom(5, "multiplicative_exponent", [N](Rng& rng, const PowerFn& pw) {
        auto a = rng.unit_series(N);
        auto m = rng.tate_class();
        auto m2 = rng.tate_class();
        return compare_series(pw(a, m * m2), pw(pw(a, m), m2));
    });
    add_axiom(6, "linear_term", [N](Rng& rng, const PowerFn& pw) -> std::optional<Discrepancy> {
        auto m = rng.tate_class();
        MotiveSeries one_plus_t = MotiveSeries::one(N);
        one_plus_t.set_coeff(1, TateClass::one());
        auto p = pw(one_plus_t, m);
        if (!p.coeff(0).is_one())
            return Discrepancy{0, "1", p.coeff(0).to_string_l()};
        if (p.coeff(1) != m)
            return Discrepancy{1, m.to_string_l(), p.coeff(1).to_string_l()};
        return std::nullopt;
    });
    add_axiom(7, "substitution", [N](Rng& rng, const PowerFn& pw) {
        auto a = rng.unit_series(N);
        auto m = rng.tate_class();
        long e = rng.uniform(1, 3);
        return compare_series(substitute(pw(a, m), TateClass::one(), e),
                              pw(substitute(a, TateClass::one(), e), m));
    });

    cases.push_back({"exp_additive", params, [N, instances, seed = opts.seed]() -> std::optional<Discrepancy> {
                         Rng rng(case_seed(seed, "exp_additive"));
                         for (int k = 0; k < instances; ++k) {
                             auto a = rng.zero_const_series(N);
                             auto b = rng.zero_const_series(N);
                             auto d = compare_series(exp_series(a + b), exp_series(a) * exp_series(b));
                             if (d) {
                                 d->actual = instance_tag(k, d->actual);
                                 return d;
                             }
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"log_multiplicative", params, [N, instances, seed = opts.seed]() -> std::optional<Discrepancy> {
                         Rng rng(case_seed(seed, "log_multiplicative"));
                         for (int k = 0; k < instances; ++k) {
                             auto a = rng.unit_series(N);
                             auto b = rng.unit_series(N);
                             auto d = compare_series(log_series(a * b), log_series(a) + log_series(b));
                             if (d) {
                                 d->actual = instance_tag(k, d->actual);
                                 return d;
                             }
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"exp_log_inverse", params, [N, instances, seed = opts.seed]() -> std::optional<Discrepancy> {
                         Rng rng(case_seed(seed, "exp_log_inverse"));
                         for (int k = 0; k < instances; ++k) {
                             auto a = rng.zero_const_series(N);
                             auto u = rng.unit_series(N);
                             auto d = compare_series(a, log_series(exp_series(a)));
                             if (!d) d = compare_series(u, exp_series(log_series(u)));
                             if (d) {
                                 d->actual = instance_tag(k, d->actual);
                                 return d;
                             }
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"sigma_additivity", params, [instances, seed = opts.seed]() -> std::optional<Discrepancy> {
                         Rng rng(case_seed(seed, "sigma_additivity"));
                         int reps = std::max(instances / 5, 10);
                         for (int k = 0; k < reps; ++k) {
                             auto a = rng.tate_class();
                             auto b = rng.tate_class();
                             for (unsigned n = 0; n <= 6; ++n) {
                                 TateClass convolution;
                                 for (unsigned i = 0; i <= n; ++i)
                                     convolution += sigma(a, i) * sigma(b, n - i);
                                 TateClass direct = sigma(a + b, n);
                                 if (convolution != direct)
                                     return Discrepancy{static_cast<long>(n), direct.to_string_l(),
                                                        instance_tag(k, convolution.to_string_l())};
                             }
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"stirling_recomposition", nlohmann::json{{"k_max", 6}, {"d_max", 3}},
                     []() -> std::optional<Discrepancy> {
                         for (unsigned d = 1; d <= 3; ++d)
                             for (unsigned k = 1; k <= 6; ++k) {
                                 TateClass sum;
                                 for (unsigned j = 1; j <= k; ++j) {
                                     TateClass term = config_class(d, j);
                                     term.scale(stirling2(k, j));
                                     sum += term;
                                 }
                                 TateClass expected = TateClass::lefschetz(static_cast<long>(d) * k);
                                 if (sum != expected)
                                     return Discrepancy{static_cast<long>(k), expected.to_string_l(),
                                                        "d=" + std::to_string(d) + ": " + sum.to_string_l()};
                             }
                         return std::nullopt;
                     }});
    cases.push_back({"exp_effectivity", params, [N, instances, seed = opts.seed]() -> std::optional<Discrepancy> {
                         Rng rng(case_seed(seed, "exp_effectivity"));
                         for (int k = 0; k < instances; ++k) {
                             auto a = rng.zero_const_series(N, /*effective=*/true);
                             auto e = exp_series(a);
                             for (long n = 0; n <= N; ++n)
                                 if (!e.coeff(n).is_effective())
                                     return Discrepancy{n, "effective class",
                                                        instance_tag(k, e.coeff(n).to_string_u())};
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"realization_homomorphisms", params, [instances, seed = opts.seed]() -> std::optional<Discrepancy> {
                         Rng rng(case_seed(seed, "realization_homomorphisms"));
                         for (int k = 0; k < instances; ++k) {
                             auto a = rng.tate_class();
                             auto b = rng.tate_class();
                             if ((a * b).euler_char() != a.euler_char() * b.euler_char())
                                 return Discrepancy{0, "chi multiplicative", instance_tag(k, "chi(ab) != chi(a)chi(b)")};
                             if ((a * b).weight_specialize() != a.weight_specialize() * b.weight_specialize())
                                 return Discrepancy{0, "weight multiplicative", instance_tag(k, "W(ab) != W(a)W(b)")};
                             // W(a) at q = 1 equals a at u = -1
                             Bigint at_minus_one = 0;
                             for (const auto& [e, c] : a.terms())
                                 at_minus_one += (e % 2 != 0) ? -c : c;
                             if (a.weight_specialize().evaluate_at_one() != at_minus_one)
                                 return Discrepancy{0, at_minus_one.str(),
                                                    instance_tag(k, a.weight_specialize().evaluate_at_one().str())};
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"serialization_roundtrip", params, [N, instances, seed = opts.seed]() -> std::optional<Discrepancy> {
                         Rng rng(case_seed(seed, "serialization_roundtrip"));
                         for (int k = 0; k < instances; ++k) {
                             auto a = rng.tate_class();
                             if (TateClass::from_json(a.to_json()) != a)
                                 return Discrepancy{0, a.to_string_u(), instance_tag(k, "class roundtrip")};
                             auto s = rng.unit_series(std::min<long>(N, 6));
                             if (MotiveSeries::from_json(s.to_json()) != s)
                                 return Discrepancy{0, "series", instance_tag(k, "series roundtrip")};
                         }
                         return std::nullopt;
                     }});
}

void add_identity_cases(std::vector<Case>& cases, const VerifyOptions& opts) {
    const long N = opts.order;
    for (unsigned r : opts.ranks) {
        cases.push_back({"gen_function_affine", nlohmann::json{{"r", r}, {"order", N}},
                         [r, N]() {
                             TateClass sign = TateClass::integer(r % 2 != 0 ? -1 : 1);
                             MotiveSeries lhs = substitute(z_affine(r, N), sign, 1);
                             MotiveSeries rhs = power(p_punctual(r, N), TateClass::lefschetz(3));
                             return compare_series(lhs, rhs);
                         }});
        cases.push_back({"omega_generation", nlohmann::json{{"r", r}, {"order", N}},
                         [r, N]() {
                             MotiveSeries arg(N);
                             for (long n = 1; n <= N; ++n)
                                 arg.set_coeff(n, omega(r, static_cast<unsigned>(n)));
                             return compare_series(p_punctual(r, N), exp_series(arg));
                         }});
        if (r <= 3) {
            const long n3 = std::min<long>(N, 10);
            for (const auto& model : threefold_models()) {
                cases.push_back({"threefold_closed_form",
                                 nlohmann::json{{"r", r}, {"order", n3}, {"Y", model.name}},
                                 [r, n3, motive = model.motive]() {
                                     auto y = ThreefoldInput::from_motive(motive);
                                     MotiveSeries via_power = z_threefold(y, r, n3, ZMode::power);
                                     MotiveSeries closed = z_threefold(y, r, n3, ZMode::closed_form);
                                     return compare_series(via_power, closed);
                                 }});
            }
            cases.push_back({"vc_weight_identity", nlohmann::json{{"r", r}, {"order", std::min<long>(N, 8)}},
                             [r, N]() {
                                 auto [lhs, rhs] = vc_weight_sides(r, std::min<long>(N, 8));
                                 return compare_weight_series(rhs, lhs);
                             }});
        }
    }
    // the chi-specialization and effectivity statements are identities of the
    // generating functions as well; keep them reachable from this suite
    add_euler_specialization_cases(cases, opts);
    add_series_effectivity_cases(cases, opts);
    cases.push_back({"r1_hilbert_reduction", nlohmann::json{{"n_max", 8}},
                     []() -> std::optional<Discrepancy> {
                         for (unsigned n = 1; n <= 8; ++n) {
                             // (-1)^n L^{-3/2} (L^{n/2} - L^{-n/2})/(L^{1/2} - L^{-1/2})
                             TateClass bracket;
                             for (unsigned j = 0; j < n; ++j)
                                 bracket += TateClass::half_lefschetz(static_cast<long>(n) - 1 - 2 * static_cast<long>(j));
                             TateClass closed = TateClass::half_lefschetz(-3) * bracket;
                             if (n % 2 != 0) closed.scale(-1);
                             if (closed != omega(1, n))
                                 return Discrepancy{static_cast<long>(n), closed.to_string_l(),
                                                    omega(1, n).to_string_l()};
                         }
                         return std::nullopt;
                     }});
}

// Identity between chi of the affine series and the sign-twisted colored
// plane-partition counts; shared by the identities and euler suites.
void add_euler_specialization_cases(std::vector<Case>& cases, const VerifyOptions& opts) {
    const long N = std::min<long>(opts.order, 10);
    for (unsigned r : opts.ranks) {
        cases.push_back({"euler_specialization", nlohmann::json{{"r", r}, {"order", N}},
                         [r, N]() -> std::optional<Discrepancy> {
                             MotiveSeries z = z_affine(r, N);
                             for (long n = 0; n <= N; ++n) {
                                 Bigint expected = colored_plane_partitions(r, static_cast<int>(n));
                                 if ((r * n) % 2 != 0) expected = -expected;
                                 Bigint actual = z.coeff(n).euler_char();
                                 if (actual != expected)
                                     return Discrepancy{n, expected.str(), actual.str()};
                             }
                             return std::nullopt;
                         }});
    }
}

void add_euler_cases(std::vector<Case>& cases, const VerifyOptions& opts) {
    const long N = std::min<long>(opts.order, 10);
    add_euler_specialization_cases(cases, opts);
    cases.push_back({"macmahon_vs_partitions", nlohmann::json{{"order", N}},
                     [N]() -> std::optional<Discrepancy> {
                         IntSeries m = macmahon(N);
                         for (long n = 0; n <= N; ++n) {
                             Bigint pp = plane_partition_count(static_cast<int>(n));
                             if (m[static_cast<size_t>(n)] != pp)
                                 return Discrepancy{n, pp.str(), m[static_cast<size_t>(n)].str()};
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"quintic_dt", nlohmann::json{{"order", 6}},
                     []() -> std::optional<Discrepancy> {
                         IntSeries dt = dt_series(2, -200, 6);
                         // independent route: invert M(q)^{400}
                         IntSeries m400{Bigint(1)};
                         m400.resize(7, Bigint(0));
                         m400[0] = 1;
                         for (long m = 1; m <= 6; ++m)
                             int_series_mul_factor(m400, +1, m, Bigint(m) * 400);
                         IntSeries expected = int_series_inverse(m400);
                         for (long n = 0; n <= 6; ++n)
                             if (dt[static_cast<size_t>(n)] != expected[static_cast<size_t>(n)])
                                 return Discrepancy{n, expected[static_cast<size_t>(n)].str(),
                                                    dt[static_cast<size_t>(n)].str()};
                         if (dt[1] != -400)
                             return Discrepancy{1, "-400", dt[1].str()};
                         return std::nullopt;
                     }});
}

// Effectivity of the signed punctual and affine coefficients; shared by the
// identities and effectivity suites.
void add_series_effectivity_cases(std::vector<Case>& cases, const VerifyOptions& opts) {
    const long N = std::min<long>(opts.order, 8);
    for (unsigned r : opts.ranks) {
        if (r <= 3) {
            cases.push_back({"effectivity_punctual", nlohmann::json{{"r", r}, {"n_max", N}},
                             [r, N]() -> std::optional<Discrepancy> {
                                 MotiveSeries p = p_punctual(r, N);
                                 for (long n = 0; n <= N; ++n)
                                     if (!p.coeff(n).is_effective())
                                         return Discrepancy{n, "effective class",
                                                            p.coeff(n).to_string_u()};
                                 return std::nullopt;
                             }});
            cases.push_back({"effectivity_affine", nlohmann::json{{"r", r}, {"n_max", N}},
                             [r, N]() -> std::optional<Discrepancy> {
                                 MotiveSeries z = z_affine(r, N);
                                 for (long n = 0; n <= N; ++n) {
                                     TateClass c = z.coeff(n);
                                     if ((r * n) % 2 != 0) c.scale(-1);
                                     if (!c.is_effective())
                                         return Discrepancy{n, "effective class", c.to_string_u()};
                                 }
                                 return std::nullopt;
                             }});
        }
    }
}

void add_effectivity_cases(std::vector<Case>& cases, const VerifyOptions& opts) {
    add_series_effectivity_cases(cases, opts);
    for (unsigned r : opts.ranks) {
        if (r <= 4) {
            cases.push_back({"omega_effective", nlohmann::json{{"r", r}, {"n_max", 4}},
                             [r]() -> std::optional<Discrepancy> {
                                 for (unsigned n = 1; n <= 4; ++n) {
                                     TateClass w = omega(r, n);
                                     if (!w.is_effective())
                                         return Discrepancy{static_cast<long>(n), "effective class",
                                                            w.to_string_u()};
                                     if (w.euler_char() != Bigint(r) * n)
                                         return Discrepancy{static_cast<long>(n),
                                                            (Bigint(r) * n).str(),
                                                            w.euler_char().str()};
                                 }
                                 return std::nullopt;
                             }});
        }
    }
}

void add_oracle_cases(std::vector<Case>& cases, const VerifyOptions& opts) {
    for (unsigned r : opts.ranks) {
        if (r > 4) continue;
        cases.push_back({"oracle_closed_form", nlohmann::json{{"r", r}, {"q", {2, 3, 5}}},
                         [r]() -> std::optional<Discrepancy> {
                             for (unsigned q : {2u, 3u, 5u}) {
                                 Bigint expected = Bigint(q) * q * q *
                                                   ((boost::multiprecision::pow(Bigint(q), r) - 1) / (q - 1));
                                 Bigint quot = count_quot_points(r, 1, q);
                                 Bigint nc = count_ncquot_points(r, 1, q);
                                 if (quot != expected)
                                     return Discrepancy{static_cast<long>(q), expected.str(), quot.str()};
                                 if (nc != expected)
                                     return Discrepancy{static_cast<long>(q), expected.str(), nc.str()};
                             }
                             return std::nullopt;
                         }});
        if (r <= 3) {
            cases.push_back({"oracle_colored_pp", nlohmann::json{{"r", r}, {"n_max", 8}},
                             [r]() -> std::optional<Discrepancy> {
                                 IntSeries mr{Bigint(1)};
                                 mr.resize(9, Bigint(0));
                                 mr[0] = 1;
                                 IntSeries m = macmahon(8);
                                 for (unsigned i = 0; i < r; ++i) mr = int_series_mul(mr, m);
                                 for (int n = 0; n <= 8; ++n) {
                                     Bigint counted = colored_plane_partitions(r, n);
                                     if (counted != mr[static_cast<size_t>(n)])
                                         return Discrepancy{n, mr[static_cast<size_t>(n)].str(),
                                                            counted.str()};
                                 }
                                 return std::nullopt;
                             }});
        }
    }
    for (const auto& pin : pinned_oracle_counts()) {
        cases.push_back({"oracle_structural",
                         nlohmann::json{{"r", pin.r}, {"n", pin.n}, {"q", pin.q}},
                         [pin]() -> std::optional<Discrepancy> {
                             OracleOptions base;
                             Bigint quot = count_quot_points(pin.r, pin.n, pin.q, base);
                             if (quot != Bigint(pin.count_quot))
                                 return Discrepancy{0, pin.count_quot, quot.str()};
                             if (!pin.count_ncquot) return std::nullopt;
                             Bigint nc = count_ncquot_points(pin.r, pin.n, pin.q, base);
                             if (nc != Bigint(pin.count_ncquot))
                                 return Discrepancy{0, pin.count_ncquot, nc.str()};
                             if (quot > nc)
                                 return Discrepancy{0, "count_quot <= count_ncquot",
                                                    quot.str() + " > " + nc.str()};
                             // permutation of the loop roles must not change counts
                             for (const auto& perm : {std::array<int, 3>{1, 0, 2},
                                                      std::array<int, 3>{1, 2, 0}}) {
                                 OracleOptions o;
                                 o.loop_perm = perm;
                                 if (count_quot_points(pin.r, pin.n, pin.q, o) != quot)
                                     return Discrepancy{0, quot.str(), "quot count changed under loop permutation"};
                                 if (count_ncquot_points(pin.r, pin.n, pin.q, o) != nc)
                                     return Discrepancy{0, nc.str(), "ncquot count changed under loop permutation"};
                             }
                             return std::nullopt;
                         }});
    }
    // leading-degree consistency of the ncquot counts with dim = 2n^2 + rn,
    // estimated from the two available primes
    const std::pair<unsigned, int> structural_dims[] = {{1, 2}, {2, 2}};
    for (const auto& [r, n] : structural_dims) {
        cases.push_back({"oracle_dimension", nlohmann::json{{"r", r}, {"n", n}},
                         [r = r, n = n]() -> std::optional<Discrepancy> {
                             long d = 2L * n * n + static_cast<long>(r) * n;
                             // q = 3 leaves enough headroom for the subleading
                             // terms: q^d <= count < q^{d+1}
                             double c3 = count_ncquot_points(r, n, 3).convert_to<double>();
                             long estimated = static_cast<long>(std::log(c3) / std::log(3.0));
                             if (estimated != d)
                                 return Discrepancy{0, std::to_string(d), std::to_string(estimated)};
                             Bigint c2 = count_ncquot_points(r, n, 2);
                             Bigint floor2 = 1;
                             for (long i = 0; i < d; ++i) floor2 *= 2;
                             if (c2 < floor2)
                                 return Discrepancy{0, "count(2) >= 2^" + std::to_string(d), c2.str()};
                             return std::nullopt;
                         }});
    }
}

} // namespace

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<Case> cases;
    bool known = false;
    if (suite == "axioms" || suite == "all") {
        add_axiom_cases(cases, opts);
        known = true;
    }
    if (suite == "identities" || suite == "all") {
        add_identity_cases(cases, opts);
        known = true;
    }
    if (suite == "euler" || suite == "all") {
        add_euler_cases(cases, opts);
        known = true;
    }
    if (suite == "effectivity" || suite == "all") {
        add_effectivity_cases(cases, opts);
        known = true;
    }
    if (suite == "oracle" || suite == "all") {
        add_oracle_cases(cases, opts);
        known = true;
    }
    if (!known) throw std::invalid_argument("unknown suite: " + suite);

    // suites overlap (the chi and effectivity identities belong to several);
    // run each distinct (identity, params) once
    {
        std::vector<Case> unique;
        std::set<std::string> seen;
        for (auto& c : cases)
            if (seen.insert(c.identity + "|" + c.params.dump()).second)
                unique.push_back(std::move(c));
        cases = std::move(unique);
    }

    if (!opts.only_identity.empty()) {
        std::vector<Case> filtered;
        for (auto& c : cases)
            if (c.identity == opts.only_identity) filtered.push_back(std::move(c));
        if (filtered.empty())
            throw std::invalid_argument("unknown identity: " + opts.only_identity);
        cases = std::move(filtered);
    }

    VerificationReport report;
    report.suite = suite;
    report.cases.resize(cases.size());

    const int threads = resolve_threads(opts.threads);
    const int total = static_cast<int>(cases.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
    (void)threads;
#endif
    for (int i = 0; i < total; ++i) {
        CaseOutcome outcome;
        outcome.identity = cases[i].identity;
        outcome.params = cases[i].params;
        auto start = Clock::now();
        try {
            auto d = cases[i].run();
            outcome.pass = !d.has_value();
            if (d) outcome.first_discrepancy = std::move(*d);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.first_discrepancy = Discrepancy{-1, "no exception", e.what()};
        }
        outcome.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        report.cases[i] = std::move(outcome);
    }
    return report;
}

} // namespace quotdt
