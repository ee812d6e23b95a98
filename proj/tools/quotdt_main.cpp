#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quotdt/gen_functions.hpp"
#include "quotdt/oracle.hpp"
#include "quotdt/plane_partitions.hpp"
#include "quotdt/verify.hpp"

namespace {

using namespace quotdt;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string render_class(const TateClass& c, bool var_u) {
    return var_u ? c.to_string_u() : c.to_string_l();
}

struct ExpandArgs {
    std::string formula;
    long order = 12;
    unsigned rank = 1;
    long long chi = 0;
    bool chi_set = false;
    long long c1c2 = 0, c3 = 0;
    bool chern_set = false;
    std::string threefold = "affine3";
    std::string motive_json;
    std::string mode = "closed-form";
    std::string format = "csv";
    std::string var = "L";
    bool var_u = false;
};

TateClass builtin_threefold(const std::string& name) {
    if (name == "point") return TateClass::one();
    if (name == "affine3") return TateClass::lefschetz(3);
    if (name == "p3") return TateClass::projective(3);
    if (name == "p1cube")
        return TateClass::projective(1) * TateClass::projective(1) * TateClass::projective(1);
    throw std::invalid_argument("unknown threefold model: " + name +
                                " (expected point|affine3|p3|p1cube)");
}

void print_motive_rows(const std::string& formula, const nlohmann::json& params,
                       const std::vector<std::pair<long, TateClass>>& rows,
                       const ExpandArgs& args) {
    if (args.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [n, c] : rows) arr.push_back(c.to_json());
        nlohmann::json out{{"formula", formula}, {"params", params}};
        if (!rows.empty() && rows.front().first == 0)
            out["series"] = nlohmann::json{{"order", rows.back().first}, {"coeffs", arr}};
        else
            out["classes"] = arr;
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "n, class, euler, weight\n";
        for (const auto& [n, c] : rows)
            std::cout << n << ", " << render_class(c, args.var_u) << ", " << c.euler_char().str()
                      << ", " << c.weight_specialize().to_string() << "\n";
    } else {
        for (const auto& [n, c] : rows)
            std::cout << "$" << n << "$ & $" << c.to_latex() << "$ & $" << c.euler_char().str()
                      << "$ \\\\\n";
    }
}

void print_int_rows(const std::string& formula, const nlohmann::json& params, const IntSeries& s,
                    const ExpandArgs& args, const char* note = nullptr) {
    if (args.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : s) arr.push_back(c.str());
        nlohmann::json out{{"formula", formula}, {"params", params}, {"coeffs", arr}};
        if (note) out["status"] = note;
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "csv") {
        if (note) std::cout << "# " << note << "\n";
        std::cout << "n, coefficient\n";
        for (size_t n = 0; n < s.size(); ++n) std::cout << n << ", " << s[n].str() << "\n";
    } else {
        for (size_t n = 0; n < s.size(); ++n)
            std::cout << "$" << n << "$ & $" << s[n].str() << "$ \\\\\n";
    }
}

int run_expand(const ExpandArgs& args) {
    nlohmann::json params{{"order", args.order}};
    if (args.formula == "macmahon") {
        print_int_rows("macmahon", params, macmahon(args.order), args);
        return kExitOk;
    }
    if (args.formula == "dt-series") {
        params["rank"] = args.rank;
        long long exponent = args.chi;
        const char* note = nullptr;
        if (args.chern_set) {
            if (args.chi_set)
                throw std::invalid_argument("dt-series takes either --chi or --c1c2/--c3, not both");
            exponent = chern_exponent(args.c1c2, args.c3);
            params["c1c2"] = args.c1c2;
            params["c3"] = args.c3;
            note = "conjectural exponent c3 - c1c2";
        } else if (!args.chi_set) {
            throw std::invalid_argument("dt-series requires --chi or --c1c2/--c3");
        }
        params["exponent"] = exponent;
        print_int_rows("dt-series", params, dt_series(args.rank, exponent, args.order), args, note);
        return kExitOk;
    }
    params["rank"] = args.rank;
    if (args.formula == "z-affine" || args.formula == "p-punctual" || args.formula == "z-threefold") {
        MotiveSeries s(0);
        if (args.formula == "z-affine") {
            s = z_affine(args.rank, args.order);
        } else if (args.formula == "p-punctual") {
            s = p_punctual(args.rank, args.order);
        } else {
            params["mode"] = args.mode;
            ZMode mode;
            if (args.mode == "power")
                mode = ZMode::power;
            else if (args.mode == "closed-form")
                mode = ZMode::closed_form;
            else
                throw std::invalid_argument("unknown mode: " + args.mode);
            TateClass motive;
            if (!args.motive_json.empty()) {
                motive = TateClass::from_json(nlohmann::json::parse(args.motive_json));
                params["motive"] = motive.to_json();
            } else {
                motive = builtin_threefold(args.threefold);
                params["threefold"] = args.threefold;
            }
            s = z_threefold(ThreefoldInput::from_motive(motive), args.rank, args.order, mode);
        }
        std::vector<std::pair<long, TateClass>> rows;
        for (long n = 0; n <= s.order(); ++n) rows.emplace_back(n, s.coeff(n));
        print_motive_rows(args.formula, params, rows, args);
        return kExitOk;
    }
    if (args.formula == "omega") {
        std::vector<std::pair<long, TateClass>> rows;
        for (long n = 1; n <= args.order; ++n)
            rows.emplace_back(n, omega(args.rank, static_cast<unsigned>(n)));
        print_motive_rows("omega", params, rows, args);
        return kExitOk;
    }
    if (args.formula == "vc-weight") {
        WeightSeries s = vc_weight_series(args.rank, args.order);
        if (args.format == "json") {
            nlohmann::json out{{"formula", "vc-weight"}, {"params", params},
                               {"series", s.to_json("w")}};
            std::cout << out.dump(2) << "\n";
        } else if (args.format == "csv") {
            std::cout << "n, hodge\n";
            for (long n = 0; n <= s.order(); ++n)
                std::cout << n << ", " << s.coeff(n).to_string("w") << "\n";
        } else {
            for (long n = 0; n <= s.order(); ++n)
                std::cout << "$" << n << "$ & $" << s.coeff(n).to_string("w") << "$ \\\\\n";
        }
        return kExitOk;
    }
    throw std::invalid_argument("unknown formula: " + args.formula);
}

// Fault-injection hook used by the test suite to exercise the failure path of
// `verify`: QUOTDT_FAULT=power-offset perturbs the power structure at t^2.
PowerFn faulty_power_from_env() {
    const char* fault = std::getenv("QUOTDT_FAULT");
    if (!fault || std::string(fault) != "power-offset") return {};
    return [](const MotiveSeries& a, const TateClass& c) {
        MotiveSeries out = power(a, c);
        if (out.order() >= 2) out.set_coeff(2, out.coeff(2) + TateClass::lefschetz(1));
        return out;
    };
}

int apply_pin(const std::string& path, const std::string& key, const nlohmann::json& fields) {
    nlohmann::json db = nlohmann::json::object();
    {
        std::ifstream in(path);
        if (in.good()) {
            in >> db;
            if (!db.is_object()) {
                std::cerr << "regression file is not a JSON object: " << path << "\n";
                return kExitUsage;
            }
        }
    }
    // append-only: an existing value may never change
    for (const auto& [k, v] : fields.items()) {
        if (db.contains(key) && db[key].contains(k) && db[key][k] != v) {
            std::cerr << "regression mismatch for " << key << "." << k << ": pinned "
                      << db[key][k] << ", computed " << v << "\n";
            return kExitVerificationFailure;
        }
    }
    for (const auto& [k, v] : fields.items()) db[key][k] = v;
    std::ofstream out(path);
    out << db.dump(2) << "\n";
    return kExitOk;
}

bool oracle_within_budget(bool is_quot, unsigned r, int n, unsigned q) {
    if (n <= 2 && q <= 5 && r <= 4) return true;
    if (is_quot && r == 1 && n == 3 && q == 2) return true;
    return false;
}

struct OracleArgs {
    unsigned rank = 1;
    int points = 1;
    unsigned q = 2;
    int threads = 0;
    bool force = false;
    bool pin = false;
    std::string pin_file = "oracle_counts.json";
};

int run_count(const OracleArgs& args, bool is_quot) {
    if (!fq::is_prime(args.q)) {
        std::cerr << "q must be prime\n";
        return kExitUsage;
    }
    if (!args.force && !oracle_within_budget(is_quot, args.rank, args.points, args.q)) {
        std::cerr << "refusing: (r=" << args.rank << ", n=" << args.points << ", q=" << args.q
                  << ") exceeds the enumeration budget; pass --force to run anyway\n";
        return kExitUsage;
    }
    OracleOptions opts;
    opts.threads = args.threads;
    CountRecord rec;
    rec.r = args.rank;
    rec.n = args.points;
    rec.q = args.q;
    if (is_quot)
        rec.count_quot = count_quot_points(args.rank, args.points, args.q, opts);
    else
        rec.count_ncquot = count_ncquot_points(args.rank, args.points, args.q, opts);
    std::cout << rec.to_json().dump(2) << "\n";
    if (args.pin) {
        std::string key = "r" + std::to_string(args.rank) + "_n" + std::to_string(args.points) +
                          "_q" + std::to_string(args.q);
        nlohmann::json fields;
        if (rec.count_quot) fields["count_quot"] = rec.count_quot->str();
        if (rec.count_ncquot) fields["count_ncquot"] = rec.count_ncquot->str();
        return apply_pin(args.pin_file, key, fields);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quotdt: motivic Donaldson-Thomas partition functions of Quot schemes of points,\n"
                 "with finite-field and combinatorial brute-force oracles"};
    app.require_subcommand(1);

    // ----- expand -----
    ExpandArgs expand_args;
    auto* expand = app.add_subcommand("expand", "expand a named generating function");
    expand->add_option("--formula", expand_args.formula,
                       "macmahon|z-affine|p-punctual|omega|z-threefold|dt-series|vc-weight")
        ->required();
    expand->add_option("--order", expand_args.order, "truncation order")->check(CLI::NonNegativeNumber);
    expand->add_option("--rank", expand_args.rank, "rank r >= 1");
    auto* chi_opt = expand->add_option("--chi", expand_args.chi, "exponent chi for dt-series");
    auto* c1c2_opt = expand->add_option("--c1c2", expand_args.c1c2, "Chern number c1.c2");
    auto* c3_opt = expand->add_option("--c3", expand_args.c3, "Chern number c3");
    expand->add_option("--threefold", expand_args.threefold, "point|affine3|p3|p1cube");
    expand->add_option("--motive-json", expand_args.motive_json,
                       "custom [Y] as TateClass JSON (z-threefold)");
    expand->add_option("--mode", expand_args.mode, "power|closed-form (z-threefold)");
    expand->add_option("--format", expand_args.format, "json|csv|latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    expand->add_option("--var", expand_args.var, "class rendering basis: L (default) or u")
        ->check(CLI::IsMember({"L", "u"}));

    // ----- verify -----
    std::string suite;
    VerifyOptions vopts;
    std::vector<unsigned> ranks;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->add_option("--suite", suite, "axioms|identities|euler|effectivity|oracle|all")
        ->required();
    verify->add_option("--order", vopts.order, "truncation order")->check(CLI::PositiveNumber);
    verify->add_option("--ranks", ranks, "ranks to verify (default 1 2 3 4)")->delimiter(',');
    verify->add_option("--identity", vopts.only_identity, "run a single identity by name");
    verify->add_option("--threads", vopts.threads, "worker count (default QUOTDT_THREADS)");
    verify->add_option("--instances", vopts.instances, "random instances per axiom case");
    verify->add_option("--seed", vopts.seed, "seed for the randomized suites");
    verify->add_flag("--timings", timings, "include elapsed_ms per case (non-deterministic)");

    // ----- oracle -----
    auto* oracle = app.add_subcommand("oracle", "finite-field and combinatorial counting");
    oracle->require_subcommand(1);
    OracleArgs oargs;
    auto add_count_opts = [&](CLI::App* sub) {
        sub->add_option("--rank", oargs.rank, "rank r >= 1");
        sub->add_option("--points", oargs.points, "number of points n >= 0")->required();
        sub->add_option("--q", oargs.q, "prime field size")->required();
        sub->add_option("--threads", oargs.threads, "worker count");
        sub->add_flag("--force", oargs.force, "override the enumeration budget");
        sub->add_flag("--pin", oargs.pin, "append the result to the regression file");
        sub->add_option("--pin-file", oargs.pin_file, "regression file path");
    };
    auto* quot_count = oracle->add_subcommand("quot-count", "points of the Quot scheme (critical locus)");
    add_count_opts(quot_count);
    auto* ncquot_count = oracle->add_subcommand("ncquot-count", "points of the non-commutative Quot scheme");
    add_count_opts(ncquot_count);
    unsigned pp_colors = 1;
    int pp_size = 0;
    bool pp_force = false, pp_pin = false;
    std::string pp_pin_file = "oracle_counts.json";
    auto* pp = oracle->add_subcommand("plane-partitions", "count r-colored plane partitions");
    pp->add_option("--colors", pp_colors, "number of colors r >= 1")->required();
    pp->add_option("--size", pp_size, "total size n >= 0")->required();
    pp->add_flag("--force", pp_force, "override the size budget");
    pp->add_flag("--pin", pp_pin, "append the result to the regression file");
    pp->add_option("--pin-file", pp_pin_file, "regression file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*expand) {
            expand_args.chi_set = chi_opt->count() > 0;
            expand_args.chern_set = c1c2_opt->count() > 0 || c3_opt->count() > 0;
            expand_args.var_u = (expand_args.var == "u");
            return run_expand(expand_args);
        }
        if (*verify) {
            if (!ranks.empty()) vopts.ranks = ranks;
            vopts.power_impl = faulty_power_from_env();
            VerificationReport report = run_suite(suite, vopts);
            std::cout << report.to_json(timings).dump(2) << "\n";
            return report.all_pass() ? kExitOk : kExitVerificationFailure;
        }
        if (*quot_count) return run_count(oargs, true);
        if (*ncquot_count) return run_count(oargs, false);
        if (*pp) {
            if (pp_size < 0 || pp_colors < 1) {
                std::cerr << "plane-partitions: need --size >= 0 and --colors >= 1\n";
                return kExitUsage;
            }
            if (!pp_force && pp_size > 10) {
                std::cerr << "refusing: size " << pp_size
                          << " exceeds the generation budget (10); pass --force to run anyway\n";
                return kExitUsage;
            }
            Bigint count = colored_plane_partitions(pp_colors, pp_size);
            nlohmann::json out{{"colors", pp_colors}, {"size", pp_size}, {"count", count.str()}};
            std::cout << out.dump(2) << "\n";
            if (pp_pin) {
                std::string key =
                    "pp_c" + std::to_string(pp_colors) + "_s" + std::to_string(pp_size);
                return apply_pin(pp_pin_file, key, nlohmann::json{{"count", count.str()}});
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
