#ifndef NUMSG_TOOLS_CLI_HPP
#define NUMSG_TOOLS_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numsg/numsg.hpp"

namespace numsg::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kResourceCap = 3,
    kInvalidInput = 4,
    kUnwritable = 5,
    kCheckpointMismatch = 6,
};

inline int default_threads() {
    if (const char* env = std::getenv("NUMSG_THREADS")) {
        try {
            const int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

inline std::string encode(const Semigroup& s, const std::string& emit) {
    if (emit == "gens") return join(s.minimal_generators());
    if (emit == "kunz") {
        if (s.is_natural()) return "1;";
        const KunzVector v = kunz_vector(s);
        return std::to_string(v.m) + ";" + join(v.k);
    }
    return join(s.gaps());
}

inline nlohmann::ordered_json classify_json(const Semigroup& s, int nb_cap) {
    nlohmann::ordered_json j;
    j["gaps"] = s.gaps();
    j["generators"] = s.minimal_generators();
    j["m"] = s.multiplicity();
    j["F"] = s.frobenius();
    j["g"] = s.genus();
    j["weight"] = weight(s);
    if (s.is_natural()) {
        j["class"] = nullptr;
        j["kunz"] = nullptr;
    } else {
        j["class"] = std::string(to_string(frobenius_class(s)));
        j["kunz"] = kunz_vector(s).k;
    }

    const BuchweitzReport rep = classify_buchweitz(s, nb_cap);
    nlohmann::ordered_json b;
    b["n_cap"] = rep.n_cap;
    if (rep.trivial)
        b["horizon"] = nullptr;
    else if (rep.horizon)
        b["horizon"] = *rep.horizon;
    else
        b["horizon"] = "unbounded";
    b["trivial"] = rep.trivial;
    b["capped"] = rep.capped;
    b["fails_any"] = rep.fails_any();
    if (auto f = rep.first_failure())
        b["first_failure"] = *f;
    else
        b["first_failure"] = nullptr;
    b["tests"] = nlohmann::ordered_json::array();
    for (const auto& t : rep.tests) {
        nlohmann::ordered_json tj;
        tj["n"] = t.n;
        tj["sumset_size"] = t.sumset_size;
        tj["threshold"] = t.threshold;
        tj["fails"] = t.fails;
        b["tests"].push_back(tj);
    }
    j["buchweitz"] = b;
    j["eisenbud_harris"] = eisenbud_harris(s);
    if (!s.is_natural() && frobenius_class(s) == FrobeniusClass::kMid) {
        const TypeAK t = type_ak(s);
        nlohmann::ordered_json tj;
        tj["k"] = t.k;
        tj["A"] = t.a;
        j["type"] = tj;
    } else {
        j["type"] = nullptr;
    }
    return j;
}

/// Runs the command line; all output goes to `out` and `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate, classify and census numerical semigroups", "numsg"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Stream every semigroup of one genus");
    int en_genus = 0;
    std::string en_emit = "gaps";
    bool en_count_only = false;
    int en_cap = kDefaultGenusCap;
    enumerate->add_option("--genus", en_genus, "Genus")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--emit", en_emit, "Encoding per line")->check(CLI::IsMember({"gaps", "gens", "kunz"}));
    enumerate->add_flag("--count-only", en_count_only, "Print only the number of semigroups");
    enumerate->add_option("--genus-cap", en_cap, "Largest genus accepted")->check(CLI::NonNegativeNumber);

    // classify
    auto* classify = app.add_subcommand("classify", "Classify one semigroup and print a JSON record");
    std::string cl_gaps;
    std::string cl_gens;
    int cl_nb_cap = 8;
    auto* gaps_opt = classify->add_option("--gaps", cl_gaps, "Gap list, e.g. 1..12,19,21,24,25");
    auto* gens_opt = classify->add_option("--gens", cl_gens, "Generator list, e.g. 3,5,7");
    gaps_opt->excludes(gens_opt);
    classify->add_option("--nb-cap", cl_nb_cap, "Largest n tested by the sumset criterion")
        ->check(CLI::Range(2, 1000));

    // census
    auto* census = app.add_subcommand("census", "Per-genus census written as CSV or JSON lines");
    CensusConfig cfg;
    cfg.threads = default_threads();
    std::string ce_out;
    std::string ce_format = "csv";
    std::string ce_eps = cfg.epsilon.str();
    std::string ce_weight_eps = cfg.weight_epsilon.str();
    std::string ce_ratio = "1.3667";
    bool ce_no_weight = false;
    int ce_stop_after = -1;
    census->add_option("--gmax", cfg.g_max, "Largest genus")->required()->check(CLI::PositiveNumber);
    census->add_option("--out", ce_out, "Output file")->required();
    census->add_option("--format", ce_format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    census->add_option("--threads", cfg.threads, "Worker threads (default from NUMSG_THREADS)")
        ->check(CLI::PositiveNumber);
    census->add_option("--split-depth", cfg.split_depth, "Genus at which subtrees are handed to workers")
        ->check(CLI::NonNegativeNumber);
    census->add_option("--checkpoint", cfg.checkpoint_path, "Resumable JSON-lines checkpoint");
    census->add_option("--eps", ce_eps, "Window half-width, as p/q or decimal");
    census->add_option("--nb-cap", cfg.nb_n_cap, "Largest n tested by the sumset criterion")
        ->check(CLI::Range(2, 1000));
    census->add_option("--m-threshold", cfg.m_threshold, "Multiplicity threshold for the b_m420 column");
    census->add_option("--ratio", ce_ratio, "Genus/multiplicity ratio for the c_ratio column");
    census->add_option("--weight-eps", ce_weight_eps, "Offset applied to the weight tail thresholds");
    census->add_flag("--no-weight-flags", ce_no_weight, "Leave the y_beta1 and z_beta2 columns empty");
    census->add_option("--genus-cap", cfg.genus_cap, "Largest genus accepted")->check(CLI::NonNegativeNumber);
    census->add_option("--stop-after", ce_stop_after)->group("");

    // verify
    auto* verify = app.add_subcommand("verify", "Run an exhaustive check suite");
    std::string ve_suite;
    std::optional<int> ve_gmax;
    int ve_threads = default_threads();
    verify->add_option("suite", ve_suite, "komeda, qbinom, kaplan, kunz, fib, zhao or weightmid")->required();
    verify->add_option("--gmax", ve_gmax, "Genus bound (suite default otherwise)")->check(CLI::PositiveNumber);
    verify->add_option("--threads", ve_threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*enumerate) {
            EnumerationOptions opt;
            opt.genus_cap = en_cap;
            check_genus_cap(en_genus, opt);
            std::uint64_t count = 0;
            reduce_tree<GenusTally>(
                en_genus, opt, [] { return GenusTally{}; },
                [&](GenusTally&, const TreeNode& n) {
                    ++count;
                    if (!en_count_only) out << encode(n.semigroup(), en_emit) << '\n';
                },
                en_genus);
            if (en_count_only) out << count << '\n';
            return kOk;
        }

        if (*classify) {
            if (gaps_opt->count() + gens_opt->count() != 1) {
                err << "classify: give exactly one of --gaps or --gens\n";
                return kUsage;
            }
            std::vector<int> list;
            try {
                list = parse_int_list(gaps_opt->count() ? cl_gaps : cl_gens);
            } catch (const std::invalid_argument& e) {
                err << "classify: " << e.what() << '\n';
                return kUsage;
            }
            std::optional<Semigroup> s;
            try {
                s = gaps_opt->count() ? Semigroup::from_gaps(list) : Semigroup::from_generators(list);
            } catch (const InvalidGapSet& e) {
                err << e.what() << '\n';
                return kInvalidInput;
            } catch (const std::invalid_argument& e) {
                err << e.what() << '\n';
                return kInvalidInput;
            }
            out << classify_json(*s, cl_nb_cap).dump() << '\n';
            return kOk;
        }

        if (*census) {
            try {
                cfg.epsilon = Rational::parse(ce_eps);
                cfg.weight_epsilon = Rational::parse(ce_weight_eps);
                cfg.genus_mult_ratio = Rational::parse(ce_ratio);
            } catch (const std::invalid_argument& e) {
                err << "census: " << e.what() << '\n';
                return kUsage;
            }
            cfg.weight_beta_flags = !ce_no_weight;
            try {
                cfg.validate();
            } catch (const std::invalid_argument& e) {
                err << e.what() << '\n';
                return kUsage;
            }
            check_genus_cap(cfg.g_max, EnumerationOptions{1, cfg.split_depth, cfg.genus_cap});

            std::ofstream file(ce_out, std::ios::trunc);
            if (!file) {
                err << "census: cannot write " << ce_out << '\n';
                return kUnwritable;
            }
            const auto t0 = std::chrono::steady_clock::now();
            bool stopped = false;
            const auto rows = run_census(cfg, [&](const CensusRow& r) {
                if (ce_stop_after >= 0 && r.g >= ce_stop_after && r.g < cfg.g_max) {
                    stopped = true;
                    return false;
                }
                return true;
            });
            if (ce_format == "csv")
                write_csv(file, rows);
            else
                write_jsonl(file, rows);
            file.flush();
            if (!file) {
                err << "census: cannot write " << ce_out << '\n';
                return kUnwritable;
            }
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

            nlohmann::ordered_json summary;
            summary["config"] = cfg.to_json();
            summary["format"] = ce_format;
            summary["out"] = ce_out;
            summary["rows"] = rows.size();
            summary["complete"] = !stopped;
            const KomedaDiff d = komeda_compare(rows);
            summary["published_table"] = d.coverage_error() ? "not covered" : (d.ok() ? "match" : "mismatch");
            summary["elapsed_seconds"] = secs;
            out << summary.dump() << '\n';
            return kOk;
        }

        if (*verify) {
            if (!default_bound(ve_suite)) {
                err << "verify: unknown suite '" << ve_suite << "'\n";
                return kUsage;
            }
            const VerifyResult r = *run_verify(ve_suite, ve_gmax, ve_threads);
            nlohmann::ordered_json j;
            j["suite"] = r.suite;
            j["gmax"] = r.bound;
            j["passed"] = r.passed;
            j["checked"] = r.checked;
            if (r.passed)
                j["counterexample"] = nullptr;
            else
                j["counterexample"] = r.counterexample;
            out << j.dump() << '\n';
            return r.passed ? kOk : kVerifyFailed;
        }
    } catch (const ResourceLimit& e) {
        err << e.what() << '\n';
        return kResourceCap;
    } catch (const CheckpointMismatch& e) {
        err << e.what() << '\n';
        return kCheckpointMismatch;
    } catch (const IoError& e) {
        err << e.what() << '\n';
        return kUnwritable;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace numsg::cli

#endif  // NUMSG_TOOLS_CLI_HPP
