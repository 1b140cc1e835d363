// Copyright 2026 involucomp authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "involucomp/asymptotics.hpp"
#include "involucomp/egf_stats.hpp"
#include "involucomp/experiments.hpp"
#include "involucomp/factorization.hpp"
#include "involucomp/numeric.hpp"
#include "involucomp/patterns.hpp"
#include "involucomp/perm.hpp"
#include "involucomp/samplers.hpp"

namespace {

using involucomp::BigInt;
using nlohmann::ordered_json;

std::vector<int> parse_set(const std::string& text) {
    std::vector<int> s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) s.push_back(std::stoi(tok));
    }
    return s;
}

involucomp::Pattern parse_pattern(const std::string& text) {
    std::vector<int> word;
    if (text.find(',') != std::string::npos) {
        for (int v : parse_set(text)) word.push_back(v);
    } else {
        for (char c : text) {
            if (std::isdigit(static_cast<unsigned char>(c))) word.push_back(c - '0');
        }
    }
    return involucomp::Pattern(word);
}

int cmd_count(const std::string& gf, int n, const std::string& set_text) {
    ordered_json out;
    out["gf"] = gf;
    out["n"] = n;
    if (gf == "pairs") {
        involucomp::PairCounts pc = involucomp::involution_pair_counts(n);
        ordered_json arr = ordered_json::array();
        for (const BigInt& v : pc.pairs) arr.push_back(v.get_str());
        out["counts"] = arr;
    } else if (gf == "spermutations") {
        std::vector<int> s = parse_set(set_text);
        std::vector<BigInt> counts = involucomp::s_permutation_counts(s, n);
        out["set"] = s;
        ordered_json arr = ordered_json::array();
        for (const BigInt& v : counts) arr.push_back(v.get_str());
        out["counts"] = arr;
    } else if (gf == "table") {
        auto table = involucomp::path_cycle_table(n);
        ordered_json arr = ordered_json::array();
        for (const auto& [pc, cnt] : table)
            arr.push_back(ordered_json::array({pc.first, pc.second, cnt.get_str()}));
        out["entries"] = arr;
    } else {
        std::cerr << "unknown --gf value: " << gf << "\n";
        return 1;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_factorize(const std::string& perm_text, bool fpf) {
    involucomp::Permutation pi = involucomp::parse_cycles(perm_text);
    involucomp::CycleType ct = involucomp::cycle_type(pi);
    ordered_json out;
    out["perm"] = involucomp::to_cycle_string(pi);
    out["n"] = pi.size();
    out["fpf"] = fpf;
    if (fpf) {
        BigInt c = involucomp::count_fpf_factorizations(ct);
        out["count"] = c.get_str();
        out["log_count"] = c > 0 ? involucomp::log_big(c) : -HUGE_VAL;
    } else {
        involucomp::FactorizationCount fc = involucomp::count_factorizations(ct);
        out["count"] = fc.value ? fc.value->get_str() : "";
        out["log_count"] = fc.log_value;
    }
    if (pi.size() <= 10) {
        auto factors = involucomp::enumerate_involution_factorizations(pi, fpf);
        ordered_json arr = ordered_json::array();
        for (const auto& [sigma, tau] : factors)
            arr.push_back(ordered_json::array({involucomp::to_cycle_string(sigma.to_permutation()),
                                               involucomp::to_cycle_string(tau.to_permutation())}));
        out["factors"] = arr;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_sample(const std::string& cls, long n, const std::string& set_text, uint64_t seed,
               long trials) {
    for (long t = 0; t < trials; ++t) {
        involucomp::SeededStream stream(seed, static_cast<uint64_t>(t));
        ordered_json line;
        line["trial"] = t;
        if (cls == "inv") {
            auto m = involucomp::sample_involution(static_cast<int>(n), stream);
            line["image"] = involucomp::to_image_string(m.to_permutation());
        } else if (cls == "fpf") {
            auto m = involucomp::sample_fpf_involution(static_cast<int>(n), stream);
            line["image"] = involucomp::to_image_string(m.to_permutation());
        } else if (cls == "boltzmann") {
            auto pi = involucomp::sample_boltzmann_s_permutation(parse_set(set_text), n, stream);
            line["size"] = pi.size();
            line["image"] = involucomp::to_image_string(pi);
        } else if (cls == "pstar") {
            auto ct = involucomp::sample_pstar_cycle_type(n, stream);
            ordered_json cj = ordered_json::object();
            for (const auto& [k, c] : ct.counts()) cj[std::to_string(k)] = c;
            line["cycle_type"] = cj;
        } else if (cls == "uniform") {
            auto pi = involucomp::sample_uniform_permutation(static_cast<int>(n), stream);
            line["image"] = involucomp::to_image_string(pi);
        } else {
            std::cerr << "unknown --class value: " << cls << "\n";
            return 1;
        }
        std::cout << line.dump() << "\n";
    }
    return 0;
}

int cmd_asympt(const std::string& set_text, long n, bool compare_exact) {
    involucomp::SPermutationFamily fam(parse_set(set_text));
    ordered_json out;
    out["set"] = fam.S;
    out["n"] = n;
    out["saddle_radius"] = involucomp::saddle_radius(fam, static_cast<double>(n));
    double log_est = involucomp::log_hayman_estimate(fam, n);
    out["log_estimate"] = log_est;
    out["estimate"] = std::exp(log_est);
    if (compare_exact) {
        double log_exact = involucomp::log_exact_s_probability(fam, n);
        out["log_exact"] = log_exact;
        out["exact"] = std::exp(log_exact);
        out["rel_error"] = std::exp(log_est - log_exact) - 1.0;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_patterns(const std::string& pat_text, int max_n, const std::string& cls) {
    involucomp::Pattern pat = parse_pattern(pat_text);
    involucomp::AvoiderBounds bounds;
    bounds.all = std::max(bounds.all, max_n);
    bounds.involutions = std::max(bounds.involutions, max_n);
    if (cls == "inv") {
        std::cout << "n,i_count,i_root\n";
        for (int n = 1; n <= max_n; ++n) {
            BigInt c = involucomp::count_avoiders(n, pat, involucomp::AvoiderClass::Involutions, bounds);
            double root = c > 0 ? std::exp(involucomp::log_big(c) / n) : 0.0;
            std::cout << n << ',' << c.get_str() << ',' << root << "\n";
        }
        return 0;
    }
    involucomp::GrowthReport rep = involucomp::growth_report(pat, max_n, bounds);
    std::cout << "n,s_count,i_count,s_root,i_root,ratio\n";
    for (const auto& row : rep.rows)
        std::cout << row.n << ',' << row.s_count.get_str() << ',' << row.i_count.get_str() << ','
                  << row.s_root << ',' << row.i_root << ',' << row.ratio << "\n";
    std::cout << "# trend_toward_one=" << (rep.ratio_trend_toward_one ? "yes" : "no") << "; "
              << rep.note << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"involucomp: exact counts, asymptotics and Monte-Carlo experiments for "
                 "compositions of random involutions"};
    app.require_subcommand(1);

    // count
    std::string gf = "pairs", set_text = "1,2";
    int count_n = 20;
    auto* count = app.add_subcommand("count", "exact generating-function counts");
    count->add_option("--gf", gf, "pairs | spermutations | table")->required();
    count->add_option("--n", count_n, "truncation order / table size")->required();
    count->add_option("--set", set_text, "cycle lengths, e.g. 1,2,3");

    // factorize
    std::string perm_text;
    bool fpf = false;
    auto* fact = app.add_subcommand("factorize", "count factorizations into two involutions");
    fact->add_option("--perm", perm_text, "permutation in cycle notation, e.g. \"(1 2 3 4)\"")
        ->required();
    fact->add_flag("--fpf", fpf, "restrict to fixed-point-free involutions");

    // sample
    std::string cls = "inv", sample_set = "1,2";
    long sample_n = 10, sample_trials = 1;
    uint64_t sample_seed = 0;
    auto* sample = app.add_subcommand("sample", "draw random objects (JSON lines)");
    sample->add_option("--class", cls, "inv | fpf | boltzmann | pstar | uniform")->required();
    sample->add_option("--n", sample_n, "size (target size for boltzmann)")->required();
    sample->add_option("--set", sample_set, "cycle lengths for boltzmann");
    sample->add_option("--seed", sample_seed, "random seed")->required();
    sample->add_option("--trials", sample_trials, "number of draws");

    // asympt
    std::string asy_set = "1,2";
    long asy_n = 100;
    bool compare_exact = false;
    auto* asy = app.add_subcommand("asympt", "saddle-point estimates");
    asy->add_option("--set", asy_set, "cycle lengths")->required();
    asy->add_option("--n", asy_n, "size")->required();
    asy->add_flag("--compare-exact", compare_exact, "also compute the exact probability");

    // patterns
    std::string pat_text;
    int max_n = 10;
    std::string pat_cls;
    auto* pats = app.add_subcommand("patterns", "pattern-avoidance growth report (CSV)");
    pats->add_option("--pat", pat_text, "pattern, e.g. 1234")->required();
    pats->add_option("--max-n", max_n, "largest n")->required();
    pats->add_option("--class", pat_cls, "inv: involution counts only");

    // experiment
    std::string exp_name;
    long exp_n = 100, exp_trials = 1000, exp_k = 1, exp_l = 0, exp_rmax = 10;
    bool exp_l_set = false, exp_k_set = false;
    double exp_gamma = 0.125, exp_delta = 0.375;
    uint64_t exp_seed = 0;
    std::string out_path, csv_path;
    auto* exp = app.add_subcommand("experiment", "Monte-Carlo experiments; exit 0 iff all "
                                                 "declared tolerances pass");
    exp->add_option("name", exp_name,
                    "kcycles | cycles | fpf | lengthlaw | lognormal | components | factorization")
        ->required();
    exp->add_option("--n", exp_n, "size (ground-set size for fpf/lengthlaw)")->required();
    exp->add_option("--trials", exp_trials, "number of trials")->required();
    exp->add_option("--seed", exp_seed, "random seed")->required();
    exp->add_option("--k", exp_k, "cycle length (kcycles) or sigma fixed points (components)")
        ->each([&](const std::string&) { exp_k_set = true; });
    exp->add_option("--l", exp_l, "tau fixed points (components)")
        ->each([&](const std::string&) { exp_l_set = true; });
    exp->add_option("--rmax", exp_rmax, "largest component length tracked (components)");
    exp->add_option("--gamma", exp_gamma, "lower relative length (lengthlaw)");
    exp->add_option("--delta", exp_delta, "upper relative length (lengthlaw)");
    exp->add_option("--out", out_path, "also write the JSON report to this file");
    exp->add_option("--csv", csv_path, "also write the pmf tables as CSV to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return cmd_count(gf, count_n, set_text);
        if (fact->parsed()) return cmd_factorize(perm_text, fpf);
        if (sample->parsed()) return cmd_sample(cls, sample_n, sample_set, sample_seed, sample_trials);
        if (asy->parsed()) return cmd_asympt(asy_set, asy_n, compare_exact);
        if (pats->parsed()) return cmd_patterns(pat_text, max_n, pat_cls);
        if (exp->parsed()) {
            involucomp::ExperimentReport rep;
            if (exp_name == "kcycles") {
                rep = involucomp::run_k_cycle_experiment(exp_n, exp_k, exp_trials, exp_seed);
            } else if (exp_name == "cycles") {
                rep = involucomp::run_total_cycles_experiment(exp_n, exp_trials, exp_seed);
            } else if (exp_name == "fpf") {
                rep = involucomp::run_fpf_experiment(exp_n, exp_trials, exp_seed);
            } else if (exp_name == "lengthlaw") {
                rep = involucomp::run_length_law_experiment(exp_n, exp_gamma, exp_delta, exp_trials,
                                                            exp_seed);
            } else if (exp_name == "lognormal") {
                rep = involucomp::run_lognormal_experiment(exp_n, exp_trials, exp_seed);
            } else if (exp_name == "components") {
                if (!exp_k_set || !exp_l_set) {
                    std::cerr << "components experiment requires --k and --l\n";
                    return 1;
                }
                rep = involucomp::run_fixed_point_component_experiment(exp_n, exp_k, exp_l, exp_rmax,
                                                                       exp_trials, exp_seed);
            } else if (exp_name == "factorization") {
                rep = involucomp::run_uniform_factorization_experiment(exp_n, exp_trials, exp_seed);
            } else {
                std::cerr << "unknown experiment: " << exp_name << "\n";
                return 1;
            }
            std::string text = rep.to_json().dump(2);
            std::cout << text << "\n";
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << text << "\n";
            }
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                f << rep.to_csv();
            }
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
