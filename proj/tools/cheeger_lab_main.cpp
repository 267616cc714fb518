// cheeger-lab: exact multiway Cheeger constants, Laplacian spectra and
// property-suite verification for small weighted graphs.

#include "cheeger_lab/cheeger.hpp"
#include "cheeger_lab/errors.hpp"
#include "cheeger_lab/generators.hpp"
#include "cheeger_lab/io.hpp"
#include "cheeger_lab/spectra.hpp"
#include "cheeger_lab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace cheeger_lab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

json rat_json(const Rat& r) {
    return json{{"fraction", to_fraction_string(r)}, {"decimal_approx", to_decimal_string(r)}};
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

json fingerprint_json(const WeightedGraph& g) {
    Fingerprint fp = fingerprint(g);
    return json{{"n", fp.n},
                {"edges", fp.edge_count},
                {"beta", fp.beta},
                {"weight_hash", hex64(fp.weight_hash)}};
}

json vertex_list(Mask m, const std::vector<std::int64_t>& ids) {
    json out = json::array();
    for (int v = 0; v < static_cast<int>(ids.size()); ++v)
        if (m >> v & 1) out.push_back(ids[static_cast<std::size_t>(v)]);
    return out;
}

json subpartition_json(const Subpartition& sp, const std::vector<std::int64_t>& ids) {
    json out = json::array();
    for (Mask part : sp) out.push_back(vertex_list(part, ids));
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot open output file: " + out_path);
        f << text;
    }
}

double lambda_at(const SpectrumReport& spec, int k) {
    return spec.eigenvalues[static_cast<std::size_t>(k - 1)];
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

struct KRange {
    int lo;
    int hi;
};

KRange resolve_k_range(int n, std::optional<int> k, std::optional<int> k_max) {
    if (k && k_max) throw ParseError("--k and --k-max are mutually exclusive");
    int lo = 1, hi = n;
    if (k) lo = hi = *k;
    if (k_max) hi = *k_max;
    if (lo < 1 || hi > n || lo > hi)
        throw ParseError("k range out of bounds for n = " + std::to_string(n));
    return {lo, hi};
}

int cmd_compute(const std::string& file, std::optional<int> k_opt, std::optional<int> k_max,
                std::uint64_t budget, bool oracle, const std::string& format,
                const std::string& out_path) {
    GraphDoc doc = parse_graph_file(file);
    const WeightedGraph& g = doc.graph;
    KRange kr = resolve_k_range(g.n(), k_opt, k_max);

    CheegerSolver solver(g);
    SpectrumReport spec = laplacian_spectrum(g);
    bool required_over_budget = false;

    json results = json::array();
    std::ostringstream csv;
    csv << "k,h_k,h_k_decimal,h_k_status,l_k,l_k_decimal,l_k_status,ll_k,ll_k_decimal,"
           "lambda_k,bracket_lower,bracket_upper,bracket_exact,union_consistent\n";

    for (int k = kr.lo; k <= kr.hi; ++k) {
        json row;
        row["k"] = k;
        std::string hk_status = "exact", lk_status = "exact";
        std::optional<CheegerValue> hk, lk;
        try {
            hk = solver.cheeger_k(k, {budget, oracle});
        } catch (const BudgetExceededError&) {
            hk_status = "budget-exceeded";
            required_over_budget = true;
        }
        try {
            lk = solver.maxmin_cheeger(k, {budget, false});
        } catch (const BudgetExceededError&) {
            lk_status = "bracketed";
        }
        CheegerValue llk = solver.dirichlet_k(k);
        double lambda = lambda_at(spec, k);

        if (hk) {
            row["h_k"] = rat_json(hk->value);
            row["h_k_witness"] = subpartition_json(hk->witness, doc.external_ids);
            row["union_consistent"] = hk->union_consistent;
        }
        row["h_k_status"] = hk_status;
        if (lk) {
            row["l_k"] = rat_json(lk->value);
            row["l_k_witness"] = subpartition_json(lk->witness, doc.external_ids);
        }
        row["l_k_status"] = lk_status;
        row["ll_k"] = rat_json(llk.value);
        row["ll_k_witness_set"] = vertex_list(llk.witness_set, doc.external_ids);
        row["ll_k_witness_subset"] = vertex_list(llk.witness_subset, doc.external_ids);
        row["lambda_k_delta2"] = lambda;
        if (hk) {
            Rat lower = lk ? lk->value : llk.value;
            row["one_lap_bracket"] = json{{"lower", rat_json(lower)},
                                          {"upper", rat_json(hk->value)},
                                          {"lower_is_llk", !lk.has_value()},
                                          {"exact", lower == hk->value}};
        }
        results.push_back(row);

        csv << k << ",";
        csv << (hk ? to_fraction_string(hk->value) : "") << ","
            << (hk ? to_decimal_string(hk->value) : "") << "," << hk_status << ",";
        csv << (lk ? to_fraction_string(lk->value) : "") << ","
            << (lk ? to_decimal_string(lk->value) : "") << "," << lk_status << ",";
        csv << to_fraction_string(llk.value) << "," << to_decimal_string(llk.value) << ",";
        csv << fmt_double(lambda) << ",";
        if (hk) {
            Rat lower = lk ? lk->value : llk.value;
            csv << to_fraction_string(lower) << "," << to_fraction_string(hk->value) << ","
                << (lower == hk->value ? "true" : "false") << ",";
            csv << (hk->union_consistent ? "true" : "false");
        } else {
            csv << ",,,";
        }
        csv << "\n";
    }

    if (format == "csv") {
        write_output(csv.str(), out_path);
    } else {
        json report;
        report["command"] = "compute";
        report["graph"] = fingerprint_json(g);
        report["k_range"] = json::array({kr.lo, kr.hi});
        report["oracle"] = oracle;
        report["budget"] = budget;
        report["spectrum"] = spec.eigenvalues;
        report["results"] = results;
        write_output(report.dump(2), out_path);
    }
    return required_over_budget ? kExitBudget : kExitPass;
}

int cmd_verify(const std::string& suite, const SuiteParams& params, const std::string& format,
               const std::string& out_path, const std::string& repro_path) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw ParseError("unknown suite: " + suite);
    SuiteResult res = run_suite(suite, params, &std::cerr);

    json report;
    report["command"] = "verify";
    report["suite"] = suite;
    report["seed"] = params.seed;
    report["params"] = json{{"n_max", params.n_max},
                            {"n_max_random", params.n_max_random},
                            {"graphs", params.graphs},
                            {"vectors", params.vectors},
                            {"pairs", params.pairs},
                            {"trials", params.trials},
                            {"budget", params.budget}};
    report["instances"] = res.instances;
    report["checks"] = res.checks;
    report["failures"] = json{{"property", res.failures},
                              {"union_invariance", res.union_failures},
                              {"cheeger_p2", res.p2_failures},
                              {"monotonicity", res.mono_failures},
                              {"one_lap_bracket", res.bracket_failures},
                              {"eigensolver", res.eigen_failures}};
    report["l_k_exact_checks"] = res.lk_checked;
    report["strict_gap_instances"] = res.strict_gap_instances;
    report["pass"] = res.passed();

    if (format == "csv") {
        std::ostringstream csv;
        csv << "suite,instances,checks,property_failures,union_failures,p2_failures,"
               "mono_failures,bracket_failures,eigen_failures,pass\n";
        csv << suite << "," << res.instances << "," << res.checks << "," << res.failures << ","
            << res.union_failures << "," << res.p2_failures << "," << res.mono_failures << ","
            << res.bracket_failures << "," << res.eigen_failures << ","
            << (res.passed() ? "true" : "false") << "\n";
        write_output(csv.str(), out_path);
    } else {
        write_output(report.dump(2), out_path);
    }

    if (!res.passed()) {
        std::string path = repro_path.empty() ? "cheeger-lab-repro-" + suite + ".txt" : repro_path;
        std::ofstream f(path);
        f << res.first_failure;
        std::cerr << "first failing instance written to " << path << "\n";
        return kExitPropertyFailure;
    }
    return kExitPass;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, bool random_weights,
            bool explicit_mu, int beta, const std::string& format, const std::string& out_path) {
    GenOptions opts;
    opts.random_weights = random_weights;
    opts.explicit_mu = explicit_mu;
    WeightedGraph g = generate(kind, n, seed, opts, beta);
    std::vector<std::int64_t> ids(g.n());
    std::iota(ids.begin(), ids.end(), 0);
    GraphDoc doc{g, ids, explicit_mu};
    if (format == "tsv") {
        if (explicit_mu) throw ParseError("TSV cannot carry explicit mu; use --format json");
        write_output(emit_graph_tsv(doc), out_path);
    } else {
        write_output(emit_graph_json(doc), out_path);
    }
    return kExitPass;
}

int cmd_certificate(const std::string& file, int k, std::uint64_t budget,
                    const std::string& format, const std::string& out_path) {
    GraphDoc doc = parse_graph_file(file);
    const WeightedGraph& g = doc.graph;
    if (k < 1 || k > g.n()) throw ParseError("k out of bounds for n = " + std::to_string(g.n()));
    CheegerSolver solver(g);
    ForestCertificate cert = solver.forest_certificate(k, {budget, false});

    if (format == "csv") {
        std::ostringstream csv;
        csv << "k,value,value_decimal,removed,dirichlet_set,via_dirichlet\n";
        csv << k << "," << to_fraction_string(cert.value) << ","
            << to_decimal_string(cert.value) << ",";
        for (std::size_t i = 0; i < cert.removed.size(); ++i)
            csv << (i ? ";" : "")
                << doc.external_ids[static_cast<std::size_t>(cert.removed[i])];
        csv << ",";
        bool first = true;
        for (int v = 0; v < g.n(); ++v)
            if (cert.dirichlet_set >> v & 1) {
                csv << (first ? "" : ";") << doc.external_ids[static_cast<std::size_t>(v)];
                first = false;
            }
        csv << "," << (cert.via_dirichlet ? "true" : "false") << "\n";
        write_output(csv.str(), out_path);
    } else {
        json report;
        report["command"] = "certificate";
        report["graph"] = fingerprint_json(g);
        report["k"] = k;
        report["subpartition"] = subpartition_json(cert.subpartition, doc.external_ids);
        json removed = json::array();
        for (int v : cert.removed) removed.push_back(doc.external_ids[static_cast<std::size_t>(v)]);
        report["removed"] = removed;
        report["dirichlet_set"] = vertex_list(cert.dirichlet_set, doc.external_ids);
        report["h_k"] = rat_json(cert.value);
        report["via_dirichlet"] = cert.via_dirichlet;
        write_output(report.dump(2), out_path);
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiway Cheeger constants and property verification"};
    app.require_subcommand(1);

    std::string file, suite, kind, format = "json", out_path, repro_path;
    std::optional<int> k_opt, k_max;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 1;
    bool oracle = false, random_weights = false, explicit_mu = false;
    int gen_n = 0, gen_beta = 1, cert_k = 1;
    SuiteParams params;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    CLI::App* compute = app.add_subcommand("compute", "constants and spectra for one graph");
    compute->add_option("file", file, "graph file (JSON or TSV)")->required();
    compute->add_option("--k", k_opt, "single k");
    compute->add_option("--k-max", k_max, "k range 1..k-max");
    compute->add_option("--budget", budget, "labeling budget for enumerations");
    compute->add_flag("--oracle", oracle, "unpruned subpartition enumeration for h_k");
    add_format(compute);

    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--n-max", params.n_max, "exhaustive size cap");
    verify->add_option("--n-max-random", params.n_max_random, "random-instance size cap");
    verify->add_option("--graphs", params.graphs, "random instance count");
    verify->add_option("--vectors", params.vectors, "rounding vector count");
    verify->add_option("--pairs", params.pairs, "pigeonhole pair count");
    verify->add_option("--trials", params.trials, "intersection trial count");
    verify->add_option("--seed", params.seed, "instance stream seed");
    verify->add_option("--budget", params.budget, "l_k exactness budget");
    verify->add_option("--repro", repro_path, "path for the failing-instance repro file");
    add_format(verify);

    CLI::App* gen = app.add_subcommand("gen", "deterministic instance generator");
    gen->add_option("kind", kind, "path|star|cycle|random-tree|random-forest|unicyclic|random-connected")
        ->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--beta", gen_beta, "extra edges (random-connected)");
    gen->add_flag("--random-weights", random_weights, "random rational weights");
    gen->add_flag("--explicit-mu", explicit_mu, "random explicit mu instead of weighted degree");
    gen->add_option("--format", format, "graph file format")
        ->check(CLI::IsMember({"json", "tsv"}));
    gen->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* cert = app.add_subcommand("certificate", "forest separator certificate");
    cert->add_option("file", file, "graph file (must be a forest)")->required();
    cert->add_option("--k", cert_k, "target k")->required();
    cert->add_option("--budget", budget, "labeling budget");
    add_format(cert);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    auto start = std::chrono::steady_clock::now();
    int rc = kExitPass;
    try {
        if (compute->parsed()) {
            rc = cmd_compute(file, k_opt, k_max, budget, oracle, format, out_path);
        } else if (verify->parsed()) {
            rc = cmd_verify(suite, params, format, out_path, repro_path);
        } else if (gen->parsed()) {
            rc = cmd_gen(kind, gen_n, seed, random_weights, explicit_mu, gen_beta, format,
                         out_path);
        } else if (cert->parsed()) {
            rc = cmd_certificate(file, cert_k, budget, format, out_path);
        }
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotSupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);
    // stderr only, so reports stay byte-stable
    std::cerr << "wall time: " << elapsed.count() << " ms\n";
    return rc;
}
