// Command-line surface for the hyperspec library: hypergraph generation,
// largest H-eigenvalue solves, power-hypergraph scans and the identity
// verification suites. Exit codes: 0 success, 1 check failure, 2
// usage/input error, 3 solver non-convergence.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperspec/hyperspec.hpp"
#include "hyperspec/io.hpp"

namespace {

using namespace hyperspec;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

UniformHypergraph read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_hypergraph(buf.str());
    }
    return read_hypergraph_file(path);
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
}

// Deterministic generator for the components suite; hand-rolled so the
// sampled unions are identical on every platform.
struct XorShift64 {
    std::uint64_t state;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

struct NamedHypergraph {
    std::string name;
    UniformHypergraph h;
};

std::vector<NamedHypergraph> corpus_uniform(std::size_t k) {
    std::vector<NamedHypergraph> out;
    auto add = [&](const std::string& name, const UniformHypergraph& g) {
        out.push_back({name + "^" + std::to_string(k), power(g, k).hypergraph});
    };
    out.push_back({"S_1^" + std::to_string(k), sunflower(1, k)});
    out.push_back({"S_2^" + std::to_string(k), sunflower(2, k)});
    out.push_back({"S_3^" + std::to_string(k), sunflower(3, k)});
    add("P_3", path(3));
    add("P_4", path(4));
    add("C_4", cycle(4));
    add("K_3", complete_graph(3));
    return out;
}

bool odd_bipartite_exhaustive(const UniformHypergraph& h) {
    if (h.n > 20) throw std::invalid_argument("exhaustive search limited to n <= 20");
    if (h.edges.empty()) return h.n >= 2;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << h.n); ++mask) {
        bool ok = true;
        for (const Edge& e : h.edges) {
            int count = 0;
            for (VertexId v : e) count += (mask >> v) & 1;
            if (count % 2 == 0) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

// ---- verify suites ----------------------------------------------------------

std::vector<CheckReport> suite_monotonicity(const SolverConfig& cfg) {
    const std::vector<std::pair<std::string, UniformHypergraph>> graphs = {
        {"P_3", path(3)},         {"P_4", path(4)},  {"K_3", complete_graph(3)},
        {"C_4", cycle(4)},        {"S_2", star(2)},  {"S_3", star(3)},
    };
    std::vector<CheckReport> reports;
    for (const auto& [name, g] : graphs) {
        const ScanTable table = scan_power_q(g, 8, cfg, name);
        CheckReport report;
        report.name = "monotonicity Q(" + name + "^k), k=2..8";
        double min_drop = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
            min_drop = std::min(min_drop,
                                table.rows[i].lambda - table.rows[i + 1].lambda);
        report.add_gt("min per-step decrease", min_drop, 1e-6);
        double min_above = std::numeric_limits<double>::infinity();
        for (const ScanRow& r : table.rows)
            min_above = std::min(min_above, r.lambda - table.limit_target);
        report.add_gt("min lambda - Delta", min_above, 0.0);
        for (const ScanRow& r : table.rows)
            if (!r.converged) report.fail("row k=" + std::to_string(r.k) + " did not converge");
        report.notes.push_back("final gap to Delta: " + std::to_string(table.final_gap));
        reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<CheckReport> suite_power_adjacency(const SolverConfig& cfg) {
    const std::vector<std::pair<std::string, UniformHypergraph>> graphs = {
        {"P_3", path(3)}, {"K_3", complete_graph(3)}, {"S_2", star(2)}, {"C_4", cycle(4)},
    };
    std::vector<CheckReport> reports;
    for (const auto& [name, g] : graphs)
        for (std::size_t k = 3; k <= 6; ++k)
            for (std::size_t s = 1; 2 * s <= k; ++s)
                reports.push_back(check_power_adjacency(g, k, s, cfg, 1e-7, name));
    reports.push_back(check_adjacency_power_decreasing(complete_graph(3), 1, 2, 12, 4,
                                                       cfg, 1e-7, "K_3"));
    return reports;
}

std::vector<CheckReport> suite_components(const SolverConfig& cfg) {
    std::vector<CheckReport> reports;
    XorShift64 rng{0x6b6c736ee1d6f1c5ull};
    for (int pick = 0; pick < 10; ++pick) {
        const std::size_t k = pick % 2 == 0 ? 3 : 4;
        const auto pool = corpus_uniform(k);
        const auto& a = pool[rng.below(pool.size())];
        const auto& b = pool[rng.below(pool.size())];
        const UniformHypergraph u = disjoint_union(a.h, b.h);
        for (TensorKind kind : {TensorKind::Adjacency, TensorKind::SignlessLaplacian}) {
            CheckReport report = check_components(u, kind, cfg, 1e-8);
            report.name = std::string("components ") + tensor_kind_name(kind) + "(" +
                          a.name + " u " + b.name + ")";
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

std::vector<CheckReport> suite_odd_bipartite(const SolverConfig& cfg) {
    std::vector<CheckReport> reports;
    for (std::size_t d = 1; d <= 4; ++d) {
        CheckReport report;
        report.name = "odd-bipartite L=Q on S_" + std::to_string(d) + "^4";
        const UniformHypergraph h = sunflower(d, 4);
        const SpectralResult l = laplacian_largest(h, cfg);
        const SpectralResult q =
            largest_h_eigenvalue(TensorKind::SignlessLaplacian, h, cfg);
        report.add_eq("lambda(L) vs lambda(Q)", l.lambda, q.lambda, 1e-8);
        report.add_eq("parity vs exhaustive partition search",
                      is_odd_bipartite(h).has_value() ? 1.0 : 0.0,
                      odd_bipartite_exhaustive(h) ? 1.0 : 0.0, 0.0);
        reports.push_back(std::move(report));
    }

    CheckReport rejected;
    rejected.name = "odd-bipartite rejection of complete 4-uniform on 5 vertices";
    const UniformHypergraph g1 = complete_kuniform(5, 4);
    rejected.add_eq("parity decision (0 = no partition)",
                    is_odd_bipartite(g1).has_value() ? 1.0 : 0.0, 0.0, 0.0);
    rejected.add_eq("exhaustive search (0 = no partition)",
                    odd_bipartite_exhaustive(g1) ? 1.0 : 0.0, 0.0, 0.0);
    bool threw = false;
    try {
        laplacian_largest(g1, cfg);
    } catch (const std::domain_error&) {
        threw = true;
    }
    rejected.add_eq("laplacian_largest rejects (1 = rejected)", threw ? 1.0 : 0.0, 1.0,
                    0.0);
    reports.push_back(std::move(rejected));
    return reports;
}

std::vector<CheckReport> suite_remark(std::size_t delta, const SolverConfig& cfg) {
    if (delta == 0) {
        const SpectralResult q_g1 = largest_h_eigenvalue(
            TensorKind::SignlessLaplacian, complete_kuniform(5, 4), cfg);
        delta = static_cast<std::size_t>(std::ceil(q_g1.lambda)) + 1;
    }
    return {remark_family(delta, cfg)};
}

int run_verify(const std::string& suite, std::size_t delta, const SolverConfig& cfg,
               const std::string& format, const std::string& out_path) {
    std::vector<CheckReport> reports;
    if (suite == "monotonicity")
        reports = suite_monotonicity(cfg);
    else if (suite == "power-adjacency")
        reports = suite_power_adjacency(cfg);
    else if (suite == "components")
        reports = suite_components(cfg);
    else if (suite == "odd-bipartite")
        reports = suite_odd_bipartite(cfg);
    else if (suite == "remark")
        reports = suite_remark(delta, cfg);
    else
        throw std::invalid_argument(
            "unknown suite '" + suite +
            "' (expected monotonicity | power-adjacency | components | "
            "odd-bipartite | remark)");

    bool all_pass = true;
    for (const CheckReport& r : reports) {
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
        all_pass = all_pass && r.pass;
    }
    emit(format == "csv" ? check_reports_to_csv(reports)
                         : check_reports_to_json(reports).dump(2),
         out_path);
    return all_pass ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"largest H-eigenvalues of uniform hypergraph tensors"};
    app.require_subcommand(1);

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "construct a hypergraph, write JSON");
    gen->require_subcommand(1);
    gen->fallthrough();  // --output may follow the generator subcommand
    std::string gen_output;
    gen->add_option("--output", gen_output, "output file (default stdout)");

    long long opt_d = 0, opt_k = 0, opt_n = 0, opt_s = 1;
    std::string gen_input;
    auto* gen_sunflower = gen->add_subcommand("sunflower", "sunflower S_d^k");
    gen_sunflower->add_option("--d", opt_d, "size (heart degree)")->required();
    gen_sunflower->add_option("--k", opt_k, "uniformity")->required();
    auto* gen_path = gen->add_subcommand("path", "path graph P_n");
    gen_path->add_option("--n", opt_n, "vertex count")->required();
    auto* gen_cycle = gen->add_subcommand("cycle", "cycle graph C_n");
    gen_cycle->add_option("--n", opt_n, "vertex count")->required();
    auto* gen_star = gen->add_subcommand("star", "star graph S_d");
    gen_star->add_option("--d", opt_d, "edge count")->required();
    auto* gen_power = gen->add_subcommand(
        "power", "(generalized) power of an ordinary input graph");
    gen_power->add_option("--k", opt_k, "target uniformity")->required();
    gen_power->add_option("--s", opt_s, "blow-up size (default 1)");
    gen_power->add_option("--input", gen_input, "base graph (JSON or text, - for stdin)")
        ->required();

    // eig ------------------------------------------------------------------
    auto* eig = app.add_subcommand("eig", "largest H-eigenvalue of one hypergraph");
    std::string eig_input, eig_tensor = "Q", eig_format = "json", eig_output;
    SolverConfig eig_cfg;
    eig->add_option("--input", eig_input, "hypergraph (JSON or text, - for stdin)")
        ->required();
    eig->add_option("--tensor", eig_tensor, "tensor kind: A, Q or L (default Q)");
    eig->add_option("--tol", eig_cfg.tol, "bound-gap tolerance (default 1e-10)");
    eig->add_option("--max-iter", eig_cfg.max_iter, "iteration cap (default 1e6)");
    eig->add_option("--shift", eig_cfg.shift, "adjacency diagonal shift (default 1)");
    eig->add_option("--format", eig_format, "output format: json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    eig->add_option("--output", eig_output, "output file (default stdout)");

    // scan -----------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "eigenvalues of G^k for k = 2..k-to");
    std::string scan_input, scan_tensor = "Q", scan_format = "json", scan_output;
    long long scan_k_to = 0;
    SolverConfig scan_cfg;
    scan->add_option("--input", scan_input, "ordinary graph (JSON or text, - for stdin)")
        ->required();
    scan->add_option("--k-to", scan_k_to, "largest uniformity to scan")->required();
    scan->add_option("--tensor", scan_tensor, "tensor kind: Q or A (default Q)");
    scan->add_option("--tol", scan_cfg.tol, "bound-gap tolerance (default 1e-10)");
    scan->add_option("--max-iter", scan_cfg.max_iter, "iteration cap (default 1e6)");
    scan->add_option("--format", scan_format, "output format: json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    scan->add_option("--output", scan_output, "output file (default stdout)");

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string verify_suite, verify_format = "json", verify_output;
    long long verify_delta = 0;
    SolverConfig verify_cfg;
    verify
        ->add_option("suite", verify_suite,
                     "monotonicity | power-adjacency | components | odd-bipartite | remark")
        ->required();
    verify->add_option("--delta", verify_delta,
                       "sunflower size for the remark suite (default: auto)");
    verify->add_option("--tol", verify_cfg.tol, "bound-gap tolerance (default 1e-10)");
    verify->add_option("--max-iter", verify_cfg.max_iter, "iteration cap (default 1e6)");
    verify
        ->add_option("--format", verify_format, "output format: json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--output", verify_output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            UniformHypergraph h;
            if (gen_sunflower->parsed()) {
                if (opt_d < 1 || opt_k < 2)
                    throw std::invalid_argument("sunflower requires d >= 1 and k >= 2");
                h = sunflower(static_cast<std::size_t>(opt_d),
                              static_cast<std::size_t>(opt_k));
            } else if (gen_path->parsed()) {
                if (opt_n < 1) throw std::invalid_argument("path requires n >= 1");
                h = path(static_cast<std::size_t>(opt_n));
            } else if (gen_cycle->parsed()) {
                if (opt_n < 3) throw std::invalid_argument("cycle requires n >= 3");
                h = cycle(static_cast<std::size_t>(opt_n));
            } else if (gen_star->parsed()) {
                if (opt_d < 1) throw std::invalid_argument("star requires d >= 1");
                h = star(static_cast<std::size_t>(opt_d));
            } else if (gen_power->parsed()) {
                if (opt_k < 2 || opt_s < 1)
                    throw std::invalid_argument("power requires k >= 2 and s >= 1");
                const UniformHypergraph base = read_input(gen_input);
                h = opt_s == 1 ? power(base, static_cast<std::size_t>(opt_k)).hypergraph
                               : generalized_power(base, static_cast<std::size_t>(opt_k),
                                                   static_cast<std::size_t>(opt_s))
                                     .hypergraph;
            }
            emit(hypergraph_to_json(h).dump(2), gen_output);
            return kExitOk;
        }

        if (eig->parsed()) {
            const UniformHypergraph h = read_input(eig_input);
            const TensorKind kind = parse_tensor_kind(eig_tensor);
            const SpectralResult res = kind == TensorKind::Laplacian
                                           ? laplacian_largest(h, eig_cfg)
                                           : largest_h_eigenvalue(kind, h, eig_cfg);
            emit(eig_format == "csv" ? spectral_result_to_csv(res)
                                     : spectral_result_to_json(res).dump(2),
                 eig_output);
            return res.converged() ? kExitOk : kExitNoConvergence;
        }

        if (scan->parsed()) {
            if (scan_k_to < 3) throw std::invalid_argument("scan requires --k-to >= 3");
            const UniformHypergraph g = read_input(scan_input);
            const TensorKind kind = parse_tensor_kind(scan_tensor);
            ScanTable table;
            if (kind == TensorKind::SignlessLaplacian)
                table = scan_power_q(g, static_cast<std::size_t>(scan_k_to), scan_cfg);
            else if (kind == TensorKind::Adjacency)
                table = scan_power_adjacency(g, static_cast<std::size_t>(scan_k_to),
                                             scan_cfg);
            else
                throw std::invalid_argument("scan supports tensor kinds Q and A only");
            emit(scan_format == "csv" ? scan_table_to_csv(table)
                                      : scan_table_to_json(table).dump(2),
                 scan_output);
            for (const ScanRow& r : table.rows)
                if (!r.converged) return kExitNoConvergence;
            return kExitOk;
        }

        if (verify->parsed()) {
            if (verify_delta < 0)
                throw std::invalid_argument("--delta must be nonnegative");
            return run_verify(verify_suite, static_cast<std::size_t>(verify_delta),
                              verify_cfg, verify_format, verify_output);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
