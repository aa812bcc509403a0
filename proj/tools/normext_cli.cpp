#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normext/corpus.hpp"
#include "normext/error.hpp"
#include "normext/extend.hpp"
#include "normext/group.hpp"
#include "normext/io.hpp"
#include "normext/lattice.hpp"
#include "normext/pseudonorm.hpp"
#include "normext/transversal.hpp"
#include "normext/verify.hpp"
#include "normext/winding.hpp"

namespace {

using namespace normext;

/// Sibling CSV path: "out.json" -> "out.csv".
std::string csv_sibling(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + ".csv";
    return path.substr(0, dot) + ".csv";
}

int cmd_validate(const std::string& norm_path) {
    const io::NormFile nf = io::load_norm_file(norm_path);
    const ValidationReport report = validate(nf.norm);
    if (report.ok) {
        std::cout << "valid pseudonorm on " << nf.domain.size() << " element(s)\n";
        return 0;
    }
    const std::size_t shown = std::min<std::size_t>(report.violations.size(), 20);
    for (std::size_t i = 0; i < shown; ++i)
        std::cout << "violation: " << report.violations[i].describe() << "\n";
    if (report.violations.size() > shown)
        std::cout << "... and " << report.violations.size() - shown << " more\n";
    return 1;
}

int cmd_extend(const std::string& group_path, std::int64_t subgroup_index,
               const std::string& norm_path, std::int64_t prime, std::int64_t cap,
               const std::string& out_path) {
    const io::GroupFile gf = io::load_group_file(group_path);
    const Subgroup H = io::select_subgroup(gf, subgroup_index);
    const io::NormFile nf = io::load_norm_file(norm_path);
    if (!(nf.group == gf.group))
        throw std::invalid_argument("the norm file and the group file describe different groups");
    if (!(nf.domain == H))
        throw std::invalid_argument("the norm's domain is not the selected subgroup");

    const ExtensionProblem P(Subgroup::whole(gf.group), H, prime, nf.norm, cap);
    const ExtendedNorm ext = prime_step_extend(P);
    io::save_norm_file(out_path, ext.norm);
    const std::string csv = csv_sibling(out_path);
    io::write_extension_csv(csv, ext, P.mu_index());
    std::cout << "extended norm on " << ext.norm.carrier().size() << " elements -> " << out_path
              << " and " << csv << "\n";
    return 0;
}

int cmd_chain_extend(const std::string& group_path, std::int64_t subgroup_index,
                     const std::string& norm_path, std::int64_t cap,
                     const std::string& out_path) {
    const io::GroupFile gf = io::load_group_file(group_path);
    const Subgroup H = io::select_subgroup(gf, subgroup_index);
    const io::NormFile nf = io::load_norm_file(norm_path);
    if (!(nf.group == gf.group))
        throw std::invalid_argument("the norm file and the group file describe different groups");
    if (!(nf.domain == H))
        throw std::invalid_argument("the norm's domain is not the selected subgroup");

    const ChainPlan plan = build_chain(gf.group, H);
    Pseudonorm current = nf.norm;
    Subgroup current_sub = H;
    std::optional<ExtendedNorm> last;
    std::size_t mu = 0;
    for (const ChainStep& step : plan.steps) {
        const ExtensionProblem P(step.subgroup, current_sub, step.prime, current, cap);
        ExtendedNorm ext = prime_step_extend(P);
        mu = P.mu_index();
        current = ext.norm;
        current_sub = step.subgroup;
        last = std::move(ext);
    }

    io::save_norm_file(out_path, current);
    const std::string csv = csv_sibling(out_path);
    if (last) io::write_extension_csv(csv, *last, mu);
    else io::write_norm_csv(csv, current);
    std::cout << "chain of " << plan.steps.size() << " step(s) to a norm on "
              << current.carrier().size() << " elements -> " << out_path << " and " << csv
              << "\n";
    return 0;
}

int cmd_lattice_extend(std::int64_t dim, std::int64_t denominator, const std::string& base_name,
                       const std::string& table_path, std::int64_t window,
                       const std::string& out_path) {
    LatticeBaseNorm base;
    if (base_name == "abs-sum") {
        base.form = LatticeBaseForm::abs_sum;
    } else if (base_name == "abs-max") {
        base.form = LatticeBaseForm::abs_max;
    } else if (base_name == "table") {
        if (table_path.empty())
            throw std::invalid_argument("--base table needs --table with a value file");
        base.form = LatticeBaseForm::table;
        base.table = io::lattice_table_from_json(io::load_json(table_path), dim);
        // The integer window must be fully covered before the heavy work.
        if (dim >= 1 && window >= 1) {
            double count = 1.0;
            for (std::int64_t i = 0; i < dim; ++i) count *= static_cast<double>(2 * window + 1);
            if (count <= 200000.0) {
                std::vector<std::int64_t> point(static_cast<std::size_t>(dim), -window);
                while (true) {
                    if (!base.table.contains(point))
                        throw std::invalid_argument(
                            "lattice table is missing a value for integer point " +
                            io::lattice_point_str(point, 1));
                    std::size_t i = 0;
                    for (; i < point.size(); ++i) {
                        if (point[i] < window) {
                            ++point[i];
                            break;
                        }
                        point[i] = -window;
                    }
                    if (i == point.size()) break;
                }
            }
        }
    } else {
        throw std::invalid_argument("--base must be abs-sum, abs-max or table");
    }

    const LatticeExtension ext = lattice_extend(dim, denominator, base, window);
    io::save_text(out_path, io::lattice_to_json(ext).dump(2) + "\n");
    const std::string csv = csv_sibling(out_path);
    io::write_lattice_csv(csv, ext);
    std::cout << "lattice norm on " << ext.points.size() << " points -> " << out_path << " and "
              << csv << "\n";
    return 0;
}

int cmd_transversal(const std::string& collections_path, std::int64_t p,
                    const std::string& out_path) {
    const io::CollectionsFile cf = io::load_collections_file(collections_path);
    std::vector<std::int64_t> picks;
    nlohmann::ordered_json result;
    if (p > 0) {
        const Collection A(cf.A);
        const Collection B(cf.B);
        picks = p_fractional_transversal(A, B, p);
        result["mode"] = "p-fractional";
        result["p"] = p;
    } else {
        const UniformCollection A(cf.k, cf.A);
        const UniformCollection B(cf.k, cf.B);
        picks = transversal(A, B);
        result["mode"] = "uniform";
        result["k"] = cf.k;
    }
    result["transversal"] = io::labels_to_json(cf, picks);
    io::save_text(out_path, result.dump(2) + "\n");
    std::cout << "transversal of " << picks.size() << " label(s) -> " << out_path << "\n";
    return 0;
}

int cmd_birkhoff(const std::string& matrix_path, const std::string& out_path) {
    const DoublyStochasticMatrix M = io::load_matrix_file(matrix_path);
    const BirkhoffDecomposition D = birkhoff_decompose(M);
    io::save_text(out_path, io::birkhoff_to_json(D).dump(2) + "\n");
    std::cout << D.terms.size() << " permutation term(s) -> " << out_path << "\n";
    return 0;
}

int cmd_winding_demo(int kmax, const std::string& out_path) {
    const auto rows = discontinuity_report(kmax);
    std::vector<WindingSampleSummary> samples;
    for (int k = 1; k <= std::min(kmax, 5); ++k)
        samples.push_back(
            sample_winding_checks(k, 100'000, 100'000, 20260814ULL + static_cast<unsigned>(k)));
    io::write_winding_csv(out_path, rows, samples);
    std::cout << "k=1: |e_1| = " << io::double_str(rows.front().e_norm) << ", |2 e_1| = "
              << io::double_str(rows.front().two_e_norm) << "; " << rows.size() << " row(s) -> "
              << out_path << "\n";
    return 0;
}

int cmd_check(const verify::VerifyOptions& opts) {
    const auto results = verify::run_all_checks(opts, &std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pseudonorm extension toolkit for finite abelian groups"};
    app.require_subcommand(1);

    auto* validate_cmd = app.add_subcommand("validate", "Check the pseudonorm axioms of a norm file");
    std::string validate_norm;
    validate_cmd->add_option("--norm", validate_norm, "norm JSON file")->required();

    auto* extend_cmd =
        app.add_subcommand("extend", "Extend a subgroup norm one prime step to the whole group");
    std::string extend_group, extend_norm, extend_out = "ext.json";
    std::int64_t extend_index = 0, extend_prime = 0, extend_cap = 1;
    extend_cmd->add_option("--group", extend_group, "group JSON file")->required();
    extend_cmd->add_option("--subgroup-index", extend_index, "which subgroup of the file (default 0)");
    extend_cmd->add_option("--norm", extend_norm, "norm JSON file on the subgroup")->required();
    extend_cmd->add_option("--prime", extend_prime, "prime p with p*G inside the subgroup")->required();
    extend_cmd->add_option("--cap", extend_cap, "representation cap for capped evaluators");
    extend_cmd->add_option("--out", extend_out, "output norm JSON (CSV written alongside)");

    auto* chain_cmd =
        app.add_subcommand("chain-extend", "Extend a subgroup norm to the whole group prime by prime");
    std::string chain_group, chain_norm, chain_out = "chain.json";
    std::int64_t chain_index = 0, chain_cap = 1;
    chain_cmd->add_option("--group", chain_group, "group JSON file")->required();
    chain_cmd->add_option("--subgroup-index", chain_index, "which subgroup of the file (default 0)");
    chain_cmd->add_option("--norm", chain_norm, "norm JSON file on the subgroup")->required();
    chain_cmd->add_option("--cap", chain_cap, "representation cap for capped evaluators");
    chain_cmd->add_option("--out", chain_out, "output norm JSON (CSV written alongside)");

    auto* lattice_cmd =
        app.add_subcommand("lattice-extend", "Extend a norm from Z^n to (1/m) Z^n on a window");
    std::int64_t lat_dim = 1, lat_denom = 2, lat_window = 8;
    std::string lat_base = "abs-sum", lat_table, lat_out = "lattice.json";
    lattice_cmd->add_option("--dim", lat_dim, "lattice dimension n");
    lattice_cmd->add_option("--denominator", lat_denom, "denominator m of the target lattice")
        ->required();
    lattice_cmd->add_option("--base", lat_base, "base norm: abs-sum, abs-max or table");
    lattice_cmd->add_option("--table", lat_table, "value table JSON for --base table");
    lattice_cmd->add_option("--window", lat_window, "certified window |x_i| <= window");
    lattice_cmd->add_option("--out", lat_out, "output JSON (CSV written alongside)");

    auto* transversal_cmd =
        app.add_subcommand("transversal", "Common transversal of two disjoint collections");
    std::string trans_path, trans_out = "transversal.json";
    std::int64_t trans_p = 0;
    transversal_cmd->add_option("--collections", trans_path, "collections JSON file")->required();
    transversal_cmd->add_option("--p", trans_p, "build the 1/p-fraction selection instead");
    transversal_cmd->add_option("--out", trans_out, "output JSON file");

    auto* birkhoff_cmd =
        app.add_subcommand("birkhoff", "Decompose a doubly stochastic matrix exactly");
    std::string birk_path, birk_out = "birkhoff.json";
    birkhoff_cmd->add_option("--matrix", birk_path, "matrix JSON file")->required();
    birkhoff_cmd->add_option("--out", birk_out, "output JSON file");

    auto* winding_cmd =
        app.add_subcommand("winding-demo", "Tabulate the winding-norm discontinuity example");
    int wind_kmax = 20;
    std::string wind_out = "winding.csv";
    winding_cmd->add_option("--kmax", wind_kmax, "largest summand index k");
    winding_cmd->add_option("--out", wind_out, "output CSV file");

    auto* check_cmd = app.add_subcommand("check", "Run the full property suite over generated corpora");
    verify::VerifyOptions vopts;
    bool quick = false;
    check_cmd->add_option("--seed", vopts.seed, "RNG seed for the corpora");
    check_cmd->add_option("--max-order", vopts.sweep_max_order,
                          "largest group order for the extension and chain sweeps");
    check_cmd->add_flag("--quick", quick, "shrink every corpus for a fast smoke run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(validate_norm);
        if (extend_cmd->parsed())
            return cmd_extend(extend_group, extend_index, extend_norm, extend_prime, extend_cap,
                              extend_out);
        if (chain_cmd->parsed())
            return cmd_chain_extend(chain_group, chain_index, chain_norm, chain_cap, chain_out);
        if (lattice_cmd->parsed())
            return cmd_lattice_extend(lat_dim, lat_denom, lat_base, lat_table, lat_window,
                                      lat_out);
        if (transversal_cmd->parsed()) return cmd_transversal(trans_path, trans_p, trans_out);
        if (birkhoff_cmd->parsed()) return cmd_birkhoff(birk_path, birk_out);
        if (winding_cmd->parsed()) return cmd_winding_demo(wind_kmax, wind_out);
        if (check_cmd->parsed()) {
            vopts.chain_max_order = std::min(vopts.chain_max_order, vopts.sweep_max_order);
            if (quick) {
                vopts.sweep_max_order = std::min<std::int64_t>(vopts.sweep_max_order, 16);
                vopts.chain_max_order = std::min<std::int64_t>(vopts.chain_max_order, 16);
                vopts.norms_per_pair = 3;
                vopts.capped_samples = 10;
                vopts.oracle_queries = 60;
                vopts.transversal_instances = 100;
                vopts.pfractional_instances = 50;
                vopts.birkhoff_instances = 50;
                vopts.winding_triangle_samples = 10'000;
                vopts.winding_identity_samples = 10'000;
                vopts.lattice_window = 6;
            }
            return cmd_check(vopts);
        }
        return 2;
    } catch (const normext::ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "arithmetic overflow: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
