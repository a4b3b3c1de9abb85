#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "comax/apps/spca.hpp"
#include "comax/comonotone/checker.hpp"
#include "comax/errors.hpp"
#include "comax/framework/solve.hpp"
#include "comax/numerics/sym_eig.hpp"
#include "comax/oracle/brute_force.hpp"
#include "comax/oracle/instance_io.hpp"
#include "comax/oracle/instances.hpp"

using json = nlohmann::json;
using namespace comax;

namespace {

struct RunConfig {
    std::string problem = "single-spca";
    std::string mode = "framework";
    std::string input;
    std::string output;
    std::string format = "json";
    int threads = 1;
    bool stable_report = false;
    std::optional<int> s_override;
    std::optional<int> d_override;
    double tol_scale = 1.0;
};

const char* complexity_label(const std::string& problem) {
    if (problem == "single-spca") return "n^r * s^2";
    if (problem == "nn-spca") return "n^r * T1";
    if (problem == "2st") return "n^(r+1) * s^3";
    if (problem == "spca") return "n^((r^2+r)/2) * d s^2";
    if (problem == "disjoint-spca") return "(n (d+1)^2)^(d (r^2+r+2)/2 - 1)";
    if (problem == "matroid-convex") return "n^(2r) * T1";
    return "n^(r+1) * T1";
}

ProblemSpec oracle_spec_for(const std::string& problem, const SpcaInstance& inst) {
    ProblemSpec spec;
    spec.a = inst.a;
    spec.sparsity_cap = inst.s;
    if (problem == "single-spca") {
        spec.regime = SignInvRegime{};
        spec.fixed_support_oracle = [inst](const SupportCandidate& c)
            -> std::optional<Solution> {
            if (c.indices.empty()) return std::nullopt;
            return spca_single_oracle(inst, c.indices);
        };
    } else if (problem == "nn-spca") {
        spec.regime = NonnegRegime{};
        spec.fixed_support_oracle = [inst](const SupportCandidate& c)
            -> std::optional<Solution> {
            if (c.indices.empty()) return std::nullopt;
            auto res = nn_spca_oracle(inst, c.indices);
            return res.attained ? *res.attained : res.fallback;
        };
    } else if (problem == "2st") {
        spec.regime = StandardRegime{};
        spec.fixed_support_oracle = [inst](const SupportCandidate& c)
            -> std::optional<Solution> {
            if (c.indices.empty()) return std::nullopt;
            return tst_oracle(inst, c.indices);
        };
    } else if (problem == "spca") {
        spec.regime = NonnegRegime{};
        spec.fixed_support_oracle = [inst](const SupportCandidate& c)
            -> std::optional<Solution> {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(inst.a.rows(), inst.a.rows());
            Eigen::VectorXd x = Eigen::VectorXd::Zero(inst.a.cols());
            for (int i : c.indices) {
                m += inst.a.col(i) * inst.a.col(i).transpose();
                x[i] = 1.0;
            }
            return Solution{x, c.indices.empty() ? 0.0 : ky_fan(m, inst.d)};
        };
    } else if (problem == "matroid-convex") {
        // Uniform-matroid bases with a quadratic objective.
        const int n = static_cast<int>(inst.a.cols());
        auto m = MatroidOracle::uniform(inst.s, n, MatroidKind::Bases);
        spec.sparsity_cap.reset();
        spec.regime = GeneralRegime{matroid_psi(m)};
        spec.fixed_support_oracle = [inst, n](const SupportCandidate& c)
            -> std::optional<Solution> {
            if (static_cast<int>(c.indices.size()) < inst.s) return std::nullopt;
            // Within the candidate support the best basis picks the top-s
            // columns by the restricted quadratic; enumerate directly.
            std::optional<Solution> best;
            std::vector<int> pick(inst.s);
            std::function<void(size_t, int)> rec = [&](size_t from, int depth) {
                if (depth == inst.s) {
                    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
                    for (int i : pick) x[i] = 1.0;
                    double v = (inst.a * x).squaredNorm();
                    if (!best || v > best->value) best = Solution{x, v};
                    return;
                }
                for (size_t k = from; k < c.indices.size(); ++k) {
                    pick[depth] = c.indices[k];
                    rec(k + 1, depth + 1);
                }
            };
            rec(0, 0);
            return best;
        };
    } else if (problem == "custom-quadratic") {
        spec.regime = StandardRegime{};
        spec.fixed_support_oracle = [inst](const SupportCandidate& c)
            -> std::optional<Solution> {
            if (c.indices.empty()) return std::nullopt;
            return spca_single_oracle(inst, c.indices);
        };
    } else {
        throw InvalidInput("unknown problem: " + problem);
    }
    return spec;
}

SolveReport framework_solve_for(const RunConfig& cfg, const SpcaInstance& inst) {
    if (cfg.problem == "single-spca") return spca_single_solve(inst, cfg.threads);
    if (cfg.problem == "nn-spca") return nn_spca_solve(inst, cfg.threads);
    if (cfg.problem == "2st") return tst_solve(inst, cfg.threads);
    if (cfg.problem == "spca") return spca_multi_solve(inst, cfg.threads);
    if (cfg.problem == "disjoint-spca") {
        auto res = disjoint_spca_solve(inst);
        SolveReport rep;
        rep.best.value = res.value;
        rep.best.x.resize(res.assignment.z.size());
        for (int i = 0; i < res.assignment.z.rows(); ++i)
            for (int j = 0; j < res.assignment.z.cols(); ++j)
                rep.best.x[i * res.assignment.z.cols() + j] = res.assignment.z(i, j);
        for (int i = 0; i < res.assignment.z.rows(); ++i)
            if (res.assignment.z(i, inst.d) == 0) rep.support.push_back(i);
        rep.cell_count = res.cell_count;
        rep.candidate_count = res.cell_count;
        rep.oracle_calls = res.cell_count;
        return rep;
    }
    // matroid-convex and custom-quadratic run through the generic pipeline.
    ProblemSpec spec = oracle_spec_for(cfg.problem, inst);
    Eigen::MatrixXd raw = spec.a;
    spec.a = row_compress(raw);
    return solve(spec, cfg.threads);
}

double oracle_value_for(const RunConfig& cfg, const SpcaInstance& inst) {
    if (cfg.problem == "disjoint-spca") return disjoint_brute_force(inst).value;
    return brute_force_solve(oracle_spec_for(cfg.problem, inst)).value;
}

void emit(const RunConfig& cfg, const json& report) {
    std::ostringstream os;
    if (cfg.format == "json") {
        os << report.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::vector<std::string> keys;
        for (auto it = report.begin(); it != report.end(); ++it) keys.push_back(it.key());
        for (size_t k = 0; k < keys.size(); ++k) os << (k ? "," : "") << keys[k];
        os << "\n";
        for (size_t k = 0; k < keys.size(); ++k) {
            const json& v = report.at(keys[k]);
            os << (k ? "," : "");
            if (v.is_array())
                os << "\"" << v.dump() << "\"";
            else
                os << v.dump();
        }
        os << "\n";
    } else {  // pretty
        os << "problem summary\n";
        for (auto it = report.begin(); it != report.end(); ++it)
            os << "  " << it.key() << ": " << it.value().dump() << "\n";
    }
    if (cfg.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(cfg.output);
        if (!out) throw InvalidInput("cannot write " + cfg.output);
        out << os.str();
    }
}

int cmd_solve(const RunConfig& cfg) {
    SpcaInstance inst = load_instance(cfg.input);
    if (cfg.s_override) inst.s = *cfg.s_override;
    if (cfg.d_override) inst.d = *cfg.d_override;
    inst.validate();

    json report;
    report["problem"] = cfg.problem;
    report["mode"] = cfg.mode;
    if (cfg.format == "pretty") report["complexity"] = complexity_label(cfg.problem);
    bool agree = true;
    if (cfg.mode == "framework" || cfg.mode == "both") {
        SolveReport rep = framework_solve_for(cfg, inst);
        report["value"] = rep.best.value;
        report["support"] = rep.support;
        report["solution"] =
            std::vector<double>(rep.best.x.data(), rep.best.x.data() + rep.best.x.size());
        report["candidate_count"] = rep.candidate_count;
        report["cell_count"] = rep.cell_count;
        report["oracle_calls"] = rep.oracle_calls;
        report["wall_ms"] = cfg.stable_report ? 0.0 : rep.wall_ms;
    }
    if (cfg.mode == "oracle" || cfg.mode == "both") {
        double oracle = oracle_value_for(cfg, inst);
        report["oracle_value"] = oracle;
        if (cfg.mode == "oracle") {
            report["value"] = oracle;
            report["support"] = json::array();
            report["solution"] = json::array();
            report["candidate_count"] = 0;
            report["cell_count"] = 0;
            report["oracle_calls"] = 0;
            report["wall_ms"] = 0.0;
        } else {
            double fw = report.at("value").get<double>();
            agree = std::abs(fw - oracle) <= 1e-6 * (1.0 + std::abs(oracle));
            report["mode_agreement"] = agree;
        }
    }
    emit(cfg, report);
    return agree ? 0 : 3;
}

int cmd_check(const RunConfig& cfg) {
    FinitePointSet set = FinitePointSet::from_csv(cfg.input);
    ComonotoneVerdict v = check_standard_comonotone(set);
    json report;
    report["yes"] = v.yes;
    if (!v.yes) {
        report["witness_v"] = std::vector<double>(v.witness_v.data(),
                                                  v.witness_v.data() + v.witness_v.size());
        report["i"] = v.i;
        report["j"] = v.j;
        report["reason"] = v.reason;
    }
    std::cout << (v.yes ? "YES" : "NO") << "\n";
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        out << report.dump(2) << "\n";
    }
    return 0;
}

struct GenConfig {
    std::uint64_t seed = 1;
    int r = 1;
    int n = 4;
    int s = 2;
    std::string dist = "gaussian";
    std::string output;
};

int cmd_gen(const GenConfig& cfg) {
    SpcaInstance inst;
    inst.a = gen_factor(parse_instance_kind(cfg.dist), cfg.r, cfg.n, cfg.seed);
    inst.s = cfg.s;
    save_instance(cfg.output, inst);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric convex maximization toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    GenConfig gen;

    auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
    solve_cmd->add_option("--problem", cfg.problem)
        ->check(CLI::IsMember({"single-spca", "nn-spca", "2st", "spca", "disjoint-spca",
                               "matroid-convex", "custom-quadratic"}));
    solve_cmd->add_option("--input", cfg.input)->required();
    solve_cmd->add_option("--mode", cfg.mode)
        ->check(CLI::IsMember({"framework", "oracle", "both"}));
    solve_cmd->add_option("--output", cfg.output);
    solve_cmd->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    solve_cmd->add_option("-s,--sparsity", cfg.s_override);
    solve_cmd->add_option("-d,--components", cfg.d_override);
    solve_cmd->add_option("--threads", cfg.threads);
    solve_cmd->add_flag("--stable-report", cfg.stable_report);

    auto* check_cmd = app.add_subcommand("check", "certify a point set");
    check_cmd->add_option("--input", cfg.input)->required();
    check_cmd->add_option("--output", cfg.output);

    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--r", gen.r);
    gen_cmd->add_option("--n", gen.n);
    gen_cmd->add_option("--sparsity", gen.s);
    gen_cmd->add_option("--dist", gen.dist)
        ->check(CLI::IsMember({"gaussian", "rademacher", "adversarial-ties"}));
    gen_cmd->add_option("--output", gen.output)->required();

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("COMAX_THREADS")) cfg.threads = std::atoi(env);

    try {
        if (solve_cmd->parsed()) return cmd_solve(cfg);
        if (check_cmd->parsed()) return cmd_check(cfg);
        return cmd_gen(gen);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
