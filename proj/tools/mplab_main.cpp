#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "mplab/acceptance.hpp"
#include "mplab/report.hpp"
#include "mplab/runners.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitViolated = 2;
constexpr int kExitUsage = 64;

void add_common(CLI::App* cmd, mplab::ExperimentConfig& c) {
    cmd->add_option("--profile", c.profile, "warping profile: euclidean|hyperbolic|cusp|superexp");
    cmd->add_option("--epsilon", c.epsilon, "profile parameter");
    cmd->add_option("--lambda", c.lambda, "spectral parameter");
    cmd->add_option("--horizon", c.horizon, "radial horizon");
    cmd->add_option("--space", c.space, "green space: interval|disc");
    cmd->add_option("--k", c.k, "mollification index");
    cmd->add_option("--tol", c.tol, "iteration tolerance");
    cmd->add_option("--tmax", c.tmax, "sweep end");
    cmd->add_option("--points", c.points, "sweep point count");
    cmd->add_option("--seed", c.seed, "sampling seed");
    cmd->add_option("--out", c.out, "output artifact path");
    cmd->add_option("--expect", c.expect, "expected verdict (violated)");
}

int emit_json(const mplab::Json& j, const mplab::ExperimentConfig& c) {
    if (!c.out.empty())
        mplab::write_json(c.out, j);
    else
        std::printf("%s\n", j.dump(2).c_str());
    return mplab::verdict_exit_code(j, c);
}

int emit_csv(const std::string& csv, const mplab::ExperimentConfig& c) {
    if (!c.out.empty())
        mplab::write_text_file(c.out, csv);
    else
        std::fputs(csv.c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mplab: positivity preservation and stochastic completeness lab"};
    app.require_subcommand(1);

    mplab::ExperimentConfig c;
    std::string suite = "all";

    auto* cex = app.add_subcommand("counterexample", "cusp family supersolution and mass checks");
    add_common(cex, c);
    auto* sct = app.add_subcommand("sc-test", "stochastic completeness ODE test");
    add_common(sct, c);
    auto* alp = app.add_subcommand("alpha", "radial positive solution table");
    add_common(alp, c);
    auto* grn = app.add_subcommand("green", "kernel slice");
    add_common(grn, c);
    auto* mnv = app.add_subcommand("meanvalue", "mean-value samples");
    add_common(mnv, c);
    auto* apx = app.add_subcommand("approx", "monotone approximation table");
    add_common(apx, c);
    auto* itr = app.add_subcommand("iterate", "monotone iteration demo case");
    add_common(itr, c);
    auto* env = app.add_subcommand("envelope", "exhaustion envelope");
    add_common(env, c);
    auto* exp = app.add_subcommand("experiment", "positivity-preservation experiment");
    add_common(exp, c);
    exp->add_option("--mode", c.mode, "linfty|l1");
    auto* acc = app.add_subcommand("acceptance", "run the acceptance criteria");
    acc->add_option("suite", suite, "all or a module suite");
    acc->add_option("--seed", c.seed, "sampling seed");
    acc->add_option("--out", c.out, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError&) {
        std::fprintf(stderr, "usage error; see --help\n");
        return kExitUsage;
    }

    try {
        if (cex->parsed()) {
            c.command = "counterexample";
            return emit_json(mplab::counterexample_report(c), c);
        }
        if (sct->parsed()) {
            c.command = "sc-test";
            return emit_json(mplab::sc_test_report(c), c);
        }
        if (alp->parsed()) {
            c.command = "alpha";
            return emit_csv(mplab::alpha_csv(c), c);
        }
        if (grn->parsed()) {
            c.command = "green";
            return emit_csv(mplab::green_csv(c), c);
        }
        if (mnv->parsed()) {
            c.command = "meanvalue";
            return emit_csv(mplab::meanvalue_csv(c), c);
        }
        if (apx->parsed()) {
            c.command = "approx";
            return emit_csv(mplab::approx_csv(c), c);
        }
        if (itr->parsed()) {
            c.command = "iterate";
            return emit_json(mplab::iterate_report(c), c);
        }
        if (env->parsed()) {
            c.command = "envelope";
            return emit_json(mplab::envelope_report(c), c);
        }
        if (exp->parsed()) {
            c.command = "experiment";
            return emit_json(mplab::experiment_report(c), c);
        }
        if (acc->parsed()) {
            if (!mplab::known_suite(suite)) {
                std::fprintf(stderr, "unknown suite: %s\n", suite.c_str());
                return kExitUsage;
            }
            auto results = mplab::run_acceptance(suite, c.seed);
            bool ok = mplab::print_acceptance(results);
            if (!c.out.empty()) mplab::write_json(c.out, mplab::acceptance_json(results, c.seed));
            return ok ? 0 : kExitError;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid request: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return kExitUsage;
}
