// Copyright 2026 The qcoin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qcoin: certify non-classical shared randomness from the three-restaurant game.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qcoin/commands.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char *env = std::getenv("QCOIN_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            std::cerr << "warning: ignoring malformed QCOIN_SEED=" << env << "\n";
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char **argv) {
    using namespace qcoin::cli;

    CLI::App app{"Quantum correlated coins: payoff bounds, simulated experiments, certification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", QCOIN_VERSION);
    const std::uint64_t seed0 = default_seed();

    SweepOptions sweep;
    std::string sweep_state;
    auto *c_sweep = app.add_subcommand("sweep", "Payoff versus noise strength p as CSV");
    c_sweep->add_option("--p-start", sweep.p_start, "First p")->capture_default_str();
    c_sweep->add_option("--p-end", sweep.p_end, "Last p")->capture_default_str();
    c_sweep->add_option("--p-step", sweep.p_step, "Step in p")->capture_default_str();
    c_sweep->add_option("--state", sweep_state, "Lab-frame density matrix JSON (default: ideal |psi+>)")
        ->check(CLI::ExistingFile);
    c_sweep->add_option("-o,--out", sweep.out, "Output CSV")->required();

    BoundOptions bound;
    bound.seed = seed0;
    std::string bound_out;
    auto *c_bound = app.add_subcommand("classical-bound", "Best payoff from m-faced shared randomness in G(n)");
    c_bound->add_option("-m", bound.m, "Outcomes of the shared coin")->capture_default_str();
    c_bound->add_option("-n", bound.n, "Number of restaurants")->capture_default_str();
    c_bound->add_option("--restarts", bound.restarts, "Random restarts")->capture_default_str();
    c_bound->add_option("--seed", bound.seed, "Seed (default: QCOIN_SEED or 1)");
    c_bound->add_option("--threads", bound.threads, "Worker threads, 0 for all cores")->capture_default_str();
    c_bound->add_option("-o,--out", bound_out, "Also write the JSON result here");

    BoundOptions ps;
    ps.seed = seed0;
    std::string ps_out;
    auto *c_ps = app.add_subcommand("ps-bound", "Best payoff of a singlet measured with projective-simulable POVMs");
    c_ps->add_option("-n", ps.n, "Number of restaurants")->capture_default_str();
    c_ps->add_option("--restarts", ps.restarts, "Random restarts")->capture_default_str();
    c_ps->add_option("--seed", ps.seed, "Seed (default: QCOIN_SEED or 1)");
    c_ps->add_option("--threads", ps.threads, "Worker threads, 0 for all cores")->capture_default_str();
    c_ps->add_option("-o,--out", ps_out, "Also write the JSON result here");

    FeasibilityOptions feas;
    feas.seed = seed0;
    auto *c_feas = app.add_subcommand("feasibility", "Distance from a coin CSV to the reachable set of an m-coin");
    c_feas->add_option("coin", feas.coin, "Coin CSV (i,j,p)")->required()->check(CLI::ExistingFile);
    c_feas->add_option("-m", feas.m, "Outcomes of the shared coin")->capture_default_str();
    c_feas->add_option("--restarts", feas.restarts, "Random restarts")->capture_default_str();
    c_feas->add_option("--seed", feas.seed, "Seed (default: QCOIN_SEED or 1)");
    c_feas->add_option("--threads", feas.threads, "Worker threads, 0 for all cores")->capture_default_str();

    SimulateOptions sim;
    sim.seed = seed0;
    std::string sim_state;
    auto *c_sim = app.add_subcommand("simulate", "Simulate coincidence counts for the trine strategy");
    c_sim->add_option("--p", sim.p, "Noise strength")->capture_default_str();
    c_sim->add_option("--time", sim.time_s, "Seconds per data point")->capture_default_str();
    c_sim->add_option("--rate", sim.rate_hz, "Coincidence rate at unit probability (Hz)")->capture_default_str();
    c_sim->add_option("--seed", sim.seed, "Seed (default: QCOIN_SEED or 1)");
    c_sim->add_option("--state", sim_state, "Lab-frame density matrix JSON (default: ideal |psi+>)")
        ->check(CLI::ExistingFile);
    c_sim->add_option("-o,--out", sim.out, "Output counts CSV")->required();

    CertifyOptions cert;
    cert.seed = seed0;
    auto *c_cert = app.add_subcommand("certify", "Bootstrap the payoff from counts; exit 0 if above threshold");
    c_cert->add_option("counts", cert.counts, "Counts CSV (i,j,counts)")->required();
    c_cert->add_option("--threshold", cert.threshold, "Classical bound to beat")->capture_default_str();
    c_cert->add_option("--resamples", cert.resamples, "Bootstrap resamples")->capture_default_str();
    c_cert->add_option("--seed", cert.seed, "Seed (default: QCOIN_SEED or 1)");

    ValidateTarget target = ValidateTarget::povm;
    std::string validate_path;
    const std::map<std::string, ValidateTarget> targets{
        {"povm", ValidateTarget::povm}, {"coin", ValidateTarget::coin}, {"density", ValidateTarget::density}};
    auto *c_val = app.add_subcommand("validate", "Check a POVM, coin or density file");
    c_val->add_option("target", target, "povm | coin | density")
        ->required()
        ->transform(CLI::CheckedTransformer(targets, CLI::ignore_case));
    c_val->add_option("path", validate_path, "File to check")->required();

    std::string simul_path;
    double simul_tol = qcoin::kSimulabilityTol;
    auto *c_simul = app.add_subcommand("simulability", "Is a qubit POVM simulable by a projective measurement?");
    c_simul->add_option("povm", simul_path, "POVM JSON")->required()->check(CLI::ExistingFile);
    c_simul->add_option("--tol", simul_tol, "Decision tolerance on the residual")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    if (*c_sweep) {
        if (!sweep_state.empty()) {
            sweep.state_file = sweep_state;
        }
        return cmd_sweep(sweep, std::cout, std::cerr);
    }
    if (*c_bound) {
        if (!bound_out.empty()) {
            bound.out = bound_out;
        }
        return cmd_classical_bound(bound, std::cout, std::cerr);
    }
    if (*c_ps) {
        if (!ps_out.empty()) {
            ps.out = ps_out;
        }
        return cmd_ps_bound(ps, std::cout, std::cerr);
    }
    if (*c_feas) {
        return cmd_feasibility(feas, std::cout, std::cerr);
    }
    if (*c_sim) {
        if (!sim_state.empty()) {
            sim.state_file = sim_state;
        }
        return cmd_simulate(sim, std::cout, std::cerr);
    }
    if (*c_cert) {
        return cmd_certify(cert, std::cout, std::cerr);
    }
    if (*c_val) {
        return cmd_validate(target, validate_path, std::cout, std::cerr);
    }
    return cmd_simulability(simul_path, simul_tol, std::cout, std::cerr);
}
