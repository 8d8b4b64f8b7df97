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

#include "qcoin/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "qcoin/experiment.hpp"
#include "qcoin/optimizer.hpp"

#ifndef QCOIN_VERSION
#define QCOIN_VERSION "unknown"
#endif

namespace qcoin::cli {

namespace {

/// Runs `body`, mapping library exceptions onto exit code 1 with a diagnostic.
template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitError;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << text;
    if (!f) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

DensityOperator lab_state_from(const std::optional<std::filesystem::path> &file) {
    return file ? ingest_density_matrix(*file) : canonical_state(StateKind::psi_plus);
}

io::json path_or_null(const std::optional<std::filesystem::path> &p) {
    return p ? io::json(p->string()) : io::json(nullptr);
}

void log_seed(std::ostream &err, std::uint64_t seed) {
    err << "seed: " << seed << "\n";
}

SearchConfig search_config(const BoundOptions &opt) {
    SearchConfig cfg;
    cfg.restarts = opt.restarts;
    cfg.seed = opt.seed;
    cfg.threads = opt.threads;
    return cfg;
}

int emit_search(const std::string &command, const io::json &params, const BoundOptions &opt,
                const SearchResult &result, std::ostream &out) {
    io::json doc = io::to_json(result);
    doc["manifest"] = make_manifest(command, params, opt.seed, {{"result", path_or_null(opt.out)}});
    const std::string text = doc.dump(2) + "\n";
    if (opt.out) {
        write_file(*opt.out, text);
    }
    out << text;
    return kExitOk;
}

}  // namespace

io::json make_manifest(const std::string &command, const io::json &parameters, std::optional<std::uint64_t> seed,
                       const io::json &outputs) {
    return {{"command", command},
            {"parameters", parameters},
            {"seed", seed ? io::json(*seed) : io::json(nullptr)},
            {"version", QCOIN_VERSION},
            {"outputs", outputs}};
}

int cmd_sweep(const SweepOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (!(opt.p_start >= 0.0 && opt.p_start <= opt.p_end && opt.p_end <= 1.0)) {
            throw DomainError("need 0 <= p_start <= p_end <= 1");
        }
        if (!(opt.p_step > 0.0)) {
            throw DomainError("p_step must be positive");
        }
        const DensityOperator state = lab_state_from(opt.state_file);
        const auto rows = static_cast<long>(std::floor((opt.p_end - opt.p_start) / opt.p_step + 1e-9)) + 1;
        std::string csv = "p,ideal_payoff,model_payoff,classical_bound\n";
        for (long k = 0; k < rows; ++k) {
            const double p = std::min(opt.p_end, opt.p_start + static_cast<double>(k) * opt.p_step);
            csv += io::format_number(p) + "," + io::format_number(ideal_noisy_payoff(p)) + "," +
                   io::format_number(predicted_noisy_payoff(state, p)) + "," + io::format_number(kClassicalBoundG3) +
                   "\n";
        }
        io::json params{{"p_start", opt.p_start},
                        {"p_end", opt.p_end},
                        {"p_step", opt.p_step},
                        {"state_source", opt.state_file ? "file" : "ideal"},
                        {"state_file", path_or_null(opt.state_file)}};
        const auto meta = io::metadata_path(opt.out);
        write_file(opt.out, csv);
        write_file(meta, make_manifest("sweep", params, std::nullopt,
                                       {{"csv", opt.out.string()}, {"manifest", meta.string()}})
                                 .dump(2) +
                             "\n");
        out << "wrote " << rows << " rows to " << opt.out.string() << "\n";
        return kExitOk;
    });
}

int cmd_classical_bound(const BoundOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        log_seed(err, opt.seed);
        SearchResult result = max_classical_payoff(opt.m, opt.n, search_config(opt));
        io::json params{{"m", opt.m}, {"n", opt.n}, {"restarts", opt.restarts}};
        return emit_search("classical-bound", params, opt, result, out);
    });
}

int cmd_ps_bound(const BoundOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        log_seed(err, opt.seed);
        SearchResult result = max_projective_simulable_payoff(opt.n, search_config(opt));
        io::json params{{"n", opt.n}, {"restarts", opt.restarts}};
        return emit_search("ps-bound", params, opt, result, out);
    });
}

int cmd_feasibility(const FeasibilityOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        log_seed(err, opt.seed);
        CoinState target = io::read_coin_csv(opt.coin);
        SearchConfig cfg;
        cfg.restarts = opt.restarts;
        cfg.seed = opt.seed;
        cfg.threads = opt.threads;
        SearchResult result = coin_feasibility_distance(target, opt.m, cfg);
        io::json doc = io::to_json(result);
        doc["reachable"] = result.value <= 1e-8;
        doc["manifest"] = make_manifest(
            "feasibility", {{"coin", opt.coin.string()}, {"m", opt.m}, {"restarts", opt.restarts}}, opt.seed, {});
        out << doc.dump(2) << "\n";
        return result.value <= 1e-8 ? kExitOk : kExitNegative;
    });
}

int cmd_certify(const CertifyOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        log_seed(err, opt.seed);
        CountsTable counts = io::read_counts_csv(opt.counts);
        PayoffEstimate est = bootstrap_payoff_interval(counts, opt.resamples, opt.seed, opt.threshold);
        io::json doc = io::to_json(est);
        doc["threshold"] = io::round12(opt.threshold);
        doc["total_counts"] = counts.total();
        doc["manifest"] = make_manifest("certify",
                                        {{"counts", opt.counts.string()},
                                         {"threshold", opt.threshold},
                                         {"resamples", opt.resamples}},
                                        opt.seed, {});
        out << doc.dump(2) << "\n";
        return est.exceeds_classical ? kExitOk : kExitNegative;
    });
}

int cmd_simulate(const SimulateOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        log_seed(err, opt.seed);
        AcquisitionPlan plan{opt.p, opt.time_s, opt.rate_hz, opt.seed};
        QuantumStrategy strategy = trine_lab_strategy(lab_state_from(opt.state_file));
        CountsTable table = simulate_counts(strategy, plan);
        io::json params{{"p", opt.p},
                        {"time_s", opt.time_s},
                        {"rate_hz", opt.rate_hz},
                        {"state_file", path_or_null(opt.state_file)}};
        io::json outputs{{"counts", opt.out.string()}, {"metadata", io::metadata_path(opt.out).string()}};
        io::write_counts_csv(opt.out, table, make_manifest("simulate", params, opt.seed, outputs));
        out << "wrote " << table.total() << " coincidences to " << opt.out.string() << "\n";
        return kExitOk;
    });
}

int cmd_validate(ValidateTarget target, const std::filesystem::path &path, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        switch (target) {
        case ValidateTarget::povm: {
            Povm povm = io::read_povm_json(path);
            out << "ok: POVM with " << povm.size() << " elements on C^" << povm.dim() << "\n";
            break;
        }
        case ValidateTarget::coin: {
            CoinState coin = io::read_coin_csv(path);
            out << "ok: coin on " << coin.d_a() << " x " << coin.d_b() << " outcomes\n";
            break;
        }
        case ValidateTarget::density: {
            DensityOperator rho = io::read_density_json(path);
            out << "ok: density operator on C^" << rho.dim() << ", purity "
                << io::format_number(state_metrics(rho).purity) << "\n";
            break;
        }
        }
        return kExitOk;
    });
}

int cmd_simulability(const std::filesystem::path &povm_path, double tol, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Povm povm = io::read_povm_json(povm_path);
        SimulabilityReport report = projective_simulability(povm, tol);
        const BlochVector &d = report.best_direction;
        io::json doc{{"simulable", report.simulable},
                     {"residual", io::round12(report.residual)},
                     {"tolerance", tol},
                     {"best_direction", {io::round12(d.x()), io::round12(d.y()), io::round12(d.z())}}};
        if (report.post_processing) {
            const RealMatrix &p = report.post_processing->entries();
            io::json rows = io::json::array();
            for (Eigen::Index r = 0; r < p.rows(); ++r) {
                rows.push_back({io::round12(p(r, 0)), io::round12(p(r, 1))});
            }
            doc["post_processing"] = std::move(rows);
        }
        doc["manifest"] = make_manifest("simulability", {{"povm", povm_path.string()}, {"tol", tol}}, std::nullopt, {});
        out << doc.dump(2) << "\n";
        return report.simulable ? kExitOk : kExitNegative;
    });
}

}  // namespace qcoin::cli
