// Copyright 2026 The monomat Authors
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

#include "monomat/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "CLI11.hpp"
#include "monomat/haar.h"
#include "monomat/json_io.h"
#include "monomat/report.h"
#include "monomat/tensor_model.h"

#ifndef MONOMAT_VERSION
#define MONOMAT_VERSION "0.0.0"
#endif

namespace monomat {

namespace {

struct Common {
    std::string output;
    std::string format = "csv";
};

struct ModelOptions {
    std::string spec_path;
    std::string moments_path;
    std::string poly;
};

ModelSpec load_spec(const ModelOptions &o) {
    ModelSpec spec = o.spec_path.empty() ? reference_example_spec() : model_spec_from_json(read_json_file(o.spec_path));
    if (!o.poly.empty()) {
        try {
            spec.poly = parse_polynomial(o.poly);
        } catch (const std::invalid_argument &e) {
            throw InputError(std::string("--poly: ") + e.what());
        }
    }
    return spec;
}

MomentData load_moments(const ModelOptions &o, const ModelSpec &spec) {
    if (o.moments_path.empty()) {
        return model_moment_data(spec);
    }
    return moment_data_from_json(read_json_file(o.moments_path));
}

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--output,-o", c.output, "Write the report to this path instead of stdout");
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void add_model(CLI::App *cmd, ModelOptions &m) {
    cmd->add_option("--spec", m.spec_path, "Model spec JSON (default: the 3x3 reference example)");
    cmd->add_option("--moments", m.moments_path, "Moment data JSON (default: derived from the spec)");
    cmd->add_option("--poly", m.poly, "Polynomial overriding the spec's");
}

void deliver(const Table &table, const Common &c, std::ostream &out) {
    ReportFormat format = parse_report_format(c.format);
    if (c.output.empty()) {
        out << render(table, format);
    } else {
        emit_report(table, format, c.output);
    }
}

bool close_lists(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t k = 0; k < a.size(); k++) {
        if (std::abs(a[k] - b[k]) > tol) {
            return false;
        }
    }
    return true;
}

Table quotient_table(const ModelSpec &spec, const MomentData &data, unsigned k_max, double tol, bool &all_pass) {
    Table t;
    t.columns = {"k", "cyclic", "cyclic_chi", "monotone", "monotone_chi", "residual", "pass"};
    all_pass = true;
    Polynomial power = spec.poly;
    for (unsigned k = 1; k <= k_max; k++) {
        if (k > 1) {
            power = poly_mul(power, spec.poly);
        }
        complex c = cyclic_moment(power, data);
        complex cq = moment_via_chi(power, data, MomentKind::Cyclic);
        complex m = monotone_moment(power, data);
        complex mq = moment_via_chi(power, data, MomentKind::Monotone);
        double residual = std::max(std::abs(c - cq) / (1 + std::abs(c)), std::abs(m - mq) / (1 + std::abs(m)));
        bool pass = residual <= tol;
        all_pass = all_pass && pass;
        t.add_row({static_cast<int64_t>(k), c, cq, m, mq, residual, pass});
    }
    t.summary = {{"all_pass", all_pass}, {"tolerance", tol}};
    return t;
}

}  // namespace

std::string version_string() {
    return std::string("monomat ") + MONOMAT_VERSION;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Moments under monotone and cyclic-monotone independence, with tensor and Haar matrix models"};
    app.require_subcommand(0, 1);
    bool show_version = false;
    app.add_flag("--version", show_version, "Print the version and exit");

    // example
    Common example_common;
    std::vector<double> example_diag = {0.5, 0.25, 0.125};
    size_t example_n = 0;
    double example_tol = 1e-12;
    auto *example = app.add_subcommand("example", "Spectra of a + b a b and a b + b a in the q = 1 model");
    add_common(example, example_common);
    example->add_option("--a-diag", example_diag, "Diagonal of a")->delimiter(',');
    example->add_option("--n", example_n, "Model dimension (default: size of a)");
    example->add_option("--tol", example_tol, "Eigenvalue tolerance")->check(CLI::PositiveNumber);

    // tables
    Common tables_common;
    ModelOptions tables_model;
    double tables_tol = 1e-12;
    auto *tables = app.add_subcommand("tables", "Sign patterns of omega(PQ) and omega~(PQ)");
    add_common(tables, tables_common);
    tables->add_option("--moments", tables_model.moments_path, "Moment data JSON (default: the reference example)");
    tables->add_option("--tol", tables_tol, "Zero threshold for signs")->check(CLI::PositiveNumber);

    // model
    Common model_common;
    ModelOptions model_opts;
    std::string model_state = "full";
    unsigned model_k = 1;
    auto *model = app.add_subcommand("model", "Evaluate a state on the k-th power of the model polynomial");
    add_common(model, model_common);
    add_model(model, model_opts);
    model->add_option("--state", model_state, "full, monotone or partial:<l>");
    model->add_option("--k", model_k, "Power")->check(CLI::Range(1u, kMaxPower));

    // verify and its aliases
    struct VerifyOptions {
        Common common;
        ModelOptions model;
        unsigned k = 6;
        double tol = kVerifyTolerance;
        std::string mode = "cyclic";
    };
    VerifyOptions verify_opts;
    VerifyOptions alias_opts[3];
    const char *alias_modes[3] = {"cyclic", "monotone", "quotient"};
    auto add_verify = [&](CLI::App *cmd, VerifyOptions &v) {
        add_common(cmd, v.common);
        add_model(cmd, v.model);
        cmd->add_option("--k", v.k, "Largest power checked")->check(CLI::Range(1u, kMaxPower));
        cmd->add_option("--tol", v.tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
    };
    auto *verify = app.add_subcommand("verify", "Compare symbolic moments with the tensor model");
    add_verify(verify, verify_opts);
    verify->add_option("--mode", verify_opts.mode, "cyclic, monotone or quotient")
        ->check(CLI::IsMember({"cyclic", "monotone", "quotient"}));
    CLI::App *aliases[3];
    for (int a = 0; a < 3; a++) {
        alias_opts[a].mode = alias_modes[a];
        aliases[a] = app.add_subcommand(std::string("verify-") + alias_modes[a], std::string("verify --mode ") + alias_modes[a]);
        add_verify(aliases[a], alias_opts[a]);
    }

    // limits
    Common limits_common;
    ModelOptions limits_model;
    unsigned limits_k = 2;
    std::vector<size_t> limits_n = {3, 6, 12};
    std::vector<size_t> limits_l;
    double limits_tol = 1e-12;
    auto *limits = app.add_subcommand("limits", "Partial-trace table over (n, l) and both iterated limits");
    add_common(limits, limits_common);
    add_model(limits, limits_model);
    limits->add_option("--k", limits_k, "Power")->check(CLI::Range(1u, kMaxPower));
    limits->add_option("--n", limits_n, "Dimensions")->delimiter(',');
    limits->add_option("--l", limits_l, "Partial-trace lengths (default: 1 up to the largest model dimension)")
        ->delimiter(',');
    limits->add_option("--tol", limits_tol, "Stabilization tolerance")->check(CLI::PositiveNumber);

    // haar
    Common haar_common;
    std::string haar_word = "ABAB";
    std::vector<size_t> haar_n = {64, 128, 256};
    std::string haar_l = "full";
    size_t haar_trials = 100;
    uint64_t haar_seed = 0;
    std::string haar_family;
    std::string haar_summary;
    unsigned haar_threads = 1;
    bool haar_identity = false;
    bool haar_drop_lead = false;
    double slope_min = -1.6;
    double slope_max = -0.7;
    auto *haar = app.add_subcommand("haar", "Monte Carlo over Haar unitaries");
    add_common(haar, haar_common);
    haar->add_option("--word", haar_word, "Alternating pattern such as ABAB, BAB or 'A1 B2 A2 B1'");
    haar->add_option("--n", haar_n, "Dimensions")->delimiter(',');
    haar->add_option("--l", haar_l, "<int>, full or n/2");
    haar->add_option("--trials", haar_trials, "Trials per dimension")->check(CLI::PositiveNumber);
    haar->add_option("--seed", haar_seed, "Master seed");
    haar->add_option("--family", haar_family, "Matrix family JSON (default: the reference A and balanced +-1 B)");
    haar->add_option("--summary", haar_summary, "Write the rate-fit JSON here");
    haar->add_option("--threads", haar_threads, "Worker threads")->check(CLI::PositiveNumber);
    haar->add_flag("--identity-unitary", haar_identity, "Use U = I in every trial");
    haar->add_flag("--drop-leading-b", haar_drop_lead, "Omit tr(B_j0) from the target");
    haar->add_option("--slope-min", slope_min, "Lower end of the accepted slope range");
    haar->add_option("--slope-max", slope_max, "Upper end of the accepted slope range");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParseFailure;
    }
    if (show_version) {
        out << version_string() << "\n";
        return kExitOk;
    }
    if (app.get_subcommands().empty()) {
        out << app.help();
        return kExitParseFailure;
    }

    try {
        if (example->parsed()) {
            std::vector<double> diag = example_diag;
            Matrix a = Matrix::diagonal(std::span<const double>(diag));
            size_t n = example_n == 0 ? diag.size() : example_n;
            ExampleSpectra spectra = example_eigenvalues(a, n);
            // X = a (x) I_2 and Y = a (x) J on the padded a.
            std::vector<double> padded = diag;
            padded.resize(n, 0.0);
            std::vector<double> want_x, want_y;
            for (double v : padded) {
                want_x.insert(want_x.end(), {v, v});
                want_y.insert(want_y.end(), {v, -v});
            }
            bool ok = close_lists(spectra.x, want_x, example_tol) && close_lists(spectra.y, want_y, example_tol);
            deliver(example_table(spectra), example_common, out);
            err << "example: " << (ok ? "spectra match" : "spectra DO NOT match") << "\n";
            return ok ? kExitOk : kExitAssertionFailed;
        }

        if (tables->parsed()) {
            MomentData data = tables_model.moments_path.empty() ? model_moment_data(reference_example_spec())
                                                                : moment_data_from_json(read_json_file(tables_model.moments_path));
            SignTables st = sign_tables(data, tables_tol);
            deliver(sign_table(st), tables_common, out);
            err << "tables: cyclic " << (st.cyclic_matches ? "match" : "MISMATCH") << ", monotone "
                << (st.monotone_matches ? "match" : "MISMATCH") << "\n";
            return st.all_match() ? kExitOk : kExitAssertionFailed;
        }

        if (model->parsed()) {
            ModelSpec spec = load_spec(model_opts);
            StateKind state;
            try {
                state = StateKind::parse(model_state);
            } catch (const std::invalid_argument &e) {
                throw InputError(e.what());
            }
            TensorModel tm = build_model(spec);
            complex value = evaluate_state(tm, model_k, state);
            Table t;
            t.columns = {"k", "state", "value"};
            t.add_row({static_cast<int64_t>(model_k), model_state, value});
            deliver(t, model_common, out);
            err << "model: " << format_complex(value) << "\n";
            return kExitOk;
        }

        const VerifyOptions *v = nullptr;
        if (verify->parsed()) {
            v = &verify_opts;
        }
        for (int a = 0; a < 3; a++) {
            if (aliases[a]->parsed()) {
                v = &alias_opts[a];
            }
        }
        if (v != nullptr) {
            ModelSpec spec = load_spec(v->model);
            MomentData data = load_moments(v->model, spec);
            if (v->mode == "quotient") {
                bool ok = false;
                Table t = quotient_table(spec, data, v->k, v->tol, ok);
                deliver(t, v->common, out);
                err << "verify-quotient: " << (ok ? "all rows pass" : "FAILED") << "\n";
                return ok ? kExitOk : kExitAssertionFailed;
            }
            VerifyReport report = v->mode == "cyclic" ? verify_cyclic(spec, data, v->k, v->tol)
                                                      : verify_monotone(spec, data, v->k, v->tol);
            deliver(verify_table(report), v->common, out);
            err << "verify-" << v->mode << ": max residual " << format_real(report.max_residual()) << ", "
                << (report.all_pass() ? "all rows pass" : "FAILED") << "\n";
            return report.all_pass() ? kExitOk : kExitAssertionFailed;
        }

        if (limits->parsed()) {
            ModelSpec spec = load_spec(limits_model);
            std::vector<size_t> l_list = limits_l;
            if (l_list.empty()) {
                size_t n_max = *std::max_element(limits_n.begin(), limits_n.end());
                size_t dim = n_max << spec.q;
                for (size_t l = 1; l <= dim; l++) {
                    l_list.push_back(l);
                }
            }
            LimitSweep sweep = limit_sweep(spec, limits_k, limits_n, l_list, limits_tol);
            deliver(limits_table(sweep), limits_common, out);
            err << "limits: cyclic " << format_complex(sweep.cyclic_limit) << (sweep.cyclic_stable ? " (stable)" : " (UNSTABLE)")
                << ", monotone " << format_complex(sweep.monotone_limit)
                << (sweep.monotone_stable ? " (stable)" : " (UNSTABLE)") << "\n";
            return sweep.passed() ? kExitOk : kExitAssertionFailed;
        }

        if (haar->parsed()) {
            RandomModelSpec spec = RandomModelSpec::reference(haar_n, haar_trials, haar_seed);
            try {
                spec.word = WordPattern::parse(haar_word);
                spec.l = TraceLength::parse(haar_l);
            } catch (const std::invalid_argument &e) {
                throw InputError(e.what());
            }
            if (!haar_family.empty()) {
                apply_haar_family(read_json_file(haar_family), spec);
            }
            spec.identity_unitary = haar_identity;
            if (haar_drop_lead) {
                spec.keep_leading_b = false;
            }
            auto reports = mc_estimate(spec, haar_threads);
            Table t = haar_table(reports);
            double c_rate = calibrate_rate_constant(reports);
            bool model_ok = true;
            for (const auto &r : reports) {
                model_ok = model_ok && within_error_model(r, c_rate);
            }
            nlohmann::json summary = {
                {"word", spec.word.str()},
                {"l", spec.l.str()},
                {"trials", spec.trials},
                {"seed", spec.seed},
                {"c_rate", c_rate},
                {"error_model_pass", model_ok},
            };
            bool ok = model_ok;
            size_t distinct = haar_n.size();
            {
                auto sorted = haar_n;
                std::sort(sorted.begin(), sorted.end());
                distinct = static_cast<size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
            }
            if (distinct >= 3) {
                RateFit fit = rate_check(reports, slope_min, slope_max);
                summary["rate_fit"] = rate_fit_json(fit);
                ok = ok && fit.passed;
                err << "haar: slope " << format_real(fit.slope) << " (95% band " << format_real(fit.ci_low) << " .. "
                    << format_real(fit.ci_high) << ")" << (fit.degenerate ? " degenerate" : "") << "\n";
            }
            t.summary = summary;
            deliver(t, haar_common, out);
            if (!haar_summary.empty()) {
                std::ofstream s(haar_summary, std::ios::binary);
                if (!s) {
                    throw std::runtime_error("cannot open " + haar_summary + " for writing");
                }
                s << summary.dump(2) << "\n";
            }
            err << "haar: " << (ok ? "pass" : "FAILED") << "\n";
            return ok ? kExitOk : kExitAssertionFailed;
        }
    } catch (const InputError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitParseFailure;
    } catch (const nlohmann::json::exception &e) {
        err << "input error: " << e.what() << "\n";
        return kExitParseFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitAssertionFailed;
    }
    return kExitParseFailure;
}

}  // namespace monomat
