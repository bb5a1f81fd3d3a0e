// Copyright 2026 The jaws Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jaws/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "jaws/error.hpp"
#include "jaws/landscape.hpp"
#include "jaws/model_io.hpp"
#include "jaws/simulator.hpp"
#include "jaws/stats.hpp"
#include "jaws/wishart_process.hpp"

namespace jaws::cli {

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

class CsvFile {
  public:
    CsvFile(const RunConfig &cfg, const std::string &name) : path_(std::filesystem::path(cfg.out_dir) / name) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.out_dir, ec);
        out_.open(path_);
        if (!out_) {
            throw ValidationError(path_.string() + ": cannot open for writing");
        }
    }
    void row(const std::vector<std::string> &cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            out_ << (k ? "," : "") << cells[k];
        }
        out_ << '\n';
        if (!out_) {
            throw ValidationError(path_.string() + ": write failed");
        }
    }
    std::string path() const { return path_.string(); }

  private:
    std::filesystem::path path_;
    std::ofstream out_;
};

JawsModel single_model(const RunConfig &cfg) {
    if (cfg.models.size() != 1) {
        throw ValidationError(cfg.subcommand + " needs exactly one --model");
    }
    return load_model(cfg.models.front());
}

bool all_rank1(const JawsModel &m) {
    for (const SimpleComponent &c : m.components) {
        if (std::count_if(c.input_spectrum.begin(), c.input_spectrum.end(), [](double v) { return v > 0.0; }) != 1) {
            return false;
        }
    }
    return true;
}

const char *regime(const SectorGamma &s) { return s.underparameterized ? "underparameterized" : "overparameterized"; }

std::string overall_regime(const MinimaDensitySpec &spec) {
    std::size_t under = 0;
    for (const SectorGamma &s : spec.sectors) {
        under += s.underparameterized ? 1 : 0;
    }
    if (under == 0) {
        return "overparameterized";
    }
    return under == spec.sectors.size() ? "underparameterized" : "mixed";
}

void text_histogram(std::ostream &out, const std::string &title, const std::vector<double> &lo,
                    const std::vector<double> &dens) {
    const double top = *std::max_element(dens.begin(), dens.end());
    out << title << '\n';
    for (std::size_t k = 0; k < dens.size(); ++k) {
        const int w = top > 0.0 ? static_cast<int>(std::lround(40.0 * dens[k] / top)) : 0;
        out << fmt::format("  {:>12.5g} |{}\n", lo[k], std::string(static_cast<std::size_t>(w), '#'));
    }
}

std::vector<double> histogram(const std::vector<double> &x, double lo, double hi, std::size_t bins) {
    std::vector<double> h(bins, 0.0);
    const double w = (hi - lo) / static_cast<double>(bins);
    for (double v : x) {
        const auto k = static_cast<std::size_t>(std::clamp((v - lo) / w, 0.0, static_cast<double>(bins) - 1.0));
        h[k] += 1.0;
    }
    for (double &v : h) {
        v /= static_cast<double>(x.size()) * w;
    }
    return h;
}

} // namespace

int cmd_analyze(const RunConfig &cfg, std::ostream &out) {
    const JawsModel m = single_model(cfg);
    const MinimaDensitySpec spec = minima_density_spec(m);
    out << "model: " << cfg.models.front() << '\n';
    out << "components: " << m.components.size() << '\n';
    out << "total_params: " << m.total_params << '\n';
    double need = 0.0;
    for (std::size_t a = 0; a < m.components.size(); ++a) {
        const SimpleComponent &c = m.components[a];
        const SpectralStats st = spectral_stats(c);
        need = std::max(need, c.beta() * st.dof_real);
        out << fmt::format("sector {}: field={} dim={} index={} r={} dof_real={} gamma={} mean_eig={} "
                           "std_eig={} regime={}\n",
                           a, field_letter(c.field), c.dim, num(c.index), st.dof, num(st.dof_real),
                           num(spec.sectors[a].gamma), num(st.mean_eig), num(st.std_eig), regime(spec.sectors[a]));
    }
    out << "loss_variance: " << num(loss_variance(m)) << '\n';
    GpThresholds gt;
    gt.cumulant_max = cfg.threshold_cumulant;
    const GpReport gp = gp_conditions(m, gt);
    out << "gp_variance: " << num(gp.variance) << '\n';
    out << "gp_cumulant: " << num(gp.cumulant) << '\n';
    out << "gp_verdict: " << (gp.gaussian_process ? "GP" : "non-GP") << '\n';
    out << "minima_regime: " << overall_regime(spec) << '\n';
    try {
        const WelchSatterthwaite ws = welch_satterthwaite(m);
        out << "k_eff: " << num(ws.k_eff) << '\n';
        out << "theta_eff: " << num(ws.theta_eff) << '\n';
    } catch (const UnsupportedError &) {
        out << "k_eff: none\ntheta_eff: none\n";
    }
    out << "minima_condition: " << (static_cast<double>(m.total_params) >= need ? "true" : "false") << '\n';
    return ok;
}

int cmd_sample(const RunConfig &cfg, std::ostream &out) {
    const JawsModel m = single_model(cfg);
    if (cfg.samples < 1) {
        throw ValidationError("--samples must be at least 1");
    }
    const RngState root(cfg.seed);
    const std::size_t na = m.components.size();

    CsvFile loss(cfg, "loss.csv");
    std::vector<std::string> head{"sample_id", "z"};
    for (std::size_t a = 0; a < na; ++a) {
        head.push_back(fmt::format("z_{}", a));
    }
    loss.row(head);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        RngState r = root.split(0).split(i);
        const LossDraw d = sample_loss(m, r);
        std::vector<std::string> row{std::to_string(i), num(d.total)};
        for (double z : d.z) {
            row.push_back(num(z));
        }
        loss.row(row);
    }

    if (all_rank1(m)) {
        // Condition at the mean loss of every sector.
        std::vector<double> z;
        for (const SectorGamma &s : minima_density_spec(m).sectors) {
            z.push_back(s.loss_scale);
        }
        const std::size_t p = m.total_params;
        CsvFile grad(cfg, "gradient.csv");
        head = {"sample_id"};
        for (std::size_t k = 0; k < p; ++k) {
            head.push_back(fmt::format("grad_{}", k));
        }
        grad.row(head);
        CsvFile hess(cfg, "hessian.csv");
        head = {"sample_id"};
        for (std::size_t k = 0; k < p; ++k) {
            for (std::size_t l = k; l < p; ++l) {
                head.push_back(fmt::format("h_{}_{}", k, l));
            }
        }
        hess.row(head);
        for (std::size_t i = 0; i < cfg.samples; ++i) {
            RngState rg = root.split(1).split(i);
            const ConditionalGradientDraw g = sample_gradient_given_loss(m, z, rg);
            std::vector<std::string> row{std::to_string(i)};
            for (double v : g.grad) {
                row.push_back(num(v));
            }
            grad.row(row);
            RngState rh = root.split(2).split(i);
            const ConditionalHessianDraw h = sample_hessian_at_critical(m, z, rh);
            row = {std::to_string(i)};
            for (std::size_t k = 0; k < p; ++k) {
                for (std::size_t l = k; l < p; ++l) {
                    row.push_back(num(h.hessian(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l))));
                }
            }
            hess.row(row);
        }
        out << "conditioned_at_z: ";
        for (std::size_t a = 0; a < na; ++a) {
            out << (a ? " " : "") << num(z[a]);
        }
        out << '\n';
    } else {
        out << "gradient/hessian: skipped (mixed input; use simulate)\n";
    }

    // Pure versus maximally mixed inputs of the same trace.
    JawsModel pure = m, mixed = m;
    for (std::size_t a = 0; a < na; ++a) {
        const double t = trace(m.components[a].input_spectrum);
        const std::size_t n = m.components[a].dim;
        pure.components[a].input_spectrum.assign(n, 0.0);
        pure.components[a].input_spectrum[0] = t;
        mixed.components[a].input_spectrum.assign(n, t / static_cast<double>(n));
    }
    std::vector<double> zp, zm;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        RngState rp = root.split(3).split(i);
        zp.push_back(sample_loss(pure, rp).total);
        RngState rm = root.split(4).split(i);
        zm.push_back(sample_loss(mixed, rm).total);
    }
    const double hi = std::max(*std::max_element(zp.begin(), zp.end()), *std::max_element(zm.begin(), zm.end()));
    const std::size_t bins = 40;
    const std::vector<double> hp = histogram(zp, 0.0, hi, bins), hm = histogram(zm, 0.0, hi, bins);
    CsvFile hist(cfg, "loss_histogram.csv");
    hist.row({"bin_lo", "bin_hi", "pure_density", "mixed_density"});
    std::vector<double> lo;
    for (std::size_t k = 0; k < bins; ++k) {
        const double a = hi * static_cast<double>(k) / bins, b = hi * static_cast<double>(k + 1) / bins;
        lo.push_back(a);
        hist.row({num(a), num(b), num(hp[k]), num(hm[k])});
    }
    const double ve = EmpiricalDistribution(zm).variance() / EmpiricalDistribution(zp).variance();
    out << "samples: " << cfg.samples << '\n';
    out << "variance_ratio_mixed_over_pure: " << num(ve) << '\n';
    out << "variance_ratio_predicted: " << num(loss_variance(mixed) / loss_variance(pure)) << '\n';
    text_histogram(out, "pure input loss density", lo, hp);
    text_histogram(out, "mixed input loss density", lo, hm);
    return ok;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out) {
    const JawsModel m = single_model(cfg);
    if (cfg.samples < 100) {
        throw ValidationError("--samples must be at least 100 for simulate");
    }
    double cost = 0.0, floor = 0.0;
    for (const SimpleComponent &c : m.components) {
        if (c.dim > 256) {
            throw ValidationError("simulate supports component dims up to 256");
        }
        const double n = static_cast<double>(c.dim);
        cost += static_cast<double>(cfg.samples) * n * n * n;
        floor += loss_floor(c);
    }
    if (cost > cfg.budget) {
        throw BudgetError("simulation cost " + num(cost) + " exceeds budget " + num(cfg.budget));
    }
    const RngState root(cfg.seed);
    const std::vector<LandscapeSample> sim = simulate_model(m, cfg.samples, root.split(0));
    const std::size_t p = m.total_params;
    CsvFile csv(cfg, "simulate.csv");
    std::vector<std::string> head{"sample_id", "loss"};
    for (std::size_t k = 0; k < p; ++k) {
        head.push_back(fmt::format("grad_{}", k));
    }
    csv.row(head);
    for (std::size_t i = 0; i < sim.size(); ++i) {
        std::vector<std::string> row{std::to_string(i), num(sim[i].loss)};
        for (double g : sim[i].grad) {
            row.push_back(num(g));
        }
        csv.row(row);
    }

    // Wishart-process draws of the same size for two-sample comparison.
    std::vector<double> zs, zw;
    std::vector<std::vector<double>> gs(p), gw(p);
    const bool rank1 = all_rank1(m);
    for (std::size_t i = 0; i < sim.size(); ++i) {
        zs.push_back(sim[i].loss - floor);
        RngState r = root.split(1).split(i);
        const LossDraw d = sample_loss(m, r);
        zw.push_back(d.total);
        for (std::size_t k = 0; k < p; ++k) {
            gs[k].push_back(sim[i].grad[k]);
        }
        if (rank1) {
            const ConditionalGradientDraw g = sample_gradient_given_loss(m, d.z, r);
            for (std::size_t k = 0; k < p; ++k) {
                gw[k].push_back(g.grad[k]);
            }
        }
    }
    CsvFile ks(cfg, "ks.csv");
    ks.row({"quantity", "ks_statistic", "p_value", "n"});
    out << fmt::format("{:<10} {:>24} {:>24} {:>8}\n", "quantity", "ks_statistic", "p_value", "n");
    auto report = [&](const std::string &name, const std::vector<double> &a, const std::vector<double> &b) {
        const KsResult r = ks_two_sample(EmpiricalDistribution(a), EmpiricalDistribution(b));
        ks.row({name, num(r.statistic), num(r.p_value), std::to_string(a.size())});
        out << fmt::format("{:<10} {:>24} {:>24} {:>8}\n", name, num(r.statistic), num(r.p_value), a.size());
    };
    report("loss", zs, zw);
    if (rank1) {
        for (std::size_t k = 0; k < p; ++k) {
            report(fmt::format("grad_{}", k), gs[k], gw[k]);
        }
    }
    out << "cost: " << num(cost) << '\n';
    return ok;
}

int cmd_minima(const RunConfig &cfg, std::ostream &out) {
    const JawsModel m = single_model(cfg);
    if (cfg.grid < 2) {
        throw ValidationError("--grid must be at least 2");
    }
    const MinimaDensity dens(m);
    const MinimaDensitySpec &spec = dens.spec();
    for (std::size_t a = 0; a < spec.sectors.size(); ++a) {
        out << fmt::format("sector {}: gamma={} regime={}\n", a, num(spec.sectors[a].gamma), regime(spec.sectors[a]));
    }
    out << "regime: " << overall_regime(spec) << '\n';
    out << "point_mass_at_zero: " << (dens.point_mass_at_zero() ? "true" : "false") << '\n';
    double end = dens.support_end();
    if (dens.point_mass_at_zero()) {
        out << "k_eff: none\ntheta_eff: none\n";
        for (const SectorGamma &s : spec.sectors) {
            end += 2.0 * s.loss_scale;
        }
    } else {
        const WelchSatterthwaite ws = welch_satterthwaite(m);
        out << "k_eff: " << num(ws.k_eff) << '\n';
        out << "theta_eff: " << num(ws.theta_eff) << '\n';
        out << "mean: " << num(dens.mean()) << '\n';
    }
    CsvFile csv(cfg, "minima_density.csv");
    csv.row({"z", "density"});
    double mass = 0.0, prev = 0.0;
    for (std::size_t k = 0; k < cfg.grid; ++k) {
        const double z = end * static_cast<double>(k) / static_cast<double>(cfg.grid - 1);
        double v = dens(z);
        if (!std::isfinite(v)) {
            v = 0.0; // integrable singularity at z = 0
        }
        if (k > 0) {
            mass += 0.5 * (v + prev) * end / static_cast<double>(cfg.grid - 1);
        }
        prev = v;
        csv.row({num(z), num(v)});
    }
    out << "continuous_mass: " << num(dens.continuous_mass()) << '\n';
    out << "grid_mass: " << num(mass) << '\n';
    return ok;
}

int cmd_trainability(const RunConfig &cfg, std::ostream &out) {
    if (cfg.models.size() < 3) {
        throw ValidationError("trainability needs at least 3 --model files");
    }
    std::vector<JawsModel> models;
    for (const std::string &p : cfg.models) {
        models.push_back(load_model(p));
    }
    TrainabilityThresholds t;
    t.max_polylog_exponent = cfg.threshold_variance_exponent;
    const TrainabilityReport r = trainability_verdict(models, t);
    for (std::size_t k = 0; k < r.sizes.size(); ++k) {
        out << fmt::format("size {}: variance={}\n", num(r.sizes[k]), num(r.variances[k]));
    }
    for (std::size_t a = 0; a < r.sectors.size(); ++a) {
        const SectorDiagnostics &d = r.sectors[a];
        out << fmt::format("sector {}: dof_real={} beta_r={} gamma={}\n", a, num(d.dof_real), num(d.beta_r),
                           num(d.gamma));
    }
    out << "fitted_exponent: " << num(r.fitted_exponent) << '\n';
    out << "exponent_growth: " << num(r.exponent_growth) << '\n';
    out << "variance_value: " << num(r.variance_value) << '\n';
    out << "variance_verdict: " << to_string(r.variance_verdict) << '\n';
    out << "minima_condition: " << (r.minima_condition ? "true" : "false") << '\n';
    out << "overall: " << (r.overall ? "trainable" : "not trainable") << '\n';
    return ok;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"jaws: Wishart-process analytics for QNN loss landscapes"};
    app.require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> subs = {
        {"analyze", "per-sector degrees of freedom, variance, GP and minima summary"},
        {"sample", "Wishart-process draws of loss, gradient and Hessian"},
        {"simulate", "exact circuit Monte Carlo with a goodness-of-fit table"},
        {"minima", "local-minima density grid and regime labels"},
        {"trainability", "verdict over a size sequence of models"},
    };
    for (const auto &[name, help] : subs) {
        CLI::App *s = app.add_subcommand(name, help);
        s->add_option("--model", cfg.models, "JAWS model file (repeat for trainability)")->required();
        s->add_option("--seed", cfg.seed, "64-bit seed");
        s->add_option("--samples", cfg.samples, "number of draws");
        s->add_option("--out", cfg.out_dir, "output directory for CSV files");
        s->add_option("--grid", cfg.grid, "density grid points");
        s->add_option("--threshold-variance-exponent", cfg.threshold_variance_exponent,
                      "largest polylog decay exponent counted as non-vanishing");
        s->add_option("--threshold-cumulant", cfg.threshold_cumulant, "GP third-cumulant threshold");
        s->add_option("--budget", cfg.budget, "simulation budget in samples * dim^3");
        s->callback([&cfg, name = name] { cfg.subcommand = name; });
    }
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return validation_error;
    }
    try {
        if (cfg.subcommand == "analyze") {
            return cmd_analyze(cfg, out);
        }
        if (cfg.subcommand == "sample") {
            return cmd_sample(cfg, out);
        }
        if (cfg.subcommand == "simulate") {
            return cmd_simulate(cfg, out);
        }
        if (cfg.subcommand == "minima") {
            return cmd_minima(cfg, out);
        }
        return cmd_trainability(cfg, out);
    } catch (const BudgetError &e) {
        err << "refused: " << e.what() << '\n';
        return budget_refused;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return validation_error;
    }
}

} // namespace jaws::cli
