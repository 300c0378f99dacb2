// qshannon: Shannon entropies and mutual information of quasiparticle
// states on periodic chains. Single-point computation, parameter
// sweeps, and figure-data CSV export.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "qshannon/boson.hpp"
#include "qshannon/classical.hpp"
#include "qshannon/entropy.hpp"
#include "qshannon/fermion.hpp"
#include "qshannon/number_dist.hpp"
#include "qshannon/sigma_x.hpp"
#include "qshannon/xxx.hpp"

namespace {

using namespace qshannon;

constexpr int kExitOk = 0;
constexpr int kExitParameter = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

struct Options {
    std::string model;
    std::string state;
    std::string mode = "exact";
    std::int64_t L = 0;
    std::int64_t ell = 0;
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
    bool k1_set = false, k2_set = false;
    std::int64_t I1 = 0, I2 = 0;
    bool I1_set = false, I2_set = false;
    std::int64_t I = 0;
    bool I_set = false;
    std::int64_t r = 0;
    std::string core = "soft";
    std::vector<std::int64_t> species;
    std::string sweep;
    std::string format = "csv";
    std::string out;
    int threads = 0;
    double tol = 1e-9;
    int max_L_sigmax = 30;
    int figure = 0;
};

struct Row {
    double sweep_value = std::numeric_limits<double>::quiet_NaN();
    double x = std::numeric_limits<double>::quiet_NaN();
    EntropyReport report{};
    bool ok = false;
    std::string error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ----- point evaluation ------------------------------------------------

EvalMode parse_mode(const std::string& mode, const std::string& state) {
    if (mode == "u_zero" && state == "caseIIIb") return EvalMode::scaling;
    return eval_mode_from_string(mode);
}

ChainGeometry require_geometry(const Options& o) {
    if (o.L < 2) throw domain_error("--L must be >= 2");
    if (o.ell < 1) throw domain_error("--ell is required for this state");
    return ChainGeometry(o.L, o.ell);
}

MomentumPair require_pair(const Options& o) {
    if (o.L < 2) throw domain_error("--L must be >= 2");
    if (!o.k1_set && !o.k2_set) throw domain_error("--k1/--k2 are required for this state");
    return MomentumPair(o.k1, o.k2, o.L);
}

EntropyReport eval_xxx(const Options& o, EvalMode mode) {
    if (o.state == "caseI") return xxx::case_I_report(require_geometry(o), mode);
    if (o.state == "magnon") return xxx::single_magnon_report(require_geometry(o));
    if (o.state == "caseII") {
        if (!o.I1_set || !o.I2_set) throw domain_error("--I1/--I2 are required for caseII");
        if (mode != EvalMode::exact)
            throw domain_error("caseII supports --mode exact (use the free-chain scaling "
                               "formulas for its limits)");
        const auto sol = xxx::solve_case_II(o.L, o.I1, o.I2);
        if (sol.residual > o.tol)
            throw convergence_error("caseII: Bethe residual above --tol", sol.residual);
        return xxx::case_II_report(require_geometry(o), sol);
    }
    if (o.state == "caseIIIa" || o.state == "caseIIIb") {
        if (!o.I_set) throw domain_error("--I is required for " + o.state);
        const auto sol = o.state == "caseIIIa" ? xxx::case_IIIa_params(o.L, o.I)
                                               : xxx::case_IIIb_params(o.L, o.I);
        const auto geom = require_geometry(o);
        return o.state == "caseIIIa" ? xxx::case_IIIa_report(geom, sol, mode)
                                     : xxx::case_IIIb_report(geom, sol, mode);
    }
    throw domain_error("unknown xxx state: " + o.state);
}

EntropyReport eval_classical(const Options& o, EvalMode mode) {
    if (o.state == "r-identical") {
        if (o.r < 1) throw domain_error("--r is required for r-identical");
        const auto core = classical::core_from_string(o.core);
        if (mode == EvalMode::exact) {
            const auto geom = require_geometry(o);
            if (o.r == 1) return classical::one_particle_report(geom, mode);
            if (o.r == 2) return classical::two_identical_report(geom, core, mode);
            throw domain_error("exact tables exist for r <= 2; use --mode scaling");
        }
        if (mode == EvalMode::scaling) {
            const auto geom = require_geometry(o);
            return classical::r_identical_scaling_report(geom.x(), o.L, o.r);
        }
        throw domain_error("classical modes: exact | scaling");
    }
    if (o.state == "multi-species") {
        if (o.species.empty()) throw domain_error("--species is required for multi-species");
        const auto core = classical::core_from_string(o.core);
        const auto geom = require_geometry(o);
        if (mode == EvalMode::exact) {
            if (o.species.size() == 2 && o.species[0] == 1 && o.species[1] == 1)
                return classical::two_distinguishable_report(geom, core, mode);
            if (o.species.size() == 1) {
                Options sub = o;
                sub.state = "r-identical";
                sub.r = o.species[0];
                return eval_classical(sub, mode);
            }
            throw domain_error("exact multi-species tables exist for species 1,1 only");
        }
        if (mode == EvalMode::scaling)
            return classical::multi_species_scaling_report(
                geom.x(), o.L, classical::ClassicalConfig{core, o.species});
        throw domain_error("classical modes: exact | scaling");
    }
    throw domain_error("unknown classical state: " + o.state);
}

EntropyReport eval_sigmax(const Options& o) {
    if (o.state == "ground") {
        // H(L) is ell-independent here; default A to half the chain.
        const std::int64_t ell = o.ell >= 1 ? o.ell : std::max<std::int64_t>(1, o.L / 2);
        return sigma_x::ground_state_report(ChainGeometry(o.L, ell));
    }
    if (o.state == "magnon") {
        if (!o.I_set) throw domain_error("--I is required for sigmax magnon");
        const auto geom = require_geometry(o);
        sigma_x::EnumerationOptions opts;
        opts.max_sites = o.max_L_sigmax;
        opts.threads = o.threads;
        const bool special = o.I == 0 || (o.L % 2 == 0 && o.I == o.L / 2);
        if (special && o.L > o.max_L_sigmax) {
            // Closed binomial forms: exact for I = 0 and L/2 at any L.
            const double ht = sigma_x::special_I_total_entropy(o.L, o.I);
            const double hs = sigma_x::special_I_sub_closed_form(geom, o.I);
            const double hc = sigma_x::special_I_sub_closed_form(geom.complement(), o.I);
            return make_report(ht, hs, hc, EvalMode::exact);
        }
        return sigma_x::magnon_report(geom, o.I, opts);
    }
    throw domain_error("unknown sigmax state: " + o.state);
}

EntropyReport eval_numdist(const Options& o) {
    const auto geom = require_geometry(o);
    if (o.state == "classical") {
        const std::int64_t R = o.r > 0 ? o.r : 2;
        const double hs = number_dist::classical_binomial_entropy(R, geom.x());
        const double hc = number_dist::classical_binomial_entropy(R, 1.0 - geom.x());
        return make_report(0.0, hs, hc, EvalMode::exact);
    }
    const auto pair = require_pair(o);
    const auto probs = o.state == "bos" ? number_dist::boson_number_probs(geom, pair)
                       : o.state == "fer"
                           ? number_dist::fermion_number_probs(geom, pair)
                           : throw domain_error("numdist states: bos | fer | classical");
    const auto comp = o.state == "bos"
                          ? number_dist::boson_number_probs(geom.complement(), pair)
                          : number_dist::fermion_number_probs(geom.complement(), pair);
    // The total particle count is deterministic, so H_total = 0 and
    // MI = H(count in A) + H(count in B).
    return make_report(0.0, number_dist::number_entropy(probs),
                       number_dist::number_entropy(comp), EvalMode::exact);
}

EntropyReport evaluate(const Options& o) {
    const EvalMode mode = parse_mode(o.mode, o.state);
    if (o.model == "bos") {
        if (o.state == "k") return boson::single_particle_report(require_geometry(o));
        if (o.state == "k2") return boson::kk_report(require_geometry(o), mode);
        if (o.state == "k1k2")
            return boson::k1k2_report(require_geometry(o), require_pair(o), mode);
        throw domain_error("unknown bos state: " + o.state);
    }
    if (o.model == "fer") {
        if (o.state == "k") return fermion::single_particle_report(require_geometry(o));
        if (o.state == "k1k2")
            return fermion::k1k2_report(require_geometry(o), require_pair(o), mode);
        throw domain_error("unknown fer state: " + o.state);
    }
    if (o.model == "xxx") return eval_xxx(o, mode);
    if (o.model == "classical") return eval_classical(o, mode);
    if (o.model == "sigmax") return eval_sigmax(o);
    if (o.model == "numdist") return eval_numdist(o);
    throw domain_error("unknown model: " + o.model +
                       " (expected bos|fer|xxx|classical|sigmax|numdist)");
}

// ----- sweeps -----------------------------------------------------------

struct SweepAxis {
    std::string axis;
    double lo, hi, step;
};

SweepAxis parse_sweep(const std::string& text) {
    SweepAxis s;
    std::stringstream ss(text);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() != 4)
        throw domain_error("--sweep expects <axis:lo:hi:step>, got '" + text + "'");
    s.axis = parts[0];
    s.lo = std::stod(parts[1]);
    s.hi = std::stod(parts[2]);
    s.step = std::stod(parts[3]);
    if (s.step <= 0) throw domain_error("--sweep step must be > 0");
    if (s.axis != "ell" && s.axis != "k12" && s.axis != "I" && s.axis != "n" && s.axis != "x")
        throw domain_error("--sweep axis must be one of ell|k12|I|n|x");
    return s;
}

Options apply_axis(const Options& base, const SweepAxis& axis, double value) {
    Options o = base;
    if (axis.axis == "ell") {
        o.ell = static_cast<std::int64_t>(std::llround(value));
    } else if (axis.axis == "k12") {
        o.k1 = static_cast<std::int64_t>(std::llround(value));
        o.k2 = 0;
        o.k1_set = o.k2_set = true;
    } else if (axis.axis == "I") {
        const auto iv = static_cast<std::int64_t>(std::llround(value));
        if (base.model == "xxx" && base.state == "caseII") {
            o.I2 = iv;
            o.I2_set = true;
        } else {
            o.I = iv;
            o.I_set = true;
        }
    } else if (axis.axis == "n") {
        // Exceptional-mode sweep over the denominator n with m = 1;
        // the value enters through an explicit exceptional evaluation.
        o.I = static_cast<std::int64_t>(std::llround(value));  // stored for reporting
    }
    return o;
}

EntropyReport evaluate_exceptional_n(const Options& o, std::int64_t n) {
    const ExceptionalMomentum exc(1, n);
    const auto geom = require_geometry(o);
    const double x = geom.x();
    const bool bos = o.model == "bos";
    const double ht = bos ? boson::exceptional_total_entropy(o.L, exc)
                          : fermion::exceptional_total_entropy(o.L, exc);
    const double hs = bos ? boson::exceptional_sub_entropy(o.L, x, exc)
                          : fermion::exceptional_sub_entropy(o.L, x, exc);
    const double hc = bos ? boson::exceptional_sub_entropy(o.L, 1.0 - x, exc)
                          : fermion::exceptional_sub_entropy(o.L, 1.0 - x, exc);
    return make_report(ht, hs, hc, EvalMode::exceptional);
}

EntropyReport evaluate_at_x(const Options& o, double x) {
    // Closed-form modes parameterized by the ratio alone.
    const EvalMode mode = parse_mode(o.mode, o.state);
    if (o.model == "bos" || o.model == "fer") {
        const bool bos = o.model == "bos";
        if (mode == EvalMode::universal) {
            const double ht = boson::universal_total_entropy(o.L);
            const double hs = boson::universal_sub_entropy(o.L, x);
            const double hc = boson::universal_sub_entropy(o.L, 1.0 - x);
            return make_report(ht, hs, hc, mode);
        }
        if (mode == EvalMode::exceptional) {
            const auto exc = ExceptionalMomentum::from_pair(require_pair(o), o.L);
            const double ht = bos ? boson::exceptional_total_entropy(o.L, exc)
                                  : fermion::exceptional_total_entropy(o.L, exc);
            const double hs = bos ? boson::exceptional_sub_entropy(o.L, x, exc)
                                  : fermion::exceptional_sub_entropy(o.L, x, exc);
            const double hc = bos ? boson::exceptional_sub_entropy(o.L, 1.0 - x, exc)
                                  : fermion::exceptional_sub_entropy(o.L, 1.0 - x, exc);
            return make_report(ht, hs, hc, mode);
        }
        throw domain_error("x sweeps need --mode universal or exceptional for free chains");
    }
    if (o.model == "classical") {
        if (o.state == "r-identical")
            return classical::r_identical_scaling_report(x, o.L, o.r);
        if (o.state == "multi-species")
            return classical::multi_species_scaling_report(
                x, o.L,
                classical::ClassicalConfig{classical::core_from_string(o.core), o.species});
    }
    if (o.model == "xxx" && (o.state == "caseIIIa" || o.state == "caseIIIb")) {
        if (!o.I_set) throw domain_error("--I is required for " + o.state);
        const auto sol = o.state == "caseIIIa" ? xxx::case_IIIa_params(o.L, o.I)
                                               : xxx::case_IIIb_params(o.L, o.I);
        const std::int64_t ell = std::clamp<std::int64_t>(
            static_cast<std::int64_t>(std::llround(x * static_cast<double>(o.L))), 1, o.L - 1);
        const ChainGeometry geom(o.L, ell);
        if (mode == EvalMode::tight) return xxx::tight_report(geom, sol.v);
        if (mode == EvalMode::loose)
            return o.state == "caseIIIa" ? xxx::loose_IIIa_report(geom, sol.u)
                                         : xxx::loose_IIIb_report(geom, sol.u);
        throw domain_error("x sweeps for bound states need --mode tight or loose");
    }
    throw domain_error("x sweep is not defined for this model/state/mode");
}

std::vector<Row> run_sweep(const Options& base, const SweepAxis& axis) {
    std::vector<double> values;
    for (double v = axis.lo; v <= axis.hi + 1e-9 * std::max(1.0, std::abs(axis.hi));
         v += axis.step)
        values.push_back(v);
    if (values.empty()) throw domain_error("--sweep range is empty");

    std::vector<Row> rows(values.size());
    const auto eval_one = [&](std::size_t i) {
        Row& row = rows[i];
        row.sweep_value = values[i];
        try {
            Options o = apply_axis(base, axis, values[i]);
            EntropyReport rep;
            if (axis.axis == "n")
                rep = evaluate_exceptional_n(o, static_cast<std::int64_t>(std::llround(values[i])));
            else if (axis.axis == "x")
                rep = evaluate_at_x(o, values[i]);
            else
                rep = evaluate(o);
            row.report = rep;
            row.x = axis.axis == "x" ? values[i]
                                     : (o.ell > 0 && o.L > 0 ? static_cast<double>(o.ell) /
                                                                   static_cast<double>(o.L)
                                                             : std::numeric_limits<double>::quiet_NaN());
            row.ok = true;
        } catch (const std::exception& err) {
            row.ok = false;
            row.error = err.what();
        }
    };

    int threads = base.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(values.size())));

    if (threads == 1) {
        for (std::size_t i = 0; i < values.size(); ++i) eval_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= rows.size()) return;
                    eval_one(i);
                }
            });
        for (auto& t : pool) t.join();
    }
    return rows;
}

// ----- output -----------------------------------------------------------

void write_csv(std::ostream& os, const Options& o, const std::vector<Row>& rows,
               const std::string& axis_name) {
    os << "# qshannon,v1," << o.model << "," << o.state << "," << o.mode << "\n";
    os << axis_name << ",x,H_total,H_sub,H_comp,MI,mode,error\n";
    for (const Row& r : rows) {
        os << (std::isnan(r.sweep_value) ? "" : fmt(r.sweep_value)) << ","
           << (std::isnan(r.x) ? "" : fmt(r.x)) << ",";
        if (r.ok)
            os << fmt(r.report.H_total) << "," << fmt(r.report.H_sub) << ","
               << fmt(r.report.H_complement) << "," << fmt(r.report.MI) << ","
               << to_string(r.report.mode) << ",";
        else
            os << ",,,,,\"" << r.error << "\"";
        os << "\n";
    }
}

void write_json(std::ostream& os, const Options& o, const std::vector<Row>& rows,
                const std::string& axis_name) {
    nlohmann::json params;
    params["model"] = o.model;
    params["state"] = o.state;
    params["mode"] = o.mode;
    params["L"] = o.L;
    if (o.ell > 0) params["ell"] = o.ell;
    if (o.k1_set) params["k1"] = o.k1;
    if (o.k2_set) params["k2"] = o.k2;
    if (o.I1_set) params["I1"] = o.I1;
    if (o.I2_set) params["I2"] = o.I2;
    if (o.I_set) params["I"] = o.I;
    if (o.r > 0) params["r"] = o.r;
    nlohmann::json jrows = nlohmann::json::array();
    for (const Row& r : rows) {
        nlohmann::json jr;
        if (!std::isnan(r.sweep_value)) jr[axis_name] = r.sweep_value;
        if (!std::isnan(r.x)) jr["x"] = r.x;
        if (r.ok) {
            jr["H_total"] = r.report.H_total;
            jr["H_sub"] = r.report.H_sub;
            jr["H_comp"] = r.report.H_complement;
            jr["MI"] = r.report.MI;
            jr["mode"] = to_string(r.report.mode);
        } else {
            jr["error"] = r.error;
        }
        jrows.push_back(jr);
    }
    nlohmann::json doc;
    doc["params"] = params;
    doc["rows"] = jrows;
    os << doc.dump(2) << "\n";
}

int emit(const Options& o, const std::vector<Row>& rows, const std::string& axis_name) {
    std::ostringstream body;
    if (o.format == "json")
        write_json(body, o, rows, axis_name);
    else if (o.format == "csv")
        write_csv(body, o, rows, axis_name);
    else
        throw domain_error("--format must be csv or json");
    if (o.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream file(o.out);
        if (!file) {
            std::cerr << "qshannon: cannot open " << o.out << " for writing\n";
            return kExitIo;
        }
        file << body.str();
        if (!file.good()) return kExitIo;
    }
    return kExitOk;
}

// ----- figures ----------------------------------------------------------

#include "figures.inc"

// ----- entry ------------------------------------------------------------

int run(const Options& o) {
    if (o.figure != 0) return run_figure(o);
    if (!o.sweep.empty()) {
        const SweepAxis axis = parse_sweep(o.sweep);
        const std::vector<Row> rows = run_sweep(o, axis);
        bool any_ok = false;
        for (const Row& r : rows) any_ok = any_ok || r.ok;
        const int rc = emit(o, rows, axis.axis);
        if (rc != kExitOk) return rc;
        if (!any_ok) {
            std::cerr << "qshannon: every sweep point failed; first error: " << rows[0].error
                      << "\n";
            return kExitParameter;
        }
        return kExitOk;
    }
    Row row;
    row.report = evaluate(o);
    row.ok = true;
    row.sweep_value = static_cast<double>(o.L);
    row.x = o.ell > 0 && o.L > 0
                ? static_cast<double>(o.ell) / static_cast<double>(o.L)
                : std::numeric_limits<double>::quiet_NaN();
    return emit(o, {row}, "L");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{
        "Shannon entropy of the total system, a connected subsystem, and the subsystem "
        "mutual information in quasiparticle states of free bosonic/fermionic chains, the "
        "spin-1/2 XXX chain, classical-particle baselines, subsystem particle-number "
        "distributions, and the sigma-x basis."};
    app.add_option("--model", o.model, "bos | fer | xxx | classical | sigmax | numdist");
    app.add_option("--state", o.state,
                   "k | k2 | k1k2 | caseI | caseII | caseIIIa | caseIIIb | magnon | ground | "
                   "r-identical | multi-species | bos | fer | classical (numdist)");
    app.add_option("--mode", o.mode,
                   "exact | scaling | universal | exceptional | tight | loose | u_zero");
    app.add_option("--L", o.L, "chain length");
    app.add_option("--ell", o.ell, "subsystem length");
    app.add_option("--k1", o.k1, "first momentum")->each([&](const std::string&) {
        o.k1_set = true;
    });
    app.add_option("--k2", o.k2, "second momentum")->each([&](const std::string&) {
        o.k2_set = true;
    });
    app.add_option("--I1", o.I1, "first Bethe number (caseII)")->each([&](const std::string&) {
        o.I1_set = true;
    });
    app.add_option("--I2", o.I2, "second Bethe number (caseII)")->each([&](const std::string&) {
        o.I2_set = true;
    });
    app.add_option("--I", o.I, "total Bethe number (caseIIIa/b, sigmax magnon)")
        ->each([&](const std::string&) { o.I_set = true; });
    app.add_option("--r", o.r, "particle count (classical r-identical, numdist classical)");
    app.add_option("--core", o.core, "soft | hard (classical)");
    app.add_option("--species", o.species, "species multiplicities (classical multi-species)")
        ->delimiter(',');
    app.add_option("--sweep", o.sweep, "axis:lo:hi:step with axis in ell|k12|I|n|x");
    app.add_option("--format", o.format, "csv | json");
    app.add_option("--out", o.out, "output path (figure mode: output directory)");
    app.add_option("--threads", o.threads,
                   "worker threads for sweeps and sigma-x (0 = auto; env QSHANNON_THREADS)");
    app.add_option("--tol", o.tol, "acceptance threshold for the case II Bethe residual");
    app.add_option("--max-L-sigmax", o.max_L_sigmax, "sigma-x enumeration ceiling (sites)");
    app.add_option("--figure", o.figure, "emit the CSV data set for one figure id (2..10)");

    CLI11_PARSE(app, argc, argv);

    if (o.threads <= 0) {
        if (const char* env = std::getenv("QSHANNON_THREADS")) o.threads = std::atoi(env);
    }

    try {
        return run(o);
    } catch (const convergence_error& err) {
        std::cerr << "qshannon: " << err.what() << "\n";
        return kExitConvergence;
    } catch (const domain_error& err) {
        std::cerr << "qshannon: " << err.what() << "\n";
        return kExitParameter;
    } catch (const std::exception& err) {
        std::cerr << "qshannon: " << err.what() << "\n";
        return kExitParameter;
    }
}
