// Copyright 2026 The pntlab Authors
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

#include "cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "pntlab/analysis.hpp"
#include "pntlab/decomposition.hpp"
#include "pntlab/identities.hpp"
#include "pntlab/mertens.hpp"
#include "pntlab/progression.hpp"
#include "pntlab/segment_cache.hpp"
#include "report.hpp"

namespace pntlab::cli {

namespace {

using report::Cell;
using report::Table;

constexpr const char* kDefaultMertensCheckpoints = "1e2,1e3,1e4,1e5,1e6,1e7,1e8";
constexpr const char* kDefaultFitCheckpoints = "1e3,1e4,1e5,1e6,1e7";
constexpr const char* kDefaultScanGrid = "1e4:1e8:8";

/// Raw flag text, converted into an ExperimentConfig after CLI11 is done.
struct RawFlags {
    std::string x, q = "1", a = "0", lo = "1", hi, kind = "mobius", segment;
    std::string grid, grid_points = "64", checkpoints, series, input, limit;
    std::string max_n = "1e5", cache, out, format = "csv", threads = "0";
    double B = 3.0, C = 1.5, D = 1.0, epsilon = 0.0;
    bool partial_summation = false;
};

std::unique_ptr<SegmentCache> open_cache(const ExperimentConfig& cfg) {
    const auto dir = resolve_cache_dir(cfg.cache);
    if (dir.empty()) return nullptr;
    return std::make_unique<SegmentCache>(dir);
}

Table psi_table(const ExperimentConfig& cfg) {
    const ProgressionClass cls = parse_class(cfg.q, cfg.a);
    Table t{{"x", "q", "a", "phi_q", "psi", "theta", "pi", "main", "residual"}, {}};
    for (const auto& r : chebyshev_sweep(cfg.x, cls))
        t.add_row({r.x, cls.q(), cls.a(), cls.phi(), r.psi, r.theta, r.pi_count, r.main, r.residual});
    return t;
}

Table pi_table(const ExperimentConfig& cfg) {
    const ProgressionClass cls = parse_class(cfg.q, cfg.a);
    if (!cfg.partial_summation) {
        Table t{{"x", "q", "a", "pi"}, {}};
        for (const auto& r : chebyshev_sweep(cfg.x, cls)) t.add_row({r.x, cls.q(), cls.a(), r.pi_count});
        return t;
    }
    Table t{{"x", "q", "a", "pi", "pi_theta_route", "pi_psi_route", "route_gap", "quadrature_error",
             "grid_points", "converged"},
            {}};
    for (const auto& r : chebyshev_sweep(cfg.x, cls)) {
        const auto est = pi_from_psi(r.x, cls, cfg.grid_points);
        t.add_row({r.x, cls.q(), cls.a(), r.pi_count, est.value, est.psi_route, est.route_gap,
                   est.quadrature_error, est.grid_points, est.converged});
    }
    return t;
}

Table decompose_table(const ExperimentConfig& cfg) {
    const ProgressionClass cls = parse_class(cfg.q, cfg.a);
    Table t{{"x", "q", "a", "psi_exact", "s1_total", "s2_total", "m_paper", "e_paper", "identity_gap",
             "grouping_gap", "main_asymptotic"},
            {}};
    for (const u64 x : cfg.x) {
        const auto r = decompose_psi(x, cls);
        t.add_row({r.x, cls.q(), cls.a(), r.psi_exact, r.s1_total, r.s2_total, r.m_paper, r.e_paper,
                   r.identity_gap, r.grouping_gap, r.main_asymptotic});
    }
    return t;
}

Table mertens_table(const ExperimentConfig& cfg) {
    const auto cache = open_cache(cfg);
    const auto series = mertens_series(cfg.checkpoints, cache.get());
    Table t;
    if (cfg.series == "mu")
        t.columns = {"y", "s_mu"};
    else if (cfg.series == "mulog")
        t.columns = {"y", "s_mulog"};
    else
        t.columns = {"y", "mertens", "s_mu", "s_mulog"};
    for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
        const u64 y = series.checkpoints[i];
        if (cfg.series == "mu")
            t.add_row({y, series.s_mu[i]});
        else if (cfg.series == "mulog")
            t.add_row({y, series.s_mulog[i]});
        else
            t.add_row({y, series.mertens[i], series.s_mu[i], series.s_mulog[i]});
    }
    return t;
}

ScanConfig scan_config(const ExperimentConfig& cfg) {
    ScanConfig sc;
    sc.cls = parse_class(cfg.q, cfg.a);
    sc.x_grid = cfg.grid;
    sc.B = cfg.B;
    sc.C = cfg.C;
    sc.D = cfg.D;
    sc.epsilon = cfg.epsilon;
    return sc;
}

void warn_inadmissible(std::ostream& err, u64 q, const std::vector<u64>& xs) {
    if (xs.empty()) return;
    err << "warning: q=" << q << " exceeds (log x)^C at " << xs.size() << " grid point(s), first x="
        << xs.front() << '\n';
}

Table scan_table(const ExperimentConfig& cfg, std::ostream& err) {
    const ScanConfig sc = scan_config(cfg);
    const ScanTable scan = residual_scan(sc);
    Table t{{"x", "psi", "main", "residual", "sw_norm", "rh_norm", "mont_norm", "q_admissible"}, {}};
    std::vector<u64> flagged;
    for (const auto& r : scan.rows) {
        if (!r.q_admissible) flagged.push_back(r.x);
        t.add_row({r.x, r.psi, r.main, r.residual, r.sw_norm, r.rh_norm, r.mont_norm, r.q_admissible});
    }
    warn_inadmissible(err, sc.cls.q(), flagged);
    return t;
}

Table mobius_scan_table(const ExperimentConfig& cfg, std::ostream& err) {
    const ScanConfig sc = scan_config(cfg);
    const auto cache = open_cache(cfg);
    const MobiusScanTable scan = mobius_residual_scan(sc, cache.get());
    Table t{{"x", "q", "a", "sum", "log_norm", "sqrt_norm", "q_admissible"}, {}};
    std::vector<u64> flagged;
    for (const auto& r : scan.rows) {
        if (!r.q_admissible) flagged.push_back(r.x);
        t.add_row({r.x, sc.cls.q(), sc.cls.a(), r.sum, r.log_norm, r.sqrt_norm, r.q_admissible});
    }
    warn_inadmissible(err, sc.cls.q(), flagged);
    return t;
}

std::vector<SeriesPoint> read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read input file " + path);
    std::vector<SeriesPoint> pts;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw UsageError("input rows must be 'y,value': " + line);
        try {
            pts.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
        } catch (const std::exception&) {
            throw UsageError("input rows must be 'y,value': " + line);
        }
    }
    return pts;
}

Table fit_table(const ExperimentConfig& cfg) {
    std::vector<SeriesPoint> pts;
    double limit = cfg.limit;
    if (!cfg.input.empty()) {
        pts = read_series_csv(cfg.input);
    } else {
        const auto cache = open_cache(cfg);
        const auto series = mertens_series(cfg.checkpoints, cache.get());
        const bool mu = cfg.series == "mu";
        for (std::size_t i = 0; i < series.checkpoints.size(); ++i)
            pts.push_back({static_cast<double>(series.checkpoints[i]),
                           mu ? series.s_mu[i] : series.s_mulog[i]});
        limit = mu ? 0.0 : -1.0;
    }
    const ExponentFit fit = fit_log_exponent(pts, limit);
    Table t{{"y", "value", "gap", "fitted_b", "log_c", "saturated"}, {}};
    for (std::size_t i = 0; i < pts.size(); ++i)
        t.add_row({pts[i].y, pts[i].value, fit.gaps[i], fit.exponent, fit.log_constant, fit.saturated});
    return t;
}

Table sieve_table(const ExperimentConfig& cfg) {
    const auto dir = resolve_cache_dir(cfg.cache);
    if (dir.empty()) throw UsageError("sieve needs a cache directory (--cache or PNTLAB_CACHE)");
    const SegmentKind kind = segment_kind_from_string(cfg.kind);
    SegmentCache cache(dir);
    const auto bounds = segment_boundaries(cfg.lo, cfg.hi, cfg.segment);
    Table t{{"kind", "lo", "hi"}, {}};
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const u64 lo = bounds[i], hi = bounds[i + 1];
        if (kind == SegmentKind::mobius)
            cache.store(sieve_mobius(lo, hi));
        else
            cache.store(sieve_mangoldt(lo, hi));
        t.add_row({to_string(kind), lo, hi});
    }
    return t;
}

int identities_command(const ExperimentConfig& cfg, std::ostream& out) {
    const IdentityReport r = verify_identities(cfg.max_n);
    constexpr double kTolerance = 1e-9;
    const double worst = std::max(r.max_inversion_gap, r.max_split_gap);
    if (worst < kTolerance) {
        out << "checked " << r.checked << ", max |gap| < 1e-9\n";
    } else {
        out << "checked " << r.checked << ", max |gap| = " << report::format_double(worst) << '\n';
    }
    out << "inversion_max_gap=" << report::format_double(r.max_inversion_gap)
        << " split_max_gap=" << report::format_double(r.max_split_gap) << '\n';
    return worst < kTolerance ? 0 : 1;
}

ExperimentConfig build_config(const std::string& command, const RawFlags& f) {
    ExperimentConfig cfg;
    cfg.command = command;
    if (!f.x.empty()) cfg.x = parse_threshold_list(f.x);
    for (std::size_t i = 1; i < cfg.x.size(); ++i)
        if (cfg.x[i] < cfg.x[i - 1]) throw UsageError("--x values must be ascending");
    cfg.q = parse_threshold(f.q);
    cfg.a = parse_threshold(f.a);
    cfg.lo = parse_threshold(f.lo);
    if (!f.hi.empty()) cfg.hi = parse_threshold(f.hi);
    cfg.kind = f.kind;
    cfg.segment = f.segment.empty() ? kSegmentLength : parse_threshold(f.segment);
    cfg.grid_points = parse_threshold(f.grid_points);
    cfg.partial_summation = f.partial_summation;
    cfg.B = f.B;
    cfg.C = f.C;
    cfg.D = f.D;
    cfg.epsilon = f.epsilon;
    cfg.series = f.series;
    cfg.input = f.input;
    if (!f.limit.empty()) cfg.limit = std::stod(f.limit);
    cfg.max_n = parse_threshold(f.max_n);
    cfg.cache = f.cache;
    cfg.out = f.out;
    cfg.format = f.format;
    cfg.threads = static_cast<unsigned>(parse_threshold(f.threads));

    if (command == "scan" || command == "mobius-scan")
        cfg.grid = parse_grid(f.grid.empty() ? kDefaultScanGrid : f.grid);
    if (command == "mertens" || command == "fit") {
        if (cfg.series.empty()) cfg.series = command == "fit" ? "mulog" : "both";
        const char* fallback = command == "fit" ? kDefaultFitCheckpoints : kDefaultMertensCheckpoints;
        cfg.checkpoints = parse_threshold_list(f.checkpoints.empty() ? fallback : f.checkpoints);
        for (std::size_t i = 0; i < cfg.checkpoints.size(); ++i) {
            if (cfg.checkpoints[i] < 1) throw UsageError("checkpoints must be >= 1");
            if (i > 0 && cfg.checkpoints[i] <= cfg.checkpoints[i - 1])
                throw UsageError("checkpoints must be strictly ascending");
        }
    }

    // Validation that needs no computation happens here, so bad input exits 2.
    if (command == "psi" || command == "pi" || command == "decompose") {
        if (cfg.x.empty()) throw UsageError("--x is required");
        for (const u64 x : cfg.x)
            if (x > range_cap()) throw UsageError("x=" + std::to_string(x) + " exceeds the range cap");
    }
    if (command == "decompose" || command == "scan" || command == "mobius-scan" || command == "psi" ||
        command == "pi")
        parse_class(cfg.q, cfg.a);
    if (command == "decompose")
        for (const u64 x : cfg.x)
            if (x < 1) throw UsageError("decompose needs x >= 1");
    if (command == "pi" && cfg.partial_summation) {
        if (cfg.grid_points < 16) throw UsageError("--grid-points must be >= 16");
        for (const u64 x : cfg.x)
            if (x < 3) throw UsageError("partial summation needs x >= 3");
    }
    if (command == "sieve") {
        if (cfg.hi == 0) throw UsageError("--hi is required");
        if (cfg.lo < 1 || cfg.lo >= cfg.hi) throw UsageError("sieve needs 1 <= lo < hi");
        if (cfg.hi > range_cap()) throw UsageError("--hi exceeds the range cap");
        if (cfg.segment == 0) throw UsageError("--segment must be positive");
        if (cfg.kind != "mobius" && cfg.kind != "mangoldt")
            throw UsageError("--kind must be mobius or mangoldt");
    }
    if (command == "fit" && !cfg.input.empty() && f.limit.empty())
        throw UsageError("fit --input requires --limit");
    if (cfg.max_n < 1 && command == "identities") throw UsageError("--max-n must be >= 1");
    return cfg;
}

void add_output_flags(CLI::App* sub, RawFlags& f) {
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", f.out, "Output file (default: stdout)");
    sub->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
    sub->add_option("--cache", f.cache, "Segment cache directory (overrides PNTLAB_CACHE)");
}

void add_class_flags(CLI::App* sub, RawFlags& f) {
    sub->add_option("--q", f.q, "Modulus q");
    sub->add_option("--a", f.a, "Residue a, gcd(a, q) = 1");
}

void add_scan_flags(CLI::App* sub, RawFlags& f) {
    add_class_flags(sub, f);
    sub->add_option("--grid", f.grid, "Thresholds: comma list or lo:hi:per_decade");
    sub->add_option("--B", f.B, "Siegel-Walfisz exponent B");
    sub->add_option("--C", f.C, "Modulus exponent C, q <= (log x)^C");
    sub->add_option("--D", f.D, "Mobius sum exponent D");
    sub->add_option("--epsilon", f.epsilon, "Montgomery exponent epsilon");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"pntlab: sieves, Chebyshev sums and residual scans for primes in progressions"};
    app.set_version_flag("--version", std::string("pntlab ") + kVersion);
    app.require_subcommand(1);
    RawFlags f;

    auto* sieve = app.add_subcommand("sieve", "Populate the segment cache");
    sieve->add_option("--lo", f.lo, "First n (inclusive)");
    sieve->add_option("--hi", f.hi, "Last n (exclusive)")->required();
    sieve->add_option("--kind", f.kind, "mobius or mangoldt");
    sieve->add_option("--segment", f.segment, "Numbers per segment file");

    auto* psi = app.add_subcommand("psi", "Exact psi, theta and pi over a residue class");
    psi->add_option("--x", f.x, "Threshold(s), comma separated")->required();
    add_class_flags(psi, f);

    auto* pi = app.add_subcommand("pi", "Prime counts over a residue class");
    pi->add_option("--x", f.x, "Threshold(s), comma separated")->required();
    add_class_flags(pi, f);
    pi->add_flag("--partial-summation", f.partial_summation, "Also recover pi from theta and psi");
    pi->add_option("--grid-points", f.grid_points, "Initial quadrature grid size");

    auto* decompose = app.add_subcommand("decompose", "Main/error-term decomposition of psi");
    decompose->add_option("--x", f.x, "Threshold(s), comma separated")->required();
    add_class_flags(decompose, f);

    auto* mertens = app.add_subcommand("mertens", "Partial sums of mu(n)/n and mu(n)log(n)/n");
    mertens->add_option("--checkpoints", f.checkpoints, "Ascending y values");
    mertens->add_option("--series", f.series, "mu, mulog or both")
        ->check(CLI::IsMember({"mu", "mulog", "both"}));

    auto* mobius_scan = app.add_subcommand("mobius-scan", "Mobius sums over a residue class");
    add_scan_flags(mobius_scan, f);

    auto* scan = app.add_subcommand("scan", "Normalized psi residuals over a grid");
    add_scan_flags(scan, f);

    auto* fit = app.add_subcommand("fit", "Fit the log-power decay of a series gap");
    fit->add_option("--checkpoints", f.checkpoints, "Ascending y values");
    fit->add_option("--series", f.series, "mu or mulog")->check(CLI::IsMember({"mu", "mulog"}));
    fit->add_option("--input", f.input, "CSV file with header and rows y,value");
    fit->add_option("--limit", f.limit, "Limit value for --input series");

    auto* identities = app.add_subcommand("identities", "Check the divisor-sum identities for Lambda");
    identities->add_option("--max-n", f.max_n, "Check every n <= max-n");

    for (auto* sub : {sieve, psi, pi, decompose, mertens, mobius_scan, scan, fit, identities})
        add_output_flags(sub, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    ExperimentConfig cfg;
    try {
        cfg = build_config(command, f);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    set_worker_threads(cfg.threads);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open output file " << cfg.out << '\n';
            return 1;
        }
        sink = &file;
    }

    try {
        if (command == "identities") return identities_command(cfg, *sink);
        Table table;
        if (command == "psi") table = psi_table(cfg);
        else if (command == "pi") table = pi_table(cfg);
        else if (command == "decompose") table = decompose_table(cfg);
        else if (command == "mertens") table = mertens_table(cfg);
        else if (command == "mobius-scan") table = mobius_scan_table(cfg, err);
        else if (command == "scan") table = scan_table(cfg, err);
        else if (command == "fit") table = fit_table(cfg);
        else if (command == "sieve") table = sieve_table(cfg);

        std::ostringstream buf;
        if (cfg.format == "json")
            report::write_json(buf, table, to_json(cfg));
        else
            report::write_csv(buf, table);
        *sink << buf.str();
        sink->flush();
        if (!*sink) {
            err << "error: failed writing output\n";
            return 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"pntlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pntlab::cli
