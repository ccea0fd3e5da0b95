// Copyright 2026 The majent Authors
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

#include "majent/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "majent/bounds.hpp"
#include "majent/detectors.hpp"
#include "majent/entropy.hpp"
#include "majent/state_io.hpp"

namespace majent::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

template <typename Range>
std::string join(const Range& values) {
    std::string s;
    for (double x : values) {
        if (!s.empty()) s += ' ';
        s += fmt(x);
    }
    return s;
}

std::string dims_text(const Dims& dims) {
    std::string s;
    for (int d : dims) {
        if (!s.empty()) s += 'x';
        s += std::to_string(d);
    }
    return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

int to_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad " + what + ": '" + s + "'");
    return v;
}

double to_double(const std::string& s, const std::string& what) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad " + what + ": '" + s + "'");
    return v;
}

struct WernerArg {
    int d;
    double q;
};

// "d=<d>,q=<q>" or "<d>,<q>".
WernerArg parse_werner(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw UsageError("--werner expects d=<d>,q=<q>");
    auto value = [](const std::string& part, const std::string& key) {
        if (part.rfind(key + "=", 0) == 0) return part.substr(key.size() + 1);
        return part;
    };
    return {to_int(value(parts[0], "d"), "d"), to_double(value(parts[1], "q"), "q")};
}

// "<a>..<b>" or "<n>".
std::vector<int> parse_d_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {to_int(text, "d")};
    const int a = to_int(text.substr(0, dots), "d");
    const int b = to_int(text.substr(dots + 2), "d");
    if (a > b) throw UsageError("empty --d range");
    std::vector<int> ds;
    for (int d = a; d <= b; ++d) ds.push_back(d);
    return ds;
}

std::vector<double> parse_orders(const std::string& text) {
    std::vector<double> orders;
    for (const auto& part : split(text, ',')) orders.push_back(to_double(part, "order"));
    if (orders.empty()) throw UsageError("--orders is empty");
    return orders;
}

Dims parse_dims(const std::string& text) {
    Dims dims;
    for (const auto& part : split(text, ',')) dims.push_back(to_int(part, "dimension"));
    return dims;
}

struct Options {
    std::string detector;
    std::string measurement;
    std::string measurement_file;
    std::string state_path;
    std::string werner;
    std::string d_range = "2..8";
    std::string orders = "1,2,5,inf";
    std::string dims;
    std::string out_path;
    std::uint64_t seed = OptimizerConfig{}.seed;
    int restarts = OptimizerConfig{}.restarts;
    std::optional<double> tol;
    bool separable = false;

    OptimizerConfig optimizer() const {
        OptimizerConfig cfg;
        cfg.seed = seed;
        cfg.restarts = restarts;
        cfg.validate();
        return cfg;
    }
};

DensityMatrix load_input(const Options& opt) {
    if (opt.state_path.empty() == opt.werner.empty()) throw UsageError("give exactly one of --state and --werner");
    if (!opt.state_path.empty()) return load_state(opt.state_path);
    const auto w = parse_werner(opt.werner);
    return werner(w.d, w.q);
}

int square_side(const DensityMatrix& sigma) {
    const Dims& dims = sigma.dims();
    if (dims.size() != 2 || dims[0] != dims[1]) {
        throw UsageError("the Bell measurement needs a d x d state, got " + dims_text(dims));
    }
    return dims[0];
}

Povm file_measurement(const Options& opt) {
    if (opt.measurement_file.empty()) throw UsageError("--measurement file needs --measurement-file <path>");
    return load_povm(opt.measurement_file);
}

void write_verdict(std::ostream& os, const Verdict& v) {
    os << "lhs: " << join(v.lhs) << '\n';
    os << "rhs: " << join(v.rhs) << '\n';
    os << "verdict: " << to_string(v.status) << '\n';
    if (v.violated_index) {
        os << "violated at index " << *v.violated_index << ", margin " << fmt(v.margin) << '\n';
    } else {
        os << "margin " << fmt(v.margin) << '\n';
    }
}

Verdict run_detect(const Options& opt, std::ostream& os) {
    const std::string& det = opt.detector;
    const bool corollary = det.size() > 2 && det[0] == 'c' && det[2] == ':';
    if (!(det == "t1" || det == "t2" || det == "t3" || corollary) || det[1] < '1' || det[1] > '3') {
        throw UsageError("unknown detector '" + det + "' (expected t1, t2, t3, c1:<m>, c2:<m>, c3:<m>)");
    }
    const int theorem = det[1] - '0';
    std::optional<EntropyMeasure> g;
    if (corollary) {
        try {
            g = EntropyMeasure::parse(det.substr(3));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    const DensityMatrix sigma = load_input(opt);
    os << "detector: " << det << '\n';
    os << "dims: " << dims_text(sigma.dims()) << '\n';
    if (g) os << "measure: " << g->name() << '\n';

    Verdict v;
    if (theorem == 1) {
        const std::string meas = opt.measurement.empty() ? "bell" : opt.measurement;
        std::optional<Povm> m;
        std::optional<ProbVec> bound;
        double tol = kTolOptimizer;
        if (meas == "bell") {
            const int d = square_side(sigma);
            m = bell_measurement(d);
            bound = bell_separable_bound(d);
            tol = kTolAnalytic;
        } else if (meas == "eigenbasis") {
            m = optimal_measurement(sigma);
        } else if (meas == "file") {
            m = file_measurement(opt);
            if (m->dim() != sigma.dim()) throw UsageError("measurement and state dimensions differ");
        } else {
            throw UsageError("t1 supports --measurement bell, eigenbasis or file");
        }
        os << "measurement: " << meas << '\n';
        if (!bound) {
            const auto cfg = opt.optimizer();
            bound = sup_separable(MeasurementSet({*m}, sigma.dims()), cfg).bound;
            os << "bound: optimizer (restarts " << cfg.restarts << ", seed " << cfg.seed << ")\n";
        } else {
            os << "bound: analytic\n";
        }
        tol = opt.tol.value_or(tol);
        const ProbVec lhs = born_probs(*m, sigma);
        v = g ? corollary_detect(*g, std::span(&lhs, 1), *bound, Corollary::C1, tol)
              : majorization_verdict(lhs, *bound, tol);
    } else if (theorem == 2) {
        if (!opt.measurement.empty() && opt.measurement != "pauli3") {
            throw UsageError("t2 supports --measurement pauli3 only");
        }
        if (sigma.dims() != Dims{2, 2}) throw UsageError("t2 with pauli3 needs a 2x2 state");
        os << "measurement: pauli3\nbound: analytic\n";
        const auto pairs = pauli_pairs();
        const double tol = opt.tol.value_or(kTolAnalytic);
        if (g) {
            std::vector<ProbVec> parts;
            for (const auto& pair : pairs) parts.push_back(product_statistics(sigma, std::span(&pair, 1)));
            v = corollary_detect(*g, parts, pauli3_bound(), Corollary::C2, tol);
        } else {
            v = theorem2_detect(sigma, pairs, pauli3_bound(), tol);
        }
    } else {
        if (!opt.measurement.empty()) throw UsageError("t3 takes no --measurement");
        if (sigma.parties() < 2) throw UsageError("t3 needs a state with at least two parties");
        const double tol = opt.tol.value_or(kTolAnalytic);
        auto [verdict, sd] = theorem3_detect(sigma, tol);
        for (const auto& [keep, spectrum] : sd.subsystem_spectra) {
            std::string parties;
            for (int p : keep) parties += (parties.empty() ? "" : ",") + std::to_string(p);
            os << "subsystem {" << parties << "}: " << join(spectrum) << '\n';
        }
        if (g) {
            const ProbVec lhs = sigma.spectrum();
            v = corollary_detect(*g, std::span(&lhs, 1), sd.lambda_inf, Corollary::C3, tol);
        } else {
            v = std::move(verdict);
        }
    }
    write_verdict(os, v);
    return v;
}

void run_bound(const Options& opt, std::ostream& os) {
    const auto cfg = opt.optimizer();
    const std::string meas = opt.measurement.empty() ? "bell" : opt.measurement;
    std::vector<Povm> povms;
    Dims dims;
    if (meas == "bell") {
        const auto ds = parse_d_range(opt.d_range);
        if (ds.size() != 1) throw UsageError("bound with bell takes a single --d");
        povms.push_back(bell_measurement(ds.front()));
        dims = {ds.front(), ds.front()};
    } else if (meas == "pauli3") {
        povms = pauli_measurements();
        dims = {2};
    } else if (meas == "eigenbasis") {
        const DensityMatrix sigma = load_input(opt);
        povms.push_back(optimal_measurement(sigma));
        dims = sigma.dims();
    } else if (meas == "file") {
        povms.push_back(file_measurement(opt));
        dims = opt.dims.empty() ? Dims{povms.front().dim()} : parse_dims(opt.dims);
    } else {
        throw UsageError("unknown measurement '" + meas + "'");
    }
    if (opt.separable && dims.size() < 2) throw UsageError("--separable needs at least two parties");
    const MeasurementSet ms(std::move(povms), dims);
    const BoundResult r = opt.separable ? sup_separable(ms, cfg) : sup_all_states(ms, cfg);

    os << "measurement: " << meas << '\n';
    os << "dims: " << dims_text(dims) << '\n';
    os << "states: " << (opt.separable ? "separable" : "all") << '\n';
    os << "bound: " << join(r.bound) << '\n';
    os << "mu: " << join(r.mu) << '\n';
    os << "mu_raw: " << join(r.mu_raw) << '\n';
    os << "converged:";
    for (bool c : r.converged) os << ' ' << (c ? 1 : 0);
    os << '\n';
}

void run_scan(const Options& opt, std::ostream& os) {
    const auto ds = parse_d_range(opt.d_range);
    const auto orders = parse_orders(opt.orders);
    os << scan_to_csv(werner_scan(ds, orders));
}

void run_spectrum(const Options& opt, std::ostream& os) {
    const DensityMatrix rho = load_input(opt);
    const ProbVec estimate = estimate_spectrum(rho, opt.optimizer());
    const ProbVec& exact = rho.spectrum();
    double dev = 0.0;
    for (std::size_t k = 0; k < exact.size(); ++k) dev = std::max(dev, std::abs(estimate[k] - exact[k]));
    os << "dims: " << dims_text(rho.dims()) << '\n';
    os << "estimate: " << join(estimate) << '\n';
    os << "eigenvalues: " << join(exact) << '\n';
    os << "max deviation: " << fmt(dev) << '\n';
}

void add_input_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--state", opt.state_path, "Density matrix JSON file");
    cmd->add_option("--werner", opt.werner, "Werner state d=<d>,q=<q>");
}

void add_optimizer_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--seed", opt.seed, "Optimizer seed");
    cmd->add_option("--restarts", opt.restarts, "Optimizer restarts");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Majorization entanglement detection (natural logarithms throughout)", "majent"};
    app.require_subcommand(1);
    Options opt;
    std::string tol_text;

    auto* detect = app.add_subcommand("detect", "Run an entanglement detector on a state");
    detect->add_option("--detector", opt.detector, "t1, t2, t3, c1:<measure>, c2:<measure>, c3:<measure>")->required();
    detect->add_option("--measurement", opt.measurement, "bell, pauli3, eigenbasis or file");
    detect->add_option("--measurement-file", opt.measurement_file, "Measurement JSON file for --measurement file");
    add_input_options(detect, opt);
    add_optimizer_options(detect, opt);
    detect->add_option("--tol", tol_text, "Detection tolerance");
    detect->add_option("--out", opt.out_path, "Report file (default stdout)");

    auto* bound = app.add_subcommand("bound", "Supremum of a measurement set's joint outcome vector");
    bound->add_option("--measurement", opt.measurement, "bell, pauli3, eigenbasis or file");
    bound->add_option("--measurement-file", opt.measurement_file, "Measurement JSON file");
    bound->add_option("--d", opt.d_range, "Local dimension for bell");
    bound->add_option("--dims", opt.dims, "Party dimensions for a file measurement, e.g. 2,2");
    bound->add_flag("--separable", opt.separable, "Restrict to separable states");
    add_input_options(bound, opt);
    add_optimizer_options(bound, opt);
    bound->add_option("--out", opt.out_path, "Report file (default stdout)");

    auto* scan = app.add_subcommand("werner-scan", "Tsallis detection thresholds of Werner states as CSV");
    scan->add_option("--d", opt.d_range, "Dimension range <a>..<b> or a single d");
    scan->add_option("--orders", opt.orders, "Comma-separated orders, 'inf' allowed");
    scan->add_option("--out", opt.out_path, "CSV file (default stdout)");

    auto* spectrum = app.add_subcommand("spectrum-estimate", "Spectrum as the supremum of rank-1 measurement statistics");
    add_input_options(spectrum, opt);
    add_optimizer_options(spectrum, opt);
    spectrum->add_option("--out", opt.out_path, "Report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kInconclusive : kUsageError;
    }

    std::ostringstream report;
    int code = kInconclusive;
    try {
        if (!tol_text.empty()) {
            opt.tol = to_double(tol_text, "tolerance");
            if (!(*opt.tol >= 0.0)) throw UsageError("--tol must be nonnegative");
        }
        if (detect->parsed()) {
            code = run_detect(opt, report).entangled() ? kEntangled : kInconclusive;
        } else if (bound->parsed()) {
            run_bound(opt, report);
        } else if (scan->parsed()) {
            run_scan(opt, report);
        } else {
            run_spectrum(opt, report);
        }
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (opt.out_path.empty()) {
        out << report.str();
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        file << report.str();
        if (!file) {
            err << "error: cannot write " << opt.out_path << '\n';
            return kUsageError;
        }
    }
    return code;
}

}  // namespace majent::cli
