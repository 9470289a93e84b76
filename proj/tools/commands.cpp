#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "gic/bounds.hpp"
#include "gic/channel.hpp"
#include "gic/checks.hpp"
#include "gic/gaussmi.hpp"
#include "gic/geometry.hpp"
#include "gic/regime.hpp"

namespace gic::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_sig(double v, int sig) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

// Display precision; CSV rows carry full precision instead.
std::string disp(double v) { return fmt_sig(v, 10); }

std::string full(double v) { return fmt_sig(v, 17); }

// Channel parameter flags shared by the bounds and genie subcommands; sweep
// reuses the power part only.
struct ParamFlags {
    double p = 0, p_db = 0, h = 0;
    double p1 = 0, p2 = 0, p1_db = 0, p2_db = 0, h12 = 0, h21 = 0;
    CLI::Option* op = nullptr;
    CLI::Option* op_db = nullptr;
    CLI::Option* oh = nullptr;
    CLI::Option* op1 = nullptr;
    CLI::Option* op2 = nullptr;
    CLI::Option* op1_db = nullptr;
    CLI::Option* op2_db = nullptr;
    CLI::Option* oh12 = nullptr;
    CLI::Option* oh21 = nullptr;

    void attach(CLI::App& cmd, bool with_gains) {
        cmd.set_help_flag("--help", "print this help message and exit");
        op = cmd.add_option("--p", p, "symmetric transmit power, linear");
        op_db = cmd.add_option("--p-db", p_db, "symmetric transmit power, dB");
        if (with_gains) {
            oh = cmd.add_option("--h", h, "symmetric cross-gain");
            op1 = cmd.add_option("--p1", p1, "power of user 1, linear");
            op2 = cmd.add_option("--p2", p2, "power of user 2, linear");
            op1_db = cmd.add_option("--p1-db", p1_db, "power of user 1, dB");
            op2_db = cmd.add_option("--p2-db", p2_db, "power of user 2, dB");
            oh12 = cmd.add_option("--h12", h12, "cross-gain into receiver 1");
            oh21 = cmd.add_option("--h21", h21, "cross-gain into receiver 2");
        }
    }

    static double pick_power(const CLI::Option* lin, double lin_v,
                             const CLI::Option* db, double db_v, const char* what) {
        if (lin->count() && db->count()) {
            throw UsageError(std::string(what) +
                             ": linear and dB power flags are mutually exclusive");
        }
        if (!lin->count() && !db->count()) {
            throw UsageError(std::string(what) + ": a power flag is required");
        }
        return lin->count() ? lin_v : db_to_linear(db_v);
    }

    /// Symmetric power for subcommands without gain flags (sweep).
    double resolve_power() const { return pick_power(op, p, op_db, p_db, "power"); }

    ChannelParams resolve() const {
        const bool sym_any = op->count() || op_db->count() || oh->count();
        const bool asym_any = op1->count() || op2->count() || op1_db->count() ||
                              op2_db->count() || oh12->count() || oh21->count();
        if (sym_any && asym_any) {
            throw UsageError("symmetric (--p/--p-db/--h) and asymmetric "
                             "(--p1/--p2/--h12/--h21) flags cannot be mixed");
        }
        if (sym_any) {
            if (!oh->count()) throw UsageError("--h is required");
            return make_symmetric(resolve_power(), h);
        }
        if (asym_any) {
            if (!oh12->count() || !oh21->count()) {
                throw UsageError("--h12 and --h21 are both required");
            }
            const double q1 = pick_power(op1, p1, op1_db, p1_db, "--p1");
            const double q2 = pick_power(op2, p2, op2_db, p2_db, "--p2");
            return make_params(q1, q2, h12, h21);
        }
        throw UsageError("channel parameters are required");
    }
};

void check_format(const std::string& format,
                  std::initializer_list<const char*> allowed) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return format == a; })) {
        throw UsageError("unknown --format value: " + format);
    }
}

void describe_params(const ChannelParams& c, std::ostream& out) {
    if (symmetric(c)) {
        out << "channel              symmetric P=" << disp(c.p1) << " ("
            << disp(linear_to_db(c.p1)) << " dB), h=" << disp(c.h12) << '\n';
    } else {
        out << "channel              p1=" << disp(c.p1) << " p2=" << disp(c.p2)
            << " h12=" << disp(c.h12) << " h21=" << disp(c.h21) << '\n';
    }
}

void describe_regime(const RegimeLabel& label, std::ostream& out) {
    out << "regime               " << to_string(label.kind) << " (condition "
        << disp(label.condition_value) << ", threshold " << disp(label.threshold)
        << ")\n";
}

void put_line(std::ostream& out, const char* name,
              const std::optional<Rate>& value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-20s %s", name,
                  value ? disp(*value).c_str() : "-");
    out << buf << '\n';
}

json rate_json(const std::optional<Rate>& value) {
    return value ? json(*value) : json(nullptr);
}

int run_bounds(const ParamFlags& flags, const std::string& format,
               std::ostream& out) {
    check_format(format, {"text", "json"});
    const ChannelParams params = flags.resolve();
    const BoundSet b = all_bounds(params);

    if (format == "json") {
        json j;
        j["p1"] = params.p1;
        j["p2"] = params.p2;
        j["h12"] = params.h12;
        j["h21"] = params.h21;
        j["regime"] = {{"kind", to_string(b.regime.kind)},
                       {"condition_value", b.regime.condition_value},
                       {"threshold", b.regime.threshold}};
        j["tin_lower"] = b.tin_lower;
        j["ortho_lower"] = rate_json(b.ortho_lower);
        j["onebit_upper"] = rate_json(b.onebit_upper);
        j["kramer_upper"] = rate_json(b.kramer_upper);
        j["tangent_upper"] = rate_json(b.tangent_upper);
        j["genie_aided_upper"] = rate_json(b.genie_aided_upper);
        j["exact_capacity"] = rate_json(b.exact_capacity);
        out << j.dump(2) << '\n';
        return 0;
    }

    describe_params(params, out);
    describe_regime(b.regime, out);
    put_line(out, "tin_lower", b.tin_lower);
    put_line(out, "ortho_lower", b.ortho_lower);
    put_line(out, "onebit_upper", b.onebit_upper);
    put_line(out, "kramer_upper", b.kramer_upper);
    put_line(out, "tangent_upper", b.tangent_upper);
    put_line(out, "genie_aided_upper", b.genie_aided_upper);
    put_line(out, "exact_capacity", b.exact_capacity);
    return 0;
}

struct SweepGrid {
    double p = 0.0;
    std::vector<double> gains;
};

SweepGrid make_grid(double p, double h_from, double h_to, double h_step) {
    if (!(std::isfinite(h_from) && std::isfinite(h_to) && std::isfinite(h_step))) {
        throw UsageError("grid flags must be finite");
    }
    if (h_step <= 0.0) throw UsageError("--h-step must be positive");
    if (h_to < h_from) throw UsageError("--h-to must not be below --h-from");
    SweepGrid grid;
    grid.p = p;
    const auto count =
        static_cast<std::size_t>(std::floor((h_to - h_from) / h_step + 1e-9)) + 1;
    grid.gains.reserve(count);
    for (std::size_t i = 0; i < count; ++i) grid.gains.push_back(h_from + i * h_step);
    return grid;
}

std::string sweep_csv(const SweepGrid& grid) {
    std::string out = "h,p,tin_lower,ortho_lower,onebit_upper,kramer_upper,"
                      "tangent_upper,exact_capacity,regime\n";
    const auto field = [](const std::optional<Rate>& v) {
        return v ? full(*v) : std::string();
    };
    for (double h : grid.gains) {
        const BoundSet b = all_bounds(make_symmetric(grid.p, h));
        out += full(h) + ',' + full(grid.p) + ',' + full(b.tin_lower) + ',' +
               field(b.ortho_lower) + ',' + field(b.onebit_upper) + ',' +
               field(b.kramer_upper) + ',' + field(b.tangent_upper) + ',' +
               field(b.exact_capacity) + ',' + to_string(b.regime.kind) + '\n';
    }
    return out;
}

std::string sweep_json(const SweepGrid& grid) {
    json rows = json::array();
    for (double h : grid.gains) {
        const BoundSet b = all_bounds(make_symmetric(grid.p, h));
        json row;
        row["h"] = h;
        row["p"] = grid.p;
        row["tin_lower"] = b.tin_lower;
        row["ortho_lower"] = rate_json(b.ortho_lower);
        row["onebit_upper"] = rate_json(b.onebit_upper);
        row["kramer_upper"] = rate_json(b.kramer_upper);
        row["tangent_upper"] = rate_json(b.tangent_upper);
        row["exact_capacity"] = rate_json(b.exact_capacity);
        row["regime"] = to_string(b.regime.kind);
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + '\n';
}

int run_sweep(const ParamFlags& flags, double h_from, double h_to, double h_step,
              const std::string& format, const std::string& out_path,
              std::ostream& out) {
    check_format(format, {"csv", "json"});
    const SweepGrid grid = make_grid(flags.resolve_power(), h_from, h_to, h_step);
    const std::string payload = format == "csv" ? sweep_csv(grid) : sweep_json(grid);
    if (out_path.empty()) {
        out << payload;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open output file: " + out_path);
        file << payload;
    }
    return 0;
}

int run_genie(const ParamFlags& flags, std::ostream& out) {
    const ChannelParams params = flags.resolve();
    const RegimeLabel label = classify(params);
    describe_params(params, out);
    describe_regime(label, out);

    if (label.kind == RegimeKind::above_threshold) {
        out << "no certificate: condition " << disp(label.condition_value)
            << " exceeds threshold " << disp(label.threshold) << '\n';
        if (symmetric(params) && params.h12 != 0.0) {
            const auto t = tangent_bound(params);
            put_line(out, "tangent_upper", t.rate);
            put_line(out, "tangency_eta", t.tangency.eta);
            put_line(out, "tangency_theta", t.tangency.theta);
            put_line(out, "tangent_slope_mu", t.mu);
        }
        put_line(out, "tin_sum_rate", tin_sum_rate(params));
        return 0;
    }

    const auto genie = construct_genie(params);
    if (!genie) {
        out << "trivial regime, no genie needed (a zero cross-gain removes the "
               "side information)\n";
        put_line(out, "exact_capacity", tin_sum_rate(params));
        return 0;
    }

    if (symmetric(params)) {
        put_line(out, "eta", genie->eta1);
        put_line(out, "rho", genie->rho1);
        const PolarGenie polar = to_polar(*genie, params);
        put_line(out, "polar_theta", polar.theta);
    } else {
        put_line(out, "eta1", genie->eta1);
        put_line(out, "rho1", genie->rho1);
        put_line(out, "eta2", genie->eta2);
        put_line(out, "rho2", genie->rho2);
    }
    const GenieChecks checks = genie_checks(params, *genie);
    put_line(out, "smart_residual_1", checks.smart_residual1);
    put_line(out, "smart_residual_2", checks.smart_residual2);
    put_line(out, "useful_margin_1", checks.useful_margin1);
    put_line(out, "useful_margin_2", checks.useful_margin2);
    put_line(out, "genie_aided_rate", genie_aided_sum_rate(params, *genie));
    put_line(out, "tin_sum_rate", tin_sum_rate(params));
    put_line(out, "exact_capacity", tin_sum_rate(params));
    return 0;
}

int run_verify(const checks::Options& options, std::ostream& out) {
    const auto results = checks::run_all(options);
    std::size_t failed = 0;
    for (const auto& r : results) {
        char head[160];
        std::snprintf(head, sizeof head, "[%s] %-24s trials=%-7zu worst=%.3g",
                      r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.trials,
                      r.worst_residual);
        out << head << '\n';
        for (const auto& note : r.notes) out << "       " << note << '\n';
        if (!r.passed()) ++failed;
    }
    out << "verification: " << results.size() - failed << '/' << results.size()
        << " suites passed (seed " << options.seed << ")\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sum-capacity bounds for the two-user Gaussian interference "
                 "channel"};
    // -h would clash with the --h gain flag; keep --help only.
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Evaluate every applicable sum-capacity bound for one channel");
    ParamFlags bounds_flags;
    bounds_flags.attach(*bounds_cmd, true);
    std::string bounds_format = "text";
    bounds_cmd->add_option("--format", bounds_format, "text or json");

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Sweep the symmetric cross-gain and emit one row per grid point");
    ParamFlags sweep_flags;
    sweep_flags.attach(*sweep_cmd, false);
    double h_from = 0.0, h_to = 0.0, h_step = 0.0;
    auto* oh_from = sweep_cmd->add_option("--h-from", h_from, "grid start");
    auto* oh_to = sweep_cmd->add_option("--h-to", h_to, "grid end (inclusive)");
    auto* oh_step = sweep_cmd->add_option("--h-step", h_step, "grid step");
    std::string sweep_format = "csv";
    std::string sweep_out;
    sweep_cmd->add_option("--format", sweep_format, "csv or json");
    sweep_cmd->add_option("--out", sweep_out, "output path (default stdout)");

    auto* genie_cmd = app.add_subcommand(
        "genie", "Construct and certify the useful-and-smart genie");
    ParamFlags genie_flags;
    genie_flags.attach(*genie_cmd, true);

    auto* verify_cmd = app.add_subcommand(
        "verify", "Run the cross-oracle self-verification suites");
    verify_cmd->set_help_flag("--help", "print this help message and exit");
    checks::Options options;
    verify_cmd->add_option("--seed", options.seed, "base seed for the random suites");
    verify_cmd->add_option("--trials", options.mi_trials,
                           "two-path mutual-information fuzzing count");
    verify_cmd->add_flag("--strict", options.strict_ordering,
                         "include the orthogonalization rate in the ordering "
                         "check (documented to fail at moderate gains)");
    verify_cmd->add_flag("--quick", options.quick,
                         "trim the sampling suites for a fast smoke run");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bounds_cmd) return run_bounds(bounds_flags, bounds_format, out);
        if (*sweep_cmd) {
            if (!oh_from->count() || !oh_to->count() || !oh_step->count()) {
                throw UsageError("--h-from, --h-to and --h-step are all required");
            }
            return run_sweep(sweep_flags, h_from, h_to, h_step, sweep_format,
                             sweep_out, out);
        }
        if (*genie_cmd) return run_genie(genie_flags, out);
        if (*verify_cmd) return run_verify(options, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace gic::cli
