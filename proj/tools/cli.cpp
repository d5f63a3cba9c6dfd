#include "cli.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "heyland/construction.hpp"
#include "heyland/errors.hpp"
#include "heyland/format.hpp"
#include "heyland/oracle.hpp"
#include "heyland/performance.hpp"
#include "heyland/render.hpp"
#include "heyland/testdata.hpp"

namespace heyland::cli {
namespace {

constexpr double kValidationThreshold = 1e-6;

class IoFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoFailure("cannot open '" + path + "' for writing");
    }
    file << content;
    file.flush();
    if (!file) {
        throw IoFailure("failed writing '" + path + "'");
    }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
    }
}

MachineTestData load(const std::string& path) { return parse_test_data(read_file(path)); }

std::string format_operating_point(const OperatingPoint& op) {
    std::ostringstream out;
    auto put = [&](const char* key, double v) { out << key << " = " << fmt::significant(v, 9) << '\n'; };
    put("line_current_a", op.line_current_a);
    put("power_factor", op.power_factor);
    put("slip", op.slip);
    put("input_w", op.input_power_w);
    put("output_w", op.output_power_w);
    put("airgap_w", op.airgap_power_w);
    put("rotor_cu_w", op.rotor_cu_w);
    put("stator_cu_w", op.stator_cu_w);
    put("fixed_w", op.fixed_loss_w);
    put("efficiency", op.efficiency);
    out << "regime = " << to_string(op.regime) << '\n';
    if (op.torque_nm) {
        put("torque_nm", *op.torque_nm);
    }
    put("point_reactive_a", op.point.x);
    put("point_active_a", op.point.y);
    return out.str();
}

struct Options {
    std::string input;
    std::string out_path;

    std::optional<double> output_kw;
    std::optional<double> slip;
    bool at_rated = false;

    double from = 0.0;
    double to = 0.0;
    int n = 0;
    bool log_spacing = false;

    bool full_circle = false;
    std::vector<double> slip_lines;

    int samples = 200;
};

int execute(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
    const MachineTestData data = load(o.input);
    const HeylandDiagram diag = build_diagram(data);

    if (command == "build") {
        emit(export_diagram(diag), o.out_path, out);
        return kSuccess;
    }
    if (command == "query") {
        const int selectors = int(o.output_kw.has_value()) + int(o.slip.has_value()) + int(o.at_rated);
        if (selectors != 1) {
            err << "error: query needs exactly one of --output-kw, --slip, --at-rated\n";
            return kInputError;
        }
        OperatingPoint op;
        if (o.slip) {
            op = point_at_slip(diag, *o.slip);
        } else {
            const double watts = o.at_rated ? data.p_rated_w() : *o.output_kw * 1000.0;
            op = point_at_output(diag, watts);
        }
        emit(format_operating_point(op), o.out_path, out);
        return kSuccess;
    }
    if (command == "sweep") {
        const auto samples = sweep(diag, o.from, o.to, o.n,
                                   o.log_spacing ? Spacing::logarithmic : Spacing::linear);
        emit(sweep_csv(samples), o.out_path, out);
        return kSuccess;
    }
    if (command == "render") {
        RenderOptions opts;
        opts.show_full_circle = o.full_circle;
        opts.show_slip_lines = o.slip_lines;
        write_file(o.out_path, render_svg(diag, extremal_points(diag), opts));
        return kSuccess;
    }
    if (command == "validate") {
        const CrosscheckReport report = run_crosscheck(data, o.samples);
        emit(format_crosscheck(report), o.out_path, out);
        const bool ok = report.max_locus_dev_rel <= kValidationThreshold
                        && report.slip_roundtrip_dev <= kValidationThreshold;
        if (!ok) {
            err << "error: construction and equivalent-circuit oracle disagree beyond "
                << kValidationThreshold << '\n';
            return kValidationBreach;
        }
        return kSuccess;
    }
    err << "error: unknown command '" << command << "'\n";
    return kInputError;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heyland circle diagram from no-load and blocked-rotor test data", "heyland"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "Test-data file (key = value)")->required();
    };

    auto* build = app.add_subcommand("build", "Construct the diagram and print its export block");
    add_common(build);
    build->add_option("--out", o.out_path, "Write to file instead of standard output");

    auto* query = app.add_subcommand("query", "Report one operating point");
    add_common(query);
    query->add_option("--output-kw", o.output_kw, "Shaft output power, kW");
    query->add_option("--slip", o.slip, "Slip");
    query->add_flag("--at-rated", o.at_rated, "Use the rated output power");
    query->add_option("--out", o.out_path, "Write to file instead of standard output");

    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate operating points over a slip range (CSV)");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--from", o.from, "First slip")->required();
    sweep_cmd->add_option("--to", o.to, "Last slip")->required();
    sweep_cmd->add_option("--n", o.n, "Number of samples")->required();
    sweep_cmd->add_flag("--log", o.log_spacing, "Logarithmic slip spacing");
    sweep_cmd->add_option("--out", o.out_path, "Write to file instead of standard output");

    auto* render = app.add_subcommand("render", "Write the annotated diagram as SVG");
    add_common(render);
    render->add_option("--out", o.out_path, "Output SVG file")->required();
    render->add_flag("--full-circle", o.full_circle, "Include the generating region");
    render->add_option("--slip-lines", o.slip_lines, "Constant-slip lines to draw")->delimiter(',');

    auto* validate = app.add_subcommand("validate", "Cross-check against the fitted equivalent circuit");
    add_common(validate);
    validate->add_option("--samples", o.samples, "Slip samples per check")->check(CLI::Range(10, 1000000));
    validate->add_option("--out", o.out_path, "Write to file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return execute(command, o, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DegenerateConstruction& e) {
        err << "error: " << e.what() << '\n';
        return kDegenerateGeometry;
    } catch (const InfeasibleOutput& e) {
        err << "error: " << e.what() << '\n'
            << "max_output_kw = " << fmt::significant(e.max_output_w() / 1000.0, 6) << '\n';
        return kInfeasibleQuery;
    } catch (const NoIntersection& e) {
        err << "error: " << e.what() << '\n';
        return kInfeasibleQuery;
    } catch (const ZeroAirgap& e) {
        err << "error: " << e.what() << '\n';
        return kInfeasibleQuery;
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const NonPhysicalFit& e) {
        err << "error: " << e.what() << '\n';
        return kValidationBreach;
    } catch (const Error& e) {
        // InvalidSlip, PreconditionError and friends are argument problems.
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("heyland");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace heyland::cli
