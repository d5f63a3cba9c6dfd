#include "heyland/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "heyland/errors.hpp"
#include "heyland/format.hpp"
#include "heyland/performance.hpp"

namespace heyland {
namespace {

using cplx = std::complex<double>;

// Diagram convention: x = reactive (lagging positive), y = active.
cplx to_phasor(Point2 p) { return {p.y, -p.x}; }
Point2 to_point(cplx i) { return {-i.imag(), i.real()}; }

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(hi);
        return out;
    }
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        out.push_back(i == n - 1 ? hi : lo * std::pow(hi / lo, t));
    }
    return out;
}

double relative_difference(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

} // namespace

double GammaCircuit::y0_angle_deg() const {
    return -std::arg(y0) * 180.0 / std::numbers::pi;
}

GammaCircuit fit_gamma_circuit(const DiagramAnchors& anchors, const MachineTestData& data) {
    GammaCircuit c;
    c.phases = data.phases;
    c.v_phase = data.phases == 3 ? data.v_rated / std::numbers::sqrt3 : data.v_rated;

    const cplx i_noload = to_phasor(anchors.o_prime);
    const cplx i_series = to_phasor(anchors.a) - i_noload;
    if (std::abs(i_series) == 0.0) {
        throw NonPhysicalFit("blocked-rotor and no-load points coincide");
    }
    c.y0 = i_noload / c.v_phase;

    const cplx z = c.v_phase / i_series;
    c.r_total = z.real();
    c.x_total = z.imag();
    if (!(c.r_total > 0.0) || !(c.x_total > 0.0)) {
        throw NonPhysicalFit("fitted series impedance is not resistive-inductive (R = "
                             + fmt::significant(c.r_total, 6) + ", X = "
                             + fmt::significant(c.x_total, 6) + ")");
    }
    c.r2 = data.rotor_cu_fraction * c.r_total;
    c.r1 = c.r_total - c.r2;
    return c;
}

cplx series_current(const GammaCircuit& c, double s) {
    if (s == 0.0) {
        throw InvalidSlip();
    }
    return c.v_phase / cplx(c.r1 + c.r2 / s, c.x_total);
}

Point2 current_at_slip(const GammaCircuit& c, double s) {
    return to_point(c.y0 * c.v_phase + series_current(c, s));
}

std::vector<double> locus_slips(int n) {
    if (n < 10) {
        throw PreconditionError("locus deviation needs at least 10 samples");
    }
    const int positive = n - n / 2;
    std::vector<double> slips = log_spaced(1e-4, 1.0, positive);
    for (double s : log_spaced(1e-4, 1.0, n / 2)) {
        slips.push_back(-s);
    }
    return slips;
}

double locus_deviation(const GammaCircuit& c, const HeylandDiagram& diag,
                       std::span<const double> slips) {
    const double r = diag.circle.radius;
    double worst = 0.0;
    for (double s : slips) {
        const double gap = std::abs(distance(current_at_slip(c, s), diag.circle.center) - r) / r;
        worst = std::max(worst, gap);
    }
    return worst;
}

double locus_deviation(const GammaCircuit& c, const HeylandDiagram& diag, int n) {
    const auto slips = locus_slips(n);
    return locus_deviation(c, diag, slips);
}

double PowerCrosscheck::max_relative_deviation() const {
    return std::max({relative_difference(rotor_cu_circuit_w, rotor_cu_geometric_w),
                     relative_difference(stator_cu_circuit_w, stator_cu_geometric_w),
                     relative_difference(airgap_circuit_w, airgap_geometric_w)});
}

PowerCrosscheck performance_crosscheck(const GammaCircuit& c, const HeylandDiagram& diag,
                                       double s) {
    if (!(s > 0.0 && s <= 1.0)) {
        throw InvalidSlip();
    }
    // Star connection: phase current equals line current.
    const double i2_sq = std::norm(series_current(c, s));
    const OperatingPoint op = analyze_point(diag, current_at_slip(c, s));

    PowerCrosscheck out;
    out.slip = s;
    out.slip_geometric = op.slip;
    out.rotor_cu_circuit_w = c.phases * i2_sq * c.r2;
    out.stator_cu_circuit_w = c.phases * i2_sq * c.r1;
    out.airgap_circuit_w = c.phases * i2_sq * c.r2 / s;
    out.rotor_cu_geometric_w = op.rotor_cu_w;
    out.stator_cu_geometric_w = op.stator_cu_w;
    out.airgap_geometric_w = op.airgap_power_w;
    return out;
}

CrosscheckReport run_crosscheck(const MachineTestData& data, int samples) {
    const DiagramAnchors anchors = refer_to_rated(data);
    const HeylandDiagram diag = build_diagram(anchors, data);

    CrosscheckReport report;
    report.circuit = fit_gamma_circuit(anchors, data);
    report.max_locus_dev_rel = locus_deviation(report.circuit, diag, samples);

    for (double s : log_spaced(1e-3, 1.0, samples)) {
        const PowerCrosscheck pc = performance_crosscheck(report.circuit, diag, s);
        report.slip_roundtrip_dev = std::max(report.slip_roundtrip_dev,
                                             std::abs(pc.slip_geometric - s));
        report.power_crosscheck_dev = std::max(report.power_crosscheck_dev,
                                               pc.max_relative_deviation());
    }
    return report;
}

std::string format_crosscheck(const CrosscheckReport& report) {
    std::ostringstream out;
    auto put = [&](const char* key, double v) { out << key << " = " << fmt::significant(v, 9) << '\n'; };
    put("max_locus_dev_rel", report.max_locus_dev_rel);
    put("slip_roundtrip_dev", report.slip_roundtrip_dev);
    put("power_crosscheck_dev", report.power_crosscheck_dev);
    put("R1_ohm", report.circuit.r1);
    put("R2_ohm", report.circuit.r2);
    put("X_ohm", report.circuit.x_total);
    put("Y0_mag_s", report.circuit.y0_magnitude());
    put("Y0_ang_deg", report.circuit.y0_angle_deg());
    put("V_phase_v", report.circuit.v_phase);
    out << "connection = " << (report.circuit.phases == 3 ? "star" : "single-phase") << '\n';
    return out.str();
}

} // namespace heyland
