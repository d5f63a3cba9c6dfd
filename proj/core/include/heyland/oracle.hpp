#pragma once

#include <complex>
#include <span>
#include <string>

#include "heyland/construction.hpp"
#include "heyland/testdata.hpp"

namespace heyland {

/// Gamma-form equivalent circuit (magnetising branch at the terminals) fitted
/// to the same two tests as the diagram. Used only as an independent check on
/// the geometric construction.
///
/// Three-phase machines are treated as star connected: V_phase = V_rated/sqrt(3)
/// and phase current equals line current.
struct GammaCircuit {
    std::complex<double> y0;  ///< shunt admittance, S
    double r_total = 0.0;     ///< series resistance per phase, ohm
    double x_total = 0.0;     ///< series reactance per phase, ohm
    double r1 = 0.0;          ///< stator share of r_total
    double r2 = 0.0;          ///< rotor share of r_total
    double v_phase = 0.0;     ///< V
    int phases = 3;

    double y0_magnitude() const { return std::abs(y0); }
    /// Lagging admittance angle, degrees (positive for inductive shunt).
    double y0_angle_deg() const;
};

/// Throws NonPhysicalFit when the series branch has non-positive R or X.
GammaCircuit fit_gamma_circuit(const DiagramAnchors& anchors, const MachineTestData& data);

/// Series-branch current, phasor form (real = active).
std::complex<double> series_current(const GammaCircuit& circuit, double s);

/// Terminal line current at slip `s`, as a diagram point. Throws InvalidSlip.
Point2 current_at_slip(const GammaCircuit& circuit, double s);

/// Slips used by locus_deviation: log-spaced in [1e-4, 1] and mirrored into [-1, -1e-4].
std::vector<double> locus_slips(int n);

/// max | |I(s) - C| - r | / r over the given slips.
double locus_deviation(const GammaCircuit& circuit, const HeylandDiagram& diag,
                       std::span<const double> slips);

/// Same over `locus_slips(n)`; n >= 10.
double locus_deviation(const GammaCircuit& circuit, const HeylandDiagram& diag, int n);

struct PowerCrosscheck {
    double slip = 0.0;
    double slip_geometric = 0.0;
    double rotor_cu_circuit_w = 0.0;
    double rotor_cu_geometric_w = 0.0;
    double stator_cu_circuit_w = 0.0;
    double stator_cu_geometric_w = 0.0;
    double airgap_circuit_w = 0.0;
    double airgap_geometric_w = 0.0;

    /// Largest relative difference among the three power pairs.
    double max_relative_deviation() const;
};

/// Circuit power formulas versus geometric intercepts at current_at_slip(s); 0 < s <= 1.
PowerCrosscheck performance_crosscheck(const GammaCircuit& circuit, const HeylandDiagram& diag,
                                       double s);

struct CrosscheckReport {
    GammaCircuit circuit;
    double max_locus_dev_rel = 0.0;
    double slip_roundtrip_dev = 0.0;
    double power_crosscheck_dev = 0.0;
};

/// Fits the circuit and runs all three checks with `samples` slip values each.
CrosscheckReport run_crosscheck(const MachineTestData& data, int samples = 200);

/// Flat key=value report.
std::string format_crosscheck(const CrosscheckReport& report);

} // namespace heyland
