#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heyland/construction.hpp"

namespace heyland {

/// `no_load` marks the O' point itself, where slip is zero.
enum class Regime { motoring, generating, braking, no_load };

std::string_view to_string(Regime regime);

/// s < 0 generating, 0 < s <= 1 motoring, s > 1 braking; throws UndefinedRegime at 0.
Regime classify_regime(double s);

struct OperatingPoint {
    Point2 point;
    double line_current_a = 0.0;
    double power_factor = 0.0;
    double input_power_w = 0.0;
    double output_power_w = 0.0;
    double airgap_power_w = 0.0; ///< torque in synchronous watts
    double rotor_cu_w = 0.0;
    double stator_cu_w = 0.0;
    double fixed_loss_w = 0.0;
    double slip = 0.0;
    double efficiency = 0.0;
    Regime regime = Regime::motoring;
    std::optional<double> torque_nm;
};

struct ExtremalSet {
    OperatingPoint max_output;
    OperatingPoint max_torque;
    OperatingPoint max_power_factor;
    OperatingPoint max_input;
};

/// Reads every performance quantity off the diagram at locus point `p`.
///
/// With J, K the output- and torque-line ordinates at p.x and L = O'.y:
/// output = k(p.y - J), rotor copper = k(J - K), stator copper = k(K - L),
/// fixed loss = kL and slip = (J - K)/(p.y - K).
///
/// Throws OffLocus if `p` is not on the circle, ZeroAirgap where p.y == K away
/// from O'. At O' the no-load point is returned with slip 0.
OperatingPoint analyze_point(const HeylandDiagram& diag, Point2 p);

/// Stable (smaller reactive current) point delivering `output_w`.
/// Throws InfeasibleOutput beyond the tangency maximum.
OperatingPoint point_at_output(const HeylandDiagram& diag, double output_w);

enum class Branch { upper, lower };

/// Locus point with slip `s`. Throws InvalidSlip for 0, NoIntersection when
/// the constant-slip line only touches the circle at O'.
OperatingPoint point_at_slip(const HeylandDiagram& diag, double s, Branch branch = Branch::upper);

ExtremalSet extremal_points(const HeylandDiagram& diag);

enum class Spacing { linear, logarithmic };

struct SweepSample {
    double slip = 0.0;
    std::optional<OperatingPoint> point; ///< empty when the query failed
    std::string error;
};

/// `n` slip values from `s_from` to `s_to` inclusive, ascending. An exact zero
/// is skipped. Per-sample failures become gaps. Logarithmic spacing needs
/// s_from > 0.
std::vector<SweepSample> sweep(const HeylandDiagram& diag, double s_from, double s_to, int n,
                               Spacing spacing = Spacing::linear);

/// CSV with the fixed sweep header, 9 significant digits, LF endings.
std::string sweep_csv(const std::vector<SweepSample>& samples);

} // namespace heyland
