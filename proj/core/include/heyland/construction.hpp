#pragma once

#include <optional>

#include "heyland/geom.hpp"
#include "heyland/testdata.hpp"

namespace heyland {

/// The constructed circle diagram and its reference lines.
///
/// The circle passes through O' and A with its center on the horizontal
/// through O'. Power readings are vertical gaps between a locus point and the
/// reference lines, multiplied by `power_scale_w_per_a`.
struct HeylandDiagram {
    DiagramAnchors anchors;
    CircleShape circle;
    Line2 ref_horizontal;
    Line2 output_line;
    Line2 torque_line;
    double power_scale_w_per_a = 0.0;
    Point2 split_point_d;

    /// Synchronous speed in rad/s when frequency and pole count were supplied.
    std::optional<double> sync_speed_rad_s;
};

/// W per ampere of active current: sqrt(3) V for three phases, V for one.
double power_scale(const MachineTestData& data);

/// Runs the fixed construction. Throws DegenerateConstruction.
HeylandDiagram build_diagram(const DiagramAnchors& anchors, const MachineTestData& data);

/// Convenience: refer_to_rated followed by build_diagram.
HeylandDiagram build_diagram(const MachineTestData& data);

/// Line through O' whose points all have intercept-ratio slip `s`.
/// s = 1 gives the output line; |s| -> inf approaches the torque line.
Line2 constant_slip_line(const HeylandDiagram& diag, double s);

/// Flat key=value export of the construction (9 significant digits).
std::string export_diagram(const HeylandDiagram& diag);

} // namespace heyland
