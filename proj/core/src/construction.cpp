#include "heyland/construction.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "heyland/errors.hpp"
#include "heyland/format.hpp"

namespace heyland {

double power_scale(const MachineTestData& data) {
    return data.phases == 3 ? std::numbers::sqrt3 * data.v_rated : data.v_rated;
}

HeylandDiagram build_diagram(const DiagramAnchors& anchors, const MachineTestData& data) {
    const Point2 o = anchors.o_prime;
    const Point2 a = anchors.a;
    if (!(a.x - o.x > kGeomEps * std::max(anchors.isc_referred, norm(a)))) {
        throw DegenerateConstruction("blocked-rotor point must lie right of the no-load point");
    }

    const Line2 horizontal(o, {1.0, 0.0});
    Point2 center;
    try {
        // Intersecting along the horizontal keeps center.y == O'.y bit for bit.
        center = line_intersection(horizontal, perpendicular_bisector(o, a));
    } catch (const ParallelLines&) {
        throw DegenerateConstruction("perpendicular bisector of O'A is parallel to the reference horizontal");
    } catch (const DegenerateInput& e) {
        throw DegenerateConstruction(e.what());
    }

    // D sits on the vertical through A; rotor_cu_fraction of AD' goes to the rotor.
    const Point2 d{a.x, std::lerp(a.y, o.y, data.rotor_cu_fraction)};

    std::optional<double> sync_speed;
    if (data.f_hz && data.poles) {
        sync_speed = 4.0 * std::numbers::pi * *data.f_hz / *data.poles;
    }

    return HeylandDiagram{
        .anchors = anchors,
        .circle = {center, distance(center, o)},
        .ref_horizontal = horizontal,
        .output_line = Line2::through(o, a),
        .torque_line = Line2::through(o, d),
        .power_scale_w_per_a = power_scale(data),
        .split_point_d = d,
        .sync_speed_rad_s = sync_speed,
    };
}

HeylandDiagram build_diagram(const MachineTestData& data) {
    return build_diagram(refer_to_rated(data), data);
}

Line2 constant_slip_line(const HeylandDiagram& diag, double s) {
    if (s == 0.0) {
        throw InvalidSlip();
    }
    const double m_out = diag.output_line.slope();
    const double m_tq = diag.torque_line.slope();
    return Line2::with_slope(diag.anchors.o_prime, m_tq + (m_out - m_tq) / s);
}

std::string export_diagram(const HeylandDiagram& diag) {
    std::ostringstream out;
    auto put = [&](const char* key, double v) { out << key << " = " << fmt::significant(v, 9) << '\n'; };
    put("C_x", diag.circle.center.x);
    put("C_y", diag.circle.center.y);
    put("r", diag.circle.radius);
    put("D_x", diag.split_point_d.x);
    put("D_y", diag.split_point_d.y);
    put("power_scale_w_per_a", diag.power_scale_w_per_a);
    put("O_prime_x", diag.anchors.o_prime.x);
    put("O_prime_y", diag.anchors.o_prime.y);
    put("A_x", diag.anchors.a.x);
    put("A_y", diag.anchors.a.y);
    return out.str();
}

} // namespace heyland
