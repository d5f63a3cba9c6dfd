#include "heyland/performance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "heyland/errors.hpp"
#include "heyland/format.hpp"

namespace heyland {

std::string_view to_string(Regime regime) {
    switch (regime) {
    case Regime::motoring: return "motoring";
    case Regime::generating: return "generating";
    case Regime::braking: return "braking";
    case Regime::no_load: return "no_load";
    }
    return "unknown";
}

Regime classify_regime(double s) {
    if (s == 0.0) {
        throw UndefinedRegime();
    }
    if (s < 0.0) {
        return Regime::generating;
    }
    return s <= 1.0 ? Regime::motoring : Regime::braking;
}

OperatingPoint analyze_point(const HeylandDiagram& diag, Point2 p) {
    const double r = diag.circle.radius;
    const double radial_gap = std::abs(distance(p, diag.circle.center) - r);
    if (radial_gap > kGeomEps * r) {
        throw OffLocus(radial_gap / r);
    }

    const double k = diag.power_scale_w_per_a;
    const Point2 o = diag.anchors.o_prime;
    const double j = vertical_intercept(diag.output_line, p.x);
    const double kk = vertical_intercept(diag.torque_line, p.x);
    const double l = o.y;

    OperatingPoint op;
    op.point = p;
    op.line_current_a = norm(p);
    op.power_factor = p.y / op.line_current_a;
    op.input_power_w = k * p.y;
    op.output_power_w = k * (p.y - j);
    op.rotor_cu_w = k * (j - kk);
    op.stator_cu_w = k * (kk - l);
    op.fixed_loss_w = k * l;
    op.airgap_power_w = k * (p.y - kk);
    op.efficiency = op.output_power_w / op.input_power_w;

    if (distance(p, o) <= kGeomEps * r) {
        // No-load point: every load intercept is zero.
        op.slip = 0.0;
        op.regime = Regime::no_load;
    } else {
        if (std::abs(p.y - kk) <= kGeomEps * r) {
            throw ZeroAirgap();
        }
        op.slip = (j - kk) / (p.y - kk);
        op.regime = classify_regime(op.slip);
    }
    if (diag.sync_speed_rad_s) {
        op.torque_nm = op.airgap_power_w / *diag.sync_speed_rad_s;
    }
    return op;
}

namespace {

Point2 max_output_point(const HeylandDiagram& diag) {
    return extreme_point_on_circle(diag.circle, diag.output_line, Side::left);
}

double output_gap_at(const HeylandDiagram& diag, Point2 p) {
    return p.y - vertical_intercept(diag.output_line, p.x);
}

} // namespace

OperatingPoint point_at_output(const HeylandDiagram& diag, double output_w) {
    if (!(output_w >= 0.0)) {
        throw PreconditionError("output power must be non-negative");
    }
    const double k = diag.power_scale_w_per_a;
    const Point2 tangent = max_output_point(diag);
    const double max_output_w = k * output_gap_at(diag, tangent);
    if (output_w > max_output_w) {
        throw InfeasibleOutput(output_w, max_output_w);
    }

    const Line2 shifted(diag.anchors.o_prime + Point2{0.0, output_w / k},
                        diag.output_line.direction());
    const auto hits = line_circle_intersections(shifted, diag.circle);
    if (hits.empty()) {
        // Rounding right at the tangency.
        return analyze_point(diag, tangent);
    }
    const auto stable = std::min_element(hits.begin(), hits.end(),
                                         [](Point2 a, Point2 b) { return a.x < b.x; });
    return analyze_point(diag, *stable);
}

OperatingPoint point_at_slip(const HeylandDiagram& diag, double s, Branch branch) {
    const Line2 line = constant_slip_line(diag, s);
    const Point2 o = diag.anchors.o_prime;
    const double r = diag.circle.radius;

    std::vector<Point2> candidates;
    for (Point2 p : line_circle_intersections(line, diag.circle)) {
        if (distance(p, o) > kGeomEps * r) {
            candidates.push_back(p);
        }
    }
    if (candidates.empty()) {
        throw NoIntersection("constant-slip line meets the locus only at the no-load point");
    }
    auto pick = candidates.front();
    if (candidates.size() == 2) {
        const bool first_higher = candidates[0].y >= candidates[1].y;
        pick = (branch == Branch::upper) == first_higher ? candidates[0] : candidates[1];
    }
    return analyze_point(diag, pick);
}

ExtremalSet extremal_points(const HeylandDiagram& diag) {
    const CircleShape& c = diag.circle;
    ExtremalSet set;
    set.max_output = analyze_point(diag, max_output_point(diag));
    set.max_torque = analyze_point(diag, extreme_point_on_circle(c, diag.torque_line, Side::left));
    set.max_input = analyze_point(diag, c.center + Point2{0.0, c.radius});

    // Ray from the origin tangent to the circle on its upper side.
    const double dist_c = norm(c.center);
    const double elevation = std::atan2(c.center.y, c.center.x) + std::asin(c.radius / dist_c);
    const double reach = std::sqrt(dist_c * dist_c - c.radius * c.radius);
    Point2 tangent{reach * std::cos(elevation), reach * std::sin(elevation)};
    // Snap radially onto the circle so the on-locus check sees no rounding drift.
    const Point2 radial = tangent - c.center;
    tangent = c.center + (c.radius / norm(radial)) * radial;
    set.max_power_factor = analyze_point(diag, tangent);
    return set;
}

std::vector<SweepSample> sweep(const HeylandDiagram& diag, double s_from, double s_to, int n,
                               Spacing spacing) {
    if (n < 2) {
        throw PreconditionError("sweep needs at least two samples");
    }
    if (!(s_from < s_to)) {
        throw PreconditionError("sweep range must be ascending and non-empty");
    }
    if (spacing == Spacing::logarithmic && !(s_from > 0.0)) {
        throw PreconditionError("logarithmic sweep needs a positive lower bound");
    }

    std::vector<SweepSample> samples;
    samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        double s = 0.0;
        if (i == n - 1) {
            s = s_to;
        } else if (spacing == Spacing::linear) {
            s = std::lerp(s_from, s_to, t);
        } else {
            s = s_from * std::pow(s_to / s_from, t);
        }
        if (s == 0.0) {
            continue;
        }
        SweepSample sample;
        sample.slip = s;
        try {
            sample.point = point_at_slip(diag, s);
        } catch (const Error& e) {
            sample.error = e.what();
        }
        samples.push_back(std::move(sample));
    }
    return samples;
}

std::string sweep_csv(const std::vector<SweepSample>& samples) {
    std::ostringstream out;
    out << "s,line_current_a,power_factor,input_w,output_w,airgap_w,rotor_cu_w,stator_cu_w,"
           "fixed_w,efficiency,regime\n";
    auto num = [](double v) { return fmt::significant(v, 9); };
    for (const auto& sample : samples) {
        out << num(sample.slip);
        if (!sample.point) {
            out << ",,,,,,,,,,\n";
            continue;
        }
        const OperatingPoint& op = *sample.point;
        out << ',' << num(op.line_current_a) << ',' << num(op.power_factor) << ','
            << num(op.input_power_w) << ',' << num(op.output_power_w) << ','
            << num(op.airgap_power_w) << ',' << num(op.rotor_cu_w) << ','
            << num(op.stator_cu_w) << ',' << num(op.fixed_loss_w) << ','
            << num(op.efficiency) << ',' << to_string(op.regime) << '\n';
    }
    return out.str();
}

} // namespace heyland
