#include "heyland/geom.hpp"

#include <algorithm>

#include "heyland/errors.hpp"

namespace heyland {

Line2::Line2(Point2 anchor, Point2 direction) : anchor_(anchor) {
    const double len = norm(direction);
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw DegenerateInput("line direction has zero length");
    }
    direction_ = {direction.x / len, direction.y / len};
}

Line2 perpendicular_bisector(Point2 p, Point2 q) {
    const double scale = std::max({norm(p), norm(q), 1.0});
    const Point2 pq = q - p;
    if (norm(pq) <= kGeomEps * scale) {
        throw DegenerateInput("perpendicular bisector of coincident points");
    }
    const Point2 mid{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
    return Line2(mid, {-pq.y, pq.x});
}

Point2 line_intersection(const Line2& a, const Line2& b) {
    const double denom = cross(a.direction(), b.direction());
    if (std::abs(denom) <= kGeomEps) {
        throw ParallelLines();
    }
    const double t = cross(b.anchor() - a.anchor(), b.direction()) / denom;
    return a.at(t);
}

std::vector<Point2> line_circle_intersections(const Line2& line, const CircleShape& circle) {
    // Foot of the perpendicular from the center, then step +-half-chord.
    const Point2 w = line.anchor() - circle.center;
    const double t_foot = -dot(w, line.direction());
    const double offset = cross(line.direction(), w);
    const double r2 = circle.radius * circle.radius;
    const double disc = r2 - offset * offset;

    if (std::abs(disc) <= kGeomEps * r2) {
        return {line.at(t_foot)};
    }
    if (disc < 0.0) {
        return {};
    }
    const double half = std::sqrt(disc);
    return {line.at(t_foot - half), line.at(t_foot + half)};
}

double signed_distance(Point2 p, const Line2& line) {
    return cross(line.direction(), p - line.anchor());
}

Point2 extreme_point_on_circle(const CircleShape& circle, const Line2& line, Side side) {
    const Point2 n = line.left_normal();
    const double r = side == Side::left ? circle.radius : -circle.radius;
    return circle.center + r * n;
}

double vertical_intercept(const Line2& line, double x) {
    const Point2 d = line.direction();
    if (std::abs(d.x) <= kGeomEps) {
        throw VerticalLine();
    }
    const Point2 p = line.anchor();
    return p.y + (x - p.x) * (d.y / d.x);
}

} // namespace heyland
