#pragma once

#include <cmath>
#include <vector>

namespace heyland {

/// Relative tolerance used for every geometric degeneracy decision.
inline constexpr double kGeomEps = 1e-9;

/// Point (or vector) in the current plane: x reactive amperes, y active amperes.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }

/// Infinite line stored as anchor point plus unit direction.
class Line2 {
public:
    /// Normalises `direction`; throws DegenerateInput if it has zero length.
    Line2(Point2 anchor, Point2 direction);

    static Line2 through(Point2 from, Point2 to) { return Line2(from, to - from); }
    static Line2 with_slope(Point2 anchor, double slope) { return Line2(anchor, {1.0, slope}); }

    Point2 anchor() const noexcept { return anchor_; }
    Point2 direction() const noexcept { return direction_; }
    /// Unit normal pointing to the left of the direction.
    Point2 left_normal() const noexcept { return {-direction_.y, direction_.x}; }
    Point2 at(double t) const noexcept { return anchor_ + t * direction_; }
    /// dy/dx; infinite for vertical lines.
    double slope() const noexcept { return direction_.y / direction_.x; }

private:
    Point2 anchor_;
    Point2 direction_;
};

struct CircleShape {
    Point2 center;
    double radius = 0.0;
};

enum class Side { left, right };

Line2 perpendicular_bisector(Point2 p, Point2 q);

/// Throws ParallelLines when the directions are (nearly) parallel.
Point2 line_intersection(const Line2& a, const Line2& b);

/// Zero, one (tangent) or two points, ordered by parameter along `line`.
std::vector<Point2> line_circle_intersections(const Line2& line, const CircleShape& circle);

/// Positive on the left of the line direction.
double signed_distance(Point2 p, const Line2& line);

/// Point of `circle` farthest from `line` on the requested side.
Point2 extreme_point_on_circle(const CircleShape& circle, const Line2& line, Side side);

/// y-coordinate of `line` at abscissa `x`; throws VerticalLine.
double vertical_intercept(const Line2& line, double x);

} // namespace heyland
