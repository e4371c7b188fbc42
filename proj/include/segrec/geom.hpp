#pragma once

#include "segrec/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace segrec {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }
};

/// Closed straight segment between two distinct points.
struct Segment {
    Point p;
    Point q;

    Segment() = default;
    Segment(Point a, Point b);
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Segment of exact length one: anchor plus a rational point on the unit circle.
class UnitSegment {
public:
    UnitSegment(Point anchor, Point direction);

    [[nodiscard]] const Point& anchor() const { return anchor_; }
    [[nodiscard]] const Point& direction() const { return direction_; }
    [[nodiscard]] Point tip() const { return anchor_ + direction_; }
    [[nodiscard]] Segment segment() const { return {anchor_, tip()}; }

    friend bool operator==(const UnitSegment&, const UnitSegment&) = default;

private:
    Point anchor_;
    Point direction_;
};

/// k-bend polyline stored as its k+2 vertices. Collinear bends are allowed.
class Polyline {
public:
    explicit Polyline(std::vector<Point> points);

    [[nodiscard]] const std::vector<Point>& points() const { return points_; }
    [[nodiscard]] std::size_t bends() const { return points_.size() - 2; }
    [[nodiscard]] std::size_t segment_count() const { return points_.size() - 1; }
    [[nodiscard]] Segment segment(std::size_t i) const { return {points_[i], points_[i + 1]}; }

    friend bool operator==(const Polyline&, const Polyline&) = default;

private:
    std::vector<Point> points_;
};

/// Any geometric object a vertex can be realized by.
using Shape = std::variant<UnitSegment, Polyline>;

struct Box {
    Rational xmin, ymin, xmax, ymax;
    [[nodiscard]] bool overlaps(const Box& o) const {
        return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
    }
};

Rational cross(const Point& a, const Point& b);

/// Sign of (q - p) x (r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point& p, const Point& q, const Point& r);

/// Closed-set intersection test. Touching endpoints and collinear overlap count.
bool segments_intersect(const Segment& s, const Segment& t);

bool polylines_intersect(const Polyline& a, const Polyline& b);

bool shapes_intersect(const Shape& a, const Shape& b);

/// Segments making up a shape, in order.
std::vector<Segment> shape_segments(const Shape& s);
Box bounding_box(const Shape& s);
Box bounding_box(const Segment& s);

/// Intersection point of the supporting lines of two non-parallel segments.
std::optional<Point> line_intersection(const Segment& s, const Segment& t);

/// The unique common point of two closed segments, if they meet in exactly one point.
std::optional<Point> crossing_point(const Segment& s, const Segment& t);

/// Tangent-half-angle parametrization ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Point unit_direction_from_parameter(const Rational& t);

/// Rational unit-circle point with x > 0 whose slope is within max_deviation
/// of `slope`. A zero deviation succeeds only when the slope is hit exactly.
Point snap_slope_to_unit_direction(const Rational& slope, const Rational& max_deviation);

/// Squared Euclidean norm.
inline Rational norm2(const Point& p) { return p.x * p.x + p.y * p.y; }

}  // namespace segrec
