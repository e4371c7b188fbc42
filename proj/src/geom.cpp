#include "segrec/geom.hpp"

#include <algorithm>

namespace segrec {

Segment::Segment(Point a, Point b) : p(std::move(a)), q(std::move(b)) {
    if (p == q) throw std::invalid_argument("Segment: degenerate (p == q)");
}

UnitSegment::UnitSegment(Point anchor, Point direction)
    : anchor_(std::move(anchor)), direction_(std::move(direction)) {
    if (norm2(direction_) != Rational(1))
        throw std::invalid_argument("UnitSegment: direction is not on the unit circle");
}

Polyline::Polyline(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw std::invalid_argument("Polyline: needs at least two points");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (points_[i] == points_[i + 1])
            throw std::invalid_argument("Polyline: consecutive points coincide");
}

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

int orientation(const Point& p, const Point& q, const Point& r) {
    return cross(q - p, r - p).sign();
}

namespace {

// r lies on the closed segment pq, given that p, q, r are collinear.
bool on_segment(const Point& p, const Point& q, const Point& r) {
    return min(p.x, q.x) <= r.x && r.x <= max(p.x, q.x) && min(p.y, q.y) <= r.y &&
           r.y <= max(p.y, q.y);
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t) {
    if (!bounding_box(s).overlaps(bounding_box(t))) return false;
    int o1 = orientation(s.p, s.q, t.p);
    int o2 = orientation(s.p, s.q, t.q);
    int o3 = orientation(t.p, t.q, s.p);
    int o4 = orientation(t.p, t.q, s.q);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(s.p, s.q, t.p)) return true;
    if (o2 == 0 && on_segment(s.p, s.q, t.q)) return true;
    if (o3 == 0 && on_segment(t.p, t.q, s.p)) return true;
    if (o4 == 0 && on_segment(t.p, t.q, s.q)) return true;
    return false;
}

bool polylines_intersect(const Polyline& a, const Polyline& b) {
    for (std::size_t i = 0; i < a.segment_count(); ++i)
        for (std::size_t j = 0; j < b.segment_count(); ++j)
            if (segments_intersect(a.segment(i), b.segment(j))) return true;
    return false;
}

std::vector<Segment> shape_segments(const Shape& s) {
    if (const auto* u = std::get_if<UnitSegment>(&s)) return {u->segment()};
    const auto& pl = std::get<Polyline>(s);
    std::vector<Segment> out;
    out.reserve(pl.segment_count());
    for (std::size_t i = 0; i < pl.segment_count(); ++i) out.push_back(pl.segment(i));
    return out;
}

Box bounding_box(const Segment& s) {
    return {min(s.p.x, s.q.x), min(s.p.y, s.q.y), max(s.p.x, s.q.x), max(s.p.y, s.q.y)};
}

Box bounding_box(const Shape& s) {
    auto segs = shape_segments(s);
    Box b = bounding_box(segs.front());
    for (const auto& seg : segs) {
        Box c = bounding_box(seg);
        b = {min(b.xmin, c.xmin), min(b.ymin, c.ymin), max(b.xmax, c.xmax), max(b.ymax, c.ymax)};
    }
    return b;
}

bool shapes_intersect(const Shape& a, const Shape& b) {
    auto sa = shape_segments(a);
    auto sb = shape_segments(b);
    for (const auto& x : sa)
        for (const auto& y : sb)
            if (segments_intersect(x, y)) return true;
    return false;
}

std::optional<Point> line_intersection(const Segment& s, const Segment& t) {
    Point d1 = s.q - s.p;
    Point d2 = t.q - t.p;
    Rational den = cross(d1, d2);
    if (den.is_zero()) return std::nullopt;
    Rational u = cross(t.p - s.p, d2) / den;
    return s.p + u * d1;
}

std::optional<Point> crossing_point(const Segment& s, const Segment& t) {
    if (!segments_intersect(s, t)) return std::nullopt;
    auto p = line_intersection(s, t);
    if (p) return p;
    // Collinear: a single common point only when they touch at an endpoint.
    std::vector<Point> shared;
    for (const Point* c : {&t.p, &t.q})
        if (on_segment(s.p, s.q, *c)) shared.push_back(*c);
    for (const Point* c : {&s.p, &s.q})
        if (on_segment(t.p, t.q, *c)) shared.push_back(*c);
    for (std::size_t i = 1; i < shared.size(); ++i)
        if (shared[i] != shared[0]) return std::nullopt;
    return shared.front();
}

Point unit_direction_from_parameter(const Rational& t) {
    Rational t2 = t * t;
    Rational den = Rational(1) + t2;
    return {(Rational(1) - t2) / den, Rational(2) * t / den};
}

namespace {

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

Rational slope_of_parameter(const Rational& t) {
    return Rational(2) * t / (Rational(1) - t * t);
}

}  // namespace

Point snap_slope_to_unit_direction(const Rational& slope, const Rational& max_deviation) {
    if (max_deviation.sign() < 0)
        throw std::invalid_argument("snap_slope_to_unit_direction: negative deviation");
    if (slope.is_zero()) return {Rational(1), Rational(0)};
    // slope = 2t/(1-t^2)  <=>  slope*t^2 + 2t - slope = 0, root with |t| < 1.
    if (auto root = exact_sqrt(Rational(1) + slope * slope))
        return unit_direction_from_parameter((*root - Rational(1)) / slope);
    if (max_deviation.is_zero())
        throw std::invalid_argument("snap_slope_to_unit_direction: no exact rational direction");
    // The slope is strictly increasing in t on (-1, 1).
    Rational lo(-1), hi(1);
    for (;;) {
        Rational mid = (lo + hi) / Rational(2);
        Rational s = slope_of_parameter(mid);
        if ((s - slope).abs() <= max_deviation) return unit_direction_from_parameter(mid);
        if (s < slope)
            lo = mid;
        else
            hi = mid;
    }
}

}  // namespace segrec
