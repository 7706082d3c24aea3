#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vapprox/maclane.hpp"

namespace vapprox {

struct Point {
    long x;
    Value y;  // finite
    bool operator==(const Point&) const = default;
};

struct Side {
    Point left, right;
    Value slope;
    long length;
};

/// Lower convex hull of finitely many points with distinct abscissas.
/// Vertices run from the leftmost to the rightmost point; collinear interior
/// points are not vertices, so consecutive slopes strictly increase.
class NewtonPolygon {
public:
    static NewtonPolygon from_points(std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Side>& sides() const { return sides_; }

    /// Throws Error when the polygon has no side.
    Value first_slope() const;
    /// Ordinate of the polygonal line at abscissa x (within range).
    Value height_at(long x) const;

    nlohmann::json to_json() const;
    /// Point cloud, hull and the dashed support lines of the given slopes.
    std::string to_svg(const std::vector<Value>& support_slopes = {}) const;

private:
    std::vector<Point> points_, vertices_;
    std::vector<Side> sides_;
};

/// Polygon of the q-expansion of f: points (i, v(f_i)) with v(f_i) finite.
NewtonPolygon newton_polygon(const MacLaneChain& nu, const Polynomial& q, const Polynomial& f);

/// L_{alpha,P}(0) = y - alpha * x.
Value support_line_value(const Point& p, const Value& alpha);

nlohmann::json to_json(const Value& v);

}  // namespace vapprox
