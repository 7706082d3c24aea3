#include "vapprox/newton.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace vapprox {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b is on or above segment ac.
mpq_class cross(const Point& a, const Point& b, const Point& c) {
    return mpq_class(b.x - a.x) * (c.y.rational() - a.y.rational()) -
           (b.y.rational() - a.y.rational()) * mpq_class(c.x - a.x);
}

}  // namespace

NewtonPolygon NewtonPolygon::from_points(std::vector<Point> points) {
    if (points.empty()) throw Error("a Newton polygon needs at least one point");
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].y.is_infinite()) throw Error("Newton polygon points must have finite ordinates");
        if (i && points[i].x == points[i - 1].x) throw Error("Newton polygon abscissas must be distinct");
    }
    NewtonPolygon np;
    np.points_ = points;
    for (const auto& p : points) {
        while (np.vertices_.size() >= 2 &&
               cross(np.vertices_[np.vertices_.size() - 2], np.vertices_.back(), p) <= 0)
            np.vertices_.pop_back();
        np.vertices_.push_back(p);
    }
    for (std::size_t i = 1; i < np.vertices_.size(); ++i) {
        const Point& a = np.vertices_[i - 1];
        const Point& b = np.vertices_[i];
        np.sides_.push_back({a, b, Value((b.y - a.y).rational() / (b.x - a.x)), b.x - a.x});
    }
    return np;
}

Value NewtonPolygon::first_slope() const {
    if (sides_.empty()) throw Error("the Newton polygon has no side");
    return sides_.front().slope;
}

Value NewtonPolygon::height_at(long x) const {
    if (x < vertices_.front().x || x > vertices_.back().x) throw Error("abscissa outside the polygon");
    for (const auto& s : sides_)
        if (x <= s.right.x) return s.left.y + s.slope * mpq_class(x - s.left.x);
    return vertices_.front().y;
}

nlohmann::json to_json(const Value& v) { return v.str(); }

nlohmann::json NewtonPolygon::to_json() const {
    auto pts = [](const std::vector<Point>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : v) a.push_back({p.x, p.y.str()});
        return a;
    };
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& s : sides_) sides.push_back({{"slope", s.slope.str()}, {"length", s.length}});
    return {{"points", pts(points_)}, {"vertices", pts(vertices_)}, {"sides", sides}};
}

std::string NewtonPolygon::to_svg(const std::vector<Value>& support_slopes) const {
    // floating point only from here on
    const double W = 480, H = 360, M = 40;
    double xmin = static_cast<double>(points_.front().x), xmax = static_cast<double>(points_.back().x);
    double ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& p : points_) {
        double y = p.y.rational().get_d();
        if (first || y < ymin) ymin = y;
        if (first || y > ymax) ymax = y;
        first = false;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto sx = [&](double x) { return M + (x - xmin) / (xmax - xmin) * (W - 2 * M); };
    auto sy = [&](double y) { return H - M - (y - ymin) / (ymax - ymin) * (H - 2 * M); };

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\"" << H - M
       << "\" stroke=\"#999\"/>\n";
    for (const auto& alpha : support_slopes) {
        // the line of slope alpha through the lowest point in that direction
        Value best = Value::infinity();
        for (const auto& p : points_) best = min(best, support_line_value(p, alpha));
        double a = alpha.rational().get_d(), b = best.rational().get_d();
        os << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(b + a * xmin) << "\" x2=\"" << sx(xmax) << "\" y2=\""
           << sy(b + a * xmax) << "\" stroke=\"#c33\" stroke-dasharray=\"6,4\"/>\n";
    }
    os << "<polyline fill=\"none\" stroke=\"#000\" stroke-width=\"2\" points=\"";
    for (const auto& v : vertices_) os << sx(static_cast<double>(v.x)) << ',' << sy(v.y.rational().get_d()) << ' ';
    os << "\"/>\n";
    for (const auto& p : points_)
        os << "<circle cx=\"" << sx(static_cast<double>(p.x)) << "\" cy=\"" << sy(p.y.rational().get_d())
           << "\" r=\"4\"><title>(" << p.x << ", " << p.y.str() << ")</title></circle>\n";
    os << "</svg>\n";
    return os.str();
}

NewtonPolygon newton_polygon(const MacLaneChain& nu, const Polynomial& q, const Polynomial& f) {
    QExpansion ex = q_expansion(f, q);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < ex.digits.size(); ++i) {
        Value v = nu.valuate(ex.digits[i]);
        if (v.is_infinite()) {
            if (i == 0 || i + 1 == ex.digits.size())
                throw Error("an end coefficient of the expansion lies in the support");
            continue;
        }
        pts.push_back({static_cast<long>(i), v});
    }
    return NewtonPolygon::from_points(std::move(pts));
}

Value support_line_value(const Point& p, const Value& alpha) { return p.y - alpha * mpq_class(p.x); }

}  // namespace vapprox
