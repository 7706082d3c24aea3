#include "doctest.h"

#include <random>

#include "vapprox/newton.hpp"

using namespace vapprox;

namespace {

std::vector<Point> six_points() {
    std::vector<Point> pts;
    long ys[] = {1, 0, 3, 2, 1, 2};
    for (long i = 0; i < 6; ++i) pts.push_back({i, Value(ys[i])});
    return pts;
}

// The polygonal line through vs lies on or below every point.
bool below_all(const std::vector<Point>& vs, const std::vector<Point>& pts) {
    if (vs.front().x != pts.front().x || vs.back().x != pts.back().x) return false;
    for (const auto& p : pts) {
        for (std::size_t i = 1; i < vs.size(); ++i) {
            if (p.x < vs[i - 1].x || p.x > vs[i].x) continue;
            mpq_class h = vs[i - 1].y.rational() +
                          (vs[i].y.rational() - vs[i - 1].y.rational()) * (p.x - vs[i - 1].x) / (vs[i].x - vs[i - 1].x);
            if (p.y.rational() < h) return false;
            break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("the six point example") {
    auto np = NewtonPolygon::from_points(six_points());
    std::vector<Point> want = {{0, Value(1)}, {1, Value(0)}, {4, Value(1)}, {5, Value(2)}};
    CHECK(np.vertices() == want);
    REQUIRE(np.sides().size() == 3);
    CHECK(np.sides()[0].slope == Value(-1));
    CHECK(np.sides()[1].slope == Value(1, 3));
    CHECK(np.sides()[2].slope == Value(1));
    CHECK(np.sides()[1].length == 3);
    CHECK(np.first_slope() == Value(-1));
    CHECK(support_line_value({4, Value(1)}, Value(-1)) == Value(5));
}

TEST_CASE("polygons of expansions") {
    auto k = BaseField::rationals(2);
    auto g = MacLaneChain::gauss(k);
    auto np = newton_polygon(g, parse_polynomial(k, "x"), parse_polynomial(k, "x^2+2"));
    REQUIRE(np.sides().size() == 1);
    CHECK(np.first_slope() == Value(-1, 2));
    CHECK(np.sides()[0].length == 2);
    auto flat = newton_polygon(g, parse_polynomial(k, "x"), parse_polynomial(k, "x+3"));
    CHECK(flat.first_slope() == Value(0));
    CHECK(support_line_value({2, Value(0)}, Value(-1, 2)) == Value(1));
    CHECK(support_line_value({0, Value(7)}, Value(13, 3)) == Value(7));
    CHECK_THROWS_AS(NewtonPolygon::from_points({{0, Value(1)}}).first_slope(), Error);
    CHECK_THROWS_AS(newton_polygon(g, parse_polynomial(k, "x"), parse_polynomial(k, "x^2+x")), Error);
}

TEST_CASE("collinear points are not vertices") {
    auto np = NewtonPolygon::from_points({{0, Value(2)}, {1, Value(1)}, {2, Value(0)}, {3, Value(0)}});
    CHECK(np.vertices().size() == 3);
    CHECK(np.sides()[0].length == 2);
}

TEST_CASE("hull is minimal and convex on random point sets") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> yd(-6, 6), nd(1, 8), den(1, 3);
    for (int it = 0; it < 300; ++it) {
        std::vector<Point> pts;
        int n = nd(rng);
        for (int i = 0; i < n; ++i) pts.push_back({i, Value(yd(rng), den(rng))});
        auto np = NewtonPolygon::from_points(pts);
        const auto& vs = np.vertices();
        CHECK(below_all(vs, pts));
        for (std::size_t i = 1; i < np.sides().size(); ++i) CHECK(np.sides()[i - 1].slope < np.sides()[i].slope);
        // every proper subset of the vertices keeping both ends fails to lie below all points
        const std::size_t inner = vs.size() >= 2 ? vs.size() - 2 : 0;
        for (std::uint32_t mask = 0; mask + 1 < (1u << inner); ++mask) {
            std::vector<Point> sub = {vs.front()};
            for (std::size_t j = 0; j < inner; ++j)
                if (mask >> j & 1u) sub.push_back(vs[j + 1]);
            sub.push_back(vs.back());
            CHECK_FALSE(below_all(sub, pts));
        }
    }
}

TEST_CASE("json and svg export") {
    auto np = NewtonPolygon::from_points(six_points());
    auto j = np.to_json();
    CHECK(j["sides"][1]["slope"] == "1/3");
    CHECK(j["vertices"].size() == 4);
    auto svg = np.to_svg({Value(-1)});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
}
