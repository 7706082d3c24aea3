#include "doctest.h"

#include <random>

#include "vapprox/approach.hpp"

using namespace vapprox;

namespace {

Polynomial P(const BaseField& k, const char* s) { return parse_polynomial(k, s); }
MacLaneChain C(const BaseField& k, const char* s) { return MacLaneChain::parse(k, s); }

// Local splitting type of x^2 + b x + c over Q_p from the discriminant alone.
struct QuadType {
    int branches;
    int e, f;
};

QuadType quadratic_oracle(long p, long b, long c) {
    mpz_class d = mpz_class(b) * b - 4 * mpz_class(c);
    long v = 0;
    while (d % p == 0) {
        d /= p;
        ++v;
    }
    if (v % 2) return {1, 2, 1};
    if (p == 2) {
        mpz_class r = ((d % 8) + 8) % 8;
        if (r == 1) return {2, 1, 1};
        if (r == 5) return {1, 1, 2};
        return {1, 2, 1};
    }
    mpz_class r = ((d % p) + p) % p;
    mpz_class ls;
    mpz_powm(ls.get_mpz_t(), r.get_mpz_t(), mpz_class((p - 1) / 2).get_mpz_t(), mpz_class(p).get_mpz_t());
    return ls == 1 ? QuadType{2, 1, 1} : QuadType{1, 1, 2};
}

}  // namespace

TEST_CASE("membership in V_F") {
    auto k = BaseField::rationals(2);
    auto F = P(k, "x^2+2");
    CHECK(in_VF(MacLaneChain::gauss(k), F));
    CHECK_FALSE(in_VF(C(k, "x:1"), F));
    CHECK(in_VF(C(k, "x:1/2"), F));
    auto m = membership(C(k, "x:1/2; x^2+2:inf"), F);
    CHECK(m.member);
    CHECK(m.maximal);
}

TEST_CASE("maximal augmentation value") {
    auto k = BaseField::rationals(2);
    auto g = MacLaneChain::gauss(k);
    CHECK(max_augmentation_value(g, P(k, "x"), P(k, "x^2+2")) == Value(1, 2));
    CHECK(max_augmentation_value(g, P(k, "x"), P(k, "x-2")) == Value(1));
    std::vector<Point> fig;
    long ys[] = {1, 0, 3, 2, 1, 2};
    for (long i = 0; i < 6; ++i) fig.push_back({i, Value(ys[i])});
    CHECK(max_augmentation_value(NewtonPolygon::from_points(fig)) == Value(1));
    CHECK_THROWS_AS(max_augmentation_value(g, P(k, "x+1"), P(k, "x^2+2")), Error);
}

TEST_CASE("augmenting toward F") {
    auto k = BaseField::rationals(2);
    auto g = MacLaneChain::gauss(k);
    auto F = P(k, "x^2+2");
    auto a = augment_toward_F(g, P(k, "x"), F, Value(1, 2));
    CHECK(a == C(k, "x:1/2"));
    CHECK(a.valuate(F) == Value(1));
    auto b = augment_toward_F(g, P(k, "x"), F, Value(1, 4));
    CHECK(b.valuate(F) == Value(1, 2));
    CHECK(in_VF(b, F));
    CHECK_THROWS_AS(augment_toward_F(g, P(k, "x"), F, Value(5, 8)), Error);
    CHECK_THROWS_AS(augment_toward_F(g, P(k, "x"), F, Value(0)), Error);
}

TEST_CASE("sharp cutoff at alpha_1") {
    const Value delta(1, 64);
    struct Fx {
        BaseField k;
        const char* chain;
        const char* q;
        const char* f;
    };
    std::vector<Fx> fixtures = {
        {BaseField::rationals(2), "x:0", "x", "x^2+2"},
        {BaseField::rationals(2), "x:0", "x", "x-2"},
        {BaseField::rationals(5), "x:0", "x+3", "x^2+1"},
        {BaseField::rationals(2), "x:0", "x+1", "x^2-17"},
        {BaseField::rational_functions(2), "x:0", "x", "x^2+t*x+t^3"},
        {BaseField::rationals(3), "x:0", "x^2+1", "x^4+2*x^2+10"},
    };
    for (const auto& fx : fixtures) {
        auto nu = C(fx.k, fx.chain);
        auto Q = P(fx.k, fx.q), F = P(fx.k, fx.f);
        CAPTURE(std::string(fx.f));
        const Value a1 = max_augmentation_value(nu, Q, F);
        const Value vq = nu.valuate(Q);
        CHECK(a1 > vq);
        CHECK(in_VF(nu.augment(Q, vq + delta), F));
        CHECK(in_VF(nu.augment(Q, a1), F));
        CHECK_FALSE(in_VF(nu.augment(Q, a1 + delta), F));
        CHECK(augment_toward_F(nu, Q, F, a1).valuate(F) > nu.valuate(F));
        CHECK_FALSE(nu.augment(Q, a1).divides_in_graded(Q, F));
    }
}

TEST_CASE("graded factorization fixtures") {
    auto k5 = BaseField::rationals(5);
    auto s5 = graded_factorization(MacLaneChain::gauss(k5), P(k5, "x^2+1"));
    REQUIRE(s5.entries.size() == 2);
    CHECK(s5.entries[0].factor.str() == "y+2");
    CHECK(s5.entries[1].factor.str() == "y+3");
    CHECK(s5.entries[0].slope == Value(0));

    auto k3 = BaseField::rationals(3);
    auto s3 = graded_factorization(MacLaneChain::gauss(k3), P(k3, "x^2+1"));
    REQUIRE(s3.entries.size() == 1);
    CHECK(s3.entries[0].factor.str() == "y^2+1");

    auto kt = BaseField::rational_functions(2);
    auto st = graded_factorization(MacLaneChain::gauss(kt), P(kt, "x^2+x+t"));
    REQUIRE(st.entries.size() == 2);
    CHECK(st.entries[0].factor.str() == "y");
    CHECK(st.entries[1].factor.str() == "y+1");
    CHECK(count_extensions_lower_bound(MacLaneChain::gauss(kt), P(kt, "x^2+x+t")) == 2);

    CHECK(graded_factorization(C(k5, "x:1"), P(k5, "x^2+1")).unit_flag);
}

TEST_CASE("count at the Gauss chain matches the reduction factorization") {
    std::mt19937_64 rng(3);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        auto k = BaseField::rationals(p);
        auto fp = FiniteField::prime_field(p);
        std::uniform_int_distribution<long> cd(-20, 20);
        for (int it = 0; it < 40; ++it) {
            std::vector<BaseElem> c;
            std::vector<FFElem> red;
            for (int i = 0; i < 4; ++i) {
                long v = cd(rng);
                c.push_back(BaseElem::integer(k, v));
                red.push_back(fp->from_int(v));
            }
            c.push_back(BaseElem::one(k));
            red.push_back(fp->one());
            Polynomial F(k, c);
            if (c[0].is_zero()) continue;
            std::size_t expected = ff_factor(FFPoly(fp, red)).size();
            CHECK(count_extensions_lower_bound(MacLaneChain::gauss(k), F) == expected);
        }
    }
}

TEST_CASE("enumeration fixtures") {
    auto k5 = BaseField::rationals(5);
    auto b5 = enumerate_extensions(P(k5, "x^2+1"), k5, 5);
    REQUIRE(b5.size() == 2);
    for (const auto& b : b5) {
        CHECK(b.e == 1);
        CHECK(b.f == 1);
        CHECK(b.terminal);
    }

    auto k2 = BaseField::rationals(2);
    auto b2 = enumerate_extensions(P(k2, "x^2+2"), k2, 5);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].e == 2);
    CHECK(b2[0].f == 1);
    CHECK(b2[0].terminal);
    CHECK(b2[0].chain.str() == "x:1/2; x^2+2:inf");

    auto b3 = enumerate_extensions(P(k2, "x^2+x+1"), k2, 5);
    REQUIRE(b3.size() == 1);
    CHECK(b3[0].e == 1);
    CHECK(b3[0].f == 2);

    CHECK_THROWS_AS(enumerate_extensions(P(k2, "2*x^2+1"), k2, 5), Error);
    CHECK_THROWS_AS(enumerate_extensions(P(k2, "x^2+2"), k2, 0), Error);
    CHECK_THROWS_AS(enumerate_extensions(P(k2, "x^2-1"), k2, 5), Error);
}

TEST_CASE("quadratic enumeration matches the discriminant oracle") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> cd(-40, 40);
    int checked = 0;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        auto k = BaseField::rationals(p);
        for (int it = 0; it < 60; ++it) {
            long b = cd(rng), c = cd(rng);
            mpz_class d = mpz_class(b) * b - 4 * mpz_class(c);
            if (c == 0 || (sgn(d) >= 0 && mpz_perfect_square_p(d.get_mpz_t()))) continue;
            std::vector<BaseElem> co = {BaseElem::integer(k, c), BaseElem::integer(k, b), BaseElem::one(k)};
            Polynomial F(k, co);
            auto br = enumerate_extensions(F, k, 32);
            auto want = quadratic_oracle(static_cast<long>(p), b, c);
            CAPTURE(F.str());
            CAPTURE(p);
            REQUIRE(br.size() == static_cast<std::size_t>(want.branches));
            long sum = 0;
            for (const auto& x : br) {
                CHECK(x.terminal);
                CHECK(x.e == want.e);
                CHECK(x.f == static_cast<unsigned>(want.f));
                sum += x.e * x.f;
            }
            CHECK(sum == 2);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("branches are pairwise incomparable and satisfy the fundamental inequality") {
    auto k = BaseField::rationals(2);
    for (const char* f : {"x^4+2", "x^4-17", "x^3+x+1", "x^4+x^2+4", "x^6+4*x^3+8"}) {
        auto F = P(k, f);
        auto br = enumerate_extensions(F, k, 16);
        long sum = 0;
        std::vector<Polynomial> sample = {F, P(k, "x"), P(k, "x+1"), P(k, "x-1"), P(k, "x^2+x+1")};
        for (const auto& b : br) {
            sum += b.e * b.f;
            for (const auto& st : b.chain.stages()) sample.push_back(st.key);
        }
        CAPTURE(std::string(f));
        CHECK(sum <= F.degree());
        for (std::size_t i = 0; i < br.size(); ++i)
            for (std::size_t j = i + 1; j < br.size(); ++j)
                CHECK(compare(br[i].chain, br[j].chain, sample) == Comparison::Incomparable);
    }
}

TEST_CASE("single-extension fixtures keep one graded factor along the way") {
    auto k3 = BaseField::rationals(3);
    auto k2 = BaseField::rationals(2);
    std::vector<std::pair<BaseField, const char*>> fx = {{k3, "x^2+1"}, {k2, "x^2+2"}, {k2, "x^4+2"}};
    for (const auto& [k, f] : fx) {
        auto F = P(k, f);
        EnumerationTrace tr;
        auto br = enumerate_extensions(F, k, 16, &tr);
        CHECK(br.size() == 1);
        for (const auto& node : tr.nodes) {
            auto c = MacLaneChain::parse(k, node);
            if (c.is_support()) continue;
            CHECK(count_extensions_lower_bound(c, F) == 1);
        }
    }
}
