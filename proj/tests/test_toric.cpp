#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "instanton/toric.hpp"

#include <random>

using namespace inst;

namespace {

long rr(const ToricSurface& s, const EquivClass& xi)
{
    GQ v = (s.intersect(xi, xi) - s.intersect(xi, s.canonical())) * GQ(mpq_class(1, 2)) + GQ(1);
    return v.re.get_num().get_si();
}

ToricSurface random_blowups(std::mt19937& g, int count)
{
    const char* names[] = {"P2", "P1xP1", "F1"};
    ToricSurface s = builtin_surface(names[std::uniform_int_distribution<int>(0, 2)(g)]);
    for (int k = 0; k < count; ++k) {
        int i = std::uniform_int_distribution<int>(0, s.chi() - 1)(g);
        s = blowup(s, s.points()[i].id, "X" + std::to_string(k));
    }
    return s;
}

EquivClass random_class(std::mt19937& g, const ToricSurface& s)
{
    std::map<std::string, int> c;
    for (const auto& [n, v] : s.classes()) c[n] = std::uniform_int_distribution<int>(-3, 3)(g);
    return s.combination(c);
}

}  // namespace

TEST_CASE("projective plane")
{
    ToricSurface s = builtin_surface("P2");
    CHECK(s.chi() == 3);
    EquivClass h = s.cls("H");
    CHECK(h[s.point_index("p_x")] == Weight{-1, 0});
    CHECK(h[s.point_index("p_y")] == Weight{0, -1});
    CHECK(h[s.point_index("p_z")] == Weight{0, 0});
    CHECK(s.intersect(h, h) == GQ(1));
    CHECK(s.intersect(h, s.canonical()) == GQ(-3));
    CHECK(s.K2() == 9);
    CHECK(s.sigma() == 1);
    CHECK(s.chiO() == 1);
}

TEST_CASE("F1 and P1xP1")
{
    ToricSurface f = builtin_surface("F1");
    CHECK(f.name() == "F1");
    CHECK(f.chi() == 4);
    CHECK(f.K2() == 8);
    CHECK(f.sigma() == 0);
    CHECK(f.intersect(f.cls("H"), f.cls("H")) == GQ(1));
    CHECK(f.intersect(f.cls("E"), f.cls("E")) == GQ(-1));
    CHECK(f.intersect(f.cls("H"), f.cls("E")) == GQ(0));
    EquivClass e = f.cls("E");
    CHECK(e[f.point_index("p_z1")] == Weight{1, 0});
    CHECK(e[f.point_index("p_z2")] == Weight{0, 1});
    CHECK(f.points()[f.point_index("p_z1")].wy == Weight{-1, 1});
    CHECK(f.points()[f.point_index("p_z2")].wx == Weight{1, -1});

    ToricSurface q = builtin_surface("P1xP1");
    CHECK(q.K2() == 8);
    CHECK(q.intersect(q.cls("H1"), q.cls("H1")) == GQ(0));
    CHECK(q.intersect(q.cls("H1"), q.cls("H2")) == GQ(1));
    CHECK(q.intersect(q.cls("H2"), q.canonical()) == GQ(-2));
}

TEST_CASE("class combinations parse")
{
    ToricSurface f = builtin_surface("F1");
    EquivClass a = f.combination("3H-4E");
    EquivClass b = f.combination(std::map<std::string, int>{{"H", 3}, {"E", -4}});
    CHECK(a == b);
    CHECK(f.combination("-H+2E") == f.combination("-1*H+2*E"));
    CHECK_THROWS_AS(f.combination("H-2Q"), std::invalid_argument);
    CHECK_THROWS_AS(f.combination("2-H"), std::invalid_argument);
}

TEST_CASE("characters and first cohomology weights")
{
    ToricSurface p = builtin_surface("P2");
    CHECK(chi_character(p, p.combination("0H")) == Character{{{0, 0}, 1}});
    Character h = chi_character(p, p.cls("H"));
    CHECK(character_value(h) == 3);

    ToricSurface f = builtin_surface("F1");
    EquivClass xi = f.combination("H-2E");
    Character c = chi_character(f, xi);
    CHECK(character_value(c) == 0);
    for (const auto& [k, v] : c) CHECK(v == 0);
    CHECK(h1_weights(f, xi).empty());
    auto dual = h1_weights(f, f.combination("-H+2E"));
    REQUIRE(dual.size() == 1);

    EquivClass xi4 = f.combination("H-4E");
    CHECK(f.intersect(xi4, f.canonical()) == GQ(1));
    CHECK(h1_weights(f, xi4).size() == 7);
    CHECK(h1_weights(f, f.combination("-H+4E")).size() == 6);

    CHECK_THROWS_AS(h1_weights(f, f.cls("H")), WallNotGood);
}

TEST_CASE("validation rejects inconsistent data")
{
    ToricSurface p = builtin_surface("P2");
    auto classes = p.classes();
    classes["H"][0] = Weight{-2, 0};
    ToricSurface bad("bad", p.points(), classes);
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    auto pts = p.points();
    pts[0].wy = Weight{-2, 0};
    ToricSurface bad2("bad2", pts, {});
    CHECK_THROWS_AS(bad2.validate(), ValidationError);
    CHECK_THROWS_AS(blowup(p, "p_w", "E"), std::invalid_argument);
    CHECK_THROWS_AS(blowup(p, "p_x", "H"), std::invalid_argument);
}

TEST_CASE("property: blowups validate and characters match Riemann-Roch")
{
    std::mt19937 g(2024);
    for (int trial = 0; trial < 20; ++trial) {
        ToricSurface s = random_blowups(g, 2);
        CHECK_NOTHROW(s.validate());
        CHECK(s.chi() >= 5);
        CHECK(s.K2() + s.chi() == 12);
        for (int k = 0; k < 3; ++k) {
            EquivClass xi = random_class(g, s);
            CHECK(s.localize(restrictions(xi)).is_zero());
            CHECK(character_value(chi_character(s, xi)) == rr(s, xi));
        }
    }
}
