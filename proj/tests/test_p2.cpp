#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "instanton/p2.hpp"

#include <set>

using namespace inst;

namespace {

std::array<std::optional<MPoly>, kNumVars> swap_eps() { return {MPoly::var(E2), MPoly::var(E1), std::nullopt, std::nullopt}; }

}  // namespace

TEST_CASE("admissible triples")
{
    auto t1 = triples_up_to(mpq_class(1));
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].str() == "(1,1,1)");
    CHECK(t1[0].delta == mpq_class(3, 4));
    CHECK(triple_admissible(1, 2, 2));
    CHECK(triple_delta(1, 2, 2) == mpq_class(7, 4));
    CHECK_FALSE(triple_admissible(1, 1, 3));
    CHECK_FALSE(triple_admissible(1, 1, 2));
    CHECK_THROWS_AS(make_triple(1, 1, 3), std::invalid_argument);
    auto t2 = triples_up_to(mpq_class(2));
    CHECK(t2.size() == 4);
    CHECK(triples_up_to(mpq_class(-1)).empty());
}

TEST_CASE("regions")
{
    CHECK(region(1, 1, 1) == std::vector<std::pair<int, int>>{{0, 0}});
    auto r = region(1, 2, 2);
    std::set<std::pair<int, int>> got(r.begin(), r.end());
    CHECK(got == std::set<std::pair<int, int>>{{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {0, 0}});
}

TEST_CASE("region counts and Ext characters for delta <= 10")
{
    auto ts = triples_up_to(mpq_class(10));
    CHECK(ts.size() > 30);
    for (const auto& t : ts) {
        INFO(t.str());
        mpq_class grade = t.delta * 4 - 3;
        CHECK(grade.get_den() == 1);
        CHECK(grade >= 0);
        CHECK(grade.get_num() % 4 == 0);
        CHECK(mpq_class(long(t.region.size())) == t.delta * 4 - 2);
        std::set<std::pair<int, int>> pts(t.region.begin(), t.region.end());
        CHECK(pts.count({0, 0}) == 1);
        pts.erase({0, 0});
        Character ch = ext1_character(t.p, t.q, t.r);
        std::set<std::pair<int, int>> support;
        for (const auto& [k, c] : ch) {
            CHECK(c == 1);
            support.insert(k);
        }
        CHECK(support == pts);
        MPoly e = euler_t(t);
        CHECK(mpq_class(e.total_degree()) == grade);
    }
}

TEST_CASE("euler classes and fixed-point weights")
{
    CHECK(euler_t(make_triple(1, 1, 1)) == MPoly(1));
    for (auto [p, q, r] : std::vector<std::array<int, 3>>{{1, 2, 2}, {2, 3, 4}, {3, 2, 2}}) {
        RatFn a = RatFn(euler_t(make_triple(p, q, r))).substitute(swap_eps());
        CHECK(a == RatFn(euler_t(make_triple(q, p, r))));
    }
    auto xi = xi_weights(make_triple(1, 1, 1));
    CHECK(xi[2] == Weight{-1, 1});
    CHECK(xi[1] == Weight{-1, 0});
    CHECK(xi[0] == Weight{0, 1});
}

TEST_CASE("triple route basics")
{
    auto phi = phi_equivariant(4, 2, 1, "p_x");
    CHECK(phi.coeff({0, 0, 0}) == RatFn(1));
    for (const auto& [k, c] : phi.terms()) CHECK(k[0] % 4 == 0);
    CHECK_THROWS_AS(phi_equivariant(0, 1, 1, "p_z"), std::invalid_argument);
    // swapping eps1 and eps2 exchanges the two point lifts
    auto px = phi_equivariant(4, 3, 1, "p_x");
    auto py = phi_equivariant(4, 3, 1, "p_y");
    auto swapped = py.map_coeffs([](const RatFn& c) { return c.substitute(swap_eps()); });
    CompareReport r = compare_series(px, swapped, "p_x", "swapped p_y");
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("blowup walls")
{
    auto w = blowup_walls(4);
    REQUIRE(w.size() == 2);
    CHECK(w[0].spec() == "1H-2E");
    CHECK(w[1].spec() == "3H-4E");
    CHECK(blowup_walls(0).size() == 1);
    CHECK(blowup_walls(-1).empty());
    CHECK(phi_blowup_route(-1, 2, 1, "p_x").terms().empty());
    for (const auto& x : blowup_walls(12)) CHECK_NOTHROW(make_wall(builtin_surface("F1"), x.spec(), "H", "p_x"));
}

TEST_CASE("P2 identity between the two routes")
{
    for (const char* p : {"p_x", "p_y"}) {
        for (auto [D, zo, xo] : std::vector<std::array<int, 3>>{{0, 4, 1}, {4, 4, 1}, {8, 8, 1}}) {
            CompareReport r = compare_p2(D, zo, xo, p);
            INFO(r.detail);
            CHECK(r.ok);
            CHECK(r.slices > 0);
        }
    }
    // the wall 3H-4E is needed at Lambda^4
    auto only = delta_residue(make_wall(builtin_surface("F1"), "H-2E", "H", "p_x"), 4, 4, 1);
    CHECK_FALSE(compare_series(phi_equivariant(4, 4, 1, "p_x"), only, "a", "b").ok);
}
