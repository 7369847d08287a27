#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "instanton/io.hpp"
#include "instanton/modular.hpp"
#include "instanton/nekrasov.hpp"
#include "instanton/wallcross.hpp"

using namespace inst;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json reparse(const ordered_json& j) { return ordered_json::parse(j.dump()); }

bool same_surface(const ToricSurface& a, const ToricSurface& b)
{
    if (a.name() != b.name() || a.classes() != b.classes() || a.chi() != b.chi()) return false;
    for (int i = 0; i < a.chi(); ++i) {
        const auto &p = a.points()[i], &q = b.points()[i];
        if (p.id != q.id || !(p.wx == q.wx) || !(p.wy == q.wy)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rational function series survive a JSON round trip")
{
    auto z = zinst(8, {}, 1, 1);
    SeriesDocument d = to_document(z, {{"quantity", "zinst"}});
    SeriesDocument back = SeriesDocument::from_json(reparse(d.to_json()));
    CHECK(ratfn_series(back) == z);
    CHECK(back.provenance.at("quantity") == "zinst");
    CHECK(back.to_json() == d.to_json());
    // the Lambda^4 term at tau = 0
    auto j = d.to_json();
    CHECK(j["terms"][1]["exponent"]["Lambda"] == 0);
    CHECK(j["terms"][1]["exponent"]["tau1"] == 1);
}

TEST_CASE("Lambda^4 term of the zinst document")
{
    SeriesDocument d = to_document(zinst(8));
    bool found = false;
    for (const auto& t : d.terms)
        if (t.exponents == std::vector<int>{4}) {
            MPoly e1 = MPoly::var(E1), e2 = MPoly::var(E2), a = MPoly::var(A);
            CHECK(RatFn::parse(t.coefficient) == RatFn::fraction(MPoly(2), e1 * e2 * ((e1 + e2) * (e1 + e2) - 4 * a * a)));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("Gaussian and q-series documents round trip")
{
    WallData w = make_wall(builtin_surface("F1"), "H-2E", "2H+E", "p_x");
    auto s = delta_nonequivariant(w, 4, 4, 1);
    CHECK(gaussian_series(SeriesDocument::from_json(reparse(to_document(s).to_json()))) == s);

    const QSeries& u = sw_series(24).u;
    QSeries back = q_series(SeriesDocument::from_json(reparse(to_document(u).to_json())));
    CHECK(back.lo() == u.lo());
    CHECK(back.ceil() == u.ceil());
    CHECK(back.weight() == u.weight());
    CHECK((back - u).is_zero());
}

TEST_CASE("malformed series documents are rejected")
{
    auto j = to_document(zinst(8)).to_json();
    auto bad = j;
    bad["schema_version"] = 7;
    CHECK_THROWS_AS(SeriesDocument::from_json(bad), SchemaError);
    bad = j;
    bad.erase("terms");
    CHECK_THROWS_AS(SeriesDocument::from_json(bad), SchemaError);
    bad = j;
    std::swap(bad["terms"][0], bad["terms"][1]);
    CHECK_THROWS_AS(SeriesDocument::from_json(bad), SchemaError);
    bad = j;
    bad["terms"][0]["exponent"]["Lambda"] = 12;
    CHECK_THROWS_AS(ratfn_series(SeriesDocument::from_json(bad)), SchemaError);
    CHECK_THROWS_AS(gaussian_series(SeriesDocument::from_json(j)), SchemaError);
}

TEST_CASE("builtin surfaces round trip through the surface schema")
{
    for (const char* name : {"P2", "P1xP1", "F1"}) {
        ToricSurface s = builtin_surface(name);
        json j = json::parse(surface_to_json(s).dump());
        CHECK(same_surface(surface_from_json(j), s));
    }
}

TEST_CASE("surface files violating the schema or localization are rejected")
{
    json p2 = json::parse(surface_to_json(builtin_surface("P2")).dump());

    json dependent = p2;
    dependent["fixed_points"][0]["wy"] = {-2, 0};  // parallel to wx = -eps1
    CHECK_THROWS_AS(surface_from_json(dependent), ValidationError);

    // doubling every tangent weight keeps sum 1/e = 0 and sum H/e = 0, but H^2 = 1/4
    json doubled = p2;
    for (auto& p : doubled["fixed_points"])
        for (const char* k : {"wx", "wy"}) p[k] = {2 * p[k][0].get<int>(), 2 * p[k][1].get<int>()};
    try {
        surface_from_json(doubled);
        FAIL("accepted a surface with H^2 = 1/4");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("localize(H*H) = 1/4 is not an integer") != std::string::npos);
    }

    json missing = p2;
    missing["classes"]["H"].erase("p_z");
    CHECK_THROWS_AS(surface_from_json(missing), SchemaError);
    json non_integer = p2;
    non_integer["fixed_points"][1]["wx"] = {0.5, 1};
    CHECK_THROWS_AS(surface_from_json(non_integer), SchemaError);
    CHECK_THROWS_AS(surface_from_json(json::object()), SchemaError);
    CHECK_THROWS_AS(load_surface("/nonexistent/surface.json"), SchemaError);
}
