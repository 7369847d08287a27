#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "instanton/multiseries.hpp"
#include "instanton/qseries.hpp"
#include "instanton/tlaurent.hpp"

#include <random>

using namespace inst;

namespace {

MPoly e1() { return MPoly::var(E1); }
MPoly e2() { return MPoly::var(E2); }
MPoly av() { return MPoly::var(A); }
MPoly tv() { return MPoly::var(T); }

MPoly random_poly(std::mt19937& g, int terms, int maxdeg)
{
    std::uniform_int_distribution<int> c(-3, 3), d(0, maxdeg);
    MPoly p;
    for (int k = 0; k < terms; ++k) {
        Mono m = mono::make(d(g), d(g), d(g) / 2, 0);
        p += MPoly::monomial(m, GQ(c(g)));
    }
    return p;
}

RatFn random_ratfn(std::mt19937& g)
{
    MPoly num = random_poly(g, 3, 2);
    std::vector<MPoly> den;
    std::uniform_int_distribution<int> c(-2, 2), n(0, 2);
    int k = n(g);
    for (int i = 0; i < k; ++i) {
        MPoly L = MPoly::linear({GQ(c(g)), GQ(c(g)), GQ(c(g)), GQ(0), GQ(0)});
        if (L.is_zero()) L = e1();
        den.push_back(L);
    }
    return RatFn::from_factors(num, den);
}

}  // namespace

TEST_CASE("gaussian rationals")
{
    GQ i = GQ::imag_unit();
    CHECK(i * i == GQ(-1));
    CHECK(GQ::parse("3/4+1/2*i") == GQ(mpq_class(3, 4), mpq_class(1, 2)));
    CHECK(GQ::parse("-2/6").str() == "-1/3");
    CHECK(GQ(mpq_class(1, 2), mpq_class(-1, 3)).str() == "1/2-1/3*i");
    CHECK((GQ(1, 2) + i).inverse() * (GQ(1, 2) + i) == GQ(1));
}

TEST_CASE("ratfn examples")
{
    CHECK(RatFn::fraction(e1(), e2()) * RatFn::fraction(e2(), e1()) == RatFn(1));

    MPoly s = e1() + e2();
    RatFn lhs = RatFn::fraction(1, s + 2 * av()) + RatFn::fraction(1, s - 2 * av());
    RatFn rhs = RatFn::fraction(2 * s, s * s - 4 * av() * av());
    CHECK(lhs == rhs);

    RatFn q = RatFn::fraction(e1() * e1() - e2() * e2(), e1() - e2());
    CHECK(q.is_polynomial());
    CHECK(q.to_poly() == e1() + e2());
    CHECK_THROWS(RatFn(1) / RatFn(0));
}

TEST_CASE("ratfn text round trip")
{
    RatFn f = RatFn::fraction(e1() * av() - 3, (e1() + e2()) * (e1() - 2 * av()) * (e1() * e1() + e2() * e2()));
    CHECK(RatFn::parse(f.str()) == f);
    CHECK(RatFn::parse("(e1^2-e2^2)/(e1-e2)") == RatFn(e1() + e2()));
}

TEST_CASE("eps limit")
{
    MPoly s = e1() + e2();
    RatFn f = RatFn::fraction(2, s * s - 4 * av() * av());
    CHECK(f.set_zero({E1, E2}) == RatFn::fraction(-1, 2 * av() * av()));
    CHECK(RatFn::fraction(e1() * e2(), e1() * e2()).set_zero({E1, E2}) == RatFn(1));
    CHECK_THROWS_AS(RatFn::fraction(1, e1()).set_zero({E1, E2}), PoleError);
}

TEST_CASE("ratfn ring laws on random triples")
{
    std::mt19937 g(12345);
    for (int it = 0; it < 40; ++it) {
        RatFn a = random_ratfn(g), b = random_ratfn(g), c = random_ratfn(g);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == RatFn(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("gcd reduction with nonlinear denominators")
{
    MPoly q = e1() * e1() + e2() * e2() + av();
    MPoly r = e1() * e2() - av() * av();
    RatFn f = RatFn::fraction(q * r * (e1() - e2()), q * q * (e1() - e2()));
    CHECK(f == RatFn::fraction(r, q));
    CHECK(f.den() == q.monic());
}

TEST_CASE("expand at infinity")
{
    MPoly b = e1() + 2 * e2();
    TLaurent f = expand_at_infinity(RatFn::fraction(1, b + tv()), -4);
    CHECK(f.coeff(-1) == RatFn(1));
    CHECK(f.coeff(-2) == RatFn(-b));
    CHECK(f.coeff(-3) == RatFn(b * b));
    CHECK(f.coeff(-4) == RatFn(-b * b * b));
    CHECK_THROWS_AS(f.coeff(-5), WindowError);

    TLaurent p = expand_at_infinity(RatFn(tv() * tv()), -3);
    CHECK(p.coeff(2) == RatFn(1));
    CHECK(p.coeff(-3) == RatFn(0));

    MPoly c = e1() - e2();
    TLaurent sq = expand_at_infinity(RatFn::fraction(1, (tv() - c) * (tv() - c)), -4);
    CHECK(sq.coeff(-2) == RatFn(1));
    CHECK(sq.coeff(-3) == RatFn(2 * c));
    CHECK(sq.coeff(-4) == RatFn(3 * c * c));

    TLaurent one = expand_at_infinity(RatFn::fraction(1, tv()), -3);
    CHECK(one.coeff(-1) == RatFn(1));
}

TEST_CASE("expand at infinity is multiplicative")
{
    std::mt19937 g(7);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int it = 0; it < 15; ++it) {
        auto lin = [&] { return tv() + MPoly::linear({GQ(c(g)), GQ(c(g)), GQ(0), GQ(0), GQ(c(g))}); };
        RatFn f = RatFn::fraction(random_poly(g, 2, 1) + tv(), lin() * lin());
        RatFn h = RatFn::fraction(random_poly(g, 2, 1), lin());
        int floor = -6;
        TLaurent lhs = expand_at_infinity(f * h, floor);
        TLaurent rhs = (expand_at_infinity(f, floor - 2) * expand_at_infinity(h, floor - 2)).truncated(floor);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tlaurent extraction")
{
    TLaurent x = TLaurent::monomial(-1, RatFn(1));
    CHECK(x.coeff(-1) == RatFn(1));
    TLaurent y = TLaurent::monomial(0, RatFn(3), -5);
    CHECK_THROWS_AS(y.coeff(-6), WindowError);
}

TEST_CASE("qseries basics")
{
    QSeries a = QSeries::monomial(3, GQ(1), 16);
    QSeries b = QSeries::monomial(-3, GQ(1), 10);
    QSeries p = a * b;
    CHECK(p.coeff(0) == GQ(1));
    CHECK_THROWS_AS(p.coeff(p.ceil()), WindowError);
    CHECK_THROWS_AS(a + b, WindowError);
    CHECK_THROWS(a.with_weight(1) + a);
    CHECK((a.with_weight(1) * b.with_weight(2)).weight() == 3);
}

TEST_CASE("qseries exp log")
{
    QSeries one = QSeries::constant(GQ(1), 24);
    CHECK(one.log().is_zero());
    QSeries s = one + QSeries::monomial(4, GQ(5), 24);
    QSeries l = s.log();
    CHECK(l.coeff(4) == GQ(5));
    CHECK(l.coeff(8) == GQ(mpq_class(-25, 2)));
    std::mt19937 g(3);
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<GQ> v(20);
    v[0] = GQ(1);
    for (int k = 1; k < 10; ++k) v[k] = GQ(c(g), 1 + (k % 3));
    QSeries r(0, 20, v);
    QSeries back = r.log().exp();
    for (int e = 0; e < 20; ++e) CHECK(back.coeff(e) == r.coeff(e));
    CHECK_THROWS(QSeries::constant(GQ(2), 8).log());
}

TEST_CASE("series reverse")
{
    QSeries w = QSeries::monomial(1, GQ(1), 8);
    QSeries r = series_reverse(w);
    CHECK(r.coeff(1) == GQ(1));
    CHECK(r.coeff(2) == GQ(0));

    QSeries s = w + QSeries::monomial(2, GQ(1), 8);
    QSeries inv = series_reverse(s);
    CHECK(inv.coeff(1) == GQ(1));
    CHECK(inv.coeff(2) == GQ(-1));
    CHECK(inv.coeff(3) == GQ(2));
    CHECK(inv.coeff(4) == GQ(-5));

    QSeries half = series_reverse(w.scaled(GQ(2)));
    CHECK(half.coeff(1) == GQ(1, 2));

    std::mt19937 g(11);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int it = 0; it < 5; ++it) {
        std::vector<GQ> v(12);
        v[0] = GQ(1 + it);
        for (int k = 1; k < 10; ++k) v[k] = GQ(c(g));
        QSeries f(1, 13, v);
        QSeries fi = series_reverse(f);
        std::vector<GQ> fc(13), fic(13);
        for (int k = 0; k < 13; ++k) {
            fc[k] = f.coeff(k);
            fic[k] = fi.coeff(k);
        }
        QSeries left = fi.compose_into(fc), right = f.compose_into(fic);
        for (int k = 0; k < 13; ++k) {
            CHECK(left.coeff(k) == GQ(k == 1 ? 1 : 0));
            CHECK(right.coeff(k) == GQ(k == 1 ? 1 : 0));
        }
    }
}

TEST_CASE("multiseries exp log")
{
    using MS = MultiSeries<RatFn>;
    MS one = MS::constant({"Lambda"}, {12}, RatFn(1));
    CHECK(one.log().terms().empty());
    MS x({"Lambda"}, {12});
    RatFn cc = RatFn::fraction(e1(), e2());
    x.set({4}, cc);
    MS l = (one + x).log();
    CHECK(l.coeff({4}) == cc);
    CHECK(l.coeff({8}) == -cc * cc / RatFn(2));
    CHECK_THROWS_AS(l.coeff({13}), WindowError);

    MS y({"Lambda", "z"}, {4, 3});
    y.set({1, 0}, RatFn(e1()));
    y.set({0, 1}, RatFn(av()));
    y.set({2, 1}, RatFn(3));
    CHECK(y.exp().log() == y);
    CHECK_THROWS(one.exp());
}
