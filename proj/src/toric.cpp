#include "instanton/toric.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace inst {

MPoly Weight::poly() const { return MPoly::linear({GQ(long(c1)), GQ(long(c2)), GQ(0), GQ(0), GQ(0)}); }

std::string Weight::str() const { return "[" + std::to_string(c1) + "," + std::to_string(c2) + "]"; }

std::vector<MPoly> restrictions(const EquivClass& c)
{
    std::vector<MPoly> out;
    for (const auto& w : c) out.push_back(w.poly());
    return out;
}

ToricSurface::ToricSurface(std::string name, std::vector<FixedPoint> points, std::map<std::string, EquivClass> classes)
    : name_(std::move(name)), points_(std::move(points)), classes_(std::move(classes))
{
}

int ToricSurface::point_index(const std::string& id) const
{
    for (size_t i = 0; i < points_.size(); ++i)
        if (points_[i].id == id) return int(i);
    throw std::invalid_argument("unknown fixed point '" + id + "' on " + name_);
}

const EquivClass& ToricSurface::cls(const std::string& name) const
{
    auto it = classes_.find(name);
    if (it == classes_.end()) throw std::invalid_argument("unknown class '" + name + "' on " + name_);
    return it->second;
}

EquivClass ToricSurface::combination(const std::map<std::string, int>& coeffs) const
{
    EquivClass r(points_.size());
    for (const auto& [n, k] : coeffs) {
        const EquivClass& c = cls(n);
        for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + c[i] * k;
    }
    return r;
}

EquivClass ToricSurface::combination(const std::string& spec) const
{
    std::map<std::string, int> coeffs;
    std::string s;
    for (char ch : spec)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty class specification");
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        int k = 1;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) k = std::stoi(s.substr(start, pos - start));
        if (pos < s.size() && s[pos] == '*') ++pos;
        start = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string name = s.substr(start, pos - start);
        if (name.empty()) {
            if (k == 0 && start > 0) continue;  // literal zero
            throw std::invalid_argument("class specification '" + spec + "' has a term without a class name");
        }
        cls(name);
        coeffs[name] += sign * k;
    }
    return combination(coeffs);
}

EquivClass ToricSurface::canonical() const
{
    EquivClass k;
    for (const auto& p : points_) k.push_back(-(p.wx + p.wy));
    return k;
}

MPoly ToricSurface::euler(int i) const { return points_[i].wx.poly() * points_[i].wy.poly(); }

MPoly ToricSurface::c1(int i) const { return (points_[i].wx + points_[i].wy).poly(); }

MPoly ToricSurface::todd2(int i) const
{
    MPoly c = c1(i);
    return (c * c + euler(i)) * GQ(mpq_class(1, 12));
}

RatFn ToricSurface::localize(const std::vector<MPoly>& values) const
{
    if (values.size() != points_.size()) throw std::invalid_argument("localize: one value per fixed point required");
    std::vector<RatFn> terms;
    for (size_t i = 0; i < points_.size(); ++i) terms.push_back(RatFn::fraction(values[i], euler(int(i))));
    return RatFn::sum(std::move(terms));
}

GQ ToricSurface::intersect(const EquivClass& a, const EquivClass& b) const
{
    std::vector<MPoly> v;
    for (size_t i = 0; i < points_.size(); ++i) v.push_back(a[i].poly() * b[i].poly());
    RatFn r = localize(v);
    if (!r.is_constant()) throw ValidationError("intersection product is not a number on " + name_ + ": " + r.str());
    return r.to_constant();
}

int ToricSurface::K2() const
{
    EquivClass k = canonical();
    return int(intersect(k, k).re.get_num().get_si());
}

int ToricSurface::sigma() const { return (K2() - 2 * chi()) / 3; }

int ToricSurface::chiO() const { return (K2() + chi()) / 12; }

void ToricSurface::validate() const
{
    if (points_.empty()) throw ValidationError(name_ + ": no fixed points");
    std::set<std::string> ids;
    for (const auto& p : points_) {
        if (!ids.insert(p.id).second) throw ValidationError(name_ + ": duplicate fixed point id " + p.id);
        if (p.wx.c1 * p.wy.c2 - p.wx.c2 * p.wy.c1 == 0) {
            throw ValidationError(name_ + ": tangent weights at " + p.id + " are linearly dependent");
        }
    }
    for (const auto& [n, c] : classes_)
        if (c.size() != points_.size()) throw ValidationError(name_ + ": class " + n + " needs one restriction per point");
    std::vector<MPoly> ones(points_.size(), MPoly(1));
    if (!localize(ones).is_zero()) throw ValidationError(name_ + ": localize(1) = 0 fails");
    for (const auto& [n, c] : classes_)
        if (!localize(restrictions(c)).is_zero()) throw ValidationError(name_ + ": localize(" + n + ") = 0 fails");
    for (const auto& [n1, c1] : classes_) {
        for (const auto& [n2, c2] : classes_) {
            GQ v;
            try {
                v = intersect(c1, c2);
            } catch (const ValidationError&) {
                throw ValidationError(name_ + ": localize(" + n1 + "*" + n2 + ") is not a number");
            }
            if (!v.is_real() || v.re.get_den() != 1) {
                throw ValidationError(name_ + ": localize(" + n1 + "*" + n2 + ") = " + v.str() + " is not an integer");
            }
        }
    }
    std::vector<MPoly> e, t;
    for (int i = 0; i < chi(); ++i) {
        e.push_back(euler(i));
        t.push_back(todd2(i));
    }
    RatFn ce = localize(e);
    if (!(ce == RatFn(long(chi())))) throw ValidationError(name_ + ": localize(c2) = chi fails");
    RatFn td = localize(t);
    if (!td.is_constant()) throw ValidationError(name_ + ": localize(Todd2) is not a number");
    GQ k2 = intersect(canonical(), canonical());
    if (!(td.to_constant() * GQ(12) == k2 + GQ(long(chi())))) throw ValidationError(name_ + ": Noether formula fails");
    if (!(td.to_constant() == GQ(1))) throw ValidationError(name_ + ": chi(O) = 1 fails");
    long k2i = k2.re.get_num().get_si();
    if ((k2i - 2 * chi()) % 3 != 0) throw ValidationError(name_ + ": signature (K^2 - 2 chi)/3 is not an integer");
}

std::vector<EquivClass> solve_class(const std::vector<FixedPoint>& pts, const ClassConstraints& c, int bound)
{
    int n = int(pts.size());
    ToricSurface probe("probe", pts, {});
    // Invariant curves: a weight at i opposite to a weight at j.
    struct Edge {
        int i, j;
        Weight w;
    };
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    Weight wi = a ? pts[i].wy : pts[i].wx, oi = a ? pts[i].wx : pts[i].wy;
                    Weight wj = b ? pts[j].wy : pts[j].wx, oj = b ? pts[j].wx : pts[j].wy;
                    Weight d = oj + -oi;
                    // the normal weights of a curve differ by a multiple of its tangent weight
                    if (wi == -wj && wi.c1 * d.c2 - wi.c2 * d.c1 == 0) edges.push_back({i, j, wi});
                }
    int root = probe.point_index(c.zero_at);
    std::vector<int> parent_edge(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<int> order{root};
    seen[root] = true;
    for (size_t k = 0; k < order.size(); ++k) {
        int v = order[k];
        for (size_t e = 0; e < edges.size(); ++e) {
            int other = edges[e].i == v ? edges[e].j : (edges[e].j == v ? edges[e].i : -1);
            if (other < 0 || seen[other]) continue;
            seen[other] = true;
            parent_edge[other] = int(e);
            order.push_back(other);
        }
    }
    if (int(order.size()) != n) throw ValidationError("solve_class: invariant-curve graph is disconnected");
    EquivClass K = probe.canonical();
    std::vector<EquivClass> out;
    EquivClass h(n);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == order.size()) {
            for (const auto& e : edges) {
                Weight d = h[e.j] + -h[e.i];
                // d must be a multiple of the curve weight
                if (e.w.c1 * d.c2 - e.w.c2 * d.c1 != 0) return;
            }
            try {
                if (probe.intersect(h, h) != GQ(long(c.self))) return;
                if (probe.intersect(h, K) != GQ(long(c.dotK))) return;
                for (const auto& [o, v] : c.pairings)
                    if (probe.intersect(h, o) != GQ(long(v))) return;
                if (!probe.localize(restrictions(h)).is_zero()) return;
            } catch (const ValidationError&) {
                return;
            }
            out.push_back(h);
            return;
        }
        int v = order[k];
        const Edge& e = edges[parent_edge[v]];
        int u = e.i == v ? e.j : e.i;
        Weight dir = e.i == u ? e.w : -e.w;
        for (int s = -bound; s <= bound; ++s) {
            h[v] = h[u] + dir * s;
            rec(k + 1);
        }
    };
    h[root] = Weight{};
    rec(1);
    return out;
}

ToricSurface builtin_surface(const std::string& name)
{
    if (name == "P2") {
        std::vector<FixedPoint> pts{{"p_x", {-1, 0}, {-1, 1}}, {"p_y", {1, -1}, {0, -1}}, {"p_z", {1, 0}, {0, 1}}};
        auto sols = solve_class(pts, {"p_z", 1, -3, {}});
        if (sols.size() != 1) throw ValidationError("P2: hyperplane lift is not unique");
        ToricSurface s("P2", pts, {{"H", sols[0]}});
        s.validate();
        return s;
    }
    if (name == "P1xP1") {
        std::vector<FixedPoint> pts{{"p_00", {1, 0}, {0, 1}},
                                    {"p_10", {-1, 0}, {0, 1}},
                                    {"p_01", {1, 0}, {0, -1}},
                                    {"p_11", {-1, 0}, {0, -1}}};
        auto sols = solve_class(pts, {"p_00", 0, -2, {}});
        std::sort(sols.begin(), sols.end());
        ToricSurface probe("P1xP1", pts, {});
        for (size_t a = 0; a < sols.size(); ++a)
            for (size_t b = a + 1; b < sols.size(); ++b)
                if (probe.intersect(sols[a], sols[b]) == GQ(1)) {
                    ToricSurface s("P1xP1", pts, {{"H1", sols[a]}, {"H2", sols[b]}});
                    s.validate();
                    return s;
                }
        throw ValidationError("P1xP1: no pair of ruling lifts found");
    }
    if (name == "F1") return blowup(builtin_surface("P2"), "p_z", "E");
    throw std::invalid_argument("unknown builtin surface '" + name + "'");
}

ToricSurface blowup(const ToricSurface& s, const std::string& point_id, const std::string& new_class)
{
    int k = s.point_index(point_id);
    if (s.classes().count(new_class)) throw std::invalid_argument("blowup: class name " + new_class + " already used");
    const FixedPoint& p = s.points()[k];
    Weight u = p.wx, v = p.wy;
    std::vector<FixedPoint> pts;
    std::vector<int> origin;
    for (int i = 0; i < s.chi(); ++i) {
        if (i == k) {
            pts.push_back({p.id + "1", u, v + -u});
            pts.push_back({p.id + "2", u + -v, v});
            origin.push_back(i);
            origin.push_back(i);
        } else {
            pts.push_back(s.points()[i]);
            origin.push_back(i);
        }
    }
    std::map<std::string, EquivClass> classes;
    for (const auto& [n, c] : s.classes()) {
        EquivClass r;
        for (int o : origin) r.push_back(c[o]);
        classes[n] = r;
    }
    EquivClass e(pts.size());
    e[k] = u;
    e[k + 1] = v;
    classes[new_class] = e;
    ToricSurface out(s.name() + "#" + point_id, pts, classes);
    if (s.name() == "P2" && point_id == "p_z") out = ToricSurface("F1", pts, classes);
    out.validate();
    if (out.intersect(e, e) != GQ(-1)) throw ValidationError("blowup: exceptional class does not square to -1");
    return out;
}

std::string character_str(const Character& ch)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ch) {
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c << "*t1^" << k.first << "*t2^" << k.second;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Laurent polynomial arithmetic through MPoly in (e1, e2) after a monomial shift.
struct Laurent {
    MPoly p;
    int s1 = 0, s2 = 0;  // value = p * t1^{-s1} t2^{-s2}
};

Laurent make_monomial(int m, int n, long c)
{
    Laurent r;
    r.s1 = std::max(0, -m);
    r.s2 = std::max(0, -n);
    r.p = MPoly::monomial(mono::make(m + r.s1, n + r.s2, 0, 0), GQ(c));
    return r;
}

Laurent mul(const Laurent& a, const Laurent& b) { return {a.p * b.p, a.s1 + b.s1, a.s2 + b.s2}; }

Laurent add(const Laurent& a, const Laurent& b)
{
    int s1 = std::max(a.s1, b.s1), s2 = std::max(a.s2, b.s2);
    MPoly pa = a.p.mul_mono(mono::make(s1 - a.s1, s2 - a.s2, 0, 0));
    MPoly pb = b.p.mul_mono(mono::make(s1 - b.s1, s2 - b.s2, 0, 0));
    return {pa + pb, s1, s2};
}

// 1 - t^{-w}
Laurent one_minus(const Weight& w) { return add(make_monomial(0, 0, 1), make_monomial(-w.c1, -w.c2, -1)); }

}  // namespace

Character localized_character(const std::vector<FixedPoint>& pts, const std::vector<Character>& numerators)
{
    int n = int(pts.size());
    if (int(numerators.size()) != n) throw std::invalid_argument("localized_character: one numerator per point");
    std::vector<Laurent> den;
    for (const auto& p : pts) den.push_back(mul(one_minus(p.wx), one_minus(p.wy)));
    Laurent D = make_monomial(0, 0, 1);
    for (const auto& d : den) D = mul(D, d);
    Laurent N;
    for (int i = 0; i < n; ++i) {
        for (const auto& [e, c] : numerators[i]) {
            if (c == 0) continue;
            Laurent term = make_monomial(e.first, e.second, c);
            for (int j = 0; j < n; ++j)
                if (j != i) term = mul(term, den[j]);
            N = add(N, term);
        }
    }
    auto q = divide_exact(N.p, D.p);
    if (!q) throw ValidationError("localized character: inexact division, inconsistent restrictions");
    int s1 = N.s1 - D.s1, s2 = N.s2 - D.s2;
    Character ch;
    for (const auto& t : q->terms()) {
        if (!t.c.is_real() || t.c.re.get_den() != 1) throw ValidationError("localized character: non-integral coefficient");
        ch[{mono::exp(t.m, E1) - s1, mono::exp(t.m, E2) - s2}] += t.c.re.get_num().get_si();
    }
    return ch;
}

Character chi_character(const ToricSurface& s, const EquivClass& xi)
{
    std::vector<Character> nums;
    for (const auto& w : xi) nums.push_back(Character{{{w.c1, w.c2}, 1}});
    return localized_character(s.points(), nums);
}

long character_value(const Character& ch)
{
    long s = 0;
    for (const auto& [k, c] : ch) s += c;
    return s;
}

std::vector<Weight> h1_weights(const ToricSurface& s, const EquivClass& xi)
{
    Character ch = chi_character(s, xi);
    std::vector<Weight> out;
    for (const auto& [k, c] : ch) {
        if (c > 0) {
            throw WallNotGood("wall not good for this computation: character of L has positive coefficient at t1^" +
                              std::to_string(k.first) + " t2^" + std::to_string(k.second));
        }
        for (long r = 0; r < -c; ++r) out.push_back({k.first, k.second});
    }
    return out;
}

}  // namespace inst
