#include "instanton/p2.hpp"

#include "instanton/parallel.hpp"

#include <algorithm>
#include <set>

namespace inst {

namespace {

using Series = MultiSeries<RatFn>;
const std::vector<std::string> kNames{"Lambda", "z", "x"};

using Pt = std::pair<int, int>;

long cross(const Pt& o, const Pt& a, const Pt& b)
{
    return long(a.first - o.first) * (b.second - o.second) - long(a.second - o.second) * (b.first - o.first);
}

// Z^inst coefficients under a restriction of (eps1, eps2, a). A single fixed
// point may meet a vanishing Euler factor; the sum over fixed points is still
// regular, so then the generic sum is restricted instead.
std::vector<RatFn> restricted_zinst(int n_max, const Specialization& sp)
{
    try {
        return zinst_coeffs(n_max, sp);
    } catch (const std::domain_error&) {
        auto generic = zinst_coeffs(n_max);
        for (auto& c : generic) c = c.substitute(sp.subs());
        return generic;
    }
}

void check_lift(const std::string& p_lift)
{
    if (p_lift != "p_x" && p_lift != "p_y") throw std::invalid_argument("p-lift must be p_x or p_y, got " + p_lift);
}

}  // namespace

std::string P2Triple::str() const
{
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

mpq_class triple_delta(int p, int q, int r)
{
    mpq_class d = mpq_class(p * q + q * r + r * p, 2) - mpq_class(p * p + q * q + r * r, 4);
    d.canonicalize();
    return d;
}

bool triple_admissible(int p, int q, int r)
{
    return p > 0 && q > 0 && r > 0 && (p + q + r) % 2 == 1 && r < p + q && p < q + r && q < r + p;
}

P2Triple make_triple(int p, int q, int r)
{
    if (!triple_admissible(p, q, r)) {
        throw std::invalid_argument("inadmissible triple (" + std::to_string(p) + "," + std::to_string(q) + "," +
                                    std::to_string(r) + ")");
    }
    P2Triple t;
    t.p = p;
    t.q = q;
    t.r = r;
    t.delta = triple_delta(p, q, r);
    t.region = region(p, q, r);
    return t;
}

std::vector<P2Triple> triples_up_to(const mpq_class& delta_max)
{
    std::vector<P2Triple> out;
    if (delta_max < 0) return out;
    // delta >= (largest entry) - 1/4, attained at (1, k, k)
    mpz_class b = delta_max.get_num() / delta_max.get_den() + 1;
    int bound = int(b.get_si());
    for (int p = 1; p <= bound; ++p)
        for (int q = 1; q <= bound; ++q)
            for (int r = 1; r <= bound; ++r)
                if (triple_admissible(p, q, r) && triple_delta(p, q, r) <= delta_max) out.push_back(make_triple(p, q, r));
    std::sort(out.begin(), out.end(), [](const P2Triple& a, const P2Triple& b) {
        if (a.delta != b.delta) return a.delta < b.delta;
        return std::tie(a.p, a.q, a.r) < std::tie(b.p, b.q, b.r);
    });
    return out;
}

std::vector<Pt> hull_lattice_points(const std::vector<Pt>& vertices)
{
    std::vector<Pt> v = vertices;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) return {};
    // monotone chain
    std::vector<Pt> h(2 * v.size());
    size_t k = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], v[i]) <= 0) --k;
        h[k++] = v[i];
    }
    for (size_t i = v.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], v[i - 1]) <= 0) --k;
        h[k++] = v[i - 1];
    }
    h.resize(k > 1 ? k - 1 : k);
    int x0 = v.front().first, x1 = v.back().first, y0 = INT32_MAX, y1 = INT32_MIN;
    for (const auto& p : v) {
        y0 = std::min(y0, p.second);
        y1 = std::max(y1, p.second);
    }
    std::vector<Pt> out;
    for (int x = x0; x <= x1; ++x) {
        for (int y = y0; y <= y1; ++y) {
            Pt c{x, y};
            bool inside = true;
            if (h.size() == 1) {
                inside = c == h[0];
            } else if (h.size() == 2) {
                inside = cross(h[0], h[1], c) == 0;  // bounding box already restricts to the segment
            } else {
                for (size_t i = 0; i < h.size() && inside; ++i)
                    if (cross(h[i], h[(i + 1) % h.size()], c) < 0) inside = false;
            }
            if (inside) out.push_back(c);
        }
    }
    return out;
}

std::vector<Pt> region(int p, int q, int r)
{
    if (!triple_admissible(p, q, r)) throw std::invalid_argument("region: inadmissible triple");
    std::vector<Pt> v;
    if (p == 1 && q == 1 && r == 1) {
        v = {{0, 0}};
    } else if (p == 1 && q == r) {
        v = {{0, q - 1}, {-1, q - 1}, {-1, -q + 2}, {0, -q + 1}};
    } else if (q == 1 && p == r) {
        v = {{p - 1, 0}, {-p + 1, 0}, {-p + 2, -1}, {p - 1, -1}};
    } else if (r == 1 && p == q) {
        v = {{p - 1, 1 - p}, {p - 1, 2 - p}, {2 - p, p - 1}, {1 - p, p - 1}};
    } else if (p + q == r + 1) {
        v = {{p - 1, q - 1}, {-p, q - 1}, {-p, -q + 2}, {-p + 2, -q}, {p - 1, -q}};
    } else if (r + p == q + 1) {
        v = {{p - 1, 1 - q}, {p - 1, r - p + 1}, {2 - p, q - 1}, {-p, q - 1}, {-p, p - r + 1}};
    } else if (q + r == p + 1) {
        v = {{p - 1, -q}, {p - 1, r - p + 1}, {r - q + 1, q - 1}, {1 - p, q - 1}, {q - r + 1, -q}};
    } else {
        v = {{p - 1, -q}, {p - 1, r - p + 1}, {r - q + 1, q - 1}, {-p, q - 1}, {-p, p - r + 1}, {q - r + 1, -q}};
    }
    return hull_lattice_points(v);
}

Character ext1_character(int p, int q, int r)
{
    // Denominators (1-t1)(1-t2), (1-t1/t2)(1-1/t2), (1-1/t1)(1-t2/t1), written as
    // (1 - e^{-w}) products for the weight pairs below.
    std::vector<FixedPoint> pts{{"a", {-1, 0}, {0, -1}}, {"b", {-1, 1}, {0, 1}}, {"c", {1, 0}, {1, -1}}};
    std::vector<Character> nums{
        {{{0, 0}, -1}, {{-p, q}, -1}, {{p, -q}, -1}},
        {{{0, 0}, -1}, {{-p, p - r}, -1}, {{p, r - p}, -1}},
        {{{0, 0}, -1}, {{r - q, q}, -1}, {{q - r, -q}, -1}},
    };
    Character ch = localized_character(pts, nums);
    for (auto it = ch.begin(); it != ch.end();) it = it->second == 0 ? ch.erase(it) : std::next(it);
    return ch;
}

MPoly euler_t(const P2Triple& t)
{
    MPoly e(1);
    for (auto [m, n] : t.region) {
        if (m == 0 && n == 0) continue;
        e *= Weight{m, n}.poly();
    }
    return e;
}

std::array<Weight, 3> xi_weights(const P2Triple& t)
{
    return {Weight{t.r - t.q, t.q}, Weight{-t.p, t.p - t.r}, Weight{-t.p, t.q}};
}

MultiSeries<RatFn> phi_equivariant(int lambda_order, int z_order, int x_order, const std::string& p_lift)
{
    check_lift(p_lift);
    Series out(kNames, {lambda_order, z_order, x_order});
    if (lambda_order < 0) return out;
    ToricSurface s = builtin_surface("P2");
    const EquivClass& H = s.cls("H");
    int ip = s.point_index(p_lift);
    std::array<int, 3> idx{s.point_index("p_x"), s.point_index("p_y"), s.point_index("p_z")};
    // 4 delta - 3 <= lambda_order
    auto triples = triples_up_to(mpq_class(lambda_order + 3, 4));

    auto parts = parallel_map<Series>(int(triples.size()), [&](int k) {
        const P2Triple& tr = triples[k];
        mpq_class base_q = tr.delta * 4 - 3;
        int base = int(base_q.get_num().get_si());
        int lmax = (lambda_order - base) / 4;
        std::vector<int> orders{4 * lmax, z_order, x_order};
        auto xi = xi_weights(tr);
        Series acc = Series::constant(kNames, orders, RatFn(1));
        RatFn gz, gx;
        for (int j = 0; j < 3; ++j) {
            int i = idx[j];
            const FixedPoint& pt = s.points()[i];
            MPoly bz = H[i].poly();
            MPoly bx = i == ip ? s.euler(i) : MPoly();
            MPoly x2 = xi[j].poly() * xi[j].poly();
            gz += RatFn::fraction(x2 * bz * GQ(mpq_class(-1, 4)), s.euler(i));
            gx += RatFn::fraction(x2 * bx * GQ(mpq_class(-1, 4)), s.euler(i));
            Specialization sp;
            sp.w1 = pt.wx.poly();
            sp.w2 = pt.wy.poly();
            sp.a = xi[j].poly() * GQ(mpq_class(-1, 2));
            auto zc = restricted_zinst(lmax, sp);
            Series f(kNames, orders);
            for (int n = 0; n <= lmax; ++n) {
                Series shift = Series::constant(kNames, orders, RatFn(1));
                if (n > 0) {
                    Series lin(kNames, orders);
                    lin.set({0, 1, 0}, RatFn(bz * GQ(long(n))));
                    lin.set({0, 0, 1}, RatFn(bx * GQ(long(n))));
                    shift = lin.exp();
                }
                for (const auto& [kk, c] : shift.terms()) f.add({4 * n, kk[1], kk[2]}, c * zc[n]);
            }
            acc = acc * f;
        }
        Series g(kNames, orders);
        g.set({0, 1, 0}, gz);
        g.set({0, 0, 1}, gx);
        acc = acc * g.exp();
        RatFn inv = RatFn::from_factors(MPoly(1), [&] {
            std::vector<MPoly> fs;
            for (auto [m, n] : tr.region)
                if (m != 0 || n != 0) fs.push_back(Weight{m, n}.poly());
            return fs;
        }());
        Series shifted(kNames, {lambda_order, z_order, x_order});
        for (const auto& [kk, c] : acc.terms()) shifted.add({kk[0] + base, kk[1], kk[2]}, c * inv);
        return shifted;
    });
    for (const auto& p : parts) out += p;
    return out;
}

std::string BlowupWall::spec() const { return std::to_string(2 * n - 1) + "H-" + std::to_string(2 * a) + "E"; }

std::vector<BlowupWall> blowup_walls(int lambda_order)
{
    std::vector<BlowupWall> out;
    // at a = n the Lambda exponent 4a^2 - (2n-1)^2 - 3 equals 4n - 4
    for (int n = 1; 4 * n - 4 <= lambda_order; ++n)
        for (int a = n; 4 * a * a - (2 * n - 1) * (2 * n - 1) - 3 <= lambda_order; ++a) out.push_back({n, a});
    return out;
}

MultiSeries<RatFn> phi_blowup_route(int lambda_order, int z_order, int x_order, const std::string& p_lift)
{
    check_lift(p_lift);
    Series out(kNames, {lambda_order, z_order, x_order});
    if (lambda_order < 0) return out;
    ToricSurface y = builtin_surface("F1");
    auto walls = blowup_walls(lambda_order);
    for (const auto& w : walls) {
        WallData wd = make_wall(y, w.spec(), "H", p_lift);
        out += delta_residue(wd, lambda_order, z_order, x_order);
    }
    return out;
}

CompareReport compare_p2(int lambda_order, int z_order, int x_order, const std::string& p_lift)
{
    auto a = phi_equivariant(lambda_order, z_order, x_order, p_lift);
    auto b = phi_blowup_route(lambda_order, z_order, x_order, p_lift);
    CompareReport r = compare_series(a, b, "triples", "blowup");
    std::string where = "P2 p=" + p_lift + " Lambda<=" + std::to_string(lambda_order) + " z<=" +
                        std::to_string(z_order) + " x<=" + std::to_string(x_order);
    r.detail = r.ok ? where + ": " + std::to_string(r.slices) + " nonzero slices agree" : where + ": " + r.detail;
    return r;
}

}  // namespace inst
