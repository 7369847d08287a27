#include "instanton/wallcross.hpp"

#include "instanton/parallel.hpp"

#include <algorithm>

namespace inst {

namespace {

using Series = MultiSeries<TLaurent>;

const std::vector<std::string> kNames{"Lambda", "z", "x"};

MPoly tvar() { return MPoly::var(T); }

TLaurent poly_in_t(const MPoly& p)
{
    TLaurent r;
    auto cs = p.coeffs_in(T);
    for (int k = 0; k < int(cs.size()); ++k)
        if (!cs[k].is_zero()) r += TLaurent::monomial(k, RatFn(cs[k]));
    return r;
}

// Degree in t at infinity: deg num - deg den.
int t_top(const RatFn& f)
{
    if (f.is_zero()) return TLaurent::kExact;
    return f.num().degree(T) - f.den().degree(T);
}

int series_top(const Series& s)
{
    int m = 0;
    for (const auto& [k, c] : s.terms()) m = std::max(m, c.top());
    return m;
}

Specialization point_spec(const WallData& w, int i)
{
    const FixedPoint& p = w.surface.points()[i];
    Specialization s;
    s.w1 = p.wx.poly();
    s.w2 = p.wy.poly();
    s.a = (tvar() - w.xi[i].poly()) * GQ(mpq_class(1, 2));
    return s;
}

// Linear series c_z * z + c_x * x with exact coefficients.
Series linear_zx(const std::vector<int>& orders, const MPoly& cz, const MPoly& cx)
{
    Series s(kNames, orders);
    s.set({0, 1, 0}, TLaurent(RatFn(cz)));
    s.set({0, 0, 1}, TLaurent(RatFn(cx)));
    return s;
}

int lambda_depth(const WallData& w, int lambda_order)
{
    int base = -w.xi2 - 3;
    if (lambda_order < base) return -1;
    return (lambda_order - base) / 4;
}

struct PointData {
    // Lambda-shift route: Z_n; E-factor route: coefficients of Lambda^{4n} tau^k.
    std::vector<std::pair<std::vector<int>, RatFn>> coeffs;
    int top = 0;
};

PointData point_data(const WallData& w, int i, int lmax, int tau_order, CouplingRoute route)
{
    Specialization sp = point_spec(w, i);
    PointData d;
    if (route == CouplingRoute::LambdaShift) {
        auto z = zinst_coeffs(lmax, sp);
        for (int n = 0; n <= lmax; ++n) d.coeffs.push_back({{4 * n, 0}, z[n]});
    } else {
        auto z = zinst(4 * lmax, sp, 1, tau_order);
        for (const auto& [k, c] : z.terms()) d.coeffs.push_back({k, c});
    }
    for (const auto& [k, c] : d.coeffs) d.top = std::max(d.top, t_top(c));
    return d;
}

Series point_series(const WallData& w, int i, const PointData& d, const std::vector<int>& orders, int floor,
                    CouplingRoute route, const std::vector<MPoly>& pclass)
{
    Series out(kNames, orders);
    MPoly bz = w.alpha[i].poly(), bx = pclass[i];
    if (route == CouplingRoute::LambdaShift) {
        for (const auto& [k, c] : d.coeffs) {
            int n = k[0] / 4;
            TLaurent zt = expand_at_infinity(c, floor);
            Series shift = Series::constant(kNames, orders, TLaurent(1));
            if (n > 0) shift = linear_zx(orders, bz * GQ(long(n)), bx * GQ(long(n))).exp();
            for (const auto& [kk, cc] : shift.terms()) out.add({k[0], kk[1], kk[2]}, cc * zt);
        }
        return out;
    }
    // tau_1 = -(alpha z + p x) at this point
    Series S = linear_zx(orders, -bz, -bx);
    std::vector<Series> powers{Series::constant(kNames, orders, TLaurent(1))};
    for (const auto& [k, c] : d.coeffs) {
        while (int(powers.size()) <= k[1]) powers.push_back(powers.back() * S);
        TLaurent ct = expand_at_infinity(c, floor);
        for (const auto& [kk, cc] : powers[k[1]].terms()) out.add({k[0], kk[1], kk[2]}, cc * ct);
    }
    return out;
}

}  // namespace

WallData make_wall(const ToricSurface& s, const std::string& xi_spec, const std::string& alpha_spec,
                   const std::string& p_point, Weight xi_shift, Weight alpha_shift)
{
    WallData w;
    w.surface = s;
    w.xi_spec = xi_spec;
    w.alpha_spec = alpha_spec;
    w.p_point = p_point;
    s.point_index(p_point);
    EquivClass xi0 = s.combination(xi_spec);
    w.xi2 = int(s.intersect(xi0, xi0).re.get_num().get_si());
    w.xiK = int(s.intersect(xi0, s.canonical()).re.get_num().get_si());
    w.xi = xi0;
    for (auto& v : w.xi) v = v + xi_shift;
    w.alpha = s.combination(alpha_spec);
    for (auto& v : w.alpha) v = v + alpha_shift;
    EquivClass dual = w.xi;
    for (auto& v : dual) v = -v;
    w.h1L = h1_weights(s, w.xi);
    w.h1Ldual = h1_weights(s, dual);
    if (int(w.h1L.size() + w.h1Ldual.size()) != -w.xi2 - 2) {
        throw WallNotGood("wall " + xi_spec + ": h1 weight count differs from -xi^2 - 2");
    }
    return w;
}

std::vector<MPoly> point_class(const WallData& w)
{
    std::vector<MPoly> out(w.surface.chi());
    int k = w.surface.point_index(w.p_point);
    out[k] = w.surface.euler(k);
    return out;
}

Series delta_equivariant(const WallData& w, int lambda_order, int z_order, int x_order, int t_floor,
                         CouplingRoute route)
{
    Series result(kNames, {lambda_order, z_order, x_order});
    int lmax = lambda_depth(w, lambda_order);
    if (lmax < 0) return result;
    const ToricSurface& s = w.surface;
    int chi = s.chi();
    std::vector<int> orders{4 * lmax, z_order, x_order};
    std::vector<MPoly> pclass = point_class(w);

    // Global factor: 1 / (prod (alpha_j - t) prod (alpha'_k + t)), times the
    // Gaussian correction exp(-1/4 int beta (t - xi)^2) on the Lambda-shift route.
    std::vector<MPoly> cfactors;
    for (const auto& a : w.h1L) cfactors.push_back(a.poly() - tvar());
    for (const auto& a : w.h1Ldual) cfactors.push_back(a.poly() + tvar());
    RatFn cinv = RatFn::from_factors(MPoly(1), cfactors);
    Series gauss = Series::constant(kNames, orders, TLaurent(1));
    if (route == CouplingRoute::LambdaShift) {
        std::vector<MPoly> va, vp;
        for (int i = 0; i < chi; ++i) {
            MPoly sq = (tvar() - w.xi[i].poly()).pow(2);
            va.push_back(w.alpha[i].poly() * sq);
            vp.push_back(pclass[i] * sq);
        }
        RatFn ia = s.localize(va), ip = s.localize(vp);
        if (!ia.is_polynomial() || !ip.is_polynomial()) throw std::logic_error("delta_equivariant: localized class is not polynomial");
        Series g(kNames, orders);
        g.set({0, 1, 0}, poly_in_t(ia.to_poly() * GQ(mpq_class(-1, 4))));
        g.set({0, 0, 1}, poly_in_t(ip.to_poly() * GQ(mpq_class(-1, 4))));
        gauss = g.exp();
    }
    int tau_order = z_order + x_order;
    auto data = parallel_map<PointData>(chi, [&](int i) { return point_data(w, i, lmax, tau_order, route); });

    // Floors: every factor must be known far enough down that the product is
    // exact at t^{t_floor}; a factor of top degree M raises the others' floors by M.
    std::vector<int> tops;
    for (const auto& d : data) tops.push_back(std::max(d.top, 0));
    int gtop = std::max(series_top(gauss) + t_top(cinv), 0);
    int total = gtop;
    for (int m : tops) total += m;
    std::vector<Series> factors = parallel_map<Series>(chi, [&](int i) {
        return point_series(w, i, data[i], orders, t_floor - (total - tops[i]), route, pclass);
    });
    Series prod = gauss;
    {
        TLaurent c = expand_at_infinity(cinv, t_floor - (total - gtop) - series_top(gauss));
        prod = prod.scaled(c);
    }
    for (const auto& f : factors) prod = prod * f;

    int shift = -w.xi2 - 3;
    for (const auto& [k, c] : prod.terms()) {
        std::vector<int> kk{k[0] + shift, k[1], k[2]};
        if (!result.in_window(kk)) continue;
        if (!c.is_exact() && c.floor() > t_floor) throw std::logic_error("delta_equivariant: t-window too shallow");
        for (const auto& [d, r] : c.terms()) {
            if (!r.is_polynomial()) {
                throw std::logic_error("delta_equivariant: eps-denominator survives at t^" + std::to_string(d) + ": " +
                                       r.str());
            }
        }
        result.set(kk, c);
    }
    return result;
}

MultiSeries<RatFn> delta_residue(const WallData& w, int lambda_order, int z_order, int x_order, CouplingRoute route)
{
    Series d = delta_equivariant(w, lambda_order, z_order, x_order, -1, route);
    MultiSeries<RatFn> out(d.names(), d.orders());
    for (const auto& [k, c] : d.terms()) out.set(k, c.coeff(-1));
    return out;
}

MultiSeries<GQ> delta_nonequivariant(const WallData& w, int lambda_order, int z_order, int x_order,
                                     CouplingRoute route)
{
    auto r = delta_residue(w, lambda_order, z_order, x_order, route);
    MultiSeries<GQ> out(r.names(), r.orders());
    for (const auto& [k, c] : r.terms()) {
        RatFn v = c.set_zero({E1, E2});
        if (!v.is_constant()) throw std::logic_error("delta_nonequivariant: eps -> 0 limit is not a number");
        GQ g = v.to_constant();
        if (!g.is_real()) throw std::logic_error("delta_nonequivariant: nonzero imaginary part " + g.str());
        out.set(k, g);
    }
    return out;
}

ModularWallInput modular_input(const WallData& w)
{
    const ToricSurface& s = w.surface;
    EquivClass xi0 = s.combination(w.xi_spec);
    EquivClass a0 = s.combination(w.alpha_spec);
    ModularWallInput in;
    in.xi2 = w.xi2;
    in.xiK = w.xiK;
    in.K2 = s.K2();
    in.sigma = s.sigma();
    in.chiO = 1;
    in.alpha_xi = s.intersect(a0, xi0);
    in.alpha2 = s.intersect(a0, a0);
    return in;
}

MultiSeries<GQ> delta_modular_for_wall(const WallData& w, int lambda_order, int z_order, int x_order)
{
    return wallcross_modular(modular_input(w), z_order, x_order, lambda_order);
}

LogElem pert_localized(const ToricSurface& s, const EquivClass& xi, int t_floor)
{
    std::vector<LogElem> parts = parallel_map<LogElem>(s.chi(), [&](int i) {
        Specialization sp;
        sp.w1 = s.points()[i].wx.poly();
        sp.w2 = s.points()[i].wy.poly();
        return fpert_shifted(sp, xi[i].poly(), t_floor);
    });
    LogElem lhs;
    for (const auto& p : parts) lhs += p;
    return lhs;
}

LogElem pert_closed_form(const ToricSurface& s, const EquivClass& xi, int t_floor)
{
    // Signed H^1 multiplicities from -chi(L) and -chi(L^dual).
    EquivClass dual = xi;
    for (auto& v : dual) v = -v;
    Character chL = chi_character(s, xi), chD = chi_character(s, dual);
    long l = -character_value(chL), lp = -character_value(chD);
    LogElem rhs = LogElem::term(0, 1, TLaurent(-(l + lp))) + LogElem::term(1, 0, TLaurent(-l));
    // -log(1 - alpha/t) - log(1 + alpha'/t)
    TLaurent logs = TLaurent::zero(t_floor);
    for (int k = 1; -k >= t_floor; ++k) {
        RatFn c;
        for (const auto& [e, m] : chL)
            c += RatFn(Weight{e.first, e.second}.poly().pow(k) * GQ(mpq_class(-m, k)));
        for (const auto& [e, m] : chD)
            c += RatFn(Weight{e.first, e.second}.poly().pow(k) * GQ(mpq_class(k % 2 ? m : -m, k)));
        logs += TLaurent::monomial(-k, c, t_floor);
    }
    rhs += LogElem::term(0, 0, logs);
    return rhs;
}

PertReport pert_identity_check(const ToricSurface& s, const EquivClass& xi, int t_floor)
{
    LogElem lhs = pert_localized(s, xi, t_floor), rhs = pert_closed_form(s, xi, t_floor);
    LogElem diff = (lhs - rhs).truncated(t_floor);
    PertReport rep;
    for (const auto& [key, c] : diff.terms()) {
        for (const auto& [d, r] : c.terms()) {
            if (d < t_floor || r.is_zero()) continue;
            if (key == LogElem::Key{1, 0} && d == 0 && r.is_constant()) {
                GQ g = r.to_constant();
                if (g.is_real() && g.re.get_den() == 1) {
                    long m = g.re.get_num().get_si();
                    rep.pi_multiple = int(m);
                    if (m % 2 == 0) continue;
                }
            }
            rep.ok = false;
            rep.detail = "residual at Pi^" + std::to_string(key.first) + " L^" + std::to_string(key.second) + " t^" +
                         std::to_string(d) + ": " + r.str();
            return rep;
        }
    }
    if (rep.pi_multiple != 0) rep.detail = "residual constant " + std::to_string(rep.pi_multiple) + "*Pi";
    return rep;
}

PertReport pert_identity_check(const WallData& w, int t_floor) { return pert_identity_check(w.surface, w.xi, t_floor); }

std::vector<HilbFixedPoint> hilb_fixed_points(const ToricSurface& s, int l)
{
    if (l < 0) throw std::invalid_argument("hilb_fixed_points: l must be nonnegative");
    std::vector<HilbFixedPoint> out;
    for (auto& tup : tuples_of_total(s.chi(), l)) {
        HilbFixedPoint p;
        p.tuple = tup;
        MPoly e(1);
        for (int i = 0; i < s.chi(); ++i) {
            Specialization sp;
            sp.w1 = s.points()[i].wx.poly();
            sp.w2 = s.points()[i].wy.poly();
            for (int g = 1; g <= 2; ++g)
                for (const auto& f : euler_factor_terms(tup[i], g, g)) e *= specialize(f, sp);
        }
        p.tangent_euler = e;
        out.push_back(std::move(p));
    }
    return out;
}

MPoly ext_euler(const ToricSurface& s, const HilbFixedPoint& p, const EquivClass& xi)
{
    MPoly e(1);
    for (int i = 0; i < s.chi(); ++i) {
        Specialization sp;
        sp.w1 = s.points()[i].wx.poly();
        sp.w2 = s.points()[i].wy.poly();
        sp.a = (tvar() - xi[i].poly()) * GQ(mpq_class(1, 2));
        for (auto [al, be] : {std::pair{1, 2}, std::pair{2, 1}})
            for (const auto& f : euler_factor_terms(p.tuple[i], al, be)) e *= specialize(f, sp);
    }
    return e;
}

CompareReport route_compare(const WallData& w, int lambda_order, int z_order, int x_order)
{
    auto loc = delta_nonequivariant(w, lambda_order, z_order, x_order);
    auto mod = delta_modular_for_wall(w, lambda_order, z_order, x_order);
    CompareReport r = compare_series(loc, mod, "localization", "modular");
    std::string where = w.surface.name() + " xi=" + w.xi_spec + " alpha=" + w.alpha_spec + " p=" + w.p_point;
    r.detail = r.ok ? where + ": " + std::to_string(r.slices) + " nonzero slices agree" : where + ": " + r.detail;
    return r;
}

}  // namespace inst
