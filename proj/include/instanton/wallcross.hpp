#pragma once

#include "instanton/modular.hpp"
#include "instanton/nekrasov.hpp"
#include "instanton/toric.hpp"

#include <set>
#include <string>
#include <vector>

namespace inst {

struct WallData {
    ToricSurface surface;
    std::string xi_spec;
    EquivClass xi;  // lift of xi, including any global shift
    int xi2 = 0, xiK = 0;
    std::vector<Weight> h1L, h1Ldual;  // weights alpha_j, alpha'_k
    std::string alpha_spec;
    EquivClass alpha;
    std::string p_point;  // fixed point carrying the point-class lift
};

// Throws WallNotGood if either H^1 character fails the effectivity surrogate.
WallData make_wall(const ToricSurface& s, const std::string& xi_spec, const std::string& alpha_spec,
                   const std::string& p_point, Weight xi_shift = {}, Weight alpha_shift = {});

// Restrictions of the point-class lift: wx*wy at p_point, zero elsewhere.
std::vector<MPoly> point_class(const WallData& w);

enum class CouplingRoute { LambdaShift, EFactor };

// Equivariant wallcrossing term as a series in (Lambda, z, x) whose coefficients
// are Laurent series in 1/t, exact down to t^{t_floor}. Each coefficient is
// checked to be polynomial in eps.
MultiSeries<TLaurent> delta_equivariant(const WallData& w, int lambda_order, int z_order, int x_order,
                                        int t_floor = -1, CouplingRoute route = CouplingRoute::LambdaShift);

// [t^{-1}] of delta_equivariant, kept equivariant (coefficients polynomial in eps).
MultiSeries<RatFn> delta_residue(const WallData& w, int lambda_order, int z_order, int x_order,
                                 CouplingRoute route = CouplingRoute::LambdaShift);

// eps -> 0 of delta_residue.
MultiSeries<GQ> delta_nonequivariant(const WallData& w, int lambda_order, int z_order, int x_order,
                                     CouplingRoute route = CouplingRoute::LambdaShift);

ModularWallInput modular_input(const WallData& w);
MultiSeries<GQ> delta_modular_for_wall(const WallData& w, int lambda_order, int z_order, int x_order);

struct PertReport {
    bool ok = true;
    int pi_multiple = 0;  // residual constant, in units of Pi
    std::string detail;
};
// Compares sum_i F^pert(wx_i, wy_i, (t - xi_i)/2) with its closed form down to t^{t_floor}.
PertReport pert_identity_check(const WallData& w, int t_floor);
// Same identity for any lift, with H^1 weights taken with signed multiplicities
// from the characters of L and its dual.
PertReport pert_identity_check(const ToricSurface& s, const EquivClass& xi, int t_floor);
// The two sides: sum of localized F^pert, and
// (-xi^2-2) log Lambda - sum log(alpha_j - t) - sum log(alpha'_k + t), with
// L = log(t/Lambda) and log(-y) = log(y) + Pi.
LogElem pert_localized(const ToricSurface& s, const EquivClass& xi, int t_floor);
LogElem pert_closed_form(const ToricSurface& s, const EquivClass& xi, int t_floor);

struct HilbFixedPoint {
    std::vector<DiagramPair> tuple;  // one pair per fixed point of the surface
    MPoly tangent_euler;             // e(T) at the fixed point of the Hilbert scheme of pairs
};
std::vector<HilbFixedPoint> hilb_fixed_points(const ToricSurface& s, int l);
// prod_i n_{1,2} n_{2,1} at a = (t - xi_i)/2, the two Ext Euler factors without H^1.
MPoly ext_euler(const ToricSurface& s, const HilbFixedPoint& p, const EquivClass& xi);

struct CompareReport {
    bool ok = true;
    int slices = 0;  // number of compared (Lambda, z, x) exponents
    std::string detail;
};
// Exact coefficientwise comparison over the union of supports; the first
// mismatch is reported with its exponent record.
template <class C>
CompareReport compare_series(const MultiSeries<C>& a, const MultiSeries<C>& b, const std::string& left,
                             const std::string& right)
{
    CompareReport r;
    if (a.names() != b.names()) {
        r.ok = false;
        r.detail = "variable sets differ";
        return r;
    }
    std::set<std::vector<int>> keys;
    for (const auto& [k, c] : a.terms()) keys.insert(k);
    for (const auto& [k, c] : b.terms()) keys.insert(k);
    for (const auto& k : keys) {
        if (!a.in_window(k) || !b.in_window(k)) continue;
        ++r.slices;
        C ca = a.coeff(k), cb = b.coeff(k);
        if (ca == cb) continue;
        r.ok = false;
        std::string e;
        for (size_t i = 0; i < k.size(); ++i) e += (i ? " " : "") + a.names()[i] + "^" + std::to_string(k[i]);
        r.detail = "mismatch at " + e + ": " + left + " = " + ca.str() + ", " + right + " = " + cb.str();
        return r;
    }
    return r;
}
CompareReport route_compare(const WallData& w, int lambda_order, int z_order, int x_order);

}  // namespace inst
