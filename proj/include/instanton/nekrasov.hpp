#pragma once

#include "instanton/logelem.hpp"
#include "instanton/multiseries.hpp"
#include "instanton/partitions.hpp"

#include <string>
#include <vector>

namespace inst {

// e1*eps1 + e2*eps2 + ca*a, one factor of an Euler class.
struct LinearFactor {
    int e1, e2, ca;
};

// Factors of n^Y_{alpha,beta}, with a_1 = -a and a_2 = a.
std::vector<LinearFactor> euler_factor_terms(const DiagramPair& y, int alpha, int beta);
MPoly euler_factor(const DiagramPair& y, int alpha, int beta);
// All factors of prod_{alpha,beta} n^Y_{alpha,beta}; memoized.
const std::vector<LinearFactor>& tangent_factors(const DiagramPair& y);

// Substitution (eps1, eps2, a) -> (w1, w2, a_sub) applied to Nekrasov data.
struct Specialization {
    MPoly w1 = MPoly::var(E1);
    MPoly w2 = MPoly::var(E2);
    MPoly a = MPoly::var(A);
    std::array<std::optional<MPoly>, kNumVars> subs() const { return {w1, w2, a, std::nullopt}; }
    bool is_default() const;
};

MPoly specialize(const LinearFactor& f, const Specialization& s);
// 1 / prod of the Euler factors of y under s.
RatFn pair_weight(const DiagramPair& y, const Specialization& s = {});
// Z^inst coefficients of Lambda^{4n} for n = 0..n_max at zero couplings.
std::vector<RatFn> zinst_coeffs(int n_max, const Specialization& s = {});

// The degree rho-1 bracket of the E-factor exponent (coefficient of tau_rho).
RatFn e_exponent(const DiagramPair& y, int rho);
// exp(sum_rho tau_rho * e_exponent), variables tau1..tauR, each to tau_order.
MultiSeries<RatFn> e_factor(const DiagramPair& y, int R, int tau_order, const Specialization& s = {});

// Z^inst as a series in Lambda (to order N) and tau1..tauR.
MultiSeries<RatFn> zinst(int N, const Specialization& s = {}, int R = 0, int tau_order = 0);
MultiSeries<RatFn> finst(int N, const Specialization& s = {}, int R = 0, int tau_order = 0);

// c_0..c_N of 1/((e^{e1 t}-1)(e^{e2 t}-1)) = sum c_n t^{n-2}/n!.
std::vector<RatFn> c_coeffs(int N);

// Argument of gamma: x = sign*(t - c) (shifted) or x = sign*2a (symbolic).
struct PertArg {
    bool symbolic_a = false;
    int sign = 1;
    MPoly c;  // used when !symbolic_a
};

// gamma_{w1,w2}(x; Lambda) in the log ring. The L symbol is log(t/Lambda) for
// shifted arguments and log(2a/Lambda) for symbolic ones; log(-y) = log(y) + Pi.
// For shifted arguments t-coefficients are exact down to `floor`; for
// symbolic arguments the c_n tail is kept through eps-degree eps_order.
LogElem gamma_expand(const PertArg& x, const Specialization& w, int floor, int eps_order);
// F^pert(w1, w2, (t - c)/2) = -gamma(t - c) - gamma(-(t - c)).
LogElem fpert_shifted(const Specialization& w, const MPoly& c, int floor);
// F^pert(eps1, eps2, a) with symbolic a.
LogElem fpert_symbolic(int eps_order);
// d F^pert / d log Lambda in closed form.
RatFn fpert_dlog_lambda();

// Taylor components in (eps1, eps2) at eps = 0: result[k] is homogeneous of
// eps-degree k with coefficients rational in a. Throws PoleError if the
// reduced denominator vanishes at eps = 0.
std::vector<RatFn> eps_taylor(const RatFn& f, int order);

struct PrepotentialParts {
    int N = 0;  // Lambda order
    // Index n holds the Lambda^{4n} coefficient.
    std::vector<RatFn> F0, H, A, B;
    // Constant c with F0[n] = c * a^{2-4n}, and likewise for the others (a^{-4n}, a^{1-4n}).
    std::vector<GQ> f0, h, a, b;
    // Perturbative summands in terms of L = log(2a/Lambda) and Pi.
    LogElem pert_F0, pert_H, pert_A, pert_B;
};
PrepotentialParts prepotential_parts(int N);

struct CheckReport {
    bool ok = true;
    std::string detail;
};
CheckReport tau_shift_check(int N, int tau_order);

}  // namespace inst
