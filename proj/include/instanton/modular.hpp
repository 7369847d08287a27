#pragma once

#include "instanton/multiseries.hpp"
#include "instanton/nekrasov.hpp"
#include "instanton/qseries.hpp"

#include <string>

namespace inst {

enum class ThetaKind { T00, T01, T10 };

// Exponents below `ceil` eighths of q.
QSeries theta_series(ThetaKind kind, int ceil);
QSeries e2_series(int ceil);

// All series are stored with Lambda = 1; `weight` records the Lambda power.
struct SWSeries {
    int ceil = 0;  // ceiling of the theta inputs, in eighths
    QSeries theta00, theta01, theta10, e2;
    QSeries u, duda, a, T;
};
// Cached per ceiling.
const SWSeries& sw_series(int ceil);

// w = Lambda/a as a series in q^{1/8} (weight 0).
QSeries w_of_q(int ceil);
// q^{1/8} as a series in w = Lambda/a (lattice index k <-> w^k).
QSeries q_of_a(int ceil);

struct ModularReport {
    bool ok = true;
    std::string detail;
    GQ constant;           // reported ratio constant, where applicable
    int compared_to = 0;   // last compared exponent, in eighths
};

// -4u against dF0/dlogLambda, and T against (1/32) d^2F0/(dlogLambda)^2, after a = a(q).
ModularReport contact_check_u(const PrepotentialParts& p);
ModularReport contact_check_T(const PrepotentialParts& p);
// exp(2A) Lambda / (i du/da) and exp(2B - 2A) / theta01^2 must be constants.
ModularReport ab_check_A(const PrepotentialParts& p);
ModularReport ab_check_BA(const PrepotentialParts& p);

struct ModularWallInput {
    int xi2 = 0;       // xi^2
    int xiK = 0;       // <xi K>
    int K2 = 0;
    int sigma = 0;
    int chiO = 1;
    GQ alpha_xi;       // <alpha xi>
    GQ alpha2;         // <alpha^2>
};

// Coefficients of z^n x^m (n <= z_order, m <= x_order) of the modular
// wallcrossing formula, as a series in (Lambda, z, x); the Lambda power of the
// z^n x^m coefficient is n + 2m + 1 - chiO.
MultiSeries<GQ> wallcross_modular(const ModularWallInput& in, int z_order, int x_order, int lambda_order);

}  // namespace inst
