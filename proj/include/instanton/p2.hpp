#pragma once

#include "instanton/wallcross.hpp"

#include <array>
#include <utility>
#include <vector>

namespace inst {

// Torus-fixed stable bundles on P2 with c1 = H are labelled by triples p, q, r.
struct P2Triple {
    int p = 0, q = 0, r = 0;
    mpq_class delta;  // (pq + qr + rp)/2 - (p^2 + q^2 + r^2)/4
    std::vector<std::pair<int, int>> region;
    std::string str() const;
};

mpq_class triple_delta(int p, int q, int r);
bool triple_admissible(int p, int q, int r);  // odd sum, strict triangle inequality
P2Triple make_triple(int p, int q, int r);
// Admissible triples with delta <= delta_max, ordered by (delta, p, q, r).
std::vector<P2Triple> triples_up_to(const mpq_class& delta_max);

// Lattice points of the convex region attached to an admissible triple.
std::vector<std::pair<int, int>> region(int p, int q, int r);
// Lattice points of the convex hull of the given vertices.
std::vector<std::pair<int, int>> hull_lattice_points(const std::vector<std::pair<int, int>>& vertices);
// Character of Ext^1(E, E) by localization of the trace-free endomorphisms.
Character ext1_character(int p, int q, int r);

// prod over region minus the origin of (m eps1 + n eps2).
MPoly euler_t(const P2Triple& t);
// (xi^x, xi^y, xi^z) at p_x, p_y, p_z.
std::array<Weight, 3> xi_weights(const P2Triple& t);

// Both routes use alpha = the H lift vanishing at p_z and the point lift at p_lift,
// which must be p_x or p_y. Result: series in (Lambda, z, x) over Q(eps1, eps2).
MultiSeries<RatFn> phi_equivariant(int lambda_order, int z_order, int x_order, const std::string& p_lift);

struct BlowupWall {
    int n = 0, a = 0;  // xi = (2n-1) H - 2a E on the blowup at p_z
    std::string spec() const;
};
std::vector<BlowupWall> blowup_walls(int lambda_order);
MultiSeries<RatFn> phi_blowup_route(int lambda_order, int z_order, int x_order, const std::string& p_lift);

CompareReport compare_p2(int lambda_order, int z_order, int x_order, const std::string& p_lift);

}  // namespace inst
