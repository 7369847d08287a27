#pragma once

#include "instanton/ratfn.hpp"

#include <map>
#include <string>
#include <vector>

namespace inst {

// c1*eps1 + c2*eps2 with integer coefficients.
struct Weight {
    int c1 = 0, c2 = 0;
    MPoly poly() const;
    Weight operator-() const { return {-c1, -c2}; }
    Weight operator+(const Weight& o) const { return {c1 + o.c1, c2 + o.c2}; }
    Weight operator*(int k) const { return {c1 * k, c2 * k}; }
    bool is_zero() const { return c1 == 0 && c2 == 0; }
    friend bool operator==(const Weight& a, const Weight& b) { return a.c1 == b.c1 && a.c2 == b.c2; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c1 != b.c1 ? a.c1 < b.c1 : a.c2 < b.c2; }
    std::string str() const;
};

struct FixedPoint {
    std::string id;
    Weight wx, wy;  // tangent weights
};

// Per-point restrictions of an equivariant divisor class.
using EquivClass = std::vector<Weight>;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ToricSurface {
public:
    ToricSurface() = default;
    ToricSurface(std::string name, std::vector<FixedPoint> points, std::map<std::string, EquivClass> classes);

    const std::string& name() const { return name_; }
    const std::vector<FixedPoint>& points() const { return points_; }
    const std::map<std::string, EquivClass>& classes() const { return classes_; }
    int chi() const { return int(points_.size()); }
    int point_index(const std::string& id) const;
    const EquivClass& cls(const std::string& name) const;

    // Integer combination such as "H-2E", "3H-4E", "-H+2E".
    EquivClass combination(const std::string& spec) const;
    EquivClass combination(const std::map<std::string, int>& coeffs) const;
    EquivClass canonical() const;  // K = -(wx + wy)

    MPoly euler(int i) const;  // wx * wy
    MPoly c1(int i) const;     // wx + wy
    MPoly todd2(int i) const;  // ((wx + wy)^2 + wx wy) / 12

    // sum_i values[i] / (wx_i wy_i)
    RatFn localize(const std::vector<MPoly>& values) const;
    // Nonequivariant intersection number of two classes.
    GQ intersect(const EquivClass& a, const EquivClass& b) const;
    int K2() const;
    int sigma() const;  // (K^2 - 2 chi) / 3
    int chiO() const;   // (K^2 + chi) / 12

    // Throws ValidationError naming the failing identity.
    void validate() const;

private:
    std::string name_;
    std::vector<FixedPoint> points_;
    std::map<std::string, EquivClass> classes_;
};

std::vector<MPoly> restrictions(const EquivClass& c);

ToricSurface builtin_surface(const std::string& name);  // P2, P1xP1, F1
ToricSurface blowup(const ToricSurface& s, const std::string& point_id, const std::string& new_class);

// Solves for a class lift along the invariant-curve graph: values at adjacent
// points differ by a multiple of the curve weight, the lift vanishes at
// `zero_at`, and localized pairings with the fixed classes, with itself and
// with K match the targets. Returns all solutions with steps in [-bound, bound].
struct ClassConstraints {
    std::string zero_at;
    int self = 0;  // class^2
    int dotK = 0;  // class . K
    std::vector<std::pair<EquivClass, int>> pairings;
};
std::vector<EquivClass> solve_class(const std::vector<FixedPoint>& pts, const ClassConstraints& c, int bound = 4);

// Laurent polynomial in t1, t2 with integer coefficients.
using Character = std::map<std::pair<int, int>, long>;
std::string character_str(const Character& ch);

// sum_i N_i / ((1 - e^{-wx_i})(1 - e^{-wy_i})) as a Laurent polynomial; throws
// ValidationError if the sum is not one.
Character localized_character(const std::vector<FixedPoint>& pts, const std::vector<Character>& numerators);
// sum_i e^{xi_i} / ((1 - e^{-wx_i})(1 - e^{-wy_i})) as a Laurent polynomial.
Character chi_character(const ToricSurface& s, const EquivClass& xi);
long character_value(const Character& ch);  // evaluation at t1 = t2 = 1

struct WallNotGood : std::domain_error {
    using std::domain_error::domain_error;
};
// Weights of H^1(X, L) for c1(L) = xi, from -chi_character(xi).
std::vector<Weight> h1_weights(const ToricSurface& s, const EquivClass& xi);

}  // namespace inst
