#pragma once

#include "instanton/mpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace inst {

// Reduced fraction num / den over Q(i) in e1, e2, a, t. The denominator is kept
// factored: monic linear atoms with multiplicities times a monic remainder that
// holds any nonlinear part. Linear atoms cover every denominator arising from
// Euler factors, so the expensive gcd path is rarely taken.
class RatFn {
public:
    using Atom = std::pair<MPoly, int>;

    RatFn() = default;
    RatFn(long c) : num_(c) {}
    RatFn(const GQ& c) : num_(c) {}
    RatFn(MPoly p) : num_(std::move(p)) {}

    static RatFn fraction(const MPoly& num, const MPoly& den);
    // num / prod(factors); factors may be arbitrary nonzero polynomials.
    static RatFn from_factors(const MPoly& num, const std::vector<MPoly>& factors);

    const MPoly& num() const { return num_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const MPoly& rest() const { return rest_; }
    MPoly den() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return atoms_.empty() && rest_.is_constant(); }
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    MPoly to_poly() const;  // throws unless polynomial
    GQ to_constant() const;  // throws unless constant

    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o);
    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
    RatFn operator-() const;
    RatFn inverse() const;
    RatFn pow(int n) const;

    static RatFn sum(std::vector<RatFn> terms);

    friend bool operator==(const RatFn& a, const RatFn& b);
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    RatFn substitute(const std::array<std::optional<MPoly>, kNumVars>& subs) const;
    // Sets the given variables to zero; throws PoleError if the reduced
    // denominator vanishes there.
    RatFn set_zero(std::initializer_list<int> vars) const;
    int degree_bound(int v) const;  // degree of num in v minus degree of den in v
    // Total homogeneous degree, or nullopt if num or den is not homogeneous.
    std::optional<int> homogeneous_degree() const;

    std::string str() const;
    static RatFn parse(const std::string& text);

private:
    MPoly num_;
    std::vector<Atom> atoms_;  // sorted by poly_less
    MPoly rest_ = MPoly(1);

    void reduce();
    void add_factor(const MPoly& f, int mult);
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact cancellation of up to `max` powers of the monic linear form L from p.
int cancel_linear(MPoly& p, const MPoly& L, int max);

}  // namespace inst
