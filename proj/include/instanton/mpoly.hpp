#pragma once

#include "instanton/gaussian.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace inst {

// Fixed variable order e1 < e2 < a < t.
enum Var : int { E1 = 0, E2 = 1, A = 2, T = 3 };
constexpr int kNumVars = 4;
const char* var_name(int v);

// Packed monomial: 12 bits per exponent, total degree in the top 16 bits, so that
// integer comparison is the graded-lex order and multiplication is addition.
using Mono = std::uint64_t;
namespace mono {
constexpr int kBits = 12;
constexpr Mono kMask = (Mono(1) << kBits) - 1;
constexpr int kDegShift = 48;
constexpr int kMaxDeg = int(kMask);
Mono make(int e1, int e2, int a, int t);
inline int exp(Mono m, int v) { return int((m >> (kBits * v)) & kMask); }
inline int degree(Mono m) { return int(m >> kDegShift); }
inline Mono var(int v) { return (Mono(1) << (kBits * v)) | (Mono(1) << kDegShift); }
bool divides(Mono d, Mono m);
}  // namespace mono

struct Term {
    Mono m;
    GQ c;
};

class MPoly {
public:
    MPoly() = default;
    MPoly(long c);
    MPoly(const GQ& c);
    static MPoly var(int v);
    static MPoly monomial(Mono m, const GQ& c);
    // c[0]*e1 + c[1]*e2 + c[2]*a + c[3]*t + c[4]
    static MPoly linear(const std::array<GQ, 5>& c);
    // Takes ownership of terms sorted strictly descending with nonzero coefficients.
    static MPoly from_sorted(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GQ constant_term() const;
    const GQ& lead_coeff() const { return terms_.front().c; }
    Mono lead_mono() const { return terms_.front().m; }
    size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    int total_degree() const { return terms_.empty() ? -1 : mono::degree(terms_.front().m); }
    int min_total_degree() const;
    int degree(int v) const;
    bool is_homogeneous() const;
    bool has_var(int v) const { return degree(v) > 0; }

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const GQ& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const GQ& c) { return a *= c; }
    friend MPoly operator*(const GQ& c, MPoly a) { return a *= c; }
    friend MPoly operator*(int c, MPoly a) { return a *= GQ(long(c)); }
    friend MPoly operator*(MPoly a, int c) { return a *= GQ(long(c)); }
    MPoly operator-() const;
    MPoly pow(int n) const;
    MPoly monic() const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Replace each variable v by subs[v] (unset entries are kept).
    MPoly substitute(const std::array<std::optional<MPoly>, kNumVars>& subs) const;
    MPoly eval(int v, const GQ& value) const;
    MPoly set_zero(std::initializer_list<int> vars) const;
    // Coefficients of v^k for k = 0..degree(v); each free of v.
    std::vector<MPoly> coeffs_in(int v) const;
    static MPoly from_coeffs_in(int v, const std::vector<MPoly>& coeffs);
    MPoly derivative(int v) const;
    MPoly mul_mono(Mono m) const;
    // Part of total degree exactly d.
    MPoly homogeneous_part(int d) const;

    std::string str() const;

private:
    std::vector<Term> terms_;  // strictly descending monomials, no zero coefficients
};

// Canonical total order on polynomials (for use as map keys).
bool poly_less(const MPoly& a, const MPoly& b);

// Quotient if b divides a exactly, otherwise nullopt.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);
// Monic gcd (zero if both are zero).
MPoly gcd(const MPoly& a, const MPoly& b);
// Value of p modulo a fixed prime at a point; nullopt if a denominator vanishes.
std::optional<std::uint64_t> eval_mod_p(const MPoly& p, const std::array<std::uint64_t, kNumVars>& point);
std::uint64_t modp_prime();
std::uint64_t modp_sqrt_minus_one();

}  // namespace inst
