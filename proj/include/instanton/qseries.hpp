#pragma once

#include "instanton/gaussian.hpp"
#include "instanton/tlaurent.hpp"

#include <string>
#include <vector>

namespace inst {

// Laurent series in q on the lattice (1/8)Z. Exponents are stored in eighths:
// index e means q^(e/8). Coefficients are known for lo <= e < ceil. Every
// series carries an integer Lambda-weight that adds under multiplication.
class QSeries {
public:
    QSeries() = default;
    QSeries(int lo, int ceil, std::vector<GQ> coeffs, int weight = 0);
    static QSeries zero(int ceil, int weight = 0);
    static QSeries constant(const GQ& c, int ceil, int weight = 0);
    static QSeries monomial(int e8, const GQ& c, int ceil, int weight = 0);

    int lo() const { return lo_; }
    int ceil() const { return ceil_; }
    int weight() const { return weight_; }
    // First exponent with nonzero coefficient, or ceil if the series is zero.
    int valuation() const;
    GQ coeff(int e8) const;
    bool is_zero() const { return valuation() >= ceil_; }

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries operator-() const;
    QSeries scaled(const GQ& c) const;

    QSeries inverse() const;
    QSeries pow(int n) const;
    QSeries truncated(int ceil) const;
    QSeries shifted(int e8) const;  // times q^(e8/8)
    QSeries with_weight(int w) const;
    QSeries exp() const;  // requires weight 0 and positive valuation
    QSeries log() const;  // requires weight 0 and constant term 1

    // Sum of c[k] * self^k; self must have positive valuation.
    QSeries compose_into(const std::vector<GQ>& c) const;

    std::string str() const;

private:
    int lo_ = 0;
    int ceil_ = 0;
    int weight_ = 0;
    std::vector<GQ> c_;  // c_[k] is the coefficient of q^((lo_+k)/8)

    void check_compatible(const QSeries& o, const char* what) const;
};

// Treats the lattice variable w = q^(1/8) as the series variable:
// given s = c1 w + c2 w^2 + ... returns w(s) in the same encoding.
QSeries series_reverse(const QSeries& s);

}  // namespace inst
