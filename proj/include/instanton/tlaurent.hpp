#pragma once

#include "instanton/ratfn.hpp"

#include <climits>
#include <functional>
#include <map>

namespace inst {

struct WindowError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Laurent series in 1/t with coefficients in Q(i)(e1, e2, a). Coefficients are
// known exactly for every degree >= floor; kExact marks a finite exact sum.
class TLaurent {
public:
    static constexpr int kExact = INT_MIN / 4;

    TLaurent() = default;
    TLaurent(const RatFn& c);
    TLaurent(const GQ& c) : TLaurent(RatFn(c)) {}
    TLaurent(long c) : TLaurent(RatFn(c)) {}
    static TLaurent monomial(int deg, const RatFn& c, int floor = kExact);
    static TLaurent zero(int floor);

    int floor() const { return floor_; }
    bool is_exact() const { return floor_ == kExact; }
    // Highest degree that may be nonzero (floor - 1 for an inexact zero).
    int top() const;
    bool is_zero() const;  // zero within the window
    const std::map<int, RatFn, std::greater<int>>& terms() const { return terms_; }
    RatFn coeff(int d) const;

    TLaurent& operator+=(const TLaurent& o);
    TLaurent& operator-=(const TLaurent& o);
    friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
    friend TLaurent operator-(TLaurent a, const TLaurent& b) { return a -= b; }
    friend TLaurent operator*(const TLaurent& a, const TLaurent& b);
    TLaurent& operator*=(const TLaurent& o) { return *this = *this * o; }
    TLaurent operator-() const;
    TLaurent scaled(const RatFn& c) const;
    // Equal floors and equal coefficients.
    friend bool operator==(const TLaurent& a, const TLaurent& b);
    friend bool operator!=(const TLaurent& a, const TLaurent& b) { return !(a == b); }

    TLaurent truncated(int floor) const;
    // 1/self known down to the given floor; the top coefficient must be exact.
    TLaurent inverse(int floor) const;
    TLaurent map_coeffs(const std::function<RatFn(const RatFn&)>& f) const;

    std::string str() const;

private:
    std::map<int, RatFn, std::greater<int>> terms_;
    int floor_ = kExact;
};

// Expansion at t = infinity of f, known for all degrees >= floor.
TLaurent expand_at_infinity(const RatFn& f, int floor);

}  // namespace inst
