#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace inst {

// Element re + im*i of Q(i). Both parts are kept canonical by GMP.
class GQ {
public:
    mpq_class re;
    mpq_class im;

    GQ() = default;
    GQ(long v) : re(v) {}
    GQ(const mpq_class& r) : re(r) {}
    GQ(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}
    GQ(long num, long den) : re(num, den) { re.canonicalize(); }

    static GQ imag_unit() { return GQ(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return sgn(im) == 0 && re == 1; }
    bool is_real() const { return sgn(im) == 0; }

    GQ conj() const { return GQ(re, -im); }
    GQ inverse() const;
    GQ pow(long n) const;

    GQ& operator+=(const GQ& o);
    GQ& operator-=(const GQ& o);
    GQ& operator*=(const GQ& o);
    GQ& operator/=(const GQ& o);

    friend GQ operator+(GQ a, const GQ& b) { return a += b; }
    friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
    friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
    friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
    GQ operator-() const { return GQ(-re, -im); }

    friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

    // Canonical text: "p/q" or "p/q+r/s*i" (integers print without "/1").
    std::string str() const;
    static GQ parse(const std::string& s);
};

// Total order used only for canonical sorting, not arithmetic.
int cmp(const GQ& a, const GQ& b);

}  // namespace inst
