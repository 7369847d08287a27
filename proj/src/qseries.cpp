#include "instanton/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace inst {

QSeries::QSeries(int lo, int ceil, std::vector<GQ> coeffs, int weight)
    : lo_(lo), ceil_(ceil), weight_(weight), c_(std::move(coeffs))
{
    if (ceil_ < lo_) ceil_ = lo_;
    c_.resize(ceil_ - lo_);
}

QSeries QSeries::zero(int ceil, int weight) { return QSeries(ceil, ceil, {}, weight); }

QSeries QSeries::constant(const GQ& c, int ceil, int weight) { return monomial(0, c, ceil, weight); }

QSeries QSeries::monomial(int e8, const GQ& c, int ceil, int weight)
{
    if (e8 >= ceil) return zero(ceil, weight);
    std::vector<GQ> v(ceil - e8);
    v[0] = c;
    return QSeries(e8, ceil, std::move(v), weight);
}

int QSeries::valuation() const
{
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return lo_ + int(k);
    return ceil_;
}

GQ QSeries::coeff(int e8) const
{
    if (e8 >= ceil_) {
        throw WindowError("QSeries: exponent " + std::to_string(e8) + "/8 at or beyond ceiling " +
                          std::to_string(ceil_) + "/8");
    }
    if (e8 < lo_) return GQ();
    return c_[e8 - lo_];
}

void QSeries::check_compatible(const QSeries& o, const char* what) const
{
    if (ceil_ != o.ceil_) {
        throw WindowError(std::string("QSeries ") + what + ": ceilings differ (" + std::to_string(ceil_) + " vs " +
                          std::to_string(o.ceil_) + " eighths); truncate explicitly");
    }
    if (weight_ != o.weight_) {
        throw std::logic_error(std::string("QSeries ") + what + ": Lambda-weights differ (" +
                               std::to_string(weight_) + " vs " + std::to_string(o.weight_) + ")");
    }
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    check_compatible(o, "addition");
    int lo = std::min(lo_, o.lo_);
    std::vector<GQ> v(ceil_ - lo);
    for (int e = lo_; e < ceil_; ++e) v[e - lo] += c_[e - lo_];
    for (int e = o.lo_; e < ceil_; ++e) v[e - lo] += o.c_[e - o.lo_];
    lo_ = lo;
    c_ = std::move(v);
    return *this;
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries QSeries::scaled(const GQ& c) const
{
    QSeries r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    int va = a.valuation(), vb = b.valuation();
    int ceil = std::min(a.ceil_ + vb, b.ceil_ + va);
    int lo = va + vb;
    if (ceil <= lo) return QSeries::zero(ceil, a.weight_ + b.weight_);
    std::vector<GQ> v(ceil - lo);
    for (int i = va; i < a.ceil_; ++i) {
        const GQ& x = a.c_[i - a.lo_];
        if (x.is_zero()) continue;
        for (int j = vb; j < b.ceil_ && i + j < ceil; ++j) {
            const GQ& y = b.c_[j - b.lo_];
            if (!y.is_zero()) v[i + j - lo] += x * y;
        }
    }
    return QSeries(lo, ceil, std::move(v), a.weight_ + b.weight_);
}

QSeries QSeries::inverse() const
{
    int v = valuation();
    if (v >= ceil_) throw std::domain_error("QSeries::inverse: zero series within window");
    int n = ceil_ - v;  // relative precision
    GQ linv = c_[v - lo_].inverse();
    std::vector<GQ> u(n), r(n);
    for (int k = 0; k < n; ++k) u[k] = c_[v + k - lo_] * linv;
    r[0] = GQ(1);
    for (int k = 1; k < n; ++k) {
        GQ s;
        for (int j = 1; j <= k; ++j)
            if (!u[j].is_zero()) s += u[j] * r[k - j];
        r[k] = -s;
    }
    for (auto& x : r) x *= linv;
    return QSeries(-v, -v + n, std::move(r), -weight_);
}

QSeries QSeries::pow(int n) const
{
    if (n < 0) return inverse().pow(-n);
    if (n == 0) return constant(GQ(1), std::max(ceil_ - valuation(), 1), 0);
    QSeries result = *this, base = *this;
    --n;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

QSeries QSeries::truncated(int ceil) const
{
    if (ceil > ceil_) throw WindowError("QSeries::truncated: requested ceiling beyond known window");
    if (ceil <= lo_) return QSeries(ceil, ceil, {}, weight_);
    return QSeries(lo_, ceil, std::vector<GQ>(c_.begin(), c_.begin() + (ceil - lo_)), weight_);
}

QSeries QSeries::shifted(int e8) const
{
    QSeries r = *this;
    r.lo_ += e8;
    r.ceil_ += e8;
    return r;
}

QSeries QSeries::with_weight(int w) const
{
    QSeries r = *this;
    r.weight_ = w;
    return r;
}

QSeries QSeries::exp() const
{
    if (weight_ != 0) throw std::logic_error("QSeries::exp: nonzero Lambda-weight");
    int v = valuation();
    if (v <= 0 && v < ceil_) throw std::domain_error("QSeries::exp: nonzero constant or polar part");
    // Recurrence on f' = f g' in the lattice variable.
    int n = std::max(ceil_, 1);
    std::vector<GQ> g(n), f(n);
    for (int e = std::max(lo_, 0); e < ceil_; ++e) g[e] = c_[e - lo_];
    f[0] = GQ(1);
    for (int k = 1; k < n; ++k) {
        GQ s;
        for (int j = 1; j <= k; ++j)
            if (!g[j].is_zero()) s += GQ(j) * g[j] * f[k - j];
        f[k] = s / GQ(k);
    }
    return QSeries(0, n, std::move(f), 0);
}

QSeries QSeries::log() const
{
    if (weight_ != 0) throw std::logic_error("QSeries::log: nonzero Lambda-weight");
    if (valuation() < 0 || !coeff(0).is_one()) throw std::domain_error("QSeries::log: constant term is not 1");
    int n = ceil_;
    std::vector<GQ> f(n), g(n);
    for (int e = 0; e < n; ++e) f[e] = coeff(e);
    // g' = f'/f  =>  k g_k = k f_k - sum_{j<k} j g_j f_{k-j}
    for (int k = 1; k < n; ++k) {
        GQ s = GQ(k) * f[k];
        for (int j = 1; j < k; ++j)
            if (!g[j].is_zero()) s -= GQ(j) * g[j] * f[k - j];
        g[k] = s / GQ(k);
    }
    return QSeries(0, n, std::move(g), 0);
}

QSeries QSeries::compose_into(const std::vector<GQ>& c) const
{
    if (valuation() <= 0) throw std::domain_error("QSeries::compose_into: inner series needs positive valuation");
    QSeries inner = with_weight(0);
    QSeries acc = QSeries::zero(ceil_, 0);
    QSeries p = QSeries::constant(GQ(1), ceil_, 0);
    for (size_t k = 0; k < c.size(); ++k) {
        if (k > 0) p = (p * inner).truncated(ceil_);
        if (p.valuation() >= ceil_) break;
        if (!c[k].is_zero()) acc += p.scaled(c[k]);
    }
    return acc;
}

std::string QSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].str() << ")*q^(" << lo_ + int(k) << "/8)";
    }
    if (first) os << "0";
    os << " + O(q^(" << ceil_ << "/8))";
    return os.str();
}

QSeries series_reverse(const QSeries& s)
{
    if (s.valuation() != 1) throw std::domain_error("series_reverse: series must start at the first lattice power");
    int n = s.ceil();
    GQ c1 = s.coeff(1);
    if (c1.is_zero()) throw std::domain_error("series_reverse: non-invertible leading coefficient");
    // Solve s(w(x)) = x by fixed-point iteration w <- (x - sum_{k>=2} c_k w^k) / c1.
    std::vector<GQ> cs(n);
    for (int k = 2; k < n; ++k) cs[k] = s.coeff(k);
    QSeries x = QSeries::monomial(1, GQ(1), n);
    QSeries w = x.scaled(c1.inverse());
    for (int iter = 1; iter < n; ++iter) {
        QSeries higher = w.compose_into(cs);
        w = (x - higher).scaled(c1.inverse());
    }
    return w;
}

}  // namespace inst
