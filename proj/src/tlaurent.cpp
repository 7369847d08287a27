#include "instanton/tlaurent.hpp"

#include <algorithm>
#include <sstream>

namespace inst {

namespace {

int clamp_floor(long f) { return f <= TLaurent::kExact ? TLaurent::kExact : int(f); }

}  // namespace

TLaurent::TLaurent(const RatFn& c)
{
    if (!c.is_zero()) terms_.emplace(0, c);
}

TLaurent TLaurent::monomial(int deg, const RatFn& c, int floor)
{
    TLaurent r;
    r.floor_ = floor;
    if (!c.is_zero() && deg >= floor) r.terms_.emplace(deg, c);
    return r;
}

TLaurent TLaurent::zero(int floor)
{
    TLaurent r;
    r.floor_ = floor;
    return r;
}

int TLaurent::top() const
{
    int t = terms_.empty() ? kExact : terms_.begin()->first;
    if (!is_exact()) t = std::max(t, floor_ - 1);
    return t;
}

bool TLaurent::is_zero() const { return terms_.empty(); }

bool operator==(const TLaurent& a, const TLaurent& b)
{
    if (a.floor_ != b.floor_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto x = a.terms_.begin(), y = b.terms_.begin(); x != a.terms_.end(); ++x, ++y)
        if (x->first != y->first || x->second != y->second) return false;
    return true;
}

RatFn TLaurent::coeff(int d) const
{
    if (d < floor_) {
        throw WindowError("TLaurent: t-degree " + std::to_string(d) + " below truncation floor " +
                          std::to_string(floor_));
    }
    auto it = terms_.find(d);
    return it == terms_.end() ? RatFn() : it->second;
}

TLaurent& TLaurent::operator+=(const TLaurent& o)
{
    floor_ = std::max(floor_, o.floor_);
    for (const auto& [d, c] : o.terms_) {
        auto it = terms_.find(d);
        if (it == terms_.end())
            terms_.emplace(d, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->first < floor_ ? terms_.erase(it) : std::next(it);
    return *this;
}

TLaurent TLaurent::operator-() const
{
    TLaurent r = *this;
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
}

TLaurent& TLaurent::operator-=(const TLaurent& o) { return *this += -o; }

TLaurent operator*(const TLaurent& a, const TLaurent& b)
{
    if ((a.is_exact() && a.terms_.empty()) || (b.is_exact() && b.terms_.empty())) return TLaurent();
    long fa = a.is_exact() ? long(TLaurent::kExact) * 2 : long(a.floor_) + b.top();
    long fb = b.is_exact() ? long(TLaurent::kExact) * 2 : long(b.floor_) + a.top();
    TLaurent r;
    r.floor_ = clamp_floor(std::max(fa, fb));
    std::map<int, std::vector<RatFn>> acc;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) {
            int d = da + db;
            if (d < r.floor_) continue;
            acc[d].push_back(ca * cb);
        }
    for (auto& [d, v] : acc) {
        RatFn s = RatFn::sum(std::move(v));
        if (!s.is_zero()) r.terms_.emplace(d, std::move(s));
    }
    return r;
}

TLaurent TLaurent::scaled(const RatFn& c) const
{
    if (c.is_zero()) return zero(floor_);
    TLaurent r = *this;
    for (auto& [d, x] : r.terms_) x *= c;
    return r;
}

TLaurent TLaurent::truncated(int floor) const
{
    if (floor < floor_) throw WindowError("TLaurent::truncated: requested floor below known window");
    TLaurent r;
    r.floor_ = floor;
    for (const auto& [d, c] : terms_)
        if (d >= floor) r.terms_.emplace(d, c);
    return r;
}

TLaurent TLaurent::inverse(int floor) const
{
    if (terms_.empty()) throw std::domain_error("TLaurent::inverse: zero series");
    int m = terms_.begin()->first;
    const RatFn& lead = terms_.begin()->second;
    RatFn linv = lead.inverse();
    // self = lead t^m (1 + u), u = sum_{j>=1} u_j t^-j; need 1/(1+u) to degree floor+m.
    int depth = m - floor;  // number of negative powers needed beyond t^-m
    if (!is_exact() && floor_ > m - depth) throw WindowError("TLaurent::inverse: insufficient input window");
    std::vector<RatFn> u(depth + 1);
    for (const auto& [d, c] : terms_)
        if (d < m && m - d <= depth) u[m - d] = c * linv;
    std::vector<RatFn> v(depth + 1);  // 1/(1+u) = sum v_k t^-k
    v[0] = RatFn(1);
    for (int k = 1; k <= depth; ++k) {
        std::vector<RatFn> parts;
        for (int j = 1; j <= k; ++j)
            if (!u[j].is_zero() && !v[k - j].is_zero()) parts.push_back(u[j] * v[k - j]);
        v[k] = -RatFn::sum(std::move(parts));
    }
    TLaurent r;
    r.floor_ = floor;
    for (int k = 0; k <= depth; ++k)
        if (!v[k].is_zero()) r.terms_.emplace(-m - k, v[k] * linv);
    return r;
}

TLaurent TLaurent::map_coeffs(const std::function<RatFn(const RatFn&)>& f) const
{
    TLaurent r;
    r.floor_ = floor_;
    for (const auto& [d, c] : terms_) {
        RatFn x = f(c);
        if (!x.is_zero()) r.terms_.emplace(d, std::move(x));
    }
    return r;
}

std::string TLaurent::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*t^" << d;
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(t^" << floor_ - 1 << ")";
    return os.str();
}

TLaurent expand_at_infinity(const RatFn& f, int floor)
{
    if (f.is_zero()) return TLaurent::zero(floor);
    // Split the denominator into t-free and t-dependent parts.
    std::vector<MPoly> coeff_den;
    std::vector<std::pair<MPoly, int>> t_atoms;
    for (const auto& [L, k] : f.atoms()) {
        if (L.degree(T) > 0)
            t_atoms.push_back({L, k});
        else
            for (int r = 0; r < k; ++r) coeff_den.push_back(L);
    }
    std::optional<MPoly> t_rest;
    if (!f.rest().is_constant()) {
        if (f.rest().degree(T) > 0)
            t_rest = f.rest();
        else
            coeff_den.push_back(f.rest());
    }
    const MPoly& num = f.num();
    int num_top = num.degree(T);
    int total_top = num_top;
    for (const auto& [L, k] : t_atoms) total_top -= k;
    int rest_deg = t_rest ? t_rest->degree(T) : 0;
    total_top -= rest_deg;
    // Work at least down to the leading degree so every factor window is nonempty.
    const int requested = floor;
    floor = std::min(floor, total_top);

    // numerator as exact Laurent polynomial
    TLaurent result;
    {
        auto cs = num.coeffs_in(T);
        TLaurent n;
        for (int k = 0; k < int(cs.size()); ++k)
            if (!cs[k].is_zero()) n += TLaurent::monomial(k, RatFn(cs[k]));
        result = n;
    }
    for (const auto& [L, k] : t_atoms) {
        // L = t + b; 1/(t+b)^k = sum_j binom(-k, j) b^j t^(-k-j)
        int own_floor = floor - (total_top + k);
        MPoly b = L - MPoly::var(T);
        TLaurent s = TLaurent::zero(own_floor);
        MPoly bj(1);
        mpz_class binom = 1;  // binom(-k, j)
        for (int j = 0; -k - j >= own_floor; ++j) {
            if (j > 0) {
                binom = binom * (-k - j + 1) / j;
                bj *= b;
            }
            s += TLaurent::monomial(-k - j, RatFn(bj * GQ(mpq_class(binom))), own_floor);
            if (bj.is_zero()) break;
        }
        result *= s;
    }
    if (t_rest) {
        int own_floor = floor - (total_top + rest_deg);
        auto cs = t_rest->coeffs_in(T);
        TLaurent r;
        for (int k = 0; k < int(cs.size()); ++k)
            if (!cs[k].is_zero()) r += TLaurent::monomial(k, RatFn(cs[k]));
        result *= r.inverse(own_floor);
    }
    RatFn cden = RatFn::from_factors(MPoly(1), coeff_den);
    result = result.scaled(cden);
    return result.is_exact() ? result : result.truncated(requested);
}

}  // namespace inst
