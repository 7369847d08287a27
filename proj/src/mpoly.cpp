#include "instanton/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace inst {

const char* var_name(int v)
{
    static const char* names[kNumVars] = {"e1", "e2", "a", "t"};
    return names[v];
}

namespace mono {

Mono make(int e1, int e2, int a, int t)
{
    int d = e1 + e2 + a + t;
    if (e1 < 0 || e2 < 0 || a < 0 || t < 0 || d > kMaxDeg) throw std::overflow_error("monomial exponent out of range");
    return Mono(e1) | (Mono(e2) << kBits) | (Mono(a) << (2 * kBits)) | (Mono(t) << (3 * kBits)) |
           (Mono(d) << kDegShift);
}

bool divides(Mono d, Mono m)
{
    for (int v = 0; v < kNumVars; ++v)
        if (exp(d, v) > exp(m, v)) return false;
    return true;
}

}  // namespace mono

MPoly::MPoly(long c)
{
    if (c != 0) terms_.push_back({0, GQ(c)});
}

MPoly::MPoly(const GQ& c)
{
    if (!c.is_zero()) terms_.push_back({0, c});
}

MPoly MPoly::var(int v)
{
    MPoly p;
    p.terms_.push_back({mono::var(v), GQ(1)});
    return p;
}

MPoly MPoly::monomial(Mono m, const GQ& c)
{
    MPoly p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

MPoly MPoly::linear(const std::array<GQ, 5>& c)
{
    MPoly p;
    for (int v = kNumVars - 1; v >= 0; --v)
        if (!c[v].is_zero()) p.terms_.push_back({mono::var(v), c[v]});
    if (!c[4].is_zero()) p.terms_.push_back({0, c[4]});
    return p;
}

MPoly MPoly::from_sorted(std::vector<Term> terms)
{
    MPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m == 0); }

GQ MPoly::constant_term() const
{
    if (!terms_.empty() && terms_.back().m == 0) return terms_.back().c;
    return GQ();
}

int MPoly::min_total_degree() const { return terms_.empty() ? -1 : mono::degree(terms_.back().m); }

int MPoly::degree(int v) const
{
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, mono::exp(t.m, v));
    return terms_.empty() ? -1 : d;
}

bool MPoly::is_homogeneous() const
{
    return terms_.empty() || mono::degree(terms_.front().m) == mono::degree(terms_.back().m);
}

static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].m > b[j].m)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].m > a[i].m) {
            out.push_back(b[j]);
            if (subtract) out.back().c = -out.back().c;
            ++j;
        } else {
            GQ c = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
            if (!c.is_zero()) out.push_back({a[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

MPoly& MPoly::operator*=(const GQ& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.c *= c;
    return *this;
}

MPoly MPoly::mul_mono(Mono m) const
{
    MPoly r = *this;
    for (auto& t : r.terms_) {
        if (mono::degree(t.m) + mono::degree(m) > mono::kMaxDeg) throw std::overflow_error("monomial degree overflow");
        t.m += m;
    }
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    if (a.terms_.empty() || b.terms_.empty()) return MPoly();
    const MPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const MPoly& big = a.terms_.size() <= b.terms_.size() ? b : a;
    if (small.total_degree() + big.total_degree() > mono::kMaxDeg) throw std::overflow_error("monomial degree overflow");
    // Shifting a sorted list by a monomial keeps it sorted, so the product is a
    // balanced merge of |small| sorted lists.
    std::vector<std::vector<Term>> lists;
    lists.reserve(small.terms_.size());
    for (const auto& s : small.terms_) {
        std::vector<Term> l;
        l.reserve(big.terms_.size());
        for (const auto& t : big.terms_) l.push_back({t.m + s.m, t.c * s.c});
        lists.push_back(std::move(l));
    }
    while (lists.size() > 1) {
        std::vector<std::vector<Term>> next;
        next.reserve((lists.size() + 1) / 2);
        for (size_t k = 0; k + 1 < lists.size(); k += 2) next.push_back(merge_terms(lists[k], lists[k + 1], false));
        if (lists.size() % 2) next.push_back(std::move(lists.back()));
        lists = std::move(next);
    }
    MPoly r;
    r.terms_ = std::move(lists.front());
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o)
{
    *this = *this * o;
    return *this;
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

MPoly MPoly::pow(int n) const
{
    if (n < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
    MPoly result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

MPoly MPoly::monic() const
{
    if (terms_.empty()) return *this;
    return *this * lead_coeff().inverse();
}

bool operator==(const MPoly& a, const MPoly& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].m != b.terms_[k].m || a.terms_[k].c != b.terms_[k].c) return false;
    return true;
}

bool poly_less(const MPoly& a, const MPoly& b)
{
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (size_t k = 0; k < x.size() && k < y.size(); ++k) {
        if (x[k].m != y[k].m) return x[k].m < y[k].m;
        int c = cmp(x[k].c, y[k].c);
        if (c != 0) return c < 0;
    }
    return x.size() < y.size();
}

MPoly MPoly::substitute(const std::array<std::optional<MPoly>, kNumVars>& subs) const
{
    std::array<std::vector<MPoly>, kNumVars> powers;
    for (int v = 0; v < kNumVars; ++v) {
        if (!subs[v]) continue;
        int d = degree(v);
        powers[v].push_back(MPoly(1));
        for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * *subs[v]);
    }
    // Group terms by their kept part to limit multiplications.
    MPoly result;
    std::vector<MPoly> pieces;
    for (const auto& t : terms_) {
        Mono kept = 0;
        MPoly factor(t.c);
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono::exp(t.m, v);
            if (e == 0) continue;
            if (subs[v])
                factor *= powers[v][e];
            else
                kept += (Mono(e) << (mono::kBits * v)) + (Mono(e) << mono::kDegShift);
        }
        pieces.push_back(kept ? factor.mul_mono(kept) : factor);
    }
    // balanced summation
    while (pieces.size() > 1) {
        std::vector<MPoly> next;
        for (size_t k = 0; k + 1 < pieces.size(); k += 2) next.push_back(pieces[k] + pieces[k + 1]);
        if (pieces.size() % 2) next.push_back(std::move(pieces.back()));
        pieces = std::move(next);
    }
    return pieces.empty() ? MPoly() : pieces.front();
}

MPoly MPoly::eval(int v, const GQ& value) const
{
    std::array<std::optional<MPoly>, kNumVars> subs;
    subs[v] = MPoly(value);
    return substitute(subs);
}

MPoly MPoly::set_zero(std::initializer_list<int> vars) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        bool keep = true;
        for (int v : vars)
            if (mono::exp(t.m, v) != 0) keep = false;
        if (keep) out.push_back(t);
    }
    return from_sorted(std::move(out));
}

std::vector<MPoly> MPoly::coeffs_in(int v) const
{
    int d = degree(v);
    std::vector<std::vector<Term>> parts(std::max(d + 1, 0));
    for (const auto& t : terms_) {
        int e = mono::exp(t.m, v);
        Mono m = t.m - (Mono(e) << (mono::kBits * v)) - (Mono(e) << mono::kDegShift);
        parts[e].push_back({m, t.c});
    }
    std::vector<MPoly> out;
    for (auto& p : parts) {
        std::sort(p.begin(), p.end(), [](const Term& x, const Term& y) { return x.m > y.m; });
        out.push_back(from_sorted(std::move(p)));
    }
    return out;
}

MPoly MPoly::from_coeffs_in(int v, const std::vector<MPoly>& coeffs)
{
    MPoly r;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        Mono shift = (Mono(k) << (mono::kBits * v)) + (Mono(k) << mono::kDegShift);
        r += coeffs[k].mul_mono(shift);
    }
    return r;
}

MPoly MPoly::derivative(int v) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int e = mono::exp(t.m, v);
        if (e == 0) continue;
        out.push_back({t.m - (Mono(1) << (mono::kBits * v)) - (Mono(1) << mono::kDegShift), t.c * GQ(e)});
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.m > y.m; });
    return from_sorted(std::move(out));
}

MPoly MPoly::homogeneous_part(int d) const
{
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (mono::degree(t.m) == d) out.push_back(t);
    return from_sorted(std::move(out));
}

std::string MPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string coef;
        bool neg = false;
        if (t.c.is_real()) {
            mpq_class c = t.c.re;
            if (sgn(c) < 0) {
                neg = true;
                c = -c;
            }
            coef = c.get_str();
        } else {
            coef = "(" + t.c.str() + ")";
        }
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        bool unit = coef == "1";
        if (t.m == 0) {
            os << coef;
            continue;
        }
        if (!unit) os << coef << "*";
        bool firstvar = true;
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono::exp(t.m, v);
            if (!e) continue;
            if (!firstvar) os << "*";
            firstvar = false;
            os << var_name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b)
{
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (a.is_zero()) return MPoly();
    if (b.is_constant()) return a * b.lead_coeff().inverse();
    if (a.total_degree() < b.total_degree()) return std::nullopt;
    const Mono lb = b.lead_mono();
    const GQ inv = b.lead_coeff().inverse();
    std::map<Mono, GQ, std::greater<Mono>> rem;
    for (const auto& t : a.terms()) rem.emplace(t.m, t.c);
    std::vector<Term> q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!mono::divides(lb, it->first)) return std::nullopt;
        Mono qm = it->first - lb;
        GQ qc = it->second * inv;
        rem.erase(it);
        for (size_t k = 1; k < b.terms().size(); ++k) {
            const Term& bt = b.terms()[k];
            Mono m = bt.m + qm;
            GQ c = bt.c * qc;
            auto [pos, inserted] = rem.emplace(m, -c);
            if (!inserted) {
                pos->second -= c;
                if (pos->second.is_zero()) rem.erase(pos);
            }
        }
        q.push_back({qm, std::move(qc)});
    }
    return MPoly::from_sorted(std::move(q));
}

namespace {

int main_var(const MPoly& a, const MPoly& b)
{
    for (int v = kNumVars - 1; v >= 0; --v)
        if (a.degree(v) > 0 || b.degree(v) > 0) return v;
    return -1;
}

MPoly content_in(const MPoly& p, int v)
{
    MPoly g;
    for (const auto& c : p.coeffs_in(v)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return MPoly(1);
    }
    return g;
}

MPoly primitive_in(const MPoly& p, int v)
{
    MPoly c = content_in(p, v);
    return *divide_exact(p, c);
}

MPoly prem(const MPoly& a, const MPoly& b, int v)
{
    int n = b.degree(v);
    auto bc = b.coeffs_in(v);
    const MPoly& lb = bc.back();
    MPoly r = a;
    while (!r.is_zero() && r.degree(v) >= n) {
        int d = r.degree(v);
        MPoly lr = r.coeffs_in(v).back();
        Mono shift = (Mono(d - n) << (mono::kBits * v)) + (Mono(d - n) << mono::kDegShift);
        r = lb * r - (lr * b).mul_mono(shift);
    }
    return r;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b)
{
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    int v = main_var(a, b);
    if (a.degree(v) <= 0) return gcd(a, content_in(b, v));
    if (b.degree(v) <= 0) return gcd(content_in(a, v), b);
    MPoly c = gcd(content_in(a, v), content_in(b, v));
    MPoly p = primitive_in(a, v), q = primitive_in(b, v);
    if (p.degree(v) < q.degree(v)) std::swap(p, q);
    while (!q.is_zero() && q.degree(v) > 0) {
        MPoly r = prem(p, q, v);
        p = std::move(q);
        q = r.is_zero() ? r : primitive_in(r, v);
    }
    MPoly g = q.is_zero() ? p : MPoly(1);
    return (c * g).monic();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

struct ModpField {
    u64 p = 0;
    u64 i = 0;
    ModpField()
    {
        mpz_class c = mpz_class(1) << 61;
        while (true) {
            mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
            if (mpz_fdiv_ui(c.get_mpz_t(), 4) == 1) break;
        }
        p = c.get_ui();
        for (u64 g = 2;; ++g) {
            u64 cand = powmod(g, (p - 1) / 4, p);
            if (mulmod(cand, cand, p) == p - 1) {
                i = cand;
                break;
            }
        }
    }
};

const ModpField& field()
{
    static const ModpField f;
    return f;
}

std::optional<u64> rat_mod(const mpq_class& q)
{
    u64 p = field().p;
    u64 n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (d == 0) return std::nullopt;
    return mulmod(n, powmod(d, p - 2, p), p);
}

}  // namespace

std::uint64_t modp_prime() { return field().p; }
std::uint64_t modp_sqrt_minus_one() { return field().i; }

std::optional<std::uint64_t> eval_mod_p(const MPoly& poly, const std::array<std::uint64_t, kNumVars>& point)
{
    const u64 p = field().p;
    std::array<std::vector<u64>, kNumVars> pw;
    for (int v = 0; v < kNumVars; ++v) {
        int d = std::max(poly.degree(v), 0);
        pw[v].resize(d + 1);
        pw[v][0] = 1;
        for (int k = 1; k <= d; ++k) pw[v][k] = mulmod(pw[v][k - 1], point[v] % p, p);
    }
    u64 acc = 0;
    for (const auto& t : poly.terms()) {
        auto re = rat_mod(t.c.re);
        if (!re) return std::nullopt;
        u64 c = *re;
        if (!t.c.is_real()) {
            auto im = rat_mod(t.c.im);
            if (!im) return std::nullopt;
            c = (c + mulmod(*im, field().i, p)) % p;
        }
        for (int v = 0; v < kNumVars; ++v) c = mulmod(c, pw[v][mono::exp(t.m, v)], p);
        acc = (acc + c) % p;
    }
    return acc;
}

}  // namespace inst
