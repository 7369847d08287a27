#include "instanton/modular.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace inst {

namespace {

GQ rat(long p, long q) { return GQ(mpq_class(p, q)); }

QSeries from_map(const std::map<int, GQ>& m, int lo, int ceil)
{
    std::vector<GQ> v(std::max(ceil - lo, 0));
    for (const auto& [e, c] : m)
        if (e >= lo && e < ceil) v[e - lo] += c;
    return QSeries(lo, ceil, std::move(v));
}

// Composition f(w) = sum c_k w^k with w a weight-0 series of positive valuation.
QSeries compose(const QSeries& w, const std::vector<GQ>& c) { return w.compose_into(c); }

std::string exponent_text(int e8) { return std::to_string(e8) + "/8"; }

}  // namespace

QSeries theta_series(ThetaKind kind, int ceil)
{
    if (ceil > 4 * 64 * 64) throw std::out_of_range("theta_series: ceiling too large");
    std::map<int, GQ> m;
    for (int n = -64; n <= 64; ++n) {
        int e8 = 0;
        GQ c(1);
        switch (kind) {
        case ThetaKind::T00: e8 = 4 * n * n; break;
        case ThetaKind::T01:
            e8 = 4 * n * n;
            c = GQ(n % 2 ? -1 : 1);
            break;
        case ThetaKind::T10: e8 = (2 * n + 1) * (2 * n + 1); break;
        }
        if (e8 < ceil) m[e8] += c;
    }
    return from_map(m, 0, ceil);
}

QSeries e2_series(int ceil)
{
    std::map<int, GQ> m;
    m[0] = GQ(1);
    for (int n = 1; 8 * n < ceil; ++n) {
        long s = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) s += d;
        m[8 * n] = GQ(-24 * s);
    }
    return from_map(m, 0, ceil);
}

const SWSeries& sw_series(int ceil)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SWSeries>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ceil);
    if (it != cache.end()) return *it->second;
    auto s = std::make_unique<SWSeries>();
    s->ceil = ceil;
    s->theta00 = theta_series(ThetaKind::T00, ceil);
    s->theta01 = theta_series(ThetaKind::T01, ceil);
    s->theta10 = theta_series(ThetaKind::T10, ceil);
    s->e2 = e2_series(ceil);
    GQ i = GQ::imag_unit();
    QSeries t00_4 = s->theta00.pow(4), t10_4 = s->theta10.pow(4);
    QSeries prod = s->theta00 * s->theta10;
    QSeries num_u = (t00_4 + t10_4.truncated(t00_4.ceil()));
    QSeries inv_prod = prod.inverse();
    QSeries inv_prod2 = inv_prod * inv_prod;
    s->u = (-(num_u * inv_prod2)).with_weight(2);
    s->duda = inv_prod.scaled(GQ(2) * i).with_weight(1);
    QSeries e2x2 = s->e2.scaled(GQ(2));
    int c = std::min(e2x2.ceil(), num_u.ceil());
    QSeries num_a = e2x2.truncated(c) + num_u.truncated(c);
    s->a = (num_a * inv_prod).scaled(i * rat(1, 3)).with_weight(1);
    QSeries d2 = s->duda * s->duda;
    QSeries left = (d2 * s->e2.with_weight(0)).scaled(rat(1, 24));
    QSeries right = s->u.scaled(rat(1, 6));
    int ct = std::min(left.ceil(), right.ceil());
    s->T = left.truncated(ct) - right.truncated(ct);
    return *cache.emplace(ceil, std::move(s)).first->second;
}

QSeries w_of_q(int ceil)
{
    const SWSeries& s = sw_series(ceil);
    return s.a.inverse().with_weight(0);
}

QSeries q_of_a(int ceil)
{
    QSeries w = w_of_q(ceil);
    GQ lead = w.coeff(1);
    if (lead != GQ(mpq_class(0), mpq_class(-2))) {
        throw std::logic_error("q_of_a: unexpected leading coefficient " + lead.str());
    }
    return series_reverse(w);
}

namespace {

// Evaluates sum_n c_n w^{4n} at w = w(q), exact through w^{4 nmax}.
QSeries instanton_sum(const std::vector<GQ>& c, int ceil)
{
    int nmax = int(c.size()) - 1;
    QSeries w = w_of_q(ceil);
    std::vector<GQ> coeffs(4 * nmax + 1);
    for (int n = 0; n <= nmax; ++n) coeffs[4 * n] = c[n];
    QSeries s = compose(w, coeffs);
    int known = 4 * (nmax + 1);  // first omitted power of w, in eighths
    return s.truncated(std::min(known, s.ceil()));
}

ModularReport compare_series(const QSeries& lhs, const QSeries& rhs, const char* what)
{
    ModularReport r;
    int ceil = std::min(lhs.ceil(), rhs.ceil());
    int lo = std::min(lhs.valuation(), rhs.valuation());
    for (int e = lo; e < ceil; ++e) {
        if (lhs.coeff(e) != rhs.coeff(e)) {
            r.ok = false;
            r.detail = std::string(what) + ": mismatch at q^" + exponent_text(e) + ": " + lhs.coeff(e).str() +
                       " vs " + rhs.coeff(e).str();
            r.compared_to = e;
            return r;
        }
    }
    r.compared_to = ceil - 1;
    r.detail = std::string(what) + ": equal from q^" + exponent_text(lo) + " through q^" + exponent_text(ceil - 1);
    return r;
}

ModularReport constant_ratio(const QSeries& ratio, const char* what)
{
    ModularReport r;
    r.constant = ratio.coeff(0);
    int v = ratio.valuation();
    if (v < 0) {
        r.ok = false;
        r.detail = std::string(what) + ": ratio has a pole at q^" + exponent_text(v);
        return r;
    }
    for (int e = 1; e < ratio.ceil(); ++e) {
        if (!ratio.coeff(e).is_zero()) {
            r.ok = false;
            r.detail = std::string(what) + ": ratio not constant, q^" + exponent_text(e) + " coefficient " +
                       ratio.coeff(e).str();
            r.compared_to = e;
            return r;
        }
    }
    r.compared_to = ratio.ceil() - 1;
    r.detail = std::string(what) + ": ratio constant " + r.constant.str() + " through q^" + exponent_text(ratio.ceil() - 1);
    return r;
}

int default_ceil(const PrepotentialParts& p) { return 4 * (int(p.f0.size()) + 1) + 16; }

}  // namespace

ModularReport contact_check_u(const PrepotentialParts& p)
{
    int ceil = default_ceil(p);
    const SWSeries& s = sw_series(ceil);
    QSeries a_over = s.a.with_weight(0);
    QSeries a2 = a_over * a_over;
    // dF0/dlogLambda = -4a^2 + sum 4n f_n Lambda^{4n} a^{2-4n} = a^2 (-4 + sum 4n f_n w^{4n}).
    std::vector<GQ> c(p.f0.size());
    c[0] = GQ(-4);
    for (size_t n = 1; n < p.f0.size(); ++n) c[n] = p.f0[n] * GQ(long(4 * n));
    QSeries lhs = a2 * instanton_sum(c, ceil);
    QSeries rhs = s.u.with_weight(0).scaled(GQ(-4));
    return compare_series(lhs, rhs, "dF0/dlogLambda vs -4u");
}

ModularReport contact_check_T(const PrepotentialParts& p)
{
    int ceil = default_ceil(p);
    const SWSeries& s = sw_series(ceil);
    QSeries a_over = s.a.with_weight(0);
    QSeries a2 = a_over * a_over;
    // (1/32) d^2F0/dlogLambda^2 = a^2 sum (16 n^2 / 32) f_n w^{4n}.
    std::vector<GQ> c(p.f0.size());
    for (size_t n = 1; n < p.f0.size(); ++n) c[n] = p.f0[n] * GQ(mpq_class(long(n * n), 2));
    QSeries lhs = a2 * instanton_sum(c, ceil);
    QSeries rhs = s.T.with_weight(0);
    return compare_series(lhs, rhs, "(1/32) d2F0/dlogLambda2 vs T");
}

ModularReport ab_check_A(const PrepotentialParts& p)
{
    int ceil = default_ceil(p);
    const SWSeries& s = sw_series(ceil);
    // exp(2A^pert) = exp(2 log(2a/Lambda)/2 + Pi/2) = 2i a/Lambda.
    std::vector<GQ> c(p.a.size());
    for (size_t n = 1; n < p.a.size(); ++n) c[n] = p.a[n] * GQ(2);
    QSeries e = instanton_sum(c, ceil).exp();
    GQ i = GQ::imag_unit();
    QSeries lhs = (s.a.with_weight(0) * e).scaled(GQ(2) * i);
    QSeries rhs = s.duda.with_weight(0).scaled(i);
    return constant_ratio(lhs * rhs.inverse(), "exp(2A) Lambda/(i du/da)");
}

ModularReport ab_check_BA(const PrepotentialParts& p)
{
    int ceil = default_ceil(p);
    const SWSeries& s = sw_series(ceil);
    // A^pert = B^pert, so exp(2B - 2A) is purely instantonic.
    std::vector<GQ> c(p.a.size());
    for (size_t n = 1; n < p.a.size(); ++n) c[n] = (p.b[n] - p.a[n]) * GQ(2);
    QSeries lhs = instanton_sum(c, ceil).exp();
    QSeries th2 = s.theta01 * s.theta01;
    return constant_ratio(lhs * th2.inverse(), "exp(2B-2A)/theta01^2");
}

MultiSeries<GQ> wallcross_modular(const ModularWallInput& in, int z_order, int x_order, int lambda_order)
{
    MultiSeries<GQ> out({"Lambda", "z", "x"}, {lambda_order, z_order, x_order});
    GQ i = GQ::imag_unit();
    // Valuations (eighths): u -2, du/da -1, T >= -2.
    int need = -in.xi2;  // shift of q^{-xi^2/8}
    int worst = need - (2 * in.chiO + 1) - z_order * 2 - x_order * 2;
    int ceil = std::max(16, 16 - worst);
    for (;;) {
        const SWSeries& s = sw_series(ceil);
        QSeries duda = s.duda.with_weight(0), u = s.u.with_weight(0), T = s.T.with_weight(0);
        QSeries base = duda.scaled(i).pow(2 * in.chiO + 1);
        int pw = in.sigma + 8;
        if (pw >= 0) base = base * s.theta01.pow(pw);
        else base = base * s.theta01.inverse().pow(-pw);
        base = base.shifted(-in.xi2);
        // C_{n,m}: z^n x^m coefficient of exp(duda <alpha xi>/2 z + T <alpha^2> z^2 - u x).
        QSeries zlin = duda.scaled(in.alpha_xi * rat(1, 2));
        QSeries zquad = T.scaled(in.alpha2);
        bool short_window = false;
        std::map<std::pair<int, int>, GQ> vals;
        for (int m = 0; m <= x_order && !short_window; ++m) {
            for (int n = 0; n <= z_order; ++n) {
                int lam = n + 2 * m + 1 - in.chiO;
                if (lam > lambda_order) continue;
                // sum over j + 2k = n of zlin^j/j! zquad^k/k!, times (-u)^m/m!
                QSeries acc;
                bool have = false;
                for (int k = 0; 2 * k <= n; ++k) {
                    int j = n - 2 * k;
                    mpz_class jf = 1, kf = 1, mf = 1;
                    for (int r = 2; r <= j; ++r) jf *= r;
                    for (int r = 2; r <= k; ++r) kf *= r;
                    for (int r = 2; r <= m; ++r) mf *= r;
                    if ((j > 0 && in.alpha_xi.is_zero()) || (k > 0 && in.alpha2.is_zero())) continue;
                    QSeries term = base;
                    if (j > 0) term = term * zlin.pow(j);
                    if (k > 0) term = term * zquad.pow(k);
                    if (m > 0) term = term * u.scaled(GQ(-1)).pow(m);
                    term = term.scaled(GQ(mpq_class(mpz_class(1), jf * kf * mf)));
                    if (!have) {
                        acc = term;
                        have = true;
                    } else {
                        int c = std::min(acc.ceil(), term.ceil());
                        acc = acc.truncated(c) + term.truncated(c);
                    }
                }
                if (!have) {
                    vals[{n, m}] = GQ();
                    continue;
                }
                if (acc.ceil() <= 0) {
                    short_window = true;
                    break;
                }
                GQ val = acc.coeff(0);
                // i^{xiK - 1}
                int e = ((in.xiK - 1) % 4 + 4) % 4;
                GQ ipow(1);
                for (int r = 0; r < e; ++r) ipow *= i;
                vals[{n, m}] = val * ipow;
            }
        }
        if (short_window) {
            ceil += 16;
            continue;
        }
        for (const auto& [k, v] : vals) out.set({k.first + 2 * k.second + 1 - in.chiO, k.first, k.second}, v);
        return out;
    }
}

}  // namespace inst
