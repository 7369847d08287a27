#include "instanton/nekrasov.hpp"

#include "instanton/parallel.hpp"

#include <map>
#include <mutex>

namespace inst {

namespace {

MPoly e1v() { return MPoly::var(E1); }
MPoly e2v() { return MPoly::var(E2); }
MPoly av() { return MPoly::var(A); }

GQ rat(long p, long q) { return GQ(mpq_class(p, q)); }

mpz_class factorial(int n)
{
    mpz_class r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// exp(L) through total degree d for a homogeneous linear L.
MPoly exp_trunc(const MPoly& L, int d)
{
    MPoly r(1), p(1);
    for (int k = 1; k <= d; ++k) {
        p = p * L * GQ(mpq_class(1, k));
        r += p;
    }
    return r;
}

// (1 - e^{-v}) / v through degree d.
MPoly f_trunc(const MPoly& v, int d)
{
    MPoly r, p(1);
    for (int k = 0; k <= d; ++k) {
        r += p * GQ(mpq_class(k % 2 ? -1 : 1, factorial(k + 1)));
        p = p * v;
    }
    return r;
}

MPoly truncate_degree(const MPoly& p, int d)
{
    std::vector<Term> keep;
    for (const auto& t : p.terms())
        if (mono::degree(t.m) <= d) keep.push_back(t);
    return MPoly::from_sorted(std::move(keep));
}

int eps_degree(Mono m) { return mono::exp(m, E1) + mono::exp(m, E2); }

// Splits p by eps-degree; entry k has eps-degree k.
std::vector<MPoly> eps_components(const MPoly& p)
{
    std::vector<std::vector<Term>> parts;
    for (const auto& t : p.terms()) {
        int k = eps_degree(t.m);
        if (int(parts.size()) <= k) parts.resize(k + 1);
        parts[k].push_back(t);
    }
    std::vector<MPoly> out;
    for (auto& v : parts) out.push_back(MPoly::from_sorted(std::move(v)));
    return out;
}

}  // namespace

std::vector<LinearFactor> euler_factor_terms(const DiagramPair& y, int alpha, int beta)
{
    const YoungDiagram& ya = y[alpha];
    const YoungDiagram& yb = y[beta];
    int ca = (beta == 2 ? 1 : -1) - (alpha == 2 ? 1 : -1);  // a_beta - a_alpha in units of a
    std::vector<LinearFactor> out;
    for (auto [i, j] : ya.cells()) out.push_back({-yb.leg(i, j), ya.arm(i, j) + 1, ca});
    for (auto [i, j] : yb.cells()) out.push_back({ya.leg(i, j) + 1, -yb.arm(i, j), ca});
    return out;
}

MPoly euler_factor(const DiagramPair& y, int alpha, int beta)
{
    MPoly r(1);
    for (const auto& f : euler_factor_terms(y, alpha, beta)) r *= specialize(f, {});
    return r;
}

const std::vector<LinearFactor>& tangent_factors(const DiagramPair& y)
{
    static std::mutex mu;
    static std::map<DiagramPair, std::vector<LinearFactor>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(y);
    if (it != cache.end()) return it->second;
    std::vector<LinearFactor> all;
    for (int al = 1; al <= 2; ++al)
        for (int be = 1; be <= 2; ++be) {
            auto f = euler_factor_terms(y, al, be);
            all.insert(all.end(), f.begin(), f.end());
        }
    return cache.emplace(y, std::move(all)).first->second;
}

bool Specialization::is_default() const { return w1 == MPoly::var(E1) && w2 == MPoly::var(E2) && a == MPoly::var(A); }

MPoly specialize(const LinearFactor& f, const Specialization& s)
{
    return s.w1 * GQ(long(f.e1)) + s.w2 * GQ(long(f.e2)) + s.a * GQ(long(f.ca));
}

RatFn pair_weight(const DiagramPair& y, const Specialization& s)
{
    std::vector<MPoly> den;
    for (const auto& f : tangent_factors(y)) {
        MPoly L = specialize(f, s);
        if (L.is_zero()) {
            throw std::domain_error("zinst: Euler factor of " + y.str() + " vanishes identically after substitution");
        }
        den.push_back(std::move(L));
    }
    return RatFn::from_factors(MPoly(1), den);
}

std::vector<RatFn> zinst_coeffs(int n_max, const Specialization& s)
{
    std::vector<RatFn> out;
    for (int n = 0; n <= n_max; ++n) {
        auto pairs = pairs_of_total(n);
        auto terms = parallel_map<RatFn>(int(pairs.size()), [&](int k) { return pair_weight(pairs[k], s); });
        out.push_back(RatFn::sum(std::move(terms)));
    }
    return out;
}

RatFn e_exponent(const DiagramPair& y, int rho)
{
    if (rho < 1) throw std::invalid_argument("e_exponent: rho must be positive");
    RatFn total;
    int d = rho - 1;
    for (int al = 1; al <= 2; ++al) {
        MPoly aal = av() * GQ(long(al == 2 ? 1 : -1));
        // e^{a_alpha} / (e1 e2): degree rho-1 part is a_alpha^{rho+1} / ((rho+1)! e1 e2).
        total += RatFn::fraction(aal.pow(rho + 1) * GQ(mpq_class(1, factorial(rho + 1))), e1v() * e2v());
        MPoly sum;
        for (auto [i, j] : y[al].cells()) {
            MPoly L = e1v() * GQ(long(-(i - 1))) + e2v() * GQ(long(-(j - 1)));
            sum += exp_trunc(L, d);
        }
        if (sum.is_zero()) continue;
        MPoly prod = truncate_degree(exp_trunc(aal, d) * f_trunc(e1v(), d), d);
        prod = truncate_degree(prod * f_trunc(e2v(), d), d);
        prod = (prod * sum).homogeneous_part(d);
        total -= RatFn(prod);
    }
    return total;
}

MultiSeries<RatFn> e_factor(const DiagramPair& y, int R, int tau_order, const Specialization& s)
{
    std::vector<std::string> names;
    for (int r = 1; r <= R; ++r) names.push_back("tau" + std::to_string(r));
    std::vector<int> orders(R, tau_order);
    MultiSeries<RatFn> lin(names, orders);
    for (int r = 1; r <= R; ++r) {
        std::vector<int> k(R, 0);
        k[r - 1] = 1;
        RatFn c = e_exponent(y, r);
        lin.set(k, s.is_default() ? c : c.substitute(s.subs()));
    }
    return lin.exp();
}

MultiSeries<RatFn> zinst(int N, const Specialization& s, int R, int tau_order)
{
    std::vector<std::string> names{"Lambda"};
    std::vector<int> orders{N};
    for (int r = 1; r <= R; ++r) {
        names.push_back("tau" + std::to_string(r));
        orders.push_back(tau_order);
    }
    MultiSeries<RatFn> z(names, orders);
    for (int n = 0; 4 * n <= N; ++n) {
        auto pairs = pairs_of_total(n);
        using Part = std::vector<std::pair<std::vector<int>, RatFn>>;
        auto parts = parallel_map<Part>(int(pairs.size()), [&](int k) {
            RatFn w = pair_weight(pairs[k], s);
            Part out;
            if (R == 0) {
                out.push_back({{4 * n}, w});
                return out;
            }
            auto e = e_factor(pairs[k], R, tau_order, s);
            for (const auto& [key, c] : e.terms()) {
                std::vector<int> kk{4 * n};
                kk.insert(kk.end(), key.begin(), key.end());
                out.push_back({kk, c * w});
            }
            return out;
        });
        std::map<std::vector<int>, std::vector<RatFn>> grouped;
        for (auto& p : parts)
            for (auto& [k, c] : p) grouped[k].push_back(std::move(c));
        for (auto& [k, v] : grouped) z.add(k, RatFn::sum(std::move(v)));
    }
    return z;
}

MultiSeries<RatFn> finst(int N, const Specialization& s, int R, int tau_order)
{
    return zinst(N, s, R, tau_order).log();
}

std::vector<RatFn> c_coeffs(int N)
{
    // 1/((e^{e1 t}-1)(e^{e2 t}-1)) = 1/(e1 e2 t^2) * 1/(g(e1 t) g(e2 t)), g(y) = (e^y - 1)/y.
    std::vector<MPoly> G(N + 1);
    for (int n = 0; n <= N; ++n) {
        MPoly s;
        for (int i = 0; i <= n; ++i) {
            GQ c(mpq_class(1, factorial(i + 1) * factorial(n - i + 1)));
            s += e1v().pow(i) * e2v().pow(n - i) * c;
        }
        G[n] = s;
    }
    std::vector<MPoly> h(N + 1);
    h[0] = MPoly(1);
    for (int n = 1; n <= N; ++n) {
        MPoly s;
        for (int k = 1; k <= n; ++k) s += G[k] * h[n - k];
        h[n] = -s;
    }
    std::vector<RatFn> c;
    for (int n = 0; n <= N; ++n) c.push_back(RatFn::fraction(h[n] * GQ(mpq_class(factorial(n))), e1v() * e2v()));
    return c;
}

LogElem gamma_expand(const PertArg& x, const Specialization& w, int floor, int eps_order)
{
    RatFn ee = RatFn(w.w1 * w.w2);
    RatFn s1 = RatFn(w.w1 + w.w2);
    RatFn todd = RatFn(w.w1 * w.w1 + w.w2 * w.w2 + w.w1 * w.w2 * GQ(3));
    int nmax = x.symbolic_a ? eps_order + 2 : 2 - floor;
    auto cn = c_coeffs(std::max(nmax, 3));
    std::array<std::optional<MPoly>, kNumVars> wsub{w.w1, w.w2, std::nullopt, std::nullopt};

    // x as an exact TLaurent in t.
    TLaurent X;
    int expand_floor = floor - 2;
    if (x.symbolic_a) {
        X = TLaurent(RatFn(MPoly::var(A) * GQ(long(2 * x.sign))));
    } else {
        X = expand_at_infinity(RatFn((MPoly::var(T) - x.c) * GQ(long(x.sign))), expand_floor);
    }
    TLaurent X2 = X * X;
    // A(x) multiplies log(x/Lambda); B(x) is the log-free remainder.
    TLaurent Acoef = X2.scaled(RatFn(rat(-1, 2)) / ee) - X.scaled(s1 / (ee * RatFn(2))) -
                     TLaurent(todd / (ee * RatFn(12)));
    TLaurent Bcoef = X2.scaled(RatFn(rat(3, 4)) / ee) + X.scaled(s1 / (ee * RatFn(2)));
    for (int n = 3; n <= nmax; ++n) {
        RatFn c = cn[n].substitute(wsub) / RatFn(long(n) * (n - 1) * (n - 2));
        TLaurent xp;
        if (x.symbolic_a) {
            xp = TLaurent(RatFn::fraction(1, MPoly::var(A) * GQ(long(2 * x.sign))).pow(n - 2));
        } else {
            MPoly base = (MPoly::var(T) - x.c) * GQ(long(x.sign));
            xp = expand_at_infinity(RatFn::fraction(1, base.pow(n - 2)), floor);
        }
        Bcoef += xp.scaled(c);
    }
    // log(x/Lambda) = L + [sign < 0] Pi + ell, ell = log(1 - c/t) for shifted arguments.
    TLaurent ell;
    if (!x.symbolic_a && !x.c.is_zero()) {
        ell = TLaurent::zero(expand_floor);
        for (int k = 1; -k >= expand_floor; ++k)
            ell -= TLaurent::monomial(-k, RatFn(x.c.pow(k)) / RatFn(long(k)), expand_floor);
    }
    LogElem r = LogElem::term(0, 1, Acoef);
    if (x.sign < 0) r += LogElem::term(1, 0, Acoef);
    TLaurent rem = Bcoef;
    if (!x.symbolic_a && !x.c.is_zero()) rem += Acoef * ell;
    r += LogElem::term(0, 0, rem);
    return x.symbolic_a ? r : r.truncated(floor);
}

LogElem fpert_shifted(const Specialization& w, const MPoly& c, int floor)
{
    PertArg plus{false, 1, c}, minus{false, -1, c};
    return -(gamma_expand(plus, w, floor, 0) + gamma_expand(minus, w, floor, 0));
}

LogElem fpert_symbolic(int eps_order)
{
    PertArg plus{true, 1, {}}, minus{true, -1, {}};
    return -(gamma_expand(plus, {}, 0, eps_order) + gamma_expand(minus, {}, 0, eps_order));
}

RatFn fpert_dlog_lambda()
{
    MPoly ee = e1v() * e2v();
    return RatFn::fraction(av() * av() * GQ(-4), ee) -
           RatFn::fraction(e1v() * e1v() + e2v() * e2v() + ee * GQ(3), ee * GQ(6));
}

std::vector<RatFn> eps_taylor(const RatFn& f, int order)
{
    auto N = eps_components(f.num());
    auto D = eps_components(f.den());
    if (D.empty() || D[0].is_zero()) throw PoleError("eps_taylor: denominator vanishes at eps = 0 for " + f.str());
    auto at = [](const std::vector<MPoly>& v, int k) { return k < int(v.size()) ? v[k] : MPoly(); };
    RatFn d0inv = RatFn(D[0]).inverse();
    std::vector<RatFn> out;
    for (int k = 0; k <= order; ++k) {
        RatFn s = RatFn(at(N, k));
        for (int j = 1; j <= k; ++j) {
            MPoly dj = at(D, j);
            if (!dj.is_zero()) s -= out[k - j] * RatFn(dj);
        }
        out.push_back(s * d0inv);
    }
    return out;
}

namespace {

// Coefficient of the eps-monomial e1^i e2^j in a RatFn that is polynomial in eps.
RatFn eps_coefficient(const RatFn& f, int i, int j)
{
    const MPoly& num = f.num();
    std::vector<Term> keep;
    for (const auto& t : num.terms()) {
        if (mono::exp(t.m, E1) == i && mono::exp(t.m, E2) == j) {
            Mono m = mono::make(0, 0, mono::exp(t.m, A), mono::exp(t.m, T));
            keep.push_back({m, t.c});
        }
    }
    std::sort(keep.begin(), keep.end(), [](const Term& x, const Term& y) { return x.m > y.m; });
    MPoly p = MPoly::from_sorted(std::move(keep));
    return RatFn::fraction(p, f.den());
}

// c with f = c * a^d; throws unless f is a monomial in a.
GQ a_monomial_coeff(const RatFn& f, int d)
{
    RatFn g = f * (d >= 0 ? RatFn::fraction(1, av().pow(d)) : RatFn(av().pow(-d)));
    if (!g.is_constant()) throw std::logic_error("prepotential: coefficient is not a multiple of a^" + std::to_string(d));
    return g.to_constant();
}

LogElem pert_part(const LogElem& fp, int i, int j)
{
    LogElem r;
    for (const auto& [k, c] : fp.terms()) {
        RatFn v = c.coeff(0) * RatFn(e1v() * e2v());
        auto tay = eps_taylor(v, i + j);
        r += LogElem::term(k.first, k.second, TLaurent(eps_coefficient(tay[i + j], i, j)));
    }
    return r;
}

}  // namespace

PrepotentialParts prepotential_parts(int N)
{
    PrepotentialParts p;
    p.N = N;
    auto F = finst(N);
    RatFn ee(e1v() * e2v());
    for (int n = 0; 4 * n <= N; ++n) {
        RatFn g = F.coeff({4 * n}) * ee;
        auto tay = eps_taylor(g, 2);
        p.F0.push_back(tay[0]);
        p.H.push_back(eps_coefficient(tay[1], 1, 0));
        p.A.push_back(eps_coefficient(tay[2], 1, 1));
        p.B.push_back(eps_coefficient(tay[2], 2, 0) * RatFn(3));
        p.f0.push_back(a_monomial_coeff(p.F0.back(), 2 - 4 * n));
        p.h.push_back(a_monomial_coeff(p.H.back(), 1 - 4 * n));
        p.a.push_back(a_monomial_coeff(p.A.back(), -4 * n));
        p.b.push_back(a_monomial_coeff(p.B.back(), -4 * n));
    }
    LogElem fp = fpert_symbolic(2);
    p.pert_F0 = pert_part(fp, 0, 0);
    p.pert_H = pert_part(fp, 1, 0);
    p.pert_A = pert_part(fp, 1, 1);
    LogElem b = pert_part(fp, 2, 0);
    p.pert_B = b.scaled(TLaurent(RatFn(3)));
    return p;
}

CheckReport tau_shift_check(int N, int tau_order)
{
    CheckReport rep;
    auto lhs = finst(N, {}, 1, tau_order);
    auto f = finst(N);
    MultiSeries<RatFn> rhs(lhs.names(), lhs.orders());
    RatFn ee(e1v() * e2v());
    if (tau_order >= 1) rhs.add({0, 1}, RatFn::fraction(av() * av(), e1v() * e2v()));
    for (const auto& [k, c] : f.terms()) {
        int n = k[0] / 4;
        // Lambda^{4n} e^{-n tau}
        RatFn term = c;
        for (int j = 0; j <= tau_order; ++j) {
            rhs.add({k[0], j}, term);
            term = term * RatFn(GQ(long(-n))) / RatFn(long(j + 1));
        }
    }
    for (int l = 0; l <= N; ++l) {
        for (int j = 0; j <= tau_order; ++j) {
            if (lhs.coeff({l, j}) != rhs.coeff({l, j})) {
                rep.ok = false;
                rep.detail = "tau-shift identity failed at Lambda^" + std::to_string(l) + " tau1^" + std::to_string(j);
                return rep;
            }
        }
    }
    // Perturbative counterpart: F^pert(Lambda e^{-tau/4}) - F^pert(Lambda) = -(tau/4) dF^pert/dlogLambda,
    // and dF^pert/dlogLambda = -(coefficient of L) from the log-ring expansion.
    LogElem fp = fpert_symbolic(0);
    RatFn dlog = -fp.coeff(0, 1).coeff(0);
    if (dlog != fpert_dlog_lambda()) {
        rep.ok = false;
        rep.detail = "perturbative dF/dlogLambda mismatch: " + dlog.str();
        return rep;
    }
    // Full identity: F(tau) - F(Lambda e^{-tau/4}) = tau a^2/(e1 e2) + (tau/4) dF^pert/dlogLambda.
    RatFn shift = RatFn::fraction(av() * av(), e1v() * e2v()) + dlog * RatFn(rat(1, 4));
    RatFn expected = -RatFn::fraction(e1v() * e1v() + e2v() * e2v() + e1v() * e2v() * GQ(3), e1v() * e2v() * GQ(24));
    if (shift != expected) {
        rep.ok = false;
        rep.detail = "constant shift mismatch: " + shift.str();
        return rep;
    }
    rep.detail = "tau-shift identity holds through Lambda^" + std::to_string(N) + ", tau1^" + std::to_string(tau_order);
    return rep;
}

}  // namespace inst
