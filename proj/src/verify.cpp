#include "instanton/verify.hpp"

#include "instanton/p2.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace inst {

namespace {

MPoly e1() { return MPoly::var(E1); }
MPoly e2() { return MPoly::var(E2); }
MPoly av() { return MPoly::var(A); }

struct Fail {
    std::string what;
};

void require(bool cond, const std::string& what)
{
    if (!cond) throw Fail{what};
}

CheckResult timed(const std::string& name, const std::function<std::string()>& body)
{
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.detail = body();
    } catch (const Fail& f) {
        r.ok = false;
        r.detail = f.what;
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string check_lambda4()
{
    RatFn got = zinst_coeffs(1)[1];
    MPoly s = e1() + e2();
    RatFn want = RatFn::fraction(MPoly(2), e1() * e2() * (s * s - 4 * av() * av()));
    require(got == want, "Lambda^4 coefficient is " + got.str());
    return "Z_1 = " + got.str();
}

std::string check_grading()
{
    auto z = zinst(16);
    std::array<std::optional<MPoly>, kNumVars> swap{e2(), e1(), std::nullopt, std::nullopt};
    std::array<std::optional<MPoly>, kNumVars> neg{std::nullopt, std::nullopt, -av(), std::nullopt};
    for (const auto& [k, c] : z.terms()) require(k[0] % 4 == 0, "nonzero Lambda^" + std::to_string(k[0]));
    for (int n = 1; 4 * n <= 16; ++n) {
        RatFn c = z.coeff({4 * n});
        std::string at = "Lambda^" + std::to_string(4 * n);
        require(!c.is_zero(), at + " vanishes");
        require(c.substitute(swap) == c, at + " not symmetric in eps1, eps2");
        require(c.substitute(neg) == c, at + " not even in a");
        require(c.homogeneous_degree() == std::optional<int>(-4 * n), at + " has wrong degree");
    }
    return "Lambda^4..Lambda^16 graded, symmetric, homogeneous";
}

std::string check_regularity()
{
    auto f = finst(16);
    std::ostringstream os;
    for (int n = 1; 4 * n <= 16; ++n) {
        RatFn g = f.coeff({4 * n}) * RatFn(e1() * e2());
        MPoly d0 = g.den().set_zero({E1, E2});
        require(!d0.is_zero(), "eps1 eps2 F^inst at Lambda^" + std::to_string(4 * n) + " has a pole at eps = 0");
        os << (n > 1 ? ", " : "") << "Lambda^" << 4 * n << " den(0) = " << d0.str();
    }
    return os.str();
}

std::string check_tau_shift()
{
    CheckReport r = tau_shift_check(8, 2);
    require(r.ok, r.detail);
    return "exact through Lambda^8, tau1^2";
}

std::string check_h_instanton()
{
    auto p = prepotential_parts(12);
    for (size_t n = 0; n < p.H.size(); ++n) require(p.H[n].is_zero(), "H^inst at Lambda^" + std::to_string(4 * n) + " = " + p.H[n].str());
    require(p.pert_H.coeff(1, 0).coeff(0) == RatFn(-av()), "perturbative H is not -Pi a");
    return "H^inst = 0 through Lambda^12; H = -Pi*a";
}

std::string check_ab()
{
    auto p = prepotential_parts(8);
    ModularReport a = ab_check_A(p), b = ab_check_BA(p);
    require(a.ok, "exp(2A) check: " + a.detail);
    require(b.ok, "exp(2B-2A) check: " + b.detail);
    require(a.compared_to >= 8 && b.compared_to >= 8, "compared window shorter than q^1");
    require(a.constant == GQ(1), "exp(2A) Lambda/(i du/da) constant is " + a.constant.str());
    require(b.constant == GQ(1), "exp(2B-2A)/theta01^2 constant is " + b.constant.str());
    return "constants " + a.constant.str() + ", " + b.constant.str() + " through q^" + std::to_string(a.compared_to) +
           "/8, q^" + std::to_string(b.compared_to) + "/8";
}

std::string check_contact()
{
    auto p = prepotential_parts(8);
    ModularReport u = contact_check_u(p), t = contact_check_T(p);
    require(u.ok, "u: " + u.detail);
    require(t.ok, "T: " + t.detail);
    // u starts at q^{-1/4}, T at q^{1/4}: 3/4 beyond leading order
    require(u.compared_to >= 4 && t.compared_to >= 8, "compared window too short");
    return "u through q^" + std::to_string(u.compared_to) + "/8, T through q^" + std::to_string(t.compared_to) + "/8";
}

std::string check_pert()
{
    int n = 0;
    for (auto [name, classes] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"P2", {"H", "2H", "-H"}}, {"F1", {"H-2E", "H-4E", "3H-4E"}}}) {
        ToricSurface s = builtin_surface(name);
        for (const auto& c : classes) {
            PertReport r = pert_identity_check(s, s.combination(c), -6);
            require(r.ok, name + " " + c + ": " + r.detail);
            require(r.pi_multiple % 2 == 0, name + " " + c + ": odd multiple of Pi");
            ++n;
        }
    }
    return std::to_string(n) + " classes, exact in eps through t^-6, zero residual";
}

std::string check_routes()
{
    ToricSurface f = builtin_surface("F1");
    WallData w2 = make_wall(f, "H-2E", "2H+E", "p_x");
    // anchor from the character count, the localization limit and the modular bracket
    require(character_value(chi_character(f, f.combination("-H+2E"))) == -1 && w2.h1L.empty(), "H^1 count at l = 0 is not 1");
    require(delta_nonequivariant(w2, 0, 0, 0).coeff({0, 0, 0}) == GQ(1), "localization anchor differs from 1");
    require(delta_modular_for_wall(w2, 0, 0, 0).coeff({0, 0, 0}) == GQ(1), "modular anchor differs from 1");
    int slices = 0;
    for (const char* al : {"H", "2H+E", "H-E"}) {
        CompareReport a = route_compare(make_wall(f, "H-2E", al, "p_x"), 4, 4, 1);
        require(a.ok, a.detail);
        CompareReport b = route_compare(make_wall(f, "H-4E", al, "p_x"), 12, 4, 1);
        require(b.ok, b.detail);
        slices += a.slices + b.slices;
    }
    // the Lambda^12 slice of H-4E first appears at z^10 x, z^12
    CompareReport c = route_compare(make_wall(f, "H-4E", "2H+E", "p_x"), 12, 12, 1);
    require(c.ok, c.detail);
    require(c.slices == 2, "expected two nonzero Lambda^12 slices for H-4E");
    return "anchor 1 three ways; " + std::to_string(slices + c.slices) + " nonzero slices agree";
}

std::string check_lifts()
{
    ToricSurface f = builtin_surface("F1");
    int n = 0;
    for (auto [xi, D, zo] : std::vector<std::tuple<std::string, int, int>>{{"H-2E", 4, 4}, {"H-4E", 12, 12}}) {
        auto base = delta_nonequivariant(make_wall(f, xi, "2H+E", "p_x"), D, zo, 1);
        for (const char* p : {"p_y", "p_z1", "p_z2"}) {
            require(delta_nonequivariant(make_wall(f, xi, "2H+E", p), D, zo, 1) == base, xi + ": p-lift " + p + " changes the output");
            ++n;
        }
        for (Weight s : {Weight{1, 0}, Weight{-2, 3}}) {
            require(delta_nonequivariant(make_wall(f, xi, "2H+E", "p_x", s), D, zo, 1) == base,
                    xi + ": xi-lift shift " + s.str() + " changes the output");
            ++n;
        }
        require(delta_nonequivariant(make_wall(f, xi, "2H+E", "p_x", {}, Weight{1, 1}), D, zo, 1) == base,
                xi + ": alpha-lift shift changes the output");
        ++n;
    }
    return std::to_string(n) + " alternative lifts agree";
}

std::string check_p2()
{
    std::ostringstream os;
    for (const char* p : {"p_x", "p_y"}) {
        CompareReport r = compare_p2(4, 4, 1, p);
        require(r.ok, r.detail);
        os << (p[2] == 'x' ? "" : "; ") << r.detail;
    }
    return os.str();
}

std::string check_combinatorics()
{
    auto ts = triples_up_to(mpq_class(10));
    for (const auto& t : ts) {
        require(mpq_class(long(t.region.size())) == t.delta * 4 - 2, "region size of " + t.str());
        Character ch = ext1_character(t.p, t.q, t.r);
        require(long(ch.size()) + 1 == long(t.region.size()), "Ext^1 character of " + t.str());
    }
    std::mt19937 g(7);
    std::vector<ToricSurface> surfaces{builtin_surface("P2"), builtin_surface("P1xP1"), builtin_surface("F1")};
    for (int k = 0; k < 2; ++k) {
        ToricSurface s = surfaces[std::uniform_int_distribution<int>(0, 2)(g)];
        for (int b = 0; b < 2; ++b) {
            int i = std::uniform_int_distribution<int>(0, s.chi() - 1)(g);
            s = blowup(s, s.points()[i].id, "X" + std::to_string(b));
        }
        surfaces.push_back(s);
    }
    std::ostringstream os;
    for (const auto& s : surfaces) {
        s.validate();
        std::vector<MPoly> t;
        for (int i = 0; i < s.chi(); ++i) t.push_back(s.todd2(i));
        require(s.localize(t) == RatFn(1), s.name() + ": chi(O) != 1");
        os << (os.tellp() > 0 ? ", " : "") << s.name();
    }
    return std::to_string(ts.size()) + " triples; validated " + os.str();
}

const std::vector<std::pair<std::string, std::function<std::string()>>>& criteria()
{
    static const std::vector<std::pair<std::string, std::function<std::string()>>> c{
        {"Zinst Lambda^4 coefficient", check_lambda4},
        {"grading and symmetry through Lambda^16", check_grading},
        {"regularity of eps1 eps2 F^inst at eps = 0", check_regularity},
        {"tau-shift identity", check_tau_shift},
        {"H^inst vanishes", check_h_instanton},
        {"AB relations after reversion", check_ab},
        {"contact terms u and T", check_contact},
        {"perturbation identity on P2 and F1", check_pert},
        {"localization vs modular wallcrossing", check_routes},
        {"lift independence", check_lifts},
        {"P2 triple route vs blowup route", check_p2},
        {"region counts and localization sanity", check_combinatorics},
    };
    return c;
}

std::string check_algebra()
{
    std::mt19937 g(99);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int k = 0; k < 30; ++k) {
        MPoly a = MPoly::linear({GQ(c(g)), GQ(c(g)), GQ(c(g)), GQ(0), GQ(1)});
        MPoly b = MPoly::linear({GQ(c(g)), GQ(1), GQ(c(g)), GQ(0), GQ(c(g))});
        RatFn x = RatFn::fraction(a * a, b), y = RatFn::fraction(b, a);
        require(x * y == RatFn(a), "ratfn product");
        require((x + y) - y == x, "ratfn sum");
        require(RatFn::parse(x.str()) == x, "ratfn text round trip");
    }
    QSeries s = QSeries::monomial(8, GQ(1), 64, 0) + QSeries::monomial(16, GQ(3), 64, 0);
    require((s.exp().log() - s).valuation() >= 64, "series exp/log");
    return "ring laws, text round trip, series exp/log";
}

}  // namespace

CheckResult acceptance_check(int number)
{
    if (number < 1 || number > int(criteria().size())) throw std::out_of_range("no acceptance check " + std::to_string(number));
    const auto& [name, body] = criteria()[number - 1];
    return timed(name, body);
}

std::vector<CheckResult> acceptance_checks()
{
    std::vector<CheckResult> out;
    for (int k = 1; k <= int(criteria().size()); ++k) out.push_back(acceptance_check(k));
    return out;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> n{"algebra", "localization", "nekrasov", "pert", "wallcross", "p2", "all"};
    return n;
}

std::vector<CheckResult> run_suite(const std::string& suite)
{
    static const std::map<std::string, std::vector<int>> members{
        {"localization", {12}}, {"nekrasov", {1, 2, 3, 4, 5, 6, 7}}, {"pert", {8}}, {"wallcross", {9, 10}}, {"p2", {11}}};
    std::vector<CheckResult> out;
    if (suite == "algebra" || suite == "all") out.push_back(timed("algebra self-checks", check_algebra));
    if (suite == "all") {
        auto a = acceptance_checks();
        out.insert(out.end(), a.begin(), a.end());
        return out;
    }
    auto it = members.find(suite);
    if (it == members.end()) {
        if (suite == "algebra") return out;
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    for (int k : it->second) out.push_back(acceptance_check(k));
    return out;
}

}  // namespace inst
