#include "instanton/io.hpp"
#include "instanton/modular.hpp"
#include "instanton/p2.hpp"
#include "instanton/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace inst;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int workers = 0;
    int order = 8;
    int tau_count = 0, tau_order = 0;
    int q_ceiling = 16;
    bool check = false;
    std::string surface = "F1", xi = "H-2E", alpha, point;
    int lambda_order = 4, z_order = 4, x_order = 1;
    std::string route = "both";
    std::string suite = "all";
};

void emit(const Options& o, const ordered_json& doc, const std::string& text)
{
    if (o.format == "json") std::cout << doc.dump(2) << "\n";
    else std::cout << text;
}

void emit_documents(const Options& o, const std::vector<std::pair<std::string, SeriesDocument>>& docs)
{
    ordered_json j = ordered_json::object();
    std::string text;
    for (const auto& [name, d] : docs) {
        j[name] = d.to_json();
        text += (docs.size() > 1 ? "# " + name + "\n" : "") + d.text();
    }
    emit(o, docs.size() == 1 ? j.begin().value() : j, text);
}

void require_nonneg(int v, const char* what)
{
    if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
}

ToricSurface surface_of(const std::string& src)
{
    if (src == "P2" || src == "P1xP1" || src == "F1") return builtin_surface(src);
    if (std::filesystem::exists(src)) return load_surface(src);
    throw UsageError("surface '" + src + "' is neither a builtin (P2, P1xP1, F1) nor a readable file");
}

int run_zinst(const Options& o)
{
    require_nonneg(o.order, "--order");
    auto z = zinst(o.order, {}, o.tau_count, o.tau_order);
    emit_documents(o, {{"zinst", to_document(z, {{"quantity", "Z^inst(eps1, eps2, a; Lambda, tau)"}, {"lambda_order", o.order},
                                                 {"tau_count", o.tau_count}, {"tau_order", o.tau_order}})}});
    return kOk;
}

int run_prepotential(const Options& o)
{
    require_nonneg(o.order, "--order");
    auto p = prepotential_parts(o.order);
    std::vector<std::pair<std::string, SeriesDocument>> docs;
    for (auto [name, v] : {std::pair{"F0", &p.F0}, {"H", &p.H}, {"A", &p.A}, {"B", &p.B}}) {
        MultiSeries<RatFn> s({"Lambda"}, {o.order});
        for (size_t n = 0; n < v->size(); ++n) s.set({int(4 * n)}, (*v)[n]);
        docs.push_back({name, to_document(s, {{"quantity", std::string(name) + " instanton part"}, {"lambda_order", o.order}})});
    }
    emit_documents(o, docs);
    return kOk;
}

int run_modular(const Options& o)
{
    if (o.q_ceiling <= 0) throw UsageError("--q-ceiling must be positive");
    const SWSeries& sw = sw_series(o.q_ceiling);
    std::vector<std::pair<std::string, SeriesDocument>> docs;
    for (auto [name, s] : {std::pair{"u", &sw.u}, {"duda", &sw.duda}, {"a", &sw.a}, {"T", &sw.T}})
        docs.push_back({name, to_document(*s, {{"quantity", name}, {"q_ceiling_eighths", o.q_ceiling}})});
    emit_documents(o, docs);
    if (!o.check) return kOk;
    auto p = prepotential_parts(o.order);
    int rc = kOk;
    for (auto [name, r] : {std::pair{"exp(2A) check", ab_check_A(p)}, {"exp(2B-2A) check", ab_check_BA(p)},
                           {"contact term u", contact_check_u(p)}, {"contact term T", contact_check_T(p)}}) {
        std::cerr << (r.ok ? "ok: " : "FAILED: ") << name << ": " << r.detail << "\n";
        if (!r.ok) rc = kMismatch;
    }
    return rc;
}

int run_wallcross(const Options& o)
{
    require_nonneg(o.lambda_order, "--lambda-order");
    require_nonneg(o.z_order, "--z-order");
    require_nonneg(o.x_order, "--x-order");
    ToricSurface s = surface_of(o.surface);
    std::string alpha = o.alpha;
    if (alpha.empty()) alpha = s.classes().count("H") ? "H" : s.classes().begin()->first;
    std::string point = o.point.empty() ? s.points().front().id : o.point;
    WallData w = make_wall(s, o.xi, alpha, point);
    ordered_json prov{{"surface", s.name()}, {"wall", o.xi},         {"alpha", alpha},         {"point_lift", point},
                      {"lambda_order", o.lambda_order}, {"z_order", o.z_order}, {"x_order", o.x_order}};
    std::vector<std::pair<std::string, SeriesDocument>> docs;
    MultiSeries<GQ> local, modular;
    if (o.route != "modular") {
        local = delta_nonequivariant(w, o.lambda_order, o.z_order, o.x_order);
        prov["route"] = "localization";
        docs.push_back({"local", to_document(local, prov)});
    }
    if (o.route != "local") {
        modular = delta_modular_for_wall(w, o.lambda_order, o.z_order, o.x_order);
        prov["route"] = "modular";
        docs.push_back({"modular", to_document(modular, prov)});
    }
    emit_documents(o, docs);
    if (o.route != "both") return kOk;
    CompareReport r = compare_series(local, modular, "localization", "modular");
    if (r.ok) std::cerr << "ok: localization and modular routes agree on " << r.slices << " nonzero slices\n";
    else std::cerr << "FAILED: wallcrossing routes differ: " << r.detail << "\n";
    return r.ok ? kOk : kMismatch;
}

int run_p2(const Options& o)
{
    require_nonneg(o.lambda_order, "--lambda-order");
    require_nonneg(o.z_order, "--z-order");
    require_nonneg(o.x_order, "--x-order");
    std::string point = o.point.empty() ? "p_x" : o.point;
    ordered_json prov{{"surface", "P2"}, {"point_lift", point}, {"lambda_order", o.lambda_order}, {"z_order", o.z_order}, {"x_order", o.x_order}};
    std::vector<std::pair<std::string, SeriesDocument>> docs;
    MultiSeries<RatFn> tri, blow;
    if (o.route != "blowup") {
        tri = phi_equivariant(o.lambda_order, o.z_order, o.x_order, point);
        prov["route"] = "triples";
        docs.push_back({"triples", to_document(tri, prov)});
    }
    if (o.route != "triples") {
        blow = phi_blowup_route(o.lambda_order, o.z_order, o.x_order, point);
        prov["route"] = "blowup";
        docs.push_back({"blowup", to_document(blow, prov)});
    }
    emit_documents(o, docs);
    if (o.route != "both") return kOk;
    CompareReport r = compare_series(tri, blow, "triples", "blowup");
    if (r.ok) std::cerr << "ok: triple and blowup routes agree on " << r.slices << " nonzero slices\n";
    else std::cerr << "FAILED: P2 routes differ: " << r.detail << "\n";
    return r.ok ? kOk : kMismatch;
}

int run_surface(const Options& o)
{
    ToricSurface s = surface_of(o.surface);
    std::ostringstream text;
    text << s.name() << ": chi = " << s.chi() << ", K^2 = " << s.K2() << ", sigma = " << s.sigma() << ", chi(O) = " << s.chiO() << "\n";
    for (const auto& [a, ca] : s.classes())
        for (const auto& [b, cb] : s.classes())
            if (a <= b) text << a << "." << b << " = " << s.intersect(ca, cb).str() << "\n";
    emit(o, surface_to_json(s), text.str());
    return kOk;
}

int run_verify(const Options& o)
{
    auto results = run_suite(o.suite);
    ordered_json j = ordered_json::array();
    std::string text;
    bool ok = true;
    for (const auto& r : results) {
        j.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}, {"seconds", r.seconds}});
        text += std::string(r.ok ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
        if (!r.ok) {
            std::cerr << "FAILED: " << r.name << ": " << r.detail << "\n";
            ok = false;
        }
    }
    emit(o, j, text);
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact instanton counting, wallcrossing and blowup computations"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--workers", o.workers, "Worker threads (overrides INSTANTON_WORKERS)")->check(CLI::PositiveNumber);

    auto* zi = app.add_subcommand("zinst", "Nekrasov partition function Z^inst");
    zi->add_option("--order", o.order, "Lambda order");
    zi->add_option("--tau-count", o.tau_count, "Number of higher Casimir couplings tau_1..tau_R");
    zi->add_option("--tau-order", o.tau_order, "Order in each tau");

    auto* pp = app.add_subcommand("prepotential", "Instanton parts of F0, H, A, B");
    pp->add_option("--order", o.order, "Lambda order");

    auto* mo = app.add_subcommand("modular", "Seiberg-Witten q-series u, du/da, a, T");
    mo->add_option("--q-ceiling", o.q_ceiling, "Ceiling of the q-window, in eighths");
    mo->add_flag("--check", o.check, "Also run the modular identity checks against the prepotential");
    mo->add_option("--order", o.order, "Lambda order of the prepotential used by --check");

    auto* wc = app.add_subcommand("wallcross", "Wallcrossing term of a class xi");
    wc->add_option("--surface", o.surface, "Builtin name (P2, P1xP1, F1) or surface JSON file");
    wc->add_option("--xi", o.xi, "Wall class, e.g. H-2E");
    wc->add_option("--alpha", o.alpha, "Class alpha paired with z (default H, else the first class)");
    wc->add_option("--point", o.point, "Fixed point for the point-class lift (default the first)");
    wc->add_option("--lambda-order", o.lambda_order, "Lambda order");
    wc->add_option("--z-order", o.z_order, "Order in z");
    wc->add_option("--x-order", o.x_order, "Order in x");
    wc->add_option("--route", o.route)->check(CLI::IsMember({"local", "modular", "both"}));

    auto* p2 = app.add_subcommand("p2", "P2 generating function from fixed-point triples or from the blowup formula");
    p2->add_option("--point", o.point, "Point-class lift, p_x or p_y");
    p2->add_option("--lambda-order", o.lambda_order, "Lambda order");
    p2->add_option("--z-order", o.z_order, "Order in z");
    p2->add_option("--x-order", o.x_order, "Order in x");
    p2->add_option("--route", o.route)->check(CLI::IsMember({"triples", "blowup", "both"}));

    auto* su = app.add_subcommand("surface", "Validate a surface and print it (JSON) or its invariants (text)");
    su->add_option("--surface", o.surface, "Builtin name (P2, P1xP1, F1) or surface JSON file");

    auto* ve = app.add_subcommand("verify", "Run a verification suite");
    ve->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (o.workers > 0) setenv("INSTANTON_WORKERS", std::to_string(o.workers).c_str(), 1);

    try {
        if (zi->parsed()) return run_zinst(o);
        if (pp->parsed()) return run_prepotential(o);
        if (mo->parsed()) return run_modular(o);
        if (wc->parsed()) return run_wallcross(o);
        if (p2->parsed()) return run_p2(o);
        if (su->parsed()) return run_surface(o);
        return run_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        std::cerr << "surface rejected: " << e.what() << "\n";
        return kUsage;
    } catch (const WallNotGood& e) {
        std::cerr << "wall rejected: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kMismatch;
    }
}
