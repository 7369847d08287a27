#include "instanton/io.hpp"
#include "instanton/p2.hpp"
#include "instanton/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace inst;

namespace {

py::object to_py(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ToricSurface surface_of(const std::string& src)
{
    if (src == "P2" || src == "P1xP1" || src == "F1") return builtin_surface(src);
    return load_surface(src);
}

py::list checks_to_py(const std::vector<CheckResult>& rs)
{
    py::list out;
    for (const auto& r : rs) {
        py::dict d;
        d["name"] = r.name;
        d["ok"] = r.ok;
        d["detail"] = r.detail;
        d["seconds"] = r.seconds;
        out.append(d);
    }
    return out;
}

py::dict compare_to_py(const CompareReport& r)
{
    py::dict d;
    d["ok"] = r.ok;
    d["slices"] = r.slices;
    d["detail"] = r.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(instanton, m)
{
    m.doc() = "Exact instanton counting, wallcrossing and blowup computations";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<WallNotGood>(m, "WallNotGood", PyExc_ValueError);

    m.def(
        "zinst",
        [](int order, int tau_count, int tau_order) {
            py::gil_scoped_release release;
            auto doc = to_document(zinst(order, {}, tau_count, tau_order)).to_json();
            py::gil_scoped_acquire acquire;
            return to_py(doc);
        },
        py::arg("order"), py::arg("tau_count") = 0, py::arg("tau_order") = 0,
        "Z^inst as a series document with rational-function coefficients");

    m.def(
        "prepotential_constants",
        [](int order) {
            auto p = prepotential_parts(order);
            py::dict d;
            for (auto [name, v] : {std::pair{"F0", &p.f0}, {"H", &p.h}, {"A", &p.a}, {"B", &p.b}}) {
                py::list l;
                for (const auto& c : *v) l.append(c.str());
                d[name] = l;
            }
            return d;
        },
        py::arg("order"), "Constants c_n of the Lambda^{4n} instanton coefficients of F0, H, A, B");

    m.def(
        "wallcross",
        [](const std::string& surface, const std::string& xi, const std::string& alpha, const std::string& point,
           int lambda_order, int z_order, int x_order, const std::string& route) {
            ToricSurface s = surface_of(surface);
            WallData w = make_wall(s, xi, alpha, point.empty() ? s.points().front().id : point);
            if (route == "local") return to_py(to_document(delta_nonequivariant(w, lambda_order, z_order, x_order)).to_json());
            if (route == "modular") return to_py(to_document(delta_modular_for_wall(w, lambda_order, z_order, x_order)).to_json());
            throw std::invalid_argument("route must be 'local' or 'modular'");
        },
        py::arg("surface"), py::arg("xi"), py::arg("alpha") = "H", py::arg("point") = "", py::arg("lambda_order") = 4,
        py::arg("z_order") = 4, py::arg("x_order") = 1, py::arg("route") = "local");

    m.def(
        "compare_wallcross",
        [](const std::string& surface, const std::string& xi, const std::string& alpha, int lambda_order, int z_order, int x_order) {
            ToricSurface s = surface_of(surface);
            return compare_to_py(route_compare(make_wall(s, xi, alpha, s.points().front().id), lambda_order, z_order, x_order));
        },
        py::arg("surface"), py::arg("xi"), py::arg("alpha") = "H", py::arg("lambda_order") = 4, py::arg("z_order") = 4,
        py::arg("x_order") = 1);

    m.def(
        "p2",
        [](int lambda_order, int z_order, int x_order, const std::string& point, const std::string& route) {
            MultiSeries<RatFn> s;
            {
                py::gil_scoped_release release;
                if (route == "triples") s = phi_equivariant(lambda_order, z_order, x_order, point);
                else if (route == "blowup") s = phi_blowup_route(lambda_order, z_order, x_order, point);
                else throw std::invalid_argument("route must be 'triples' or 'blowup'");
            }
            return to_py(to_document(s).to_json());
        },
        py::arg("lambda_order") = 4, py::arg("z_order") = 4, py::arg("x_order") = 1, py::arg("point") = "p_x",
        py::arg("route") = "triples");

    m.def(
        "compare_p2",
        [](int lambda_order, int z_order, int x_order, const std::string& point) {
            CompareReport r;
            {
                py::gil_scoped_release release;
                r = compare_p2(lambda_order, z_order, x_order, point);
            }
            return compare_to_py(r);
        },
        py::arg("lambda_order") = 4, py::arg("z_order") = 4, py::arg("x_order") = 1, py::arg("point") = "p_x");

    m.def(
        "surface",
        [](const std::string& source) { return to_py(surface_to_json(surface_of(source))); },
        py::arg("source"), "Builtin name or surface JSON file, validated");

    m.def(
        "surface_from_json",
        [](const std::string& text) { return to_py(surface_to_json(surface_from_json(nlohmann::json::parse(text)))); },
        py::arg("text"), "Validates a surface given as JSON text");

    m.def(
        "verify",
        [](const std::string& suite) {
            std::vector<CheckResult> rs;
            {
                py::gil_scoped_release release;
                rs = run_suite(suite);
            }
            return checks_to_py(rs);
        },
        py::arg("suite") = "all");

    m.def("acceptance", [] {
        std::vector<CheckResult> rs;
        {
            py::gil_scoped_release release;
            rs = acceptance_checks();
        }
        return checks_to_py(rs);
    });
}
