#include "instanton/io.hpp"

#include <fstream>
#include <sstream>

namespace inst {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <class J>
const J& field(const J& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
    return j.at(key);
}

template <class J>
int int_field(const J& j, const std::string& key, const std::string& where)
{
    const J& v = field(j, key, where);
    if (!v.is_number_integer()) throw SchemaError(where + ": field '" + key + "' must be an integer");
    return v.template get<int>();
}

template <class J>
Weight weight_field(const J& v, const std::string& where)
{
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        throw SchemaError(where + ": weight must be [c1, c2] with integer entries");
    return {v[0].template get<int>(), v[1].template get<int>()};
}

template <class C>
SeriesDocument multi_document(const MultiSeries<C>& s, const char* kind, ordered_json provenance)
{
    SeriesDocument d;
    d.coefficient_kind = kind;
    for (size_t i = 0; i < s.nvars(); ++i) d.variables.push_back({s.names()[i], 1, 0, s.orders()[i]});
    for (const auto& [k, c] : s.terms()) d.terms.push_back({k, c.str()});
    if (!provenance.is_null()) d.provenance = std::move(provenance);
    return d;
}

template <class C>
MultiSeries<C> multi_series(const SeriesDocument& d, const char* kind)
{
    if (d.coefficient_kind != kind) throw SchemaError("series document holds " + d.coefficient_kind + " coefficients, expected " + kind);
    std::vector<std::string> names;
    std::vector<int> orders;
    for (const auto& v : d.variables) {
        if (v.denominator != 1 || v.lo != 0) throw SchemaError("variable '" + v.name + "' is not a power series variable");
        names.push_back(v.name);
        orders.push_back(v.order);
    }
    MultiSeries<C> s(names, orders);
    for (const auto& t : d.terms) {
        if (!s.in_window(t.exponents)) throw SchemaError("term outside the declared window");
        s.set(t.exponents, C::parse(t.coefficient));
    }
    return s;
}

}  // namespace

ordered_json SeriesDocument::to_json() const
{
    ordered_json j;
    j["schema_version"] = schema_version;
    j["coefficient_kind"] = coefficient_kind;
    j["variables"] = ordered_json::array();
    for (const auto& v : variables)
        j["variables"].push_back({{"name", v.name}, {"denominator", v.denominator}, {"lo", v.lo}, {"order", v.order}});
    j["terms"] = ordered_json::array();
    for (const auto& t : terms) {
        ordered_json e = ordered_json::object();
        for (size_t i = 0; i < variables.size(); ++i) e[variables[i].name] = t.exponents[i];
        j["terms"].push_back({{"exponent", e}, {"coefficient", t.coefficient}});
    }
    j["provenance"] = provenance;
    return j;
}

SeriesDocument SeriesDocument::from_json(const ordered_json& j)
{
    SeriesDocument d;
    d.schema_version = int_field(j, "schema_version", "series document");
    if (d.schema_version != kSchemaVersion)
        throw SchemaError("unsupported schema version " + std::to_string(d.schema_version));
    const auto& kind = field(j, "coefficient_kind", "series document");
    if (!kind.is_string()) throw SchemaError("coefficient_kind must be a string");
    d.coefficient_kind = kind.get<std::string>();
    const auto& vars = field(j, "variables", "series document");
    if (!vars.is_array()) throw SchemaError("variables must be an array");
    for (const auto& v : vars) {
        const auto& name = field(v, "name", "variable");
        if (!name.is_string()) throw SchemaError("variable name must be a string");
        d.variables.push_back({name.get<std::string>(), int_field(v, "denominator", "variable"), int_field(v, "lo", "variable"),
                               int_field(v, "order", "variable")});
    }
    const auto& terms = field(j, "terms", "series document");
    if (!terms.is_array()) throw SchemaError("terms must be an array");
    for (const auto& t : terms) {
        const auto& e = field(t, "exponent", "term");
        const auto& c = field(t, "coefficient", "term");
        if (!c.is_string()) throw SchemaError("coefficient must be a string");
        if (!e.is_object() || e.size() != d.variables.size()) throw SchemaError("exponent record does not match the variables");
        Term term;
        for (const auto& v : d.variables) term.exponents.push_back(int_field(e, v.name, "exponent"));
        term.coefficient = c.get<std::string>();
        d.terms.push_back(std::move(term));
    }
    for (size_t i = 1; i < d.terms.size(); ++i)
        if (!(d.terms[i - 1].exponents < d.terms[i].exponents)) throw SchemaError("terms are not strictly sorted");
    if (j.contains("provenance")) d.provenance = j.at("provenance");
    return d;
}

std::string SeriesDocument::text() const
{
    std::ostringstream os;
    for (const auto& t : terms) {
        bool first = true;
        for (size_t i = 0; i < variables.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            os << (first ? "" : " ") << variables[i].name << "^" << t.exponents[i];
            first = false;
        }
        if (first) os << "1";
        os << " : " << t.coefficient << "\n";
    }
    return os.str();
}

SeriesDocument to_document(const MultiSeries<GQ>& s, ordered_json provenance)
{
    return multi_document(s, "gaussian", std::move(provenance));
}

SeriesDocument to_document(const MultiSeries<RatFn>& s, ordered_json provenance)
{
    return multi_document(s, "rational_function", std::move(provenance));
}

SeriesDocument to_document(const QSeries& s, ordered_json provenance)
{
    SeriesDocument d;
    d.coefficient_kind = "gaussian";
    d.variables.push_back({"q8", 8, s.lo(), s.ceil() - 1});
    for (int e = s.lo(); e < s.ceil(); ++e) {
        GQ c = s.coeff(e);
        if (c != GQ(0)) d.terms.push_back({{e}, c.str()});
    }
    if (!provenance.is_null()) d.provenance = std::move(provenance);
    d.provenance["lambda_weight"] = s.weight();
    return d;
}

MultiSeries<GQ> gaussian_series(const SeriesDocument& d) { return multi_series<GQ>(d, "gaussian"); }
MultiSeries<RatFn> ratfn_series(const SeriesDocument& d) { return multi_series<RatFn>(d, "rational_function"); }

QSeries q_series(const SeriesDocument& d)
{
    if (d.coefficient_kind != "gaussian" || d.variables.size() != 1 || d.variables[0].denominator != 8)
        throw SchemaError("not a q-series document");
    const auto& v = d.variables[0];
    std::vector<GQ> c(v.order + 1 - v.lo);
    for (const auto& t : d.terms) {
        int e = t.exponents[0];
        if (e < v.lo || e > v.order) throw SchemaError("term outside the declared window");
        c[e - v.lo] = GQ::parse(t.coefficient);
    }
    int weight = d.provenance.contains("lambda_weight") ? d.provenance.at("lambda_weight").get<int>() : 0;
    return QSeries(v.lo, v.order + 1, c, weight);
}

ordered_json surface_to_json(const ToricSurface& s)
{
    ordered_json j;
    j["name"] = s.name();
    j["fixed_points"] = ordered_json::array();
    for (const auto& p : s.points())
        j["fixed_points"].push_back({{"id", p.id}, {"wx", {p.wx.c1, p.wx.c2}}, {"wy", {p.wy.c1, p.wy.c2}}});
    j["classes"] = ordered_json::object();
    for (const auto& [name, c] : s.classes()) {
        ordered_json r = ordered_json::object();
        for (size_t i = 0; i < c.size(); ++i) r[s.points()[i].id] = {c[i].c1, c[i].c2};
        j["classes"][name] = r;
    }
    return j;
}

ToricSurface surface_from_json(const json& j)
{
    const auto& name = field(j, "name", "surface");
    if (!name.is_string()) throw SchemaError("surface: name must be a string");
    const auto& fps = field(j, "fixed_points", "surface");
    if (!fps.is_array() || fps.empty()) throw SchemaError("surface: fixed_points must be a nonempty array");
    std::vector<FixedPoint> points;
    for (const auto& p : fps) {
        const auto& id = field(p, "id", "fixed point");
        if (!id.is_string()) throw SchemaError("fixed point: id must be a string");
        std::string where = "fixed point " + id.get<std::string>();
        points.push_back({id.get<std::string>(), weight_field(field(p, "wx", where), where), weight_field(field(p, "wy", where), where)});
    }
    const auto& cls = field(j, "classes", "surface");
    if (!cls.is_object()) throw SchemaError("surface: classes must be an object");
    std::map<std::string, EquivClass> classes;
    for (const auto& [cname, r] : cls.items()) {
        std::string where = "class " + cname;
        if (!r.is_object() || r.size() != points.size()) throw SchemaError(where + ": needs one restriction per fixed point");
        EquivClass c;
        for (const auto& p : points) c.push_back(weight_field(field(r, p.id, where), where));
        classes.emplace(cname, std::move(c));
    }
    ToricSurface s(name.get<std::string>(), std::move(points), std::move(classes));
    s.validate();
    return s;
}

ToricSurface load_surface(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open surface file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("surface file '" + path + "': " + e.what());
    }
    return surface_from_json(j);
}

}  // namespace inst
