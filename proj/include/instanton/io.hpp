#pragma once

#include "instanton/multiseries.hpp"
#include "instanton/qseries.hpp"
#include "instanton/ratfn.hpp"
#include "instanton/toric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace inst {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Serialized truncated series. Exponents are integers; a variable with
// denominator d carries the exponent e/d (e.g. "q8" counts eighths of q).
struct SeriesDocument {
    static constexpr int kSchemaVersion = 1;
    struct Variable {
        std::string name;
        int denominator = 1;
        int lo = 0;     // first exponent of the window
        int order = 0;  // last exponent of the window
    };
    struct Term {
        std::vector<int> exponents;  // in variable order
        std::string coefficient;
    };
    int schema_version = kSchemaVersion;
    std::string coefficient_kind;  // "gaussian" or "rational_function"
    std::vector<Variable> variables;
    std::vector<Term> terms;  // sorted lexicographically by exponents
    nlohmann::ordered_json provenance = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const;
    static SeriesDocument from_json(const nlohmann::ordered_json& j);
    std::string text() const;  // sorted "exponent : coefficient" lines
};

SeriesDocument to_document(const MultiSeries<GQ>& s, nlohmann::ordered_json provenance = {});
SeriesDocument to_document(const MultiSeries<RatFn>& s, nlohmann::ordered_json provenance = {});
SeriesDocument to_document(const QSeries& s, nlohmann::ordered_json provenance = {});
MultiSeries<GQ> gaussian_series(const SeriesDocument& d);
MultiSeries<RatFn> ratfn_series(const SeriesDocument& d);
QSeries q_series(const SeriesDocument& d);

nlohmann::ordered_json surface_to_json(const ToricSurface& s);
// Parses and validates; throws SchemaError or ValidationError.
ToricSurface surface_from_json(const nlohmann::json& j);
ToricSurface load_surface(const std::string& path);

}  // namespace inst
