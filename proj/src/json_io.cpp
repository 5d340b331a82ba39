#include "quot/json_io.hpp"

namespace quot {

namespace {

const Json& require_key(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string(what) + ": missing key '" + key + "'");
    return *it;
}

std::size_t require_count(const Json& j, const char* key, const char* what) {
    const Json& v = require_key(j, key, what);
    if (!v.is_number_unsigned()) throw ParseError(std::string(what) + ": key '" + key + "' must be a count");
    return v.get<std::size_t>();
}

Field field_from(const Json& j, const char* what) {
    const Json& tag = require_key(j, "field", what);
    if (!tag.is_string()) throw ParseError(std::string(what) + ": field tag must be a string");
    return Field::parse(tag.get<std::string>());
}

} // namespace

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Scalar& e : v) out.push_back(e.to_string());
    return out;
}

Vec vec_from_json(const Field& field, const Json& j) {
    if (!j.is_array()) throw ParseError("vec_from_json: expected an array of entry strings");
    Vec v;
    v.reserve(j.size());
    for (const Json& e : j) {
        if (!e.is_string()) throw ParseError("vec_from_json: entries must be strings");
        v.push_back(Scalar::parse(field, e.get<std::string>()));
    }
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).to_string());
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"field", m.field().to_string()},
                {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
    const std::size_t rows = require_count(j, "rows", "matrix_from_json");
    const std::size_t cols = require_count(j, "cols", "matrix_from_json");
    const Field field = field_from(j, "matrix_from_json");
    const Json& entries = require_key(j, "entries", "matrix_from_json");
    if (!entries.is_array() || entries.size() != rows * cols) {
        throw ParseError("matrix_from_json: expected rows*cols entries");
    }
    Matrix m(rows, cols, field);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c < cols; ++c, ++k) {
            if (!entries[k].is_string()) throw ParseError("matrix_from_json: entries must be strings");
            m.set(i, c, Scalar::parse(field, entries[k].get<std::string>()));
        }
    }
    return m;
}

Json rep_to_json(const FramedRep& rep) {
    Json a = Json::array();
    for (const Matrix& ai : rep.A()) a.push_back(matrix_to_json(ai));
    Json v = Json::array();
    for (const Vec& vj : rep.V()) v.push_back(vec_to_json(vj));
    return Json{{"m", rep.m()}, {"n", rep.n()}, {"r", rep.r()},
                {"field", rep.field().to_string()}, {"A", std::move(a)}, {"V", std::move(v)}};
}

FramedRep rep_from_json(const Json& j) {
    const std::size_t m = require_count(j, "m", "rep_from_json");
    const std::size_t n = require_count(j, "n", "rep_from_json");
    const std::size_t r = require_count(j, "r", "rep_from_json");
    const Field field = field_from(j, "rep_from_json");
    const Json& a_json = require_key(j, "A", "rep_from_json");
    const Json& v_json = require_key(j, "V", "rep_from_json");
    if (!a_json.is_array() || !v_json.is_array()) throw ParseError("rep_from_json: A and V must be arrays");

    std::vector<Matrix> a;
    a.reserve(a_json.size());
    for (const Json& ai : a_json) a.push_back(matrix_from_json(ai));
    std::vector<Vec> v;
    v.reserve(v_json.size());
    for (const Json& vj : v_json) v.push_back(vec_from_json(field, vj));
    try {
        return FramedRep(m, n, r, field, std::move(a), std::move(v));
    } catch (const Error& e) {
        throw ParseError(std::string("rep_from_json: ") + e.what());
    }
}

Json adhm_to_json(const AdhmDatum& d) {
    return Json{{"n", d.n()},  {"r", d.r()},  {"field", d.field().to_string()},
                {"B1", matrix_to_json(d.B1())}, {"B2", matrix_to_json(d.B2())},
                {"i", matrix_to_json(d.i())},   {"j", matrix_to_json(d.j())}};
}

AdhmDatum adhm_from_json(const Json& j) {
    const std::size_t n = require_count(j, "n", "adhm_from_json");
    const std::size_t r = require_count(j, "r", "adhm_from_json");
    const Field field = field_from(j, "adhm_from_json");
    try {
        return AdhmDatum(n, r, field, matrix_from_json(require_key(j, "B1", "adhm_from_json")),
                         matrix_from_json(require_key(j, "B2", "adhm_from_json")),
                         matrix_from_json(require_key(j, "i", "adhm_from_json")),
                         matrix_from_json(require_key(j, "j", "adhm_from_json")));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("adhm_from_json: ") + e.what());
    }
}

Json tangent_report_to_json(const TangentReport& report) {
    Json out{{"ambient_dim", report.ambient_dim},
             {"rep_space_dim", report.rep_space_dim},
             {"jacobian_rank", report.jacobian_rank},
             {"tangent_dim", report.tangent_dim},
             {"verdict", to_string(report.verdict)}};
    if (report.reference_dim) out["reference_dim"] = *report.reference_dim;
    return out;
}

Json count_result_to_json(const CountResult& result) {
    return Json{{"m", result.m},
                {"n", result.n},
                {"r", result.r},
                {"q", result.q},
                {"stable_commuting_points", result.stable_commuting_points},
                {"orbit_count", result.orbit_count},
                {"gauge_group_order", result.gauge_group_order}};
}

} // namespace quot
