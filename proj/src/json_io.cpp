#include "sagh/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sagh/errors.hpp"

namespace sagh {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw InputError(what + ": invalid JSON");
    }
    return j;
}

double endpoint_from(const json& v, const std::string& what) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        if (s == "inf" || s == "+inf") {
            return std::numeric_limits<double>::infinity();
        }
    }
    throw InputError(what + ": endpoint must be a number or an infinity sentinel");
}

std::vector<std::vector<double>> rows_from(const json& j, const std::string& what) {
    if (!j.is_array()) {
        throw InputError(what + ": expected an array of rows");
    }
    std::vector<std::vector<double>> rows;
    for (const json& r : j) {
        if (!r.is_array()) {
            throw InputError(what + ": row is not an array");
        }
        std::vector<double> row;
        for (const json& v : r) {
            if (!v.is_number()) {
                throw InputError(what + ": entries must be numbers");
            }
            row.push_back(v.get<double>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SymMatrix matrix_from(const json& j, double tol_override = 0.0) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw InputError("matrix: expected {\"dim\", \"entries\", [\"tol\"]}");
    }
    int dim = j.at("dim").get<int>();
    double tol = tol_override > 0.0 ? tol_override : j.value("tol", SymMatrix::kDefaultTol);
    std::vector<std::vector<double>> rows = rows_from(j.at("entries"), "matrix");
    if (static_cast<int>(rows.size()) != dim) {
        throw InputError("matrix: row count does not match dim");
    }
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(dim) * dim);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim) {
            throw InputError("matrix: column count does not match dim");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return SymMatrix(dim, std::move(flat), tol);
}

} // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SymMatrix parse_matrix_json(const std::string& text, double tol_override) {
    return matrix_from(parse_or_throw(text, "matrix"), tol_override);
}

SymMatrix load_matrix_file(const std::string& path, double tol_override) {
    return parse_matrix_json(read_text_file(path), tol_override);
}

std::string matrix_to_json(const SymMatrix& m) {
    std::ostringstream out;
    out << "{\"dim\": " << m.dim() << ", \"entries\": [";
    for (int i = 0; i < m.dim(); ++i) {
        out << (i == 0 ? "[" : ", [");
        for (int j = 0; j < m.dim(); ++j) {
            out << (j == 0 ? "" : ", ") << format_real(m.at(i, j));
        }
        out << "]";
    }
    out << "], \"tol\": " << format_real(m.tol()) << "}";
    return out.str();
}

Projection parse_projection_json(const std::string& text) {
    json j = parse_or_throw(text, "projection");
    SymMatrix m = matrix_from(j);
    Projection p = Projection::checked(m);
    if (j.contains("rank") && j.at("rank").get<int>() != p.rank()) {
        throw InputError("projection: declared rank " + std::to_string(j.at("rank").get<int>()) +
                         " does not match computed rank " + std::to_string(p.rank()));
    }
    return p;
}

Projection load_projection_file(const std::string& path) {
    return parse_projection_json(read_text_file(path));
}

std::string projection_to_json(const Projection& p) {
    std::string m = matrix_to_json(p.matrix());
    m.pop_back(); // strip closing brace
    return m + ", \"rank\": " + std::to_string(p.rank()) + "}";
}

FnElement parse_fn_element_json(const std::string& text) {
    json j = parse_or_throw(text, "fn element");
    if (!j.is_object() || !j.contains("space") || !j.contains("values")) {
        throw InputError("fn element: expected {\"space\", \"values\"}");
    }
    std::vector<std::string> labels = j.at("space").get<std::vector<std::string>>();
    std::vector<double> values = j.at("values").get<std::vector<double>>();
    return FnElement(DiscreteSpace(labels), std::move(values));
}

std::string fn_element_to_json(const FnElement& f) {
    std::ostringstream out;
    out << "{\"space\": [";
    for (int i = 0; i < f.size(); ++i) {
        out << (i == 0 ? "" : ", ") << "\"" << f.space().labels[static_cast<size_t>(i)] << "\"";
    }
    out << "], \"values\": [";
    for (int i = 0; i < f.size(); ++i) {
        out << (i == 0 ? "" : ", ") << format_real(f.at(i));
    }
    out << "]}";
    return out.str();
}

CharElement parse_char_element_json(const std::string& text) {
    json j = parse_or_throw(text, "char element");
    CharElement e(parse_fn_element_json(text));
    if (j.contains("set")) {
        std::vector<std::string> declared = j.at("set").get<std::vector<std::string>>();
        if (declared != e.support()) {
            throw InputError("char element: declared set does not match the support");
        }
    }
    return e;
}

std::string char_element_to_json(const CharElement& e) {
    std::string base = fn_element_to_json(e.fn());
    base.pop_back(); // strip closing brace
    std::ostringstream out;
    out << base << ", \"set\": [";
    std::vector<std::string> support = e.support();
    for (size_t i = 0; i < support.size(); ++i) {
        out << (i == 0 ? "" : ", ") << "\"" << support[i] << "\"";
    }
    out << "]}";
    return out.str();
}

State parse_state_json(const std::string& text) {
    json j = parse_or_throw(text, "state");
    if (!j.is_object() || !j.contains("kind")) {
        throw InputError("state: expected {\"kind\": \"trace\"|\"weights\", ...}");
    }
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "trace") {
        if (!j.contains("w")) {
            throw InputError("state: trace form requires \"w\"");
        }
        return State::trace_form(matrix_from(j.at("w")));
    }
    if (kind == "weights") {
        if (!j.contains("space") || !j.contains("p")) {
            throw InputError("state: weight form requires \"space\" and \"p\"");
        }
        DiscreteSpace space(j.at("space").get<std::vector<std::string>>());
        return State::weight_form(space, j.at("p").get<std::vector<double>>());
    }
    throw InputError("state: unknown kind '" + kind + "'");
}

State load_state_file(const std::string& path) {
    return parse_state_json(read_text_file(path));
}

GroundSet parse_ground_set_json(const std::string& text) {
    json j = parse_or_throw(text, "ground set");
    if (!j.is_object() || !j.contains("atoms")) {
        throw InputError("ground set: expected {\"atoms\", [\"null\"]}");
    }
    std::vector<std::string> atoms = j.at("atoms").get<std::vector<std::string>>();
    std::vector<std::string> nulls;
    if (j.contains("null")) {
        nulls = j.at("null").get<std::vector<std::string>>();
    }
    return GroundSet(std::move(atoms), std::move(nulls));
}

GroundSet load_ground_set_file(const std::string& path) {
    return parse_ground_set_json(read_text_file(path));
}

GroundFunction parse_ground_function_json(const GroundSet& ground, const std::string& text) {
    json j = parse_or_throw(text, "ground function");
    if (!j.is_object()) {
        throw InputError("ground function: expected a label -> value object");
    }
    std::map<std::string, double> values;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number()) {
            throw InputError("ground function: value for '" + it.key() + "' is not a number");
        }
        values[it.key()] = it.value().get<double>();
    }
    return GroundFunction::from_map(ground, values);
}

BorelSetExpr parse_borel_json(const std::string& text) {
    json j = parse_or_throw(text, "borel set");
    if (!j.is_object()) {
        throw InputError("borel set: expected {\"intervals\", \"points\"}");
    }
    std::vector<BorelSetExpr::Interval> intervals;
    if (j.contains("intervals")) {
        for (const json& iv : j.at("intervals")) {
            if (!iv.is_array() || iv.size() != 2) {
                throw InputError("borel set: interval must be [lo, hi]");
            }
            intervals.push_back(BorelSetExpr::Interval{endpoint_from(iv[0], "borel set"),
                                                       endpoint_from(iv[1], "borel set")});
        }
    }
    std::vector<double> points;
    if (j.contains("points")) {
        points = j.at("points").get<std::vector<double>>();
    }
    return BorelSetExpr(std::move(intervals), std::move(points));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace sagh
