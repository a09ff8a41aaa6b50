#include "og10lat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace og10lat::jsonio {

using nlohmann::json;

json json_int(const Int& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

json json_vec(const RowVec& v) {
    json a = json::array();
    for (const Int& x : v)
        a.push_back(json_int(x));
    return a;
}

json json_rat_vec(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) {
        if (x.get_den() == 1)
            a.push_back(json_int(x.get_num()));
        else
            a.push_back(x.get_str());
    }
    return a;
}

json json_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(json_vec(m.row(i)));
    return rows;
}

Int parse_int(const json& j) {
    try {
        if (j.is_number_integer())
            return Int(static_cast<long>(j.get<long long>()));
        if (j.is_string())
            return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
    throw precondition_error("expected an integer, got: " + j.dump());
}

Rat parse_rat(const json& j) {
    try {
        if (j.is_number_integer())
            return Rat(static_cast<long>(j.get<long long>()));
        if (j.is_string()) {
            Rat r(j.get<std::string>());
            if (r.get_den() == 0)
                throw precondition_error("zero denominator in rational");
            r.canonicalize();
            return r;
        }
    } catch (const std::invalid_argument&) {
    }
    throw precondition_error("expected an integer or \"p/q\", got: " + j.dump());
}

RowVec parse_int_vec(const json& j) {
    if (!j.is_array())
        throw precondition_error("expected an array of integers");
    RowVec v;
    v.reserve(j.size());
    for (const auto& x : j)
        v.push_back(parse_int(x));
    return v;
}

RatVec parse_rat_vec(const json& j) {
    if (!j.is_array())
        throw precondition_error("expected an array of rationals");
    RatVec v;
    v.reserve(j.size());
    for (const auto& x : j)
        v.push_back(parse_rat(x));
    return v;
}

LatticeDocument parse_lattice_document(const json& j) {
    if (!j.is_object())
        throw precondition_error("lattice document must be a JSON object");
    if (!j.contains("gram"))
        throw precondition_error("lattice document is missing \"gram\"");
    const json& g = j.at("gram");
    if (!g.is_array())
        throw precondition_error("\"gram\" must be an array of rows");
    LatticeDocument doc;
    std::vector<RowVec> rows;
    for (const auto& r : g)
        rows.push_back(parse_int_vec(r));
    std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n)
            throw precondition_error("\"gram\" must be square");
    doc.gram = IntMatrix::from_rows(rows, n);
    if (!doc.gram.is_symmetric())
        throw precondition_error("\"gram\" must be symmetric");
    if (j.contains("name")) {
        if (!j.at("name").is_string())
            throw precondition_error("\"name\" must be a string");
        doc.name = j.at("name").get<std::string>();
    }
    if (j.contains("vectors")) {
        if (!j.at("vectors").is_object())
            throw precondition_error("\"vectors\" must be an object");
        for (const auto& [key, val] : j.at("vectors").items()) {
            RowVec v = parse_int_vec(val);
            if (v.size() != n)
                throw precondition_error("vector \"" + key + "\" has wrong length");
            doc.vectors[key] = std::move(v);
        }
    }
    if (j.contains("glue")) {
        if (!j.at("glue").is_array())
            throw precondition_error("\"glue\" must be an array of vectors");
        for (const auto& gv : j.at("glue")) {
            RatVec v = parse_rat_vec(gv);
            if (v.size() != n)
                throw precondition_error("glue vector has wrong length");
            doc.glue.push_back(std::move(v));
        }
    }
    return doc;
}

LatticeDocument load_lattice_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw precondition_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw precondition_error("invalid JSON in " + path + ": " + e.what());
    }
    return parse_lattice_document(j);
}

json to_json(const LatticeDocument& doc) {
    json j;
    if (!doc.name.empty())
        j["name"] = doc.name;
    j["gram"] = json_matrix(doc.gram);
    if (!doc.vectors.empty()) {
        json v = json::object();
        for (const auto& [key, val] : doc.vectors)
            v[key] = json_vec(val);
        j["vectors"] = v;
    }
    if (!doc.glue.empty()) {
        json g = json::array();
        for (const auto& gv : doc.glue)
            g.push_back(json_rat_vec(gv));
        j["glue"] = g;
    }
    return j;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

RowVec parse_vector_arg(const std::string& s) {
    RowVec v;
    for (const std::string& p : split(s, ',')) {
        if (p.empty())
            throw precondition_error("empty entry in vector: \"" + s + "\"");
        try {
            v.emplace_back(p);
        } catch (const std::invalid_argument&) {
            throw precondition_error("invalid integer \"" + p + "\" in vector");
        }
    }
    return v;
}

RatVec parse_rat_vector_arg(const std::string& s) {
    RatVec v;
    for (const std::string& p : split(s, ',')) {
        if (p.empty())
            throw precondition_error("empty entry in vector: \"" + s + "\"");
        try {
            Rat r(p);
            if (r.get_den() == 0)
                throw precondition_error("zero denominator in \"" + p + "\"");
            r.canonicalize();
            v.push_back(std::move(r));
        } catch (const std::invalid_argument&) {
            throw precondition_error("invalid rational \"" + p + "\" in vector");
        }
    }
    return v;
}

std::vector<RowVec> parse_span_arg(const std::string& s) {
    std::vector<RowVec> span;
    for (const std::string& p : split(s, ';'))
        span.push_back(parse_vector_arg(p));
    return span;
}

} // namespace og10lat::jsonio
