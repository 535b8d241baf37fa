#include "pbundle/json_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <string>

#include "pbundle/errors.hpp"

namespace pbundle {

namespace {

const std::set<std::string>& threeCellKeys() {
    static const std::set<std::string> keys = {"solids",      "tetrahedra", "cells3",
                                               "three_cells", "threeCells", "volumes"};
    return keys;
}

void requireKeys(const Json& j, const std::set<std::string>& allowed, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    for (const auto& item : j.items()) {
        if (allowed.count(item.key())) continue;
        if (threeCellKeys().count(item.key()))
            throw DimensionError(std::string(what) + ": field \"" + item.key() +
                                 "\" declares 3-dimensional cells, which no 2-complex can hold");
        throw ParseError(std::string(what) + ": unknown field \"" + item.key() + "\"");
    }
}

std::string stringField(const Json& j, const char* key, const char* what) {
    if (!j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_string()) throw ParseError(std::string(what) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Int intFromJson(const Json& v, const char* what) {
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty()) throw ParseError(std::string(what) + ": empty integer string");
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) throw ParseError(std::string(what) + ": malformed integer \"" + s + "\"");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ParseError(std::string(what) + ": malformed integer \"" + s + "\"");
        return Int(s);
    }
    throw ParseError(std::string(what) + ": expected an integer");
}

Json jsonInt(const Int& n) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (n >= lo && n <= hi) return Json(static_cast<long long>(n));
    return Json(n.str());  // too wide for a JSON number, keep it exact
}

}  // namespace

CwComplex2 complexFromJson(const Json& j) {
    requireKeys(j, {"name", "vertices", "edges", "faces", "basepoint"}, "complex");
    CwComplex2 m;
    if (j.contains("name")) m.name = stringField(j, "name", "complex");

    if (!j.contains("vertices") || !j.at("vertices").is_array())
        throw ParseError("complex: \"vertices\" must be an array of strings");
    for (const Json& v : j.at("vertices")) {
        if (!v.is_string()) throw ParseError("complex: vertex labels must be strings");
        m.vertices.push_back(v.get<std::string>());
    }

    if (j.contains("edges")) {
        if (!j.at("edges").is_array()) throw ParseError("complex: \"edges\" must be an array");
        for (const Json& e : j.at("edges")) {
            requireKeys(e, {"name", "src", "dst"}, "edge");
            m.edges.push_back(Edge{stringField(e, "name", "edge"), stringField(e, "src", "edge"),
                                   stringField(e, "dst", "edge")});
        }
    }

    if (j.contains("faces")) {
        if (!j.at("faces").is_array()) throw ParseError("complex: \"faces\" must be an array");
        for (const Json& f : j.at("faces")) {
            requireKeys(f, {"name", "word"}, "face");
            Face face;
            face.name = stringField(f, "name", "face");
            if (!f.contains("word") || !f.at("word").is_array())
                throw ParseError("face \"" + face.name + "\": \"word\" must be an array");
            for (const Json& letter : f.at("word")) {
                if (!letter.is_array() || letter.size() != 2 || !letter.at(0).is_string() ||
                    !letter.at(1).is_number_integer())
                    throw ParseError("face \"" + face.name +
                                     "\": word letters must be [edge, +1|-1] pairs");
                long long sign = letter.at(1).get<long long>();
                if (sign != 1 && sign != -1)
                    throw ParseError("face \"" + face.name + "\": orientation must be +1 or -1");
                face.word.push_back({letter.at(0).get<std::string>(), static_cast<int>(sign)});
            }
            m.faces.push_back(std::move(face));
        }
    }

    m.basepoint = stringField(j, "basepoint", "complex");
    return m;
}

CwComplex2 loadComplexFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open complex file \"" + path + "\"");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("complex file \"" + path + "\": " + e.what());
    }
    return complexFromJson(j);
}

Json groupToJson(const FgAbelianGroup& g) {
    Json out;
    out["free_rank"] = g.free_rank;
    out["factors"] = Json::array();
    for (const Int& d : g.factors) out["factors"].push_back(jsonInt(d));
    return out;
}

FgAbelianGroup groupFromJson(const Json& j) {
    requireKeys(j, {"free_rank", "factors"}, "group");
    if (!j.contains("free_rank") || !j.at("free_rank").is_number_integer())
        throw ParseError("group: \"free_rank\" must be an integer");
    long long rank = j.at("free_rank").get<long long>();
    if (rank < 0) throw ParseError("group: \"free_rank\" must be nonnegative");
    std::vector<Int> factors;
    if (j.contains("factors")) {
        if (!j.at("factors").is_array()) throw ParseError("group: \"factors\" must be an array");
        for (const Json& d : j.at("factors")) {
            Int n = intFromJson(d, "group factor");
            if (n < 1) throw ParseError("group: factors must be positive");
            factors.push_back(std::move(n));
        }
    }
    long ambient = static_cast<long>(rank) + static_cast<long>(factors.size());
    return canonicalize(std::move(factors), ambient);
}

GroupDescriptor descriptorFromJson(const Json& j) {
    requireKeys(j, {"name", "pi0", "pi1", "pi0_discrete", "pi0_abelian", "trivial_action"},
                "group descriptor");
    if (!j.contains("pi0") || !j.contains("pi1"))
        throw ParseError("group descriptor: both \"pi0\" and \"pi1\" are required");
    GroupDescriptor g;
    g.pi0 = groupFromJson(j.at("pi0"));
    g.pi1 = groupFromJson(j.at("pi1"));
    g.name = j.contains("name") ? stringField(j, "name", "group descriptor") : "explicit";
    auto boolField = [&](const char* key, bool fallback) {
        if (!j.contains(key)) return fallback;
        if (!j.at(key).is_boolean())
            throw ParseError(std::string("group descriptor: \"") + key + "\" must be a boolean");
        return j.at(key).get<bool>();
    };
    g.pi0_discrete = boolField("pi0_discrete", true);
    g.pi0_abelian = boolField("pi0_abelian", true);
    g.trivial_action = boolField("trivial_action", true);
    if (g.pi0.trivial()) g.pi0_discrete = true;  // nothing to fail to be discrete
    g.provenance = Provenance::Explicit;
    return g;
}

Json resultToJson(const ClassificationResult& r) {
    Json out;
    out["complex"] = r.complex_name;
    out["group"] = r.group_name;
    out["verdict"] = verdictName(r.verdict);
    out["kernel"] = groupToJson(r.kernel_term.group);
    out["quotient"] = groupToJson(r.quotient_term.group);
    out["classified_group"] = r.classified_group ? groupToJson(*r.classified_group) : Json(nullptr);
    switch (r.cardinality.kind) {
        case Cardinality::Finite: out["cardinality"] = jsonInt(r.cardinality.value); break;
        case Cardinality::Infinite: out["cardinality"] = "infinite"; break;
        case Cardinality::Unknown: out["cardinality"] = "unknown"; break;
    }
    out["citations"] = Json::array();
    for (const std::string& c : r.citations) out["citations"].push_back(c);
    for (const std::string& c : r.applied_shortcuts) out["citations"].push_back(c);
    return out;
}

Json oracleReportToJson(const OracleReport& r) {
    auto valueToJson = [](const OracleValue& v) -> Json {
        if (std::holds_alternative<std::monostate>(v)) return Json(nullptr);
        if (std::holds_alternative<Int>(v)) return jsonInt(std::get<Int>(v));
        return groupToJson(std::get<FgAbelianGroup>(v));
    };
    Json out;
    out["subject"] = r.subject;
    out["applicable"] = r.applicable;
    out["engine"] = valueToJson(r.engine_value);
    out["oracle"] = valueToJson(r.oracle_value);
    out["agreement"] = r.agreement;
    return out;
}

}  // namespace pbundle
