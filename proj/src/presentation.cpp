#include "qalg/presentation.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace qalg {

using json = nlohmann::ordered_json;

int Quiver::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == label) return static_cast<int>(i);
    }
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

int Presentation::path_degree(const std::vector<int>& path) const {
    int d = 0;
    for (int a : path) d += quiver.arrows[static_cast<std::size_t>(a)].degree;
    return d;
}

int Presentation::path_source(const std::vector<int>& path) const {
    return quiver.arrows[static_cast<std::size_t>(path.front())].source;
}

int Presentation::path_target(const std::vector<int>& path) const {
    return quiver.arrows[static_cast<std::size_t>(path.back())].target;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

CoeffLit parse_coeff_text(const std::string& s) {
    CoeffLit c;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            c.num = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            c.den = 1;
        } else {
            std::size_t pos = 0;
            c.num = std::stoll(s.substr(0, slash), &pos);
            if (pos != slash) throw std::invalid_argument(s);
            c.den = std::stoll(s.substr(slash + 1), &pos);
            if (pos != s.size() - slash - 1) throw std::invalid_argument(s);
        }
    } catch (const std::exception&) {
        throw parse_error("malformed coefficient '" + s + "'");
    }
    if (c.den == 0) throw parse_error("coefficient with zero denominator");
    return c;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw parse_error(where + ": " + what);
}

FieldSpec parse_field(const json& j) {
    if (!j.is_string()) fail("field", "expected \"Q\" or \"F<p>\"");
    const std::string s = j.get<std::string>();
    if (s == "Q") return FieldSpec{FieldSpec::Kind::rationals, 0};
    if (s.size() >= 2 && s[0] == 'F') {
        std::int64_t p = 0;
        try {
            std::size_t pos = 0;
            p = std::stoll(s.substr(1), &pos);
            if (pos != s.size() - 1) fail("field", "malformed prime in '" + s + "'");
        } catch (const std::exception&) {
            fail("field", "malformed prime in '" + s + "'");
        }
        if (!is_prime(p)) fail("field", std::to_string(p) + " is not prime");
        return FieldSpec{FieldSpec::Kind::prime_field, p};
    }
    fail("field", "expected \"Q\" or \"F<p>\", got '" + s + "'");
}

CoeffLit parse_coeff(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        CoeffLit c;
        c.num = j.get<std::int64_t>();
        c.den = 1;
        return c;
    }
    if (j.is_string()) {
        try {
            return parse_coeff_text(j.get<std::string>());
        } catch (const parse_error& e) {
            fail(where, e.what());
        }
    }
    fail(where, "coefficient must be an integer or an \"a/b\" string");
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        if (!allowed.contains(key)) fail(where, "unknown key '" + key + "'");
    }
}

Presentation parse_document(const json& doc) {
    if (!doc.is_object()) fail("document", "top level must be an object");
    check_keys(doc, {"field", "vertices", "arrows", "relations", "options"}, "document");

    Presentation p;
    if (!doc.contains("field")) fail("document", "missing 'field'");
    p.field = parse_field(doc.at("field"));

    if (!doc.contains("vertices") || !doc.at("vertices").is_array() || doc.at("vertices").empty())
        fail("vertices", "expected a nonempty array of labels");
    for (const auto& v : doc.at("vertices")) {
        if (!v.is_string() || v.get<std::string>().empty()) fail("vertices", "labels must be nonempty strings");
        const std::string label = v.get<std::string>();
        if (p.quiver.vertex_index(label) >= 0) fail("vertices", "duplicate label '" + label + "'");
        p.quiver.vertices.push_back(label);
    }

    if (doc.contains("arrows")) {
        if (!doc.at("arrows").is_array()) fail("arrows", "expected an array");
        int ai = 0;
        for (const auto& a : doc.at("arrows")) {
            const std::string where = "arrows[" + std::to_string(ai++) + "]";
            if (!a.is_object()) fail(where, "expected an object");
            check_keys(a, {"name", "source", "target", "degree"}, where);
            Arrow arrow;
            if (!a.contains("name") || !a.at("name").is_string() || a.at("name").get<std::string>().empty())
                fail(where, "missing or malformed 'name'");
            arrow.name = a.at("name").get<std::string>();
            if (p.quiver.arrow_index(arrow.name) >= 0) fail(where, "duplicate arrow '" + arrow.name + "'");
            for (const char* endpoint : {"source", "target"}) {
                if (!a.contains(endpoint) || !a.at(endpoint).is_string())
                    fail(where, std::string("missing or malformed '") + endpoint + "'");
                const std::string label = a.at(endpoint).get<std::string>();
                const int vi = p.quiver.vertex_index(label);
                if (vi < 0) fail(where, "unknown vertex '" + label + "'");
                (std::string(endpoint) == "source" ? arrow.source : arrow.target) = vi;
            }
            arrow.degree = 1;
            if (a.contains("degree")) {
                if (!a.at("degree").is_number_integer()) fail(where, "degree must be an integer");
                arrow.degree = a.at("degree").get<int>();
            }
            if (arrow.degree < 1) fail(where, "arrow degree must be >= 1");
            p.quiver.arrows.push_back(arrow);
        }
    }

    if (doc.contains("relations")) {
        if (!doc.at("relations").is_array()) fail("relations", "expected an array");
        int ri = 0;
        for (const auto& r : doc.at("relations")) {
            const std::string rwhere = "relations[" + std::to_string(ri++) + "]";
            if (!r.is_array() || r.empty()) fail(rwhere, "expected a nonempty array of terms");
            Relation rel;
            int ti = 0;
            for (const auto& t : r) {
                const std::string twhere = rwhere + "[" + std::to_string(ti++) + "]";
                if (!t.is_object()) fail(twhere, "expected an object");
                check_keys(t, {"coeff", "path"}, twhere);
                RelationTerm term;
                term.coeff = t.contains("coeff") ? parse_coeff(t.at("coeff"), twhere) : CoeffLit{};
                if (!t.contains("path") || !t.at("path").is_array() || t.at("path").empty())
                    fail(twhere, "missing or empty 'path'");
                for (const auto& step : t.at("path")) {
                    if (!step.is_string()) fail(twhere, "path entries must be arrow names");
                    const int a = p.quiver.arrow_index(step.get<std::string>());
                    if (a < 0) fail(twhere, "unknown arrow '" + step.get<std::string>() + "'");
                    term.path.push_back(a);
                }
                for (std::size_t k = 0; k + 1 < term.path.size(); ++k) {
                    const Arrow& cur = p.quiver.arrows[static_cast<std::size_t>(term.path[k])];
                    const Arrow& nxt = p.quiver.arrows[static_cast<std::size_t>(term.path[k + 1])];
                    if (cur.target != nxt.source)
                        fail(twhere, "path is not composable at step " + std::to_string(k) + " ('" + cur.name +
                                         "' ends at '" + p.quiver.vertices[static_cast<std::size_t>(cur.target)] +
                                         "', '" + nxt.name + "' starts at '" +
                                         p.quiver.vertices[static_cast<std::size_t>(nxt.source)] + "')");
                }
                rel.terms.push_back(std::move(term));
            }
            const int src = p.path_source(rel.terms.front().path);
            const int tgt = p.path_target(rel.terms.front().path);
            const int deg = p.path_degree(rel.terms.front().path);
            for (std::size_t k = 1; k < rel.terms.size(); ++k) {
                if (p.path_source(rel.terms[k].path) != src || p.path_target(rel.terms[k].path) != tgt)
                    fail(rwhere, "terms are not parallel paths");
                if (p.path_degree(rel.terms[k].path) != deg)
                    fail(rwhere, "terms have different total degree (relations must be homogeneous)");
            }
            p.relations.push_back(std::move(rel));
        }
    }

    if (doc.contains("options")) {
        const json& o = doc.at("options");
        if (!o.is_object()) fail("options", "expected an object");
        check_keys(o, {"path_cap"}, "options");
        if (o.contains("path_cap")) {
            if (!o.at("path_cap").is_number_integer()) fail("options", "path_cap must be an integer");
            p.options.path_cap = o.at("path_cap").get<int>();
            if (p.options.path_cap < 1) fail("options", "path_cap must be >= 1");
        }
    }
    return p;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("syntax error: ") + e.what());
    }
    return parse_document(doc);
}

Presentation parse_presentation_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

std::string canonical_text(const Presentation& p) {
    json doc;
    doc["field"] = p.field.str();
    doc["vertices"] = p.quiver.vertices;
    doc["arrows"] = json::array();
    for (const Arrow& a : p.quiver.arrows) {
        doc["arrows"].push_back({{"name", a.name},
                                 {"source", p.quiver.vertices[static_cast<std::size_t>(a.source)]},
                                 {"target", p.quiver.vertices[static_cast<std::size_t>(a.target)]},
                                 {"degree", a.degree}});
    }
    doc["relations"] = json::array();
    for (const Relation& r : p.relations) {
        json rel = json::array();
        for (const RelationTerm& t : r.terms) {
            json term;
            if (t.coeff.den == 1) {
                term["coeff"] = t.coeff.num;
            } else {
                term["coeff"] = std::to_string(t.coeff.num) + "/" + std::to_string(t.coeff.den);
            }
            json path = json::array();
            for (int a : t.path) path.push_back(p.quiver.arrows[static_cast<std::size_t>(a)].name);
            term["path"] = path;
            rel.push_back(term);
        }
        doc["relations"].push_back(rel);
    }
    doc["options"] = {{"path_cap", p.options.path_cap}};
    return doc.dump(2) + "\n";
}

}  // namespace qalg
