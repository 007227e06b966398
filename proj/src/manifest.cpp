#include "qalg/manifest.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qalg {

using json = nlohmann::ordered_json;

ModuleSelector ModuleSelector::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty module selector");
    ModuleSelector sel;
    std::string body = text;
    const auto at = text.find('@');
    if (at != std::string::npos) {
        body = text.substr(0, at);
        const std::string t = text.substr(at + 1);
        try {
            std::size_t pos = 0;
            sel.twist = std::stoi(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw parse_error("malformed twist in module selector '" + text + "'");
        }
    }
    if (body == "S") {
        sel.kind = Kind::all_simples;
    } else if (body.size() > 1 && body[0] == 'S') {
        sel.kind = Kind::simple_at;
        sel.label = body.substr(1);
    } else if (body.size() > 1 && body[0] == 'P') {
        sel.kind = Kind::projective_at;
        sel.label = body.substr(1);
    } else {
        throw parse_error("malformed module selector '" + text + "' (expected S, S<vertex>, or P<vertex>)");
    }
    return sel;
}

std::string ModuleSelector::str() const {
    std::string s;
    switch (kind) {
        case Kind::all_simples: s = "S"; break;
        case Kind::simple_at: s = "S" + label; break;
        case Kind::projective_at: s = "P" + label; break;
    }
    if (twist != 0) s += "@" + std::to_string(twist);
    return s;
}

Manifest parse_manifest(const std::string& text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("manifest syntax error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("cases") || !doc.at("cases").is_array())
        throw parse_error("manifest: expected an object with a 'cases' array");
    Manifest m;
    int ci = 0;
    for (const auto& c : doc.at("cases")) {
        const std::string where = "cases[" + std::to_string(ci++) + "]";
        if (!c.is_object() || !c.contains("algebra") || !c.at("algebra").is_string())
            throw parse_error(where + ": expected an object with an 'algebra' path");
        ManifestCase mc;
        const std::filesystem::path rel = c.at("algebra").get<std::string>();
        mc.algebra_path = rel.is_absolute() ? rel : base_dir / rel;
        if (c.contains("pairs")) {
            const auto& p = c.at("pairs");
            if (p.is_string()) {
                if (p.get<std::string>() != "all-simple-pairs")
                    throw parse_error(where + ": unknown pair selector '" + p.get<std::string>() + "'");
                mc.all_simple_pairs = true;
            } else if (p.is_array()) {
                mc.all_simple_pairs = false;
                for (const auto& pair : p) {
                    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
                        throw parse_error(where + ": each pair must be [\"M\", \"N\"]");
                    mc.pairs.emplace_back(ModuleSelector::parse(pair[0].get<std::string>()),
                                          ModuleSelector::parse(pair[1].get<std::string>()));
                }
            } else {
                throw parse_error(where + ": 'pairs' must be \"all-simple-pairs\" or an array");
            }
        }
        if (c.contains("i_max")) {
            if (!c.at("i_max").is_number_integer() || c.at("i_max").get<int>() < 0)
                throw parse_error(where + ": i_max must be a non-negative integer");
            mc.i_max = c.at("i_max").get<int>();
        }
        m.cases.push_back(std::move(mc));
    }
    return m;
}

Manifest parse_manifest_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str(), path.parent_path());
}

}  // namespace qalg
