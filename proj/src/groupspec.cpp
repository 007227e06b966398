#include "qalg/cartan.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

using json = nlohmann::ordered_json;

AbelianGroup k0_singularity(const IMat& c) {
    const SNFDecomposition snf = smith_normal_form(c);
    std::int64_t zeros = 0;
    std::vector<std::int64_t> torsion;
    for (const std::int64_t d : snf.diagonal()) {
        if (d == 0) {
            ++zeros;
        } else if (d > 1) {
            torsion.push_back(d);
        }
    }
    return AbelianGroup::canonical(zeros, std::move(torsion));
}

MotiveVerdict motive_triviality(const IMat& c) {
    MotiveVerdict v;
    v.det = det_exact(c);
    v.trivial = (v.det == 1 || v.det == -1);
    v.k0_sg = k0_singularity(c);
    return v;
}

GradedGroupSpec parse_group_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("group spec syntax error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("degrees") || !doc.at("degrees").is_array())
        throw parse_error("group spec: expected an object with a 'degrees' array");
    GradedGroupSpec spec;
    std::set<int> seen;
    int di = 0;
    for (const auto& entry : doc.at("degrees")) {
        const std::string where = "degrees[" + std::to_string(di++) + "]";
        if (!entry.is_object() || !entry.contains("degree") || !entry.at("degree").is_number_integer())
            throw parse_error(where + ": expected an object with an integer 'degree'");
        const int degree = entry.at("degree").get<int>();
        if (!seen.insert(degree).second) throw parse_error(where + ": duplicate degree");
        std::int64_t free_rank = 0;
        if (entry.contains("free_rank")) {
            if (!entry.at("free_rank").is_number_integer() || entry.at("free_rank").get<std::int64_t>() < 0)
                throw parse_error(where + ": free_rank must be a non-negative integer");
            free_rank = entry.at("free_rank").get<std::int64_t>();
        }
        std::vector<std::int64_t> torsion;
        if (entry.contains("torsion")) {
            if (!entry.at("torsion").is_array()) throw parse_error(where + ": torsion must be an array");
            for (const auto& t : entry.at("torsion")) {
                if (!t.is_number_integer() || t.get<std::int64_t>() < 2)
                    throw parse_error(where + ": torsion orders must be integers >= 2");
                torsion.push_back(t.get<std::int64_t>());
            }
        }
        const AbelianGroup g = AbelianGroup::canonical(free_rank, std::move(torsion));
        if (!g.is_zero()) spec.degrees[degree] = g;
    }
    return spec;
}

GradedGroupSpec parse_group_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_spec(ss.str());
}

ConeResult cone_invariant(const IMat& c, const GradedGroupSpec& spec) {
    const SNFDecomposition snf = smith_normal_form(c);
    std::vector<std::int64_t> factors;  // nonzero invariant factors
    std::int64_t zeros = 0;
    for (const std::int64_t d : snf.diagonal()) {
        if (d == 0) {
            ++zeros;
        } else {
            factors.push_back(d);
        }
    }

    // C acting diagonally on A^n is equivalent to diag(d_1..d_r, 0^zeros)
    const auto coker_on = [&](const AbelianGroup& a) {
        AbelianGroup out;
        for (const std::int64_t d : factors) out = direct_sum(out, quotient_by(a, d));
        for (std::int64_t z = 0; z < zeros; ++z) out = direct_sum(out, a);
        return out;
    };
    const auto kernel_on = [&](const AbelianGroup& a) {
        AbelianGroup out;
        for (const std::int64_t d : factors) out = direct_sum(out, kernel_of_mult(a, d));
        for (std::int64_t z = 0; z < zeros; ++z) out = direct_sum(out, a);
        return out;
    };

    ConeResult result;
    result.trivial = true;
    for (const auto& [degree, group] : spec.degrees) {
        ConeDegree& at = result.degrees[degree];
        at.cokernel_part = coker_on(group);
        ConeDegree& above = result.degrees[degree + 1];
        above.kernel_part = kernel_on(group);
    }
    for (auto it = result.degrees.begin(); it != result.degrees.end();) {
        if (it->second.cokernel_part.is_zero() && it->second.kernel_part.is_zero()) {
            it = result.degrees.erase(it);
        } else {
            result.trivial = false;
            ++it;
        }
    }
    return result;
}

}  // namespace qalg
