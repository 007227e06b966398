#pragma once

// Document-tree serialization of graded modules (basis + action matrices),
// the fixture format shared with the algebra-description documents.

#include <json.hpp>

#include "qalg/module.hpp"

namespace qalg {

namespace detail {

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const Fp& x) { return x.str(); }

}  // namespace detail

template <scalar_field K>
nlohmann::ordered_json module_to_document(const GradedModule<K>& m) {
    nlohmann::ordered_json doc;
    const Quiver& q = m.algebra->presentation.quiver;
    doc["basis"] = nlohmann::ordered_json::array();
    for (const auto& slot : m.slots) {
        doc["basis"].push_back({{"vertex", q.vertices[static_cast<std::size_t>(slot.vertex)]},
                                {"degree", slot.degree}});
    }
    doc["actions"] = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (Index i = 0; i < m.dim(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (Index j = 0; j < m.dim(); ++j) row.push_back(detail::scalar_str(m.actions[a](i, j)));
            rows.push_back(row);
        }
        doc["actions"][q.arrows[a].name] = rows;
    }
    return doc;
}

template <scalar_field K>
GradedModule<K> module_from_document(std::shared_ptr<const GradedAlgebra<K>> alg,
                                     const nlohmann::ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("basis") || !doc.at("basis").is_array())
        throw parse_error("module document: expected an object with a 'basis' array");
    GradedModule<K> m;
    m.algebra = alg;
    const Quiver& q = alg->presentation.quiver;
    for (const auto& slot : doc.at("basis")) {
        if (!slot.is_object() || !slot.contains("vertex") || !slot.contains("degree"))
            throw parse_error("module document: basis entries need 'vertex' and 'degree'");
        const int v = q.vertex_index(slot.at("vertex").get<std::string>());
        if (v < 0) throw parse_error("module document: unknown vertex");
        m.slots.push_back({v, slot.at("degree").get<int>()});
    }
    if (!doc.contains("actions") || !doc.at("actions").is_object())
        throw parse_error("module document: missing 'actions'");
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (!doc.at("actions").contains(q.arrows[a].name))
            throw parse_error("module document: missing action for arrow '" + q.arrows[a].name + "'");
        const auto& rows = doc.at("actions").at(q.arrows[a].name);
        if (!rows.is_array() || rows.size() != m.slots.size())
            throw parse_error("module document: action matrix has wrong shape");
        Mat<K> act = Mat<K>::Zero(m.dim(), m.dim());
        for (Index i = 0; i < m.dim(); ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != m.slots.size())
                throw parse_error("module document: action matrix has wrong shape");
            for (Index j = 0; j < m.dim(); ++j) {
                const auto& cell = row[static_cast<std::size_t>(j)];
                CoeffLit lit;
                if (cell.is_number_integer()) {
                    lit.num = cell.get<std::int64_t>();
                } else if (cell.is_string()) {
                    lit = parse_coeff_text(cell.get<std::string>());
                } else {
                    throw parse_error("module document: matrix entries must be integers or strings");
                }
                act(i, j) = alg->field.from_lit(lit);
            }
        }
        m.actions.push_back(std::move(act));
    }
    m.validate();
    return m;
}

}  // namespace qalg
