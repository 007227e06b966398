#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qalg/exact_linalg.hpp"
#include "qalg/presentation.hpp"

namespace qalg {

// A path is a composable sequence of arrow indices (empty = trivial path,
// disambiguated by its vertex elsewhere).
using ArrowPath = std::vector<int>;

// Length-lexicographic order: shorter first, ties by arrow indices. This is
// the monomial order of the rewriting system; it is compatible with
// concatenation, which makes every rewrite strictly decreasing.
struct LenLexLess {
    bool operator()(const ArrowPath& a, const ArrowPath& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

template <scalar_field K>
using PathCombo = std::map<ArrowPath, K, LenLexLess>;

// Basic finite-dimensional graded algebra presented by a quiver with
// homogeneous admissible relations, realized on its normal-form path basis.
template <scalar_field K>
class GradedAlgebra {
public:
    struct BasisPath {
        ArrowPath arrows;  // empty for the trivial path at `source`
        int source = 0;
        int target = 0;
        int degree = 0;
        std::string label;  // vertex label for trivial paths, arrow names joined by '*' otherwise
    };

    struct Rule {
        ArrowPath lhs;
        std::vector<std::pair<K, ArrowPath>> rhs;
    };

    using SparseVec = std::map<int, K>;  // basis index -> coefficient

    Presentation presentation;
    FieldCtx<K> field;
    std::vector<Rule> rules;
    std::vector<BasisPath> basis;                     // trivial paths first, then length-lex
    std::map<ArrowPath, int, LenLexLess> path_index;  // nonempty normal-form paths only
    std::vector<std::vector<SparseVec>> table;        // table[i][j] = b_i * b_j over the basis
    int loewy_length = 1;

    int n() const { return presentation.quiver.n(); }
    Index dim() const { return static_cast<Index>(basis.size()); }
    int trivial_index(int vertex) const { return vertex; }
    int max_arrow_degree() const {
        int d = 1;
        for (const Arrow& a : presentation.quiver.arrows) d = std::max(d, a.degree);
        return d;
    }

    // Right multiplication by b_j as a dim x dim matrix acting on row vectors.
    Mat<K> right_mult(int j) const {
        Mat<K> r = Mat<K>::Zero(dim(), dim());
        for (Index i = 0; i < dim(); ++i) {
            for (const auto& [k, c] : table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                r(i, k) = c;
            }
        }
        return r;
    }

    SparseVec multiply(const SparseVec& u, const SparseVec& v) const {
        SparseVec out;
        for (const auto& [i, ci] : u) {
            for (const auto& [j, cj] : v) {
                for (const auto& [k, ck] : table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    K& slot = out[k];
                    slot = slot + ci * cj * ck;
                    if (slot.is_zero()) out.erase(k);
                }
            }
        }
        return out;
    }

    // Normal form of a linear combination of composable paths.
    PathCombo<K> normal_form(PathCombo<K> combo) const {
        while (true) {
            const ArrowPath* chosen_path = nullptr;
            std::size_t at = 0, rule_idx = 0;
            for (auto it = combo.rbegin(); it != combo.rend(); ++it) {
                if (find_redex(it->first, at, rule_idx)) {
                    chosen_path = &it->first;
                    break;
                }
            }
            if (!chosen_path) return combo;
            const ArrowPath path = *chosen_path;
            const K coeff = combo.at(path);
            combo.erase(path);
            const Rule& rule = rules[rule_idx];
            for (const auto& [rc, rpath] : rule.rhs) {
                ArrowPath replaced;
                replaced.insert(replaced.end(), path.begin(), path.begin() + static_cast<long>(at));
                replaced.insert(replaced.end(), rpath.begin(), rpath.end());
                replaced.insert(replaced.end(), path.begin() + static_cast<long>(at + rule.lhs.size()), path.end());
                K& slot = combo[replaced];
                slot = slot + coeff * rc;
                if (slot.is_zero()) combo.erase(replaced);
            }
        }
    }

    bool is_irreducible(const ArrowPath& p) const {
        std::size_t at, rule_idx;
        return !find_redex(p, at, rule_idx);
    }

private:
    bool find_redex(const ArrowPath& p, std::size_t& at, std::size_t& rule_idx) const {
        for (std::size_t pos = 0; pos < p.size(); ++pos) {
            for (std::size_t r = 0; r < rules.size(); ++r) {
                const ArrowPath& lhs = rules[r].lhs;
                if (pos + lhs.size() > p.size()) continue;
                if (std::equal(lhs.begin(), lhs.end(), p.begin() + static_cast<long>(pos))) {
                    at = pos;
                    rule_idx = r;
                    return true;
                }
            }
        }
        return false;
    }
};

namespace detail {

template <scalar_field K>
std::string combo_str(const GradedAlgebra<K>& alg, const PathCombo<K>& combo) {
    if (combo.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [path, c] : combo) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*";
        for (std::size_t k = 0; k < path.size(); ++k) {
            if (k) os << "*";
            os << alg.presentation.quiver.arrows[static_cast<std::size_t>(path[k])].name;
        }
    }
    return os.str();
}

// All ambiguities of the rewriting system must resolve: overlaps
// (suffix/prefix) and inclusions of leading words are reduced both ways and
// compared. By the diamond lemma this certifies that the irreducible paths
// are a basis and the multiplication table is well defined.
template <scalar_field K>
void check_confluence(const GradedAlgebra<K>& alg) {
    const auto& rules = alg.rules;
    auto expand = [](const ArrowPath& prefix, const std::vector<std::pair<K, ArrowPath>>& rhs,
                     const ArrowPath& suffix) {
        PathCombo<K> c;
        for (const auto& [rc, rpath] : rhs) {
            ArrowPath w;
            w.insert(w.end(), prefix.begin(), prefix.end());
            w.insert(w.end(), rpath.begin(), rpath.end());
            w.insert(w.end(), suffix.begin(), suffix.end());
            K& slot = c[w];
            slot = slot + rc;
            if (slot.is_zero()) c.erase(w);
        }
        return c;
    };
    auto diff_is_zero = [&](PathCombo<K> a, const PathCombo<K>& b) {
        for (const auto& [w, c] : b) {
            K& slot = a[w];
            slot = slot - c;
            if (slot.is_zero()) a.erase(w);
        }
        return alg.normal_form(std::move(a));
    };

    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const ArrowPath& u = rules[i].lhs;
            const ArrowPath& v = rules[j].lhs;
            // proper overlap: a suffix of u equals a prefix of v
            for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
                if (!std::equal(v.begin(), v.begin() + static_cast<long>(k),
                                u.end() - static_cast<long>(k)))
                    continue;
                const ArrowPath tail(v.begin() + static_cast<long>(k), v.end());
                const ArrowPath head(u.begin(), u.end() - static_cast<long>(k));
                PathCombo<K> left = expand({}, rules[i].rhs, tail);
                PathCombo<K> right = expand(head, rules[j].rhs, {});
                PathCombo<K> d = diff_is_zero(alg.normal_form(std::move(left)),
                                              alg.normal_form(std::move(right)));
                if (!d.empty()) {
                    throw validation_error(
                        "ambiguous presentation: overlap of relations does not resolve; the "
                        "difference " + combo_str(alg, d) +
                        " is a consequence of the ideal. Complete the relations and retry.");
                }
            }
            // inclusion: v occurs strictly inside u
            if (i != j && v.size() < u.size()) {
                for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
                    if (!std::equal(v.begin(), v.end(), u.begin() + static_cast<long>(pos))) continue;
                    const ArrowPath head(u.begin(), u.begin() + static_cast<long>(pos));
                    const ArrowPath tail(u.begin() + static_cast<long>(pos + v.size()), u.end());
                    PathCombo<K> left;
                    for (const auto& [rc, rpath] : rules[i].rhs) {
                        K& slot = left[rpath];
                        slot = slot + rc;
                        if (slot.is_zero()) left.erase(rpath);
                    }
                    PathCombo<K> right = expand(head, rules[j].rhs, tail);
                    PathCombo<K> d = diff_is_zero(alg.normal_form(std::move(left)),
                                                  alg.normal_form(std::move(right)));
                    if (!d.empty()) {
                        throw validation_error(
                            "ambiguous presentation: relation leading terms are nested and do not "
                            "resolve; the difference " + combo_str(alg, d) +
                            " is a consequence of the ideal. Complete the relations and retry.");
                    }
                }
            }
        }
    }
}

}  // namespace detail

template <scalar_field K>
GradedAlgebra<K> build_algebra(const Presentation& pres, FieldCtx<K> field) {
    if (!FieldCtx<K>::matches(pres.field))
        throw internal_error("scalar type does not match the presentation's field");
    GradedAlgebra<K> alg;
    alg.presentation = pres;
    alg.field = field;
    const Quiver& q = pres.quiver;

    // orient relations: the length-lex-largest term becomes the leading word
    for (const Relation& rel : pres.relations) {
        PathCombo<K> combo;
        for (const RelationTerm& t : rel.terms) {
            const K c = field.from_lit(t.coeff);
            if (c.is_zero()) continue;
            K& slot = combo[t.path];
            slot = slot + c;
            if (slot.is_zero()) combo.erase(t.path);
        }
        if (combo.empty()) continue;  // the zero relation
        for (const auto& [path, c] : combo) {
            if (path.size() < 2)
                throw validation_error("relation involves a path of length < 2 (ideal not admissible)");
        }
        const ArrowPath lead = combo.rbegin()->first;
        const K lead_coeff = combo.rbegin()->second;
        typename GradedAlgebra<K>::Rule rule;
        rule.lhs = lead;
        const K scale = -(field.one() / lead_coeff);
        for (const auto& [path, c] : combo) {
            if (path == lead) continue;
            rule.rhs.emplace_back(scale * c, path);
        }
        bool duplicate = false;
        for (const auto& existing : alg.rules) {
            if (existing.lhs != rule.lhs) continue;
            if (existing.rhs == rule.rhs) {
                duplicate = true;
                break;
            }
            throw validation_error(
                "ambiguous presentation: two relations share the leading word but differ; "
                "combine them and complete the relations");
        }
        if (!duplicate) alg.rules.push_back(std::move(rule));
    }

    detail::check_confluence(alg);

    // trivial paths
    for (int v = 0; v < q.n(); ++v) {
        typename GradedAlgebra<K>::BasisPath bp;
        bp.source = bp.target = v;
        bp.degree = 0;
        bp.label = q.vertices[static_cast<std::size_t>(v)];
        alg.basis.push_back(std::move(bp));
    }

    // irreducible nonempty paths, level by level; a path whose prefix is
    // irreducible is reducible only via a rule matching its tail
    std::vector<ArrowPath> level;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        ArrowPath p{static_cast<int>(a)};
        if (alg.is_irreducible(p)) level.push_back(std::move(p));
    }
    int length = 1;
    while (!level.empty()) {
        if (length > pres.options.path_cap) {
            throw validation_error(
                "arrow ideal is not nilpotent within path_cap = " +
                std::to_string(pres.options.path_cap) + " (infinite-dimensional or cap too small)");
        }
        for (const ArrowPath& p : level) {
            typename GradedAlgebra<K>::BasisPath bp;
            bp.arrows = p;
            bp.source = q.arrows[static_cast<std::size_t>(p.front())].source;
            bp.target = q.arrows[static_cast<std::size_t>(p.back())].target;
            bp.degree = pres.path_degree(p);
            for (std::size_t k = 0; k < p.size(); ++k) {
                if (k) bp.label += "*";
                bp.label += q.arrows[static_cast<std::size_t>(p[k])].name;
            }
            alg.path_index.emplace(p, static_cast<int>(alg.basis.size()));
            alg.basis.push_back(std::move(bp));
        }
        std::vector<ArrowPath> next;
        for (const ArrowPath& p : level) {
            const int at_vertex = q.arrows[static_cast<std::size_t>(p.back())].target;
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].source != at_vertex) continue;
                ArrowPath ext = p;
                ext.push_back(static_cast<int>(a));
                bool reducible = false;
                for (const auto& rule : alg.rules) {
                    if (rule.lhs.size() > ext.size()) continue;
                    if (std::equal(rule.lhs.begin(), rule.lhs.end(),
                                   ext.end() - static_cast<long>(rule.lhs.size()))) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
        ++length;
    }

    // multiplication table
    const Index dim = alg.dim();
    alg.table.assign(static_cast<std::size_t>(dim),
                     std::vector<typename GradedAlgebra<K>::SparseVec>(static_cast<std::size_t>(dim)));
    for (Index i = 0; i < dim; ++i) {
        const auto& bi = alg.basis[static_cast<std::size_t>(i)];
        for (Index j = 0; j < dim; ++j) {
            const auto& bj = alg.basis[static_cast<std::size_t>(j)];
            if (bi.target != bj.source) continue;
            typename GradedAlgebra<K>::SparseVec out;
            if (bi.arrows.empty() || bj.arrows.empty()) {
                out[static_cast<int>(bi.arrows.empty() ? j : i)] = field.one();
            } else {
                ArrowPath prod = bi.arrows;
                prod.insert(prod.end(), bj.arrows.begin(), bj.arrows.end());
                PathCombo<K> start;
                start[prod] = field.one();
                for (const auto& [path, c] : alg.normal_form(std::move(start))) {
                    const auto it = alg.path_index.find(path);
                    if (it == alg.path_index.end())
                        throw internal_error("normal form produced a path outside the computed basis");
                    out[it->second] = c;
                }
            }
            alg.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(out);
        }
    }

    // Loewy length: least N with rad^N = 0, by iterating right multiplication
    // by the arrows on a subspace basis
    Mat<K> power = Mat<K>::Identity(dim, dim);
    int loewy = 0;
    while (power.rows() > 0) {
        ++loewy;
        std::vector<Mat<K>> images;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const auto it = alg.path_index.find(ArrowPath{static_cast<int>(a)});
            if (it == alg.path_index.end()) continue;  // arrow killed by a rule: impossible, lhs >= 2
            images.push_back(power * alg.right_mult(it->second));
        }
        Mat<K> stacked(0, dim);
        for (const auto& m : images) stacked = vstack(stacked, m);
        power = reduced_row_echelon(stacked).rows;
        if (loewy > pres.options.path_cap + 1)
            throw internal_error("radical power iteration failed to terminate");
    }
    alg.loewy_length = loewy;
    return alg;
}

// rad(Lambda)^m as an echelonized row basis over the path basis.
template <scalar_field K>
Mat<K> radical_power(const GradedAlgebra<K>& alg, int m) {
    Mat<K> power = Mat<K>::Identity(alg.dim(), alg.dim());
    for (int step = 0; step < m && power.rows() > 0; ++step) {
        Mat<K> stacked(0, alg.dim());
        for (std::size_t a = 0; a < alg.presentation.quiver.arrows.size(); ++a) {
            const auto it = alg.path_index.find(ArrowPath{static_cast<int>(a)});
            if (it == alg.path_index.end()) continue;
            stacked = vstack<K>(stacked, power * alg.right_mult(it->second));
        }
        power = reduced_row_echelon(stacked).rows;
    }
    return power;
}

struct GradingClause {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct GradingReport {
    std::vector<GradingClause> clauses;
    bool all_pass = false;
};

template <scalar_field K>
GradingReport validate_grading(const GradedAlgebra<K>& alg) {
    GradingReport report;
    auto add = [&report](const std::string& name, bool pass, const std::string& detail) {
        report.clauses.push_back({name, pass, detail});
    };
    const Index dim = alg.dim();
    const int n = alg.n();

    {
        bool ok = true;
        for (const auto& b : alg.basis) ok = ok && b.degree >= 0;
        add("nonnegative_degrees", ok, "all basis elements sit in degree >= 0");
    }
    {
        int zero_count = 0;
        bool only_trivial = true;
        for (std::size_t i = 0; i < alg.basis.size(); ++i) {
            if (alg.basis[i].degree == 0) {
                ++zero_count;
                only_trivial = only_trivial && alg.basis[i].arrows.empty();
            }
        }
        add("degree_zero_is_trivial_span", only_trivial && zero_count == n,
            "degree-0 part is spanned by the " + std::to_string(n) + " trivial paths");
    }
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = 0; j < n && ok; ++j) {
                const auto& prod = alg.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (i == j) {
                    ok = prod.size() == 1 && prod.begin()->first == i && prod.begin()->second.is_one();
                } else {
                    ok = prod.empty();
                }
            }
        }
        // the trivial paths must act as the identity, i.e. they sum to 1
        for (Index b = 0; b < dim && ok; ++b) {
            const auto& bp = alg.basis[static_cast<std::size_t>(b)];
            const auto& left = alg.table[static_cast<std::size_t>(bp.source)][static_cast<std::size_t>(b)];
            const auto& right = alg.table[static_cast<std::size_t>(b)][static_cast<std::size_t>(bp.target)];
            ok = left.size() == 1 && left.begin()->first == b && left.begin()->second.is_one() &&
                 right.size() == 1 && right.begin()->first == b && right.begin()->second.is_one();
        }
        add("orthogonal_idempotents_sum_to_one", ok,
            "trivial paths are orthogonal idempotents acting as the identity");
    }
    {
        const Mat<K> radpow = radical_power(alg, alg.loewy_length);
        add("positive_part_nilpotent", radpow.rows() == 0,
            "rad^" + std::to_string(alg.loewy_length) + " = 0");
    }
    {
        // with the two clauses above, Lambda / Lambda_{>=1} is spanned by n
        // orthogonal idempotents, hence isomorphic to k^n
        const bool prereq = report.clauses[1].pass && report.clauses[2].pass;
        add("quotient_semisimple", prereq, "Lambda / rad = k^" + std::to_string(n));
    }
    {
        bool ok = true;
        for (Index x = 0; x < dim && ok; ++x) {
            for (Index y = 0; y < dim && ok; ++y) {
                for (Index z = 0; z < dim && ok; ++z) {
                    typename GradedAlgebra<K>::SparseVec ux{{static_cast<int>(x), alg.field.one()}};
                    typename GradedAlgebra<K>::SparseVec uy{{static_cast<int>(y), alg.field.one()}};
                    typename GradedAlgebra<K>::SparseVec uz{{static_cast<int>(z), alg.field.one()}};
                    ok = alg.multiply(alg.multiply(ux, uy), uz) == alg.multiply(ux, alg.multiply(uy, uz));
                }
            }
        }
        add("associativity_exhaustive", ok, "(ab)c = a(bc) for all basis triples");
    }
    {
        bool ok = true;
        for (Index i = 0; i < dim && ok; ++i) {
            for (Index j = 0; j < dim && ok; ++j) {
                const int d = alg.basis[static_cast<std::size_t>(i)].degree +
                              alg.basis[static_cast<std::size_t>(j)].degree;
                for (const auto& [k, c] : alg.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    (void)c;
                    ok = ok && alg.basis[static_cast<std::size_t>(k)].degree == d;
                }
            }
        }
        add("grading_multiplicative", ok, "deg(ab) = deg(a) + deg(b) on the table");
    }
    {
        Index total = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (const auto& b : alg.basis) {
                    if (b.source == i && b.target == j) ++total;
                }
            }
        }
        add("dimension_sum", total == dim, "dim = sum over vertex pairs of dim e_i A e_j");
    }

    report.all_pass = true;
    for (const auto& c : report.clauses) report.all_pass = report.all_pass && c.pass;
    return report;
}

}  // namespace qalg
