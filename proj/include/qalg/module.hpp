#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qalg/algebra.hpp"

namespace qalg {

// (vertex, internal degree) stratum of a graded module's basis.
using Stratum = std::pair<int, int>;

// Finite-dimensional graded right module, presented on an ordered basis of
// homogeneous vectors with one action matrix per arrow. Action matrices act
// on row vectors of coefficients: coords(m * a) = coords(m) * action[a].
template <scalar_field K>
class GradedModule {
public:
    struct Slot {
        int vertex = 0;
        int degree = 0;
        friend bool operator==(const Slot&, const Slot&) = default;
    };

    std::shared_ptr<const GradedAlgebra<K>> algebra;
    std::vector<Slot> slots;
    std::vector<Mat<K>> actions;  // indexed by arrow

    Index dim() const { return static_cast<Index>(slots.size()); }
    bool is_zero() const { return slots.empty(); }

    static GradedModule zero(std::shared_ptr<const GradedAlgebra<K>> alg) {
        GradedModule m;
        m.algebra = std::move(alg);
        m.actions.assign(m.algebra->presentation.quiver.arrows.size(), Mat<K>::Zero(0, 0));
        return m;
    }

    Mat<K> path_action(const ArrowPath& path) const {
        Mat<K> r = Mat<K>::Identity(dim(), dim());
        for (int a : path) r = Mat<K>(r * actions[static_cast<std::size_t>(a)]);
        return r;
    }

    std::map<Stratum, std::vector<Index>> strata() const {
        std::map<Stratum, std::vector<Index>> s;
        for (Index i = 0; i < dim(); ++i) {
            s[{slots[static_cast<std::size_t>(i)].vertex, slots[static_cast<std::size_t>(i)].degree}]
                .push_back(i);
        }
        return s;
    }

    // Checks the action pattern (vertex support, degree shifts) and that every
    // relation acts as zero.
    void validate() const {
        const Quiver& q = algebra->presentation.quiver;
        if (actions.size() != q.arrows.size())
            throw validation_error("module has wrong number of action matrices");
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const Mat<K>& act = actions[a];
            if (act.rows() != dim() || act.cols() != dim())
                throw validation_error("action matrix has wrong shape");
            for (Index r = 0; r < dim(); ++r) {
                for (Index c = 0; c < dim(); ++c) {
                    if (act(r, c).is_zero()) continue;
                    const Slot& from = slots[static_cast<std::size_t>(r)];
                    const Slot& to = slots[static_cast<std::size_t>(c)];
                    if (from.vertex != q.arrows[a].source || to.vertex != q.arrows[a].target)
                        throw validation_error("action does not respect vertex supports");
                    if (to.degree != from.degree + q.arrows[a].degree)
                        throw validation_error("action does not raise internal degree by the arrow degree");
                }
            }
        }
        for (const Relation& rel : algebra->presentation.relations) {
            Mat<K> sum = Mat<K>::Zero(dim(), dim());
            for (const RelationTerm& t : rel.terms) {
                sum = Mat<K>(sum + algebra->field.from_lit(t.coeff) * path_action(t.path));
            }
            if (!is_zero_mat(sum)) throw validation_error("a relation does not act as zero");
        }
    }
};

// Degree-0 morphism of graded modules, as a source-dim x target-dim matrix on
// row coordinate vectors.
template <scalar_field K>
struct GradedMorphism {
    GradedModule<K> source;
    GradedModule<K> target;
    Mat<K> matrix;

    void validate() const {
        if (source.algebra.get() != target.algebra.get()) throw validation_error("algebra mismatch");
        for (Index r = 0; r < source.dim(); ++r) {
            for (Index c = 0; c < target.dim(); ++c) {
                if (matrix(r, c).is_zero()) continue;
                if (!(source.slots[static_cast<std::size_t>(r)].vertex ==
                          target.slots[static_cast<std::size_t>(c)].vertex &&
                      source.slots[static_cast<std::size_t>(r)].degree ==
                          target.slots[static_cast<std::size_t>(c)].degree))
                    throw validation_error("morphism is not of degree zero");
            }
        }
        for (std::size_t a = 0; a < source.actions.size(); ++a) {
            const Mat<K> lhs = source.actions[a] * matrix;
            const Mat<K> rhs = matrix * target.actions[a];
            if (!is_zero_mat(Mat<K>(lhs - rhs)))
                throw validation_error("morphism does not commute with the arrow actions");
        }
    }
};

template <scalar_field K>
GradedModule<K> simple(std::shared_ptr<const GradedAlgebra<K>> alg, int vertex) {
    if (vertex < 0 || vertex >= alg->n()) throw validation_error("vertex index out of range");
    GradedModule<K> m;
    m.algebra = std::move(alg);
    m.slots = {{vertex, 0}};
    m.actions.assign(m.algebra->presentation.quiver.arrows.size(), Mat<K>::Zero(1, 1));
    return m;
}

// P_i = e_i Lambda on the normal-form paths starting at vertex i, graded by
// path degree, with the right action given by the multiplication table.
template <scalar_field K>
GradedModule<K> projective(std::shared_ptr<const GradedAlgebra<K>> alg, int vertex) {
    if (vertex < 0 || vertex >= alg->n()) throw validation_error("vertex index out of range");
    GradedModule<K> m;
    m.algebra = alg;
    std::vector<Index> global;  // algebra basis indices with source == vertex
    std::map<Index, Index> local;
    for (Index b = 0; b < alg->dim(); ++b) {
        if (alg->basis[static_cast<std::size_t>(b)].source == vertex) {
            local[b] = static_cast<Index>(global.size());
            global.push_back(b);
            m.slots.push_back({alg->basis[static_cast<std::size_t>(b)].target,
                               alg->basis[static_cast<std::size_t>(b)].degree});
        }
    }
    const Quiver& q = alg->presentation.quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        Mat<K> act = Mat<K>::Zero(m.dim(), m.dim());
        const auto arrow_it = alg->path_index.find(ArrowPath{static_cast<int>(a)});
        if (arrow_it != alg->path_index.end()) {
            for (Index r = 0; r < m.dim(); ++r) {
                const auto gi = static_cast<std::size_t>(global[static_cast<std::size_t>(r)]);
                for (const auto& [k, c] : alg->table[gi][static_cast<std::size_t>(arrow_it->second)]) {
                    act(r, local.at(k)) = c;
                }
            }
        }
        m.actions.push_back(std::move(act));
    }
    return m;
}

// N(t): reindexes the grading so that twist(N, t) has dimensions
// twist(N, t)_j = N_{t+j}; each basis degree decreases by t.
template <scalar_field K>
GradedModule<K> twist(GradedModule<K> m, int t) {
    for (auto& s : m.slots) s.degree -= t;
    return m;
}

template <scalar_field K>
GradedModule<K> direct_sum(const GradedModule<K>& a, const GradedModule<K>& b) {
    if (a.algebra.get() != b.algebra.get()) throw validation_error("algebra mismatch");
    GradedModule<K> m;
    m.algebra = a.algebra;
    m.slots = a.slots;
    m.slots.insert(m.slots.end(), b.slots.begin(), b.slots.end());
    for (std::size_t x = 0; x < a.actions.size(); ++x) {
        Mat<K> act = Mat<K>::Zero(m.dim(), m.dim());
        act.topLeftCorner(a.dim(), a.dim()) = a.actions[x];
        act.bottomRightCorner(b.dim(), b.dim()) = b.actions[x];
        m.actions.push_back(std::move(act));
    }
    return m;
}

template <scalar_field K>
std::vector<long> composition_multiplicities(const GradedModule<K>& m) {
    std::vector<long> mult(static_cast<std::size_t>(m.algebra->n()), 0);
    for (const auto& s : m.slots) ++mult[static_cast<std::size_t>(s.vertex)];
    return mult;
}

// Echelonized family of homogeneous row vectors inside a module, organized
// stratum by stratum so that quotients and induced actions stay graded.
template <scalar_field K>
struct GradedSubspace {
    struct Block {
        Stratum stratum;
        std::vector<Index> cols;  // parent slot indices of the stratum, in basis order
        Echelon<K> ech;           // echelon over the local columns
        Index row_offset = 0;     // index of this block's first row in the assembled basis
    };
    std::vector<Block> blocks;  // sorted by stratum
    Index parent_dim = 0;
    Index total_rank = 0;

    Mat<K> global_rows() const {
        Mat<K> rows = Mat<K>::Zero(total_rank, parent_dim);
        for (const Block& b : blocks) {
            for (Index r = 0; r < b.ech.rank(); ++r) {
                for (std::size_t c = 0; c < b.cols.size(); ++c) {
                    rows(b.row_offset + r, b.cols[c]) = b.ech.rows(r, static_cast<Index>(c));
                }
            }
        }
        return rows;
    }

    std::vector<Stratum> row_strata() const {
        std::vector<Stratum> s;
        for (const Block& b : blocks) {
            for (Index r = 0; r < b.ech.rank(); ++r) s.push_back(b.stratum);
        }
        return s;
    }

    // Expresses homogeneous global rows over the assembled basis; nullopt if
    // any row falls outside the span.
    std::optional<Mat<K>> express(const Mat<K>& rows,
                                  const std::vector<Stratum>& strata_of_rows) const {
        Mat<K> x = Mat<K>::Zero(rows.rows(), total_rank);
        for (Index i = 0; i < rows.rows(); ++i) {
            const Block* blk = nullptr;
            for (const Block& b : blocks) {
                if (b.stratum == strata_of_rows[static_cast<std::size_t>(i)]) {
                    blk = &b;
                    break;
                }
            }
            RowVec<K> local;
            if (blk) {
                local = RowVec<K>::Zero(static_cast<Index>(blk->cols.size()));
                for (std::size_t c = 0; c < blk->cols.size(); ++c) local(static_cast<Index>(c)) = rows(i, blk->cols[c]);
            }
            if (!blk) {
                // no block for this stratum: the row must be zero
                if (!is_zero_row(RowVec<K>(rows.row(i)))) return std::nullopt;
                continue;
            }
            auto coeffs = express_rows(blk->ech, Mat<K>(local));
            if (!coeffs) return std::nullopt;
            for (Index r = 0; r < blk->ech.rank(); ++r) x(i, blk->row_offset + r) = (*coeffs)(0, r);
        }
        return x;
    }
};

namespace detail {

template <scalar_field K>
Stratum stratum_of_row(const GradedModule<K>& m, const RowVec<K>& row) {
    Stratum s{-1, 0};
    bool found = false;
    for (Index c = 0; c < row.cols(); ++c) {
        if (row(c).is_zero()) continue;
        const Stratum cs{m.slots[static_cast<std::size_t>(c)].vertex,
                         m.slots[static_cast<std::size_t>(c)].degree};
        if (!found) {
            s = cs;
            found = true;
        } else if (cs != s) {
            throw internal_error("row is not homogeneous");
        }
    }
    return found ? s : Stratum{-1, 0};
}

}  // namespace detail

// Spans homogeneous rows inside m, echelonizing per stratum.
template <scalar_field K>
GradedSubspace<K> stratified_span(const GradedModule<K>& m, const Mat<K>& rows) {
    std::map<Stratum, std::vector<Index>> by_stratum;
    for (Index i = 0; i < rows.rows(); ++i) {
        const Stratum s = detail::stratum_of_row(m, RowVec<K>(rows.row(i)));
        if (s.first < 0) continue;  // zero row
        by_stratum[s].push_back(i);
    }
    const auto cols_by_stratum = m.strata();
    GradedSubspace<K> sub;
    sub.parent_dim = m.dim();
    for (const auto& [s, row_ids] : by_stratum) {
        typename GradedSubspace<K>::Block blk;
        blk.stratum = s;
        blk.cols = cols_by_stratum.at(s);
        Mat<K> local(static_cast<Index>(row_ids.size()), static_cast<Index>(blk.cols.size()));
        for (std::size_t r = 0; r < row_ids.size(); ++r) {
            for (std::size_t c = 0; c < blk.cols.size(); ++c) {
                local(static_cast<Index>(r), static_cast<Index>(c)) = rows(row_ids[r], blk.cols[c]);
            }
        }
        blk.ech = reduced_row_echelon(std::move(local));
        if (blk.ech.rank() == 0) continue;
        blk.row_offset = sub.total_rank;
        sub.total_rank += blk.ech.rank();
        sub.blocks.push_back(std::move(blk));
    }
    return sub;
}

template <scalar_field K>
struct Submodule {
    GradedModule<K> module;
    Mat<K> inclusion;  // module.dim() x parent.dim()
};

// Builds the module structure on a subspace that is closed under the action.
template <scalar_field K>
Submodule<K> submodule_from_span(const GradedModule<K>& parent, const GradedSubspace<K>& span) {
    Submodule<K> sub;
    sub.module.algebra = parent.algebra;
    const auto strata = span.row_strata();
    for (const Stratum& s : strata) sub.module.slots.push_back({s.first, s.second});
    sub.inclusion = span.global_rows();
    const Quiver& q = parent.algebra->presentation.quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const Mat<K> image = sub.inclusion * parent.actions[a];
        std::vector<Stratum> image_strata;
        image_strata.reserve(strata.size());
        for (const Stratum& s : strata) image_strata.push_back({q.arrows[a].target, s.second + q.arrows[a].degree});
        auto induced = span.express(image, image_strata);
        if (!induced) throw internal_error("subspace is not closed under the arrow actions");
        sub.module.actions.push_back(std::move(*induced));
    }
    return sub;
}

// rad(M) = M * Lambda_{>=1}, the span of all arrow-action images.
template <scalar_field K>
Submodule<K> radical_submodule(const GradedModule<K>& m) {
    Mat<K> rows(0, m.dim());
    for (const Mat<K>& act : m.actions) rows = vstack(rows, Mat<K>(act));
    return submodule_from_span(m, stratified_span(m, rows));
}

template <scalar_field K>
GradedModule<K> radical(const GradedModule<K>& m) {
    return radical_submodule(m).module;
}

template <scalar_field K>
struct Quotient {
    GradedModule<K> module;          // semisimple: all actions zero
    Mat<K> projection;               // parent.dim() x module.dim()
    std::vector<Index> rep_slots;    // parent slot index representing each quotient basis vector
};

// top(M) = M / rad(M). Representatives are the non-pivot basis slots of each
// stratum, so lifts are unit coordinate vectors.
template <scalar_field K>
Quotient<K> top(const GradedModule<K>& m) {
    const GradedSubspace<K> rad = stratified_span(m, [&] {
        Mat<K> rows(0, m.dim());
        for (const Mat<K>& act : m.actions) rows = vstack(rows, Mat<K>(act));
        return rows;
    }());

    Quotient<K> q;
    q.module.algebra = m.algebra;

    const auto cols_by_stratum = m.strata();
    // per stratum: local reduction data
    std::map<Stratum, const typename GradedSubspace<K>::Block*> rad_blocks;
    for (const auto& b : rad.blocks) rad_blocks[b.stratum] = &b;

    std::vector<std::pair<Index, Stratum>> reps;  // (parent slot, stratum), stratum-ordered
    std::map<Index, Index> rep_index;
    for (const auto& [s, cols] : cols_by_stratum) {
        const auto* blk = rad_blocks.count(s) ? rad_blocks.at(s) : nullptr;
        std::size_t pi = 0;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const bool is_pivot = blk && pi < blk->ech.pivots.size() &&
                                  blk->ech.pivots[pi] == static_cast<Index>(c);
            if (is_pivot) {
                ++pi;
                continue;
            }
            rep_index[cols[c]] = static_cast<Index>(reps.size());
            reps.emplace_back(cols[c], s);
        }
    }
    for (const auto& [slot, s] : reps) {
        (void)slot;
        q.module.slots.push_back({s.first, s.second});
    }
    q.module.actions.assign(m.actions.size(), Mat<K>::Zero(q.module.dim(), q.module.dim()));
    q.rep_slots.reserve(reps.size());
    for (const auto& [slot, s] : reps) {
        (void)s;
        q.rep_slots.push_back(slot);
    }

    // projection: reduce each unit vector against the radical echelon of its
    // stratum; the residual is supported on representative columns
    q.projection = Mat<K>::Zero(m.dim(), q.module.dim());
    for (const auto& [s, cols] : cols_by_stratum) {
        const auto* blk = rad_blocks.count(s) ? rad_blocks.at(s) : nullptr;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            RowVec<K> local = RowVec<K>::Zero(static_cast<Index>(cols.size()));
            local(static_cast<Index>(c)) = K(1);
            if (blk) local = reduce_against(blk->ech, std::move(local));
            for (std::size_t d = 0; d < cols.size(); ++d) {
                if (local(static_cast<Index>(d)).is_zero()) continue;
                q.projection(cols[c], rep_index.at(cols[d])) = local(static_cast<Index>(d));
            }
        }
    }
    return q;
}

// One indecomposable projective summand P_vertex(twist); the generator sits
// in internal degree -twist.
struct ProjTerm {
    int vertex = 0;
    int twist = 0;
    friend bool operator==(const ProjTerm&, const ProjTerm&) = default;
    friend auto operator<=>(const ProjTerm&, const ProjTerm&) = default;
};

template <scalar_field K>
struct Cover {
    GradedModule<K> proj;
    Mat<K> pi;  // proj.dim() x target.dim()
    std::vector<ProjTerm> terms;
    std::vector<Index> gen_slots;  // slot of each summand's generator inside proj
    bool zero_module = false;      // cover of the zero module, flagged not an error
};

template <scalar_field K>
Cover<K> projective_cover(const GradedModule<K>& m) {
    Cover<K> cover;
    if (m.is_zero()) {
        cover.proj = GradedModule<K>::zero(m.algebra);
        cover.pi = Mat<K>::Zero(0, 0);
        cover.zero_module = true;
        return cover;
    }
    const Quotient<K> t = top(m);
    cover.proj = GradedModule<K>::zero(m.algebra);
    std::vector<Index> offsets;
    for (Index k = 0; k < t.module.dim(); ++k) {
        const auto& slot = t.module.slots[static_cast<std::size_t>(k)];
        offsets.push_back(cover.proj.dim());
        cover.terms.push_back({slot.vertex, -slot.degree});
        cover.proj = direct_sum(cover.proj, twist(projective(m.algebra, slot.vertex), -slot.degree));
    }
    // the trivial path is the first slot of each projective summand
    cover.gen_slots = offsets;

    cover.pi = Mat<K>::Zero(cover.proj.dim(), m.dim());
    for (Index k = 0; k < t.module.dim(); ++k) {
        const int v = t.module.slots[static_cast<std::size_t>(k)].vertex;
        const Index off = offsets[static_cast<std::size_t>(k)];
        // image of each basis path extends the image of its prefix by one arrow
        std::map<ArrowPath, Index, LenLexLess> local_of;
        Index local = 0;
        for (Index b = 0; b < m.algebra->dim(); ++b) {
            const auto& bp = m.algebra->basis[static_cast<std::size_t>(b)];
            if (bp.source != v) continue;
            if (bp.arrows.empty()) {
                RowVec<K> lift = RowVec<K>::Zero(m.dim());
                lift(t.rep_slots[static_cast<std::size_t>(k)]) = K(1);
                cover.pi.row(off + local) = lift;
            } else {
                ArrowPath prefix(bp.arrows.begin(), bp.arrows.end() - 1);
                const Index prefix_local = prefix.empty() ? 0 : local_of.at(prefix);
                cover.pi.row(off + local) =
                    cover.pi.row(off + prefix_local) *
                    m.actions[static_cast<std::size_t>(bp.arrows.back())];
            }
            local_of.emplace(bp.arrows, local);
            ++local;
        }
    }
    if (rank_of(Mat<K>(cover.pi)) != m.dim())
        throw internal_error("projective cover fails to surject");
    return cover;
}

// Kernel of a degree-0 morphism, stratum by stratum.
template <scalar_field K>
GradedSubspace<K> graded_kernel(const GradedModule<K>& source, const GradedModule<K>& target,
                                const Mat<K>& h) {
    const auto source_strata = source.strata();
    const auto target_strata = target.strata();
    Mat<K> rows(0, source.dim());
    for (const auto& [s, cols] : source_strata) {
        const std::vector<Index>* tcols =
            target_strata.count(s) ? &target_strata.at(s) : nullptr;
        Mat<K> local(static_cast<Index>(cols.size()),
                     tcols ? static_cast<Index>(tcols->size()) : 0);
        for (std::size_t r = 0; r < cols.size(); ++r) {
            for (std::size_t c = 0; tcols && c < tcols->size(); ++c) {
                local(static_cast<Index>(r), static_cast<Index>(c)) = h(cols[r], (*tcols)[c]);
            }
        }
        const Mat<K> lk = left_kernel(local);
        Mat<K> globalized = Mat<K>::Zero(lk.rows(), source.dim());
        for (Index r = 0; r < lk.rows(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                globalized(r, cols[c]) = lk(r, static_cast<Index>(c));
            }
        }
        rows = vstack(rows, globalized);
    }
    return stratified_span(source, rows);
}

// Morphism space Hom_{gr}(M, N) in degree 0: all matrices supported on
// matching strata that commute with every arrow action, solved exactly.
template <scalar_field K>
struct HomSpace {
    long dimension = 0;
    std::vector<Mat<K>> basis;
    std::vector<std::pair<Index, Index>> unknowns;  // (source slot, target slot), row-major
    std::vector<Index> free_unknowns;               // positions carrying the basis coefficients

    // Coordinates of a morphism in this basis (reads the free unknowns).
    RowVec<K> coordinates(const Mat<K>& h) const {
        RowVec<K> x = RowVec<K>::Zero(static_cast<Index>(free_unknowns.size()));
        for (std::size_t i = 0; i < free_unknowns.size(); ++i) {
            const auto& [r, c] = unknowns[static_cast<std::size_t>(free_unknowns[i])];
            x(static_cast<Index>(i)) = h(r, c);
        }
        return x;
    }
};

template <scalar_field K>
HomSpace<K> hom_graded(const GradedModule<K>& m, const GradedModule<K>& n) {
    if (m.algebra.get() != n.algebra.get()) throw validation_error("algebra mismatch");
    HomSpace<K> hom;
    for (Index r = 0; r < m.dim(); ++r) {
        for (Index c = 0; c < n.dim(); ++c) {
            if (m.slots[static_cast<std::size_t>(r)].vertex == n.slots[static_cast<std::size_t>(c)].vertex &&
                m.slots[static_cast<std::size_t>(r)].degree == n.slots[static_cast<std::size_t>(c)].degree) {
                hom.unknowns.emplace_back(r, c);
            }
        }
    }
    const Index u = static_cast<Index>(hom.unknowns.size());
    const std::size_t arrows = m.actions.size();
    Mat<K> constraints = Mat<K>::Zero(static_cast<Index>(arrows) * m.dim() * n.dim(), u);
    Index eq = 0;
    for (std::size_t a = 0; a < arrows; ++a) {
        // (actM_a H - H actN_a)(i, j) = 0
        for (Index i = 0; i < m.dim(); ++i) {
            for (Index j = 0; j < n.dim(); ++j) {
                for (Index k = 0; k < u; ++k) {
                    const auto& [r, c] = hom.unknowns[static_cast<std::size_t>(k)];
                    K coeff = K(0);
                    if (c == j) coeff = coeff + m.actions[a](i, r);
                    if (r == i) coeff = coeff - n.actions[a](c, j);
                    constraints(eq, k) = coeff;
                }
                ++eq;
            }
        }
    }
    // kernel from the echelon's free columns; each basis morphism is unit at
    // its own free unknown and zero at every other free unknown
    const Echelon<K> e = reduced_row_echelon(constraints);
    std::size_t pi = 0;
    for (Index k = 0; k < u; ++k) {
        if (pi < e.pivots.size() && e.pivots[pi] == k) {
            ++pi;
        } else {
            hom.free_unknowns.push_back(k);
        }
    }
    hom.dimension = static_cast<long>(hom.free_unknowns.size());
    for (const Index f : hom.free_unknowns) {
        Mat<K> h = Mat<K>::Zero(m.dim(), n.dim());
        {
            const auto& [r, c] = hom.unknowns[static_cast<std::size_t>(f)];
            h(r, c) = K(1);
        }
        for (Index r = 0; r < e.rank(); ++r) {
            const auto& [sr, sc] = hom.unknowns[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(r)])];
            h(sr, sc) = -e.rows(r, f);
        }
        hom.basis.push_back(std::move(h));
    }
    return hom;
}

}  // namespace qalg
