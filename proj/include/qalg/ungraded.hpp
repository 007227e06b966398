#pragma once

// Independent ungraded Ext engine. This is the oracle side of the graded /
// ungraded comparison, so it deliberately shares no cover, kernel, or
// elimination code with the graded machinery: everything here runs on its own
// forward-elimination routines with transform tracking.

#include <map>
#include <memory>
#include <vector>

#include "qalg/algebra.hpp"

namespace qalg::ungraded {

template <scalar_field K>
struct Module {
    std::shared_ptr<const GradedAlgebra<K>> algebra;
    std::vector<int> vertices;  // slot -> vertex
    std::vector<Mat<K>> actions;

    Index dim() const { return static_cast<Index>(vertices.size()); }
    bool is_zero() const { return vertices.empty(); }

    static Module zero(std::shared_ptr<const GradedAlgebra<K>> alg) {
        Module m;
        m.algebra = std::move(alg);
        m.actions.assign(m.algebra->presentation.quiver.arrows.size(), Mat<K>::Zero(0, 0));
        return m;
    }
};

template <scalar_field K>
Module<K> forget(const GradedModule<K>& g) {
    Module<K> m;
    m.algebra = g.algebra;
    for (const auto& s : g.slots) m.vertices.push_back(s.vertex);
    m.actions = g.actions;
    return m;
}

template <scalar_field K>
Module<K> simple_module(std::shared_ptr<const GradedAlgebra<K>> alg, int vertex) {
    Module<K> m;
    m.algebra = std::move(alg);
    m.vertices = {vertex};
    m.actions.assign(m.algebra->presentation.quiver.arrows.size(), Mat<K>::Zero(1, 1));
    return m;
}

template <scalar_field K>
Module<K> projective_module(std::shared_ptr<const GradedAlgebra<K>> alg, int vertex) {
    Module<K> m;
    m.algebra = alg;
    std::vector<Index> global;
    std::map<Index, Index> local;
    for (Index b = 0; b < alg->dim(); ++b) {
        if (alg->basis[static_cast<std::size_t>(b)].source == vertex) {
            local[b] = static_cast<Index>(global.size());
            global.push_back(b);
            m.vertices.push_back(alg->basis[static_cast<std::size_t>(b)].target);
        }
    }
    const Quiver& q = alg->presentation.quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        Mat<K> act = Mat<K>::Zero(m.dim(), m.dim());
        const auto it = alg->path_index.find(ArrowPath{static_cast<int>(a)});
        if (it != alg->path_index.end()) {
            for (Index r = 0; r < m.dim(); ++r) {
                const auto gi = static_cast<std::size_t>(global[static_cast<std::size_t>(r)]);
                for (const auto& [k, c] : alg->table[gi][static_cast<std::size_t>(it->second)]) {
                    act(r, local.at(k)) = c;
                }
            }
        }
        m.actions.push_back(std::move(act));
    }
    return m;
}

namespace detail {

// Forward Gaussian elimination to (non-reduced) row echelon form, clearing
// below the pivots only.
template <scalar_field K>
struct Forward {
    Mat<K> rows;
    std::vector<Index> pivots;
    Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <scalar_field K>
Forward<K> forward_eliminate(Mat<K> a) {
    Forward<K> f;
    const Index m = a.rows(), n = a.cols();
    Index r = 0;
    for (Index c = 0; c < n && r < m; ++c) {
        Index pr = -1;
        for (Index i = r; i < m; ++i) {
            if (!a(i, c).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) a.row(r).swap(a.row(pr));
        for (Index i = r + 1; i < m; ++i) {
            if (a(i, c).is_zero()) continue;
            const K f2 = a(i, c) / a(r, c);
            for (Index j = c; j < n; ++j) {
                if (!a(r, j).is_zero()) a(i, j) = a(i, j) - f2 * a(r, j);
            }
        }
        f.pivots.push_back(c);
        ++r;
    }
    f.rows = std::move(a);
    return f;
}

template <scalar_field K>
Index rank(const Mat<K>& a) {
    return forward_eliminate(Mat<K>(a)).rank();
}

// Rows spanning { x : x a = 0 }, found by eliminating the augmented block
// [a | I] and keeping the transform rows whose a-part became zero.
template <scalar_field K>
Mat<K> left_null(const Mat<K>& a) {
    const Index m = a.rows(), n = a.cols();
    Mat<K> aug = Mat<K>::Zero(m, n + m);
    aug.leftCols(n) = a;
    for (Index i = 0; i < m; ++i) aug(i, n + i) = K(1);
    // eliminate using only the first n columns as pivot candidates
    Index r = 0;
    for (Index c = 0; c < n && r < m; ++c) {
        Index pr = -1;
        for (Index i = r; i < m; ++i) {
            if (!aug(i, c).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) aug.row(r).swap(aug.row(pr));
        for (Index i = r + 1; i < m; ++i) {
            if (aug(i, c).is_zero()) continue;
            const K f = aug(i, c) / aug(r, c);
            for (Index j = c; j < n + m; ++j) {
                if (!aug(r, j).is_zero()) aug(i, j) = aug(i, j) - f * aug(r, j);
            }
        }
        ++r;
    }
    Mat<K> null_rows(m - r, m);
    for (Index i = r; i < m; ++i) null_rows.row(i - r) = aug.row(i).rightCols(m);
    return null_rows;
}

// Solves x a = b for each row of b, where the rows of a are independent;
// throws if a row of b is outside the row space.
template <scalar_field K>
Mat<K> solve_left(const Mat<K>& a, const Mat<K>& b) {
    const Index k = a.rows(), n = a.cols();
    Mat<K> aug = Mat<K>::Zero(k, n + k);
    aug.leftCols(n) = a;
    for (Index i = 0; i < k; ++i) aug(i, n + i) = K(1);
    const Forward<K> f = forward_eliminate(std::move(aug));
    if (f.rank() != k) throw internal_error("solve_left requires independent rows");
    Mat<K> x = Mat<K>::Zero(b.rows(), k);
    for (Index i = 0; i < b.rows(); ++i) {
        RowVec<K> v = b.row(i);
        RowVec<K> coeff = RowVec<K>::Zero(k);
        for (Index r = 0; r < k; ++r) {
            const Index p = f.pivots[static_cast<std::size_t>(r)];
            if (v(p).is_zero()) continue;
            const K mu = v(p) / f.rows(r, p);
            coeff = coeff + mu * f.rows.row(r).rightCols(k);
            v = v - mu * f.rows.row(r).leftCols(n);
        }
        if (!is_zero_row(v)) throw internal_error("solve_left: row outside the span");
        x.row(i) = coeff;
    }
    return x;
}

}  // namespace detail

template <scalar_field K>
struct UCover {
    Module<K> proj;
    Mat<K> pi;
    std::vector<int> term_vertices;
    std::vector<Index> gen_slots;
};

template <scalar_field K>
UCover<K> cover(const Module<K>& m) {
    UCover<K> c;
    if (m.is_zero()) {
        c.proj = Module<K>::zero(m.algebra);
        c.pi = Mat<K>::Zero(0, 0);
        return c;
    }
    // top representatives: non-pivot coordinates of the radical span
    Mat<K> rad(0, m.dim());
    for (const Mat<K>& act : m.actions) rad = vstack(rad, Mat<K>(act));
    const auto f = detail::forward_eliminate(std::move(rad));
    std::vector<Index> reps;
    {
        std::size_t pi = 0;
        for (Index col = 0; col < m.dim(); ++col) {
            if (pi < f.pivots.size() && f.pivots[pi] == col) {
                ++pi;
            } else {
                reps.push_back(col);
            }
        }
    }

    c.proj = Module<K>::zero(m.algebra);
    std::vector<Index> offsets;
    for (const Index rep : reps) {
        const int v = m.vertices[static_cast<std::size_t>(rep)];
        offsets.push_back(c.proj.dim());
        c.term_vertices.push_back(v);
        const Module<K> p = projective_module(m.algebra, v);
        Module<K> sum;
        sum.algebra = m.algebra;
        sum.vertices = c.proj.vertices;
        sum.vertices.insert(sum.vertices.end(), p.vertices.begin(), p.vertices.end());
        for (std::size_t a = 0; a < c.proj.actions.size(); ++a) {
            Mat<K> act = Mat<K>::Zero(sum.dim(), sum.dim());
            act.topLeftCorner(c.proj.dim(), c.proj.dim()) = c.proj.actions[a];
            act.bottomRightCorner(p.dim(), p.dim()) = p.actions[a];
            sum.actions.push_back(std::move(act));
        }
        c.proj = std::move(sum);
    }
    c.gen_slots = offsets;

    c.pi = Mat<K>::Zero(c.proj.dim(), m.dim());
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const int v = m.vertices[static_cast<std::size_t>(reps[k])];
        const Index off = offsets[k];
        std::map<ArrowPath, Index, LenLexLess> local_of;
        Index local = 0;
        for (Index b = 0; b < m.algebra->dim(); ++b) {
            const auto& bp = m.algebra->basis[static_cast<std::size_t>(b)];
            if (bp.source != v) continue;
            if (bp.arrows.empty()) {
                c.pi(off + local, reps[k]) = K(1);
            } else {
                ArrowPath prefix(bp.arrows.begin(), bp.arrows.end() - 1);
                const Index prefix_local = prefix.empty() ? 0 : local_of.at(prefix);
                c.pi.row(off + local) = c.pi.row(off + prefix_local) *
                                        m.actions[static_cast<std::size_t>(bp.arrows.back())];
            }
            local_of.emplace(bp.arrows, local);
            ++local;
        }
    }
    if (detail::rank(c.pi) != m.dim()) throw internal_error("ungraded cover fails to surject");
    return c;
}

template <scalar_field K>
struct UResolution {
    int depth = 0;
    std::vector<Module<K>> terms;
    std::vector<std::vector<int>> term_vertices;
    std::vector<Mat<K>> differentials;  // differentials[i]: P^{i+1} -> P^i
    bool finite = false;

    int length() const { return static_cast<int>(terms.size()) - 1; }
    Module<K> term(std::shared_ptr<const GradedAlgebra<K>> alg, int i) const {
        if (i <= length()) return terms[static_cast<std::size_t>(i)];
        return Module<K>::zero(std::move(alg));
    }
};

template <scalar_field K>
UResolution<K> resolve(const Module<K>& m, int depth) {
    UResolution<K> res;
    res.depth = depth;
    if (m.is_zero()) {
        res.terms.push_back(Module<K>::zero(m.algebra));
        res.term_vertices.push_back({});
        res.finite = true;
        return res;
    }
    Module<K> syzygy;
    Mat<K> inclusion;  // syzygy -> previous term
    bool have_syzygy = false;
    for (int i = 0; i <= depth; ++i) {
        const Module<K>& target = have_syzygy ? syzygy : m;
        UCover<K> c = cover(target);
        res.term_vertices.push_back(c.term_vertices);
        if (i > 0) res.differentials.push_back(Mat<K>(c.pi * inclusion));

        // the kernel is a submodule, so it splits along the idempotents;
        // restrict the raw nullspace rows vertex by vertex for a basis with
        // vertex-pure slots
        const Mat<K> raw_kernel = detail::left_null(c.pi);
        Mat<K> ker_rows(0, c.proj.dim());
        Module<K> next;
        next.algebra = m.algebra;
        for (int v = 0; v < m.algebra->n(); ++v) {
            Mat<K> restricted = Mat<K>::Zero(raw_kernel.rows(), c.proj.dim());
            for (Index r = 0; r < raw_kernel.rows(); ++r) {
                for (Index col = 0; col < c.proj.dim(); ++col) {
                    if (c.proj.vertices[static_cast<std::size_t>(col)] == v) {
                        restricted(r, col) = raw_kernel(r, col);
                    }
                }
            }
            const auto f = detail::forward_eliminate(std::move(restricted));
            ker_rows = vstack(ker_rows, Mat<K>(f.rows.topRows(f.rank())));
            for (Index r = 0; r < f.rank(); ++r) next.vertices.push_back(v);
        }
        for (std::size_t a = 0; a < c.proj.actions.size(); ++a) {
            if (next.dim() == 0) {
                next.actions.push_back(Mat<K>::Zero(0, 0));
            } else {
                next.actions.push_back(
                    detail::solve_left(ker_rows, Mat<K>(ker_rows * c.proj.actions[a])));
            }
        }
        inclusion = ker_rows;
        syzygy = std::move(next);
        have_syzygy = true;
        res.terms.push_back(std::move(c.proj));
        if (syzygy.is_zero()) {
            res.finite = true;
            break;
        }
    }
    return res;
}

// dim Hom_Lambda(M, N): vertex-respecting matrices commuting with the arrow
// actions, with the basis coming from the augmented-elimination nullspace.
template <scalar_field K>
std::vector<Mat<K>> hom_basis(const Module<K>& m, const Module<K>& n) {
    std::vector<std::pair<Index, Index>> unknowns;
    for (Index r = 0; r < m.dim(); ++r) {
        for (Index c = 0; c < n.dim(); ++c) {
            if (m.vertices[static_cast<std::size_t>(r)] == n.vertices[static_cast<std::size_t>(c)]) {
                unknowns.emplace_back(r, c);
            }
        }
    }
    const Index u = static_cast<Index>(unknowns.size());
    Mat<K> constraints = Mat<K>::Zero(static_cast<Index>(m.actions.size()) * m.dim() * n.dim(), u);
    Index eq = 0;
    for (std::size_t a = 0; a < m.actions.size(); ++a) {
        for (Index i = 0; i < m.dim(); ++i) {
            for (Index j = 0; j < n.dim(); ++j) {
                for (Index k = 0; k < u; ++k) {
                    const auto& [r, c] = unknowns[static_cast<std::size_t>(k)];
                    K coeff = K(0);
                    if (c == j) coeff = coeff + m.actions[a](i, r);
                    if (r == i) coeff = coeff - n.actions[a](c, j);
                    constraints(eq, k) = coeff;
                }
                ++eq;
            }
        }
    }
    const Mat<K> null_rows = detail::left_null(Mat<K>(constraints.transpose()));
    std::vector<Mat<K>> basis;
    for (Index b = 0; b < null_rows.rows(); ++b) {
        Mat<K> h = Mat<K>::Zero(m.dim(), n.dim());
        for (Index k = 0; k < u; ++k) {
            const auto& [r, c] = unknowns[static_cast<std::size_t>(k)];
            h(r, c) = null_rows(b, k);
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

// Ext^i_Lambda(M, N) dimensions for i = 0..i_max, gradings fully discarded.
template <scalar_field K>
std::vector<long> ext_dimensions(const Module<K>& m, const Module<K>& n, int i_max) {
    if (m.algebra.get() != n.algebra.get()) throw validation_error("algebra mismatch");
    const UResolution<K> res = resolve(m, i_max + 1);
    std::vector<std::vector<Mat<K>>> homs;
    for (int i = 0; i <= i_max + 1; ++i) {
        homs.push_back(hom_basis(res.term(m.algebra, i), n));
    }
    std::vector<Index> t_rank(static_cast<std::size_t>(i_max) + 1, 0);
    for (int i = 0; i <= i_max; ++i) {
        const Module<K> next = res.term(m.algebra, i + 1);
        if (homs[static_cast<std::size_t>(i)].empty() || next.is_zero()) continue;
        const Mat<K>& d = res.differentials[static_cast<std::size_t>(i)];
        Mat<K> stacked(static_cast<Index>(homs[static_cast<std::size_t>(i)].size()),
                       next.dim() * n.dim());
        Index row = 0;
        for (const Mat<K>& h : homs[static_cast<std::size_t>(i)]) {
            const Mat<K> img = d * h;
            for (Index r = 0; r < img.rows(); ++r) {
                for (Index c = 0; c < img.cols(); ++c) stacked(row, r * img.cols() + c) = img(r, c);
            }
            ++row;
        }
        t_rank[static_cast<std::size_t>(i)] = detail::rank(stacked);
    }
    std::vector<long> dims;
    for (int i = 0; i <= i_max; ++i) {
        const long prev = (i == 0) ? 0 : static_cast<long>(t_rank[static_cast<std::size_t>(i - 1)]);
        dims.push_back(static_cast<long>(homs[static_cast<std::size_t>(i)].size()) -
                       static_cast<long>(t_rank[static_cast<std::size_t>(i)]) - prev);
    }
    return dims;
}

// The spec-level operation: forget the gradings, then run this engine.
template <scalar_field K>
std::vector<long> ext_ungraded(const GradedModule<K>& m, const GradedModule<K>& n, int i_max) {
    return ext_dimensions(forget(m), forget(n), i_max);
}

}  // namespace qalg::ungraded
