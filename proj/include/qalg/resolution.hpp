#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qalg/module.hpp"

namespace qalg {

// Truncated minimal graded projective resolution
//   P^L -> ... -> P^1 -> P^0 -> M -> 0
// built by iterated projective covers of syzygies, with exactness and
// minimality certified by exact rank data at every step.
template <scalar_field K>
struct GradedResolution {
    GradedModule<K> module;
    int depth = 0;  // requested truncation depth (explicit everywhere)
    std::vector<GradedModule<K>> terms;
    std::vector<std::vector<ProjTerm>> term_specs;
    std::vector<std::vector<Index>> gen_slots;
    Mat<K> augmentation;               // P^0 -> M
    std::vector<Mat<K>> differentials;  // differentials[i]: P^{i+1} -> P^i
    bool finite = false;               // some syzygy vanished at or below depth
    std::vector<Index> map_ranks;      // rank of augmentation, then of each differential

    int length() const { return static_cast<int>(terms.size()) - 1; }

    // P^i, with zero modules past the computed (finite) length.
    GradedModule<K> term(int i) const {
        if (i <= length()) return terms[static_cast<std::size_t>(i)];
        return GradedModule<K>::zero(module.algebra);
    }
};

template <scalar_field K>
GradedResolution<K> minimal_graded_resolution(const GradedModule<K>& m, int depth) {
    if (depth < 0) throw validation_error("resolution depth must be >= 0");
    GradedResolution<K> res;
    res.module = m;
    res.depth = depth;
    if (m.is_zero()) {
        res.terms.push_back(GradedModule<K>::zero(m.algebra));
        res.term_specs.push_back({});
        res.gen_slots.push_back({});
        res.augmentation = Mat<K>::Zero(0, 0);
        res.map_ranks.push_back(0);
        res.finite = true;
        return res;
    }

    Submodule<K> syzygy;  // current syzygy inside the previous term
    for (int i = 0; i <= depth; ++i) {
        const GradedModule<K>& target = (i == 0) ? m : syzygy.module;
        Cover<K> cover = projective_cover(target);
        res.term_specs.push_back(cover.terms);
        res.gen_slots.push_back(cover.gen_slots);
        Mat<K> map_to_prev;
        if (i == 0) {
            res.augmentation = cover.pi;
            map_to_prev = cover.pi;
        } else {
            res.differentials.push_back(Mat<K>(cover.pi * syzygy.inclusion));
            map_to_prev = cover.pi;
        }
        res.map_ranks.push_back(rank_of(Mat<K>(cover.pi)));

        const GradedSubspace<K> ker = graded_kernel(cover.proj, target, cover.pi);
        Submodule<K> next = submodule_from_span(cover.proj, ker);
        // minimality: the kernel must lie inside rad(P^i), i.e. vanish on the
        // generator slots
        for (Index r = 0; r < next.inclusion.rows(); ++r) {
            for (const Index g : cover.gen_slots) {
                if (!next.inclusion(r, g).is_zero())
                    throw internal_error("projective cover is not minimal: kernel meets a generator");
            }
        }
        res.terms.push_back(std::move(cover.proj));
        syzygy = std::move(next);
        if (syzygy.module.is_zero()) {
            res.finite = true;
            break;
        }
    }

    // certificates: d o d = 0 and rank-exactness at every interior step
    for (std::size_t i = 0; i < res.differentials.size(); ++i) {
        const Mat<K>& d_next = res.differentials[i];  // P^{i+1} -> P^i
        const Mat<K>& d_prev = (i == 0) ? res.augmentation : res.differentials[i - 1];
        if (!is_zero_mat(Mat<K>(d_next * d_prev)))
            throw internal_error("resolution differentials do not compose to zero");
        const Index at = res.terms[i].dim();
        if (rank_of(d_next) != at - rank_of(d_prev))
            throw internal_error("resolution is not exact at an interior term");
    }
    return res;
}

struct PositivityReport {
    bool precondition_ok = false;
    bool pass = false;
    int depth = 0;
    std::vector<int> min_generator_degree;  // per homological index
    std::string message;
};

// Checks that every projective term of the minimal graded resolution is
// generated in internal degrees >= 0, given that M itself is generated in
// non-negative degrees.
template <scalar_field K>
PositivityReport verify_resolution_nonnegativity(const GradedModule<K>& m, int depth) {
    PositivityReport report;
    report.depth = depth;
    for (const auto& slot : top(m).module.slots) {
        if (slot.degree < 0) {
            report.precondition_ok = false;
            report.message = "input module is not generated in non-negative internal degrees";
            return report;
        }
    }
    report.precondition_ok = true;
    const GradedResolution<K> res = minimal_graded_resolution(m, depth);
    report.pass = true;
    for (const auto& spec : res.term_specs) {
        int min_deg = 0;
        bool first = true;
        for (const ProjTerm& t : spec) {
            const int gen_degree = -t.twist;
            if (first || gen_degree < min_deg) min_deg = gen_degree;
            first = false;
        }
        report.min_generator_degree.push_back(min_deg);
        if (min_deg < 0) report.pass = false;
    }
    report.message = report.pass ? "all projective generators sit in non-negative internal degrees"
                                 : "a projective term has a generator in negative internal degree";
    return report;
}

// Bigraded Ext dimensions: entries (i, j) = dim Ext^i_{gr}(M, N(j)).
// Cells outside the computed window are absent, not zero-filled.
template <scalar_field K>
struct ExtTable {
    GradedModule<K> source;
    GradedModule<K> target;
    int i_max = 0;
    std::pair<int, int> window{0, 0};
    std::map<std::pair<int, int>, long> entries;  // every computed cell, zeros included

    long at(int i, int j) const {
        const auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

template <scalar_field K>
std::pair<int, int> default_j_window(const GradedAlgebra<K>& alg, int i_max) {
    return {-((i_max + 1) * alg.max_arrow_degree() * alg.loewy_length), 2};
}

// Computes graded Ext columns from one fixed minimal resolution of M,
// reusing it across twists.
template <scalar_field K>
class ExtEngine {
public:
    ExtEngine(const GradedModule<K>& m, const GradedModule<K>& n, int i_max)
        : n_(n), i_max_(i_max), res_(minimal_graded_resolution(m, i_max + 1)) {
        if (m.algebra.get() != n.algebra.get()) throw validation_error("algebra mismatch");
    }

    const GradedResolution<K>& resolution() const { return res_; }
    int i_max() const { return i_max_; }

    // dims of Ext^i(M, N(j)) for i = 0..i_max
    const std::vector<long>& column(int j) {
        const auto it = cache_.find(j);
        if (it != cache_.end()) return it->second;

        const GradedModule<K> nj = twist(n_, j);
        std::vector<HomSpace<K>> homs;
        for (int i = 0; i <= i_max_ + 1; ++i) {
            homs.push_back(hom_graded(res_.term(i), nj));
        }
        // rank of Hom(P^i, N(j)) -> Hom(P^{i+1}, N(j)) via the vectorized
        // images of the basis morphisms
        std::vector<Index> t_rank(static_cast<std::size_t>(i_max_) + 1, 0);
        for (int i = 0; i <= i_max_; ++i) {
            const GradedModule<K> next = res_.term(i + 1);
            if (homs[static_cast<std::size_t>(i)].dimension == 0 || next.is_zero()) continue;
            const Mat<K>& d = res_.differentials[static_cast<std::size_t>(i)];
            Mat<K> stacked(static_cast<Index>(homs[static_cast<std::size_t>(i)].basis.size()),
                           next.dim() * nj.dim());
            Index row = 0;
            for (const Mat<K>& h : homs[static_cast<std::size_t>(i)].basis) {
                const Mat<K> img = d * h;
                for (Index r = 0; r < img.rows(); ++r) {
                    for (Index c = 0; c < img.cols(); ++c) {
                        stacked(row, r * img.cols() + c) = img(r, c);
                    }
                }
                ++row;
            }
            t_rank[static_cast<std::size_t>(i)] = rank_of(stacked);
        }
        std::vector<long> dims;
        for (int i = 0; i <= i_max_; ++i) {
            const long prev_rank = (i == 0) ? 0 : static_cast<long>(t_rank[static_cast<std::size_t>(i - 1)]);
            dims.push_back(homs[static_cast<std::size_t>(i)].dimension -
                           static_cast<long>(t_rank[static_cast<std::size_t>(i)]) - prev_rank);
        }
        return cache_.emplace(j, std::move(dims)).first->second;
    }

    ExtTable<K> table(std::pair<int, int> window) {
        ExtTable<K> t;
        t.source = res_.module;
        t.target = n_;
        t.i_max = i_max_;
        t.window = window;
        for (int j = window.first; j <= window.second; ++j) {
            const auto& col = column(j);
            for (int i = 0; i <= i_max_; ++i) t.entries[{i, j}] = col[static_cast<std::size_t>(i)];
        }
        return t;
    }

private:
    GradedModule<K> n_;
    int i_max_;
    GradedResolution<K> res_;
    std::map<int, std::vector<long>> cache_;
};

template <scalar_field K>
ExtTable<K> ext_graded(const GradedModule<K>& m, const GradedModule<K>& n, int i_max,
                       std::pair<int, int> j_window) {
    ExtEngine<K> engine(m, n, i_max);
    return engine.table(j_window);
}

template <scalar_field K>
ExtTable<K> ext_graded(const GradedModule<K>& m, const GradedModule<K>& n, int i_max) {
    return ext_graded(m, n, i_max, default_j_window(*m.algebra, i_max));
}

struct GlobalDimProbe {
    bool finite = false;
    int value = 0;  // max projective dimension over the simples when finite
    int bound = 0;  // the probed depth otherwise
};

template <scalar_field K>
GlobalDimProbe global_dimension_probe(std::shared_ptr<const GradedAlgebra<K>> alg, int depth) {
    GlobalDimProbe probe;
    probe.bound = depth;
    int max_pd = 0;
    for (int v = 0; v < alg->n(); ++v) {
        const GradedResolution<K> res = minimal_graded_resolution(simple(alg, v), depth + 1);
        if (!res.finite) return probe;  // exceeds the bound
        max_pd = std::max(max_pd, res.length());
    }
    probe.finite = true;
    probe.value = max_pd;
    return probe;
}

}  // namespace qalg
