#pragma once

#include "rilab/ideal.hpp"
#include "rilab/slice.hpp"

namespace rilab {

// Minimal graded free resolution F_0 <- F_1 <- ... ; diffs[i] holds the
// columns of D_{i+1} as elements of F_i. Minimality is by construction
// (each step takes minimal generators of the syzygy module) and re-checked.
template <class K>
struct GradedResolution {
    Ring<K> ring;
    std::vector<std::vector<int>> shifts;     // generator degrees of F_i
    std::vector<std::vector<MVec<K>>> diffs;  // diffs[i]: columns of D_{i+1} in F_i
    bool complete = false;                    // last syzygy module was zero

    size_t length() const { return diffs.size(); }  // projective dimension when complete

    size_t rank(size_t i) const { return shifts[i].size(); }

    PolyMatrix<K> differential(size_t i) const {
        // D_i: F_i -> F_{i-1}, i >= 1
        if (i == 0 || i > diffs.size()) throw InputError("differential index out of range");
        return PolyMatrix<K>::from_columns(ring, shifts[i - 1].size(), diffs[i - 1]);
    }

    // Betti number beta_{i,j}: generators of F_i in degree j
    std::map<std::pair<int, int>, int> betti() const {
        std::map<std::pair<int, int>, int> b;
        for (size_t i = 0; i < shifts.size(); ++i)
            for (int a : shifts[i]) b[{static_cast<int>(i), a}] += 1;
        return b;
    }

    std::vector<int> betti_totals() const {
        std::vector<int> v;
        for (auto& s : shifts) v.push_back(static_cast<int>(s.size()));
        return v;
    }

    bool is_minimal() const {
        for (size_t i = 0; i < diffs.size(); ++i)
            for (auto& col : diffs[i])
                for (auto& t : col.terms())
                    if (t.m.deg == 0) return false;
        return true;
    }

    // d o d = 0, exactly
    bool differentials_compose_to_zero() const {
        for (size_t i = 1; i < diffs.size(); ++i) {
            for (auto& col : diffs[i]) {
                // image of col under D_i: sum over components of col times D_i columns
                MVec<K> acc(ring);
                for (auto& t : col.terms()) {
                    auto contrib = diffs[i - 1][static_cast<size_t>(t.comp)].mul_term(t.m, t.c);
                    acc = acc.add(contrib);
                }
                if (!acc.is_zero()) return false;
            }
        }
        return true;
    }
};

// Minimal free resolution of coker(F0 <- columns), i.e. of the module the
// presentation describes. For an ideal I resolve R/I via the rank-1
// presentation by generators.
template <class K>
GradedResolution<K> free_resolution(const Ring<K>& ring, const std::vector<int>& f0_shifts,
                                    const std::vector<MVec<K>>& relations, int length_cap,
                                    const Budget& budget = default_budget()) {
    GradedResolution<K> res;
    res.ring = ring;
    res.shifts.push_back(f0_shifts);
    std::vector<MVec<K>> current = minimal_module_generators(relations, f0_shifts);
    std::vector<int> cur_shifts = f0_shifts;
    for (int step = 0; step < length_cap && !current.empty(); ++step) {
        std::vector<int> next_shifts;
        for (auto& c : current) next_shifts.push_back(c.degree(cur_shifts));
        res.diffs.push_back(current);
        res.shifts.push_back(next_shifts);
        auto syz = syzygies(current, static_cast<int>(cur_shifts.size()), cur_shifts, budget);
        current = minimal_module_generators(syz, next_shifts);
        cur_shifts = next_shifts;
    }
    res.complete = current.empty();
    return res;
}

template <class K>
GradedResolution<K> free_resolution(const Ideal<K>& I, int length_cap,
                                    const Budget& budget = default_budget()) {
    if (!I.is_homogeneous()) throw DomainError("resolution needs a homogeneous ideal");
    std::vector<MVec<K>> rel;
    for (auto& g : I.generators()) rel.push_back(MVec<K>::from_poly(g));
    return free_resolution(I.ring(), std::vector<int>{0}, rel, length_cap, budget);
}

template <class K>
GradedResolution<K> free_resolution(const ModulePresentation<K>& pres, int length_cap,
                                    const Budget& budget = default_budget()) {
    return free_resolution(pres.ring, pres.row_shifts, pres.columns, length_cap, budget);
}

// depth via the projective dimension of the resolved module (resolution of
// R/I or of a cokernel): depth = d - pd.
template <class K>
int depth_from_resolution(const GradedResolution<K>& res) {
    if (!res.complete)
        throw BudgetError("resolution truncated before exactness was certified; depth indeterminate");
    return res.ring->nvars() - static_cast<int>(res.length());
}

template <class K>
int depth_of_quotient(const Ideal<K>& I, const Budget& budget = default_budget()) {
    auto res = free_resolution(I, I.ring()->nvars() + 1, budget);
    return depth_from_resolution(res);
}

// R/K Cohen-Macaulay <=> pd(R/K) = codim K
template <class K>
bool is_cohen_macaulay_quotient(const Ideal<K>& K_, const Budget& budget = default_budget()) {
    auto res = free_resolution(K_, K_.ring()->nvars() + 1, budget);
    if (!res.complete) throw BudgetError("resolution truncated; Cohen-Macaulay test indeterminate");
    return static_cast<int>(res.length()) == K_.codimension(budget);
}

// Presentation of the graded dual module coker(Hom(F_{c-1}, R) -> Hom(F_c, R))
// twisted by R(-d): the canonical module of a Cohen-Macaulay quotient of
// codimension c. Generator j of the dual sits in degree d - a_{c,j}.
template <class K>
ModulePresentation<K> canonical_presentation(const GradedResolution<K>& res,
                                             const Budget& = default_budget()) {
    if (!res.complete) throw BudgetError("resolution truncated; no canonical module");
    size_t c = res.length();
    if (c == 0) throw DomainError("canonical module of the free module is not taken here");
    int d = res.ring->nvars();
    ModulePresentation<K> pres;
    pres.ring = res.ring;
    pres.rank = static_cast<int>(res.rank(c));
    for (int a : res.shifts[c]) pres.row_shifts.push_back(d - a);
    PolyMatrix<K> dc = res.differential(c);       // rank(F_{c-1}) x rank(F_c)
    PolyMatrix<K> dct = dc.transpose();           // rank(F_c) x rank(F_{c-1})
    pres.columns = dct.columns_as_vectors();
    return pres;
}

// Degreewise consistency of a resolution with the Hilbert function of the
// resolved quotient: sum_i (-1)^i dim(F_i)_e equals dim(R/I)_e for e <= cap.
template <class K>
bool euler_characteristic_matches(const GradedResolution<K>& res, const Ideal<K>& I, int cap,
                                  const Budget& budget = default_budget()) {
    const auto& gb = I.groebner(budget);
    int d = res.ring->nvars();
    for (int e = 0; e <= cap; ++e) {
        long chi = 0;
        for (size_t i = 0; i < res.shifts.size(); ++i) {
            long dim = 0;
            for (int a : res.shifts[i]) dim += static_cast<long>(count_monomials(d, e - a));
            chi += (i % 2 == 0) ? dim : -dim;
        }
        if (chi != static_cast<long>(quotient_slice_dim_gb(gb, I.ring(), e))) return false;
    }
    return true;
}

}  // namespace rilab
