#pragma once

#include <set>
#include <unordered_map>

#include "rilab/groebner.hpp"
#include "rilab/linalg.hpp"

namespace rilab {

// Monomials of one total degree, with index lookup; the coordinate basis for
// degreewise linear algebra.
class DegreeBasis {
  public:
    DegreeBasis() = default;
    DegreeBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        enumerate_monomials(nvars, degree, monos_);
        index_.reserve(monos_.size() * 2);
        for (size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<int>(i));
    }

    int degree() const { return degree_; }
    size_t size() const { return monos_.size(); }
    const std::vector<Monomial>& monomials() const { return monos_; }

    int index_of(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : it->second;
    }

  private:
    int nvars_ = 0;
    int degree_ = 0;
    std::vector<Monomial> monos_;
    std::unordered_map<Monomial, int, MonomialHash> index_;
};

template <class K>
std::vector<typename K::Elem> poly_to_vector(const Poly<K>& p, const DegreeBasis& basis) {
    const K& k = p.ring()->field;
    std::vector<typename K::Elem> v(basis.size(), k.zero());
    for (auto& t : p.terms()) {
        int i = basis.index_of(t.m);
        if (i < 0) throw DomainError("polynomial term outside degree slice");
        v[static_cast<size_t>(i)] = t.c;
    }
    return v;
}

template <class K>
Poly<K> vector_to_poly(const Ring<K>& r, const std::vector<typename K::Elem>& v, const DegreeBasis& basis) {
    std::vector<Term<K>> raw;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!r->field.is_zero(v[i])) raw.push_back({basis.monomials()[i], v[i]});
    return Poly<K>::collect(r, std::move(raw));
}

// Insert the degree-e slice of the ideal spanned by gens (all products
// monomial x generator of total degree e) into rs.
template <class K>
void insert_ideal_slice(RowSpace<K>& rs, const std::vector<Poly<K>>& gens, const DegreeBasis& basis) {
    if (gens.empty()) return;
    const Ring<K>& r = gens.front().ring();
    int e = basis.degree();
    std::vector<Monomial> mults;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw DomainError("degree slice of an inhomogeneous generator");
        int dg = g.degree();
        if (dg > e) continue;
        enumerate_monomials(r->nvars(), e - dg, mults);
        for (auto& m : mults) rs.insert(poly_to_vector(g.mul_term(m, r->field.one()), basis));
    }
}

template <class K>
size_t ideal_slice_dim(const std::vector<Poly<K>>& gens, const Ring<K>& r, int e) {
    DegreeBasis basis(r->nvars(), e);
    RowSpace<K> rs(r->field, basis.size());
    insert_ideal_slice(rs, gens, basis);
    return rs.rank();
}

// dim (R/I)_e computed from the spanning matrix of I at degree e.
template <class K>
size_t quotient_slice_dim(const std::vector<Poly<K>>& gens, const Ring<K>& r, int e) {
    if (e < 0) return 0;
    return count_monomials(r->nvars(), e) - ideal_slice_dim(gens, r, e);
}

// dim (R/I)_e from a Groebner basis: standard monomial count.
template <class K>
size_t quotient_slice_dim_gb(const GroebnerBasis<K>& gb, const Ring<K>& r, int e) {
    if (e < 0) return 0;
    std::vector<Monomial> monos;
    enumerate_monomials(r->nvars(), e, monos);
    auto leads = gb.lead_monomials();
    size_t count = 0;
    for (auto& m : monos) {
        bool divisible = false;
        for (auto& l : leads)
            if (l.divides(m)) { divisible = true; break; }
        if (!divisible) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Module slices: coordinates are (component, monomial) pairs at a fixed
// shifted degree.
// ---------------------------------------------------------------------------

class ModuleDegreeBasis {
  public:
    ModuleDegreeBasis() = default;
    ModuleDegreeBasis(int nvars, const std::vector<int>& shifts, int degree)
        : nvars_(nvars), degree_(degree), shifts_(shifts) {
        offsets_.resize(shifts.size() + 1, 0);
        per_comp_.resize(shifts.size());
        for (size_t c = 0; c < shifts.size(); ++c) {
            int d = degree - shifts[c];
            if (d >= 0) {
                per_comp_[c] = DegreeBasis(nvars, d);
            } else {
                per_comp_[c] = DegreeBasis(nvars, 0);
                empty_.insert(static_cast<int>(c));
            }
            offsets_[c + 1] = offsets_[c] + (d >= 0 ? per_comp_[c].size() : 0);
        }
    }

    size_t size() const { return offsets_.back(); }
    int degree() const { return degree_; }

    int index_of(int comp, const Monomial& m) const {
        if (empty_.count(comp)) return -1;
        int i = per_comp_[comp].index_of(m);
        return i < 0 ? -1 : static_cast<int>(offsets_[comp]) + i;
    }

    std::pair<int, Monomial> coordinate(size_t idx) const {
        for (size_t c = 0; c < per_comp_.size(); ++c)
            if (idx < offsets_[c + 1]) {
                return {static_cast<int>(c), per_comp_[c].monomials()[idx - offsets_[c]]};
            }
        throw DomainError("module slice index out of range");
    }

  private:
    int nvars_ = 0;
    int degree_ = 0;
    std::vector<int> shifts_;
    std::vector<size_t> offsets_{0};
    std::vector<DegreeBasis> per_comp_;
    std::set<int> empty_;
};

template <class K>
std::vector<typename K::Elem> mvec_to_vector(const MVec<K>& v, const ModuleDegreeBasis& basis) {
    const K& k = v.ring()->field;
    std::vector<typename K::Elem> out(basis.size(), k.zero());
    for (auto& t : v.terms()) {
        int i = basis.index_of(t.comp, t.m);
        if (i < 0) throw DomainError("module term outside degree slice");
        out[static_cast<size_t>(i)] = t.c;
    }
    return out;
}

// Insert the shifted-degree-e slice spanned by module elements into rs.
template <class K>
void insert_module_slice(RowSpace<K>& rs, const std::vector<MVec<K>>& gens,
                         const std::vector<int>& shifts, const ModuleDegreeBasis& basis,
                         const Ring<K>& r) {
    std::vector<Monomial> mults;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        int dg = g.degree(shifts);
        if (dg > basis.degree()) continue;
        enumerate_monomials(r->nvars(), basis.degree() - dg, mults);
        for (auto& m : mults) rs.insert(mvec_to_vector(g.mul_term(m, r->field.one()), basis));
    }
}

// Minimal homogeneous generators: candidates independent modulo
// (irrelevant ideal) * (module generated by all candidates), degree by degree.
template <class K>
std::vector<MVec<K>> minimal_module_generators(const std::vector<MVec<K>>& candidates,
                                               const std::vector<int>& shifts) {
    if (candidates.empty()) return {};
    const Ring<K>& r = candidates.front().ring();
    std::vector<int> degs;
    int lo = INT32_MAX, hi = INT32_MIN;
    for (auto& c : candidates) {
        if (!c.is_homogeneous(shifts)) throw DomainError("minimal generators need homogeneous input");
        int d = c.degree(shifts);
        degs.push_back(d);
        if (d >= 0) { lo = std::min(lo, d); hi = std::max(hi, d); }
    }
    std::vector<MVec<K>> kept;
    for (int e = lo; e <= hi; ++e) {
        std::vector<size_t> here;
        for (size_t i = 0; i < candidates.size(); ++i)
            if (degs[i] == e) here.push_back(i);
        if (here.empty()) continue;
        ModuleDegreeBasis basis(r->nvars(), shifts, e);
        RowSpace<K> rs(r->field, basis.size());
        // (m * M)_e: positive-degree multiples of every candidate
        std::vector<Monomial> mults;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (degs[i] < 0 || degs[i] >= e) continue;
            enumerate_monomials(r->nvars(), e - degs[i], mults);
            for (auto& m : mults)
                rs.insert(mvec_to_vector(candidates[i].mul_term(m, r->field.one()), basis));
        }
        for (size_t i : here)
            if (rs.insert(mvec_to_vector(candidates[i], basis)) >= 0) kept.push_back(candidates[i]);
    }
    return kept;
}

template <class K>
std::vector<Poly<K>> minimal_ideal_generators(const std::vector<Poly<K>>& gens) {
    std::vector<MVec<K>> vs;
    for (auto& g : gens)
        if (!g.is_zero()) vs.push_back(MVec<K>::from_poly(g));
    auto kept = minimal_module_generators(vs, {0});
    std::vector<Poly<K>> out;
    for (auto& v : kept) out.push_back(to_poly(v));
    return out;
}

// Hilbert function of coker(F1 -> F0) at degree e: rank of F0 slice minus
// rank of the column span.
template <class K>
size_t cokernel_slice_dim(const std::vector<MVec<K>>& columns, const std::vector<int>& row_shifts,
                          const Ring<K>& r, int e) {
    ModuleDegreeBasis basis(r->nvars(), row_shifts, e);
    if (basis.size() == 0) return 0;
    RowSpace<K> rs(r->field, basis.size());
    insert_module_slice(rs, columns, row_shifts, basis, r);
    return basis.size() - rs.rank();
}

}  // namespace rilab
