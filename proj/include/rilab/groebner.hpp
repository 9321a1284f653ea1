#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "rilab/parse.hpp"
#include "rilab/poly.hpp"

namespace rilab {

// Resource limits for basis computations. Exceeding a limit raises
// BudgetError; partial results are never returned as answers.
struct Budget {
    int degree_cap = 24;        // max sugar degree of a processed S-pair / reduction
    long pair_cap = 4'000'000;  // max S-pairs processed
};

inline Budget& default_budget() {
    static Budget b;
    return b;
}

// ---------------------------------------------------------------------------
// Free-module elements. A vector in R^rank is a sorted term list over
// (component, monomial); polynomials are the rank-1 case. The module order is
// position-over-term: lower component dominates, ties broken by the ring
// order. Row degree shifts make everything graded.
// ---------------------------------------------------------------------------

template <class K>
struct MTerm {
    int comp;
    Monomial m;
    typename K::Elem c;
};

template <class K>
class MVec {
  public:
    using Elem = typename K::Elem;

    MVec() = default;
    explicit MVec(Ring<K> ring) : ring_(std::move(ring)) {}

    static MVec from_poly(const Poly<K>& p, int comp = 0) {
        MVec v(p.ring());
        v.terms_.reserve(p.size());
        for (auto& t : p.terms()) v.terms_.push_back({comp, t.m, t.c});
        return v;
    }

    static MVec collect(const Ring<K>& r, std::vector<MTerm<K>> raw) {
        MVec v(r);
        std::sort(raw.begin(), raw.end(), [&](const MTerm<K>& a, const MTerm<K>& b) {
            if (a.comp != b.comp) return a.comp < b.comp;
            return r->order.greater(a.m, b.m);
        });
        for (auto& t : raw) {
            if (!v.terms_.empty() && v.terms_.back().comp == t.comp && v.terms_.back().m == t.m) {
                v.terms_.back().c = r->field.add(v.terms_.back().c, t.c);
                if (r->field.is_zero(v.terms_.back().c)) v.terms_.pop_back();
            } else if (!r->field.is_zero(t.c)) {
                v.terms_.push_back(std::move(t));
            }
        }
        return v;
    }

    const Ring<K>& ring() const { return ring_; }
    const std::vector<MTerm<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const MTerm<K>& lead() const {
        if (terms_.empty()) throw DomainError("leading term of zero vector");
        return terms_.front();
    }

    // comparison of module terms under POT
    static bool term_greater(const Ring<K>& r, int ca, const Monomial& ma, int cb, const Monomial& mb) {
        if (ca != cb) return ca < cb;
        return r->order.greater(ma, mb);
    }

    Poly<K> component(int comp) const {
        std::vector<Term<K>> raw;
        for (auto& t : terms_)
            if (t.comp == comp) raw.push_back({t.m, t.c});
        return Poly<K>::collect(ring_, std::move(raw));
    }

    int max_comp() const {
        int m = -1;
        for (auto& t : terms_) m = std::max(m, t.comp);
        return m;
    }

    // shifted degree of a homogeneous vector (-1 for zero)
    int degree(const std::vector<int>& shifts) const {
        int d = -1;
        for (auto& t : terms_) d = std::max(d, int(t.m.deg) + shifts[t.comp]);
        return d;
    }

    bool is_homogeneous(const std::vector<int>& shifts) const {
        if (terms_.empty()) return true;
        int d = terms_.front().m.deg + shifts[terms_.front().comp];
        for (auto& t : terms_)
            if (int(t.m.deg) + shifts[t.comp] != d) return false;
        return true;
    }

    MVec scale(const Elem& c) const {
        const K& k = ring_->field;
        MVec r(ring_);
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Elem v = k.mul(t.c, c);
            if (!k.is_zero(v)) r.terms_.push_back({t.comp, t.m, v});
        }
        return r;
    }

    MVec mul_term(const Monomial& m, const Elem& c) const {
        const K& k = ring_->field;
        MVec r(ring_);
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Elem v = k.mul(t.c, c);
            if (!k.is_zero(v)) r.terms_.push_back({t.comp, t.m.mul(m), v});
        }
        return r;
    }

    // this - (m * c) * o, merging sorted term lists
    MVec sub_multiple(const MVec& o, const Monomial& m, const Elem& c) const {
        const K& k = ring_->field;
        MVec r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        auto o_term = [&](size_t jj) -> MTerm<K> {
            return {o.terms_[jj].comp, o.terms_[jj].m.mul(m), k.neg(k.mul(o.terms_[jj].c, c))};
        };
        while (i < terms_.size() && j < o.terms_.size()) {
            MTerm<K> ot = o_term(j);
            if (terms_[i].comp == ot.comp && terms_[i].m == ot.m) {
                Elem v = k.add(terms_[i].c, ot.c);
                if (!k.is_zero(v)) r.terms_.push_back({terms_[i].comp, terms_[i].m, v});
                ++i; ++j;
            } else if (term_greater(ring_, terms_[i].comp, terms_[i].m, ot.comp, ot.m)) {
                r.terms_.push_back(terms_[i++]);
            } else {
                r.terms_.push_back(ot);
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o_term(j));
        return r;
    }

    MVec add(const MVec& o) const {
        std::vector<MTerm<K>> raw = terms_;
        raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
        return collect(ring_, std::move(raw));
    }

    MVec monic() const {
        if (is_zero()) return *this;
        return scale(ring_->field.inv(terms_.front().c));
    }

    bool operator==(const MVec& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        const K& k = ring_->field;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].comp != o.terms_[i].comp || !(terms_[i].m == o.terms_[i].m) ||
                !k.equal(terms_[i].c, o.terms_[i].c))
                return false;
        return true;
    }

  private:
    Ring<K> ring_;
    std::vector<MTerm<K>> terms_;
};

template <class K>
Poly<K> to_poly(const MVec<K>& v) {
    for (auto& t : v.terms())
        if (t.comp != 0) throw DomainError("vector has components beyond 0");
    return v.component(0);
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

template <class K>
struct GBElement {
    MVec<K> f;      // monic
    int sugar = 0;  // shifted sugar degree
    uint32_t divmask = 0;
};

inline uint32_t divmask_of(const Monomial& m) {
    uint32_t mask = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if (m.e[i]) mask |= (1u << i);
    return mask;
}

// Groebner basis of a submodule of R^rank (rank 1: an ideal).
template <class K>
class ModuleBasis {
  public:
    ModuleBasis() = default;
    ModuleBasis(Ring<K> ring, int rank, std::vector<int> shifts)
        : ring_(std::move(ring)), rank_(rank), shifts_(std::move(shifts)) {
        if (shifts_.empty()) shifts_.assign(rank_, 0);
    }

    const Ring<K>& ring() const { return ring_; }
    int rank() const { return rank_; }
    const std::vector<int>& shifts() const { return shifts_; }
    const std::vector<GBElement<K>>& elements() const { return elems_; }
    bool reduced() const { return reduced_; }

    std::vector<MVec<K>> vectors() const {
        std::vector<MVec<K>> v;
        v.reserve(elems_.size());
        for (auto& e : elems_) v.push_back(e.f);
        return v;
    }

    // normal form: no term of the result is divisible by any lead term.
    // Division terminates unconditionally (strict descent in the term order).
    MVec<K> normal_form(MVec<K> v, const Budget& = default_budget()) const {
        const K& k = ring_->field;
        std::vector<MTerm<K>> rem;  // accumulates in strictly descending order
        while (!v.is_zero()) {
            const MTerm<K>& lt = v.lead();
            const GBElement<K>* red = find_reducer(lt.comp, lt.m);
            if (red) {
                Monomial q = lt.m.div(red->f.lead().m);
                v = v.sub_multiple(red->f, q, k.mul(lt.c, k.inv(red->f.lead().c)));
            } else {
                rem.push_back(lt);
                std::vector<MTerm<K>> tail(v.terms().begin() + 1, v.terms().end());
                v = MVec<K>::collect(ring_, std::move(tail));
            }
        }
        return MVec<K>::collect(ring_, std::move(rem));
    }

    bool contains(const MVec<K>& v, const Budget& budget = default_budget()) const {
        return normal_form(v, budget).is_zero();
    }

    // Buchberger with Gebauer-Moeller pair pruning and sugar selection.
    void compute(std::vector<MVec<K>> gens, const Budget& budget = default_budget()) {
        const K& k = ring_->field;
        // input order is part of the deterministic tie-break
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            size_t t = add_element(g.monic());
            update_pairs(t);
        }
        long processed = 0;
        while (!pairs_.empty()) {
            size_t best = select_pair();
            Pair pr = pairs_[best];
            pairs_.erase(pairs_.begin() + best);
            if (++processed > budget.pair_cap) throw BudgetError("S-pair budget exceeded");
            if (pr.sugar > budget.degree_cap + degree_slack_)
                throw BudgetError("degree cap " + std::to_string(budget.degree_cap + degree_slack_) +
                                  " exceeded at S-pair degree " + std::to_string(pr.sugar));
            const auto& fi = elems_[pr.i].f;
            const auto& fj = elems_[pr.j].f;
            Monomial mi = pr.lcm.div(fi.lead().m);
            Monomial mj = pr.lcm.div(fj.lead().m);
            MVec<K> s = fi.mul_term(mi, k.one()).sub_multiple(fj, mj, k.one());
            int sugar = pr.sugar;
            s = normal_form_sugar(std::move(s), sugar, budget);
            if (s.is_zero()) continue;
            size_t t = add_element(s.monic(), sugar);
            update_pairs(t);
        }
        interreduce(budget);
        reduced_ = true;
    }

    // full auto-reduction; result sorted by lead term ascending
    void interreduce(const Budget& budget = default_budget()) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < elems_.size(); ++i) {
                MVec<K> f = elems_[i].f;
                elems_[i].f = MVec<K>(ring_);  // mask out
                MVec<K> r = normal_form(f, budget);
                elems_[i].f = f;
                if (r.is_zero()) {
                    elems_.erase(elems_.begin() + static_cast<long>(i));
                    changed = true;
                    break;  // restart the scan after a removal
                } else if (!(r.monic() == f)) {
                    elems_[i].f = r.monic();
                    elems_[i].divmask = divmask_of(r.lead().m);
                    changed = true;
                }
            }
        }
        std::sort(elems_.begin(), elems_.end(), [&](const GBElement<K>& a, const GBElement<K>& b) {
            return MVec<K>::term_greater(ring_, b.f.lead().comp, b.f.lead().m, a.f.lead().comp,
                                         a.f.lead().m);
        });
    }

    // Extra headroom over the configured cap (module computations carry
    // shifted degrees).
    void set_degree_slack(int s) { degree_slack_ = s; }

  private:
    struct Pair {
        size_t i, j;
        Monomial lcm;
        int comp;
        int sugar;
    };

    Ring<K> ring_;
    int rank_ = 1;
    std::vector<int> shifts_;
    std::vector<GBElement<K>> elems_;
    std::vector<Pair> pairs_;
    bool reduced_ = false;
    int degree_slack_ = 0;

    size_t add_element(MVec<K> f, int sugar = -1) {
        GBElement<K> e;
        if (sugar < 0) sugar = f.degree(shifts_);
        e.sugar = std::max(sugar, f.degree(shifts_));
        e.divmask = divmask_of(f.lead().m);
        e.f = std::move(f);
        elems_.push_back(std::move(e));
        return elems_.size() - 1;
    }

    const GBElement<K>* find_reducer(int comp, const Monomial& m) const {
        uint32_t mask = divmask_of(m);
        for (auto& e : elems_) {
            if (e.f.is_zero()) continue;
            const MTerm<K>& lt = e.f.lead();
            if (lt.comp != comp) continue;
            if ((e.divmask & ~mask) != 0) continue;
            if (lt.m.divides(m)) return &e;
        }
        return nullptr;
    }

    MVec<K> normal_form_sugar(MVec<K> v, int& sugar, const Budget& budget) const {
        const K& k = ring_->field;
        // head reduction only; tails are cleaned up by interreduce()
        while (!v.is_zero()) {
            const MTerm<K>& lt = v.lead();
            const GBElement<K>* red = find_reducer(lt.comp, lt.m);
            if (!red) break;
            Monomial q = lt.m.div(red->f.lead().m);
            sugar = std::max(sugar, red->sugar + int(q.deg));
            if (sugar > budget.degree_cap + degree_slack_)
                throw BudgetError("degree cap exceeded in reduction");
            v = v.sub_multiple(red->f, q, k.mul(lt.c, k.inv(red->f.lead().c)));
        }
        return v;
    }

    // Gebauer-Moeller update for the freshly appended element t.
    void update_pairs(size_t t) {
        const auto& ft = elems_[t].f;
        int ct = ft.lead().comp;
        const Monomial& lt = ft.lead().m;

        // drop old pairs made redundant by t (chain criterion)
        pairs_.erase(std::remove_if(pairs_.begin(), pairs_.end(),
                                    [&](const Pair& p) {
                                        if (p.comp != ct || p.i == t || p.j == t) return false;
                                        if (!lt.divides(p.lcm)) return false;
                                        Monomial lit = elems_[p.i].f.lead().m.lcm(lt);
                                        Monomial ljt = elems_[p.j].f.lead().m.lcm(lt);
                                        return !(lit == p.lcm) && !(ljt == p.lcm);
                                    }),
                     pairs_.end());

        // candidate new pairs
        std::vector<Pair> cand;
        for (size_t i = 0; i < elems_.size(); ++i) {
            if (i == t || elems_[i].f.is_zero()) continue;
            const auto& fi = elems_[i].f;
            if (fi.lead().comp != ct) continue;
            Monomial l = fi.lead().m.lcm(lt);
            int sugar = std::max(elems_[i].sugar + int(l.deg) - int(fi.lead().m.deg),
                                 elems_[t].sugar + int(l.deg) - int(lt.deg));
            cand.push_back({i, t, l, ct, sugar});
        }
        // M criterion: drop candidates whose lcm is a proper multiple of another
        std::vector<bool> dead(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b || dead[a] || dead[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) && !(cand[b].lcm == cand[a].lcm)) dead[a] = true;
            }
        // F criterion: among equal lcms keep the first; product criterion kills
        // the whole class in the rank-1 (ideal) case
        for (size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            bool coprime_class = false;
            for (size_t b = 0; b < cand.size(); ++b) {
                if (dead[b] || !(cand[b].lcm == cand[a].lcm)) continue;
                if (b != a) dead[b] = true;
                if (rank_ == 1 &&
                    elems_[cand[b].i].f.lead().m.coprime(elems_[cand[b].j].f.lead().m))
                    coprime_class = true;
            }
            if (rank_ == 1 &&
                (coprime_class || elems_[cand[a].i].f.lead().m.coprime(elems_[cand[a].j].f.lead().m)))
                dead[a] = true;
        }
        for (size_t a = 0; a < cand.size(); ++a)
            if (!dead[a]) pairs_.push_back(cand[a]);
    }

    size_t select_pair() const {
        size_t best = 0;
        for (size_t i = 1; i < pairs_.size(); ++i) {
            const Pair &a = pairs_[i], &b = pairs_[best];
            auto key = [](const Pair& p) { return std::tuple(p.sugar, int(p.lcm.deg), p.j, p.i); };
            if (key(a) < key(b)) best = i;
        }
        return best;
    }
};

// ---------------------------------------------------------------------------
// Ring-level wrapper
// ---------------------------------------------------------------------------

template <class K>
class GroebnerBasis {
  public:
    GroebnerBasis() = default;

    static GroebnerBasis compute(const std::vector<Poly<K>>& gens,
                                 const Budget& budget = default_budget()) {
        if (gens.empty()) throw InputError("empty generator list");
        Ring<K> ring = gens.front().ring();
        GroebnerBasis gb;
        gb.basis_ = ModuleBasis<K>(ring, 1, {0});
        std::vector<MVec<K>> vs;
        for (auto& g : gens) {
            g.check_same(gens.front());
            if (!g.is_zero()) vs.push_back(MVec<K>::from_poly(g));
        }
        if (vs.empty()) {
            // zero ideal: empty basis
            return gb;
        }
        gb.basis_.compute(std::move(vs), budget);
        return gb;
    }

    const Ring<K>& ring() const { return basis_.ring(); }

    std::vector<Poly<K>> generators() const {
        std::vector<Poly<K>> out;
        for (auto& e : basis_.elements()) out.push_back(to_poly(e.f));
        return out;
    }

    size_t size() const { return basis_.elements().size(); }
    bool is_zero_ideal() const { return basis_.elements().empty(); }

    bool is_unit_ideal() const {
        for (auto& e : basis_.elements())
            if (e.f.lead().m.is_one()) return true;
        return false;
    }

    Poly<K> normal_form(const Poly<K>& p, const Budget& budget = default_budget()) const {
        if (basis_.ring() && !same_ring(p.ring(), basis_.ring()))
            throw DomainError("normal form in a different ring");
        if (basis_.elements().empty()) return p;
        return to_poly(basis_.normal_form(MVec<K>::from_poly(p), budget));
    }

    bool contains(const Poly<K>& p, const Budget& budget = default_budget()) const {
        return normal_form(p, budget).is_zero();
    }

    std::vector<Monomial> lead_monomials() const {
        std::vector<Monomial> v;
        for (auto& e : basis_.elements()) v.push_back(e.f.lead().m);
        return v;
    }

    const ModuleBasis<K>& module_basis() const { return basis_; }

  private:
    ModuleBasis<K> basis_;
};

// Generators of the elimination ideal: drop the leading `block` variables
// (the ring's order must be an elimination order with that block).
template <class K>
std::vector<Poly<K>> eliminate_block(const std::vector<Poly<K>>& gens, int block,
                                     const Ring<K>& target,
                                     const Budget& budget = default_budget()) {
    if (gens.empty()) return {};
    const Ring<K>& src = gens.front().ring();
    if (src->order.kind != OrderKind::Elimination || src->order.block != block)
        throw DomainError("eliminate: ring order does not eliminate the requested block");
    GroebnerBasis<K> gb = GroebnerBasis<K>::compute(gens, budget);
    std::vector<int> var_map(src->nvars(), -1);
    for (int i = block; i < src->nvars(); ++i) var_map[i] = i - block;
    std::vector<Poly<K>> out;
    for (auto& g : gb.generators()) {
        bool free_of_block = true;
        for (int i = 0; i < block && free_of_block; ++i)
            if (g.lead().m[i]) free_of_block = false;  // lead touches block => element does
        if (free_of_block) out.push_back(map_variables(g, target, var_map));
    }
    return out;
}

// First syzygy module of module elements g_1..g_k in R^rank: Groebner basis of
// the graph {(g_i, e_i)} in R^(rank+k) under position-over-term order; basis
// elements vanishing in the first block are exactly the syzygies.
template <class K>
std::vector<MVec<K>> syzygies(const std::vector<MVec<K>>& gens, int rank,
                              const std::vector<int>& shifts,
                              const Budget& budget = default_budget()) {
    if (gens.empty()) return {};
    Ring<K> ring = gens.front().ring();
    int k = static_cast<int>(gens.size());
    std::vector<int> big_shifts = shifts;
    big_shifts.resize(rank + k, 0);
    std::vector<MVec<K>> graph;
    for (int i = 0; i < k; ++i) {
        int d = gens[i].degree(shifts);
        big_shifts[rank + i] = d < 0 ? 0 : d;
        std::vector<MTerm<K>> raw(gens[i].terms().begin(), gens[i].terms().end());
        raw.push_back({rank + i, Monomial::one(), ring->field.one()});
        graph.push_back(MVec<K>::collect(ring, std::move(raw)));
    }
    ModuleBasis<K> mb(ring, rank + k, big_shifts);
    mb.set_degree_slack(ring->nvars() + 8 +
                        *std::max_element(big_shifts.begin(), big_shifts.end()));
    mb.compute(std::move(graph), budget);
    std::vector<MVec<K>> syz;
    for (auto& e : mb.elements()) {
        bool pure = true;
        for (auto& t : e.f.terms())
            if (t.comp < rank) { pure = false; break; }
        if (!pure) continue;
        std::vector<MTerm<K>> raw;
        for (auto& t : e.f.terms()) raw.push_back({t.comp - rank, t.m, t.c});
        syz.push_back(MVec<K>::collect(ring, std::move(raw)));
    }
    return syz;
}

template <class K>
std::vector<MVec<K>> syzygies(const std::vector<Poly<K>>& gens,
                              const Budget& budget = default_budget()) {
    std::vector<MVec<K>> vs;
    for (auto& g : gens) vs.push_back(MVec<K>::from_poly(g));
    return syzygies(vs, 1, {0}, budget);
}

}  // namespace rilab
