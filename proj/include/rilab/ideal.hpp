#pragma once

#include <map>
#include <memory>
#include <optional>

#include "rilab/matrix.hpp"

namespace rilab {

// Plain division of p by a fixed list (not a Groebner basis): the remainder
// depends on list order, which is all interreduction needs.
template <class K>
Poly<K> normal_form_list(Poly<K> p, const std::vector<Poly<K>>& divisors) {
    const K& k = p.ring()->field;
    std::vector<Term<K>> rem;
    while (!p.is_zero()) {
        const Term<K>& lt = p.lead();
        const Poly<K>* red = nullptr;
        for (auto& d : divisors)
            if (!d.is_zero() && d.lead().m.divides(lt.m)) { red = &d; break; }
        if (red) {
            Monomial q = lt.m.div(red->lead().m);
            p = p - red->mul_term(q, k.mul(lt.c, k.inv(red->lead().c)));
        } else {
            rem.push_back(lt);
            std::vector<Term<K>> tail(p.terms().begin() + 1, p.terms().end());
            p = Poly<K>::collect(p.ring(), std::move(tail));
        }
    }
    return Poly<K>::collect(p.ring(), std::move(rem));
}

// Autoreduce a generator list: drop redundant generators, reduce tails.
// Deterministic; keeps monic normal forms sorted by lead term ascending.
template <class K>
std::vector<Poly<K>> interreduce_polys(std::vector<Poly<K>> gens) {
    if (gens.empty()) return gens;
    const Ring<K>& r = gens.front().ring();
    std::vector<Poly<K>> work;
    for (auto& g : gens)
        if (!g.is_zero()) work.push_back(g.monic());
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(work.begin(), work.end(), [&](const Poly<K>& a, const Poly<K>& b) {
            return r->order.less(a.lead().m, b.lead().m);
        });
        for (size_t i = 0; i < work.size(); ++i) {
            Poly<K> g = work[i];
            std::vector<Poly<K>> others;
            for (size_t j = 0; j < work.size(); ++j)
                if (j != i) others.push_back(work[j]);
            Poly<K> nf = normal_form_list(g, others);
            if (nf.is_zero()) {
                work.erase(work.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            if (!(nf.monic() == g)) {
                work[i] = nf.monic();
                changed = true;
                break;
            }
        }
    }
    return work;
}

// Homogeneous ideal with lazily cached Groebner basis and invariants.
template <class K>
class Ideal {
  public:
    Ideal() = default;

    Ideal(Ring<K> ring, std::vector<Poly<K>> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens) {
            if (!same_ring(g.ring(), ring_)) throw DomainError("generator from a different ring");
            if (!g.is_zero()) gens_.push_back(g);
        }
    }

    static Ideal unit(const Ring<K>& r) { return Ideal(r, {Poly<K>::constant(r, r->field.one())}); }
    static Ideal zero(const Ring<K>& r) { return Ideal(r, {}); }

    // the irrelevant maximal ideal (x_1..x_d)
    static Ideal irrelevant(const Ring<K>& r) {
        std::vector<Poly<K>> v;
        for (int i = 0; i < r->nvars(); ++i) v.push_back(Poly<K>::variable(r, i));
        return Ideal(r, v);
    }

    const Ring<K>& ring() const { return ring_; }
    const std::vector<Poly<K>>& generators() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    bool is_homogeneous() const {
        for (auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    // generator degrees (for homogeneous generators of fixed degrees)
    std::vector<int> generator_degrees() const {
        std::vector<int> v;
        for (auto& g : gens_) v.push_back(g.degree());
        return v;
    }

    const GroebnerBasis<K>& groebner(const Budget& budget = default_budget()) const {
        if (!cache_->gb) {
            if (gens_.empty()) {
                GroebnerBasis<K> gb;  // zero ideal: empty basis
                cache_->gb = gb;
            } else {
                cache_->gb = GroebnerBasis<K>::compute(gens_, budget);
            }
        }
        return *cache_->gb;
    }

    bool contains(const Poly<K>& p, const Budget& budget = default_budget()) const {
        if (gens_.empty()) return p.is_zero();
        return groebner(budget).contains(p, budget);
    }

    bool contains(const Ideal& other, const Budget& budget = default_budget()) const {
        for (auto& g : other.gens_)
            if (!contains(g, budget)) return false;
        return true;
    }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit(const Budget& budget = default_budget()) const {
        if (gens_.empty()) return false;
        return groebner(budget).is_unit_ideal();
    }

    bool equals(const Ideal& other, const Budget& budget = default_budget()) const {
        if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
        auto a = groebner(budget).generators();
        auto b = other.groebner(budget).generators();
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

    // Krull dimension of R/I (leading-term computation, valid for any global
    // order): max cardinality of a variable set meeting no lead monomial.
    int dimension(const Budget& budget = default_budget()) const {
        if (gens_.empty()) return ring_->nvars();
        if (cache_->dim) return *cache_->dim;
        const auto leads = groebner(budget).lead_monomials();
        int n = ring_->nvars();
        std::vector<uint32_t> supports;
        supports.reserve(leads.size());
        for (auto& m : leads) supports.push_back(divmask_of(m));
        for (auto s : supports)
            if (s == 0) { cache_->dim = -1; return -1; }  // unit ideal: empty variety
        int best = -1;
        uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        for (uint32_t set = 0;; ++set) {
            uint32_t s = set & full;
            if (s == set) {
                bool independent = true;
                for (auto sup : supports)
                    if ((sup & ~s) == 0) { independent = false; break; }
                if (independent) best = std::max(best, __builtin_popcount(s));
            }
            if (set == full) break;
        }
        cache_->dim = best;
        return best;
    }

    // codim = d - dim; unit ideal reports d+1 (empty variety sentinel),
    // zero ideal reports 0.
    int codimension(const Budget& budget = default_budget()) const {
        int dim = dimension(budget);
        return ring_->nvars() - dim;  // dim = -1 for the unit ideal
    }

    Ideal interreduced() const { return Ideal(ring_, interreduce_polys(gens_)); }

  private:
    struct Cache {
        std::optional<GroebnerBasis<K>> gb;
        std::optional<int> dim;
    };

    Ring<K> ring_;
    std::vector<Poly<K>> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Poly<K>> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal<K>(a.ring(), std::move(gens));
}

// Cheap redundancy removal for large dense generator sets: a generator is
// dropped when it reduces to zero against the others, but reduction is only
// attempted when its lead is divisible by another lead.
template <class K>
std::vector<Poly<K>> trim_generators(std::vector<Poly<K>> gens) {
    if (gens.empty()) return gens;
    const Ring<K>& r = gens.front().ring();
    std::vector<Poly<K>> work;
    for (auto& g : gens)
        if (!g.is_zero()) work.push_back(g.monic());
    std::sort(work.begin(), work.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return r->order.less(a.lead().m, b.lead().m);
    });
    // drop exact duplicates
    work.erase(std::unique(work.begin(), work.end()), work.end());
    std::vector<bool> alive(work.size(), true);
    for (size_t i = work.size(); i-- > 0;) {  // high leads first
        bool candidate = false;
        for (size_t j = 0; j < work.size() && !candidate; ++j)
            if (j != i && alive[j] && work[j].lead().m.divides(work[i].lead().m)) candidate = true;
        if (!candidate) continue;
        std::vector<Poly<K>> others;
        for (size_t j = 0; j < work.size(); ++j)
            if (j != i && alive[j]) others.push_back(work[j]);
        if (normal_form_list(work[i], others).is_zero()) alive[i] = false;
    }
    std::vector<Poly<K>> kept;
    for (size_t i = 0; i < work.size(); ++i)
        if (alive[i]) kept.push_back(work[i]);
    return kept;
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    std::vector<Poly<K>> gens;
    for (auto& f : a.generators())
        for (auto& g : b.generators()) gens.push_back(f * g);
    return Ideal<K>(a.ring(), trim_generators(std::move(gens)));
}

// I^u, with I^0 = (1); iterated product, interreducing after each step.
template <class K>
Ideal<K> ideal_power(const Ideal<K>& I, int u) {
    if (u < 0) throw InputError("negative ideal power");
    if (u == 0) return Ideal<K>::unit(I.ring());
    Ideal<K> r = I;
    for (int i = 1; i < u; ++i) r = ideal_product(r, I);
    return r;
}

// A cap B by the classic trick: eliminate t from t*A + (1-t)*B.
template <class K>
Ideal<K> intersect(const Ideal<K>& A, const Ideal<K>& B, const Budget& budget = default_budget()) {
    if (!same_ring(A.ring(), B.ring())) throw DomainError("intersection across rings");
    if (A.is_zero() || B.is_zero()) return Ideal<K>::zero(A.ring());
    const Ring<K>& r = A.ring();
    std::string fresh = "t@";
    Ring<K> ext = extend_front(r, fresh);
    std::vector<int> up(r->nvars());
    for (int i = 0; i < r->nvars(); ++i) up[i] = i + 1;
    Poly<K> t = Poly<K>::variable(ext, 0);
    Poly<K> one = Poly<K>::constant(ext, ext->field.one());
    std::vector<Poly<K>> gens;
    for (auto& f : A.generators()) gens.push_back(t * map_variables(f, ext, up));
    for (auto& g : B.generators()) gens.push_back((one - t) * map_variables(g, ext, up));
    auto elim = eliminate_block(gens, 1, r, budget);
    return Ideal<K>(r, interreduce_polys(std::move(elim)));
}

// exact division f / b (f must be a multiple of b)
template <class K>
Poly<K> divide_exact(const Poly<K>& f, const Poly<K>& b) {
    const K& k = f.ring()->field;
    Poly<K> rem = f, quot = Poly<K>::zero(f.ring());
    while (!rem.is_zero()) {
        const Term<K>& lt = rem.lead();
        if (!b.lead().m.divides(lt.m)) throw DomainError("inexact polynomial division");
        Monomial q = lt.m.div(b.lead().m);
        typename K::Elem c = k.mul(lt.c, k.inv(b.lead().c));
        quot = quot + Poly<K>::monomial(f.ring(), q, c);
        rem = rem - b.mul_term(q, c);
    }
    return quot;
}

// A : b for a single element, computed as (A cap (b)) / b.
template <class K>
Ideal<K> colon_by_element(const Ideal<K>& A, const Poly<K>& b, const Budget& budget = default_budget()) {
    if (b.is_zero()) throw DomainError("colon by zero element");
    Ideal<K> cap = intersect(A, Ideal<K>(A.ring(), {b}), budget);
    std::vector<Poly<K>> gens;
    for (auto& f : cap.generators()) gens.push_back(divide_exact(f, b));
    return Ideal<K>(A.ring(), interreduce_polys(std::move(gens)));
}

// A : B = intersection of A : b over generators b of B.
template <class K>
Ideal<K> colon(const Ideal<K>& A, const Ideal<K>& B, const Budget& budget = default_budget()) {
    if (!same_ring(A.ring(), B.ring())) throw DomainError("colon across rings");
    if (B.is_zero()) throw DomainError("colon by the zero ideal");
    std::optional<Ideal<K>> acc;
    for (auto& b : B.generators()) {
        Ideal<K> q = colon_by_element(A, b, budget);
        acc = acc ? intersect(*acc, q, budget) : q;
    }
    return acc ? *acc : Ideal<K>::unit(A.ring());
}

// A : B^infinity, the stabilized iterated colon.
template <class K>
Ideal<K> saturate(const Ideal<K>& A, const Ideal<K>& B, const Budget& budget = default_budget()) {
    Ideal<K> cur = A;
    for (int step = 0; step < 256; ++step) {
        if (B.is_unit(budget)) return cur;
        Ideal<K> next = colon(cur, B, budget);
        if (next.equals(cur, budget)) return cur;
        cur = next;
    }
    throw BudgetError("saturation did not stabilize within the step cap");
}

// ---------------------------------------------------------------------------
// Presentations and Fitting ideals
// ---------------------------------------------------------------------------

// A presentation F1 -> F0 of a module: columns are the relations among the
// rank-many generators; row_shifts grade the generators.
template <class K>
struct ModulePresentation {
    Ring<K> ring;
    int rank = 0;
    std::vector<int> row_shifts;
    std::vector<MVec<K>> columns;

    PolyMatrix<K> matrix() const {
        return PolyMatrix<K>::from_columns(ring, static_cast<size_t>(rank), columns);
    }

    bool is_graded() const {
        for (auto& c : columns)
            if (!c.is_homogeneous(row_shifts)) return false;
        return true;
    }
};

// First syzygies of the given generators (a Groebner basis of the syzygy
// module, interreduced).
template <class K>
ModulePresentation<K> syzygy_module(const std::vector<Poly<K>>& gens,
                                    const Budget& budget = default_budget()) {
    if (gens.empty()) throw InputError("syzygies of an empty generator list");
    ModulePresentation<K> pres;
    pres.ring = gens.front().ring();
    pres.rank = static_cast<int>(gens.size());
    for (auto& g : gens) pres.row_shifts.push_back(std::max(0, g.degree()));
    pres.columns = syzygies(gens, budget);
    return pres;
}

// Fitting ideal convention: Fitt_i(M) = ideal of (rank - i)-minors of the
// presentation matrix, rank = rank F0. Out-of-range sizes give the zero or
// unit ideal.
template <class K>
Ideal<K> fitting_ideal(const ModulePresentation<K>& pres, int i) {
    int size = pres.rank - i;
    if (size <= 0) return Ideal<K>::unit(pres.ring);
    PolyMatrix<K> m = pres.matrix();
    if (size > static_cast<int>(std::min(m.rows(), m.cols()))) return Ideal<K>::zero(pres.ring);
    auto gens = minors(m, static_cast<size_t>(size));
    return Ideal<K>(pres.ring, interreduce_polys(std::move(gens)));
}

struct GsResult {
    bool holds = true;
    int first_failing_level = -1;  // smallest s at which G_s fails, when any
    std::vector<int> fitting_codims;
};

// Local generator-count bound via Fitting-ideal codimensions:
// codim Fitt_j(I) >= j+1 for 1 <= j <= min(s-1, d).
template <class K>
GsResult check_Gs(const Ideal<K>& I, int s, const Budget& budget = default_budget()) {
    if (I.is_zero() || !I.has_generators()) throw DomainError("G_s test needs a nonzero ideal");
    auto mingens = interreduce_polys(I.generators());
    ModulePresentation<K> pres = syzygy_module(mingens, budget);
    GsResult res;
    int d = I.ring()->nvars();
    for (int j = 1; j <= std::min(s - 1, d); ++j) {
        Ideal<K> fitt = fitting_ideal(pres, j);
        int codim = fitt.is_zero() ? 0 : fitt.codimension(budget);
        res.fitting_codims.push_back(codim);
        if (codim < j + 1 && res.holds) {
            res.holds = false;
            res.first_failing_level = j + 1;
        }
    }
    return res;
}

}  // namespace rilab
