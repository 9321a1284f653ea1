#pragma once

#include "rilab/resolution.hpp"

namespace rilab {

// Hilbert function as degree -> dimension.
struct HilbertFunction {
    int lo = 0;
    std::vector<size_t> dims;

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    size_t at(int e) const {
        int k = e - lo;
        return (k < 0 || k >= static_cast<int>(dims.size())) ? 0 : dims[static_cast<size_t>(k)];
    }
    size_t length() const {
        size_t s = 0;
        for (auto d : dims) s += d;
        return s;
    }
    // dimensions over the support, leading/trailing zeros stripped
    std::vector<size_t> values() const {
        size_t a = 0, b = dims.size();
        while (a < b && dims[a] == 0) ++a;
        while (b > a && dims[b - 1] == 0) --b;
        return std::vector<size_t>(dims.begin() + static_cast<long>(a), dims.begin() + static_cast<long>(b));
    }
    int support_lo() const {
        for (size_t k = 0; k < dims.size(); ++k)
            if (dims[k]) return lo + static_cast<int>(k);
        return 0;
    }
    bool operator==(const HilbertFunction& o) const {
        int a = std::min(lo, o.lo), b = std::max(hi(), o.hi());
        for (int e = a; e <= b; ++e)
            if (at(e) != o.at(e)) return false;
        return true;
    }
};

// Linear functional on a degree slice, stored by monomial support. Applied to
// an element of the numerator ideal it reads off one coordinate of the class
// modulo the denominator.
template <class K>
struct CoordFunctional {
    std::vector<std::pair<Monomial, typename K::Elem>> terms;
};

// Finite-length graded module: a k-basis in each degree of [lo, hi] plus the
// multiplication-by-variable maps between consecutive degrees. Quotient
// modules A/B keep polynomial lifts of their basis vectors and coordinate
// functionals valid on elements of A.
template <class K>
class FiniteModule {
  public:
    using Elem = typename K::Elem;
    using Block = std::vector<std::vector<Elem>>;  // Block[r][c]: target row r, source col c

    Ring<K> ring;
    int lo = 0;
    std::vector<size_t> dims;
    // action[v][k]: matrix of x_v from degree lo+k to lo+k+1
    std::vector<std::vector<Block>> action;
    // optional: polynomial lifts of the basis, per degree
    std::vector<std::vector<Poly<K>>> lifts;
    // optional: coordinate functionals per degree (quotient modules only)
    std::vector<std::vector<CoordFunctional<K>>> coord_fns;

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    size_t dim_at(int e) const {
        int k = e - lo;
        return (k < 0 || k >= static_cast<int>(dims.size())) ? 0 : dims[static_cast<size_t>(k)];
    }
    bool is_zero() const {
        for (auto d : dims)
            if (d) return false;
        return true;
    }
    size_t length() const {
        size_t s = 0;
        for (auto d : dims) s += d;
        return s;
    }
    HilbertFunction hilbert() const { return HilbertFunction{lo, dims}; }

    const Block& act(int var, int e) const {
        return action[static_cast<size_t>(var)][static_cast<size_t>(e - lo)];
    }

    bool has_lifts() const { return !lifts.empty(); }

    // coordinates of an element of the numerator ideal in the degree-e basis
    std::vector<Elem> class_of(const Poly<K>& p, int e) const {
        if (coord_fns.empty()) throw DomainError("module carries no coordinate data");
        for (auto& t : p.terms())
            if (int(t.m.deg) != e) throw DomainError("class_of: element is not homogeneous of that degree");
        int k = e - lo;
        std::vector<Elem> out;
        if (k >= static_cast<int>(dims.size())) return out;  // the module vanishes there
        if (k < 0) {
            if (!p.is_zero()) throw DomainError("element below the module's degree range");
            return out;
        }
        const K& kk = ring->field;
        std::unordered_map<Monomial, Elem, MonomialHash> coeffs;
        for (auto& t : p.terms()) coeffs.emplace(t.m, t.c);
        for (auto& fn : coord_fns[static_cast<size_t>(k)]) {
            Elem acc = kk.zero();
            for (auto& [m, c] : fn.terms) {
                auto it = coeffs.find(m);
                if (it != coeffs.end()) acc = kk.add(acc, kk.mul(c, it->second));
            }
            out.push_back(acc);
        }
        return out;
    }

    bool actions_commute() const {
        const K& k = ring->field;
        int n = ring->nvars();
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                for (int e = lo; e + 2 <= hi() + 1; ++e) {
                    int ka = e - lo;
                    if (ka + 1 >= static_cast<int>(dims.size())) continue;
                    const Block &av = action[v][ka], &aw = action[w][ka];
                    const Block &bv = action[v][ka + 1], &bw = action[w][ka + 1];
                    size_t s = dims[ka], mid = dims[ka + 1],
                           t = ka + 2 < static_cast<int>(dims.size()) ? dims[ka + 2] : 0;
                    for (size_t c = 0; c < s; ++c)
                        for (size_t r = 0; r < t; ++r) {
                            Elem x = k.zero(), y = k.zero();
                            for (size_t m = 0; m < mid; ++m) {
                                x = k.add(x, k.mul(bw[r][m], av[m][c]));
                                y = k.add(y, k.mul(bv[r][m], aw[m][c]));
                            }
                            if (!k.equal(x, y)) return false;
                        }
                }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

struct QuotientOptions {
    bool check_containment = true;  // verify B c A by slice membership
    int max_degree = -1;            // scan cap; default max generator degree + 64
    bool keep_lifts = true;
};

// A/B for ideals B c A, as a finite-length graded module. Bases are computed
// degree by degree: the B-slice is row-reduced, spanning elements of A are
// inserted, and the survivors' pivot columns provide coordinate functionals.
// Scanning stops at the first empty degree past the top generator degree of A
// (from there on multiplication by the variables is surjective onto the next
// piece), and the cap certifies the finite-length precondition.
template <class K>
FiniteModule<K> quotient_module(const Ideal<K>& A, const Ideal<K>& B,
                                const QuotientOptions& opt = {}) {
    const Ring<K>& r = A.ring();
    const K& k = r->field;
    FiniteModule<K> M;
    M.ring = r;
    if (!A.has_generators()) return M;

    int logen = INT32_MAX, higen = 0;
    for (auto& g : A.generators()) {
        if (!g.is_homogeneous()) throw DomainError("quotient module needs homogeneous generators");
        logen = std::min(logen, g.degree());
        higen = std::max(higen, g.degree());
    }
    for (auto& g : B.generators())
        if (!g.is_homogeneous()) throw DomainError("quotient module needs homogeneous generators");
    int cap = opt.max_degree >= 0 ? opt.max_degree : higen + 64;

    if (opt.check_containment) {
        for (auto& g : B.generators()) {
            DegreeBasis basis(r->nvars(), g.degree());
            RowSpace<K> rs(k, basis.size());
            insert_ideal_slice(rs, A.generators(), basis);
            if (!rs.contains(poly_to_vector(g, basis)))
                throw DomainError("denominator is not contained in the numerator ideal");
        }
    }

    M.lo = logen;
    M.action.assign(static_cast<size_t>(r->nvars()), {});

    struct Layer {
        DegreeBasis basis;
        RowSpace<K> rs;
        size_t first_tracked;
        std::vector<Poly<K>> lifts;
        std::vector<CoordFunctional<K>> fns;
        Layer(const K& kk, int nv, int e) : basis(nv, e), rs(kk, basis.size()), first_tracked(0) {}
    };

    auto build_layer = [&](int e) {
        auto L = std::make_unique<Layer>(k, r->nvars(), e);
        insert_ideal_slice(L->rs, B.generators(), L->basis);
        L->first_tracked = L->rs.rank();
        std::vector<Monomial> mults;
        for (auto& g : A.generators()) {
            int dg = g.degree();
            if (dg > e) continue;
            enumerate_monomials(r->nvars(), e - dg, mults);
            for (auto& m : mults) L->rs.insert(poly_to_vector(g.mul_term(m, k.one()), L->basis));
        }
        // reduced echelon within each block: the denominator rows keep
        // spanning exactly the denominator slice
        L->rs.finalize_range(0, L->first_tracked);
        L->rs.finalize_range(L->first_tracked, L->rs.rank());
        for (size_t i = L->first_tracked; i < L->rs.rank(); ++i) {
            L->lifts.push_back(vector_to_poly(r, L->rs.row(i), L->basis));
            // functional: pivot read corrected by the denominator block
            CoordFunctional<K> fn;
            int pi = L->rs.pivot(i);
            fn.terms.push_back({L->basis.monomials()[static_cast<size_t>(pi)], k.one()});
            for (size_t b = 0; b < L->first_tracked; ++b) {
                const auto& bc = L->rs.row(b)[static_cast<size_t>(pi)];
                if (!k.is_zero(bc))
                    fn.terms.push_back(
                        {L->basis.monomials()[static_cast<size_t>(L->rs.pivot(b))], k.neg(bc)});
            }
            L->fns.push_back(std::move(fn));
        }
        return L;
    };

    std::unique_ptr<Layer> cur = build_layer(M.lo);
    for (int e = M.lo;; ++e) {
        size_t dim = cur->rs.rank() - cur->first_tracked;
        if (dim == 0 && e > higen) break;
        if (e > cap)
            throw DomainError("quotient did not become zero by degree " + std::to_string(cap) +
                              "; not certified finite length");
        M.dims.push_back(dim);
        if (opt.keep_lifts) M.lifts.push_back(cur->lifts);
        M.coord_fns.push_back(cur->fns);
        auto next = build_layer(e + 1);
        for (int v = 0; v < r->nvars(); ++v) {
            typename FiniteModule<K>::Block block(next->rs.rank() - next->first_tracked,
                                                  std::vector<typename K::Elem>(dim, k.zero()));
            for (size_t j = 0; j < dim; ++j) {
                Poly<K> img = cur->lifts[j].mul_term(Monomial::var(v), k.one());
                auto vec = poly_to_vector(img, next->basis);
                auto coords = next->rs.quotient_coordinates(vec, next->first_tracked);
                for (size_t i = 0; i < coords.size(); ++i) block[i][j] = coords[i];
            }
            M.action[static_cast<size_t>(v)].push_back(std::move(block));
        }
        cur = std::move(next);
    }
    // trim trailing zero rows of action tables to match dims
    for (auto& col : M.action) col.resize(M.dims.size());
    if (!opt.keep_lifts) M.lifts.clear();
    return M;
}

// R/K as a finite module (unit numerator).
template <class K>
FiniteModule<K> quotient_ring_module(const Ideal<K>& K_, const QuotientOptions& opt = {}) {
    QuotientOptions o = opt;
    o.check_containment = false;
    return quotient_module(Ideal<K>::unit(K_.ring()), K_, o);
}

// coker(F0 <- columns) as a finite module (no lifts).
template <class K>
FiniteModule<K> cokernel_module(const ModulePresentation<K>& pres, int max_degree = -1) {
    const Ring<K>& r = pres.ring;
    const K& k = r->field;
    FiniteModule<K> M;
    M.ring = r;
    if (pres.rank == 0) return M;
    int logen = *std::min_element(pres.row_shifts.begin(), pres.row_shifts.end());
    int higen = *std::max_element(pres.row_shifts.begin(), pres.row_shifts.end());
    int cap = max_degree >= 0 ? max_degree : higen + 64;
    M.lo = logen;
    M.action.assign(static_cast<size_t>(r->nvars()), {});

    struct Layer {
        ModuleDegreeBasis basis;
        RowSpace<K> rs;
        size_t first_tracked;
        Layer(const K& kk, int nv, const std::vector<int>& sh, int e)
            : basis(nv, sh, e), rs(kk, std::max<size_t>(basis.size(), 1)), first_tracked(0) {}
    };

    auto build_layer = [&](int e) {
        auto L = std::make_unique<Layer>(k, r->nvars(), pres.row_shifts, e);
        if (L->basis.size())
            insert_module_slice(L->rs, pres.columns, pres.row_shifts, L->basis, r);
        L->first_tracked = L->rs.rank();
        for (size_t idx = 0; idx < L->basis.size(); ++idx) {
            std::vector<typename K::Elem> v(L->basis.size(), k.zero());
            v[idx] = k.one();
            L->rs.insert(std::move(v));
        }
        L->rs.finalize_range(0, L->first_tracked);
        L->rs.finalize_range(L->first_tracked, L->rs.rank());
        return L;
    };

    std::unique_ptr<Layer> cur = build_layer(M.lo);
    for (int e = M.lo;; ++e) {
        size_t dim = cur->rs.rank() - cur->first_tracked;
        if (dim == 0 && e > higen) break;
        if (e > cap)
            throw DomainError("cokernel did not become zero by degree " + std::to_string(cap) +
                              "; not certified finite length");
        M.dims.push_back(dim);
        auto next = build_layer(e + 1);
        for (int v = 0; v < r->nvars(); ++v) {
            typename FiniteModule<K>::Block block(next->rs.rank() - next->first_tracked,
                                                  std::vector<typename K::Elem>(dim, k.zero()));
            for (size_t j = 0; j < dim; ++j) {
                // image of the stored reduced basis row under multiplication
                const auto& row = cur->rs.row(cur->first_tracked + j);
                std::vector<typename K::Elem> vec(next->basis.size(), k.zero());
                for (size_t idx = 0; idx < row.size(); ++idx) {
                    if (k.is_zero(row[idx])) continue;
                    auto [comp, mono] = cur->basis.coordinate(idx);
                    int tgt = next->basis.index_of(comp, mono.mul(Monomial::var(v)));
                    if (tgt < 0) throw DomainError("cokernel action left the slice");
                    vec[static_cast<size_t>(tgt)] = k.add(vec[static_cast<size_t>(tgt)], row[idx]);
                }
                auto coords = next->rs.quotient_coordinates(vec, next->first_tracked);
                for (size_t i = 0; i < coords.size(); ++i) block[i][j] = coords[i];
            }
            M.action[static_cast<size_t>(v)].push_back(std::move(block));
        }
        cur = std::move(next);
    }
    for (auto& col : M.action) col.resize(M.dims.size());
    return M;
}

// Graded Matlis dual: degree e piece is the dual of the degree -e piece,
// variable action transposed.
template <class K>
FiniteModule<K> matlis_dual(const FiniteModule<K>& M) {
    FiniteModule<K> D;
    D.ring = M.ring;
    if (M.dims.empty()) return D;
    int hi = M.hi();
    D.lo = -hi;
    D.dims.assign(M.dims.rbegin(), M.dims.rend());
    D.action.assign(M.action.size(), {});
    const K& k = M.ring->field;
    for (size_t v = 0; v < M.action.size(); ++v) {
        for (int e = D.lo; e < D.lo + static_cast<int>(D.dims.size()) - 1; ++e) {
            // x: D_e -> D_{e+1} is the transpose of x: M_{-e-1} -> M_{-e}
            int src = -e - 1;
            const auto& act = M.act(static_cast<int>(v), src);
            size_t rows = M.dim_at(src), cols = M.dim_at(src + 1);
            typename FiniteModule<K>::Block block(rows, std::vector<typename K::Elem>(cols, k.zero()));
            for (size_t i = 0; i < act.size(); ++i)
                for (size_t j = 0; j < (act.empty() ? 0 : act[i].size()); ++j) block[j][i] = act[i][j];
            D.action[v].push_back(std::move(block));
        }
        // pad to dims size
        while (D.action[v].size() < D.dims.size()) {
            size_t kk = D.action[v].size();
            size_t tgt = kk + 1 < D.dims.size() ? D.dims[kk + 1] : 0;
            D.action[v].push_back(typename FiniteModule<K>::Block(
                tgt, std::vector<typename K::Elem>(D.dims[kk], k.zero())));
        }
    }
    return D;
}

// dimensions of the socle (kernel of every variable action) per degree
template <class K>
HilbertFunction socle_dims(const FiniteModule<K>& M) {
    HilbertFunction hf;
    hf.lo = M.lo;
    const K& k = M.ring->field;
    for (size_t kk = 0; kk < M.dims.size(); ++kk) {
        size_t dim = M.dims[kk];
        if (dim == 0) { hf.dims.push_back(0); continue; }
        size_t tgt_total = 0;
        for (size_t v = 0; v < M.action.size(); ++v) tgt_total += M.action[v][kk].size();
        DenseMat<K> sys(k, std::max<size_t>(tgt_total, 1), dim);
        size_t row = 0;
        for (size_t v = 0; v < M.action.size(); ++v)
            for (auto& r : M.action[v][kk]) {
                for (size_t c = 0; c < dim; ++c) sys.at(row, c) = r[c];
                ++row;
            }
        hf.dims.push_back(sys.nullspace().size());
    }
    return hf;
}

// socle membership of a vector in the degree-e piece
template <class K>
bool in_socle(const FiniteModule<K>& M, const std::vector<typename K::Elem>& v, int e) {
    const K& k = M.ring->field;
    int kk = e - M.lo;
    if (kk < 0 || kk >= static_cast<int>(M.dims.size())) return false;
    for (size_t var = 0; var < M.action.size(); ++var) {
        const auto& block = M.action[var][static_cast<size_t>(kk)];
        for (auto& row : block) {
            typename K::Elem acc = k.zero();
            for (size_t c = 0; c < v.size(); ++c) acc = k.add(acc, k.mul(row[c], v[c]));
            if (!k.is_zero(acc)) return false;
        }
    }
    return true;
}

// artinian graded algebra R/K is Gorenstein iff its socle is 1-dimensional
template <class K>
bool is_gorenstein_artinian(const FiniteModule<K>& quotient_ring) {
    return socle_dims(quotient_ring).length() == 1;
}

// ---------------------------------------------------------------------------
// Graded Hom by linear algebra
// ---------------------------------------------------------------------------

// A degree-shift homomorphism as one block per source degree.
template <class K>
struct HomElement {
    int shift = 0;
    int src_lo = 0;  // block k maps degree src_lo+k
    std::vector<typename FiniteModule<K>::Block> blocks;
};

// Basis of the space of maps M -> N of degree `shift` commuting with every
// variable action.
template <class K>
std::vector<HomElement<K>> hom_space(const FiniteModule<K>& M, const FiniteModule<K>& N, int shift) {
    const K& k = M.ring->field;
    size_t nblocks = M.dims.size();
    std::vector<size_t> offset(nblocks + 1, 0);
    for (size_t kk = 0; kk < nblocks; ++kk)
        offset[kk + 1] = offset[kk] + M.dims[kk] * N.dim_at(M.lo + static_cast<int>(kk) + shift);
    size_t unknowns = offset[nblocks];
    if (unknowns == 0) return {};

    // equations: per variable, per degree e: N.act o X_e - X_{e+1} o M.act = 0
    std::vector<std::vector<typename K::Elem>> eqs;
    for (size_t v = 0; v < M.action.size(); ++v) {
        for (size_t kk = 0; kk < nblocks; ++kk) {
            int e = M.lo + static_cast<int>(kk);
            size_t sdim = M.dims[kk];
            size_t tdim = N.dim_at(e + shift);
            size_t sdim1 = M.dim_at(e + 1);
            size_t tdim1 = N.dim_at(e + 1 + shift);
            if (sdim == 0 || tdim1 == 0) continue;
            const auto& mact = M.action[v][kk];
            const typename FiniteModule<K>::Block* nact =
                tdim && e + shift >= N.lo && e + shift - N.lo < static_cast<int>(N.dims.size())
                    ? &N.act(static_cast<int>(v), e + shift)
                    : nullptr;
            for (size_t r = 0; r < tdim1; ++r)
                for (size_t c = 0; c < sdim; ++c) {
                    std::vector<typename K::Elem> eq(unknowns, k.zero());
                    // (N.act X_e)_{r,c} = sum_m N.act[r][m] X_e[m][c]
                    if (nact)
                        for (size_t m = 0; m < tdim; ++m)
                            eq[offset[kk] + m * sdim + c] = k.add(eq[offset[kk] + m * sdim + c],
                                                                  (*nact)[r][m]);
                    // -(X_{e+1} M.act)_{r,c} = -sum_m X_{e+1}[r][m] M.act[m][c]
                    if (kk + 1 < nblocks && sdim1)
                        for (size_t m = 0; m < sdim1; ++m)
                            eq[offset[kk + 1] + r * sdim1 + m] =
                                k.sub(eq[offset[kk + 1] + r * sdim1 + m], mact[m][c]);
                    eqs.push_back(std::move(eq));
                }
        }
    }
    DenseMat<K> sys(k, std::max<size_t>(eqs.size(), 1), unknowns);
    for (size_t i = 0; i < eqs.size(); ++i)
        for (size_t j = 0; j < unknowns; ++j) sys.at(i, j) = eqs[i][j];
    auto null = sys.nullspace();

    std::vector<HomElement<K>> basis;
    for (auto& x : null) {
        HomElement<K> h;
        h.shift = shift;
        h.src_lo = M.lo;
        for (size_t kk = 0; kk < nblocks; ++kk) {
            size_t sdim = M.dims[kk];
            size_t tdim = N.dim_at(M.lo + static_cast<int>(kk) + shift);
            typename FiniteModule<K>::Block b(tdim, std::vector<typename K::Elem>(sdim, k.zero()));
            for (size_t r = 0; r < tdim; ++r)
                for (size_t c = 0; c < sdim; ++c) b[r][c] = x[offset[kk] + r * sdim + c];
            h.blocks.push_back(std::move(b));
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

// All shifts where a nonzero map could exist.
template <class K>
std::pair<int, int> hom_shift_range(const FiniteModule<K>& M, const FiniteModule<K>& N) {
    if (M.is_zero() || N.is_zero()) return {0, -1};
    return {N.lo - M.hi(), N.hi() - M.lo};
}

// Hom(M, N) as a graded module: dims per shift plus the chosen bases.
template <class K>
struct HomModule {
    FiniteModule<K> module;
    std::vector<std::vector<HomElement<K>>> bases;  // per degree slot of `module`
};

template <class K>
HomModule<K> hom_module(const FiniteModule<K>& M, const FiniteModule<K>& N) {
    const K& k = M.ring->field;
    HomModule<K> H;
    H.module.ring = M.ring;
    auto [slo, shi] = hom_shift_range(M, N);
    if (slo > shi) return H;
    H.module.lo = slo;
    H.module.action.assign(static_cast<size_t>(M.ring->nvars()), {});
    for (int s = slo; s <= shi; ++s) {
        H.bases.push_back(hom_space(M, N, s));
        H.module.dims.push_back(H.bases.back().size());
    }
    // action: (x phi)_e = N.act o phi_e, expressed in the next shift's basis
    for (int v = 0; v < M.ring->nvars(); ++v) {
        for (int s = slo; s <= shi; ++s) {
            size_t cur = H.module.dims[static_cast<size_t>(s - slo)];
            size_t nxt = s + 1 <= shi ? H.module.dims[static_cast<size_t>(s + 1 - slo)] : 0;
            typename FiniteModule<K>::Block block(nxt, std::vector<typename K::Elem>(cur, k.zero()));
            if (cur && nxt) {
                // flatten target hom space for solving
                const auto& tgt_basis = H.bases[static_cast<size_t>(s + 1 - slo)];
                size_t flat = 0;
                for (size_t kk = 0; kk < M.dims.size(); ++kk)
                    flat += M.dims[kk] * N.dim_at(M.lo + static_cast<int>(kk) + s + 1);
                DenseMat<K> sys(k, flat, nxt);
                for (size_t b = 0; b < nxt; ++b) {
                    size_t row = 0;
                    for (size_t kk = 0; kk < M.dims.size(); ++kk) {
                        const auto& blk = tgt_basis[b].blocks[kk];
                        for (auto& r : blk)
                            for (auto& x : r) sys.at(row++, b) = x;
                    }
                }
                for (size_t j = 0; j < cur; ++j) {
                    const auto& phi = H.bases[static_cast<size_t>(s - slo)][j];
                    std::vector<typename K::Elem> img(flat, k.zero());
                    size_t row = 0;
                    for (size_t kk = 0; kk < M.dims.size(); ++kk) {
                        int e = M.lo + static_cast<int>(kk);
                        size_t sdim = M.dims[kk];
                        size_t tdim1 = N.dim_at(e + s + 1);
                        size_t tdim = N.dim_at(e + s);
                        // rows of the composed block N.act o phi_e
                        for (size_t r = 0; r < tdim1; ++r)
                            for (size_t c = 0; c < sdim; ++c) {
                                typename K::Elem acc = k.zero();
                                if (tdim) {
                                    const auto& nact = N.act(v, e + s);
                                    const auto& pb = phi.blocks[kk];
                                    for (size_t m = 0; m < tdim; ++m)
                                        acc = k.add(acc, k.mul(nact[r][m], pb[m][c]));
                                }
                                img[row++] = acc;
                            }
                    }
                    std::vector<typename K::Elem> coords;
                    if (!sys.solve(img, coords))
                        throw DomainError("hom action left the hom space");
                    for (size_t i = 0; i < nxt; ++i) block[i][j] = coords[i];
                }
            }
            H.module.action[static_cast<size_t>(v)].push_back(std::move(block));
        }
        H.module.action[static_cast<size_t>(v)].resize(H.module.dims.size());
    }
    return H;
}

// Random search for an isomorphism (all blocks square and invertible) in the
// span of a hom basis. Seeded and deterministic.
template <class K>
bool iso_in_span(const FiniteModule<K>& M, const FiniteModule<K>& N, int shift,
                 const std::vector<HomElement<K>>& basis, uint64_t seed, int trials = 24) {
    for (int e = M.lo; e <= M.hi(); ++e)
        if (M.dim_at(e) != N.dim_at(e + shift)) return false;
    for (int e = N.lo; e <= N.hi(); ++e)
        if (N.dim_at(e) != M.dim_at(e - shift)) return false;
    if (basis.empty()) return M.is_zero();
    const K& k = M.ring->field;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        bool ok = true;
        // random combination, checked blockwise
        std::vector<typename K::Elem> c;
        for (size_t i = 0; i < basis.size(); ++i) c.push_back(k.random(rng));
        for (size_t kk = 0; kk < M.dims.size() && ok; ++kk) {
            size_t n = M.dims[kk];
            if (n == 0) continue;
            DenseMat<K> blk(k, n, n);
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t r = 0; r < n; ++r)
                    for (size_t cc = 0; cc < n; ++cc)
                        blk.at(r, cc) = k.add(blk.at(r, cc), k.mul(c[i], basis[i].blocks[kk][r][cc]));
            if (!blk.invertible()) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

// Existence of an isomorphism M ~ N in some shift; returns the shift.
template <class K>
std::optional<int> find_isomorphism_shift(const FiniteModule<K>& M, const FiniteModule<K>& N,
                                          uint64_t seed) {
    if (M.is_zero() && N.is_zero()) return 0;
    if (M.is_zero() != N.is_zero()) return std::nullopt;
    if (M.length() != N.length()) return std::nullopt;
    auto [slo, shi] = hom_shift_range(M, N);
    for (int s = slo; s <= shi; ++s) {
        bool aligned = true;
        for (int e = M.lo; e <= M.hi() && aligned; ++e)
            if (M.dim_at(e) != N.dim_at(e + s)) aligned = false;
        if (!aligned) continue;
        auto basis = hom_space(M, N, s);
        if (iso_in_span(M, N, s, basis, seed)) return s;
    }
    return std::nullopt;
}

enum class SurjectionVerdict { Found, CertifiedNone, NoneFound };

// Search for a surjection M ->> N in some shift. "CertifiedNone" means the
// joint image of the whole hom space already misses a degree, so no single
// map can surject; "NoneFound" is a failed randomized search.
template <class K>
SurjectionVerdict surjection_search(const FiniteModule<K>& M, const FiniteModule<K>& N,
                                    uint64_t seed, int trials = 32) {
    if (N.is_zero()) return SurjectionVerdict::Found;
    const K& k = M.ring->field;
    auto [slo, shi] = hom_shift_range(M, N);
    bool all_certified = true;
    for (int s = slo; s <= shi; ++s) {
        bool possible = true;
        for (int e = N.lo; e <= N.hi(); ++e)
            if (N.dim_at(e) > M.dim_at(e - s)) possible = false;
        if (!possible) continue;
        auto basis = hom_space(M, N, s);
        if (basis.empty()) continue;
        // joint-image certificate per degree
        bool joint_full = true;
        for (int e = N.lo; e <= N.hi() && joint_full; ++e) {
            size_t tdim = N.dim_at(e);
            if (tdim == 0) continue;
            size_t kk = static_cast<size_t>(e - s - M.lo);
            if (e - s < M.lo || kk >= M.dims.size() || M.dims[kk] == 0) { joint_full = false; break; }
            DenseMat<K> joint(k, tdim, basis.size() * M.dims[kk]);
            for (size_t b = 0; b < basis.size(); ++b)
                for (size_t c = 0; c < M.dims[kk]; ++c)
                    for (size_t r = 0; r < tdim; ++r)
                        joint.at(r, b * M.dims[kk] + c) = basis[b].blocks[kk][r][c];
            if (joint.rank() < tdim) joint_full = false;
        }
        if (!joint_full) continue;
        all_certified = false;
        Rng rng(seed ^ static_cast<uint64_t>(s * 2654435761u));
        for (int t = 0; t < trials; ++t) {
            std::vector<typename K::Elem> c;
            for (size_t i = 0; i < basis.size(); ++i) c.push_back(k.random(rng));
            bool surj = true;
            for (int e = N.lo; e <= N.hi() && surj; ++e) {
                size_t tdim = N.dim_at(e);
                if (tdim == 0) continue;
                size_t kk = static_cast<size_t>(e - s - M.lo);
                size_t sdim = M.dims[kk];
                DenseMat<K> blk(k, tdim, sdim);
                for (size_t i = 0; i < basis.size(); ++i)
                    for (size_t r = 0; r < tdim; ++r)
                        for (size_t cc = 0; cc < sdim; ++cc)
                            blk.at(r, cc) = k.add(blk.at(r, cc), k.mul(c[i], basis[i].blocks[kk][r][cc]));
                if (blk.rank() < tdim) surj = false;
            }
            if (surj) return SurjectionVerdict::Found;
        }
    }
    return all_certified ? SurjectionVerdict::CertifiedNone : SurjectionVerdict::NoneFound;
}

// length computed through one block-diagonal system over all degrees at once
template <class K>
size_t length_by_joint_system(const Ideal<K>& A, const Ideal<K>& B, int lo, int hi) {
    const Ring<K>& r = A.ring();
    const K& k = r->field;
    std::vector<DegreeBasis> bases;
    std::vector<size_t> off{0};
    for (int e = lo; e <= hi; ++e) {
        bases.emplace_back(r->nvars(), e);
        off.push_back(off.back() + bases.back().size());
    }
    RowSpace<K> rs(k, off.back());
    auto insert_all = [&](const std::vector<Poly<K>>& gens, bool count) {
        size_t added = 0;
        std::vector<Monomial> mults;
        for (int e = lo; e <= hi; ++e) {
            const auto& basis = bases[static_cast<size_t>(e - lo)];
            for (auto& g : gens) {
                if (g.is_zero() || g.degree() > e) continue;
                enumerate_monomials(r->nvars(), e - g.degree(), mults);
                for (auto& m : mults) {
                    std::vector<typename K::Elem> big(off.back(), k.zero());
                    auto v = poly_to_vector(g.mul_term(m, k.one()), basis);
                    std::copy(v.begin(), v.end(), big.begin() + static_cast<long>(off[static_cast<size_t>(e - lo)]));
                    if (rs.insert(std::move(big)) >= 0) ++added;
                }
            }
        }
        return count ? added : size_t(0);
    };
    insert_all(B.generators(), false);
    return insert_all(A.generators(), true);
}

}  // namespace rilab
