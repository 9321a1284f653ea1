#pragma once

#include <map>

#include "rilab/jacobian.hpp"

namespace rilab {

// A catalog entry: a deterministic constructor for one example family, the
// recipe for J, and the properties the construction is expected to have
// (assertions are claims that the test suite re-verifies, not trust).
template <class K>
struct CatalogEntry {
    std::string id;
    std::string title;
    std::map<std::string, long> params;
    Ring<K> ring;
    Ideal<K> I;
    int j_count = 0;
    int j_degree = 0;
    std::vector<Poly<K>> j_explicit;  // used instead of general elements when set
    std::vector<std::string> notes;
    std::map<std::string, long> expected;  // machine-checkable claims

    bool has_explicit_j() const { return !j_explicit.empty(); }

    Ideal<K> make_j(uint64_t seed) const {
        if (has_explicit_j()) return Ideal<K>(ring, j_explicit);
        return Ideal<K>(ring, general_elements(I, j_count, j_degree, seed));
    }
};

// --- constructors -----------------------------------------------------------

// I = (x,y)^2 in three variables; J = three general cubics inside it.
inline CatalogEntry<Fp> mystery_module_entry(int64_t p = 32003) {
    CatalogEntry<Fp> e;
    e.id = "mystery-module";
    e.title = "square of a height-two linear ideal; self-dual beyond perfect pairings";
    e.ring = make_ring(Fp(p), {"x", "y", "z"});
    e.I = ideal_power(Ideal<Fp>(e.ring, {Poly<Fp>::variable(e.ring, 0), Poly<Fp>::variable(e.ring, 1)}), 2);
    e.j_count = 3;
    e.j_degree = 3;
    e.expected = {{"codim_I", 2}, {"mu_I", 3}, {"s", 3}, {"t", 1}, {"codim_K", 3}};
    e.notes = {"Hilbert functions 3,4,3 / 5,2 / 6,3,1",
               "multiplication pairing into the top piece is inapplicable",
               "self-dual against the canonical module"};
    return e;
}

// 2x2 minors of a matrix with linear entries; fixed special shapes for the
// quartic curve and the Veronese, random otherwise.
inline CatalogEntry<Fp> generic_determinantal_entry(int rows, int cols, int nvars, uint64_t seed,
                                                    int64_t p = 32003) {
    CatalogEntry<Fp> e;
    e.id = "det-" + std::to_string(rows) + "x" + std::to_string(cols);
    e.title = "minors of a random matrix with linear entries";
    e.params = {{"rows", rows}, {"cols", cols}, {"nvars", nvars}, {"seed", static_cast<long>(seed)}};
    e.ring = make_ring(Fp(p), numbered_names("x", nvars, 0));
    SeedStream seeds(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng rng(seeds.next());
        PolyMatrix<Fp> m(e.ring, static_cast<size_t>(rows), static_cast<size_t>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                std::vector<Term<Fp>> raw;
                for (int v = 0; v < nvars; ++v) {
                    auto c = e.ring->field.random(rng);
                    if (c) raw.push_back({Monomial::var(v), c});
                }
                m.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
                    Poly<Fp>::collect(e.ring, std::move(raw));
            }
        int r = std::min(rows, cols);
        auto gens = minors(m, static_cast<size_t>(r));
        Ideal<Fp> I(e.ring, interreduce_polys(std::move(gens)));
        int expected_codim = (rows - r + 1) * (cols - r + 1);
        if (I.codimension() == std::min(expected_codim, nvars)) {
            e.I = I;
            e.expected["codim_I"] = std::min(expected_codim, nvars);
            e.j_count = static_cast<int>(I.generators().size()) - 2;  // s = mu - 2 keeps t = 1 here
            e.j_degree = r + 1;
            if (rows == 2 && cols == 4 && nvars == 5) {
                e.j_count = 4;
                e.j_degree = 3;
                e.expected["s"] = 4;
                e.expected["t"] = 1;
                e.expected["G_holds"] = 4;
            }
            if (attempt) e.notes.push_back("reseeded " + std::to_string(attempt) + " times");
            return e;
        }
    }
    throw BudgetError("random determinantal ideal kept degenerating");
}

// the quartic curve: 2x2 minors of the sliding 2x4 matrix in five variables
inline CatalogEntry<Fp> rational_quartic_entry(int64_t p = 32003) {
    CatalogEntry<Fp> e;
    e.id = "rational-quartic";
    e.title = "quartic curve: minors of the sliding 2x4 matrix";
    e.ring = make_ring(Fp(p), numbered_names("x", 5, 0));
    PolyMatrix<Fp> m(e.ring, 2, 4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, static_cast<size_t>(j)) = Poly<Fp>::variable(e.ring, j);
        m.at(1, static_cast<size_t>(j)) = Poly<Fp>::variable(e.ring, j + 1);
    }
    e.I = Ideal<Fp>(e.ring, interreduce_polys(minors(m, 2)));
    e.j_count = 5;
    e.j_degree = 3;
    e.expected = {{"codim_I", 3}, {"s", 5}, {"t", 2}, {"G_holds", 5}, {"depth_RI2", 0}};
    e.notes = {"satisfies the local generator bound at every level",
               "depth of R/I^2 is zero, so the standing depth conditions fail",
               "the first duality pairing fails"};
    return e;
}

// 2x2 minors of the generic symmetric 3x3 matrix in six variables
inline CatalogEntry<Fp> veronese_entry(int64_t p = 32003) {
    CatalogEntry<Fp> e;
    e.id = "veronese";
    e.title = "minors of the generic symmetric 3x3 matrix";
    e.ring = make_ring(Fp(p), numbered_names("x", 6, 0));
    auto v = [&](int i) { return Poly<Fp>::variable(e.ring, i); };
    PolyMatrix<Fp> m(e.ring, 3, 3);
    m.at(0, 0) = v(0); m.at(0, 1) = v(1); m.at(0, 2) = v(2);
    m.at(1, 0) = v(1); m.at(1, 1) = v(3); m.at(1, 2) = v(4);
    m.at(2, 0) = v(2); m.at(2, 1) = v(4); m.at(2, 2) = v(5);
    e.I = Ideal<Fp>(e.ring, interreduce_polys(minors(m, 2)));
    e.j_count = 6;
    e.j_degree = 3;
    e.expected = {{"codim_I", 3}};
    e.notes = {"behavior mirrors the quartic curve family; observed verdicts recorded, none asserted"};
    return e;
}

// The staircase family: an s x (2s-1) matrix M of shifted variables; N is
// columns 2..s with one entry zeroed; M' reinserts the left-out variable in
// columns 1 and 2s-w; P is M' without columns 2..s; J is the signed-minor
// contraction of N through P.
template <class K>
struct StaircaseFamily {
    PolyMatrix<K> M, N, Mprime, P;
    Ideal<K> I, J, Kminors;
    int s = 0, w = 0;
};

inline StaircaseFamily<Fp> staircase_family(int s, int w, int64_t p = 32003) {
    if (s < w + 2 || w < 2) throw InputError("family needs s >= w+2 >= 4");
    StaircaseFamily<Fp> fam;
    fam.s = s;
    fam.w = w;
    auto ring = make_ring(Fp(p), numbered_names("x", s));
    auto var = [&](int onebased) { return Poly<Fp>::variable(ring, onebased - 1); };
    auto zero = Poly<Fp>::zero(ring);

    fam.M = PolyMatrix<Fp>(ring, static_cast<size_t>(s), static_cast<size_t>(2 * s - 1));
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= 2 * s - 1; ++j) {
            int k = j - i + 1;
            fam.M.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) =
                (k >= 1 && k <= s) ? var(k) : zero;
        }
    // N: columns 2..s of M with the last entry of row s-w replaced by zero
    fam.N = PolyMatrix<Fp>(ring, static_cast<size_t>(s), static_cast<size_t>(s - 1));
    for (int i = 1; i <= s; ++i)
        for (int j = 2; j <= s; ++j)
            fam.N.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 2)) =
                fam.M.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1));
    fam.N.at(static_cast<size_t>(s - w - 1), static_cast<size_t>(s - 2)) = zero;
    // M': same change inside columns 2..s, with the left-out variable x_{w+1}
    // added in columns 1 and 2s-w of that row
    fam.Mprime = fam.M;
    fam.Mprime.at(static_cast<size_t>(s - w - 1), static_cast<size_t>(s - 1)) = zero;
    fam.Mprime.at(static_cast<size_t>(s - w - 1), 0) = var(w + 1);
    fam.Mprime.at(static_cast<size_t>(s - w - 1), static_cast<size_t>(2 * s - w - 1)) = var(w + 1);
    // P: columns of M' other than 2..s
    fam.P = PolyMatrix<Fp>(ring, static_cast<size_t>(s), static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) {
        fam.P.at(static_cast<size_t>(i), 0) = fam.Mprime.at(static_cast<size_t>(i), 0);
        for (int j = s + 1; j <= 2 * s - 1; ++j)
            fam.P.at(static_cast<size_t>(i), static_cast<size_t>(j - s)) =
                fam.Mprime.at(static_cast<size_t>(i), static_cast<size_t>(j - 1));
    }
    // I, J, K via the height-two residual construction with A = N^T, B = P
    auto res = build_residual_matrix_codim2(fam.N.transpose(), fam.P, 0);
    fam.I = res.I;
    fam.J = res.J;
    fam.Kminors = res.Kminors;
    return fam;
}

inline CatalogEntry<Fp> staircase_entry(int s, int w, int64_t p = 32003) {
    auto fam = staircase_family(s, w, p);
    CatalogEntry<Fp> e;
    e.id = "staircase";
    e.title = "height-two staircase family with a prescribed local generator bound";
    e.params = {{"s", s}, {"w", w}};
    e.ring = fam.I.ring();
    e.I = fam.I;
    e.j_explicit = fam.J.generators();
    e.expected = {{"codim_I", 2}, {"s", s}, {"G_holds", w}, {"G_fails", w + 1}, {"codim_K", s}};
    e.notes = {"I is the maximal-minor ideal of an s x (s-1) matrix of variables",
               "J is the signed-minor contraction through the companion square matrix"};
    return e;
}

// Numerical semigroup coordinate ring on ten variables: the quotient by the
// 2x2 minors of a sliding matrix whose last column wraps to x1^2.
struct SemigroupChecks {
    bool squares_agree = false;        // ((x1,x2)^4)^2 = I^2 modulo the minors
    bool canonical_colon_differs = false;  // omega : I != I in the quotient
    int minors_codim = 0;
};

inline SemigroupChecks semigroup_checks(int64_t p = 32003,
                                        const Budget& budget = default_budget()) {
    auto ring = make_ring(Fp(p), numbered_names("x", 10));
    auto var = [&](int onebased) { return Poly<Fp>::variable(ring, onebased - 1); };
    PolyMatrix<Fp> m(ring, 2, 10);
    for (int j = 1; j <= 9; ++j) {
        m.at(0, static_cast<size_t>(j - 1)) = var(j);
        m.at(1, static_cast<size_t>(j - 1)) = var(j + 1);
    }
    m.at(0, 9) = var(10);
    m.at(1, 9) = var(1) * var(1);
    Ideal<Fp> T(ring, interreduce_polys(minors(m, 2)));
    SemigroupChecks out;
    out.minors_codim = T.codimension(budget);
    Ideal<Fp> x12(ring, {var(1), var(2)});
    Ideal<Fp> I(ring, {var(1), var(2), var(4), var(5)});
    Ideal<Fp> omega = ideal_power(x12, 8);
    // the two squares agree modulo the minors
    Ideal<Fp> lhs = ideal_sum(omega, T);                      // ((x1,x2)^4)^2 + T
    Ideal<Fp> rhs = ideal_sum(ideal_power(I, 2), T);          // I^2 + T
    out.squares_agree = lhs.equals(rhs, budget);
    // omega : I != I in the quotient
    Ideal<Fp> q = colon(ideal_sum(omega, T), I, budget);
    out.canonical_colon_differs = !q.equals(ideal_sum(I, T), budget);
    return out;
}

inline CatalogEntry<Fp> semigroup_entry(int64_t p = 32003) {
    CatalogEntry<Fp> e;
    e.id = "semigroup-10-19";
    e.title = "numerical semigroup ring: a canonical module that is a square two ways";
    e.ring = make_ring(Fp(p), numbered_names("x", 10));
    auto var = [&](int onebased) { return Poly<Fp>::variable(e.ring, onebased - 1); };
    PolyMatrix<Fp> m(e.ring, 2, 10);
    for (int j = 1; j <= 9; ++j) {
        m.at(0, static_cast<size_t>(j - 1)) = var(j);
        m.at(1, static_cast<size_t>(j - 1)) = var(j + 1);
    }
    m.at(0, 9) = var(10);
    m.at(1, 9) = var(1) * var(1);
    e.I = Ideal<Fp>(e.ring, interreduce_polys(minors(m, 2)));
    e.expected = {{"codim_I", 8}};
    e.notes = {"negative control: the canonical module being a square does not pin its root"};
    return e;
}

// principal ideal times a regular sequence of equal-degree forms
inline CatalogEntry<Fp> principal_family_entry(int gamma, int delta, int d, uint64_t seed,
                                               int64_t p = 32003) {
    CatalogEntry<Fp> e;
    e.id = "principal-times-ci";
    e.title = "principal ideal with a regular sequence multiplier";
    e.params = {{"gamma", gamma}, {"delta", delta}, {"d", d}, {"seed", static_cast<long>(seed)}};
    e.ring = make_ring(Fp(p), numbered_names("x", d));
    SeedStream seeds(seed);
    std::vector<Monomial> monos;
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng rng(seeds.next());
        auto random_form = [&](int deg) {
            enumerate_monomials(d, deg, monos);
            std::vector<Term<Fp>> raw;
            for (auto& mo : monos) {
                auto c = e.ring->field.random(rng);
                if (c) raw.push_back({mo, c});
            }
            return Poly<Fp>::collect(e.ring, std::move(raw));
        };
        Poly<Fp> G = random_form(gamma);
        std::vector<Poly<Fp>> F;
        for (int i = 0; i < d; ++i) F.push_back(random_form(delta));
        if (G.is_zero()) continue;
        if (Ideal<Fp>(e.ring, F).codimension() != d) continue;  // not a regular sequence
        e.I = Ideal<Fp>(e.ring, {G});
        for (auto& f : F) e.j_explicit.push_back(G * f);
        if (attempt) e.notes.push_back("reseeded " + std::to_string(attempt) + " times");
        e.expected = {{"codim_I", 1}, {"s", d}, {"t", d - 1}};
        return e;
    }
    throw BudgetError("no regular sequence found for the principal family");
}

// planes-pair ideal (x,y) cap (x,z) with general equal-degree J, the socle
// example with deeper symbolic membership
inline CatalogEntry<Fp> planes_pair_entry(int64_t p = 32003) {
    CatalogEntry<Fp> e;
    e.id = "planes-pair";
    e.title = "two planes through a line: socle generation with deeper membership";
    e.ring = make_ring(Fp(p), {"x", "y", "z"});
    e.I = Ideal<Fp>(e.ring, {Poly<Fp>::variable(e.ring, 0),
                             Poly<Fp>::variable(e.ring, 1) * Poly<Fp>::variable(e.ring, 2)});
    e.j_count = 3;
    e.j_degree = 4;
    e.expected = {{"codim_I", 2}, {"s", 3}, {"t", 1}};
    e.notes = {"the Jacobian determinant generates the socle yet lies in both plane multiples"};
    return e;
}

// --- registry ----------------------------------------------------------------

struct CatalogDescriptor {
    std::string id;
    std::string title;
    std::string params_help;  // e.g. "s,w" for parametrized entries
};

inline std::vector<CatalogDescriptor> catalog_list() {
    return {
        {"mystery-module", "square of a height-two linear ideal; self-dual beyond perfect pairings", ""},
        {"det-2x4", "minors of a random 2x4 matrix with linear entries in five variables", "seed"},
        {"rational-quartic", "quartic curve: minors of the sliding 2x4 matrix", ""},
        {"veronese", "minors of the generic symmetric 3x3 matrix", ""},
        {"staircase", "height-two staircase family, prescribed local generator bound", "s,w"},
        {"semigroup-10-19", "numerical semigroup ring: canonical module a square two ways", ""},
        {"principal-times-ci", "principal ideal with a regular sequence multiplier", "gamma,delta,d,seed"},
        {"planes-pair", "two planes through a line: socle generation with deeper membership", ""},
    };
}

inline CatalogEntry<Fp> catalog_build(const std::string& id, std::map<std::string, long> params,
                                      int64_t p = 32003) {
    auto get = [&](const std::string& key, long def) {
        auto it = params.find(key);
        return it == params.end() ? def : it->second;
    };
    if (id == "mystery-module") return mystery_module_entry(p);
    if (id == "det-2x4")
        return generic_determinantal_entry(2, 4, 5, static_cast<uint64_t>(get("seed", 101)), p);
    if (id == "rational-quartic") return rational_quartic_entry(p);
    if (id == "veronese") return veronese_entry(p);
    if (id == "staircase")
        return staircase_entry(static_cast<int>(get("s", 5)), static_cast<int>(get("w", 2)), p);
    if (id == "semigroup-10-19") return semigroup_entry(p);
    if (id == "principal-times-ci")
        return principal_family_entry(static_cast<int>(get("gamma", 1)), static_cast<int>(get("delta", 2)),
                                      static_cast<int>(get("d", 2)),
                                      static_cast<uint64_t>(get("seed", 7)), p);
    if (id == "planes-pair") return planes_pair_entry(p);
    throw InputError("unknown catalog id: " + id);
}

}  // namespace rilab
