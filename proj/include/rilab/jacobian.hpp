#pragma once

#include "rilab/residual.hpp"

namespace rilab {

// matrix of partials: entry (i, j) = d f_j / d x_i
template <class K>
PolyMatrix<K> jacobian_matrix(const std::vector<Poly<K>>& forms) {
    if (forms.empty()) throw InputError("no forms");
    const Ring<K>& r = forms.front().ring();
    if (static_cast<int>(forms.size()) != r->nvars())
        throw InputError("need as many forms as variables");
    PolyMatrix<K> m(r, forms.size(), forms.size());
    for (size_t j = 0; j < forms.size(); ++j)
        for (int i = 0; i < r->nvars(); ++i) m.at(static_cast<size_t>(i), j) = forms[j].derivative(i);
    return m;
}

template <class K>
Poly<K> jacobian_determinant(const std::vector<Poly<K>>& forms) {
    return jacobian_matrix(forms).determinant();
}

// delta * det Jac(G*F) = (delta + gamma) * G^d * det Jac(F), exactly, in any
// characteristic.
template <class K>
bool check_jacformula(const Poly<K>& G, const std::vector<Poly<K>>& F) {
    const Ring<K>& r = G.ring();
    const K& k = r->field;
    int d = r->nvars();
    if (static_cast<int>(F.size()) != d) throw InputError("need d forms");
    if (!G.is_homogeneous()) throw InputError("G must be a form");
    int delta = -1;
    for (auto& f : F) {
        if (!f.is_homogeneous()) throw InputError("F must consist of forms");
        if (f.is_zero()) continue;
        if (delta < 0) delta = f.degree();
        else if (f.degree() != delta) throw InputError("forms of F must share one degree");
    }
    if (delta < 0) delta = 0;
    int gamma = G.is_zero() ? 0 : G.degree();
    std::vector<Poly<K>> GF;
    for (auto& f : F) GF.push_back(G * f);
    Poly<K> lhs = jacobian_determinant(GF).scale(k.from_int(delta));
    Poly<K> rhs = (poly_pow(G, d) * jacobian_determinant(F)).scale(k.from_int(delta + gamma));
    return lhs == rhs;
}

struct G1SocleResult {
    bool regular_sequence = false;
    bool det_nonzero_mod = false;     // det Jac(GF) is nonzero modulo (G^d F)
    bool det_in_socle = false;        // it is annihilated by the variables
    size_t socle_dim = 0;
    bool generates_socle = false;
    bool scalar_identity = false;     // det Jac(GF) = (delta+gamma)/delta * G^d det Jac(F)
};

// socle of R/(G^d * F) against det Jac(G*F), the principal-ideal case.
template <class K>
G1SocleResult g1_socle_check(const Poly<K>& G, const std::vector<Poly<K>>& F,
                             const Budget& budget = default_budget()) {
    const Ring<K>& r = G.ring();
    const K& k = r->field;
    int d = r->nvars();
    if (static_cast<int>(F.size()) != d) throw InputError("need d forms");
    G1SocleResult res;
    int delta = F.front().degree();
    int gamma = G.is_zero() ? 0 : G.degree();
    if (k.is_zero(k.from_int(delta)) || k.is_zero(k.from_int(delta + gamma)))
        throw DomainError("characteristic divides the relevant degree");
    Ideal<K> Fideal(r, F);
    res.regular_sequence = Fideal.codimension(budget) == d;
    if (!res.regular_sequence) return res;

    std::vector<Poly<K>> den_gens;
    Poly<K> gd = poly_pow(G, d);
    for (auto& f : F) den_gens.push_back(gd * f);
    Ideal<K> den(r, den_gens);
    std::vector<Poly<K>> gf;
    for (auto& f : F) gf.push_back(G * f);
    Poly<K> det = jacobian_determinant(gf);

    Ideal<K> socle_num = colon(den, Ideal<K>::irrelevant(r), budget);
    auto soc = quotient_module(socle_num, den);
    res.socle_dim = soc.length();
    if (det.is_zero()) return res;
    int e = det.degree();
    // membership of det in the numerator (it must be annihilated by m mod den)
    {
        DegreeBasis basis(r->nvars(), e);
        RowSpace<K> rs(k, basis.size());
        insert_ideal_slice(rs, socle_num.generators(), basis);
        if (!rs.contains(poly_to_vector(det, basis))) return res;
    }
    auto cls = soc.class_of(det, e);
    bool nonzero = false;
    for (auto& c : cls)
        if (!k.is_zero(c)) nonzero = true;
    res.det_nonzero_mod = nonzero;
    res.det_in_socle = true;
    res.generates_socle = nonzero && res.socle_dim == 1;
    // the exact scalar: det Jac(GF) - (delta+gamma)/delta G^d det Jac(F) in den
    {
        auto scalar = k.div(k.from_int(delta + gamma), k.from_int(delta));
        Poly<K> diff = det - (gd * jacobian_determinant(F)).scale(scalar);
        res.scalar_identity = diff.is_zero() || den.contains(diff, budget);
    }
    return res;
}

enum class JacobianVerdict { GeneratesSocle, LiesInJIt, Violates };

struct JacobianContainment {
    JacobianVerdict verdict = JacobianVerdict::Violates;
    bool degree_match = false;   // deg det Jac == socle degree
    bool det_zero = false;
    size_t h0_socle_dim = 0;
    bool conjecture_counterexample = false;  // det Jac lands inside J I^t
};

// det Jac(J) against the socle of H^0_m(R/JI^t), for s = d and equal degrees.
template <class K>
JacobianContainment jacobian_containment_check(const ResidualSetup<K>& su,
                                               const Budget& budget = default_budget()) {
    const Ring<K>& r = su.ring;
    const K& k = r->field;
    if (r->nvars() != su.s) throw DomainError("containment check needs s = d");
    auto degs = su.j_degrees();
    for (int d0 : degs)
        if (d0 != degs[0]) throw InputError("generators of J must share one degree");
    int delta = degs[0];
    int D = su.socle_degree();
    JacobianContainment out;
    out.degree_match = r->nvars() * (delta - 1) == D;
    if (!out.degree_match) throw InputError("Jacobian degree differs from the socle degree");

    Poly<K> det = jacobian_determinant(su.J.generators());
    if (det.is_zero()) { out.det_zero = true; return out; }

    Ideal<K> jit = su.t == 0 ? su.J : ideal_product(su.J, ideal_power(su.I, su.t));
    // membership of det in (J I^t)_D by slice
    {
        DegreeBasis basis(r->nvars(), D);
        RowSpace<K> rs(k, basis.size());
        insert_ideal_slice(rs, jit.generators(), basis);
        if (rs.contains(poly_to_vector(det, basis))) {
            out.verdict = JacobianVerdict::LiesInJIt;
            out.conjecture_counterexample = true;
            return out;
        }
    }
    Ideal<K> sat = saturate(jit, Ideal<K>::irrelevant(r), budget);
    {
        DegreeBasis basis(r->nvars(), D);
        RowSpace<K> rs(k, basis.size());
        insert_ideal_slice(rs, sat.generators(), basis);
        if (!rs.contains(poly_to_vector(det, basis))) {
            out.verdict = JacobianVerdict::Violates;  // not even in the finite part
            return out;
        }
    }
    auto h0 = quotient_module(sat, jit);
    auto soc = socle_dims(h0);
    out.h0_socle_dim = soc.length();
    auto cls = h0.class_of(det, D);
    bool nonzero = false;
    for (auto& c : cls)
        if (!k.is_zero(c)) nonzero = true;
    if (nonzero && in_socle(h0, cls, D) && out.h0_socle_dim == 1)
        out.verdict = JacobianVerdict::GeneratesSocle;
    else
        out.verdict = JacobianVerdict::Violates;
    return out;
}

// p in L_1^k cap ... cap L_m^k for ideals L_i generated by linear forms
template <class K>
bool symbolic_power_membership_linear(const Poly<K>& p, const std::vector<Ideal<K>>& linear_primes,
                                      int power) {
    if (p.is_zero()) return true;
    const Ring<K>& r = p.ring();
    for (auto& L : linear_primes) {
        for (auto& g : L.generators())
            if (g.degree() != 1) throw InputError("prime is not generated by linear forms");
        Ideal<K> Lk = ideal_power(L, power);
        // split by homogeneous components; powers of linear ideals are graded
        std::map<int, std::vector<Term<K>>> comps;
        for (auto& t : p.terms()) comps[t.m.deg].push_back(t);
        for (auto& [e, terms] : comps) {
            auto part = Poly<K>::collect(r, std::vector<Term<K>>(terms));
            if (e < power) return false;
            DegreeBasis basis(r->nvars(), e);
            RowSpace<K> rs(r->field, basis.size());
            insert_ideal_slice(rs, Lk.generators(), basis);
            if (!rs.contains(poly_to_vector(part, basis))) return false;
        }
    }
    return true;
}

}  // namespace rilab
