#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rilab/ring.hpp"

namespace rilab {

template <class K>
struct Term {
    Monomial m;
    typename K::Elem c;
};

// Exact multivariate polynomial: terms sorted strictly descending in the
// ring's order, no zero coefficients.
template <class K>
class Poly {
  public:
    using Elem = typename K::Elem;

    Poly() = default;
    explicit Poly(Ring<K> ring) : ring_(std::move(ring)) {}

    static Poly zero(const Ring<K>& r) { return Poly(r); }

    static Poly constant(const Ring<K>& r, Elem c) {
        Poly p(r);
        if (!r->field.is_zero(c)) p.terms_.push_back({Monomial::one(), c});
        return p;
    }

    static Poly monomial(const Ring<K>& r, Monomial m, Elem c) {
        Poly p(r);
        if (!r->field.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    static Poly variable(const Ring<K>& r, int i, int power = 1) {
        if (i < 0 || i >= r->nvars()) throw InputError("variable index out of range");
        return monomial(r, Monomial::var(i, power), r->field.one());
    }

    // from an unsorted term list with possible repeats
    static Poly collect(const Ring<K>& r, std::vector<Term<K>> raw) {
        Poly p(r);
        std::sort(raw.begin(), raw.end(), [&](const Term<K>& a, const Term<K>& b) {
            return r->order.greater(a.m, b.m);
        });
        for (auto& t : raw) {
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                p.terms_.back().c = r->field.add(p.terms_.back().c, t.c);
                if (r->field.is_zero(p.terms_.back().c)) p.terms_.pop_back();
            } else if (!r->field.is_zero(t.c)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const Ring<K>& ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    const Term<K>& lead() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.front();
    }

    int degree() const {  // total degree, -1 for zero
        int d = -1;
        for (auto& t : terms_) d = std::max(d, int(t.m.deg));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().m.deg;
        for (auto& t : terms_)
            if (t.m.deg != d) return false;
        return true;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    Poly add(const Poly& o) const { return merge(o, false); }
    Poly sub(const Poly& o) const { return merge(o, true); }

    Poly neg() const {
        Poly r(ring_);
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.push_back({t.m, ring_->field.neg(t.c)});
        return r;
    }

    Poly scale(const Elem& c) const {
        const K& k = ring_->field;
        Poly r(ring_);
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Elem v = k.mul(t.c, c);
            if (!k.is_zero(v)) r.terms_.push_back({t.m, v});
        }
        return r;
    }

    Poly mul_term(const Monomial& m, const Elem& c) const {
        const K& k = ring_->field;
        Poly r(ring_);
        if (k.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            Elem v = k.mul(t.c, c);
            if (!k.is_zero(v)) r.terms_.push_back({t.m.mul(m), v});
        }
        return r;
    }

    Poly mul(const Poly& o) const {
        check_same(o);
        const K& k = ring_->field;
        Poly r(ring_);
        if (is_zero() || o.is_zero()) return r;
        if (o.terms_.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
        if (terms_.size() == 1) return o.mul_term(terms_[0].m, terms_[0].c);
        std::unordered_map<Monomial, Elem, MonomialHash> acc;
        acc.reserve(terms_.size() * 2);
        for (auto& a : terms_)
            for (auto& b : o.terms_) {
                Monomial m = a.m.mul(b.m);
                Elem v = k.mul(a.c, b.c);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, v);
                else
                    it->second = k.add(it->second, v);
            }
        std::vector<Term<K>> raw;
        raw.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!k.is_zero(c)) raw.push_back({m, c});
        return collect(ring_, std::move(raw));
    }

    // exact division by a single term; caller guarantees divisibility of
    // every monomial
    Poly div_term(const Monomial& m, const Elem& c) const {
        const K& k = ring_->field;
        Poly r(ring_);
        Elem ci = k.inv(c);
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!m.divides(t.m)) throw DomainError("inexact term division");
            r.terms_.push_back({t.m.div(m), k.mul(t.c, ci)});
        }
        return r;
    }

    Poly derivative(int var) const {
        if (var < 0 || var >= ring_->nvars()) throw InputError("derivative index out of range");
        const K& k = ring_->field;
        std::vector<Term<K>> raw;
        for (auto& t : terms_) {
            int e = t.m[var];
            if (e == 0) continue;
            Elem c = k.mul(t.c, k.from_int(e));
            if (k.is_zero(c)) continue;  // characteristic kills it
            Monomial m = t.m;
            m.e[var] = static_cast<uint8_t>(e - 1);
            m.deg -= 1;
            raw.push_back({m, c});
        }
        return collect(ring_, std::move(raw));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scale(ring_->field.inv(lead().c));
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        const K& k = ring_->field;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].m == o.terms_[i].m) || !k.equal(terms_[i].c, o.terms_[i].c)) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void check_same(const Poly& o) const {
        if (!same_ring(ring_, o.ring_)) throw DomainError("polynomials from different rings");
    }

  private:
    Ring<K> ring_;
    std::vector<Term<K>> terms_;

    Poly merge(const Poly& o, bool subtract) const {
        check_same(o);
        const K& k = ring_->field;
        Poly r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ring_->order.cmp(terms_[i].m, o.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                Elem v = subtract ? k.neg(o.terms_[j].c) : o.terms_[j].c;
                r.terms_.push_back({o.terms_[j].m, v});
                ++j;
            } else {
                Elem v = subtract ? k.sub(terms_[i].c, o.terms_[j].c) : k.add(terms_[i].c, o.terms_[j].c);
                if (!k.is_zero(v)) r.terms_.push_back({terms_[i].m, v});
                ++i; ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            Elem v = subtract ? k.neg(o.terms_[j].c) : o.terms_[j].c;
            r.terms_.push_back({o.terms_[j].m, v});
        }
        return r;
    }
};

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) { return a.add(b); }
template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) { return a.sub(b); }
template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) { return a.mul(b); }
template <class K>
Poly<K> operator-(const Poly<K>& a) { return a.neg(); }

// x_i^k with memoization-free repeated squaring
template <class K>
Poly<K> poly_pow(const Poly<K>& base, int k) {
    Poly<K> r = Poly<K>::constant(base.ring(), base.ring()->field.one());
    Poly<K> b = base;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = (k >>= 1) ? b * b : b;
    }
    return r;
}

// Image of p under the ring map sending variable i to images[i].
template <class K>
Poly<K> substitute(const Poly<K>& p, const Ring<K>& target, const std::vector<Poly<K>>& images) {
    const auto& src = p.ring();
    if (static_cast<int>(images.size()) != src->nvars()) throw InputError("substitution arity mismatch");
    // memoized variable powers
    std::vector<std::vector<Poly<K>>> powers(images.size());
    auto power = [&](int i, int k) -> const Poly<K>& {
        auto& row = powers[i];
        if (row.empty()) row.push_back(Poly<K>::constant(target, target->field.one()));
        while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * images[i]);
        return row[k];
    };
    Poly<K> out = Poly<K>::zero(target);
    for (auto& t : p.terms()) {
        Poly<K> prod = Poly<K>::constant(target, t.c);
        for (int i = 0; i < src->nvars(); ++i)
            if (t.m[i]) prod = prod * power(i, t.m[i]);
        out = out + prod;
    }
    return out;
}

// Reinterpret p in a ring with the same field where source variable i is
// target variable var_map[i] (and coefficients carry over).
template <class K>
Poly<K> map_variables(const Poly<K>& p, const Ring<K>& target, const std::vector<int>& var_map) {
    std::vector<Term<K>> raw;
    raw.reserve(p.size());
    for (auto& t : p.terms()) {
        Monomial m;
        int d = 0;
        for (int i = 0; i < p.ring()->nvars(); ++i) {
            if (!t.m[i]) continue;
            int j = var_map[i];
            if (j < 0) throw DomainError("variable has no image under map");
            m.e[j] = static_cast<uint8_t>(m.e[j] + t.m[i]);
            d += t.m[i];
        }
        m.deg = static_cast<uint16_t>(d);
        raw.push_back({m, t.c});
    }
    return Poly<K>::collect(target, std::move(raw));
}

}  // namespace rilab
