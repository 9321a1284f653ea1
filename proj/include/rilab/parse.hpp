#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "rilab/poly.hpp"

namespace rilab {

// Grammar: sums/differences of terms; a term is '*'-separated factors, each
// an integer (optionally "a/b" over the rationals), or a declared variable
// with optional "^exponent". Whitespace insignificant.
template <class K>
class PolyParser {
  public:
    explicit PolyParser(Ring<K> ring) : ring_(std::move(ring)) {}

    Poly<K> parse(const std::string& text) const {
        size_t pos = 0;
        Poly<K> result = parse_sum(text, pos);
        skip_ws(text, pos);
        if (pos != text.size()) fail(text, pos, "unexpected trailing input");
        return result;
    }

  private:
    Ring<K> ring_;

    [[noreturn]] void fail(const std::string& text, size_t pos, const std::string& what) const {
        throw InputError("parse error at position " + std::to_string(pos) + " in \"" + text + "\": " + what);
    }

    static void skip_ws(const std::string& s, size_t& pos) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    Poly<K> parse_sum(const std::string& s, size_t& pos) const {
        Poly<K> acc = Poly<K>::zero(ring_);
        bool first = true;
        while (true) {
            skip_ws(s, pos);
            bool negate = false;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                negate = s[pos] == '-';
                ++pos;
            } else if (!first) {
                break;
            }
            skip_ws(s, pos);
            if (pos >= s.size()) {
                if (first) fail(s, pos, "empty input");
                fail(s, pos, "dangling sign");
            }
            Poly<K> term = parse_product(s, pos);
            acc = negate ? acc - term : acc + term;
            first = false;
            skip_ws(s, pos);
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
        }
        return acc;
    }

    Poly<K> parse_product(const std::string& s, size_t& pos) const {
        Poly<K> acc = parse_factor(s, pos);
        while (true) {
            skip_ws(s, pos);
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws(s, pos);
                acc = acc * parse_factor(s, pos);
            } else if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                                          s[pos] == '(')) {
                // juxtaposition, e.g. "3x" or "x y"
                acc = acc * parse_factor(s, pos);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<K> parse_factor(const std::string& s, size_t& pos) const {
        skip_ws(s, pos);
        if (pos >= s.size()) fail(s, pos, "expected factor");
        if (s[pos] == '(') {
            ++pos;
            Poly<K> inner = parse_sum(s, pos);
            skip_ws(s, pos);
            if (pos >= s.size() || s[pos] != ')') fail(s, pos, "expected ')'");
            ++pos;
            return apply_power(inner, s, pos);
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            typename K::Elem c = parse_coeff(s, pos);
            return apply_power(Poly<K>::constant(ring_, c), s, pos);
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = -1;
            for (int i = 0; i < ring_->nvars(); ++i)
                if (ring_->names[i] == name) { idx = i; break; }
            if (idx < 0) fail(s, start, "unknown variable '" + name + "'");
            return apply_power(Poly<K>::variable(ring_, idx), s, pos);
        }
        fail(s, pos, std::string("unexpected character '") + s[pos] + "'");
    }

    Poly<K> apply_power(Poly<K> base, const std::string& s, size_t& pos) const {
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws(s, pos);
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail(s, pos, "expected exponent");
            long e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + (s[pos] - '0');
                if (e > kMaxExp * kMaxVars) fail(s, pos, "exponent too large");
                ++pos;
            }
            return poly_pow(base, static_cast<int>(e));
        }
        return base;
    }

    typename K::Elem parse_coeff(const std::string& s, size_t& pos) const {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string digits = s.substr(start, pos - start);
        mpz_class num;
        if (num.set_str(digits, 10) != 0) fail(s, start, "bad integer literal");
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip_ws(s, pos);
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail(s, pos, "expected denominator");
            mpz_class den;
            if (den.set_str(s.substr(dstart, pos - dstart), 10) != 0 || den == 0)
                fail(s, dstart, "bad denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return ring_->field.from_mpq(q);
        }
        return ring_->field.from_mpq(mpq_class(num));
    }
};

template <class K>
Poly<K> parse_poly(const Ring<K>& ring, const std::string& text) {
    return PolyParser<K>(ring).parse(text);
}

template <class K>
std::vector<Poly<K>> parse_polys(const Ring<K>& ring, const std::vector<std::string>& texts) {
    std::vector<Poly<K>> v;
    v.reserve(texts.size());
    for (auto& t : texts) v.push_back(parse_poly(ring, t));
    return v;
}

template <class K>
std::string to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    const auto& r = p.ring();
    const K& k = r->field;
    std::ostringstream os;
    bool first = true;
    for (auto& t : p.terms()) {
        std::string c = k.to_string(t.c);
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) { os << "-"; c = c.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = c.substr(1);
        }
        first = false;
        bool wrote = false;
        if (c != "1" || t.m.is_one()) {
            os << c;
            wrote = true;
        }
        for (int i = 0; i < r->nvars(); ++i) {
            if (!t.m[i]) continue;
            if (wrote) os << "*";
            os << r->names[i];
            if (t.m[i] > 1) os << "^" << int(t.m[i]);
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace rilab
