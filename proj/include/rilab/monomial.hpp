#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

#include "rilab/util.hpp"

namespace rilab {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExp = 255;  // per-variable exponent bound, overflow checked

// Dense exponent vector with cached total degree.
struct Monomial {
    std::array<uint8_t, kMaxVars> e{};
    uint16_t deg = 0;

    static Monomial one() { return Monomial{}; }

    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.e[i] = static_cast<uint8_t>(power);
        m.deg = static_cast<uint16_t>(power);
        return m;
    }

    int operator[](int i) const { return e[i]; }

    bool is_one() const { return deg == 0; }

    Monomial mul(const Monomial& o) const {
        Monomial r;
        int d = deg + o.deg;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = e[i] + o.e[i];
            if (s > kMaxExp) throw BudgetError("monomial exponent overflow");
            r.e[i] = static_cast<uint8_t>(s);
        }
        r.deg = static_cast<uint16_t>(d);
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // this / o; caller guarantees divisibility
    Monomial div(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
        r.deg = static_cast<uint16_t>(deg - o.deg);
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            d += r.e[i];
        }
        r.deg = static_cast<uint16_t>(d);
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }

    std::pair<uint64_t, uint64_t> pack() const {
        uint64_t lo, hi;
        std::memcpy(&lo, e.data(), 8);
        std::memcpy(&hi, e.data() + 8, 8);
        return {lo, hi};
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        auto [lo, hi] = m.pack();
        uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
        h ^= hi + 0x517cc1b727220a95ULL + (h << 6) + (h >> 2);
        return static_cast<size_t>(h ^ (h >> 29));
    }
};

enum class OrderKind { GrevLex, GrLex, Elimination };

// Global monomial order on a fixed number of variables. Elimination orders
// compare the leading variable block first (grevlex within each block), so a
// Groebner basis eliminates the block by discarding elements touching it.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int nvars = 0;
    int block = 0;  // Elimination: size of the leading block

    static MonomialOrder grevlex(int nvars) { return {OrderKind::GrevLex, nvars, 0}; }
    static MonomialOrder grlex(int nvars) { return {OrderKind::GrLex, nvars, 0}; }
    static MonomialOrder elimination(int nvars, int block) {
        if (block <= 0 || block >= nvars) throw InputError("elimination block out of range");
        return {OrderKind::Elimination, nvars, block};
    }

    // ordering value: >0 if a > b, <0 if a < b, 0 if equal
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::GrevLex: return cmp_grevlex(a, b, 0, nvars);
            case OrderKind::GrLex: return cmp_grlex(a, b);
            case OrderKind::Elimination: {
                int c = cmp_grevlex(a, b, 0, block);
                if (c) return c;
                return cmp_grevlex(a, b, block, nvars);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && nvars == o.nvars && block == o.block;
    }

  private:
    static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
    int cmp_grlex(const Monomial& a, const Monomial& b) const {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        for (int i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }
};

// All monomials of total degree d in n variables, in a fixed deterministic
// order (lexicographic by exponent vector, descending). Used as the column
// basis of degreewise linear algebra.
inline void enumerate_monomials(int n, int d, std::vector<Monomial>& out) {
    out.clear();
    if (d > kMaxExp * n) return;
    Monomial m;
    // iterative multi-index walk
    std::vector<int> exp(n, 0);
    exp[0] = d;
    auto emit = [&]() {
        Monomial mm;
        int s = 0;
        for (int i = 0; i < n; ++i) { mm.e[i] = static_cast<uint8_t>(exp[i]); s += exp[i]; }
        mm.deg = static_cast<uint16_t>(s);
        out.push_back(mm);
    };
    if (n == 1) {
        if (d <= kMaxExp) emit();
        return;
    }
    while (true) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (exp[i] > kMaxExp) { ok = false; break; }
        if (ok) emit();
        // next composition: decrement the rightmost positive entry among 0..n-2
        int k = n - 2;
        while (k >= 0 && exp[k] == 0) --k;
        if (k < 0) break;
        --exp[k];
        int rest = d;
        for (int i = 0; i <= k; ++i) rest -= exp[i];
        for (int i = k + 1; i < n; ++i) exp[i] = 0;
        exp[k + 1] = rest;
        if (k + 1 == n - 1) continue;
        // move everything beyond k+1 back to position k+1: done above
    }
}

inline size_t count_monomials(int n, int d) {
    // binomial(d + n - 1, n - 1)
    if (d < 0) return 0;
    size_t r = 1;
    for (int i = 1; i < n; ++i) r = r * (d + i) / i;
    return r;
}

}  // namespace rilab
