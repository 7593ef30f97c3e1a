#ifndef FBZHU_FOCK_HPP
#define FBZHU_FOCK_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fbzhu/apoly.hpp"

namespace fbz {

// A basis vector of the Fock space: alpha(-k1)...alpha(-kj)|0> stored as the
// multiset {k1 >= k2 >= ... >= kj >= 1}. The empty multiset is the vacuum.
using Mono = std::vector<int>;

inline int mono_weight(const Mono& m) {
    int w = 0;
    for (int k : m) w += k;
    return w;
}

// Interning table for monomials. Append-only, thread-safe, global.
class MonoTable {
public:
    static MonoTable& instance();

    int id(const Mono& m);
    const Mono& mono(int id) const { return monos_[id]; }
    int weight(int id) const { return weights_[id]; }
    int max_mode(int id) const { return monos_[id].empty() ? 0 : monos_[id].front(); }

    // total order: weight first, then parts lexicographically (descending parts)
    bool less(int a, int b) const {
        if (a == b) return false;
        if (weights_[a] != weights_[b]) return weights_[a] < weights_[b];
        return monos_[a] < monos_[b];
    }

private:
    struct VecHash {
        size_t operator()(const Mono& m) const {
            size_t h = 1469598103934665603ull;
            for (int k : m) { h ^= size_t(k); h *= 1099511628211ull; }
            return h;
        }
    };
    mutable std::mutex mu_;
    std::deque<Mono> monos_;
    std::deque<int> weights_;
    std::unordered_map<Mono, int, VecHash> index_;
};

struct MonoGreater {
    bool operator()(int a, int b) const { return MonoTable::instance().less(b, a); }
};

int vacuum_id();

// ---------------------------------------------------------------------------
// Finitely supported linear combination of monomials, leading term first.
// Coef is APoly for vectors in M_a(1) and LPoly for vectors in M_a(1,lambda).
template <class Coef>
class Vec {
public:
    using Map = std::map<int, Coef, MonoGreater>;

    Vec() = default;
    static Vec unit(int mono_id, Coef c = Coef(Rat(1))) {
        Vec v;
        if (!c.is_zero()) v.m_[mono_id] = std::move(c);
        return v;
    }
    static Vec vacuum() { return unit(vacuum_id()); }

    bool is_zero() const { return m_.empty(); }
    size_t size() const { return m_.size(); }
    const Map& terms() const { return m_; }

    int top_weight() const { return m_.empty() ? 0 : MonoTable::instance().weight(m_.begin()->first); }
    int leading() const { return m_.begin()->first; }

    Coef coeff(int mono_id) const {
        auto it = m_.find(mono_id);
        return it == m_.end() ? Coef() : it->second;
    }

    void add(int mono_id, const Coef& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = m_.try_emplace(mono_id, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }

    Vec& operator+=(const Vec& o) {
        for (auto& [k, c] : o.m_) add(k, c);
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (auto& [k, c] : o.m_) add(k, -c);
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { a += b; return a; }
    friend Vec operator-(Vec a, const Vec& b) { a -= b; return a; }
    Vec operator-() const {
        Vec r;
        for (auto& [k, c] : m_) r.m_[k] = -c;
        return r;
    }
    template <class S>
    Vec& scale(const S& s) {
        for (auto it = m_.begin(); it != m_.end();) {
            it->second = it->second * Coef(s);
            if (it->second.is_zero()) it = m_.erase(it);
            else ++it;
        }
        return *this;
    }
    Vec scaled(const Coef& s) const {
        Vec r;
        if (s.is_zero()) return r;
        for (auto& [k, c] : m_) {
            Coef d = c * s;
            if (!d.is_zero()) r.m_[k] = std::move(d);
        }
        return r;
    }
    void add_scaled(const Vec& o, const Coef& s) {
        if (s.is_zero()) return;
        for (auto& [k, c] : o.m_) add(k, c * s);
    }

    bool operator==(const Vec& o) const { return m_ == o.m_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }

    // restriction to homogeneous weight-N component
    Vec component(int N) const {
        Vec r;
        auto& T = MonoTable::instance();
        for (auto& [k, c] : m_)
            if (T.weight(k) == N) r.m_[k] = c;
        return r;
    }
    bool homogeneous(int* N = nullptr) const {
        auto& T = MonoTable::instance();
        int w = -1;
        for (auto& [k, c] : m_) {
            if (w < 0) w = T.weight(k);
            else if (T.weight(k) != w) return false;
        }
        if (N) *N = std::max(w, 0);
        return true;
    }

private:
    Map m_;
};

using FockVec = Vec<APoly>;
using ModVec = Vec<LPoly>;

// ---------------------------------------------------------------------------
// Mode action.  apply_mode(m, v):
//   m < 0 : multiply by the creation operator alpha(m)
//   m = 0 : zero on M_a(1); multiplication by lambda on M_a(1,lambda)
//   m > 0 : annihilation, [alpha(m), alpha(-k)] = m delta_{m,k}
FockVec apply_mode(int m, const FockVec& v);
ModVec apply_mode(int m, const ModVec& v);

// word applied outermost-first: apply_word({m1,...,ms}, v) = alpha(m1)...alpha(ms) v
template <class V>
V apply_word(const std::vector<int>& word, const V& v) {
    V cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (cur.is_zero()) return cur;
        cur = apply_mode(*it, cur);
    }
    return cur;
}

// Virasoro mode L_a(n) with the conformal parameter `a` kept symbolic:
//   L_a(n) = 1/2 sum_j :alpha(j)alpha(n-j):  -  a (n+1) alpha(n).
FockVec virasoro_mode(int n, const FockVec& v);
ModVec virasoro_mode(int n, const ModVec& v);

// (L(-1) + L(0)) v; a-free on M_a(1).
FockVec shift_generator(const FockVec& v);

// ---------------------------------------------------------------------------
// Graded basis: all partitions of N in reverse-lexicographic order,
// [N] first, [1,...,1] last.
std::vector<Mono> basis_of_weight(int N);
std::vector<int> basis_ids_of_weight(int N);
// independent partition counter (Euler recurrence), for tests and the probe
long partition_count(int N);

// ---------------------------------------------------------------------------
// Element grammar.
//   term   := [coeff] factor* "|0>"
//   factor := "a(" "-" int ")" ["^" int]
//   coeff  := rational ["a" ["^" int]]
// Terms combined with +/-; whitespace insignificant.  The module grammar uses
// "|λ>" in place of "|0>" and admits "λ"-monomials in coefficients.
std::string print_element(const FockVec& v);
FockVec parse_element(const std::string& text);
std::string print_module_element(const ModVec& v);
ModVec parse_module_element(const std::string& text);

std::string mono_str(int mono_id, const char* ket = "|0>");

}  // namespace fbz

#endif
