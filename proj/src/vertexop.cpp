#include "fbzhu/vertexop.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <type_traits>

namespace fbz {

namespace {

struct GroupSpec {
    int k;  // mode magnitude, factor alpha(-k)
    int r;  // multiplicity
};

// Enumerates normal-ordered spreads of Y(u,x) applied to a single state.
// For each tuple (p_slot) with coefficient prod (-1)^{k-1} C(p+k-1,k-1),
// calls sink(m, coeff, word) where m = sum(p_i + k_i) - 1.
template <class V>
class SpreadEnum {
public:
    SpreadEnum(const Mono& u, int m_lo, int m_hi, const V& state, bool creation_only)
        : m_lo_(m_lo), m_hi_(m_hi), state_(state), creation_only_(creation_only) {
        int i = 0;
        int n = int(u.size());
        while (i < n) {
            int j = i;
            while (j < n && u[j] == u[i]) ++j;
            groups_.push_back({u[i], j - i});
            i = j;
        }
        wt_u_ = mono_weight(u);
        slots_ = n;
        hi_ = creation_only_ ? -1 : state_.top_weight();
        module_ = std::is_same_v<typename V::Map::mapped_type, LPoly>;
        s_lo_ = m_lo_ + 1 - wt_u_;
        s_hi_ = m_hi_ + 1 - wt_u_;
    }

    void run(std::map<int, V>& out) {
        out_ = &out;
        word_.clear();
        rec(0, 0, 1 << 28, Rat(1), 0);
    }

private:
    void rec(size_t gi, int slot_in_group, int max_p, Rat coeff, long sum) {
        if (gi == groups_.size()) {
            emit(coeff, sum);
            return;
        }
        const GroupSpec& g = groups_[gi];
        if (slot_in_group == g.r) {
            rec(gi + 1, 0, 1 << 28, coeff, sum);
            return;
        }
        int rem = slots_left(gi, slot_in_group) - 1;  // slots after this one
        // p must leave the remaining slots able to reach s_lo
        long pmin = s_lo_ - sum - long(rem) * hi_;
        long pmax = std::min<long>(max_p, hi_);
        for (long p = pmax; p >= pmin; --p) {
            if (!module_ && p == 0) continue;  // alpha(0) kills M_a(1)
            if (rem == 0 && (sum + p > s_hi_ || sum + p < s_lo_)) continue;
            Int b = binom(p + g.k - 1, g.k - 1);
            if (sgn(b) == 0) continue;
            Rat c = coeff * Rat(b);
            if ((g.k - 1) % 2 == 1) c = -c;
            word_.push_back(int(p));
            rec(gi, slot_in_group + 1, int(p), c, sum + p);
            word_.pop_back();
        }
    }

    int slots_left(size_t gi, int slot_in_group) const {
        int t = groups_[gi].r - slot_in_group;
        for (size_t g = gi + 1; g < groups_.size(); ++g) t += groups_[g].r;
        return t;
    }

    void emit(const Rat& coeff, long sum) {
        long m = sum + wt_u_ - 1;
        if (m < m_lo_ || m > m_hi_) return;
        // ordered-tuple count: within each group p's were chosen descending;
        // multiply by multinomial r!/prod(dups!)
        Rat c = coeff;
        size_t pos = 0;
        for (auto& g : groups_) {
            Int arr = factorial(g.r);
            int run = 1;
            for (int i = 1; i < g.r; ++i) {
                if (word_[pos + i] == word_[pos + i - 1]) ++run;
                else run = 1;
                if (run > 1) arr /= run;
            }
            c *= Rat(arr);
            pos += g.r;
        }
        // apply the word: annihilations (p >= 0) innermost
        std::vector<int> w(word_.begin(), word_.end());
        std::stable_sort(w.begin(), w.end());  // negatives first => applied last
        V t = apply_word(w, state_);
        if (t.is_zero()) return;
        t.scale(c);
        (*out_)[int(m)] += t;
    }

    std::vector<GroupSpec> groups_;
    int wt_u_, slots_, hi_;
    long s_lo_, s_hi_;
    int m_lo_, m_hi_;
    const V& state_;
    bool creation_only_, module_;
    std::vector<int> word_;
    std::map<int, V>* out_ = nullptr;
};

struct PairKey {
    uint64_t v;
    bool operator==(const PairKey& o) const { return v == o.v; }
};
struct PairKeyHash {
    size_t operator()(const PairKey& k) const { return std::hash<uint64_t>()(k.v); }
};

struct CacheEntry {
    int lo = 1, hi = 0;  // empty
    std::map<int, FockVec> table;
};

std::mutex cache_mu;
std::unordered_map<PairKey, CacheEntry, PairKeyHash> pair_cache;

}  // namespace

void clear_mode_cache() {
    std::lock_guard<std::mutex> lock(cache_mu);
    pair_cache.clear();
}

template <class V>
std::map<int, V> mode_table(int u_mono, int m_lo, int m_hi, const V& v) {
    auto& T = MonoTable::instance();
    std::map<int, V> out;
    SpreadEnum<V> e(T.mono(u_mono), m_lo, m_hi, v, false);
    e.run(out);
    return out;
}

template std::map<int, FockVec> mode_table<FockVec>(int, int, int, const FockVec&);
template std::map<int, ModVec> mode_table<ModVec>(int, int, int, const ModVec&);

namespace {

// cached table of u_m v for basis monomials u, v
const std::map<int, FockVec>& cached_table(int u_mono, int v_mono, int m_lo, int m_hi) {
    PairKey key{(uint64_t(u_mono) << 32) | uint32_t(v_mono)};
    std::lock_guard<std::mutex> lock(cache_mu);
    CacheEntry& e = pair_cache[key];
    if (e.lo > e.hi || m_lo < e.lo || m_hi > e.hi) {
        int lo = e.lo > e.hi ? m_lo : std::min(e.lo, m_lo);
        int hi = e.lo > e.hi ? m_hi : std::max(e.hi, m_hi);
        FockVec base = FockVec::unit(v_mono);
        e.table = mode_table<FockVec>(u_mono, lo, hi, base);
        e.lo = lo;
        e.hi = hi;
    }
    return e.table;
}

// f(m) = coefficient of u_m in the residue sum; assembles sum_m f(m) u_m v
FockVec assemble(const FockVec& u, const FockVec& v,
                 const std::function<void(int /*wt_u*/, std::map<int, Rat>&)>& weights) {
    auto& T = MonoTable::instance();
    FockVec out;
    for (auto& [umid, uc] : u.terms()) {
        int W = T.weight(umid);
        std::map<int, Rat> f;
        weights(W, f);
        if (f.empty()) continue;
        int lo = f.begin()->first, hi = f.rbegin()->first;
        for (auto& [vmid, vc] : v.terms()) {
            const auto& tbl = cached_table(umid, vmid, lo, hi);
            for (auto& [m, coef] : f) {
                auto it = tbl.find(m);
                if (it == tbl.end()) continue;
                out.add_scaled(it->second, uc * vc * APoly(coef));
            }
        }
    }
    return out;
}

}  // namespace

FockVec mode_product(const FockVec& u, int m, const FockVec& v) {
    return assemble(u, v, [&](int, std::map<int, Rat>& f) { f[m] = Rat(1); });
}

ModVec mode_product_module(const FockVec& u, int m, const ModVec& w) {
    ModVec out;
    for (auto& [umid, uc] : u.terms()) {
        auto tbl = mode_table<ModVec>(umid, m, m, w);
        auto it = tbl.find(m);
        if (it == tbl.end()) continue;
        out.add_scaled(it->second, LPoly(uc));
    }
    return out;
}

FockVec circ_n(const FockVec& u, const FockVec& v, int n) {
    return assemble(u, v, [&](int W, std::map<int, Rat>& f) {
        for (int i = 0; i <= W + n; ++i)
            f[i - 2 * n - 2] += Rat(binom(W + n, i));
    });
}

FockVec star_n(const FockVec& u, const FockVec& v, int n) {
    return assemble(u, v, [&](int W, std::map<int, Rat>& f) {
        for (int m = 0; m <= n; ++m) {
            Rat cm = Rat(binom(m + n, n));
            if (m % 2 == 1) cm = -cm;
            for (int i = 0; i <= W + n; ++i)
                f[i - n - m - 1] += cm * Rat(binom(W + n, i));
        }
        for (auto it = f.begin(); it != f.end();)
            it = is_zero(it->second) ? f.erase(it) : std::next(it);
    });
}

FockVec commutator_residue(const FockVec& u, const FockVec& v) {
    return assemble(u, v, [&](int W, std::map<int, Rat>& f) {
        for (int i = 0; i <= W - 1; ++i)
            f[i] += Rat(binom(W - 1, i));
    });
}

// ---------------------------------------------------------------------------

namespace {

Mono mono_from_exponents(const std::vector<int>& exponents) {
    Mono u;
    for (int s = int(exponents.size()); s >= 1; --s)
        for (int l = 0; l < exponents[s - 1]; ++l) u.push_back(s);
    return u;
}

void compositions_rec(int slots, int total, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& sink) {
    if (slots == 1) {
        cur.push_back(total);
        sink(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        cur.push_back(k);
        compositions_rec(slots - 1, total - k, cur, sink);
        cur.pop_back();
    }
}

}  // namespace

FockVec star_formula_main(const std::vector<int>& exponents, const FockVec& v, int n) {
    int t = int(exponents.size());
    long r = 0;
    int slots = 0;
    for (int s = 1; s <= t; ++s) { r += long(s) * exponents[s - 1]; slots += exponents[s - 1]; }
    FockVec out;
    if (slots == 0) {
        // u = |0>: the identity; closed form degenerates to v itself
        for (int m = 0; m <= n; ++m) {
            Rat cm = Rat(binom(m + n, n)) * Rat(binom(n, n + m));
            if (m % 2 == 1) cm = -cm;
            out.add_scaled(v, APoly(cm));
        }
        return out;
    }
    for (int m = 0; m <= n; ++m) {
        for (int j = -m; j <= n; ++j) {
            Rat kernel = Rat(binom(m + n, n)) * Rat(binom(n + r, j + m));
            if (m % 2 == 1) kernel = -kernel;
            if (is_zero(kernel)) continue;
            std::vector<int> cur;
            compositions_rec(slots, n - j, cur, [&](const std::vector<int>& ks) {
                Rat c = kernel;
                std::vector<int> word;
                int slot = 0;
                for (int s = 1; s <= t; ++s) {
                    for (int l = 0; l < exponents[s - 1]; ++l, ++slot) {
                        int k = ks[slot];
                        c *= Rat(binom(k + s - 1, s - 1));
                        word.push_back(-k - s);
                    }
                }
                if (is_zero(c)) return;
                FockVec tvec = apply_word(word, v);
                out.add_scaled(tvec, APoly(c));
            });
        }
    }
    return out;
}

FockVec star_direct_creation_part(const std::vector<int>& exponents, const FockVec& v, int n) {
    Mono u = mono_from_exponents(exponents);
    if (u.empty()) return star_n(FockVec::vacuum(), v, n);
    int W = mono_weight(u);
    // star coefficients per mode m'
    std::map<int, Rat> f;
    for (int m = 0; m <= n; ++m) {
        Rat cm = Rat(binom(m + n, n));
        if (m % 2 == 1) cm = -cm;
        for (int i = 0; i <= W + n; ++i)
            f[i - n - m - 1] += cm * Rat(binom(W + n, i));
    }
    int lo = f.begin()->first, hi = f.rbegin()->first;
    FockVec out;
    for (auto& [vmid, vc] : v.terms()) {
        std::map<int, FockVec> tbl;
        FockVec base = FockVec::unit(vmid);
        SpreadEnum<FockVec> e(u, lo, hi, base, /*creation_only=*/true);
        e.run(tbl);
        for (auto& [m, coef] : f) {
            auto it = tbl.find(m);
            if (it == tbl.end()) continue;
            out.add_scaled(it->second, vc * APoly(coef));
        }
    }
    return out;
}

FockVec star_formula_closed(const std::vector<int>& exponents, const FockVec& v, int n) {
    Mono u = mono_from_exponents(exponents);
    FockVec direct = star_n(FockVec::unit(MonoTable::instance().id(u)), v, n);
    FockVec g = direct - star_direct_creation_part(exponents, v, n);
    return star_formula_main(exponents, v, n) + g;
}

FockVec generic_recursion(int m, int n, const FockVec& v) {
    if (m < n + 1) throw std::invalid_argument("generic_recursion: need m >= n+1");
    FockVec out;
    for (int j = 1; j <= n + 1; ++j) {
        Rat c = Rat(binom(m - n - 1, j - 1)) * Rat(binom(m - n - j - 1, n + 1 - j));
        if ((m + 1) % 2 == 1) c = -c;
        if (is_zero(c)) continue;
        out.add_scaled(apply_mode(-n - j, v), APoly(c));
    }
    return out;
}

}  // namespace fbz
