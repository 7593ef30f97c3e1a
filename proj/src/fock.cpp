#include "fbzhu/fock.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace fbz {

MonoTable& MonoTable::instance() {
    static MonoTable t;
    return t;
}

int MonoTable::id(const Mono& m) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(m);
    if (it != index_.end()) return it->second;
    int i = int(monos_.size());
    monos_.push_back(m);
    weights_.push_back(mono_weight(m));
    index_.emplace(m, i);
    return i;
}

int vacuum_id() {
    static int id = MonoTable::instance().id(Mono{});
    return id;
}

// ---------------------------------------------------------------------------

namespace {

Mono with_part(const Mono& m, int k) {
    Mono r;
    r.reserve(m.size() + 1);
    auto it = m.begin();
    while (it != m.end() && *it >= k) r.push_back(*it++);
    r.push_back(k);
    while (it != m.end()) r.push_back(*it++);
    return r;
}

// removes one occurrence of k; caller must ensure it exists
Mono without_part(const Mono& m, int k) {
    Mono r;
    r.reserve(m.size() - 1);
    bool removed = false;
    for (int p : m) {
        if (!removed && p == k) { removed = true; continue; }
        r.push_back(p);
    }
    return r;
}

int multiplicity(const Mono& m, int k) {
    int c = 0;
    for (int p : m) c += (p == k);
    return c;
}

template <class Coef>
Vec<Coef> apply_mode_impl(int m, const Vec<Coef>& v) {
    auto& T = MonoTable::instance();
    Vec<Coef> r;
    if (m == 0) {
        // alpha(0) kills M_a(1); acts as lambda on M_a(1,lambda)
        if constexpr (std::is_same_v<Coef, LPoly>) {
            for (auto& [k, c] : v.terms()) r.add(k, c.shifted());
        }
        return r;
    }
    if (m < 0) {
        for (auto& [k, c] : v.terms())
            r.add(T.id(with_part(T.mono(k), -m)), c);
        return r;
    }
    for (auto& [k, c] : v.terms()) {
        const Mono& mono = T.mono(k);
        int mult = multiplicity(mono, m);
        if (mult == 0) continue;  // in particular alpha(m) v_lambda = 0 for m >= 1
        Coef d = c * Coef(Rat(long(m) * mult));
        r.add(T.id(without_part(mono, m)), d);
    }
    return r;
}

}  // namespace

FockVec apply_mode(int m, const FockVec& v) { return apply_mode_impl(m, v); }
ModVec apply_mode(int m, const ModVec& v) { return apply_mode_impl(m, v); }

// ---------------------------------------------------------------------------

namespace {

template <class V>
V virasoro_impl(int n, const V& v) {
    auto& T = MonoTable::instance();
    V total;
    for (auto& [mid, c] : v.terms()) {
        int N = T.weight(mid);
        V base = V::unit(mid, c);
        // quadratic part: 1/2 sum_j :alpha(j) alpha(n-j):
        int J = N + std::abs(n) + 2;
        V quad;
        for (int j = -J; j <= J; ++j) {
            int k = n - j;
            // normal order: creation (negative) applied last
            int outer = std::min(j, k), inner = std::max(j, k);
            V t = apply_word<V>({outer, inner}, base);
            quad += t;
        }
        quad.scale(Rat(1, 2));
        total += quad;
    }
    // linear part: -a (n+1) alpha(n)
    if (n + 1 != 0) {
        V lin = apply_mode(n, v);
        lin.scale(APoly::var(1, Rat(-(long(n) + 1))));
        total += lin;
    }
    return total;
}

}  // namespace

FockVec virasoro_mode(int n, const FockVec& v) { return virasoro_impl(n, v); }
ModVec virasoro_mode(int n, const ModVec& v) { return virasoro_impl(n, v); }

FockVec shift_generator(const FockVec& v) {
    return virasoro_mode(-1, v) + virasoro_mode(0, v);
}

// ---------------------------------------------------------------------------

namespace {

void partitions_rec(int N, int maxpart, Mono& cur, std::vector<Mono>& out) {
    if (N == 0) { out.push_back(cur); return; }
    for (int k = std::min(N, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(N - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Mono> basis_of_weight(int N) {
    std::vector<Mono> out;
    if (N < 0) throw std::invalid_argument("basis_of_weight: negative weight");
    Mono cur;
    partitions_rec(N, N == 0 ? 1 : N, cur, out);
    return out;
}

std::vector<int> basis_ids_of_weight(int N) {
    std::vector<int> ids;
    for (auto& m : basis_of_weight(N)) ids.push_back(MonoTable::instance().id(m));
    return ids;
}

long partition_count(int N) {
    // Euler's pentagonal-number recurrence
    static std::vector<long> memo{1};
    for (int n = int(memo.size()); n <= N; ++n) {
        long total = 0;
        for (int k = 1;; ++k) {
            long g1 = long(k) * (3 * k - 1) / 2;
            long g2 = long(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) total += sign * memo[n - g1];
            if (g2 <= n) total += sign * memo[n - g2];
        }
        memo.push_back(total);
    }
    return memo[N];
}

// ---------------------------------------------------------------------------
// printing

std::string mono_str(int mono_id, const char* ket) {
    auto& T = MonoTable::instance();
    const Mono& m = T.mono(mono_id);
    std::ostringstream os;
    size_t i = 0;
    while (i < m.size()) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        os << "a(-" << m[i] << ")";
        if (j - i > 1) os << "^" << (j - i);
        os << " ";
        i = j;
    }
    std::string s = os.str();
    if (!s.empty() && s.back() == ' ') s.pop_back();
    return s + ket;
}

namespace {

void print_rat_coeff(std::ostringstream& os, bool& first, const Rat& q) {
    if (first) { if (sgn(q) < 0) os << "-"; first = false; }
    else os << (sgn(q) < 0 ? " - " : " + ");
}

}  // namespace

std::string print_element(const FockVec& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // ascending (weight, lex): iterate the map in reverse (map is leading-first)
    auto& terms = v.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        for (auto& [d, q] : it->second.terms()) {
            print_rat_coeff(os, first, q);
            Rat aq = abs(q);
            bool printed = false;
            if (aq != 1) { os << rat_to_string(aq); printed = true; }
            if (d > 0) {
                os << "a";
                if (d > 1) os << "^" << d;
                printed = true;
            }
            if (printed) os << " ";
            os << mono_str(it->first);
        }
    }
    return os.str();
}

std::string print_module_element(const ModVec& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto& terms = v.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const LPoly& lp = it->second;
        for (int ld = 0; ld <= lp.lambda_degree(); ++ld) {
            for (auto& [d, q] : lp.coeff(ld).terms()) {
                print_rat_coeff(os, first, q);
                Rat aq = abs(q);
                bool printed = false;
                if (aq != 1 || (d == 0 && ld == 0)) { os << rat_to_string(aq); printed = true; }
                if (d > 0) { os << "a"; if (d > 1) os << "^" << d; printed = true; }
                if (ld > 0) { os << "λ"; if (ld > 1) os << "^" << ld; printed = true; }
                if (printed) os << " ";
                os << mono_str(it->first, "|λ>");
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    bool module;

    explicit Parser(const std::string& text, bool mod) : s(text), module(mod) {}

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + msg);
    }
    void skip_ws() { while (i < s.size() && std::isspace(uint8_t(s[i]))) ++i; }
    bool eof() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    bool try_eat(const std::string& tok) {
        skip_ws();
        if (s.compare(i, tok.size(), tok) == 0) { i += tok.size(); return true; }
        return false;
    }

    long read_int() {
        skip_ws();
        size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit(uint8_t(s[k]))) ++k;
        if (k == j) fail("expected integer");
        long val = std::stol(s.substr(i, k - i));
        i = k;
        return val;
    }

    Rat read_rational() {
        long num = read_int();
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            long den = read_int();
            if (den == 0) fail("zero denominator");
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        return Rat(num);
    }

    bool at_factor() {
        skip_ws();
        return s.compare(i, 2, "a(") == 0;
    }
    bool at_lambda() {
        skip_ws();
        return s.compare(i, 2, "\xce\xbb") == 0 || s.compare(i, 6, "lambda") == 0;
    }

    // coeff := [rational] ["a" ["^" int]] ["λ" ["^" int]]
    // Returns the lambda-degree in *ldeg (0 if absent).
    APoly read_coeff_monomial(int* ldeg) {
        *ldeg = 0;
        Rat q(1);
        bool have = false;
        skip_ws();
        if (i < s.size() && (std::isdigit(uint8_t(s[i])))) { q = read_rational(); have = true; }
        int adeg = 0;
        skip_ws();
        while (i < s.size()) {
            if (s[i] == 'a' && !(i + 1 < s.size() && s[i + 1] == '(')) {
                ++i;
                int d = 1;
                if (try_eat("^")) d = int(read_int());
                adeg += d;
                have = true;
                skip_ws();
            } else if (module && at_lambda()) {
                if (s[i] == 'l') i += 6; else i += 2;
                int d = 1;
                if (try_eat("^")) d = int(read_int());
                *ldeg += d;
                have = true;
                skip_ws();
            } else break;
        }
        (void)have;
        return adeg == 0 ? APoly(q) : APoly::var(adeg, q);
    }

    // factor* ket
    int read_monomial() {
        Mono m;
        while (at_factor()) {
            i += 2;  // "a("
            long k = read_int();
            if (k >= 0) fail("mode index inside a state must be negative");
            if (!try_eat(")")) fail("expected ')'");
            int e = 1;
            if (try_eat("^")) e = int(read_int());
            if (e < 1) fail("exponent must be positive");
            for (int r = 0; r < e; ++r) m.push_back(int(-k));
        }
        std::sort(m.begin(), m.end(), std::greater<int>());
        skip_ws();
        if (module) {
            if (try_eat("|\xce\xbb>") || try_eat("|lambda>")) return MonoTable::instance().id(m);
            fail("expected |λ>");
        }
        if (try_eat("|0>")) return MonoTable::instance().id(m);
        fail("expected |0>");
    }
};

}  // namespace

FockVec parse_element(const std::string& text) {
    Parser p(text, false);
    FockVec v;
    if (p.eof()) throw std::invalid_argument("empty input");
    // allow a bare "0"
    {
        size_t save = p.i;
        if (p.try_eat("0") && p.eof()) return v;
        p.i = save;
    }
    bool first = true;
    while (!p.eof()) {
        Rat sign(1);
        if (p.try_eat("-")) sign = -1;
        else if (p.try_eat("+")) sign = 1;
        else if (!first) p.fail("expected '+' or '-'");
        int ld = 0;
        APoly c = p.read_coeff_monomial(&ld);
        c *= sign;
        int mid = p.read_monomial();
        v.add(mid, c);
        first = false;
    }
    return v;
}

ModVec parse_module_element(const std::string& text) {
    Parser p(text, true);
    ModVec v;
    if (p.eof()) throw std::invalid_argument("empty input");
    {
        size_t save = p.i;
        if (p.try_eat("0") && p.eof()) return v;
        p.i = save;
    }
    bool first = true;
    while (!p.eof()) {
        Rat sign(1);
        if (p.try_eat("-")) sign = -1;
        else if (p.try_eat("+")) sign = 1;
        else if (!first) p.fail("expected '+' or '-'");
        int ld = 0;
        APoly c = p.read_coeff_monomial(&ld);
        c *= sign;
        int mid = p.read_monomial();
        LPoly lc = LPoly::lambda(ld);
        lc *= c;
        v.add(mid, lc);
        first = false;
    }
    return v;
}

}  // namespace fbz
