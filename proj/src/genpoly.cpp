#include "fbzhu/genpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fbz {

GenPoly GenPoly::constant(const APoly& c) {
    GenPoly p;
    p.add(GWord{}, c);
    return p;
}
GenPoly GenPoly::x(int deg) {
    GenPoly p;
    p.add(GWord{deg, 0, {}}, APoly(Rat(1)));
    return p;
}
GenPoly GenPoly::y(int deg) {
    GenPoly p;
    p.add(GWord{0, deg, {}}, APoly(Rat(1)));
    return p;
}
GenPoly GenPoly::letter(Letter l) {
    GenPoly p;
    p.add(GWord{0, 0, {l}}, APoly(Rat(1)));
    return p;
}

void GenPoly::add(const GWord& w, const APoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
    for (auto& [w, c] : o.t_) add(w, c);
    return *this;
}
GenPoly& GenPoly::operator-=(const GenPoly& o) {
    for (auto& [w, c] : o.t_) add(w, -c);
    return *this;
}
GenPoly operator*(const GenPoly& a, const GenPoly& b) {
    GenPoly r;
    for (auto& [wa, ca] : a.t_)
        for (auto& [wb, cb] : b.t_) {
            GWord w;
            w.xdeg = wa.xdeg + wb.xdeg;
            w.ydeg = wa.ydeg + wb.ydeg;
            w.word = wa.word;
            w.word.insert(w.word.end(), wb.word.begin(), wb.word.end());
            r.add(w, ca * cb);
        }
    return r;
}
GenPoly GenPoly::operator-() const {
    GenPoly r;
    for (auto& [w, c] : t_) r.t_[w] = -c;
    return r;
}
GenPoly& GenPoly::scale(const APoly& s) {
    GenPoly r;
    for (auto& [w, c] : t_) r.add(w, c * s);
    t_.swap(r.t_);
    return *this;
}

std::string GenPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    static const char* L = "YZW";
    for (auto& [w, c] : t_) {
        std::string cs = c.str();
        bool neg = cs.size() && cs[0] == '-';
        if (first) { if (neg) { os << "-"; cs = cs.substr(1); } first = false; }
        else {
            if (neg) { os << " - "; cs = cs.substr(1); }
            else os << " + ";
        }
        bool unit = (cs == "1");
        bool trivial_word = (w.xdeg == 0 && w.ydeg == 0 && w.word.empty());
        bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (!unit || trivial_word) {
            if (composite) os << "(" << cs << ")";
            else os << cs;
        }
        if (w.xdeg > 0) { os << "x"; if (w.xdeg > 1) os << "^" << w.xdeg; }
        if (w.ydeg > 0) { os << "y"; if (w.ydeg > 1) os << "^" << w.ydeg; }
        for (Letter l : w.word) os << L[int(l)];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// normal form

namespace {

// two-letter rewrite table; entries are normal-form replacements
GenPoly pair_rule(Letter a, Letter b) {
    using L = Letter;
    auto letter = GenPoly::letter;
    if (a == L::Y && b == L::Y) return letter(L::Y);                 // Y^2 = Y
    if (a == L::Y && b == L::Z) return letter(L::Z);                 // YZ = Z
    if (a == L::Y && b == L::W) return GenPoly();                    // YW = 0
    if (a == L::Z && b == L::Y) return GenPoly();                    // ZY = 0
    if (a == L::Z && b == L::Z) return GenPoly();                    // Z^2 = 0
    if (a == L::Z && b == L::W) return letter(L::Y);                 // ZW = Y
    if (a == L::W && b == L::Y) return letter(L::W);                 // WY = W
    if (a == L::W && b == L::W) return GenPoly();                    // W^2 = 0
    // WZ = 1/8 (x^2-y)(x^2-y+2) - Y
    GenPoly t = GenPoly::x(2) - GenPoly::y();
    GenPoly r = (t * (t + GenPoly::constant(APoly(Rat(2))))).scale(APoly(Rat(1, 8)));
    r -= letter(L::Y);
    return r;
}

// y^3 = x^6 - 3x^4 y + 3x^2 y^2 + 6x^4 - 12x^2 y + 6y^2 + 8x^2 - 8y
// (from (x^2-y)(x^2-y+2)(x^2-y+4) = 0)
GenPoly y_cubed() {
    GenPoly r;
    r += GenPoly::x(6);
    r += (GenPoly::x(4) * GenPoly::y()).scale(APoly(Rat(-3)));
    r += (GenPoly::x(2) * GenPoly::y(2)).scale(APoly(Rat(3)));
    r += GenPoly::x(4).scale(APoly(Rat(6)));
    r += (GenPoly::x(2) * GenPoly::y()).scale(APoly(Rat(-12)));
    r += GenPoly::y(2).scale(APoly(Rat(6)));
    r += GenPoly::x(2).scale(APoly(Rat(8)));
    r += GenPoly::y().scale(APoly(Rat(-8)));
    return r;
}

}  // namespace

bool is_normal(const GenPoly& p) {
    for (auto& [w, c] : p.terms()) {
        if (w.word.size() > 1) return false;
        if (!w.word.empty() && w.ydeg > 0) return false;
        if (w.word.empty() && w.ydeg > 2) return false;
    }
    return true;
}

GenPoly normal_form(const GenPoly& p) {
    GenPoly done;
    std::vector<std::pair<GWord, APoly>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [w, c] = work.back();
        work.pop_back();
        if (c.is_zero()) continue;
        GenPoly repl;
        bool rewrote = false;
        if (w.word.size() > 1) {
            // rewrite the leftmost adjacent pair
            GenPoly mid = pair_rule(w.word[0], w.word[1]);
            GWord head{w.xdeg, w.ydeg, {}};
            GWord tail{0, 0, std::vector<Letter>(w.word.begin() + 2, w.word.end())};
            GenPoly h;
            h.add(head, c);
            GenPoly t;
            t.add(tail, APoly(Rat(1)));
            repl = h * mid * t;
            rewrote = true;
        } else if (!w.word.empty() && w.ydeg > 0) {
            // y L = (x^2 + 4) L  since (x^2 - y + 4) L = 0
            GWord rest{w.xdeg, w.ydeg - 1, w.word};
            GenPoly r;
            r.add(rest, c);
            repl = (GenPoly::x(2) + GenPoly::constant(APoly(Rat(4)))) * r;
            rewrote = true;
        } else if (w.word.empty() && w.ydeg > 2) {
            GWord rest{w.xdeg, w.ydeg - 3, {}};
            GenPoly r;
            r.add(rest, c);
            repl = y_cubed() * r;
            rewrote = true;
        }
        if (!rewrote) {
            done.add(w, c);
        } else {
            for (auto& [w2, c2] : repl.terms()) work.emplace_back(w2, c2);
        }
    }
    return done;
}

GenPoly multiply_in_A2(const GenPoly& p, const GenPoly& q) {
    return normal_form(p * q);
}

// ---------------------------------------------------------------------------
// structure map

bool XPoly::is_zero() const {
    for (auto& q : c)
        if (!q.is_zero()) return false;
    return true;
}
void XPoly::add(int xdeg, const APoly& q) {
    if (q.is_zero()) return;
    if (int(c.size()) <= xdeg) c.resize(xdeg + 1);
    c[xdeg] += q;
}
XPoly& XPoly::operator+=(const XPoly& o) {
    for (size_t i = 0; i < o.c.size(); ++i) add(int(i), o.c[i]);
    return *this;
}
XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r;
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.add(int(i + j), a.c[i] * b.c[j]);
    return r;
}
bool XPoly::operator==(const XPoly& o) const {
    size_t n = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i) {
        APoly l = i < c.size() ? c[i] : APoly();
        APoly r = i < o.c.size() ? o.c[i] : APoly();
        if (!(l == r)) return false;
    }
    return true;
}
std::string XPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[i].str() << ")";
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return first ? "0" : os.str();
}

bool A2Image::operator==(const A2Image& o) const {
    return c1 == o.c1 && c2 == o.c2 && m[0][0] == o.m[0][0] && m[0][1] == o.m[0][1] &&
           m[1][0] == o.m[1][0] && m[1][1] == o.m[1][1];
}
std::string A2Image::str() const {
    std::ostringstream os;
    os << "(" << c1.str() << ", " << c2.str() << ", [[" << m[0][0].str() << ", " << m[0][1].str()
       << "], [" << m[1][0].str() << ", " << m[1][1].str() << "]])";
    return os.str();
}

namespace {

// y -> x^2 + shift in the commutative summands
XPoly commutative_image(const GWord& w, const APoly& c, int shift) {
    XPoly r;
    if (!w.word.empty()) return r;
    // (x^2 + shift)^ydeg * x^xdeg
    XPoly acc;
    acc.add(0, c);
    for (int j = 0; j < w.ydeg; ++j) {
        XPoly f;
        f.add(2, APoly(Rat(1)));
        f.add(0, APoly(Rat(shift)));
        acc = acc * f;
    }
    XPoly xs;
    xs.add(w.xdeg, APoly(Rat(1)));
    return acc * xs;
}

std::array<std::array<XPoly, 2>, 2> letter_matrix(Letter l) {
    std::array<std::array<XPoly, 2>, 2> E{};
    XPoly one;
    one.add(0, APoly(Rat(1)));
    switch (l) {
        case Letter::Y: E[1][1] = one; break;  // E22
        case Letter::Z: E[1][0] = one; break;  // E21
        case Letter::W: E[0][1] = one; break;  // E12
    }
    return E;
}

std::array<std::array<XPoly, 2>, 2> mat_mul(const std::array<std::array<XPoly, 2>, 2>& A,
                                            const std::array<std::array<XPoly, 2>, 2>& B) {
    std::array<std::array<XPoly, 2>, 2> C{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) C[i][j] += A[i][k] * B[k][j];
    return C;
}

}  // namespace

A2Image a2_structure_map(const GenPoly& p) {
    A2Image img{};
    for (auto& [w, c] : p.terms()) {
        img.c1 += commutative_image(w, c, 0);
        img.c2 += commutative_image(w, c, 2);
        // third summand: y -> x^2 + 4, letters -> elementary matrices
        XPoly scal = commutative_image(GWord{w.xdeg, w.ydeg, {}}, c, 4);
        std::array<std::array<XPoly, 2>, 2> M{};
        XPoly one;
        one.add(0, APoly(Rat(1)));
        M[0][0] = one;
        M[1][1] = one;
        for (Letter l : w.word) M = mat_mul(M, letter_matrix(l));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) img.m[i][j] += scal * M[i][j];
    }
    return img;
}

A2Image image_mul(const A2Image& a, const A2Image& b) {
    A2Image r{};
    r.c1 = a.c1 * b.c1;
    r.c2 = a.c2 * b.c2;
    r.m = mat_mul(a.m, b.m);
    return r;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct GParser {
    const std::string& s;
    size_t i = 0;
    explicit GParser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& m) {
        throw std::invalid_argument("parse error at " + std::to_string(i) + ": " + m);
    }
    void ws() { while (i < s.size() && std::isspace(uint8_t(s[i]))) ++i; }
    char peek() { ws(); return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) { ws(); if (i < s.size() && s[i] == c) { ++i; return true; } return false; }

    long integer() {
        ws();
        size_t j = i;
        while (j < s.size() && std::isdigit(uint8_t(s[j]))) ++j;
        if (j == i) fail("expected integer");
        long v = std::stol(s.substr(i, j - i));
        i = j;
        return v;
    }

    GenPoly expr() {
        GenPoly r;
        bool neg = eat('-');
        if (!neg) eat('+');
        r = term();
        if (neg) r = -r;
        while (true) {
            ws();
            if (peek() == '+') { ++i; r += term(); }
            else if (peek() == '-') { ++i; r -= term(); }
            else break;
        }
        return r;
    }

    GenPoly term() {
        GenPoly r = factor();
        while (true) {
            char c = peek();
            if (c == '*') { ++i; r = r * factor(); }
            else if (c == '(' || c == 'x' || c == 'y' || c == 'Y' || c == 'Z' || c == 'W' ||
                     c == 'a' || std::isdigit(uint8_t(c)))
                r = r * factor();
            else break;
        }
        return r;
    }

    GenPoly factor() {
        GenPoly base = primary();
        if (eat('^')) {
            long e = integer();
            GenPoly r = GenPoly::constant(APoly(Rat(1)));
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    GenPoly primary() {
        char c = peek();
        if (c == '(') {
            ++i;
            GenPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(uint8_t(c))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                Rat q(num, den);
                q.canonicalize();
                return GenPoly::constant(APoly(q));
            }
            return GenPoly::constant(APoly(Rat(num)));
        }
        ++i;
        switch (c) {
            case 'x': return GenPoly::x();
            case 'y': return GenPoly::y();
            case 'Y': return GenPoly::letter(Letter::Y);
            case 'Z': return GenPoly::letter(Letter::Z);
            case 'W': return GenPoly::letter(Letter::W);
            case 'a': return GenPoly::constant(APoly::var(1));
        }
        fail("unexpected character");
    }
};

}  // namespace

GenPoly parse_genpoly(const std::string& text) {
    GParser p(text);
    GenPoly r = p.expr();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace fbz
