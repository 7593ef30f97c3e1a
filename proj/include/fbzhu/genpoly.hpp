#ifndef FBZHU_GENPOLY_HPP
#define FBZHU_GENPOLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fbzhu/apoly.hpp"

namespace fbz {

// Elements of C[x,y]<Y,Z,W>: commuting x, y and noncommuting letters Y, Z, W.
enum class Letter : int { Y = 0, Z = 1, W = 2 };

struct GWord {
    int xdeg = 0;
    int ydeg = 0;
    std::vector<Letter> word;
    bool operator<(const GWord& o) const {
        if (xdeg != o.xdeg) return xdeg < o.xdeg;
        if (ydeg != o.ydeg) return ydeg < o.ydeg;
        return word < o.word;
    }
    bool operator==(const GWord& o) const {
        return xdeg == o.xdeg && ydeg == o.ydeg && word == o.word;
    }
};

class GenPoly {
public:
    GenPoly() = default;
    static GenPoly constant(const APoly& c);
    static GenPoly x(int deg = 1);
    static GenPoly y(int deg = 1);
    static GenPoly letter(Letter l);

    bool is_zero() const { return t_.empty(); }
    const std::map<GWord, APoly>& terms() const { return t_; }
    void add(const GWord& w, const APoly& c);

    GenPoly& operator+=(const GenPoly& o);
    GenPoly& operator-=(const GenPoly& o);
    friend GenPoly operator+(GenPoly a, const GenPoly& b) { a += b; return a; }
    friend GenPoly operator-(GenPoly a, const GenPoly& b) { a -= b; return a; }
    friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
    GenPoly operator-() const;
    GenPoly& scale(const APoly& s);

    bool operator==(const GenPoly& o) const { return t_ == o.t_; }
    bool operator!=(const GenPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<GWord, APoly> t_;
};

// Canonical form over the basis {x^i y^j (j<=2)} u {x^i Y, x^i Z, x^i W}
// via the defining relations of A_2(M_a(1)).
GenPoly normal_form(const GenPoly& p);
bool is_normal(const GenPoly& p);

// concatenate and renormalize
GenPoly multiply_in_A2(const GenPoly& p, const GenPoly& q);

// polynomial in x over APoly coefficients
struct XPoly {
    std::vector<APoly> c;  // c[i] = coeff of x^i
    bool is_zero() const;
    void add(int xdeg, const APoly& q);
    XPoly& operator+=(const XPoly& o);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    bool operator==(const XPoly& o) const;
    std::string str() const;
};

// Images in C[x] + C[x] + (C[x] (x) M_2(C)):
// first summand sets y -> x^2, letters -> 0; second y -> x^2+2, letters -> 0;
// third y -> x^2+4 with Y -> E22, Z -> E21, W -> E12.
struct A2Image {
    XPoly c1, c2;
    std::array<std::array<XPoly, 2>, 2> m;
    bool operator==(const A2Image& o) const;
    std::string str() const;
};
A2Image a2_structure_map(const GenPoly& p);
A2Image image_mul(const A2Image& a, const A2Image& b);

// parser for expressions in x, y, Y, Z, W (and the scalar a), used by the CLI
GenPoly parse_genpoly(const std::string& text);

}  // namespace fbz

#endif
