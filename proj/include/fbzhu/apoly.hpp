#ifndef FBZHU_APOLY_HPP
#define FBZHU_APOLY_HPP

#include <vector>
#include <string>
#include <sstream>

#include "fbzhu/rational.hpp"

namespace fbz {

// Univariate polynomial in the formal parameter `a` over exact rationals.
// Dense by degree, no trailing zeros.
class APoly {
public:
    APoly() = default;
    APoly(const Rat& c) { if (!fbz::is_zero(c)) c_.push_back(c); }
    APoly(long n) : APoly(Rat(n)) {}
    static APoly var(int deg = 1, const Rat& c = Rat(1)) {
        APoly p;
        if (fbz::is_zero(c)) return p;
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : int(c_.size()) - 1; }
    Rat coeff(int d) const { return (d >= 0 && d < int(c_.size())) ? c_[d] : Rat(0); }

    // the constant term, asserting degree 0
    Rat as_rat() const {
        if (c_.empty()) return Rat(0);
        if (c_.size() != 1) throw std::logic_error("APoly: expected a-degree 0");
        return c_[0];
    }

    APoly& operator+=(const APoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    APoly& operator-=(const APoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend APoly operator+(APoly a, const APoly& b) { a += b; return a; }
    friend APoly operator-(APoly a, const APoly& b) { a -= b; return a; }
    friend APoly operator*(const APoly& a, const APoly& b) {
        APoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    APoly operator-() const {
        APoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    APoly& operator*=(const Rat& s) {
        if (fbz::is_zero(s)) { c_.clear(); return *this; }
        for (auto& x : c_) x *= s;
        return *this;
    }
    APoly& operator/=(const Rat& s) {
        for (auto& x : c_) x /= s;
        return *this;
    }

    bool operator==(const APoly& o) const { return c_ == o.c_; }
    bool operator!=(const APoly& o) const { return !(*this == o); }

    // list of (a-degree, coefficient) with nonzero coefficients
    std::vector<std::pair<int, Rat>> terms() const {
        std::vector<std::pair<int, Rat>> t;
        for (size_t d = 0; d < c_.size(); ++d)
            if (!fbz::is_zero(c_[d])) t.emplace_back(int(d), c_[d]);
        return t;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [d, q] : terms()) {
            Rat aq = abs(q);
            if (first) { if (sgn(q) < 0) os << "-"; first = false; }
            else os << (sgn(q) < 0 ? "-" : "+");
            bool unit = (aq == 1 && d > 0);
            if (!unit) os << rat_to_string(aq);
            if (d >= 1) os << "a";
            if (d >= 2) os << "^" << d;
        }
        return os.str();
    }

private:
    void trim() { while (!c_.empty() && fbz::is_zero(c_.back())) c_.pop_back(); }
    std::vector<Rat> c_;
};

// Polynomial in the highest-weight parameter lambda with APoly coefficients,
// i.e. an element of Q[a][lambda].
class LPoly {
public:
    LPoly() = default;
    LPoly(const APoly& c) { if (!c.is_zero()) c_.push_back(c); }
    LPoly(const Rat& c) : LPoly(APoly(c)) {}
    LPoly(long n) : LPoly(APoly(n)) {}
    static LPoly lambda(int deg = 1) {
        LPoly p;
        p.c_.assign(deg + 1, APoly());
        p.c_[deg] = APoly(Rat(1));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int lambda_degree() const { return c_.empty() ? -1 : int(c_.size()) - 1; }
    APoly coeff(int d) const { return (d >= 0 && d < int(c_.size())) ? c_[d] : APoly(); }

    LPoly& operator+=(const LPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    LPoly& operator-=(const LPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend LPoly operator+(LPoly a, const LPoly& b) { a += b; return a; }
    friend LPoly operator-(LPoly a, const LPoly& b) { a -= b; return a; }
    friend LPoly operator*(const LPoly& a, const LPoly& b) {
        LPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, APoly());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    LPoly operator-() const {
        LPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    LPoly& operator*=(const APoly& s) {
        for (auto& x : c_) x = x * s;
        trim();
        return *this;
    }
    // multiply by lambda
    LPoly shifted() const {
        LPoly r;
        if (is_zero()) return r;
        r.c_.resize(c_.size() + 1);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + 1] = c_[i];
        return r;
    }

    bool operator==(const LPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t d = 0; d < c_.size(); ++d) {
            if (c_[d].is_zero()) continue;
            if (!first) os << "+";
            first = false;
            os << "(" << c_[d].str() << ")";
            if (d >= 1) os << "λ";
            if (d >= 2) os << "^" << d;
        }
        return os.str();
    }

private:
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
    std::vector<APoly> c_;
};

}  // namespace fbz

#endif
