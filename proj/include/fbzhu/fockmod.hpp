#ifndef FBZHU_FOCKMOD_HPP
#define FBZHU_FOCKMOD_HPP

#include <optional>
#include <string>
#include <variant>

#include "fbzhu/zhu.hpp"

namespace fbz {

// Irreducible module M_a(1,lambda) with lambda symbolic.  Vectors are
// ModVec = combinations of monomials applied to the highest-weight vector.

inline ModVec module_apply_mode(int m, const ModVec& w) { return apply_mode(m, w); }
inline ModVec virasoro_module(int n, const ModVec& w) { return virasoro_mode(n, w); }

// zero mode o(u) = u_{wt u - 1} acting on the module (u extended by linearity
// over homogeneous components)
ModVec zero_mode(const FockVec& u, const ModVec& w);

// the degree-<=2 window used throughout: v_lambda, u = a(-1)v, v = a(-1)^2 v, w = a(-2)v
ModVec omega_vector(int which);  // 0..3
std::string omega_vector_name(int which);

struct Witness {
    int vector_index;   // into the window above
    ModVec image;       // nonzero zero-mode image
    std::string text;
};

// Evaluates the zero-mode action of p (a GeneratorPoly expanded via *_2, or a
// plain Fock vector) on the window; the first nonzero image disproves
// membership in O_n(V).
std::optional<Witness> nonmembership_witness(const GenPoly& p, int n);
std::optional<Witness> nonmembership_witness(const FockVec& v, int n);

}  // namespace fbz

#endif
