#ifndef FBZHU_VERTEXOP_HPP
#define FBZHU_VERTEXOP_HPP

#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "fbzhu/fock.hpp"

namespace fbz {

// Coefficients u_m v of Y(u,x)v = sum_m u_m v x^{-m-1} for the free boson.
// For u = alpha(-k1)...alpha(-kj)|0>,
//   Y(u,x) = :prod_i sum_p (-1)^{k_i-1} C(p+k_i-1, k_i-1) alpha(p) x^{-p-k_i}:
// and u_m v collects the x^{-m-1} coefficient applied to v.

// all nonzero u_m v for m in [m_lo, m_hi], u a monomial, on either state space
template <class V>
std::map<int, V> mode_table(int u_mono, int m_lo, int m_hi, const V& v);

FockVec mode_product(const FockVec& u, int m, const FockVec& v);
ModVec mode_product_module(const FockVec& u, int m, const ModVec& w);

// u o_n v = Res_x (1+x)^{wt u + n} Y(u,x) v / x^{2n+2}
FockVec circ_n(const FockVec& u, const FockVec& v, int n);

// u *_n v = sum_{m=0}^n (-1)^m C(m+n,n) Res_x (1+x)^{wt u + n} Y(u,x) v / x^{n+m+1}
FockVec star_n(const FockVec& u, const FockVec& v, int n);

// Res_x Y(u,x) v (1+x)^{wt u - 1} = sum_{i=0}^{wt u - 1} C(wt u - 1, i) u_i v
FockVec commutator_residue(const FockVec& u, const FockVec& v);

// Closed multiplication formula for alpha(-t)^{i_t}...alpha(-1)^{i_1}|0> *_n v:
// the all-creation double binomial sum with kernel C(n+r, j+m) over compositions,
// plus the correction g (terms whose normal-ordered spread has a nonnegative mode),
// computed from the direct expansion.  Agrees with star_n exactly.
// exponents[s-1] = i_s for s = 1..t.
FockVec star_formula_closed(const std::vector<int>& exponents, const FockVec& v, int n);
// the two pieces separately, for oracle tests
FockVec star_formula_main(const std::vector<int>& exponents, const FockVec& v, int n);
FockVec star_direct_creation_part(const std::vector<int>& exponents, const FockVec& v, int n);

// alpha(-m) v ~_n (-1)^{m+1} sum_{j=1}^{n+1} C(m-n-1, j-1) C(m-n-j-1, n+1-j) alpha(-n-j) v
FockVec generic_recursion(int m, int n, const FockVec& v);

// clears the per-(u,v) mode-table memo (mainly for tests)
void clear_mode_cache();

}  // namespace fbz

#endif
