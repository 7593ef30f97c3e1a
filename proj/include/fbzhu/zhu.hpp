#ifndef FBZHU_ZHU_HPP
#define FBZHU_ZHU_HPP

#include <optional>
#include <string>
#include <vector>

#include "fbzhu/engine.hpp"
#include "fbzhu/genpoly.hpp"

namespace fbz {

// thrown when a membership target has components above the stated cutoff
struct CutoffTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenSetEntry {
    Origin origin;
    FockVec vec;
};
// All (L(-1)+L(0))w with wt w + 1 <= M and u o_n v with wt u + wt v + 2n+1 <= M,
// zero generators dropped.
std::vector<GenSetEntry> enumerate_generators(int n, int M);

struct MembershipOutcome {
    bool proven = false;
    Certificate cert;
    int cutoff = 0;
    std::string residual;
    std::vector<APoly> extra_coeffs;
};

// Solves w = sum c_i g_i over the O_n spanning set with generator support <= M
// (escalating internally up to M).  `extras` adjoin a finite correction span,
// e.g. an F_r(v0) filtration basis.  Semi-decision: never a disproof.
MembershipOutcome membership(const FockVec& w, int n, int M,
                             const std::vector<FockVec>& extras = {});
MembershipOutcome equivalent(const FockVec& u, const FockVec& v, int n, int M);

// basis of F_r(base): at most r creation modes applied to base, weight-capped
std::vector<FockVec> filtration_basis(int r, const FockVec& base, int max_weight);
// monomials alpha(-1)^{i1} alpha(-2)^{i2} ... with i1 <= 1 (the R-span of the
// generator-reduction arguments), weight-capped
std::vector<FockVec> r_span_basis(int max_weight);

// ---------------------------------------------------------------------------
// The five generators of A_2(M_a(1)) and the changed variables.
enum class A2Gen { x, y, ytilde, z, ztilde, Y, Z, W };
const FockVec& a2_generator_vec(A2Gen g);

// Evaluation of p in V via *_n products of the generator vectors,
// multiplying right-to-left: x^i y^j L |-> x *_n (... *_n (y *_n ... L)).
FockVec eval_genpoly(const GenPoly& p, int level);

struct Reduction {
    GenPoly poly;
    Certificate cert;  // target = v - eval(poly); proven in O_2
};
// Rewrites v modulo O_2(V) as a polynomial in {x, y, Y, Z, W}.
Reduction reduce_level2(const FockVec& v, int ceiling = -1);

// ---------------------------------------------------------------------------
struct ProbeRow {
    int weight;
    long dim;        // p(weight)
    long span;       // echelon leadings of the truncated generator span
    long corank;     // upper bound on new classes at this weight
};
struct ProbeReport {
    int level = 0;
    int max_weight = 0;
    std::vector<ProbeRow> rows;
    long predicted_block = 0;  // p(n), the conjectured matrix block size
    std::string note;
};
ProbeReport conjecture_probe(int n, int M);
std::string probe_text(const ProbeReport& r);
std::string probe_json(const ProbeReport& r);

// ---------------------------------------------------------------------------
std::string certificate_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

}  // namespace fbz

#endif
