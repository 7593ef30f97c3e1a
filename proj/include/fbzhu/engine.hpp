#ifndef FBZHU_ENGINE_HPP
#define FBZHU_ENGINE_HPP

#include <map>
#include <tuple>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fbzhu/vertexop.hpp"

namespace fbz {

// A spanning generator of O_n(V): either u o_n v for basis monomials u, v,
// or (L(-1)+L(0))w for a basis monomial w.
struct Origin {
    enum Kind : int { Circ = 0, Shift = 1 };
    Kind kind = Circ;
    int u = -1;  // circ: first argument
    int v = -1;  // circ: second argument / shift: argument
    bool operator==(const Origin& o) const { return kind == o.kind && u == o.u && v == o.v; }
    bool operator<(const Origin& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (u != o.u) return u < o.u;
        return v < o.v;
    }
};

std::string origin_str(const Origin& o);
std::optional<Origin> origin_parse(const std::string& s);
FockVec origin_vector(const Origin& o, int level);
int origin_top_weight(const Origin& o, int level);

struct CertTerm {
    Origin origin;
    APoly coeff;
};

// Replayable witness: target = sum_i coeff_i * gen(origin_i) + sum_j c_j * filtration_j.
struct Certificate {
    int level = 0;
    int cutoff = 0;
    FockVec target;
    std::vector<CertTerm> terms;
    std::vector<std::pair<FockVec, APoly>> filtration;
};

FockVec replay_certificate(const Certificate& c);
bool certificate_ok(const Certificate& c);  // replay matches target exactly
int certificate_a_degree(const Certificate& c);

// ---------------------------------------------------------------------------
// Certified row echelon over the O_n(V) generator span.
// Rows are exact rational combinations of generators, tracked for replay.
// Monomial order: weight, then lexicographic on the descending part lists.
class Engine {
public:
    struct Options {
        bool allow_shifts = true;   // disable to probe the circ-only span O_n^o
        int exhaustive_weight = 14; // full enumeration allowed at or below this top weight
        int max_stage = 3;
    };

    explicit Engine(int level);
    Engine(int level, Options opt);
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    int level() const { return n_; }

    struct Result {
        bool proven = false;
        Certificate cert;           // valid when proven
        int cutoff = 0;
        std::vector<APoly> extra_coeffs;  // lambda_i for solve_modulo
        std::string residual_str;   // nonzero residual when not proven
    };

    // Is target in the O_n span (modulo the span of `extras`)?  Semi-decision:
    // proven results carry exact certificates, failures only mean "not found
    // within the ceiling".  All extras must be a-free.
    Result solve(const FockVec& target, const std::vector<FockVec>& extras, int ceiling);

    // exhaustive span construction, used by the conjecture probe
    void insert_all_generators(int M);
    std::map<int, int> leading_count_by_weight() const;

    int max_gen_top() const { return max_gen_top_; }
    size_t row_count() const { return rows_.size(); }

    // span cache persistence (origins only; rows are rebuilt by replay)
    bool save(const std::string& path) const;
    bool load(const std::string& path);

    std::mutex& mutex() { return big_mu_; }

private:
    using RatTerm = std::pair<int, Rat>;
    using RatVec = std::vector<RatTerm>;  // monomials strictly descending

    struct Row {
        RatVec vec;  // leading coefficient 1
        Origin origin;
        std::vector<std::pair<int, Rat>> reds;  // earlier rows subtracted from gen(origin)
        Rat norm;
    };

    struct ReduceState {
        RatVec residual;
        std::vector<std::pair<int, Rat>> used;
        size_t cursor = 0;  // entries before cursor are stuck at current knowledge
    };

    static RatVec to_ratvec(const FockVec& v, int adeg);
    static FockVec to_fock(const RatVec& v, int adeg = 0);
    static void sub_scaled(RatVec& dst, const RatVec& src, const Rat& c);

    int ensure_rule(int mid);                 // returns row id or -1
    int insert_origin(const Origin& o, int* lead_out = nullptr);
    void continue_reduce(ReduceState& st);
    bool grow(const std::set<int>& stuck_weights, int M, int stage);
    std::vector<CertTerm> expand(const std::vector<std::pair<int, Rat>>& used) const;

    int n_;
    Options opt_;
    std::vector<Row> rows_;
    std::unordered_map<int, int> by_lead_;
    std::set<Origin> inserted_;
    std::unordered_set<int> in_progress_;
    std::unordered_set<int> pattern_tried_;
    std::set<std::tuple<int, int, int>> batch_done_;  // (weight, stage, M)
    int max_gen_top_ = 0;
    std::mutex big_mu_;
};

// process-wide engines, one per level (plus circ-only variants)
Engine& shared_engine(int level);
Engine& shared_circ_only_engine(int level);

}  // namespace fbz

#endif
