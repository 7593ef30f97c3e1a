#include "fbzhu/zhu.hpp"

#include <json.hpp>

#include <mutex>
#include <sstream>

namespace fbz {

using nlohmann::json;

std::vector<GenSetEntry> enumerate_generators(int n, int M) {
    std::vector<GenSetEntry> out;
    for (int wu = 0; wu + 1 <= M; ++wu)
        for (int id : basis_ids_of_weight(wu)) {
            Origin o;
            o.kind = Origin::Shift;
            o.v = id;
            FockVec g = origin_vector(o, n);
            if (!g.is_zero()) out.push_back({o, std::move(g)});
        }
    for (int wu = 0; wu <= M - 2 * n - 1; ++wu)
        for (int wv = 0; wu + wv + 2 * n + 1 <= M; ++wv)
            for (int uid : basis_ids_of_weight(wu))
                for (int vid : basis_ids_of_weight(wv)) {
                    Origin o;
                    o.kind = Origin::Circ;
                    o.u = uid;
                    o.v = vid;
                    FockVec g = origin_vector(o, n);
                    if (!g.is_zero()) out.push_back({o, std::move(g)});
                }
    return out;
}

MembershipOutcome membership(const FockVec& w, int n, int M, const std::vector<FockVec>& extras) {
    if (w.top_weight() > M)
        throw CutoffTooSmall("membership: target has weight components above cutoff " +
                             std::to_string(M));
    Engine& e = shared_engine(n);
    Engine::Result r = e.solve(w, extras, M);
    MembershipOutcome out;
    out.proven = r.proven;
    out.cert = std::move(r.cert);
    out.cutoff = r.cutoff;
    out.residual = std::move(r.residual_str);
    out.extra_coeffs = std::move(r.extra_coeffs);
    return out;
}

MembershipOutcome equivalent(const FockVec& u, const FockVec& v, int n, int M) {
    return membership(u - v, n, M);
}

std::vector<FockVec> filtration_basis(int r, const FockVec& base, int max_weight) {
    std::vector<FockVec> out;
    int base_w = base.top_weight();
    std::vector<Mono> stack{Mono{}};
    // monomials with at most r parts, weight + base weight <= max_weight
    std::function<void(Mono&, int, int)> rec = [&](Mono& cur, int maxpart, int budget) {
        {
            FockVec v = base;
            for (int k : cur) v = apply_mode(-k, v);
            if (!v.is_zero()) out.push_back(v);
        }
        if (int(cur.size()) >= r) return;
        for (int k = std::min(maxpart, budget); k >= 1; --k) {
            cur.push_back(k);
            rec(cur, k, budget - k);
            cur.pop_back();
        }
    };
    Mono cur;
    rec(cur, std::max(max_weight - base_w, 0), std::max(max_weight - base_w, 0));
    return out;
}

std::vector<FockVec> r_span_basis(int max_weight) {
    std::vector<FockVec> out;
    for (int w = 0; w <= max_weight; ++w)
        for (auto& m : basis_of_weight(w)) {
            int ones = 0;
            for (int k : m) ones += (k == 1);
            if (ones <= 1) out.push_back(FockVec::unit(MonoTable::instance().id(m)));
        }
    return out;
}

// ---------------------------------------------------------------------------

const FockVec& a2_generator_vec(A2Gen g) {
    struct Table {
        FockVec x, y, yt, z, zt, Y, Z, W;
    };
    static const Table tab = [] {
        auto& T = MonoTable::instance();
        auto unit = [&](const Mono& m) { return FockVec::unit(T.id(m)); };
        Table t;
        t.x = unit({1});
        t.y = unit({1, 1});
        t.yt = unit({4, 1});
        t.z = unit({4, 1, 1});
        t.zt = unit({4, 4, 1});
        FockVec x2 = star_n(t.x, t.x, 2);
        // Y = (x^2 - 2y - ytilde)/12
        t.Y = x2;
        t.Y.add_scaled(t.y, APoly(Rat(-2)));
        t.Y -= t.yt;
        t.Y.scale(Rat(1, 12));
        // Z = (x^3 + 2 x ytilde + ztilde)/32
        t.Z = star_n(t.x, x2, 2);
        t.Z.add_scaled(star_n(t.x, t.yt, 2), APoly(Rat(2)));
        t.Z += t.zt;
        t.Z.scale(Rat(1, 32));
        // W = -(2z + ztilde + 2xy - 2x ytilde - 3x^3)/40
        t.W = t.z.scaled(APoly(Rat(2)));
        t.W += t.zt;
        t.W.add_scaled(star_n(t.x, t.y, 2), APoly(Rat(2)));
        t.W.add_scaled(star_n(t.x, t.yt, 2), APoly(Rat(-2)));
        t.W.add_scaled(star_n(t.x, x2, 2), APoly(Rat(-3)));
        t.W.scale(Rat(-1, 40));
        return t;
    }();
    switch (g) {
        case A2Gen::x: return tab.x;
        case A2Gen::y: return tab.y;
        case A2Gen::ytilde: return tab.yt;
        case A2Gen::z: return tab.z;
        case A2Gen::ztilde: return tab.zt;
        case A2Gen::Y: return tab.Y;
        case A2Gen::Z: return tab.Z;
        case A2Gen::W: return tab.W;
    }
    throw std::logic_error("a2_generator_vec");
}

FockVec eval_genpoly(const GenPoly& p, int level) {
    FockVec out;
    for (auto& [w, c] : p.terms()) {
        // rightmost letter first
        FockVec cur = FockVec::vacuum();
        bool have = false;
        auto mul_left = [&](const FockVec& g) {
            cur = have ? star_n(g, cur, level) : g;
            have = true;
        };
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
            switch (*it) {
                case Letter::Y: mul_left(a2_generator_vec(A2Gen::Y)); break;
                case Letter::Z: mul_left(a2_generator_vec(A2Gen::Z)); break;
                case Letter::W: mul_left(a2_generator_vec(A2Gen::W)); break;
            }
        }
        for (int j = 0; j < w.ydeg; ++j) mul_left(a2_generator_vec(A2Gen::y));
        for (int j = 0; j < w.xdeg; ++j) mul_left(a2_generator_vec(A2Gen::x));
        if (!have) cur = FockVec::vacuum();
        out.add_scaled(cur, c);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct ModelWord {
    GWord w;
    int fdeg;  // filtration degree: xdeg + 2 ydeg + deg(letter)
};

std::vector<ModelWord> model_words(int max_fdeg) {
    std::vector<ModelWord> out;
    auto push = [&](int i, int j, std::vector<Letter> word, int dl) {
        if (i + 2 * j + dl > max_fdeg) return;
        out.push_back({GWord{i, j, std::move(word)}, i + 2 * j + dl});
    };
    for (int i = 0; i <= max_fdeg; ++i)
        for (int j = 0; j <= 2; ++j) {
            push(i, j, {}, 0);
            if (j == 0) {
                push(i, j, {Letter::Y}, 2);
                push(i, j, {Letter::Z}, 3);
                push(i, j, {Letter::W}, 3);
            }
        }
    std::sort(out.begin(), out.end(),
              [](const ModelWord& a, const ModelWord& b) {
                  if (a.fdeg != b.fdeg) return a.fdeg < b.fdeg;
                  return a.w < b.w;
              });
    return out;
}

// evaluation cache for model words at level 2
const FockVec& model_eval(const GWord& w) {
    static std::mutex mu;
    static std::map<GWord, FockVec> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    GenPoly p;
    p.add(w, APoly(Rat(1)));
    auto [it2, ok] = cache.emplace(w, eval_genpoly(p, 2));
    (void)ok;
    return it2->second;
}

}  // namespace

Reduction reduce_level2(const FockVec& v, int ceiling) {
    int W = std::max(v.top_weight(), 1);
    for (int fmax = W; fmax <= W + 2; ++fmax) {
        auto words = model_words(fmax);
        std::vector<FockVec> evals;
        evals.reserve(words.size());
        int top = v.top_weight();
        for (auto& mw : words) {
            evals.push_back(model_eval(mw.w));
            top = std::max(top, evals.back().top_weight());
        }
        int ceil = ceiling > 0 ? ceiling : top + 8;
        Engine& e = shared_engine(2);
        Engine::Result r = e.solve(v, evals, ceil);
        if (!r.proven) continue;
        Reduction red;
        for (size_t i = 0; i < words.size(); ++i)
            if (!r.extra_coeffs[i].is_zero()) red.poly.add(words[i].w, r.extra_coeffs[i]);
        red.cert = std::move(r.cert);
        return red;
    }
    throw std::runtime_error("reduce_level2: no representation found (ceiling too small?)");
}

// ---------------------------------------------------------------------------

ProbeReport conjecture_probe(int n, int M) {
    Engine probe(n);
    probe.insert_all_generators(M);
    auto leads = probe.leading_count_by_weight();
    ProbeReport r;
    r.level = n;
    r.max_weight = M;
    r.predicted_block = n >= 1 ? partition_count(n) : 1;
    for (int w = 0; w <= M; ++w) {
        long dim = partition_count(w);
        long span = leads.count(w) ? leads[w] : 0;
        r.rows.push_back({w, dim, span, dim - span});
    }
    std::ostringstream os;
    os << "truncated span at M=" << M
       << ": coranks are upper bounds on quotient dimensions only; conjectured "
       << "A_" << n << " = A_" << (n - 1) << " + C[x] (x) M_" << r.predicted_block << "(C)";
    r.note = os.str();
    return r;
}

std::string probe_text(const ProbeReport& r) {
    std::ostringstream os;
    os << "conjecture probe, level " << r.level << ", weights <= " << r.max_weight << "\n";
    os << "weight  dim  span  corank\n";
    for (auto& row : r.rows)
        os << "  " << row.weight << "     " << row.dim << "    " << row.span << "     "
           << row.corank << "\n";
    os << r.note << "\n";
    return os.str();
}

std::string probe_json(const ProbeReport& r) {
    json j;
    j["level"] = r.level;
    j["max_weight"] = r.max_weight;
    j["predicted_block"] = r.predicted_block;
    j["note"] = r.note;
    j["rows"] = json::array();
    for (auto& row : r.rows)
        j["rows"].push_back({{"weight", row.weight},
                             {"dim", row.dim},
                             {"span", row.span},
                             {"corank", row.corank}});
    return j.dump(2);
}

// ---------------------------------------------------------------------------

std::string certificate_json(const Certificate& c) {
    json j;
    j["target"] = print_element(c.target);
    j["level"] = c.level;
    j["cutoff"] = c.cutoff;
    j["terms"] = json::array();
    for (auto& t : c.terms)
        j["terms"].push_back({{"origin", origin_str(t.origin)}, {"coeff", t.coeff.str()}});
    j["filtration"] = json::array();
    for (auto& [v, coeff] : c.filtration)
        j["filtration"].push_back({{"term", print_element(v)}, {"coeff", coeff.str()}});
    j["residual"] = "0";
    return j.dump(2);
}

namespace {

APoly apoly_from_string(const std::string& s) {
    // reuse the genpoly parser restricted to rationals and `a`
    GenPoly p = parse_genpoly(s);
    APoly out;
    for (auto& [w, c] : p.terms()) {
        if (w.xdeg != 0 || w.ydeg != 0 || !w.word.empty())
            throw std::invalid_argument("expected a polynomial in a: " + s);
        out += c;
    }
    return out;
}

}  // namespace

Certificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    Certificate c;
    c.level = j.at("level").get<int>();
    c.cutoff = j.at("cutoff").get<int>();
    c.target = parse_element(j.at("target").get<std::string>());
    for (auto& t : j.at("terms")) {
        auto o = origin_parse(t.at("origin").get<std::string>());
        if (!o) throw std::invalid_argument("bad origin: " + t.at("origin").get<std::string>());
        c.terms.push_back({*o, apoly_from_string(t.at("coeff").get<std::string>())});
    }
    if (j.contains("filtration"))
        for (auto& t : j.at("filtration"))
            c.filtration.emplace_back(parse_element(t.at("term").get<std::string>()),
                                      apoly_from_string(t.at("coeff").get<std::string>()));
    return c;
}

}  // namespace fbz
