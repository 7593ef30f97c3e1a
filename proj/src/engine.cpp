#include "fbzhu/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace fbz {

std::string origin_str(const Origin& o) {
    if (o.kind == Origin::Shift) return "shift(" + mono_str(o.v) + ")";
    return "circ(" + mono_str(o.u) + ", " + mono_str(o.v) + ")";
}

std::optional<Origin> origin_parse(const std::string& s) {
    auto inner = [&](size_t open) { return s.substr(open, s.size() - open - 1); };
    Origin o;
    if (s.rfind("shift(", 0) == 0 && s.back() == ')') {
        o.kind = Origin::Shift;
        o.v = parse_element(inner(6)).leading();
        return o;
    }
    if (s.rfind("circ(", 0) == 0 && s.back() == ')') {
        std::string body = inner(5);
        size_t comma = body.find(',');
        if (comma == std::string::npos) return std::nullopt;
        o.kind = Origin::Circ;
        o.u = parse_element(body.substr(0, comma)).leading();
        o.v = parse_element(body.substr(comma + 1)).leading();
        return o;
    }
    return std::nullopt;
}

FockVec origin_vector(const Origin& o, int level) {
    if (o.kind == Origin::Shift) return shift_generator(FockVec::unit(o.v));
    return circ_n(FockVec::unit(o.u), FockVec::unit(o.v), level);
}

int origin_top_weight(const Origin& o, int level) {
    auto& T = MonoTable::instance();
    if (o.kind == Origin::Shift) return T.weight(o.v) + 1;
    return T.weight(o.u) + T.weight(o.v) + 2 * level + 1;
}

FockVec replay_certificate(const Certificate& c) {
    FockVec sum;
    for (auto& t : c.terms) {
        FockVec g = origin_vector(t.origin, c.level);
        sum.add_scaled(g, t.coeff);
    }
    for (auto& [v, coeff] : c.filtration) sum.add_scaled(v, coeff);
    return sum;
}

bool certificate_ok(const Certificate& c) {
    return replay_certificate(c) == c.target;
}

int certificate_a_degree(const Certificate& c) {
    int d = 0;
    for (auto& t : c.terms) d = std::max(d, t.coeff.degree());
    for (auto& [v, coeff] : c.filtration) d = std::max(d, coeff.degree());
    return std::max(d, 0);
}

// ---------------------------------------------------------------------------

Engine::Engine(int level) : Engine(level, Options{}) {}

Engine::Engine(int level, Options opt) : n_(level), opt_(opt) {
    if (level < 0) throw std::invalid_argument("Engine: negative level");
}

Engine::RatVec Engine::to_ratvec(const FockVec& v, int adeg) {
    RatVec r;
    for (auto& [mid, c] : v.terms()) {
        Rat q = c.coeff(adeg);
        if (!is_zero(q)) r.emplace_back(mid, q);
    }
    return r;
}

FockVec Engine::to_fock(const RatVec& v, int adeg) {
    FockVec f;
    for (auto& [mid, q] : v) f.add(mid, adeg == 0 ? APoly(q) : APoly::var(adeg, q));
    return f;
}

namespace {

// max-first working set for sparse elimination; subtraction touches only the
// subtracted row's entries
struct Work {
    std::unordered_map<int, Rat> val;
    std::vector<int> heap;  // max-heap by monomial order, lazy deletion

    static bool less(int a, int b) { return MonoTable::instance().less(a, b); }
    void heap_push(int mid) {
        heap.push_back(mid);
        std::push_heap(heap.begin(), heap.end(), less);
    }
    void set_from(const std::vector<std::pair<int, Rat>>& v) {
        val.clear();
        heap.clear();
        for (auto& [mid, q] : v) {
            val.emplace(mid, q);
            heap.push_back(mid);
        }
        std::make_heap(heap.begin(), heap.end(), less);
    }
    void add(int mid, const Rat& c) {
        auto [it, fresh] = val.try_emplace(mid, c);
        if (fresh) {
            heap_push(mid);
            return;
        }
        it->second += c;
        if (is_zero(it->second)) val.erase(it);
    }
    // largest live monomial, or -1
    int peek() {
        while (!heap.empty()) {
            int top = heap.front();
            auto it = val.find(top);
            if (it != val.end()) return top;
            std::pop_heap(heap.begin(), heap.end(), less);
            heap.pop_back();
        }
        return -1;
    }
    void drop_top() {
        std::pop_heap(heap.begin(), heap.end(), less);
        heap.pop_back();
    }
    std::vector<std::pair<int, Rat>> flatten() const {
        std::vector<std::pair<int, Rat>> out(val.begin(), val.end());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return MonoTable::instance().less(b.first, a.first);
        });
        return out;
    }
};

}  // namespace

void Engine::sub_scaled(RatVec& dst, const RatVec& src, const Rat& c) {
    if (is_zero(c)) return;
    auto& T = MonoTable::instance();
    RatVec out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j >= src.size()) { out.push_back(dst[i++]); continue; }
        if (i >= dst.size() || T.less(dst[i].first, src[j].first)) {
            // src[j] comes first (it is larger)
            if (i < dst.size() && dst[i].first == src[j].first) { /* unreachable */ }
            Rat q = -c * src[j].second;
            if (!is_zero(q)) out.emplace_back(src[j].first, q);
            ++j;
            continue;
        }
        if (dst[i].first == src[j].first) {
            Rat q = dst[i].second - c * src[j].second;
            if (!is_zero(q)) out.emplace_back(dst[i].first, q);
            ++i; ++j;
            continue;
        }
        out.push_back(dst[i++]);
    }
    dst.swap(out);
}

int Engine::insert_origin(const Origin& o, int* lead_out) {
    if (inserted_.count(o)) return -1;
    inserted_.insert(o);
    FockVec gf = origin_vector(o, n_);
    if (gf.is_zero()) return -1;
    Work w;
    {
        RatVec raw;
        for (auto& [mid, c] : gf.terms()) raw.emplace_back(mid, c.as_rat());  // generators are a-free
        max_gen_top_ = std::max(max_gen_top_, MonoTable::instance().weight(raw.front().first));
        w.set_from(raw);
    }
    std::vector<std::pair<int, Rat>> reds;
    int lead = -1;
    while ((lead = w.peek()) >= 0) {
        int rid = ensure_rule(lead);
        if (rid < 0) break;
        Rat c = w.val[lead];
        for (auto& [mid, q] : rows_[rid].vec) w.add(mid, -c * q);
        reds.emplace_back(rid, c);
    }
    if (lead < 0) return -1;  // dependent generator
    RatVec raw = w.flatten();
    Rat norm = raw.front().second;
    RatVec vec;
    vec.reserve(raw.size());
    for (auto& [mid, q] : raw) vec.emplace_back(mid, q / norm);
    int id = int(rows_.size());
    rows_.push_back(Row{std::move(vec), o, std::move(reds), norm});
    by_lead_[lead] = id;
    if (lead_out) *lead_out = lead;
    return id;
}

int Engine::ensure_rule(int mid) {
    auto it = by_lead_.find(mid);
    if (it != by_lead_.end()) return it->second;
    if (in_progress_.count(mid)) return -1;
    auto& T = MonoTable::instance();
    const Mono& mu = T.mono(mid);
    if (mu.empty()) return -1;
    int maxm = mu.front();

    in_progress_.insert(mid);
    auto done = [&](int r) { in_progress_.erase(mid); return r; };

    if (maxm >= 2 * n_ + 2) {
        // alpha(-k)|0> o_n rest has leading alpha(-maxm) rest
        Origin o;
        o.kind = Origin::Circ;
        Mono rest(mu.begin() + 1, mu.end());
        o.u = T.id(Mono{maxm - 2 * n_ - 1});
        o.v = T.id(rest);
        insert_origin(o);
        auto it2 = by_lead_.find(mid);
        return done(it2 != by_lead_.end() ? it2->second : -1);
    }
    if (maxm == 2 * n_ + 1 && n_ >= 1 && opt_.allow_shifts) {
        // (L(-1)+L(0)) applied to mu with one maximal part demoted
        Mono u = mu;
        u.front() -= 1;
        std::sort(u.begin(), u.end(), std::greater<int>());
        Origin o;
        o.kind = Origin::Shift;
        o.v = T.id(u);
        insert_origin(o);
        auto it2 = by_lead_.find(mid);
        if (it2 != by_lead_.end()) return done(it2->second);
    }
    // low-mode zone: try the cheap per-monomial candidates once
    if (!pattern_tried_.count(mid)) {
        pattern_tried_.insert(mid);
        if (opt_.allow_shifts) {
            for (size_t i = 0; i < mu.size(); ++i) {
                if (mu[i] < 2) break;
                if (i > 0 && mu[i] == mu[i - 1]) continue;
                Mono u = mu;
                u[i] -= 1;
                std::sort(u.begin(), u.end(), std::greater<int>());
                Origin o;
                o.kind = Origin::Shift;
                o.v = T.id(u);
                insert_origin(o);
                if (by_lead_.count(mid)) break;
            }
        }
        auto it2 = by_lead_.find(mid);
        if (it2 != by_lead_.end()) return done(it2->second);
    }
    return done(-1);
}

void Engine::continue_reduce(ReduceState& st) {
    Work w;
    w.set_from(st.residual);
    std::vector<std::pair<int, Rat>> stuck;
    int lead;
    while ((lead = w.peek()) >= 0) {
        int rid = ensure_rule(lead);
        if (rid < 0) {
            stuck.emplace_back(lead, w.val[lead]);
            w.val.erase(lead);
            w.drop_top();
            continue;
        }
        Rat c = w.val[lead];
        for (auto& [mid, q] : rows_[rid].vec) w.add(mid, -c * q);
        st.used.emplace_back(rid, c);
    }
    st.residual.swap(stuck);  // already in descending order
    st.cursor = st.residual.size();
}

bool Engine::grow(const std::set<int>& stuck_weights, int M, int stage) {
    auto& T = MonoTable::instance();
    bool grown = false;
    auto add = [&](const Origin& o) {
        if (origin_top_weight(o, n_) > M) return;
        if (inserted_.count(o)) return;
        insert_origin(o);
        grown = true;
    };

    // small first arguments used throughout the reduction arguments
    static const std::vector<Mono> catalog_small = [] {
        std::vector<Mono> c;
        for (int w = 2; w <= 6; ++w)
            for (auto& m : basis_of_weight(w))
                if (m.size() >= 2) c.push_back(m);
        c.push_back(Mono{3, 3, 3});
        return c;
    }();
    static const std::vector<Mono> catalog_big = [] {
        std::vector<Mono> c;
        for (int w = 2; w <= 9; ++w)
            for (auto& m : basis_of_weight(w)) c.push_back(m);
        return c;
    }();

    for (int W : stuck_weights) {
        auto key = std::make_tuple(W, stage, M);
        if (batch_done_.count(key)) continue;
        batch_done_.insert(key);
        if (stage == 0) {
            if (opt_.allow_shifts && W >= 1)
                for (int id : basis_ids_of_weight(W - 1)) {
                    Origin o; o.kind = Origin::Shift; o.v = id;
                    add(o);
                }
            for (auto& u : catalog_small) {
                int wu = mono_weight(u);
                for (int d = 0; d <= 4; ++d) {
                    int wv = W - wu - (2 * n_ + 1) + d;
                    if (wv < 0) continue;
                    for (auto& v : basis_of_weight(wv)) {
                        if (!v.empty() && v.front() > 2 * n_ + 1) continue;
                        Origin o; o.kind = Origin::Circ;
                        o.u = T.id(u); o.v = T.id(v);
                        add(o);
                    }
                }
            }
        } else if (stage == 1) {
            if (opt_.allow_shifts)
                for (int id : basis_ids_of_weight(W)) {
                    Origin o; o.kind = Origin::Shift; o.v = id;
                    add(o);
                }
            for (auto& u : catalog_big) {
                int wu = mono_weight(u);
                for (int d = 0; d <= 5; ++d) {
                    int wv = W - wu - (2 * n_ + 1) + d;
                    if (wv < 0) continue;
                    for (auto& v : basis_of_weight(wv)) {
                        if (!v.empty() && v.front() > 2 * n_ + 2) continue;
                        Origin o; o.kind = Origin::Circ;
                        o.u = T.id(u); o.v = T.id(v);
                        add(o);
                    }
                }
            }
        } else if (stage >= 2) {
            if (W > opt_.exhaustive_weight) continue;
            int cap = std::min(W + 4, M);
            if (opt_.allow_shifts)
                for (int wu = 0; wu + 1 <= cap; ++wu)
                    for (int id : basis_ids_of_weight(wu)) {
                        Origin o; o.kind = Origin::Shift; o.v = id;
                        add(o);
                    }
            for (int wu = 0; wu <= cap - 2 * n_ - 1; ++wu)
                for (int wv = 0; wu + wv + 2 * n_ + 1 <= cap; ++wv)
                    for (int uid : basis_ids_of_weight(wu))
                        for (int vid : basis_ids_of_weight(wv)) {
                            Origin o; o.kind = Origin::Circ;
                            o.u = uid; o.v = vid;
                            add(o);
                        }
        }
    }
    return grown;
}

std::vector<CertTerm> Engine::expand(const std::vector<std::pair<int, Rat>>& used) const {
    std::vector<Rat> pend(rows_.size(), Rat(0));
    int maxid = -1;
    for (auto& [rid, c] : used) {
        pend[rid] += c;
        maxid = std::max(maxid, rid);
    }
    std::map<Origin, Rat> combo;
    for (int rid = maxid; rid >= 0; --rid) {
        if (is_zero(pend[rid])) continue;
        const Row& r = rows_[rid];
        Rat c = pend[rid] / r.norm;
        combo[r.origin] += c;
        for (auto& [child, cc] : r.reds) pend[child] -= c * cc;
        pend[rid] = 0;
    }
    std::vector<CertTerm> out;
    for (auto& [o, c] : combo)
        if (!is_zero(c)) out.push_back(CertTerm{o, APoly(c)});
    return out;
}

Engine::Result Engine::solve(const FockVec& target, const std::vector<FockVec>& extras, int ceiling) {
    std::lock_guard<std::mutex> lock(big_mu_);
    auto& T = MonoTable::instance();
    Result res;
    if (target.is_zero() && extras.empty()) {
        res.proven = true;
        res.cert.level = n_;
        res.cert.cutoff = 0;
        return res;
    }

    if (ceiling < target.top_weight()) {
        res.residual_str = "cutoff below target weight";
        res.cutoff = ceiling;
        return res;
    }
    int top = target.top_weight();
    for (auto& e : extras) top = std::max(top, e.top_weight());
    int M = std::min(top + 2 * n_ + 2, std::max(ceiling, 0));

    // slice the target by a-degree (generators and extras are a-free)
    int adeg_max = 0;
    for (auto& [mid, c] : target.terms()) adeg_max = std::max(adeg_max, c.degree());
    std::vector<ReduceState> tstate(adeg_max + 1);
    for (int d = 0; d <= adeg_max; ++d) tstate[d].residual = to_ratvec(target, d);
    std::vector<ReduceState> estate(extras.size());
    for (size_t i = 0; i < extras.size(); ++i) {
        for (auto& [mid, c] : extras[i].terms())
            if (c.degree() > 0) throw std::invalid_argument("extras must be a-free");
        estate[i].residual = to_ratvec(extras[i], 0);
    }

    int stage = 0;
    while (true) {
        for (auto& st : tstate) continue_reduce(st);
        for (auto& st : estate) continue_reduce(st);

        // try to solve residual_d = sum_i lambda_{i,d} extra_residual_i  over each slice
        std::vector<int> support;
        {
            std::set<int> s;
            for (auto& st : tstate)
                for (auto& [mid, q] : st.residual) s.insert(mid);
            for (auto& st : estate)
                for (auto& [mid, q] : st.residual) s.insert(mid);
            support.assign(s.begin(), s.end());
        }
        bool solvable = true;
        std::vector<std::vector<Rat>> lambda(tstate.size(), std::vector<Rat>(extras.size(), Rat(0)));
        if (support.empty()) {
            // trivially solved with lambda = 0
        } else if (extras.empty()) {
            solvable = std::all_of(tstate.begin(), tstate.end(),
                                   [](const ReduceState& st) { return st.residual.empty(); });
        } else {
            std::unordered_map<int, int> pos;
            for (size_t i = 0; i < support.size(); ++i) pos[support[i]] = int(i);
            size_t R = support.size(), C = estate.size();
            std::vector<std::vector<Rat>> A(R, std::vector<Rat>(C, Rat(0)));
            for (size_t j = 0; j < C; ++j)
                for (auto& [mid, q] : estate[j].residual) A[pos[mid]][j] = q;
            // row reduce A once, apply to every slice's rhs
            for (size_t d = 0; d < tstate.size() && solvable; ++d) {
                std::vector<std::vector<Rat>> M2 = A;
                std::vector<Rat> b(R, Rat(0));
                for (auto& [mid, q] : tstate[d].residual) b[pos[mid]] = q;
                // gaussian elimination with partial pivoting by column order
                std::vector<int> pivot_row_of_col(C, -1);
                size_t row = 0;
                for (size_t col = 0; col < C && row < R; ++col) {
                    size_t pr = row;
                    while (pr < R && is_zero(M2[pr][col])) ++pr;
                    if (pr == R) continue;
                    std::swap(M2[pr], M2[row]);
                    std::swap(b[pr], b[row]);
                    Rat inv = Rat(1) / M2[row][col];
                    for (size_t c2 = col; c2 < C; ++c2) M2[row][c2] *= inv;
                    b[row] *= inv;
                    for (size_t r2 = 0; r2 < R; ++r2) {
                        if (r2 == row || is_zero(M2[r2][col])) continue;
                        Rat f = M2[r2][col];
                        for (size_t c2 = col; c2 < C; ++c2) M2[r2][c2] -= f * M2[row][c2];
                        b[r2] -= f * b[row];
                    }
                    pivot_row_of_col[col] = int(row);
                    ++row;
                }
                // consistency: rows beyond `row` must have zero rhs
                for (size_t r2 = row; r2 < R; ++r2)
                    if (!is_zero(b[r2])) { solvable = false; break; }
                if (!solvable) break;
                for (size_t col = 0; col < C; ++col)
                    if (pivot_row_of_col[col] >= 0) lambda[d][col] = b[pivot_row_of_col[col]];
            }
        }

        if (solvable) {
            res.proven = true;
            res.cert.level = n_;
            res.cert.target = target;
            // assemble terms: sum over slices of a^d * (target-used - sum_i lambda_i extra-used_i)
            std::map<Origin, APoly> combo;
            for (size_t d = 0; d < tstate.size(); ++d)
                for (auto& t : expand(tstate[d].used))
                    combo[t.origin] += APoly::var(int(d), Rat(1)) * t.coeff;
            res.extra_coeffs.assign(extras.size(), APoly());
            for (size_t i = 0; i < extras.size(); ++i) {
                APoly li;
                for (size_t d = 0; d < tstate.size(); ++d)
                    li += APoly::var(int(d), lambda[d][i]);
                res.extra_coeffs[i] = li;
                if (!li.is_zero()) {
                    for (auto& t : expand(estate[i].used)) {
                        combo[t.origin] -= li * t.coeff;
                    }
                    res.cert.filtration.emplace_back(extras[i], li);
                }
            }
            int cutoff = target.top_weight();
            for (auto& [o, c] : combo)
                if (!c.is_zero()) {
                    res.cert.terms.push_back(CertTerm{o, c});
                    cutoff = std::max(cutoff, origin_top_weight(o, n_));
                }
            res.cert.cutoff = cutoff;
            res.cutoff = cutoff;
            return res;
        }

        // escalate
        std::set<int> stuck_weights;
        for (auto& st : tstate)
            for (auto& [mid, q] : st.residual) stuck_weights.insert(T.weight(mid));
        for (auto& st : estate)
            for (auto& [mid, q] : st.residual) stuck_weights.insert(T.weight(mid));
        bool grown = grow(stuck_weights, M, stage);
        if (!grown) {
            if (stage < opt_.max_stage) { ++stage; continue; }
            if (M + 2 <= ceiling) { M += 2; stage = 0; continue; }
            res.cutoff = M;
            std::ostringstream os;
            for (auto& st : tstate) {
                if (st.residual.empty()) continue;
                os << print_element(to_fock(st.residual)) << "; ";
            }
            res.residual_str = os.str();
            return res;
        }
    }
}

void Engine::insert_all_generators(int M) {
    std::lock_guard<std::mutex> lock(big_mu_);
    auto& T = MonoTable::instance();
    (void)T;
    if (opt_.allow_shifts)
        for (int wu = 0; wu + 1 <= M; ++wu)
            for (int id : basis_ids_of_weight(wu)) {
                Origin o; o.kind = Origin::Shift; o.v = id;
                if (!inserted_.count(o)) insert_origin(o);
            }
    for (int wu = 0; wu <= M - 2 * n_ - 1; ++wu)
        for (int wv = 0; wu + wv + 2 * n_ + 1 <= M; ++wv)
            for (int uid : basis_ids_of_weight(wu))
                for (int vid : basis_ids_of_weight(wv)) {
                    Origin o; o.kind = Origin::Circ; o.u = uid; o.v = vid;
                    if (!inserted_.count(o)) insert_origin(o);
                }
}

std::map<int, int> Engine::leading_count_by_weight() const {
    auto& T = MonoTable::instance();
    std::map<int, int> c;
    for (auto& [mid, rid] : by_lead_) c[T.weight(mid)]++;
    return c;
}

bool Engine::save(const std::string& path) const {
    std::string tmp = path + ".tmp";
    std::ofstream f(tmp);
    if (!f) return false;
    f << "fbzhu-span v1 level " << n_ << " shifts " << (opt_.allow_shifts ? 1 : 0) << "\n";
    for (auto& o : inserted_) {
        f << int(o.kind) << " " << mono_str(o.kind == Origin::Circ ? o.u : o.v);
        if (o.kind == Origin::Circ) f << " | " << mono_str(o.v);
        f << "\n";
    }
    f.close();
    return std::rename(tmp.c_str(), path.c_str()) == 0;
}

bool Engine::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) return false;
    std::string header;
    std::getline(f, header);
    std::ostringstream want;
    want << "fbzhu-span v1 level " << n_ << " shifts " << (opt_.allow_shifts ? 1 : 0);
    if (header != want.str()) return false;
    std::lock_guard<std::mutex> lock(big_mu_);
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int kind;
        ls >> kind;
        std::string rest;
        std::getline(ls, rest);
        size_t bar = rest.find('|');
        Origin o;
        o.kind = Origin::Kind(kind);
        if (o.kind == Origin::Circ && bar != std::string::npos) {
            o.u = parse_element(rest.substr(0, bar)).leading();
            o.v = parse_element(rest.substr(bar + 1)).leading();
        } else {
            o.v = parse_element(rest).leading();
        }
        if (!inserted_.count(o)) insert_origin(o);
    }
    return true;
}

Engine& shared_engine(int level) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Engine>> engines;
    std::lock_guard<std::mutex> lock(mu);
    auto& e = engines[level];
    if (!e) e = std::make_unique<Engine>(level);
    return *e;
}

Engine& shared_circ_only_engine(int level) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Engine>> engines;
    std::lock_guard<std::mutex> lock(mu);
    auto& e = engines[level];
    if (!e) {
        Engine::Options opt;
        opt.allow_shifts = false;
        e = std::make_unique<Engine>(level, opt);
    }
    return *e;
}

}  // namespace fbz
