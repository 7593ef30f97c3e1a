#include <doctest.h>

#include "fbzhu/vertexop.hpp"

using namespace fbz;

namespace {

FockVec mono(std::initializer_list<int> parts) {
    Mono m(parts);
    std::sort(m.begin(), m.end(), std::greater<int>());
    return FockVec::unit(MonoTable::instance().id(m));
}

std::vector<FockVec> basis_upto(int W) {
    std::vector<FockVec> out;
    for (int w = 0; w <= W; ++w)
        for (int id : basis_ids_of_weight(w)) out.push_back(FockVec::unit(id));
    return out;
}

// Independent residue oracle: computes Res_x (1+x)^P Y(u,x) v / x^s by walking
// the truncated series coefficient-by-coefficient through mode_table only at
// single powers, i.e. sum_i C(P,i) u_{i-s} v, but evaluating u_m v through the
// generic apply_word spread at one mode at a time.
FockVec residue_oracle(const FockVec& u, const FockVec& v, int P_of_wt, int s, int n) {
    auto& T = MonoTable::instance();
    FockVec out;
    for (auto& [umid, uc] : u.terms()) {
        int P = T.weight(umid) + P_of_wt;
        for (int i = 0; i <= P; ++i) {
            Rat b = Rat(binom(P, i));
            if (is_zero(b)) continue;
            auto tbl = mode_table<FockVec>(umid, i - s, i - s, v);
            auto it = tbl.find(i - s);
            if (it == tbl.end()) continue;
            out.add_scaled(it->second, uc * APoly(b));
        }
    }
    (void)n;
    return out;
}

}  // namespace

TEST_CASE("mode_product basic values") {
    // creation coefficient
    CHECK(mode_product(mono({1}), -1, FockVec::vacuum()) == mono({1}));
    // L_a(0) eigenvalue via omega
    FockVec omega = mono({1, 1}).scaled(APoly(Rat(1, 2)));
    omega.add_scaled(mono({2}), APoly::var(1));
    CHECK(mode_product(omega, 1, mono({1, 1})) == mono({1, 1}).scaled(APoly(Rat(2))));
    // o(y) acting inside V: alpha(0)^2 + 2 alpha(-1)alpha(1) + ... on a(-1)|0>
    CHECK(mode_product(mono({1, 1}), 1, mono({1})) == mono({1}).scaled(APoly(Rat(2))));
}

TEST_CASE("mode_product weight bookkeeping") {
    auto& T = MonoTable::instance();
    for (auto& u : basis_upto(4)) {
        if (u.leading() == vacuum_id()) continue;
        for (auto& v : basis_upto(4))
            for (int m = -4; m <= 6; ++m) {
                FockVec p = mode_product(u, m, v);
                if (p.is_zero()) continue;
                int got = 0;
                CHECK(p.homogeneous(&got));
                CHECK(got == T.weight(u.leading()) + T.weight(v.leading()) - m - 1);
            }
    }
}

TEST_CASE("circ examples") {
    // Y(1,x) = id
    CHECK(circ_n(FockVec::vacuum(), mono({2}), 2).is_zero());
    // a(-1)|0> o_2 |0> = a(-6) + 3a(-5) + 3a(-4) + a(-3)
    FockVec want = mono({6}) + mono({5}).scaled(APoly(Rat(3))) +
                   mono({4}).scaled(APoly(Rat(3))) + mono({3});
    CHECK(circ_n(mono({1}), FockVec::vacuum(), 2) == want);
    // v o_0 1 = (L(-1) + L(0)) v
    for (auto& v : basis_upto(4))
        CHECK(circ_n(v, FockVec::vacuum(), 0) == shift_generator(v));
}

TEST_CASE("circ and star against the independent residue oracle") {
    for (auto& u : basis_upto(4))
        for (auto& v : basis_upto(3))
            for (int n = 0; n <= 2; ++n) {
                CHECK(circ_n(u, v, n) == residue_oracle(u, v, n, 2 * n + 2, n));
                FockVec star;
                for (int m = 0; m <= n; ++m) {
                    Rat c = Rat(binom(m + n, n));
                    if (m % 2 == 1) c = -c;
                    star.add_scaled(residue_oracle(u, v, n, n + m + 1, n), APoly(c));
                }
                CHECK(star_n(u, v, n) == star);
            }
}

TEST_CASE("star identities") {
    // |0> is an exact left identity; the right identity holds only modulo
    // O_n(V) for n >= 1 (certified in the registry), and exactly at n = 0.
    for (int n = 0; n <= 3; ++n)
        for (auto& v : basis_upto(4))
            CHECK(star_n(FockVec::vacuum(), v, n) == v);
    for (auto& v : basis_upto(4))
        CHECK(star_n(v, FockVec::vacuum(), 0) == v);
    // (5.13): a(-1)|0> *_2 v = 10 a(-3)v + 15 a(-4)v + 6 a(-5)v
    for (auto& v : basis_upto(4)) {
        FockVec want = apply_mode(-3, v).scaled(APoly(Rat(10)));
        want += apply_mode(-4, v).scaled(APoly(Rat(15)));
        want += apply_mode(-5, v).scaled(APoly(Rat(6)));
        CHECK(star_n(mono({1}), v, 2) == want);
    }
    // level 0: x *_0 x = a(-1)^2|0>
    CHECK(star_n(mono({1}), mono({1}), 0) == mono({1, 1}));
}

TEST_CASE("commutator residue") {
    for (auto& v : basis_upto(4)) {
        CHECK(commutator_residue(mono({1}), v).is_zero());  // alpha(0) v = 0
        CHECK(commutator_residue(FockVec::vacuum(), v).is_zero());
    }
    // omega against any v: sum_i C(1,i) L_a(i-1) v = (L(-1)+L(0))v, the shift
    // element (consistent with omega being central modulo O_n)
    FockVec omega = mono({1, 1}).scaled(APoly(Rat(1, 2)));
    omega.add_scaled(mono({2}), APoly::var(1));
    CHECK(commutator_residue(omega, mono({1})) == mono({2}) + mono({1}));
    for (auto& v : basis_upto(4))
        CHECK(commutator_residue(omega, v) == shift_generator(v));
}

TEST_CASE("L(-1)-derivative property of mode products") {
    for (auto& u : basis_upto(3)) {
        if (u.leading() == vacuum_id()) continue;
        FockVec lu = virasoro_mode(-1, u);
        for (auto& v : basis_upto(3))
            for (int m = -3; m <= 4; ++m)
                CHECK(mode_product(lu, m, v) ==
                      mode_product(u, m - 1, v).scaled(APoly(Rat(-m))));
    }
}

TEST_CASE("closed multiplication formula at the spec examples") {
    // alpha(-1)^4 |0> *_2 |0>: leading coefficient 45 = (16-1)(16-4)/4
    FockVec p = star_formula_closed({4}, FockVec::vacuum(), 2);
    CHECK(p.coeff(mono({1, 1, 1, 1}).leading()) == APoly(Rat(45)));
    CHECK(p == star_n(mono({1, 1, 1, 1}), FockVec::vacuum(), 2));
    // g_1 = 0 for i = t = 1
    for (auto& v : basis_upto(4)) {
        FockVec direct = star_n(mono({1}), v, 2);
        CHECK(star_direct_creation_part({1}, v, 2) == direct);
        CHECK(star_formula_main({1}, v, 2) == direct);
    }
}

TEST_CASE("closed formula equals direct star on a sweep") {
    for (int wu = 0; wu <= 4; ++wu)
        for (auto& um : basis_of_weight(wu)) {
            int t = um.empty() ? 0 : um.front();
            std::vector<int> expo(t, 0);
            for (int k : um) expo[k - 1] += 1;
            for (auto& v : basis_upto(3)) {
                FockVec direct = star_n(FockVec::unit(MonoTable::instance().id(um)), v, 2);
                CHECK(star_formula_closed(expo, v, 2) == direct);
            }
        }
}

TEST_CASE("generic recursion values") {
    // (m=6, n=2, v=|0>)
    FockVec want = -(mono({3}) + mono({4}).scaled(APoly(Rat(3))) +
                     mono({5}).scaled(APoly(Rat(3))));
    CHECK(generic_recursion(6, 2, FockVec::vacuum()) == want);
    // identity case m = n+1
    for (auto& v : basis_upto(3)) {
        CHECK(generic_recursion(3, 2, v) == apply_mode(-3, v));
        // (m=4, n=1): alpha(-4)v ~ -alpha(-2)v - 2 alpha(-3)v
        CHECK(generic_recursion(4, 1, v) ==
              -(apply_mode(-2, v) + apply_mode(-3, v).scaled(APoly(Rat(2)))));
    }
}

TEST_CASE("virasoro via omega mode products") {
    FockVec omega = mono({1, 1}).scaled(APoly(Rat(1, 2)));
    omega.add_scaled(mono({2}), APoly::var(1));
    for (int n = -4; n <= 4; ++n)
        for (auto& v : basis_upto(4))
            CHECK(mode_product(omega, n + 1, v) == virasoro_mode(n, v));
}
