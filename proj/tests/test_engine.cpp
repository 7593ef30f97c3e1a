#include <doctest.h>

#include "fbzhu/zhu.hpp"

using namespace fbz;

namespace {

FockVec mono(std::initializer_list<int> parts) {
    Mono m(parts);
    std::sort(m.begin(), m.end(), std::greater<int>());
    return FockVec::unit(MonoTable::instance().id(m));
}

}  // namespace

TEST_CASE("enumerate_generators examples") {
    // (n=2, M=0): empty (shift(|0>) = 0 is dropped)
    CHECK(enumerate_generators(2, 0).empty());
    // (n=2, M=5) includes shift(a(-1)|0>) = a(-2)|0> + a(-1)|0>
    bool found = false;
    for (auto& g : enumerate_generators(2, 5))
        if (g.origin.kind == Origin::Shift && g.vec == mono({2}) + mono({1})) found = true;
    CHECK(found);
    // (n=0, M=2) includes v o_0 1 = (L(-1)+L(0))v for v = a(-1)|0>
    bool found0 = false;
    for (auto& g : enumerate_generators(0, 2))
        if (g.origin.kind == Origin::Circ && g.vec == shift_generator(mono({1}))) found0 = true;
    CHECK(found0);
}

TEST_CASE("membership: single shift generator") {
    FockVec w = mono({2}) + mono({1});
    auto out = membership(w, 2, 3);
    REQUIRE(out.proven);
    CHECK(out.cert.terms.size() == 1);
    CHECK(out.cert.terms[0].origin.kind == Origin::Shift);
    CHECK(certificate_ok(out.cert));
    CHECK(certificate_a_degree(out.cert) == 0);
}

TEST_CASE("membership: cutoff too small throws") {
    CHECK_THROWS_AS(membership(mono({4, 4}), 2, 3), CutoffTooSmall);
}

TEST_CASE("membership: alpha(-1)|0> is never proven") {
    auto out = membership(mono({1}), 2, 12);
    CHECK(!out.proven);
}

TEST_CASE("equivalent: alpha(-5)|0> = -alpha(-4)|0> at level 2") {
    auto out = equivalent(mono({5}), -mono({4}), 2, 6);
    REQUIRE(out.proven);
    CHECK(certificate_ok(out.cert));
}

TEST_CASE("equivalent: alpha(-4)^l alpha(-5) = -alpha(-4)^{l+1}, l = 1") {
    auto out = equivalent(mono({5, 4}), -mono({4, 4}), 2, 12);
    REQUIRE(out.proven);
    CHECK(certificate_ok(out.cert));
}

TEST_CASE("membership: C(C+D)|0> from Eq (5.17)") {
    FockVec cd = mono({3}) + mono({4}).scaled(APoly(Rat(2))) + mono({5});
    FockVec w;
    for (auto& [mid, c] : cd.terms()) {
        w.add_scaled(apply_mode(-3, FockVec::unit(mid)), c);
        w.add_scaled(apply_mode(-4, FockVec::unit(mid)), c);
    }
    auto out = membership(w, 2, 10);
    REQUIRE(out.proven);
    CHECK(certificate_ok(out.cert));
}

TEST_CASE("membership with a-dependent target") {
    FockVec w = shift_generator(mono({2, 1})).scaled(APoly::var(1));
    w += shift_generator(mono({1}));
    auto out = membership(w, 2, 6);
    REQUIRE(out.proven);
    CHECK(certificate_ok(out.cert));
    CHECK(certificate_a_degree(out.cert) == 1);
}

TEST_CASE("certificate json round trip and replay") {
    FockVec w = mono({2}) + mono({1});
    auto out = membership(w, 2, 3);
    REQUIRE(out.proven);
    std::string js = certificate_json(out.cert);
    Certificate c2 = certificate_from_json(js);
    CHECK(certificate_ok(c2));
    CHECK(c2.target == out.cert.target);
}

TEST_CASE("membership with filtration span") {
    // Y^2 realized lies in O_2 + F_2(|0>) (Lemma 6.5 first line)
    FockVec t = eval_genpoly(parse_genpoly("YY"), 2);
    auto extras = filtration_basis(2, FockVec::vacuum(), 6);
    auto out = membership(t, 2, 40, extras);
    REQUIRE(out.proven);
    CHECK(certificate_ok(out.cert));
}

TEST_CASE("reduce_level2 paper examples") {
    auto r1 = reduce_level2(mono({2}));
    CHECK(r1.poly.str() == "-x");
    CHECK(certificate_ok(r1.cert));

    auto r2 = reduce_level2(mono({4, 4}));
    CHECK(r2.poly.str() == "x^2");
    CHECK(certificate_ok(r2.cert));

    auto r3 = reduce_level2(mono({5, 3}));
    CHECK(r3.poly.str() == "x^2");

    auto r4 = reduce_level2(FockVec::vacuum());
    CHECK(r4.poly.str() == "1");
}

TEST_CASE("level-1 membership: recursion image") {
    FockVec t = mono({4, 1}) + mono({2, 1}) + mono({3, 1}).scaled(APoly(Rat(2)));
    auto out = membership(t, 1, 9);
    REQUIRE(out.proven);
    CHECK(certificate_ok(out.cert));
}

TEST_CASE("level-0 membership: x *_0 x = y") {
    FockVec t = star_n(mono({1}), mono({1}), 0) - mono({1, 1});
    auto out = membership(t, 0, 8);
    REQUIRE(out.proven);
    CHECK(certificate_ok(out.cert));
}
