#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fbzhu/fock.hpp"

using namespace fbz;

namespace {

FockVec mono(std::initializer_list<int> parts) {
    Mono m(parts);
    std::sort(m.begin(), m.end(), std::greater<int>());
    return FockVec::unit(MonoTable::instance().id(m));
}

// independent partition counter by brute-force enumeration
long count_partitions_brute(int n, int maxpart) {
    if (n == 0) return 1;
    long c = 0;
    for (int k = std::min(n, maxpart); k >= 1; --k) c += count_partitions_brute(n - k, k);
    return c;
}

}  // namespace

TEST_CASE("basis_of_weight enumerates partitions in reverse-lex order") {
    CHECK(basis_of_weight(0) == std::vector<Mono>{Mono{}});
    CHECK(basis_of_weight(3) ==
          std::vector<Mono>{Mono{3}, Mono{2, 1}, Mono{1, 1, 1}});
    CHECK(basis_of_weight(6).size() == 11);  // enumerated independently below
    for (int N = 0; N <= 20; ++N) {
        CHECK(long(basis_of_weight(N).size()) == count_partitions_brute(N, N == 0 ? 1 : N));
        CHECK(long(basis_of_weight(N).size()) == partition_count(N));
    }
}

TEST_CASE("apply_mode basics") {
    CHECK(apply_mode(1, mono({1})) == FockVec::vacuum());
    CHECK(apply_mode(0, mono({1})).is_zero());
    // alpha(2) alpha(-2)^2 |0> = 4 alpha(-2)|0>: two contractions of strength 2
    CHECK(apply_mode(2, mono({2, 2})) == mono({2}).scaled(APoly(Rat(4))));
    // creation sorts into canonical order
    CHECK(apply_mode(-2, mono({3, 1})) == mono({3, 2, 1}));
}

TEST_CASE("apply_word composes outermost-first") {
    FockVec v = mono({1});
    CHECK(apply_word({}, v) == v);
    CHECK(apply_word({-1, 1}, v) == v);
    CHECK(apply_word({1, -1}, FockVec::vacuum()) == FockVec::vacuum());
}

TEST_CASE("heisenberg bracket on sampled basis") {
    for (int w = 0; w <= 5; ++w)
        for (int id : basis_ids_of_weight(w)) {
            FockVec v = FockVec::unit(id);
            for (int m = -3; m <= 3; ++m)
                for (int n = -3; n <= 3; ++n) {
                    FockVec lhs =
                        apply_mode(m, apply_mode(n, v)) - apply_mode(n, apply_mode(m, v));
                    FockVec rhs;
                    if (m + n == 0) rhs = v.scaled(APoly(Rat(m)));
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("virasoro examples") {
    // L_a(0) is the weight grading
    CHECK(virasoro_mode(0, mono({1})) == mono({1}));
    CHECK(virasoro_mode(0, mono({3, 2})) == mono({3, 2}).scaled(APoly(Rat(5))));
    // L_a(-2)|0> = 1/2 a(-1)^2|0> + a a(-2)|0>
    FockVec omega = mono({1, 1}).scaled(APoly(Rat(1, 2)));
    omega.add_scaled(mono({2}), APoly::var(1));
    CHECK(virasoro_mode(-2, FockVec::vacuum()) == omega);
    // L(-1) a(-1)^i |0> = i a(-2) a(-1)^{i-1} |0>
    CHECK(virasoro_mode(-1, mono({1, 1, 1})) == mono({2, 1, 1}).scaled(APoly(Rat(3))));
}

TEST_CASE("shift generator values and a-freeness") {
    CHECK(shift_generator(mono({1})) == mono({2}) + mono({1}));
    CHECK(shift_generator(FockVec::vacuum()).is_zero());
    CHECK(shift_generator(mono({3})) == (mono({4}) + mono({3})).scaled(APoly(Rat(3))));
    for (int w = 0; w <= 6; ++w)
        for (int id : basis_ids_of_weight(w)) {
            FockVec s = shift_generator(FockVec::unit(id));
            for (auto& [mid, c] : s.terms()) CHECK(c.degree() == 0);
        }
}

TEST_CASE("grading of apply_mode") {
    auto& T = MonoTable::instance();
    for (int w = 0; w <= 5; ++w)
        for (int id : basis_ids_of_weight(w))
            for (int m = -4; m <= 4; ++m) {
                FockVec r = apply_mode(m, FockVec::unit(id));
                if (r.is_zero()) continue;
                int got;
                CHECK(r.homogeneous(&got));
                CHECK(got == w - m);
                (void)T;
            }
}

TEST_CASE("element grammar round trip") {
    const char* samples[] = {
        "a(-1)^2 a(-4)|0>",
        "3/2 a(-2)|0> - a(-1)|0>",
        "a a(-2)|0>",
        "|0>",
        "0",
        "2a^2 a(-3)|0> + 5 a(-1)|0> - 1/3 a(-5) a(-4)^2|0>",
    };
    for (auto* s : samples) {
        FockVec v = parse_element(s);
        CHECK(parse_element(print_element(v)) == v);
    }
    CHECK(parse_element("a(-1)^2 a(-4) |0>") == mono({4, 1, 1}));
    CHECK(parse_element("a a(-2)|0>") == mono({2}).scaled(APoly::var(1)));
    CHECK(print_element(FockVec()) == "0");
    CHECK(print_element(FockVec::vacuum()) == "|0>");
    CHECK_THROWS(parse_element("a(1)|0>"));
    CHECK_THROWS(parse_element("a(-1)"));
}

TEST_CASE("module grammar round trip") {
    ModVec w = parse_module_element("λ a(-1)|λ> + 2 |λ>");
    CHECK(parse_module_element(print_module_element(w)) == w);
    ModVec z = apply_mode(0, parse_module_element("a(-1)|λ>"));
    CHECK(print_module_element(z) == "λ a(-1)|λ>");
}
