#include "doctest.h"

#include "cpell/pell.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace cpell;

namespace {
const EisensteinInt kL3 = lambda() * lambda() * lambda();
}

TEST_CASE("below the smallest support radius the list is empty") {
    CHECK(find_solutions(2, 0.1).empty());
}

TEST_CASE("the nu = 1 solution for d = 2") {
    // nu = 1: 1 + 2 = 3 and indeed 3 * 1^3 - 2 * 1 * 1^3 = 1
    auto sols = find_solutions(2, 1.01);
    bool found = false;
    for (const auto& w : sols) {
        if (w.nu.numerator() == kL3) {
            found = true;
            CHECK(w.m == KRational(EisensteinInt(1, 0)));
            CHECK(w.x == KRational(EisensteinInt(1, 0)));
            CHECK(w.n == KRational(EisensteinInt(3, 0)));
            CHECK(w.y == KRational(EisensteinInt(1, 0)));
            // the successor decomposes through the lambda^2 pattern, so the
            // witness is not flagged integral
            CHECK_FALSE(w.pure_integral);
        }
    }
    CHECK(found);
}

TEST_CASE("every emitted witness satisfies the exact equation") {
    for (int d : {2, 3, 5}) {
        auto sols = find_solutions(d, 15.0);
        CHECK(!sols.empty());
        for (const auto& w : sols) {
            KRational lhs = w.n * w.y * w.y * w.y -
                            KRational(EisensteinInt(d, 0)) * w.m * w.x * w.x * w.x;
            CHECK(lhs == KRational(EisensteinInt(1, 0)));
            CHECK(w.m * w.x * w.x * w.x == w.nu.to_krational());
            // m is squarefree up to a possible lambda^2 carried by the
            // 3n-4 exponent pattern
            auto [e, rest] = lambda_valuation(w.m.num());
            CHECK((e == 0 || e == 2));
            CHECK(is_squarefree(rest));
            if (w.pure_integral) {
                CHECK(norm(w.x.den()) == 1);
                CHECK(norm(w.y.den()) == 1);
            }
        }
    }
}

TEST_CASE("witness set equals an independent support scan") {
    int d = 2;
    double R = 15.0;
    auto sols = find_solutions(d, R);
    std::size_t idx = 0;
    long long found = 0;
    for (const EisensteinInt& num : enumerate_disc(std::sqrt(27.0) * R)) {
        auto w1 = oracle::support_decompose(num);
        if (!w1) continue;
        EisensteinInt succ = kL3 + EisensteinInt(d, 0) * num;
        if (succ.is_zero()) continue;
        auto w2 = oracle::support_decompose(succ);
        if (!w2) continue;
        ++found;
        // matching entry must exist at the same position (same ordering)
        REQUIRE(idx < sols.size());
        CHECK(sols[idx].nu.numerator() == num);
        ++idx;
    }
    CHECK(found == static_cast<long long>(sols.size()));
}

TEST_CASE("two runs emit identical lists") {
    auto a = find_solutions(3, 10.0);
    auto b = find_solutions(3, 10.0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].nu.numerator() == b[i].nu.numerator());
        CHECK(a[i].m == b[i].m);
        CHECK(a[i].y == b[i].y);
    }
}

TEST_CASE("integral-pattern witnesses carry ring elements") {
    // scan a few d until a pure_integral witness appears; the flag must
    // coincide with both parts having the lambda-cube pattern and integral x, y
    for (int d : {2, 3, 5}) {
        for (const auto& w : find_solutions(d, 20.0)) {
            bool f4pair = w.dec_nu.form == TauForm::F4 && w.dec_succ.form == TauForm::F4;
            bool integral = norm(w.x.den()) == 1 && norm(w.y.den()) == 1;
            CHECK(w.pure_integral == (f4pair && integral));
        }
    }
}
