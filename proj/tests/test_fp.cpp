#include "doctest.h"

#include "nilorbit/fp.hpp"

#include <random>

using namespace nilorbit;

TEST_CASE("FpCtx basics") {
    FpCtx F(2147483629ull);
    CHECK(F.mul(F.inv(12345), 12345) == 1);
    CHECK(F.pow(3, F.p - 1) == 1);  // Fermat
    CHECK(F.from_int(-1) == F.p - 1);
    CHECK(F.from_rat(Rat(1, 2)) == F.inv(2));
    CHECK_THROWS_AS(FpCtx(2147483628ull), std::invalid_argument);
}

TEST_CASE("FpMat rank/kernel/solve") {
    FpCtx F(1000003ull);
    FpMat m(3, 4);
    // rows: (1 2 3 4), (2 4 6 8), (0 1 1 0) -> rank 2
    std::uint64_t rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
    CHECK(m.rank(F) == 2);

    auto ker = m.kernel(F);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) {
        auto mv = m.apply(F, v);
        for (auto x : mv) CHECK(x == 0);
    }

    FpVec b = m.apply(F, FpVec{1, 1, 1, 1});
    auto x = m.solve(F, b);
    REQUIRE(x.has_value());
    auto mx = m.apply(F, *x);
    CHECK(mx == b);

    // inconsistent system
    FpMat z(2, 1);
    z.at(0, 0) = 1;
    z.at(1, 0) = 1;
    CHECK_FALSE(z.solve(F, FpVec{1, 2}).has_value());
}

TEST_CASE("fp polynomial roots") {
    FpCtx F(2147483629ull);
    // (x - 3)(x - 71)(x - 9999)(x - 3) has roots {3, 71, 9999}
    // build coefficients of (x-3)^2 (x-71) (x-9999) — repeated roots fine
    auto mul1 = [&](FpVec poly, std::uint64_t r) {
        FpVec out(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            out[i + 1] = F.add(out[i + 1], poly[i]);
            out[i] = F.sub(out[i], F.mul(poly[i], r));
        }
        return out;
    };
    FpVec poly{1};
    poly = mul1(poly, 3);
    poly = mul1(poly, 3);
    poly = mul1(poly, 71);
    poly = mul1(poly, 9999);
    auto roots = fp_poly_roots(F, poly);
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<std::uint64_t>{3, 71, 9999});

    // irreducible quadratic over F_7: x^2 + 1 has no roots mod 7? 7 ≡ 3 mod 4 ✓
    FpCtx F7(7);
    CHECK(fp_poly_roots(F7, FpVec{1, 0, 1}).empty());
}

TEST_CASE("fp interpolation") {
    FpCtx F(1000003ull);
    // f(x) = 5 + 2x + 7x^3
    auto f = [&](std::uint64_t x) {
        return F.add(F.add(5, F.mul(2, x)), F.mul(7, F.mul(x, F.mul(x, x))));
    };
    FpVec xs{0, 1, 2, 3, 10}, ys;
    for (auto x : xs) ys.push_back(f(x));
    auto c = fp_interpolate(F, xs, ys);
    REQUIRE(c.size() == 5);
    CHECK(c[0] == 5);
    CHECK(c[1] == 2);
    CHECK(c[2] == 0);
    CHECK(c[3] == 7);
    CHECK(c[4] == 0);
}
