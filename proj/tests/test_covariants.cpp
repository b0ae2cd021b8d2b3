#include "doctest.h"

#include "nilorbit/covariants.hpp"

#include <set>

using namespace nilorbit;

namespace {

ChevalleyAlgebra make(const char* name) {
    return ChevalleyAlgebra::build(RootSystem::build(SimpleType::parse(name)));
}

const GenericityConfig kCfg{};

OrbitRecord record_from_paper_labels(const ChevalleyAlgebra& alg,
                                     const std::vector<int>& paper_labels) {
    WeightedDiagram d(alg.roots().labels_paper_to_internal(paper_labels));
    REQUIRE(is_characteristic(alg, d, kCfg));
    GradedDecomposition gd = grade(alg, d);
    OrbitRecord rec{std::move(d), std::nullopt, 0, 0, std::nullopt, std::nullopt, std::nullopt};
    rec.dim_orbit = alg.dim() - gd.dim_piece(0) - gd.dim_piece(1);
    rec.height = gd.height();
    return rec;
}

OrbitRecord record_from_partition(const ChevalleyAlgebra& alg, const std::vector<int>& part,
                                  bool second_variant = false) {
    auto variants = classical_diagram_variants(alg, part, kCfg);
    WeightedDiagram d = variants[second_variant ? 1 : 0];
    GradedDecomposition gd = grade(alg, d);
    OrbitRecord rec{std::move(d), part, 0, 0, std::nullopt, std::nullopt, std::nullopt};
    rec.dim_orbit = alg.dim() - gd.dim_piece(0) - gd.dim_piece(1);
    rec.height = gd.height();
    return rec;
}

std::map<int, long long> w(std::initializer_list<std::pair<int, long long>> init) {
    return std::map<int, long long>(init.begin(), init.end());
}

}  // namespace

TEST_CASE("ucs for sp_6 orbit (2,2,1,1): gamma_i = 2 eps_i") {
    ChevalleyAlgebra alg = make("C3");
    Table1Row row = table1_report(alg, record_from_partition(alg, {2, 2, 1, 1}));
    CHECK(row.ucs_eps ==
          std::vector<std::vector<long long>>{{2, 0, 0}, {0, 2, 0}});
    CHECK(row.lambdas == std::vector<std::map<int, long long>>{w({{1, 2}}), w({{2, 2}})});
    CHECK(row.degrees == std::vector<int>{1, 2});
}

TEST_CASE("ucs for sl_4 orbit (2,2): gamma_i = eps_i - eps_{n-i+1}") {
    ChevalleyAlgebra alg = make("A3");
    Table1Row row = table1_report(alg, record_from_partition(alg, {2, 2}));
    CHECK(row.ucs_eps ==
          std::vector<std::vector<long long>>{{1, 0, 0, -1}, {0, 1, -1, 0}});
    CHECK(row.lambdas == std::vector<std::map<int, long long>>{w({{1, 1}, {3, 1}}), w({{2, 2}})});
}

TEST_CASE("F4 row: gamma_1 = (2,4,3,2), gamma_2 = (2,2,1,0) in paper coefficients") {
    ChevalleyAlgebra alg = make("F4");
    Table1Row row = table1_report(alg, record_from_paper_labels(alg, {1, 0, 0, 0}));
    CHECK(row.ucs_paper_coeffs ==
          std::vector<std::vector<int>>{{2, 4, 3, 2}, {2, 2, 1, 0}});
    CHECK(row.lambdas == std::vector<std::map<int, long long>>{w({{4, 1}}), w({{1, 2}})});
}

TEST_CASE("E6 height-2 orbit: lambda_1 = w6, lambda_2 = w1 + w5") {
    ChevalleyAlgebra alg = make("E6");
    Table1Row row = table1_report(alg, record_from_paper_labels(alg, {1, 0, 0, 0, 1, 0}));
    CHECK(row.ucs_paper_coeffs ==
          std::vector<std::vector<int>>{{1, 2, 3, 2, 1, 2}, {1, 1, 1, 1, 1, 0}});
    CHECK(row.lambdas ==
          std::vector<std::map<int, long long>>{w({{6, 1}}), w({{1, 1}, {5, 1}})});
}

TEST_CASE("E7 rows") {
    ChevalleyAlgebra alg = make("E7");
    Table1Row r1 = table1_report(alg, record_from_paper_labels(alg, {0, 1, 0, 0, 0, 0, 0}));
    CHECK(r1.lambdas == std::vector<std::map<int, long long>>{w({{6, 1}}), w({{2, 1}})});
    CHECK(r1.ucs_paper_coeffs ==
          std::vector<std::vector<int>>{{1, 2, 3, 4, 3, 2, 2}, {1, 2, 2, 2, 1, 0, 1}});

    Table1Row r2 = table1_report(alg, record_from_paper_labels(alg, {2, 0, 0, 0, 0, 0, 0}));
    CHECK(r2.lambdas ==
          std::vector<std::map<int, long long>>{w({{6, 1}}), w({{2, 1}}), w({{1, 2}})});
    CHECK(r2.ucs_paper_coeffs.back() == std::vector<int>{1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("E8 row: the model-orbit string data") {
    ChevalleyAlgebra alg = make("E8");
    Table1Row row = table1_report(alg, record_from_paper_labels(alg, {0, 0, 0, 0, 0, 0, 1, 0}));
    CHECK(row.ucs_paper_coeffs ==
          std::vector<std::vector<int>>{{2, 3, 4, 5, 6, 4, 2, 3}, {0, 1, 2, 3, 4, 3, 2, 2}});
    CHECK(row.lambdas == std::vector<std::map<int, long long>>{w({{1, 1}}), w({{7, 1}})});
}

TEST_CASE("minimal orbit gives the single generator theta") {
    ChevalleyAlgebra alg = make("G2");
    std::vector<int> labels(alg.rank(), 0);
    labels[alg.roots().beta_root()] = 1;
    WeightedDiagram d(labels);
    REQUIRE(is_characteristic(alg, d, kCfg));
    GradedDecomposition gd = grade(alg, d);
    OrbitRecord rec{std::move(d), std::nullopt, 0, 2, std::nullopt, std::nullopt, std::nullopt};
    rec.dim_orbit = alg.dim() - gd.dim_piece(0) - gd.dim_piece(1);
    Table1Row row = table1_report(alg, rec);
    REQUIRE(row.lambdas.size() == 1);
    CHECK(row.degrees == std::vector<int>{1});
    // lambda_1 = theta in fundamental coordinates
    QVec fc = alg.roots().to_fundamental_coords(alg.roots().root(alg.roots().theta()).coords);
    for (int i = 0; i < alg.rank(); ++i) {
        long long expect = numerator(fc[i]).convert_to<long long>();
        auto it = row.lambdas[0].find(i + 1);  // G2: paper numbering = internal
        CHECK((it == row.lambdas[0].end() ? 0 : it->second) == expect);
    }
}

TEST_CASE("so_n rows") {
    // (3,1^4) in so7: lambda_1 = w2, lambda_2 = 2 w1
    {
        ChevalleyAlgebra alg = make("B3");
        Table1Row row = table1_report(alg, record_from_partition(alg, {3, 1, 1, 1, 1}));
        CHECK(row.lambdas ==
              std::vector<std::map<int, long long>>{w({{2, 1}}), w({{1, 2}})});
        CHECK(row.ucs_eps ==
              std::vector<std::vector<long long>>{{1, 1, 0}, {1, -1, 0}});
    }
    // (2,2,1,1) in so6 = D3, l = 2: lambda_1 = w2 + w3 (the two half-spins)
    {
        ChevalleyAlgebra alg = make("D3");
        Table1Row row = table1_report(alg, record_from_partition(alg, {2, 2, 1, 1}));
        REQUIRE(row.lambdas.size() == 1);
        CHECK(row.lambdas[0] == w({{2, 1}, {3, 1}}));
    }
    // (2,2,2,2,1,1) in so10 = D5, r = 2, l = 2: lambda_2 = w4 + w5
    {
        ChevalleyAlgebra alg = make("D5");
        Table1Row row = table1_report(alg, record_from_partition(alg, {2, 2, 2, 2, 1, 1}));
        REQUIRE(row.lambdas.size() == 2);
        CHECK(row.lambdas[0] == w({{2, 1}}));
        CHECK(row.lambdas[1] == w({{4, 1}, {5, 1}}));
    }
    // very even (2,2,2,2) in so8: the two variants end in 2w4 and 2w3
    {
        ChevalleyAlgebra alg = make("D4");
        Table1Row a = table1_report(alg, record_from_partition(alg, {2, 2, 2, 2}, false));
        Table1Row b = table1_report(alg, record_from_partition(alg, {2, 2, 2, 2}, true));
        std::set<std::map<int, long long>> finals{a.lambdas.back(), b.lambdas.back()};
        CHECK(finals == std::set<std::map<int, long long>>{w({{4, 2}}), w({{3, 2}})});
        std::set<std::vector<long long>> gammas{a.ucs_eps.back(), b.ucs_eps.back()};
        CHECK(gammas ==
              std::set<std::vector<long long>>{{0, 0, 1, 1}, {0, 0, 1, -1}});
    }
}

TEST_CASE("disjoint support holds for every height-2 orbit of small types") {
    for (const char* name : {"A3", "A4", "A5", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4"}) {
        ChevalleyAlgebra alg = make(name);
        for (const auto& rec : enumerate_orbits(alg, kCfg)) {
            if (rec.height != 2) continue;
            GradedDecomposition gd = grade(alg, rec.diagram);
            std::vector<int> delta2 = gd.piece(2);
            CanonicalString ucs = upper_canonical_string(alg.roots(), delta2);
            GammaMonoid gm = gamma_monoid(alg.roots(), ucs);
            REQUIRE(check_disjoint_support(gm));
            REQUIRE(check_saturation_window(alg.roots(), gm, 3));

            // even orbits: u.c.s. and l.c.s. coincide as sets
            if (gd.dim_piece(1) == 0) {
                CanonicalString lcs = lower_canonical_string(alg.roots(), delta2);
                std::set<int> u(ucs.gammas.begin(), ucs.gammas.end());
                std::set<int> l(lcs.gammas.begin(), lcs.gammas.end());
                REQUIRE(u == l);
            }
        }
    }
}

TEST_CASE("overlapping supports detected (negative control)") {
    GammaMonoid gm;
    gm.generators.push_back({{1, 0, 0}, 1});
    gm.generators.push_back({{1, 1, 0}, 2});
    CHECK_FALSE(check_disjoint_support(gm));
}

TEST_CASE("ucs rejects inputs without theta") {
    RootSystem rs = RootSystem::build(SimpleType::parse("A2"));
    CHECK_THROWS_AS(upper_canonical_string(rs, {0}), std::domain_error);
}

TEST_CASE("table1_report rejects non-height-2 orbits") {
    ChevalleyAlgebra alg = make("B3");
    OrbitRecord rec = record_from_partition(alg, {3, 2, 2});
    REQUIRE(rec.height == 3);
    CHECK_THROWS_AS(table1_report(alg, rec), std::domain_error);
}
