#include "doctest.h"

#include "nilorbit/classify.hpp"

#include <set>

using namespace nilorbit;

namespace {

ChevalleyAlgebra make(const char* name) {
    return ChevalleyAlgebra::build(RootSystem::build(SimpleType::parse(name)));
}

const GenericityConfig kCfg{};

// oracle: number of partitions of n
int partition_count(int n) {
    std::vector<int> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int v = part; v <= n; ++v) p[v] += p[v - part];
    return p[n];
}

}  // namespace

TEST_CASE("sl4 orbit (2,2): brute force over all 27 labelings") {
    ChevalleyAlgebra alg = make("A3");
    // certify every labeling; the one of dimension 8 with no odd piece is (0,2,0)
    std::vector<std::vector<int>> matches;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                WeightedDiagram d({a, b, c});
                if (!is_characteristic(alg, d, kCfg)) continue;
                GradedDecomposition gd = grade(alg, d);
                int dim_orbit = alg.dim() - gd.dim_piece(0) - gd.dim_piece(1);
                if (dim_orbit == 8 && gd.dim_piece(1) == 0) matches.push_back(d.labels);
            }
    REQUIRE(matches == std::vector<std::vector<int>>{{0, 2, 0}});
    CHECK(classical_diagram(alg, {2, 2}, kCfg).labels == std::vector<int>{0, 2, 0});
}

TEST_CASE("partition recipe examples") {
    // sl_n (2^r, 1^{n-2r}) has height 2
    {
        ChevalleyAlgebra alg = make("A5");
        for (auto part : {std::vector<int>{2, 1, 1, 1, 1}, std::vector<int>{2, 2, 1, 1},
                          std::vector<int>{2, 2, 2}}) {
            WeightedDiagram d = classical_diagram(alg, part, kCfg);
            CHECK(grade(alg, d).height() == 2);
        }
    }
    // so7 (3,2,2) has height 3
    {
        ChevalleyAlgebra alg = make("B3");
        WeightedDiagram d = classical_diagram(alg, {3, 2, 2}, kCfg);
        CHECK(d.labels == std::vector<int>{1, 0, 1});
        CHECK(grade(alg, d).height() == 3);
    }
    // so8 (3,2,2,1) has height 3 and the D4 special diagram
    {
        ChevalleyAlgebra alg = make("D4");
        WeightedDiagram d = classical_diagram(alg, {3, 2, 2, 1}, kCfg);
        CHECK(d.labels == std::vector<int>{1, 0, 1, 1});
        CHECK(grade(alg, d).height() == 3);
    }

    ChevalleyAlgebra c2 = make("C2");
    CHECK_THROWS_AS(classical_diagram(c2, {3, 1}, kCfg), std::invalid_argument);
    CHECK_THROWS_AS(classical_diagram(c2, {1, 1, 1, 1}, kCfg), std::domain_error);
}

TEST_CASE("A2 has orbits exactly at (1,1) and (2,2)") {
    ChevalleyAlgebra alg = make("A2");
    WeightedDiagram bad({1, 0});
    CHECK_FALSE(is_characteristic(alg, bad, kCfg));
    CHECK_FALSE(bad.certified);

    std::set<std::vector<int>> certified;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            if (a == 0 && b == 0) continue;
            WeightedDiagram d({a, b});
            if (is_characteristic(alg, d, kCfg)) certified.insert(d.labels);
        }
    CHECK(certified == std::set<std::vector<int>>{{1, 1}, {2, 2}});
}

TEST_CASE("enumerate_orbits counts match the partition oracle") {
    for (const char* name : {"A2", "A3", "A4"}) {
        ChevalleyAlgebra alg = make(name);
        auto recs = enumerate_orbits(alg, kCfg);
        CHECK(static_cast<int>(recs.size()) == partition_count(alg.rank() + 1) - 1);
        for (const auto& r : recs) REQUIRE(r.partition.has_value());
    }
}

TEST_CASE("classical enumeration equals the partition-recipe image") {
    for (const char* name : {"B2", "B3", "C3", "D4"}) {
        ChevalleyAlgebra alg = make(name);
        std::set<std::vector<int>> enumerated;
        for (const auto& r : enumerate_orbits(alg, kCfg)) enumerated.insert(r.diagram.labels);
        std::set<std::vector<int>> recipe;
        for (const auto& p : admissible_partitions(alg.roots().type()))
            for (const auto& d : classical_diagram_variants(alg, p, kCfg)) recipe.insert(d.labels);
        CHECK(enumerated == recipe);
    }
    // the very even D4 partition (2,2,2,2) yields two orbits
    ChevalleyAlgebra d4 = make("D4");
    CHECK(partition_very_even(d4.roots().type(), {2, 2, 2, 2}));
    auto variants = classical_diagram_variants(d4, {2, 2, 2, 2}, kCfg);
    REQUIRE(variants.size() == 2);
    CHECK(variants[0].labels != variants[1].labels);
}

TEST_CASE("exactly one minimal orbit per type") {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        ChevalleyAlgebra alg = make(name);
        int count = 0;
        for (const auto& r : enumerate_orbits(alg, kCfg)) {
            GradedDecomposition gd = grade(alg, r.diagram);
            if (r.height == 2 && gd.dim_piece(2) == 1) ++count;
        }
        CHECK(count == 1);
    }
}

TEST_CASE("enumeration is stable across primes and certification idempotent") {
    ChevalleyAlgebra alg = make("B3");
    GenericityConfig cfg1;
    GenericityConfig cfg2;
    cfg2.prime = 2147483647ull;
    cfg2.seed = 99;
    std::set<std::vector<int>> s1, s2;
    for (const auto& r : enumerate_orbits(alg, cfg1)) s1.insert(r.diagram.labels);
    for (const auto& r : enumerate_orbits(alg, cfg2)) s2.insert(r.diagram.labels);
    CHECK(s1 == s2);

    for (const auto& labels : s1) {
        WeightedDiagram d(labels);
        CHECK(is_characteristic(alg, d, cfg1));
        CHECK(is_characteristic(alg, d, cfg2));
        CHECK(d.certified);
    }
}

TEST_CASE("exact certificates attached and valid") {
    ChevalleyAlgebra alg = make("C3");
    for (const auto& rec : enumerate_orbits(alg, kCfg)) {
        REQUIRE(rec.triple.has_value());
        const ExactTriple& tr = *rec.triple;
        QVec he = alg.bracket_q(tr.h, tr.e);
        QVec ef = alg.bracket_q(tr.e, tr.f);
        for (int i = 0; i < alg.dim(); ++i) {
            REQUIRE(he[i] == 2 * tr.e[i]);
            REQUIRE(ef[i] == tr.h[i]);
        }
    }
}
