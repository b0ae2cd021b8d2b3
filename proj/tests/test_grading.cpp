#include "doctest.h"

#include "nilorbit/classify.hpp"

using namespace nilorbit;

namespace {

ChevalleyAlgebra make(const char* name) {
    return ChevalleyAlgebra::build(RootSystem::build(SimpleType::parse(name)));
}

WeightedDiagram minimal_diagram(const RootSystem& rs) {
    std::vector<int> labels(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i) {
        Rat v = rs.pairing(rs.root(rs.theta()).coords, rs.simple_root(i));
        labels[i] = static_cast<int>(numerator(v).convert_to<long long>());
    }
    return WeightedDiagram(labels);
}

}  // namespace

TEST_CASE("all-zero labels give a single piece of height 0") {
    ChevalleyAlgebra alg = make("B3");
    GradedDecomposition gd = grade(alg, WeightedDiagram(std::vector<int>(3, 0)));
    CHECK(gd.height() == 0);
    CHECK(gd.dim_piece(0) == alg.dim());
    CHECK(height_of(gd) == 0);
}

TEST_CASE("minimal orbit diagram grades into -2..2 with dim g<2> = 1") {
    for (const char* name : {"B3", "G2", "E6"}) {
        ChevalleyAlgebra alg = make(name);
        GradedDecomposition gd = grade(alg, minimal_diagram(alg.roots()));
        CHECK(gd.height() == 2);
        CHECK(gd.dim_piece(2) == 1);
        CHECK(gd.dim_piece(-2) == 1);
        // the single degree-2 element is e_theta
        CHECK(gd.piece(2) == std::vector<int>{alg.root_vector(alg.roots().theta())});
    }
}

TEST_CASE("G2 special diagram has height 3 and dim g<3> = 2") {
    ChevalleyAlgebra alg = make("G2");
    GradedDecomposition gd = grade(alg, WeightedDiagram({1, 0}));
    CHECK(gd.height() == 3);
    CHECK(gd.dim_piece(3) == 2);
    CHECK(gd.dims_string() == "dims[-3..3] = 2, 1, 2, 4, 2, 1, 2");
}

TEST_CASE("generic elements") {
    ChevalleyAlgebra alg = make("A2");
    GradedDecomposition zero = grade(alg, WeightedDiagram({0, 0}));
    CHECK_THROWS_AS(generic_element(alg, zero, 5, 2147483629ull, 1), std::domain_error);

    // scaling invariance on the 1-dimensional g<2> of the minimal diagram
    FpCtx F(2147483629ull);
    WeightedDiagram md({1, 1});
    GradedDecomposition gd = grade(alg, md);
    REQUIRE(gd.dim_piece(2) == 1);
    std::size_t r0 = 0;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        FpVec e = generic_element(alg, gd, 2, F.p, seed);
        std::size_t r = alg.ad_matrix_fp(F, e).rank(F);
        if (seed == 1)
            r0 = r;
        else
            CHECK(r == r0);
    }
}

TEST_CASE("two seeds give equal ad-ranks on certified diagrams") {
    ChevalleyAlgebra alg = make("B3");
    GenericityConfig cfg;
    FpCtx F(cfg.prime);
    for (auto& rec : enumerate_orbits(alg, cfg)) {
        GradedDecomposition gd = grade(alg, rec.diagram);
        FpVec e1 = generic_element(alg, gd, 2, cfg.prime, 101);
        FpVec e2 = generic_element(alg, gd, 2, cfg.prime, 202);
        CHECK(alg.ad_matrix_fp(F, e1).rank(F) == alg.ad_matrix_fp(F, e2).rank(F));
        // odd pieces have even dimension
        for (int i = 1; i <= gd.height(); i += 2) CHECK(gd.dim_piece(i) % 2 == 0);
    }
}

TEST_CASE("grading cartan element realizes the labels") {
    ChevalleyAlgebra alg = make("F4");
    WeightedDiagram d({0, 1, 0, 2});
    QVec h = grading_cartan_element(alg, d);
    std::vector<Rat> deg = alg.degrees_under(h);
    for (int i = 0; i < alg.rank(); ++i)
        CHECK(deg[alg.root_vector(alg.roots().simple_root(i))] == d.labels[i]);
}
