#include "doctest.h"

#include "nilorbit/analysis.hpp"

using namespace nilorbit;

namespace {

ChevalleyAlgebra make(const char* name) {
    return ChevalleyAlgebra::build(RootSystem::build(SimpleType::parse(name)));
}

const GenericityConfig kCfg{};

const OrbitRecord* find_by_partition(const std::vector<OrbitRecord>& recs,
                                     const std::vector<int>& part) {
    for (const auto& r : recs)
        if (r.partition && *r.partition == part) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("centralizer basics") {
    ChevalleyAlgebra alg = make("A2");
    FpCtx F(kCfg.prime);

    // x = 0 -> whole algebra
    CHECK(centralizer_basis(alg, F, FpVec(alg.dim(), 0)).size() ==
          static_cast<std::size_t>(alg.dim()));
    CHECK(orbit_dim_fp(alg, F, FpVec(alg.dim(), 0)) == 0);

    // minimal orbit of A2 has dimension 4
    FpVec x(alg.dim(), 0);
    x[alg.root_vector(alg.roots().theta())] = 1;
    CHECK(orbit_dim_fp(alg, F, x) == 4);

    // generic e of a certified diagram: dim z = dim g<0> + dim g<1>
    for (const auto& rec : enumerate_orbits(alg, kCfg)) {
        GradedDecomposition gd = grade(alg, rec.diagram);
        FpVec e = reduce_mod_p(F, rec.triple->e);
        CHECK(static_cast<int>(centralizer_basis(alg, F, e).size()) ==
              gd.dim_piece(0) + gd.dim_piece(1));
    }
}

TEST_CASE("sl2 centralizer of e_theta in A1") {
    ChevalleyAlgebra alg = make("A1");
    FpCtx F(kCfg.prime);
    FpVec x(alg.dim(), 0);
    x[alg.root_vector(alg.roots().theta())] = 1;
    auto z = centralizer_basis(alg, F, x);
    REQUIRE(z.size() == 1);
    CHECK(z[0][alg.root_vector(alg.roots().theta())] != 0);
}

TEST_CASE("sphericity equals height in {2,3} across small types") {
    for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
        ChevalleyAlgebra alg = make(name);
        for (const auto& rec : enumerate_orbits(alg, kCfg)) {
            bool sph = is_spherical(alg, rec, kCfg);
            bool expect = rec.height == 2 || rec.height == 3;
            REQUIRE(sph == expect);
        }
    }
}

TEST_CASE("regular orbit of A2 is not spherical") {
    ChevalleyAlgebra alg = make("A2");
    auto recs = enumerate_orbits(alg, kCfg);
    const OrbitRecord* reg = find_by_partition(recs, {3});
    REQUIRE(reg != nullptr);
    CHECK(reg->height == 4);
    CHECK(reg->dim_orbit == 6);
    CHECK_FALSE(is_spherical(alg, *reg, kCfg));
}

TEST_CASE("index of centralizer") {
    // regular orbit: z abelian of dim = rank, so index = rank
    for (const char* name : {"A2", "B2", "G2"}) {
        ChevalleyAlgebra alg = make(name);
        auto recs = enumerate_orbits(alg, kCfg);
        const OrbitRecord& reg = recs.back();  // largest dimension = regular
        CHECK(reg.dim_orbit == alg.dim() - alg.rank());
        CHECK(index_of_centralizer(alg, reg, kCfg) == alg.rank());
    }

    // so8 (3,2,2,1): index = rk so8 = 4
    ChevalleyAlgebra d4 = make("D4");
    auto recs = enumerate_orbits(d4, kCfg);
    const OrbitRecord* o = find_by_partition(recs, {3, 2, 2, 1});
    REQUIRE(o != nullptr);
    CHECK(index_of_centralizer(d4, *o, kCfg) == 4);

    // every height <= 3 orbit of these types has index = rank
    for (const char* name : {"A3", "B3", "C3"}) {
        ChevalleyAlgebra alg = make(name);
        for (const auto& rec : enumerate_orbits(alg, kCfg))
            if (rec.height <= 3) REQUIRE(index_of_centralizer(alg, rec, kCfg) == alg.rank());
    }
}

TEST_CASE("stab structure report") {
    for (const char* name : {"A3", "B3", "G2"}) {
        ChevalleyAlgebra alg = make(name);
        for (const auto& rec : enumerate_orbits(alg, kCfg)) {
            StabReport rep = check_stab(alg, rec, kCfg);
            REQUIRE(rep.passed());
        }
    }
}

TEST_CASE("centralizer data identities") {
    ChevalleyAlgebra alg = make("B3");
    for (const auto& rec : enumerate_orbits(alg, kCfg)) {
        GradedDecomposition gd = grade(alg, rec.diagram);
        CentralizerData cd = centralizer_data(alg, rec, kCfg);
        CHECK(cd.z_dim == gd.dim_piece(0) + gd.dim_piece(1));
        for (const auto& [deg, d] : cd.z_graded_dims) {
            CHECK(deg >= 0);
            CHECK(d == gd.dim_piece(deg) - gd.dim_piece(deg + 2));
        }
        CHECK(cd.k_dim == gd.dim_piece(0) - gd.dim_piece(2));
    }
}

TEST_CASE("odd top checks") {
    // so7 (3,2,2): dim g<3> = 2, K open orbit, two-orbit, sp summand
    ChevalleyAlgebra b3 = make("B3");
    auto recs = enumerate_orbits(b3, kCfg);
    const OrbitRecord* o = find_by_partition(recs, {3, 2, 2});
    REQUIRE(o != nullptr);
    OddTopReport rep = check_odd_top(b3, *o, kCfg);
    CHECK(rep.top == 3);
    CHECK(rep.dim_top == 2);
    CHECK(rep.k_open_orbit);
    CHECK(rep.two_orbit);
    CHECK(rep.sp_summand);
    CHECK(rep.killing_pairing_nondegenerate);
    CHECK(rep.passed());

    // height-2 orbit rejected
    const OrbitRecord* minimal = find_by_partition(recs, {2, 2, 1, 1, 1});
    REQUIRE(minimal != nullptr);
    CHECK_THROWS_AS(check_odd_top(b3, *minimal, kCfg), std::domain_error);

    // every odd-height orbit of these types passes
    for (const char* name : {"B3", "D4", "G2"}) {
        ChevalleyAlgebra alg = make(name);
        for (const auto& rec : enumerate_orbits(alg, kCfg)) {
            if (rec.height % 2 == 0) continue;
            OddTopReport r = check_odd_top(alg, rec, kCfg);
            REQUIRE(r.k_open_orbit);
            REQUIRE(r.two_orbit);
            REQUIRE(r.killing_pairing_nondegenerate);
            if (rec.height == 3) REQUIRE(r.sp_summand);
            REQUIRE(r.dim_top % 2 == 0);
        }
    }
}
