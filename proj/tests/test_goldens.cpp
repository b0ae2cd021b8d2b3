#include "doctest.h"

#include "nilorbit/verify.hpp"

using namespace nilorbit;

#ifndef NILORBIT_DATA_DIR
#define NILORBIT_DATA_DIR "data/golden"
#endif

namespace {

ChevalleyAlgebra make(const char* name) {
    return ChevalleyAlgebra::build(RootSystem::build(SimpleType::parse(name)));
}

const GenericityConfig kCfg{};

}  // namespace

TEST_CASE("golden tables load") {
    GoldenTables gold = GoldenTables::load(NILORBIT_DATA_DIR);
    CHECK(gold.table1.size() > 40);
    CHECK(gold.table2.size() == 13);
    CHECK(gold.e7.f_generators.size() == 7);
    CHECK(gold.e7.monomials.size() == 10);
    CHECK_THROWS_AS(GoldenTables::load("/nonexistent"), std::invalid_argument);
}

TEST_CASE("verify_table1 passes on representative types") {
    GoldenTables gold = GoldenTables::load(NILORBIT_DATA_DIR);
    for (const char* name : {"A3", "B2", "B3", "C3", "D3", "D4", "D5", "F4", "E6"}) {
        ChevalleyAlgebra alg = make(name);
        VerifyResult res = verify_table1(alg, gold, kCfg);
        INFO(name, "\n", res.render());
        CHECK(res.passed());
        CHECK(!res.lines.empty());
    }
}

TEST_CASE("verify_table1 detects a corrupted golden row") {
    GoldenTables gold = GoldenTables::load(NILORBIT_DATA_DIR);
    for (auto& row : gold.table1)
        if (row.type == "C3") row.lambdas[0][1] = 7;  // corrupt
    ChevalleyAlgebra alg = make("C3");
    CHECK_FALSE(verify_table1(alg, gold, kCfg).passed());
}

TEST_CASE("verify_table2 passes on B3/D4/G2/F4") {
    GoldenTables gold = GoldenTables::load(NILORBIT_DATA_DIR);
    for (const char* name : {"B3", "D4", "G2", "F4"}) {
        ChevalleyAlgebra alg = make(name);
        VerifyResult res = verify_table2(alg, gold, kCfg);
        INFO(name, "\n", res.render());
        CHECK(res.passed());
        CHECK(!res.lines.empty());
    }
}

TEST_CASE("verify_theorems passes on C3") {
    ChevalleyAlgebra alg = make("C3");
    VerifyResult res = verify_theorems(alg, kCfg);
    INFO(res.render());
    CHECK(res.passed());
}

TEST_CASE("verify_special passes on D4") {
    ChevalleyAlgebra alg = make("D4");
    VerifyResult res = verify_special(alg, kCfg, 40, 8);
    INFO(res.render());
    CHECK(res.passed());
}
