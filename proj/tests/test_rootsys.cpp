#include "doctest.h"

#include "nilorbit/rootsys.hpp"

#include <algorithm>
#include <set>

using namespace nilorbit;

namespace {

// Independent oracle: literal epsilon-pattern enumeration for the classical
// families, used to validate the closure-generated systems.
std::set<QVec> classical_roots_oracle(const SimpleType& t) {
    std::set<QVec> out;
    int n = t.rank;
    auto vec = [&](int dim) { return QVec(dim, Rat(0)); };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    if (i == j) continue;
                    QVec v = vec(n + 1);
                    v[i] = 1;
                    v[j] = -1;
                    out.insert(v);
                }
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            QVec v = vec(n);
                            v[i] = si;
                            v[j] = sj;
                            out.insert(v);
                        }
            if (t.family == Family::B)
                for (int i = 0; i < n; ++i)
                    for (int s : {1, -1}) {
                        QVec v = vec(n);
                        v[i] = s;
                        out.insert(v);
                    }
            if (t.family == Family::C)
                for (int i = 0; i < n; ++i)
                    for (int s : {2, -2}) {
                        QVec v = vec(n);
                        v[i] = s;
                        out.insert(v);
                    }
            break;
        default:
            break;
    }
    return out;
}

std::set<Rat> length_set(const RootSystem& rs) {
    std::set<Rat> s;
    for (int i = 0; i < rs.num_roots(); ++i) s.insert(rs.norm2(i));
    return s;
}

}  // namespace

TEST_CASE("closure generation matches literal classical root sets") {
    for (const char* name : {"A3", "A5", "B2", "B4", "C3", "C5", "D4", "D5"}) {
        SimpleType t = SimpleType::parse(name);
        RootSystem rs = RootSystem::build(t);
        std::set<QVec> oracle = classical_roots_oracle(t);
        std::set<QVec> got;
        for (int i = 0; i < rs.num_roots(); ++i) got.insert(rs.root(i).coords);
        CHECK(got == oracle);
    }
}

TEST_CASE("root counts and lengths") {
    CHECK(RootSystem::build(SimpleType::parse("A2")).num_roots() == 6);
    CHECK(length_set(RootSystem::build(SimpleType::parse("A2"))).size() == 1);

    RootSystem g2 = RootSystem::build(SimpleType::parse("G2"));
    CHECK(g2.num_roots() == 12);
    int n_long = 0;
    for (int i = 0; i < g2.num_roots(); ++i)
        if (g2.is_long(i)) ++n_long;
    CHECK(n_long == 6);
    CHECK(length_set(g2) == std::set<Rat>{Rat(2), Rat(6)});

    CHECK(RootSystem::build(SimpleType::parse("F4")).num_roots() == 48);
    CHECK(RootSystem::build(SimpleType::parse("E6")).num_roots() == 72);
    CHECK(RootSystem::build(SimpleType::parse("E7")).num_roots() == 126);

    RootSystem e8 = RootSystem::build(SimpleType::parse("E8"));
    CHECK(e8.num_roots() == 240);
    // theta = (2,3,4,6,5,4,3,2) on the internal simples, (2,3,4,5,6,4,2;3)
    // in the reference tables' numbering
    CHECK(e8.root(e8.theta()).simple_coords == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(e8.labels_internal_to_paper(e8.root(e8.theta()).simple_coords) ==
          std::vector<int>{2, 3, 4, 5, 6, 4, 2, 3});
}

TEST_CASE("illegal types rejected") {
    CHECK_THROWS_AS(SimpleType::parse("Z9"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType::parse("F3"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType::parse("D2"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType::parse("G5"), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType::parse("A0"), std::invalid_argument);
}

TEST_CASE("theta fundamental or not") {
    for (const char* name : {"A1", "A2", "A5", "C2", "C3", "C5"})
        CHECK_FALSE(RootSystem::build(SimpleType::parse(name)).is_theta_fundamental());
    for (const char* name : {"B3", "B4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"})
        CHECK(RootSystem::build(SimpleType::parse(name)).is_theta_fundamental());

    // theta = 2 w_1 for sp_2n
    RootSystem c3 = RootSystem::build(SimpleType::parse("C3"));
    QVec fc = c3.to_fundamental_coords(c3.root(c3.theta()).coords);
    CHECK(fc == QVec{Rat(2), Rat(0), Rat(0)});

    // theta = w_1 + w_{n-1} for sl_n
    RootSystem a3 = RootSystem::build(SimpleType::parse("A3"));
    QVec fa = a3.to_fundamental_coords(a3.root(a3.theta()).coords);
    CHECK(fa == QVec{Rat(1), Rat(0), Rat(1)});

    QVec zero(a3.root(0).coords.size(), Rat(0));
    CHECK(a3.to_fundamental_coords(zero) == QVec{Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("beta root") {
    RootSystem d4 = RootSystem::build(SimpleType::parse("D4"));
    int beta = d4.beta_root();
    CHECK(beta == 1);  // the central node
    int deg = 0;
    for (int j = 0; j < 4; ++j)
        if (j != beta && d4.cartan_matrix()[beta][j] != 0) ++deg;
    CHECK(deg == 3);

    RootSystem g2 = RootSystem::build(SimpleType::parse("G2"));
    int bg = g2.beta_root();
    CHECK(g2.is_long(g2.simple_root(bg)));

    RootSystem e8 = RootSystem::build(SimpleType::parse("E8"));
    CHECK(e8.beta_root() == 7);

    CHECK_THROWS_AS(RootSystem::build(SimpleType::parse("A3")).beta_root(), std::domain_error);
}

TEST_CASE("simple reflection closure and support connectivity") {
    for (const char* name : {"A4", "B3", "C4", "D4", "F4", "G2", "E6"}) {
        RootSystem rs = RootSystem::build(SimpleType::parse(name));
        int n = rs.rank();
        for (int g = 0; g < rs.num_roots(); ++g) {
            for (int i = 0; i < n; ++i) {
                Rat m = rs.pairing(rs.root(g).coords, rs.simple_root(i));
                REQUIRE(denominator(m) == 1);
                int mi = static_cast<int>(numerator(m).convert_to<long long>());
                std::vector<int> c = rs.root(g).simple_coords;
                c[i] -= mi;
                bool zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
                REQUIRE((zero || rs.find_root(c) >= 0));
            }
        }
        // support of a positive root is connected on the Dynkin diagram
        for (int g = 0; g < rs.num_positive(); ++g) {
            const auto& c = rs.root(g).simple_coords;
            std::vector<int> support;
            for (int i = 0; i < n; ++i)
                if (c[i] != 0) support.push_back(i);
            std::vector<bool> seen(support.size(), false);
            std::vector<int> stack{0};
            seen[0] = true;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (std::size_t v = 0; v < support.size(); ++v) {
                    if (seen[v]) continue;
                    if (rs.cartan_matrix()[support[u]][support[v]] != 0) {
                        seen[v] = true;
                        stack.push_back(static_cast<int>(v));
                    }
                }
            }
            REQUIRE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
        }
    }
}

TEST_CASE("pairing identities for fundamental theta") {
    for (const char* name : {"B3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
        RootSystem rs = RootSystem::build(SimpleType::parse(name));
        int beta = rs.beta_root();
        int bidx = rs.simple_root(beta);
        CHECK(rs.pairing(rs.root(rs.theta()).coords, bidx) == 1);
        CHECK(rs.pairing(rs.root(bidx).coords, rs.theta()) == 1);
    }
}

TEST_CASE("paper numbering round trip") {
    for (const char* name : {"A4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
        RootSystem rs = RootSystem::build(SimpleType::parse(name));
        std::vector<int> labels(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) labels[i] = i % 3;
        CHECK(rs.labels_paper_to_internal(rs.labels_internal_to_paper(labels)) == labels);
    }
    // F4 reference numbering reverses Bourbaki
    RootSystem f4 = RootSystem::build(SimpleType::parse("F4"));
    CHECK(f4.labels_internal_to_paper({1, 2, 0, 0}) == std::vector<int>{0, 0, 2, 1});
}

TEST_CASE("root system json dump") {
    RootSystem a2 = RootSystem::build(SimpleType::parse("A2"));
    auto j = a2.to_json();
    CHECK(j["type"] == "A2");
    CHECK(j["num_roots"] == 6);
    CHECK(j["simple_roots"].size() == 2);
}
