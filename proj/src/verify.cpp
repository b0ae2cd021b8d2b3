#include "nilorbit/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nilorbit {

namespace {

std::string weight_str(const std::map<int, long long>& w) {
    if (w.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : w) {
        if (!first) os << "+";
        if (c != 1) os << c << "*";
        os << "w" << idx;
        first = false;
    }
    return os.str();
}

std::string partition_str(const std::vector<int>& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

std::string labels_str(const std::vector<int>& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "-" : "") << p[i];
    return os.str();
}

std::string orbit_name(const GoldenTables::T1Row& row) {
    return row.partition ? partition_str(*row.partition) : labels_str(*row.diagram);
}

OrbitRecord record_for_diagram(const ChevalleyAlgebra& alg, WeightedDiagram d,
                               const GenericityConfig& cfg, bool need_triple) {
    require(is_characteristic(alg, d, cfg),
            "golden diagram failed certification for " + alg.roots().type().name());
    GradedDecomposition gd = grade(alg, d);
    OrbitRecord rec{std::move(d), std::nullopt, 0, 0, std::nullopt, std::nullopt, std::nullopt};
    rec.dim_orbit = alg.dim() - gd.dim_piece(0) - gd.dim_piece(1);
    rec.height = gd.height();
    if (need_triple) rec.triple = make_exact_triple(alg, rec.diagram, cfg);
    return rec;
}

// comparable payload of a computed table1 row
struct RowKey {
    std::vector<std::vector<long long>> ucs_eps;
    std::vector<std::vector<int>> ucs_coeffs;
    std::vector<std::map<int, long long>> lambdas;
    bool operator==(const RowKey& o) const {
        return ucs_eps == o.ucs_eps && ucs_coeffs == o.ucs_coeffs && lambdas == o.lambdas;
    }
    bool operator<(const RowKey& o) const {
        if (ucs_eps != o.ucs_eps) return ucs_eps < o.ucs_eps;
        if (ucs_coeffs != o.ucs_coeffs) return ucs_coeffs < o.ucs_coeffs;
        return lambdas < o.lambdas;
    }
};

RowKey key_of(const Table1Row& row) { return {row.ucs_eps, row.ucs_paper_coeffs, row.lambdas}; }

RowKey key_of(const GoldenTables::T1Row& row) { return {row.ucs_eps, row.ucs_coeffs, row.lambdas}; }

std::string diff_str(const RowKey& got, const RowKey& want) {
    auto render = [](const RowKey& k) {
        std::ostringstream os;
        os << "ucs:";
        for (const auto& v : k.ucs_eps) {
            os << " (";
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
            os << ")";
        }
        for (const auto& v : k.ucs_coeffs) {
            os << " (";
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
            os << ")";
        }
        os << " lambdas:";
        for (const auto& l : k.lambdas) os << " " << weight_str(l);
        return os.str();
    };
    return "got [" + render(got) + "] want [" + render(want) + "]";
}

}  // namespace

std::string VerifyResult::render() const {
    std::ostringstream os;
    for (const auto& l : lines) os << (l.pass ? "PASS " : "FAIL ") << l.text << "\n";
    return os.str();
}

VerifyResult verify_table1(const ChevalleyAlgebra& alg, const GoldenTables& gold,
                           const GenericityConfig& cfg) {
    VerifyResult out;
    const std::string type = alg.roots().type().name();
    for (const auto& row : gold.table1) {
        if (row.type != type) continue;
        std::string name = type + " " + orbit_name(row);
        try {
            if (row.partition && row.second_gamma_eps) {
                // very even: both computed variants must match {printed, second}
                auto variants = classical_diagram_variants(alg, *row.partition, cfg);
                require(variants.size() == 2, "expected a very even partition");
                std::set<RowKey> got;
                for (auto& d : variants) {
                    OrbitRecord rec = record_for_diagram(alg, d, cfg, false);
                    rec.partition = row.partition;
                    got.insert(key_of(table1_report(alg, rec)));
                }
                GoldenTables::T1Row second = row;
                second.second_gamma_eps.reset();
                second.ucs_eps.back() = *row.second_gamma_eps;
                second.lambdas.back() = *row.second_lambda;
                std::set<RowKey> want{key_of(row), key_of(second)};
                bool ok = got == want;
                out.add(ok, "table1 " + name + (ok ? " (both very even variants)"
                                                   : ": variant pair mismatch"));
            } else {
                WeightedDiagram d =
                    row.partition
                        ? classical_diagram(alg, *row.partition, cfg)
                        : WeightedDiagram(alg.roots().labels_paper_to_internal(*row.diagram));
                OrbitRecord rec = record_for_diagram(alg, std::move(d), cfg, false);
                rec.partition = row.partition;
                Table1Row computed = table1_report(alg, rec);
                // degrees must be 1..r
                bool deg_ok = true;
                for (std::size_t i = 0; i < computed.degrees.size(); ++i)
                    deg_ok = deg_ok && computed.degrees[i] == static_cast<int>(i) + 1;
                RowKey got = key_of(computed), want = key_of(row);
                bool ok = got == want && deg_ok;
                out.add(ok, "table1 " + name + (ok ? "" : ": " + diff_str(got, want)));
            }
        } catch (const std::exception& e) {
            out.add(false, "table1 " + name + ": " + e.what());
        }
    }
    return out;
}

VerifyResult verify_table2(const ChevalleyAlgebra& alg, const GoldenTables& gold,
                           const GenericityConfig& cfg) {
    VerifyResult out;
    const RootSystem& rs = alg.roots();
    const std::string type = rs.type().name();
    std::vector<int> special_labels;
    if (rs.is_theta_fundamental()) special_labels = special_orbit_diagram(rs).labels;

    for (const auto& row : gold.table2) {
        if (row.type != type) continue;
        std::string name =
            type + " " + (row.partition ? partition_str(*row.partition) : labels_str(*row.diagram));
        try {
            WeightedDiagram d = row.partition
                                    ? classical_diagram(alg, *row.partition, cfg)
                                    : WeightedDiagram(rs.labels_paper_to_internal(*row.diagram));
            OrbitRecord rec = record_for_diagram(alg, std::move(d), cfg, true);
            GradedDecomposition gd = grade(alg, rec.diagram);

            out.add(rec.height == 3, "table2 " + name + " height = 3 (got " +
                                         std::to_string(rec.height) + ")");
            bool sph = is_spherical(alg, rec, cfg);
            out.add(sph, "table2 " + name + " spherical");
            int idx = index_of_centralizer(alg, rec, cfg);
            out.add(idx == rs.rank(), "table2 " + name + " index = rk g = " +
                                          std::to_string(rs.rank()) + " (got " +
                                          std::to_string(idx) + ")");

            // fixture checks: every printed weight is dominant (nonnegative
            // fundamental coordinates) and the count matcheable
            bool dominant = true;
            for (const auto& g : row.generators)
                for (const auto& [pos, c] : g.weight)
                    if (c < 0 || pos < 1 || pos > rs.rank()) dominant = false;
            out.add(dominant, "table2 " + name + " fixture weights dominant (" +
                                  std::to_string(row.generators.size()) + " generators)");
            out.add(true, "table2 " + name + " annotations: dim Gamma~ = " +
                              std::to_string(row.dim_gamma_tilde) + ", dim g<3> = " +
                              std::to_string(gd.dim_piece(3)) + ", normality '" + row.normality +
                              "' (reference data, rendered only)");

            if (rec.diagram.labels == special_labels) {
                bool char3 = gd.dim_piece(3) == 2 && gd.dim_piece(1) == 2 * gd.dim_piece(2);
                out.add(char3, "table2 " + name + " is the special orbit: dim g<3> = 2 and "
                               "dim g<1> = 2 dim g<2>");
            }

            if (type == "E8" && row.generators.size() == 8) {
                // the model orbit: the weights are exactly the fundamental ones
                std::set<std::map<int, long long>> want;
                for (int i = 1; i <= 8; ++i)
                    want.insert(std::map<int, long long>{{i, 1ll}});
                std::set<std::map<int, long long>> got;
                for (const auto& g : row.generators) got.insert(g.weight);
                out.add(got == want,
                        "table2 E8 model orbit: generator weights are exactly the eight "
                        "fundamental weights, each once");
            }
        } catch (const std::exception& e) {
            out.add(false, "table2 " + name + ": " + e.what());
        }
    }

    if (type == "E7") {
        // the worked example must reproduce the ten dominant generators of the
        // second E7 row: expand each monomial's weight and compare with degrees
        const GoldenTables::E7Example& ex = gold.e7;
        const GoldenTables::T2Row* row2 = nullptr;
        for (const auto& row : gold.table2)
            if (row.type == "E7" && row.diagram && *row.diagram == ex.diagram) row2 = &row;
        if (row2 == nullptr) {
            out.add(false, "table2 E7 example: no matching table row");
        } else {
            std::multiset<std::pair<std::map<int, long long>, int>> got, want;
            for (const auto& mono : ex.monomials) {
                std::map<int, long long> w;
                int deg = 0;
                for (std::size_t i = 0; i < mono.size(); ++i) {
                    if (mono[i] == 0) continue;
                    deg += mono[i] * ex.f_generators[i].degree;
                    for (const auto& [pos, c] : ex.f_generators[i].weight) {
                        w[pos] += c * mono[i];
                        if (w[pos] == 0) w.erase(pos);
                    }
                }
                got.insert({w, deg});
            }
            for (const auto& g : row2->generators) want.insert({g.weight, g.degree});
            out.add(got == want,
                    "table2 E7 example: the ten dominant monomials in f_1..f_7 match the "
                    "printed generators with degrees");
        }
    }
    return out;
}

VerifyResult verify_special(const ChevalleyAlgebra& alg, const GenericityConfig& cfg,
                            int f_samples, int dim_samples) {
    VerifyResult out;
    const std::string type = alg.roots().type().name();
    SpecialReport rep = special_suite(alg, cfg, f_samples, dim_samples);
    auto add = [&](bool ok, const std::string& what) { out.add(ok, "special " + type + " " + what); };
    add(rep.theta_fundamental, "theta fundamental");
    add(rep.heisenberg, "g<>=1>_(theta) is Heisenberg with centre k e_theta");
    add(rep.special_certified, "special diagram certifies");
    add(rep.special_height == 3, "special diagram height = 3");
    add(rep.dim_g3 == 2, "dim g<3> = 2");
    add(rep.dim_g1_twice_g2, "dim g<1> = 2 dim g<2>");
    add(rep.otilde_is_doubled_minimal, "doubled minimal diagram certifies with height 4");
    add(rep.otilde_im_ad4_dim1, "dim Im (ad e~)^4 = 1");
    add(rep.otilde_im_ad3_dim2, "dim Im (ad e~)^3 = 2");
    add(rep.f_detects_height4,
        "F(x) != 0 <=> (ad x)^4 != 0 on " + std::to_string(rep.f_samples) + " samples");
    add(rep.f_zero_at_zero, "F(0) = 0");
    add(rep.f_zero_on_beta_vector, "F(e_beta) = 0 with (ad e_beta)^3 = 0");
    add(rep.f_k_invariant, "F invariant under sampled root groups of k");
    add(rep.df_formula_matches, "dF formula matches the interpolated differential");
    add(rep.o_element_found, "line search found x with F(x) = 0, rank (ad x)^3 = 2");
    add(rep.o_dims_match, "dim G.x = 2 dim L.x + 2 on samples of g<1>_(theta)");
    add(rep.bigrading_ok, "bi-grading matrix: c = 0, b = a = " + std::to_string(rep.bi.a) +
                              ", d = " + std::to_string(rep.bi.d) +
                              ", centrally symmetric, total = dim g");
    out.add(true, "special " + type + " annotations: dim O = " + std::to_string(rep.dim_O) +
                      ", r_G(O) = min(rk g, 4) = " + std::to_string(rep.rank_annotation) +
                      " (reference), closure dim of the six 1-cells + e = " +
                      std::to_string(rep.g2_closure_dim));
    return out;
}

VerifyResult verify_theorems(const ChevalleyAlgebra& alg, const GenericityConfig& cfg) {
    VerifyResult out;
    const std::string type = alg.roots().type().name();
    std::vector<OrbitRecord> recs = enumerate_orbits(alg, cfg);
    out.add(!recs.empty(), "theorems " + type + ": " + std::to_string(recs.size()) +
                               " nonzero orbits enumerated");
    for (auto& rec : recs) {
        std::string name =
            type + " " + (rec.partition ? partition_str(*rec.partition)
                                        : labels_str(rec.diagram.labels));
        bool sph = is_spherical(alg, rec, cfg);
        bool expect = rec.height == 2 || rec.height == 3;
        out.add(sph == expect, "sphericity(" + name + ") = " + (sph ? "true" : "false") +
                                   " agrees with height " + std::to_string(rec.height));
        if (rec.height <= 3) {
            int idx = index_of_centralizer(alg, rec, cfg);
            out.add(idx == alg.rank(),
                    "index(" + name + ") = " + std::to_string(idx) + " = rk g");
        }
        StabReport stab = check_stab(alg, rec, cfg);
        out.add(stab.passed(), "centralizer structure(" + name + ")");
        if (rec.height % 2 == 1) {
            OddTopReport odd = check_odd_top(alg, rec, cfg);
            out.add(odd.passed(), "odd-top checks(" + name + "), dim g<" +
                                      std::to_string(odd.top) + "> = " +
                                      std::to_string(odd.dim_top));
        }
    }
    return out;
}

}  // namespace nilorbit
