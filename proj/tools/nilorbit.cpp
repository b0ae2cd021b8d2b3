#include "nilorbit/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>

using namespace nilorbit;
using nlohmann::json;

namespace {

#ifndef NILORBIT_DATA_DIR
#define NILORBIT_DATA_DIR "data/golden"
#endif

struct Options {
    std::string type;
    GenericityConfig cfg;
    bool json_out = false;
    std::string numbering = "paper";
    std::string data_dir = NILORBIT_DATA_DIR;
};

void add_common(CLI::App* cmd, Options& opt, bool need_type = true) {
    auto* t = cmd->add_option("--type", opt.type, "simple type, e.g. B3, E8");
    if (need_type) t->required();
    cmd->add_option("--prime", opt.cfg.prime, "prime for randomized ranks (default 2^31 - 19)");
    cmd->add_option("--seed", opt.cfg.seed, "RNG seed (env NILORBIT_SEED overrides)");
    cmd->add_option("--trials", opt.cfg.trials, "redraws per randomized computation");
    cmd->add_option("--conj-rounds", opt.cfg.conj_rounds, "conjugation rounds in the Borel test");
    cmd->add_flag("--json", opt.json_out, "JSON output");
    cmd->add_option("--numbering", opt.numbering, "diagram numbering: paper or internal")
        ->check(CLI::IsMember({"paper", "internal"}));
    cmd->add_option("--data-dir", opt.data_dir, "directory with the golden tables");
}

void apply_env_seed(Options& opt) {
    if (const char* env = std::getenv("NILORBIT_SEED")) opt.cfg.seed = std::strtoull(env, nullptr, 10);
}

ChevalleyAlgebra build_algebra(const Options& opt) {
    SimpleType t = SimpleType::parse(opt.type);
    ChevalleyAlgebra alg = ChevalleyAlgebra::build(RootSystem::build(t));
    if (opt.cfg.prime <= 2ull * alg.dim())
        throw std::invalid_argument("prime must exceed 2 dim g = " + std::to_string(2 * alg.dim()));
    return alg;
}

std::vector<int> out_labels(const RootSystem& rs, const Options& opt,
                            const std::vector<int>& labels) {
    return opt.numbering == "paper" ? rs.labels_internal_to_paper(labels) : labels;
}

json record_json(const ChevalleyAlgebra& alg, const Options& opt, const OrbitRecord& rec) {
    json j;
    j["diagram"] = out_labels(alg.roots(), opt, rec.diagram.labels);
    if (rec.partition) j["partition"] = *rec.partition;
    j["dim"] = rec.dim_orbit;
    j["height"] = rec.height;
    if (rec.spherical) j["spherical"] = *rec.spherical;
    if (rec.index_z) j["index"] = *rec.index_z;
    return j;
}

std::string labels_text(const std::vector<int>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += "-";
        s += std::to_string(labels[i]);
    }
    return s;
}

json result_json(const Options& opt, const VerifyResult& res) {
    json j;
    j["schema"] = 1;
    j["seed"] = opt.cfg.seed;
    j["prime"] = opt.cfg.prime;
    j["passed"] = res.passed();
    for (const auto& line : res.lines)
        j["checks"].push_back({{"pass", line.pass}, {"text", line.text}});
    return j;
}

int cmd_orbits(const Options& opt, bool analyze) {
    ChevalleyAlgebra alg = build_algebra(opt);
    std::vector<OrbitRecord> recs = enumerate_orbits(alg, opt.cfg);
    json out;
    out["schema"] = 1;
    out["type"] = alg.roots().type().name();
    out["seed"] = opt.cfg.seed;
    out["prime"] = opt.cfg.prime;
    for (auto& rec : recs) {
        if (analyze) {
            rec.spherical = is_spherical(alg, rec, opt.cfg);
            rec.index_z = index_of_centralizer(alg, rec, opt.cfg);
        }
        json j = record_json(alg, opt, rec);
        if (analyze) {
            j["graded_dims"] = grade(alg, rec.diagram).dims_string();
            CentralizerData cd = centralizer_data(alg, rec, opt.cfg);
            json zg;
            for (const auto& [deg, d] : cd.z_graded_dims) zg[std::to_string(deg)] = d;
            j["z_dim"] = cd.z_dim;
            j["z_graded_dims"] = zg;
            j["k_dim"] = cd.k_dim;
            if (rec.height % 2 == 1) {
                OddTopReport odd = check_odd_top(alg, rec, opt.cfg);
                j["odd_top_checks"] = {{"top", odd.top},
                                       {"dim_top", odd.dim_top},
                                       {"k_open_orbit", odd.k_open_orbit},
                                       {"two_orbit", odd.two_orbit},
                                       {"sp_summand", odd.sp_summand},
                                       {"killing_pairing_nondegenerate",
                                        odd.killing_pairing_nondegenerate}};
            }
        }
        out["orbits"].push_back(std::move(j));
    }
    if (opt.json_out) {
        std::cout << out.dump(1) << "\n";
    } else {
        std::cout << out["type"].get<std::string>() << ": " << recs.size()
                  << " nonzero nilpotent orbits (seed " << opt.cfg.seed << ")\n";
        for (const json& j : out["orbits"]) {
            std::cout << "  dim " << j["dim"] << "  height " << j["height"] << "  diagram "
                      << labels_text(j["diagram"].get<std::vector<int>>());
            if (j.contains("partition")) {
                std::cout << "  partition (";
                auto p = j["partition"].get<std::vector<int>>();
                for (std::size_t i = 0; i < p.size(); ++i)
                    std::cout << (i ? "," : "") << p[i];
                std::cout << ")";
            }
            if (j.contains("spherical"))
                std::cout << "  spherical " << (j["spherical"].get<bool>() ? "yes" : "no");
            if (j.contains("index")) std::cout << "  index " << j["index"];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_table1(const Options& opt) {
    ChevalleyAlgebra alg = build_algebra(opt);
    std::vector<OrbitRecord> recs = enumerate_orbits(alg, opt.cfg);
    json out;
    out["schema"] = 1;
    out["type"] = alg.roots().type().name();
    out["seed"] = opt.cfg.seed;
    for (const auto& rec : recs) {
        if (rec.height != 2) continue;
        Table1Row row = table1_report(alg, rec);
        if (opt.json_out) {
            json j;
            j["diagram_paper"] = row.diagram_paper;
            if (row.partition) j["partition"] = *row.partition;
            for (const auto& g : row.ucs_eps) j["ucs_eps"].push_back(g);
            for (const auto& g : row.ucs_paper_coeffs) j["ucs_coeffs"].push_back(g);
            for (std::size_t k = 0; k < row.lambdas.size(); ++k) {
                json lam;
                for (const auto& [idx, c] : row.lambdas[k]) lam[std::to_string(idx)] = c;
                j["lambdas"].push_back(lam);
            }
            j["degrees"] = row.degrees;
            out["rows"].push_back(std::move(j));
        } else {
            std::cout << render_table1_row(row) << "\n";
        }
    }
    if (opt.json_out) std::cout << out.dump(1) << "\n";
    return 0;
}

int cmd_special(const Options& opt) {
    ChevalleyAlgebra alg = build_algebra(opt);
    VerifyResult res = verify_special(alg, opt.cfg);
    BiGradingMatrix bi = bigrading(alg, opt.cfg);
    if (opt.json_out) {
        json j = result_json(opt, res);
        j["bigrading"] = bi.to_json();
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << res.render();
        std::cout << "bi-grading dimension matrix (i: h-degree, j: h~-degree):\n"
                  << bi.render_matrix();
        std::cout << "hexagonal form (columns 2i - 3j):\n" << bi.render_hexagon();
    }
    return res.passed() ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    ChevalleyAlgebra alg = build_algebra(opt);
    VerifyResult res;
    if (suite == "table1") {
        GoldenTables gold = GoldenTables::load(opt.data_dir);
        res = verify_table1(alg, gold, opt.cfg);
    } else if (suite == "table2-structural") {
        GoldenTables gold = GoldenTables::load(opt.data_dir);
        res = verify_table2(alg, gold, opt.cfg);
    } else if (suite == "special") {
        res = verify_special(alg, opt.cfg);
    } else if (suite == "theorems") {
        res = verify_theorems(alg, opt.cfg);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    if (opt.json_out)
        std::cout << result_json(opt, res).dump(1) << "\n";
    else
        std::cout << res.render();
    return res.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilorbit: spherical nilpotent orbits in simple Lie algebras, exactly"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("NILORBIT_DATA_DIR")) opt.data_dir = env;

    CLI::App* orbits = app.add_subcommand("orbits", "enumerate nilpotent orbits");
    add_common(orbits, opt);
    CLI::App* analyze =
        app.add_subcommand("analyze", "enumerate with sphericity, index and structure");
    add_common(analyze, opt);
    CLI::App* table1 = app.add_subcommand("table1", "canonical strings of the height-2 orbits");
    add_common(table1, opt);
    CLI::App* special = app.add_subcommand("special", "the height-3 special orbit suite");
    add_common(special, opt);
    CLI::App* verify = app.add_subcommand("verify", "verify against the reference tables");
    std::string suite;
    verify->add_option("suite", suite, "table1 | table2-structural | special | theorems")
        ->required();
    add_common(verify, opt);

    try {
        app.parse(argc, argv);
        apply_env_seed(opt);
        if (orbits->parsed()) return cmd_orbits(opt, false);
        if (analyze->parsed()) return cmd_orbits(opt, true);
        if (table1->parsed()) return cmd_table1(opt);
        if (special->parsed()) return cmd_special(opt);
        if (verify->parsed()) return cmd_verify(opt, suite);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
