#include "nilorbit/goldens.hpp"

#include "json.hpp"

#include <fstream>

namespace nilorbit {

namespace {

using nlohmann::json;

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("golden file missing: " + path);
    json j;
    in >> j;
    if (j.value("schema", 0) != 1)
        throw std::invalid_argument("golden file has unexpected schema: " + path);
    return j;
}

std::map<int, long long> parse_weight(const json& j) {
    std::map<int, long long> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[std::stoi(it.key())] = it.value().get<long long>();
    return out;
}

GoldenTables::WeightedGen parse_gen(const json& j) {
    GoldenTables::WeightedGen g;
    g.weight = parse_weight(j.at("weight"));
    g.degree = j.at("degree").get<int>();
    return g;
}

}  // namespace

GoldenTables GoldenTables::load(const std::string& dir) {
    GoldenTables out;

    json t1 = load_file(dir + "/table1.json");
    for (const json& r : t1.at("rows")) {
        T1Row row;
        row.type = r.at("type").get<std::string>();
        if (r.contains("partition")) row.partition = r.at("partition").get<std::vector<int>>();
        if (r.contains("diagram")) row.diagram = r.at("diagram").get<std::vector<int>>();
        if (r.contains("ucs_eps"))
            row.ucs_eps = r.at("ucs_eps").get<std::vector<std::vector<long long>>>();
        if (r.contains("ucs_coeffs"))
            row.ucs_coeffs = r.at("ucs_coeffs").get<std::vector<std::vector<int>>>();
        for (const json& lam : r.at("lambdas")) row.lambdas.push_back(parse_weight(lam));
        if (r.contains("second_variant")) {
            row.second_gamma_eps =
                r.at("second_variant").at("gamma_eps").get<std::vector<long long>>();
            row.second_lambda = parse_weight(r.at("second_variant").at("lambda"));
        }
        out.table1.push_back(std::move(row));
    }

    json t2 = load_file(dir + "/table2.json");
    for (const json& r : t2.at("rows")) {
        T2Row row;
        row.type = r.at("type").get<std::string>();
        if (r.contains("partition")) row.partition = r.at("partition").get<std::vector<int>>();
        if (r.contains("diagram")) row.diagram = r.at("diagram").get<std::vector<int>>();
        row.dim_gamma_tilde = r.at("dim_gamma_tilde").get<int>();
        for (const json& g : r.at("generators")) row.generators.push_back(parse_gen(g));
        row.normality = r.at("normality").get<std::string>();
        out.table2.push_back(std::move(row));
    }

    json ex = load_file(dir + "/e7_example.json");
    out.e7.diagram = ex.at("diagram").get<std::vector<int>>();
    out.e7.orbit_dimension = ex.at("orbit_dimension").get<int>();
    out.e7.bala_carter = ex.value("bala_carter", "");
    for (const json& g : ex.at("f_generators")) out.e7.f_generators.push_back(parse_gen(g));
    out.e7.monomials = ex.at("dominant_monomials").get<std::vector<std::vector<int>>>();

    return out;
}

}  // namespace nilorbit
