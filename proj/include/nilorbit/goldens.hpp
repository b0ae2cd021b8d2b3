#pragma once

#include "nilorbit/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilorbit {

// Reference data transcribed from the tables, in the tables' own numbering.
struct GoldenTables {
    struct WeightedGen {
        std::map<int, long long> weight;  // 1-based fundamental-weight index -> coeff
        int degree = 0;
    };
    struct T1Row {
        std::string type;
        std::optional<std::vector<int>> partition;
        std::optional<std::vector<int>> diagram;  // paper numbering
        std::vector<std::vector<long long>> ucs_eps;
        std::vector<std::vector<int>> ucs_coeffs;
        std::vector<std::map<int, long long>> lambdas;
        // very even partitions: the second orbit's final string root / weight
        std::optional<std::vector<long long>> second_gamma_eps;
        std::optional<std::map<int, long long>> second_lambda;
    };
    struct T2Row {
        std::string type;
        std::optional<std::vector<int>> partition;
        std::optional<std::vector<int>> diagram;  // paper numbering
        int dim_gamma_tilde = 0;
        std::vector<WeightedGen> generators;
        std::string normality;
    };
    struct E7Example {
        std::vector<int> diagram;
        int orbit_dimension = 0;
        std::string bala_carter;
        std::vector<WeightedGen> f_generators;
        std::vector<std::vector<int>> monomials;  // exponents over the f_i
    };

    std::vector<T1Row> table1;
    std::vector<T2Row> table2;
    E7Example e7;

    // Throws std::invalid_argument when the files are absent or malformed.
    static GoldenTables load(const std::string& dir);
};

}  // namespace nilorbit
