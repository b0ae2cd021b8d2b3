#pragma once

#include "nilorbit/covariants.hpp"
#include "nilorbit/goldens.hpp"
#include "nilorbit/special.hpp"

#include <string>
#include <vector>

namespace nilorbit {

struct VerifyResult {
    struct Line {
        bool pass;
        std::string text;
    };
    std::vector<Line> lines;

    void add(bool pass, const std::string& text) { lines.push_back({pass, text}); }
    void merge(const VerifyResult& other) {
        lines.insert(lines.end(), other.lines.begin(), other.lines.end());
    }
    bool passed() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::string render() const;
};

// Exact comparison of computed strings and Gamma generators against the
// reference rows for this type (both very even variants matched as a set).
VerifyResult verify_table1(const ChevalleyAlgebra& alg, const GoldenTables& gold,
                           const GenericityConfig& cfg);

// Structural suite over the reference height-3 rows for this type:
// certified, height 3, spherical, index = rk g; fixture weights dominant;
// the dimension identities on the special-orbit row; the model-orbit weight
// check for E8; the worked-example consistency check for E7. dim Gamma~ and
// normality are rendered as annotations.
VerifyResult verify_table2(const ChevalleyAlgebra& alg, const GoldenTables& gold,
                           const GenericityConfig& cfg);

// The full special-orbit suite as pass/fail lines.
VerifyResult verify_special(const ChevalleyAlgebra& alg, const GenericityConfig& cfg,
                            int f_samples = 200, int dim_samples = 20);

// Global invariants over every certified orbit of the type: sphericity
// equals height in {2,3}, index = rk g in heights <= 3, the graded
// centralizer structure, and the odd-height module checks.
VerifyResult verify_theorems(const ChevalleyAlgebra& alg, const GenericityConfig& cfg);

}  // namespace nilorbit
