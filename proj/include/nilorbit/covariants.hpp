#pragma once

#include "nilorbit/classify.hpp"

#include <map>
#include <optional>
#include <string>

namespace nilorbit {

// Pairwise orthogonal long positive roots gamma_1 > gamma_2 > ..., starting
// at theta, greedily maximal inside Delta<2>.
struct CanonicalString {
    std::vector<int> gammas;  // root indices
};

// gamma_1 = theta; gamma_{k+1} = the maximal root among those in delta2
// orthogonal to gamma_1..gamma_k. Maximality is taken in the (height, lex)
// storage order and then certified against the dominance order: the chosen
// root must dominate every remaining candidate, else CheckFailure.
CanonicalString upper_canonical_string(const RootSystem& rs, const std::vector<int>& delta2);

// Mirror construction picking the minimal root (used for the even-orbit
// set-equality check of the two strings).
CanonicalString lower_canonical_string(const RootSystem& rs, const std::vector<int>& delta2);

// Weights lambda_i = gamma_1 + ... + gamma_i in fundamental coordinates with
// deg f_i = i. All lambda_i must be dominant.
struct GammaGenerator {
    std::vector<long long> weight;  // fundamental coordinates, internal numbering
    int degree = 0;
};
struct GammaMonoid {
    std::vector<GammaGenerator> generators;
};

GammaMonoid gamma_monoid(const RootSystem& rs, const CanonicalString& ucs);

// True iff every fundamental-coordinate position is nonzero in at most one
// generator weight.
bool check_disjoint_support(const GammaMonoid& gm);

// Finite-window saturation check: every Z-combination of the generator
// weights with coefficients in [-window, window] that is dominant is also an
// N-combination.
bool check_saturation_window(const RootSystem& rs, const GammaMonoid& gm, int window);

// One Table-1 row in the reference tables' numbering.
struct Table1Row {
    std::string type;
    std::vector<int> diagram_paper;                  // labels, paper order
    std::optional<std::vector<int>> partition;
    std::vector<std::vector<long long>> ucs_eps;     // classical: ambient coordinates
    std::vector<std::vector<int>> ucs_paper_coeffs;  // exceptional: simple coeffs, paper order
    std::vector<std::map<int, long long>> lambdas;   // 1-based paper index -> coefficient
    std::vector<int> degrees;
};

// Report for a height-2 orbit; throws std::domain_error otherwise.
Table1Row table1_report(const ChevalleyAlgebra& alg, const OrbitRecord& rec);

std::string render_table1_row(const Table1Row& row);

}  // namespace nilorbit
