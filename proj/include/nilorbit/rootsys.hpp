#pragma once

#include "nilorbit/common.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilorbit {

// One root in the ambient Euclidean realization. `simple_coords` is the
// integer coefficient vector on the simple roots; all entries share a sign.
struct Root {
    QVec coords;
    std::vector<int> simple_coords;
    int height = 0;  // sum of simple coefficients (negative for negative roots)

    bool positive() const { return height > 0; }
};

// An irreducible root system in exact rational coordinates. Simple roots use
// the Bourbaki numbering internally; the Onishchik-Vinberg numbering of the
// reference tables is reachable through the conversion tables below.
//
// Immutable after build(); all queries are const and safe for shared reads.
class RootSystem {
  public:
    static RootSystem build(SimpleType stype);

    const SimpleType& type() const { return stype_; }
    int rank() const { return stype_.rank; }
    int num_positive() const { return num_positive_; }
    int num_roots() const { return 2 * num_positive_; }

    // Roots are indexed 0..2m-1: positives first, sorted ascending by
    // (height, lex on simple coefficients), then the matching negatives.
    const Root& root(int i) const { return roots_[i]; }
    int negative_of(int i) const { return i < num_positive_ ? i + num_positive_ : i - num_positive_; }
    int simple_root(int i) const { return simple_idx_[i]; }
    int theta() const { return theta_; }

    // Index of a root with the given simple coefficients, or -1.
    int find_root(const std::vector<int>& simple_coords) const;

    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const QVec& fundamental_weight(int i) const { return fweights_[i]; }

    static Rat dot(const QVec& a, const QVec& b);
    Rat inner(int i, int j) const { return dot(roots_[i].coords, roots_[j].coords); }
    Rat norm2(int i) const { return dot(roots_[i].coords, roots_[i].coords); }
    bool is_long(int i) const { return norm2(i) == long_norm2_; }

    // <w, gamma^vee> = 2 (w, gamma) / (gamma, gamma)
    Rat pairing(const QVec& w, int root_idx) const;

    // Vector of <w, alpha_j^vee> over the simple roots.
    QVec to_fundamental_coords(const QVec& w) const;
    bool is_dominant(const QVec& w) const;

    // True iff theta equals a fundamental weight (false exactly for the
    // A and C families, and for the degenerate aliases B2, D3).
    bool is_theta_fundamental() const;

    // The unique simple root index i (0-based) with (theta, alpha_i) > 0.
    // Requires theta fundamental; certifies beta long and theta-2beta not a root.
    int beta_root() const;

    // paper index (0-based) -> internal Bourbaki index (0-based)
    const std::vector<int>& paper_to_internal() const { return paper_perm_; }
    std::vector<int> labels_paper_to_internal(const std::vector<int>& paper_labels) const;
    std::vector<int> labels_internal_to_paper(const std::vector<int>& labels) const;

    nlohmann::json to_json() const;

  private:
    SimpleType stype_{Family::A, 1};
    std::vector<Root> roots_;
    std::vector<int> simple_idx_;   // index of alpha_i among roots_
    int num_positive_ = 0;
    int theta_ = -1;
    std::vector<std::vector<int>> cartan_;
    std::vector<QVec> fweights_;
    Rat long_norm2_;
    std::vector<int> paper_perm_;
    std::map<std::vector<int>, int> by_coords_;
};

}  // namespace nilorbit
