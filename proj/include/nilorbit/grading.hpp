#pragma once

#include "nilorbit/chevalley.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilorbit {

// Labels alpha_i(h_+) in {0,1,2} on the simple roots (internal numbering).
// `certified` is set only by classify::is_characteristic.
struct WeightedDiagram {
    std::vector<int> labels;
    bool certified = false;

    explicit WeightedDiagram(std::vector<int> l) : labels(std::move(l)) {
        for (int v : labels)
            if (v < 0 || v > 2) throw std::invalid_argument("diagram labels must be in {0,1,2}");
    }
};

// The eigenspace split g = ⊕ g<i> induced by a diagram: root vectors land in
// degree sum(labels_j * coeff_j), Cartan generators in degree 0.
class GradedDecomposition {
  public:
    GradedDecomposition(WeightedDiagram d, std::map<int, std::vector<int>> pieces, int dim);

    const WeightedDiagram& diagram() const { return diagram_; }
    int height() const { return height_; }

    const std::vector<int>& piece(int degree) const;
    int dim_piece(int degree) const { return static_cast<int>(piece(degree).size()); }
    const std::map<int, std::vector<int>>& pieces() const { return pieces_; }

    // e.g. "dims[-3..3] = 2, 6, 6, 8, 6, 6, 2"
    std::string dims_string() const;

  private:
    WeightedDiagram diagram_;
    std::map<int, std::vector<int>> pieces_;
    int height_ = 0;
    static const std::vector<int> empty_;
};

GradedDecomposition grade(const ChevalleyAlgebra& alg, const WeightedDiagram& d);

int height_of(const GradedDecomposition& gd);

// Element of g<degree> with independent uniformly random nonzero F_p
// coefficients; deterministic given (prime, seed).
FpVec generic_element(const ChevalleyAlgebra& alg, const GradedDecomposition& gd, int degree,
                      std::uint64_t prime, std::uint64_t seed);

// Exact element with small random integer coefficients on g<degree>.
QVec generic_element_q(const ChevalleyAlgebra& alg, const GradedDecomposition& gd, int degree,
                       std::uint64_t seed);

// The Cartan element h realizing the diagram: alpha_i(h) = labels_i. Returned
// as a full-dimension rational vector supported on the Cartan block.
QVec grading_cartan_element(const ChevalleyAlgebra& alg, const WeightedDiagram& d);

}  // namespace nilorbit
