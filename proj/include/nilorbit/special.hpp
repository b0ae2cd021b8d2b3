#pragma once

#include "nilorbit/analysis.hpp"

#include "json.hpp"

#include <array>
#include <string>

namespace nilorbit {

// The 5-term grading by h_theta ([h_theta, e_theta] = 2 e_theta).
struct ThetaGrading {
    std::map<int, std::vector<int>> pieces;  // degree in [-2,2] -> basis indices

    const std::vector<int>& piece(int i) const;
};

ThetaGrading theta_grading(const ChevalleyAlgebra& alg);

// F(x) = Phi((ad x)^4 e_{-theta}, e_{-theta}) for x in g<1>_(theta). The root
// vectors are not rescaled to Phi(e_theta, e_{-theta}) = 1, so values carry
// that fixed positive integer factor; zero sets are unaffected. Throws
// std::domain_error when x has support outside g<1>_(theta).
std::uint64_t quartic_F_fp(const ChevalleyAlgebra& alg, const FpCtx& F, const ThetaGrading& tg,
                           const FpVec& x);
Rat quartic_F_q(const ChevalleyAlgebra& alg, const ThetaGrading& tg, const QVec& x);

// Labels 1 exactly at the simple roots adjacent to beta, 0 elsewhere.
// Requires theta fundamental.
WeightedDiagram special_orbit_diagram(const RootSystem& rs);

// A point of the special orbit O found on the hypersurface {F = 0} by
// quartic line search over F_p: returns x in g<1>_(theta) with F(x) = 0,
// (ad x)^3 != 0 = (ad x)^4 and rank (ad x)^3 = 2. Independent of the
// structural route through special_orbit_diagram.
FpVec find_O_element(const ChevalleyAlgebra& alg, const GenericityConfig& cfg);

// The (i,j) dimension matrix of the commuting pair (h, h~), i in [-3,3]
// h-degrees, j in [-2,2] h~-degrees, computed exactly over Q.
struct BiGradingMatrix {
    std::array<std::array<int, 5>, 7> dims{};  // dims[i+3][j+2]
    int a = 0, d = 0;

    int at(int i, int j) const { return dims[i + 3][j + 2]; }
    std::string render_matrix() const;
    std::string render_hexagon() const;
    nlohmann::json to_json() const;
};

BiGradingMatrix bigrading(const ChevalleyAlgebra& alg, const GenericityConfig& cfg);

// The full computational suite for one algebra with fundamental theta.
struct SpecialReport {
    std::string type;
    bool theta_fundamental = false;

    // theta-grading facts
    int dim_g1_theta = 0;
    bool heisenberg = false;  // [g<1>,g<1>] in k e_theta, center of g<>=1> is k e_theta

    // special orbit
    std::vector<int> special_labels;  // internal numbering
    bool special_certified = false;
    int special_height = 0;
    int dim_g3 = 0;
    bool dim_g1_twice_g2 = false;
    int dim_O = 0;

    // minimal orbit / O~ facts
    std::vector<int> minimal_labels;
    bool otilde_is_doubled_minimal = false;  // 2x minimal labels certify with height 4
    bool otilde_im_ad4_dim1 = false;
    bool otilde_im_ad3_dim2 = false;

    // F on samples
    int f_samples = 0;
    bool f_detects_height4 = false;  // F(x) != 0 <=> (ad x)^4 != 0 on all samples
    bool f_zero_at_zero = false;
    bool f_zero_on_beta_vector = false;
    bool f_k_invariant = false;
    bool df_formula_matches = false;

    // O via line search
    bool o_element_found = false;
    bool o_dims_match = false;  // dim G.x = 2 dim L.x + 2 on samples

    BiGradingMatrix bi;
    bool bigrading_ok = false;
    int g2_closure_dim = 0;        // dim of the subalgebra generated by the six
                                   // 1-dim bi-graded cells and e (soft check)
    int rank_annotation = 0;       // displayed only: min(rk g, 4)

    bool passed() const {
        return theta_fundamental && heisenberg && special_certified && special_height == 3 &&
               dim_g3 == 2 && dim_g1_twice_g2 && otilde_is_doubled_minimal &&
               otilde_im_ad4_dim1 && otilde_im_ad3_dim2 && f_detects_height4 && f_zero_at_zero &&
               f_zero_on_beta_vector && f_k_invariant && df_formula_matches && o_element_found &&
               o_dims_match && bigrading_ok;
    }
};

SpecialReport special_suite(const ChevalleyAlgebra& alg, const GenericityConfig& cfg,
                            int f_samples = 200, int dim_samples = 20);

}  // namespace nilorbit
