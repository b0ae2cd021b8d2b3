#pragma once

#include "nilorbit/classify.hpp"

#include <map>

namespace nilorbit {

// Graded structure of z_g(e) for a certified orbit.
struct CentralizerData {
    int z_dim = 0;
    std::map<int, int> z_graded_dims;  // degree -> dim z_g(e)<i>
    int k_dim = 0;                     // dim of k = z_{g<0>}(e) ∩ z_{g<0>}(f)
    int index_z = 0;
};

// Kernel basis of ad x, as full-dimension vectors.
std::vector<FpVec> centralizer_basis(const ChevalleyAlgebra& alg, const FpCtx& F, const FpVec& x);

// dim G.x = dim g - dim ker(ad x).
int orbit_dim_fp(const ChevalleyAlgebra& alg, const FpCtx& F, const FpVec& x);

// Borel-orbit test: true iff some randomized conjugate x of a generic
// e in g<2> satisfies rank(v in b -> [v,x]) = dim G.e, where b = t + u_+.
// One-sided: never reports spherical for a non-spherical orbit.
bool is_spherical(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                  const GenericityConfig& cfg);

// index z_g(e) = dim z - max_xi rank(xi([z_a, z_b])_{ab}).
int index_of_centralizer(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                         const GenericityConfig& cfg);

CentralizerData centralizer_data(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                                 const GenericityConfig& cfg);

// Checks of the graded centralizer structure for one certified orbit, all
// performed on the exact certificate reduced mod p:
//   z_dim = dim g<0> + dim g<1>;  z<i> = 0 for i < 0;
//   dim z<i> = dim g<i> - dim g<i+2> for i >= 0;
//   (ad e)^i : g<-i> -> g<i> bijective.
struct StabReport {
    bool z_dim_ok = false;
    bool z_positively_graded = false;
    bool z_graded_dims_ok = false;
    bool powers_bijective = false;
    bool ad_e_block_ranks_ok = false;  // injective for target <= 1, surjective for target >= 1
    bool height_matches_ad_power = false;
    bool passed() const {
        return z_dim_ok && z_positively_graded && z_graded_dims_ok && powers_bijective &&
               ad_e_block_ranks_ok && height_matches_ad_power;
    }
};
StabReport check_stab(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                      const GenericityConfig& cfg);

// Structure of the top graded piece for odd-height orbits:
//  (a) K has an open orbit in g<2d+1>: dim k.v = dim g<2d+1> for generic v;
//  (b) two-orbit property: dim [g<0>, v] = dim g<2d+1> for every sampled
//      nonzero v including all coordinate vectors;
//  (c) for height 3: the image of k in gl(g<3>) contains sp(g<3>) exactly:
//      its dimension is at least dim sp(g<3>) = m(m+1)/2, m = dim g<3>;
//  (d) g<2d+1> pairs nondegenerately with g<-2d-1> under the Killing form.
struct OddTopReport {
    int top = 0;
    int dim_top = 0;
    bool k_open_orbit = false;
    bool two_orbit = false;
    bool sp_summand = true;  // only meaningful when top == 3
    int k_image_dim = 0;
    int k_dim = 0;
    bool killing_pairing_nondegenerate = false;
    bool passed() const {
        return k_open_orbit && two_orbit && sp_summand && killing_pairing_nondegenerate;
    }
};
OddTopReport check_odd_top(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                           const GenericityConfig& cfg);

// Reduction of a rational vector mod p.
FpVec reduce_mod_p(const FpCtx& F, const QVec& v);

}  // namespace nilorbit
