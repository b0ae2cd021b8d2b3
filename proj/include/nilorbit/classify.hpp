#pragma once

#include "nilorbit/grading.hpp"

#include <optional>
#include <vector>

namespace nilorbit {

// Exact certificate {e, h, f} with [h,e]=2e, [e,f]=h, [h,f]=-2f over Q.
struct ExactTriple {
    QVec e, h, f;
};

// One nilpotent orbit. `spherical` and `index_z` are filled by analysis.
struct OrbitRecord {
    WeightedDiagram diagram;
    std::optional<std::vector<int>> partition;
    int dim_orbit = 0;
    int height = 0;
    std::optional<ExactTriple> triple;
    std::optional<bool> spherical;
    std::optional<int> index_z;
};

// All partitions admissible for the type (zero orbit excluded):
//   A_n: partitions of n+1 except (1^{n+1})
//   B_n: partitions of 2n+1, even parts with even multiplicity
//   C_n: partitions of 2n, odd parts with even multiplicity
//   D_n: partitions of 2n, even parts with even multiplicity
std::vector<std::vector<int>> admissible_partitions(const SimpleType& t);

bool partition_valid(const SimpleType& t, const std::vector<int>& partition);

// True iff the partition labels two orbits (very even: D type, all parts even).
bool partition_very_even(const SimpleType& t, const std::vector<int>& partition);

// Weighted diagram(s) of the orbit with the given partition, certified.
// Returns two diagrams exactly for very even D partitions.
std::vector<WeightedDiagram> classical_diagram_variants(const ChevalleyAlgebra& alg,
                                                        const std::vector<int>& partition,
                                                        const GenericityConfig& cfg);
WeightedDiagram classical_diagram(const ChevalleyAlgebra& alg, const std::vector<int>& partition,
                                  const GenericityConfig& cfg);

// Dynkin's criterion realized as a rank test over F_p: the diagram is the
// weighted diagram of an orbit iff a generic e in g<2> has
// dim z_g(e) = dim g<0> + dim g<1> and [g<0>, e] = g<2>. Sets d.certified.
bool is_characteristic(const ChevalleyAlgebra& alg, WeightedDiagram& d,
                       const GenericityConfig& cfg);

// Exact-arithmetic certificate for a certified diagram: a small-integer
// generic e, the grading element h, and the sl2 completion f. Throws
// CheckFailure if completion fails (an F_p-certified diagram must never
// silently lack an exact certificate).
ExactTriple make_exact_triple(const ChevalleyAlgebra& alg, const WeightedDiagram& d,
                              const GenericityConfig& cfg);

// All nonzero nilpotent orbits by exhaustive certification of the 3^rank
// labelings; sorted by (dim, labels). Partitions attached for classical types;
// exact certificates attached to every record.
std::vector<OrbitRecord> enumerate_orbits(const ChevalleyAlgebra& alg,
                                          const GenericityConfig& cfg);

}  // namespace nilorbit
