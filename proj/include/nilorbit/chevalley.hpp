#pragma once

#include "nilorbit/common.hpp"
#include "nilorbit/fp.hpp"
#include "nilorbit/qlinalg.hpp"
#include "nilorbit/rootsys.hpp"

#include <optional>
#include <vector>

namespace nilorbit {

// One term of a bracket: coefficient * basis element.
struct BracketTerm {
    int idx;
    long long c;
};
using BracketExpr = std::vector<BracketTerm>;

enum class FieldKind { Rational, Fp };

// Coefficient vector over Q or F_p, tagged with its field. Mixed-field
// arithmetic is rejected at runtime.
struct Element {
    FieldKind field = FieldKind::Rational;
    std::uint64_t prime = 0;
    QVec q;    // when field == Rational
    FpVec fp;  // when field == Fp

    static Element rational(QVec v) {
        Element e;
        e.field = FieldKind::Rational;
        e.q = std::move(v);
        return e;
    }
    static Element modp(std::uint64_t p, FpVec v) {
        Element e;
        e.field = FieldKind::Fp;
        e.prime = p;
        e.fp = std::move(v);
        return e;
    }
    std::size_t size() const { return field == FieldKind::Rational ? q.size() : fp.size(); }
};

// g in a Chevalley basis: one root vector e_gamma per root, one Cartan
// generator h_i per simple root, with integer structure constants. Signs are
// fixed by the extraspecial-pair convention (N = +(p+1) on extraspecial
// pairs); everything the library asserts is convention-invariant.
//
// Immutable after build(); all computations below are pure.
class ChevalleyAlgebra {
  public:
    static ChevalleyAlgebra build(const RootSystem& rs);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    int num_root_vectors() const { return rs_.num_roots(); }
    int dim() const { return dim_; }

    // Basis layout: [0, num_roots) root vectors in root order, then h_1..h_rank.
    int root_vector(int root_idx) const { return root_idx; }
    int cartan(int i) const { return num_root_vectors() + i; }
    bool is_root_vector(int basis_idx) const { return basis_idx < num_root_vectors(); }

    const BracketExpr& bracket(int bi, int bj) const { return table_[bi * dim_ + bj]; }

    // N_{x,y} for root indices with x + y a root; 0 otherwise.
    long long structure_constant(int x, int y) const;

    // Coordinates of the coroot gamma^vee on the h_i basis (integers).
    const std::vector<int>& coroot_coords(int root_idx) const { return coroots_[root_idx]; }

    // --- F_p paths ------------------------------------------------------
    FpVec bracket_fp(const FpCtx& F, const FpVec& x, const FpVec& y) const;
    // Matrix of v -> [x, v] with v running over `from` basis indices and the
    // result read off on `to` (rows). Correct whenever [x, span(from)] lies
    // in span(to), which holds for all graded uses here.
    FpMat ad_restricted_fp(const FpCtx& F, const FpVec& x, const std::vector<int>& from,
                           const std::vector<int>& to) const;
    FpMat ad_matrix_fp(const FpCtx& F, const FpVec& x) const;

    // exp(t ad e_gamma) applied to v; ad e_gamma is nilpotent of index <= 4.
    FpVec exp_ad_root_fp(const FpCtx& F, int root_idx, std::uint64_t t, FpVec v) const;
    FpMat root_group_matrix_fp(const FpCtx& F, int root_idx, std::uint64_t t) const;

    std::uint64_t killing_fp(const FpCtx& F, const FpVec& x, const FpVec& y) const;

    // --- exact paths ------------------------------------------------------
    QVec bracket_q(const QVec& x, const QVec& y) const;
    QMat ad_restricted_q(const QVec& x, const std::vector<int>& from,
                         const std::vector<int>& to) const;
    QMat ad_matrix_q(const QVec& x) const;
    Rat killing_q(const QVec& x, const QVec& y) const;
    QMat killing_gram_q() const;

    // Killing form on the basis: Phi(e_gamma, e_{-gamma}) and Phi(h_i, h_j);
    // all other basis pairs vanish.
    long long killing_root_pair(int root_idx) const { return killing_root_[root_idx]; }
    long long killing_cartan(int i, int j) const { return killing_cartan_[i][j]; }

    // Debug dump of all structure constants as (i, j, k, c) quadruples.
    nlohmann::json structure_constants_json() const;

    // --- field-tagged wrappers ---------------------------------------------
    Element bracket(const Element& x, const Element& y) const;
    Element ad_apply(const Element& x, const Element& v) const { return bracket(x, v); }

    // Degree of each basis element under the grading by a rational Cartan
    // element h (coords on the full basis; only the Cartan block is read).
    std::vector<Rat> degrees_under(const QVec& h) const;

    // Given e and a Cartan h with [h,e] = 2e, solve [e,f] = h for f in the
    // h-degree -2 subspace over Q. Returns nullopt if the system is
    // inconsistent (e not generic enough, or (e,h) not a characteristic pair).
    std::optional<QVec> complete_sl2_triple(const QVec& e, const QVec& h) const;

  private:
    RootSystem rs_;
    int dim_ = 0;
    std::vector<BracketExpr> table_;
    std::vector<std::vector<int>> coroots_;
    std::vector<long long> killing_root_;
    std::vector<std::vector<long long>> killing_cartan_;
};

}  // namespace nilorbit
