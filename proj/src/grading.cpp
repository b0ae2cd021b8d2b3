#include "nilorbit/grading.hpp"

#include <random>
#include <sstream>

namespace nilorbit {

const std::vector<int> GradedDecomposition::empty_{};

GradedDecomposition::GradedDecomposition(WeightedDiagram d, std::map<int, std::vector<int>> pieces,
                                         int dim)
    : diagram_(std::move(d)), pieces_(std::move(pieces)) {
    int total = 0;
    for (const auto& [deg, idxs] : pieces_) {
        total += static_cast<int>(idxs.size());
        if (!idxs.empty() && deg > height_) height_ = deg;
    }
    require(total == dim, "graded pieces do not exhaust the algebra");
    for (const auto& [deg, idxs] : pieces_) {
        (void)idxs;
        require(dim_piece(deg) == dim_piece(-deg), "central symmetry dim g<i> = dim g<-i> violated");
    }
}

const std::vector<int>& GradedDecomposition::piece(int degree) const {
    auto it = pieces_.find(degree);
    return it == pieces_.end() ? empty_ : it->second;
}

std::string GradedDecomposition::dims_string() const {
    std::ostringstream os;
    os << "dims[" << -height_ << ".." << height_ << "] = ";
    for (int i = -height_; i <= height_; ++i) {
        if (i > -height_) os << ", ";
        os << dim_piece(i);
    }
    return os.str();
}

GradedDecomposition grade(const ChevalleyAlgebra& alg, const WeightedDiagram& d) {
    const RootSystem& rs = alg.roots();
    require(static_cast<int>(d.labels.size()) == rs.rank(), "diagram rank mismatch");
    std::map<int, std::vector<int>> pieces;
    for (int g = 0; g < rs.num_roots(); ++g) {
        int deg = 0;
        for (int i = 0; i < rs.rank(); ++i) deg += d.labels[i] * rs.root(g).simple_coords[i];
        pieces[deg].push_back(alg.root_vector(g));
    }
    for (int i = 0; i < rs.rank(); ++i) pieces[0].push_back(alg.cartan(i));
    return GradedDecomposition(d, std::move(pieces), alg.dim());
}

int height_of(const GradedDecomposition& gd) { return gd.height(); }

FpVec generic_element(const ChevalleyAlgebra& alg, const GradedDecomposition& gd, int degree,
                      std::uint64_t prime, std::uint64_t seed) {
    const std::vector<int>& idxs = gd.piece(degree);
    if (idxs.empty()) throw std::domain_error("generic_element: empty graded piece");
    FpCtx F(prime);
    std::mt19937_64 rng(mix_seed(seed, 0x67656eull));
    FpVec v(alg.dim(), 0);
    for (int i : idxs) v[i] = F.random_nonzero(rng);
    return v;
}

QVec generic_element_q(const ChevalleyAlgebra& alg, const GradedDecomposition& gd, int degree,
                       std::uint64_t seed) {
    const std::vector<int>& idxs = gd.piece(degree);
    if (idxs.empty()) throw std::domain_error("generic_element_q: empty graded piece");
    std::mt19937_64 rng(mix_seed(seed, 0x67656e71ull));
    QVec v(alg.dim(), Rat(0));
    for (int i : idxs) v[i] = Rat(1 + static_cast<long long>(rng() % 37));
    return v;
}

QVec grading_cartan_element(const ChevalleyAlgebra& alg, const WeightedDiagram& d) {
    const RootSystem& rs = alg.roots();
    int n = rs.rank();
    // alpha_i(sum_j c_j h_j) = sum_j c_j <alpha_i, alpha_j^vee> = labels_i
    QMat sys(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sys[i][j] = rs.cartan_matrix()[i][j];
    QVec rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = d.labels[i];
    auto sol = q_solve(sys, rhs);
    require(sol.has_value(), "grading_cartan_element: Cartan matrix singular");
    QVec h(alg.dim(), Rat(0));
    for (int j = 0; j < n; ++j) h[alg.cartan(j)] = (*sol)[j];
    return h;
}

}  // namespace nilorbit
