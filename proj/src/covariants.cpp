#include "nilorbit/covariants.hpp"

#include <algorithm>
#include <sstream>

namespace nilorbit {

namespace {

// a dominates b in the root order: a - b is a nonnegative combination of
// simple roots.
bool dominates(const RootSystem& rs, int a, int b) {
    for (int i = 0; i < rs.rank(); ++i)
        if (rs.root(a).simple_coords[i] < rs.root(b).simple_coords[i]) return false;
    return true;
}

CanonicalString greedy_string(const RootSystem& rs, const std::vector<int>& delta2, bool upper) {
    for (int g : delta2)
        require(g < rs.num_positive(), "canonical string input must consist of positive roots");

    CanonicalString out;
    std::vector<int> candidates = delta2;
    std::sort(candidates.begin(), candidates.end());  // storage order = (height, lex)
    if (upper)
        require(!candidates.empty() && candidates.back() == rs.theta(),
                "theta must be the maximal element of Delta<2>");

    while (!candidates.empty()) {
        int chosen = upper ? candidates.back() : candidates.front();
        for (int c : candidates) {
            if (c == chosen) continue;
            bool ok = upper ? dominates(rs, chosen, c) : dominates(rs, c, chosen);
            require(ok, "canonical string: extremal candidate is not unique in dominance order");
        }
        out.gammas.push_back(chosen);
        std::vector<int> next;
        for (int c : candidates)
            if (c != chosen && rs.inner(chosen, c) == 0) next.push_back(c);
        candidates = std::move(next);
    }

    for (std::size_t i = 0; i < out.gammas.size(); ++i) {
        require(rs.is_long(out.gammas[i]), "canonical string root is not long");
        for (std::size_t j = i + 1; j < out.gammas.size(); ++j)
            require(rs.inner(out.gammas[i], out.gammas[j]) == 0,
                    "canonical string roots are not orthogonal");
    }
    if (upper)
        for (std::size_t i = 0; i + 1 < out.gammas.size(); ++i)
            require(rs.root(out.gammas[i]).height > rs.root(out.gammas[i + 1]).height,
                    "canonical string heights are not strictly decreasing");
    return out;
}

}  // namespace

CanonicalString upper_canonical_string(const RootSystem& rs, const std::vector<int>& delta2) {
    bool has_theta = std::find(delta2.begin(), delta2.end(), rs.theta()) != delta2.end();
    if (!has_theta) throw std::domain_error("upper_canonical_string: theta not in Delta<2>");
    return greedy_string(rs, delta2, /*upper=*/true);
}

CanonicalString lower_canonical_string(const RootSystem& rs, const std::vector<int>& delta2) {
    return greedy_string(rs, delta2, /*upper=*/false);
}

GammaMonoid gamma_monoid(const RootSystem& rs, const CanonicalString& ucs) {
    GammaMonoid gm;
    QVec sum(rs.root(0).coords.size(), Rat(0));
    int degree = 0;
    for (int g : ucs.gammas) {
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += rs.root(g).coords[k];
        ++degree;
        QVec fc = rs.to_fundamental_coords(sum);
        GammaGenerator gen;
        gen.degree = degree;
        for (const Rat& v : fc) {
            require(denominator(v) == 1, "lambda has non-integral fundamental coordinates");
            long long c = numerator(v).convert_to<long long>();
            require(c >= 0, "lambda_i is not dominant: upper canonical string is broken");
            gen.weight.push_back(c);
        }
        gm.generators.push_back(std::move(gen));
    }
    return gm;
}

bool check_disjoint_support(const GammaMonoid& gm) {
    if (gm.generators.empty()) return true;
    std::size_t n = gm.generators[0].weight.size();
    for (std::size_t pos = 0; pos < n; ++pos) {
        int holders = 0;
        for (const auto& g : gm.generators)
            if (g.weight[pos] != 0) ++holders;
        if (holders > 1) return false;
    }
    return true;
}

bool check_saturation_window(const RootSystem& rs, const GammaMonoid& gm, int window) {
    (void)rs;
    std::size_t r = gm.generators.size();
    if (r == 0) return true;
    std::size_t n = gm.generators[0].weight.size();
    // The lambda_i have disjoint nonzero supports, hence are linearly
    // independent, so a Z-combination lies in the N-span iff its coefficient
    // vector is nonnegative. Saturation on the window then reads: dominant
    // combinations never use a negative coefficient.
    std::vector<int> c(r, -window);
    while (true) {
        bool dominant = true;
        for (std::size_t pos = 0; pos < n && dominant; ++pos) {
            long long v = 0;
            for (std::size_t i = 0; i < r; ++i) v += c[i] * gm.generators[i].weight[pos];
            if (v < 0) dominant = false;
        }
        if (dominant)
            for (std::size_t i = 0; i < r; ++i)
                if (c[i] < 0) return false;
        std::size_t pos = 0;
        while (pos < r && c[pos] == window) c[pos++] = -window;
        if (pos == r) break;
        ++c[pos];
    }
    return true;
}

Table1Row table1_report(const ChevalleyAlgebra& alg, const OrbitRecord& rec) {
    if (rec.height != 2) throw std::domain_error("table1_report requires a height-2 orbit");
    const RootSystem& rs = alg.roots();
    GradedDecomposition gd = grade(alg, rec.diagram);

    std::vector<int> delta2;
    for (int b : gd.piece(2)) {
        require(alg.is_root_vector(b), "degree-2 piece contains a Cartan element");
        delta2.push_back(b);
    }
    CanonicalString ucs = upper_canonical_string(rs, delta2);
    GammaMonoid gm = gamma_monoid(rs, ucs);

    Table1Row row;
    row.type = rs.type().name();
    row.diagram_paper = rs.labels_internal_to_paper(rec.diagram.labels);
    row.partition = rec.partition;

    const std::vector<int>& perm = rs.paper_to_internal();
    bool classical = rs.type().family == Family::A || rs.type().family == Family::B ||
                     rs.type().family == Family::C || rs.type().family == Family::D;
    for (int g : ucs.gammas) {
        if (classical) {
            std::vector<long long> eps;
            for (const Rat& v : rs.root(g).coords) {
                require(denominator(v) == 1, "classical root has non-integral coordinates");
                eps.push_back(numerator(v).convert_to<long long>());
            }
            row.ucs_eps.push_back(std::move(eps));
        } else {
            std::vector<int> pc(rs.rank());
            for (int i = 0; i < rs.rank(); ++i) pc[i] = rs.root(g).simple_coords[perm[i]];
            row.ucs_paper_coeffs.push_back(std::move(pc));
        }
    }
    for (const auto& gen : gm.generators) {
        std::map<int, long long> sparse;
        for (int i = 0; i < rs.rank(); ++i) {
            long long v = gen.weight[perm[i]];
            if (v != 0) sparse[i + 1] = v;
        }
        row.lambdas.push_back(std::move(sparse));
        row.degrees.push_back(gen.degree);
    }
    return row;
}

std::string render_table1_row(const Table1Row& row) {
    std::ostringstream os;
    os << row.type << "  ";
    if (row.partition) {
        os << "(";
        for (std::size_t i = 0; i < row.partition->size(); ++i)
            os << (i ? "," : "") << (*row.partition)[i];
        os << ")";
    } else {
        os << "diagram ";
        for (std::size_t i = 0; i < row.diagram_paper.size(); ++i)
            os << (i ? "-" : "") << row.diagram_paper[i];
    }
    os << "  ucs:";
    auto print_vec = [&os](const auto& v) {
        os << " (";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ")";
    };
    for (const auto& g : row.ucs_eps) print_vec(g);
    for (const auto& g : row.ucs_paper_coeffs) print_vec(g);
    os << "  lambdas:";
    for (std::size_t k = 0; k < row.lambdas.size(); ++k) {
        os << " ";
        bool first = true;
        for (const auto& [idx, c] : row.lambdas[k]) {
            if (!first) os << "+";
            if (c != 1) os << c << "*";
            os << "w" << idx;
            first = false;
        }
        if (first) os << "0";
    }
    return os.str();
}

}  // namespace nilorbit
