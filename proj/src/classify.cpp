#include "nilorbit/classify.hpp"

#include <algorithm>
#include <map>

namespace nilorbit {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

int partition_target(const SimpleType& t) {
    switch (t.family) {
        case Family::A: return t.rank + 1;
        case Family::B: return 2 * t.rank + 1;
        case Family::C:
        case Family::D: return 2 * t.rank;
        default: throw std::invalid_argument("partitions only label classical types");
    }
}

}  // namespace

bool partition_valid(const SimpleType& t, const std::vector<int>& partition) {
    int sum = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] < 1) return false;
        if (i > 0 && partition[i] > partition[i - 1]) return false;
        sum += partition[i];
    }
    if (sum != partition_target(t)) return false;
    if (t.family == Family::A) return true;
    std::map<int, int> mult;
    for (int p : partition) ++mult[p];
    for (const auto& [part, m] : mult) {
        bool even_part = part % 2 == 0;
        if (t.family == Family::C && !even_part && m % 2 != 0) return false;
        if ((t.family == Family::B || t.family == Family::D) && even_part && m % 2 != 0)
            return false;
    }
    return true;
}

bool partition_very_even(const SimpleType& t, const std::vector<int>& partition) {
    if (t.family != Family::D) return false;
    return std::all_of(partition.begin(), partition.end(), [](int p) { return p % 2 == 0; });
}

std::vector<std::vector<int>> admissible_partitions(const SimpleType& t) {
    std::vector<std::vector<int>> all, out;
    std::vector<int> cur;
    int n = partition_target(t);
    gen_partitions(n, n, cur, all);
    for (auto& p : all) {
        if (static_cast<int>(p.size()) == n) continue;  // (1^n): the zero orbit
        if (partition_valid(t, p)) out.push_back(std::move(p));
    }
    return out;
}

std::vector<WeightedDiagram> classical_diagram_variants(const ChevalleyAlgebra& alg,
                                                        const std::vector<int>& partition,
                                                        const GenericityConfig& cfg) {
    const SimpleType& t = alg.roots().type();
    if (!partition_valid(t, partition))
        throw std::invalid_argument("partition not admissible for " + t.name());
    int n = t.rank;
    if (static_cast<int>(partition.size()) == partition_target(t))
        throw std::domain_error("zero orbit excluded");

    // h-eigenvalues of the standard module: m-1, m-3, ..., 1-m per part m
    std::vector<int> evals;
    for (int m : partition)
        for (int v = m - 1; v >= 1 - m; v -= 2) evals.push_back(v);
    std::sort(evals.rbegin(), evals.rend());

    std::vector<std::vector<int>> label_sets;
    if (t.family == Family::A) {
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = evals[i] - evals[i + 1];
        label_sets.push_back(std::move(labels));
    } else {
        std::vector<int> a(evals.begin(), evals.begin() + n);
        std::vector<int> labels(n);
        for (int i = 0; i + 1 < n; ++i) labels[i] = a[i] - a[i + 1];
        if (t.family == Family::B)
            labels[n - 1] = a[n - 1];
        else if (t.family == Family::C)
            labels[n - 1] = 2 * a[n - 1];
        else {  // D
            labels[n - 2] = a[n - 2] - a[n - 1];
            labels[n - 1] = a[n - 2] + a[n - 1];
        }
        label_sets.push_back(labels);
        if (partition_very_even(t, partition)) {
            std::swap(labels[n - 2], labels[n - 1]);
            label_sets.push_back(std::move(labels));
        }
    }

    std::vector<WeightedDiagram> out;
    for (auto& ls : label_sets) {
        WeightedDiagram d(std::move(ls));
        require(is_characteristic(alg, d, cfg),
                "partition diagram failed certification for " + t.name());
        out.push_back(std::move(d));
    }
    return out;
}

WeightedDiagram classical_diagram(const ChevalleyAlgebra& alg, const std::vector<int>& partition,
                                  const GenericityConfig& cfg) {
    return classical_diagram_variants(alg, partition, cfg).front();
}

namespace {

// Sum over i of rank(ad e : g<i> -> g<i+2>), plus the g<0> -> g<2> rank.
struct BlockRanks {
    int total = 0;
    int surj02 = 0;
};

BlockRanks block_ranks(const ChevalleyAlgebra& alg, const FpCtx& F, const GradedDecomposition& gd,
                       const FpVec& e) {
    BlockRanks out;
    for (const auto& [deg, from] : gd.pieces()) {
        const std::vector<int>& to = gd.piece(deg + 2);
        if (from.empty() || to.empty()) continue;
        int r = static_cast<int>(alg.ad_restricted_fp(F, e, from, to).rank(F));
        out.total += r;
        if (deg == 0) out.surj02 = r;
    }
    return out;
}

bool characteristic_prefilter(const GradedDecomposition& gd) {
    if (gd.dim_piece(2) == 0) return false;
    for (int i = 1; i <= gd.height(); i += 2)
        if (gd.dim_piece(i) % 2 != 0) return false;
    for (int i = 1; i <= gd.height(); ++i)
        if (gd.dim_piece(i - 2) < gd.dim_piece(i)) return false;
    return true;
}

}  // namespace

bool is_characteristic(const ChevalleyAlgebra& alg, WeightedDiagram& d,
                       const GenericityConfig& cfg) {
    GradedDecomposition gd = grade(alg, d);
    if (!characteristic_prefilter(gd)) return false;
    FpCtx F(cfg.prime);
    int want_z = gd.dim_piece(0) + gd.dim_piece(1);

    // Note: the rank conditions below do not suffice on their own (in A2 the
    // labeling (0,2) passes both yet is no orbit diagram), so certification
    // also demands an sl2 completion [e,f] = h with f in g<-2>.
    QVec h = grading_cartan_element(alg, d);
    const std::vector<int>& zero_piece = gd.piece(0);
    FpVec rhs(zero_piece.size(), 0);
    for (std::size_t r = 0; r < zero_piece.size(); ++r) rhs[r] = F.from_rat(h[zero_piece[r]]);

    for (int t = 0; t < cfg.trials; ++t) {
        FpVec e = generic_element(alg, gd, 2, cfg.prime, mix_seed(cfg.seed, 0x636cull + t));
        FpMat sys = alg.ad_restricted_fp(F, e, gd.piece(-2), zero_piece);
        if (!sys.solve(F, rhs)) continue;
        BlockRanks br = block_ranks(alg, F, gd, e);
        int z_dim = alg.dim() - br.total;
        if (z_dim == want_z && br.surj02 == gd.dim_piece(2)) {
            d.certified = true;
            return true;
        }
    }
    return false;
}

ExactTriple make_exact_triple(const ChevalleyAlgebra& alg, const WeightedDiagram& d,
                              const GenericityConfig& cfg) {
    require(d.certified, "make_exact_triple requires a certified diagram");
    GradedDecomposition gd = grade(alg, d);
    FpCtx F(cfg.prime);
    int want_z = gd.dim_piece(0) + gd.dim_piece(1);

    QVec h = grading_cartan_element(alg, d);

    for (int attempt = 0; attempt < 16; ++attempt) {
        QVec e = generic_element_q(alg, gd, 2, mix_seed(cfg.seed, 0x7472ull + attempt));
        // verify this exact point is generic via the F_p rank conditions
        FpVec ep(alg.dim(), 0);
        for (int i = 0; i < alg.dim(); ++i) ep[i] = F.from_rat(e[i]);
        BlockRanks br = block_ranks(alg, F, gd, ep);
        if (alg.dim() - br.total != want_z || br.surj02 != gd.dim_piece(2)) continue;
        auto f = alg.complete_sl2_triple(e, h);
        if (f) return ExactTriple{std::move(e), std::move(h), std::move(*f)};
    }
    throw CheckFailure("exact sl2 completion failed for a certified diagram of " +
                       alg.roots().type().name());
}

std::vector<OrbitRecord> enumerate_orbits(const ChevalleyAlgebra& alg,
                                          const GenericityConfig& cfg) {
    const SimpleType& t = alg.roots().type();
    int n = alg.rank();
    if (n > 8) throw std::invalid_argument("enumerate_orbits supports rank <= 8");

    std::vector<OrbitRecord> records;
    std::vector<int> labels(n, 0);
    while (true) {
        bool nonzero = std::any_of(labels.begin(), labels.end(), [](int v) { return v != 0; });
        if (nonzero) {
            WeightedDiagram d(labels);
            if (is_characteristic(alg, d, cfg)) {
                GradedDecomposition gd = grade(alg, d);
                OrbitRecord rec{std::move(d), std::nullopt, 0, 0, std::nullopt, std::nullopt,
                                std::nullopt};
                rec.dim_orbit = alg.dim() - gd.dim_piece(0) - gd.dim_piece(1);
                rec.height = gd.height();
                records.push_back(std::move(rec));
            }
        }
        int pos = 0;
        while (pos < n && labels[pos] == 2) labels[pos++] = 0;
        if (pos == n) break;
        ++labels[pos];
    }

    std::sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        if (a.dim_orbit != b.dim_orbit) return a.dim_orbit < b.dim_orbit;
        return a.diagram.labels < b.diagram.labels;
    });

    // attach partitions for classical types through the recipe image
    if (t.family == Family::A || t.family == Family::B || t.family == Family::C ||
        t.family == Family::D) {
        std::map<std::vector<int>, std::vector<int>> by_labels;
        for (const auto& p : admissible_partitions(t))
            for (const auto& d : classical_diagram_variants(alg, p, cfg)) by_labels[d.labels] = p;
        for (auto& rec : records) {
            auto it = by_labels.find(rec.diagram.labels);
            if (it != by_labels.end()) rec.partition = it->second;
        }
    }

    for (auto& rec : records) rec.triple = make_exact_triple(alg, rec.diagram, cfg);
    return records;
}

}  // namespace nilorbit
