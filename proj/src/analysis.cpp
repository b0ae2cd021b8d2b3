#include "nilorbit/analysis.hpp"

#include <random>

namespace nilorbit {

FpVec reduce_mod_p(const FpCtx& F, const QVec& v) {
    FpVec out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out[i] = F.from_rat(v[i]);
    return out;
}

std::vector<FpVec> centralizer_basis(const ChevalleyAlgebra& alg, const FpCtx& F, const FpVec& x) {
    return alg.ad_matrix_fp(F, x).kernel(F);
}

int orbit_dim_fp(const ChevalleyAlgebra& alg, const FpCtx& F, const FpVec& x) {
    // dim G.x = dim g - dim ker(ad x) = rank of ad x
    return static_cast<int>(alg.ad_matrix_fp(F, x).rank(F));
}

namespace {

FpVec exact_e_mod_p(const OrbitRecord& rec, const FpCtx& F) {
    require(rec.triple.has_value(), "orbit record lacks an exact certificate");
    return reduce_mod_p(F, rec.triple->e);
}

FpVec random_in_piece(const ChevalleyAlgebra& alg, const std::vector<int>& piece, const FpCtx& F,
                      std::mt19937_64& rng) {
    FpVec v(alg.dim(), 0);
    for (int i : piece) v[i] = F.random_nonzero(rng);
    return v;
}

}  // namespace

bool is_spherical(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                  const GenericityConfig& cfg) {
    require(rec.diagram.certified, "is_spherical requires a certified orbit");
    const RootSystem& rs = alg.roots();
    FpCtx F(cfg.prime);
    GradedDecomposition gd = grade(alg, rec.diagram);

    // b = t + u_+
    std::vector<int> borel, all(alg.dim());
    for (int i = 0; i < rs.num_positive(); ++i) borel.push_back(alg.root_vector(i));
    for (int i = 0; i < rs.rank(); ++i) borel.push_back(alg.cartan(i));
    for (int i = 0; i < alg.dim(); ++i) all[i] = i;

    int factors = 2 * rs.num_positive();
    for (int round = 0; round < cfg.conj_rounds; ++round) {
        std::mt19937_64 rng(mix_seed(cfg.seed, 0x7370ull + 31 * round));
        FpVec x = generic_element(alg, gd, 2, cfg.prime, mix_seed(cfg.seed, 0x6573ull + round));
        for (int k = 0; k < factors; ++k) {
            int g = static_cast<int>(rng() % rs.num_roots());
            x = alg.exp_ad_root_fp(F, g, F.random_nonzero(rng), std::move(x));
        }
        // rank of v in b -> [v, x] = -[x, v]
        FpMat m = alg.ad_restricted_fp(F, x, borel, all);
        if (static_cast<int>(m.rank(F)) == rec.dim_orbit) return true;
    }
    return false;
}

int index_of_centralizer(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                         const GenericityConfig& cfg) {
    require(rec.diagram.certified, "index_of_centralizer requires a certified orbit");
    FpCtx F(cfg.prime);
    FpVec e = exact_e_mod_p(rec, F);
    std::vector<FpVec> z = centralizer_basis(alg, F, e);
    int z_dim = static_cast<int>(z.size());
    require(z_dim == alg.dim() - rec.dim_orbit, "centralizer dimension mismatch");

    std::size_t max_rank = 0;
    std::mt19937_64 rng(mix_seed(cfg.seed, 0x696eull));
    for (int t = 0; t < cfg.trials; ++t) {
        // B[i][j] = xi([b_i, b_j]) for a random linear form xi, so that
        // xi([z_a, z_b]) = z_a^T B z_b.
        FpVec xi(alg.dim());
        for (auto& v : xi) v = F.random(rng);
        FpMat B(alg.dim(), alg.dim());
        for (int i = 0; i < alg.dim(); ++i)
            for (int j = 0; j < alg.dim(); ++j) {
                std::uint64_t acc = 0;
                for (const auto& term : alg.bracket(i, j))
                    acc = F.add(acc, F.mul(xi[term.idx], F.from_int(term.c)));
                B.at(i, j) = acc;
            }
        FpMat Z(alg.dim(), z.size());
        for (std::size_t c = 0; c < z.size(); ++c)
            for (int r = 0; r < alg.dim(); ++r) Z.at(r, c) = z[c][r];
        FpMat BZ = B.times(F, Z);
        FpMat M(z.size(), z.size());
        for (std::size_t a = 0; a < z.size(); ++a)
            for (std::size_t b = 0; b < z.size(); ++b) {
                std::uint64_t acc = 0;
                for (int r = 0; r < alg.dim(); ++r)
                    if (z[a][r]) acc = F.add(acc, F.mul(z[a][r], BZ.at(r, b)));
                M.at(a, b) = acc;
            }
        std::size_t rank = M.rank(F);
        require(rank % 2 == 0, "skew form matrix has odd rank");
        max_rank = std::max(max_rank, rank);
    }
    return z_dim - static_cast<int>(max_rank);
}

CentralizerData centralizer_data(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                                 const GenericityConfig& cfg) {
    require(rec.diagram.certified && rec.triple.has_value(),
            "centralizer_data requires a certified record with exact certificate");
    FpCtx F(cfg.prime);
    GradedDecomposition gd = grade(alg, rec.diagram);
    FpVec e = exact_e_mod_p(rec, F);
    FpVec f = reduce_mod_p(F, rec.triple->f);

    CentralizerData out;
    for (const auto& [deg, from] : gd.pieces()) {
        int r = 0;
        if (!gd.piece(deg + 2).empty())
            r = static_cast<int>(alg.ad_restricted_fp(F, e, from, gd.piece(deg + 2)).rank(F));
        int kdim = static_cast<int>(from.size()) - r;
        if (kdim > 0) out.z_graded_dims[deg] = kdim;
        out.z_dim += kdim;
    }

    // k = z_{g<0>}(e) ∩ z_{g<0>}(f): joint kernel of the two restricted maps
    const std::vector<int>& zero = gd.piece(0);
    FpMat me = alg.ad_restricted_fp(F, e, zero, gd.piece(2));
    FpMat mf = alg.ad_restricted_fp(F, f, zero, gd.piece(-2));
    FpMat stack(me.rows() + mf.rows(), zero.size());
    for (std::size_t i = 0; i < me.rows(); ++i)
        for (std::size_t j = 0; j < zero.size(); ++j) stack.at(i, j) = me.at(i, j);
    for (std::size_t i = 0; i < mf.rows(); ++i)
        for (std::size_t j = 0; j < zero.size(); ++j) stack.at(me.rows() + i, j) = mf.at(i, j);
    out.k_dim = static_cast<int>(zero.size() - stack.rank(F));

    out.index_z = index_of_centralizer(alg, rec, cfg);
    return out;
}

StabReport check_stab(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                      const GenericityConfig& cfg) {
    require(rec.diagram.certified && rec.triple.has_value(),
            "check_stab requires a certified record with exact certificate");
    FpCtx F(cfg.prime);
    GradedDecomposition gd = grade(alg, rec.diagram);
    FpVec e = exact_e_mod_p(rec, F);

    StabReport rep;
    std::map<int, int> block_rank;
    for (const auto& [deg, from] : gd.pieces()) {
        int r = 0;
        if (!gd.piece(deg + 2).empty())
            r = static_cast<int>(alg.ad_restricted_fp(F, e, from, gd.piece(deg + 2)).rank(F));
        block_rank[deg] = r;
    }

    int z_dim = 0;
    for (const auto& [deg, from] : gd.pieces()) z_dim += static_cast<int>(from.size()) - block_rank[deg];
    rep.z_dim_ok = z_dim == gd.dim_piece(0) + gd.dim_piece(1);

    rep.z_positively_graded = true;
    rep.z_graded_dims_ok = true;
    rep.ad_e_block_ranks_ok = true;
    for (const auto& [deg, from] : gd.pieces()) {
        int kdim = static_cast<int>(from.size()) - block_rank[deg];
        if (deg < 0 && kdim != 0) rep.z_positively_graded = false;
        if (deg >= 0 && kdim != gd.dim_piece(deg) - gd.dim_piece(deg + 2))
            rep.z_graded_dims_ok = false;
        // ad e : g<deg> -> g<deg+2> injective for deg+2 <= 1, surjective for deg+2 >= 1
        if (deg + 2 <= 1 && block_rank[deg] != gd.dim_piece(deg)) rep.ad_e_block_ranks_ok = false;
        if (deg + 2 >= 1 && block_rank[deg] != gd.dim_piece(deg + 2)) rep.ad_e_block_ranks_ok = false;
    }

    // (ad e)^i : g<-i> -> g<i> bijective, via the chained restricted maps
    rep.powers_bijective = true;
    for (int i = 1; i <= gd.height(); ++i) {
        if (gd.dim_piece(i) == 0) continue;
        FpMat acc;
        bool first = true;
        for (int deg = -i; deg < i; deg += 2) {
            FpMat step = alg.ad_restricted_fp(F, e, gd.piece(deg), gd.piece(deg + 2));
            acc = first ? step : step.times(F, acc);
            first = false;
        }
        if (static_cast<int>(acc.rank(F)) != gd.dim_piece(i)) rep.powers_bijective = false;
    }

    // height equals the last nonvanishing power of ad e
    {
        int m = gd.height();
        bool top_nonzero = false;
        if (m == 0) {
            top_nonzero = true;  // zero diagram never reaches here (certified)
        } else {
            FpMat acc;
            bool first = true;
            for (int deg = -m; deg < m; deg += 2) {
                FpMat step = alg.ad_restricted_fp(F, e, gd.piece(deg), gd.piece(deg + 2));
                acc = first ? step : step.times(F, acc);
                first = false;
            }
            top_nonzero = acc.rank(F) > 0;
        }
        // (ad e)^{m+1} kills every piece by degree bookkeeping: g<i + 2(m+1)> = 0
        // whenever g<i> != 0 and i > -(m+2)... the only candidate source is
        // g<-m-2+2k>; all targets exceed height m, so the power vanishes.
        rep.height_matches_ad_power = top_nonzero;
    }
    return rep;
}

OddTopReport check_odd_top(const ChevalleyAlgebra& alg, const OrbitRecord& rec,
                           const GenericityConfig& cfg) {
    require(rec.diagram.certified && rec.triple.has_value(),
            "check_odd_top requires a certified record with exact certificate");
    if (rec.height % 2 == 0) throw std::domain_error("check_odd_top requires odd height");
    FpCtx F(cfg.prime);
    GradedDecomposition gd = grade(alg, rec.diagram);
    int top = gd.height();
    const std::vector<int>& top_piece = gd.piece(top);

    OddTopReport rep;
    rep.top = top;
    rep.dim_top = static_cast<int>(top_piece.size());

    FpVec e = exact_e_mod_p(rec, F);
    FpVec f = reduce_mod_p(F, rec.triple->f);

    // k as joint kernel inside g<0>
    const std::vector<int>& zero = gd.piece(0);
    FpMat me = alg.ad_restricted_fp(F, e, zero, gd.piece(2));
    FpMat mf = alg.ad_restricted_fp(F, f, zero, gd.piece(-2));
    FpMat stack(me.rows() + mf.rows(), zero.size());
    for (std::size_t i = 0; i < me.rows(); ++i)
        for (std::size_t j = 0; j < zero.size(); ++j) stack.at(i, j) = me.at(i, j);
    for (std::size_t i = 0; i < mf.rows(); ++i)
        for (std::size_t j = 0; j < zero.size(); ++j) stack.at(me.rows() + i, j) = mf.at(i, j);
    std::vector<FpVec> k_small = stack.kernel(F);  // coordinates on `zero`
    rep.k_dim = static_cast<int>(k_small.size());
    std::vector<FpVec> k_basis;
    for (const auto& ks : k_small) {
        FpVec v(alg.dim(), 0);
        for (std::size_t j = 0; j < zero.size(); ++j) v[zero[j]] = ks[j];
        k_basis.push_back(std::move(v));
    }

    std::mt19937_64 rng(mix_seed(cfg.seed, 0x6f74ull));

    // (a) K-open orbit: rank of u in k -> [u, v] for generic v
    {
        rep.k_open_orbit = false;
        for (int t = 0; t < cfg.trials && !rep.k_open_orbit; ++t) {
            FpVec v = random_in_piece(alg, top_piece, F, rng);
            FpMat m(top_piece.size(), k_basis.size());
            std::vector<int> pos(alg.dim(), -1);
            for (std::size_t r = 0; r < top_piece.size(); ++r) pos[top_piece[r]] = static_cast<int>(r);
            for (std::size_t c = 0; c < k_basis.size(); ++c) {
                FpVec uv = alg.bracket_fp(F, k_basis[c], v);
                for (int i = 0; i < alg.dim(); ++i)
                    if (uv[i]) {
                        require(pos[i] >= 0, "[k, g<top>] escaped g<top>");
                        m.at(pos[i], c) = uv[i];
                    }
            }
            if (static_cast<int>(m.rank(F)) == rep.dim_top) rep.k_open_orbit = true;
        }
    }

    // (b) two-orbit property: L moves every nonzero vector with full rank
    {
        rep.two_orbit = true;
        std::vector<FpVec> samples;
        for (int i : top_piece) {
            FpVec v(alg.dim(), 0);
            v[i] = 1;
            samples.push_back(std::move(v));
        }
        for (int s = 0; s < 10; ++s) samples.push_back(random_in_piece(alg, top_piece, F, rng));
        for (const auto& v : samples) {
            FpMat m = alg.ad_restricted_fp(F, v, zero, top_piece);
            // rank of [g<0>, v]: note [v, g<0>] = -[g<0>, v]
            if (static_cast<int>(m.rank(F)) != rep.dim_top) {
                rep.two_orbit = false;
                break;
            }
        }
    }

    // (c) height 3: k maps onto at least sp(g<3>) inside gl(g<3>)
    if (top == 3) {
        int m = rep.dim_top;
        FpMat flat(k_basis.size(), static_cast<std::size_t>(m) * m);
        for (std::size_t c = 0; c < k_basis.size(); ++c) {
            FpMat r = alg.ad_restricted_fp(F, k_basis[c], top_piece, top_piece);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    flat.at(c, static_cast<std::size_t>(i) * m + j) = r.at(i, j);
        }
        rep.k_image_dim = static_cast<int>(flat.rank(F));
        rep.sp_summand = rep.k_image_dim >= m * (m + 1) / 2;
    }

    // (d) Killing pairing g<top> x g<-top> nondegenerate
    {
        const std::vector<int>& bot = gd.piece(-top);
        FpMat gram(top_piece.size(), bot.size());
        for (std::size_t i = 0; i < top_piece.size(); ++i)
            for (std::size_t j = 0; j < bot.size(); ++j) {
                FpVec a(alg.dim(), 0), b(alg.dim(), 0);
                a[top_piece[i]] = 1;
                b[bot[j]] = 1;
                gram.at(i, j) = alg.killing_fp(F, a, b);
            }
        rep.killing_pairing_nondegenerate = gram.rank(F) == top_piece.size();
    }
    return rep;
}

}  // namespace nilorbit
