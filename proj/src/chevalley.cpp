#include "nilorbit/chevalley.hpp"

#include <algorithm>
#include <map>

namespace nilorbit {

namespace {

// Computes all structure constants N_{x,y} for root pairs of one system.
// The basis is pinned by setting N = +(p+1) on extraspecial pairs; every
// other constant follows from the Jacobi identity and the two standard
// identities N_{-x,-y} = -N_{x,y} and, for x+y+z = 0,
// N_{x,y}/|z|^2 = N_{y,z}/|x|^2 = N_{z,x}/|y|^2.
class ConstantsBuilder {
  public:
    explicit ConstantsBuilder(const RootSystem& rs) : rs_(rs) {
        int m = rs.num_positive();
        extraspecial_.assign(m, -1);
        for (int g = 0; g < m; ++g) {
            if (rs.root(g).height == 1) continue;
            for (int a = 0; a < m; ++a) {
                std::vector<int> diff = rs.root(g).simple_coords;
                const auto& ac = rs.root(a).simple_coords;
                for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= ac[k];
                int b = rs.find_root(diff);
                if (b >= 0 && b < m) {
                    extraspecial_[g] = a;
                    break;
                }
            }
            require(extraspecial_[g] >= 0, "no extraspecial pair found");
        }
    }

    long long get(int x, int y) {
        auto it = memo_.find(key(x, y));
        if (it != memo_.end()) return it->second;
        Rat v = compute(x, y);
        require(denominator(v) == 1, "structure constant is not an integer");
        long long n = numerator(v).convert_to<long long>();
        require(std::llabs(n) == string_down(x, y) + 1,
                "structure constant magnitude differs from root string length");
        memo_[key(x, y)] = n;
        return n;
    }

  private:
    long long key(int x, int y) const { return static_cast<long long>(x) * rs_.num_roots() + y; }

    // p = max{k : y - k x is a root}
    long long string_down(int x, int y) const {
        int p = 0;
        std::vector<int> c = rs_.root(y).simple_coords;
        const auto& xc = rs_.root(x).simple_coords;
        while (true) {
            for (std::size_t k = 0; k < c.size(); ++k) c[k] -= xc[k];
            if (std::all_of(c.begin(), c.end(), [](int v) { return v == 0; })) break;
            if (rs_.find_root(c) < 0) break;
            ++p;
        }
        return p;
    }

    int sum_root(int x, int y) const {
        std::vector<int> c = rs_.root(x).simple_coords;
        const auto& yc = rs_.root(y).simple_coords;
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += yc[k];
        return rs_.find_root(c);
    }

    Rat compute(int x, int y) {
        int m = rs_.num_positive();
        bool xp = x < m, yp = y < m;
        if (!xp && !yp) return -Rat(get(rs_.negative_of(x), rs_.negative_of(y)));
        if (xp && yp) return positive_pair(x, y);
        if (!xp && yp) return -Rat(get(y, x));
        // x positive, y negative
        int s = sum_root(x, y);
        require(s >= 0, "structure constant requested for a non-root sum");
        if (s < m) {
            // (x) + (y) + (-s) = 0 and N(y,-s) = -N(-y, s) with -y, s positive
            Rat r = rs_.norm2(s) / rs_.norm2(x);
            return -r * Rat(get(rs_.negative_of(y), s));
        }
        return -Rat(get(rs_.negative_of(x), rs_.negative_of(y)));
    }

    Rat positive_pair(int x, int y) {
        int g = sum_root(x, y);
        require(g >= 0 && g < rs_.num_positive(), "positive pair must sum to a positive root");
        int a = extraspecial_[g];
        int b = sum_root(g, rs_.negative_of(a));  // b = g - a, positive by construction
        if (x == a && y == b) return Rat(string_down(a, b) + 1);
        if (x == b && y == a) return -Rat(string_down(a, b) + 1);

        // Jacobi identity for (e_{-a}, e_x, e_y), solved for N(x,y):
        //   N(x,y) N(g,-a) = -( N(y,-a) N(y-a,x) + N(-a,x) N(x-a,y) )
        Rat n_ab = Rat(get(a, b));
        Rat denom = -n_ab * rs_.norm2(b) / rs_.norm2(g);  // N(g,-a)

        Rat t2(0);
        int ya = sum_root(y, rs_.negative_of(a));
        if (ya >= 0) {
            Rat n_y_na = -(rs_.norm2(ya) / rs_.norm2(y)) * Rat(get(a, ya));  // N(y,-a)
            t2 = n_y_na * Rat(get(ya, x));
        }
        Rat t3(0);
        int xa = sum_root(x, rs_.negative_of(a));
        if (xa >= 0) {
            Rat n_na_x = (rs_.norm2(xa) / rs_.norm2(x)) * Rat(get(a, xa));  // N(-a,x)
            t3 = n_na_x * Rat(get(xa, y));
        }
        return -(t2 + t3) / denom;
    }

    const RootSystem& rs_;
    std::vector<int> extraspecial_;
    std::map<long long, long long> memo_;
};

}  // namespace

ChevalleyAlgebra ChevalleyAlgebra::build(const RootSystem& rs) {
    ChevalleyAlgebra alg;
    alg.rs_ = rs;
    int nr = rs.num_roots();
    int n = rs.rank();
    alg.dim_ = nr + n;

    // coroot coordinates: gamma = sum m_i alpha_i gives
    // gamma^vee = sum m_i (|alpha_i|^2 / |gamma|^2) alpha_i^vee
    alg.coroots_.resize(nr);
    for (int g = 0; g < nr; ++g) {
        std::vector<int> cc(n);
        for (int i = 0; i < n; ++i) {
            Rat v = Rat(rs.root(g).simple_coords[i]) * rs.norm2(rs.simple_root(i)) / rs.norm2(g);
            require(denominator(v) == 1, "coroot coordinate is not an integer");
            cc[i] = static_cast<int>(numerator(v).convert_to<long long>());
        }
        alg.coroots_[g] = std::move(cc);
    }

    ConstantsBuilder nb(rs);
    alg.table_.assign(static_cast<std::size_t>(alg.dim_) * alg.dim_, {});
    auto& table = alg.table_;
    auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * alg.dim_ + j; };

    for (int x = 0; x < nr; ++x) {
        for (int y = 0; y < nr; ++y) {
            if (y == x) continue;
            if (y == rs.negative_of(x)) {
                BracketExpr expr;
                for (int i = 0; i < n; ++i)
                    if (alg.coroots_[x][i] != 0) expr.push_back({alg.cartan(i), alg.coroots_[x][i]});
                table[idx(x, y)] = std::move(expr);
                continue;
            }
            std::vector<int> c = rs.root(x).simple_coords;
            for (int i = 0; i < n; ++i) c[i] += rs.root(y).simple_coords[i];
            int s = rs.find_root(c);
            if (s < 0) continue;
            long long nc = nb.get(x, y);
            table[idx(x, y)] = {{alg.root_vector(s), nc}};
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int g = 0; g < nr; ++g) {
            Rat v = rs.pairing(rs.root(g).coords, rs.simple_root(i));
            long long k = numerator(v).convert_to<long long>();
            if (k != 0) {
                table[idx(alg.cartan(i), g)] = {{g, k}};
                table[idx(g, alg.cartan(i))] = {{g, -k}};
            }
        }
    }

    // Killing form on the basis. Only e_gamma/e_{-gamma} and Cartan/Cartan
    // pairs are nonzero; both are computed as explicit traces.
    alg.killing_root_.resize(nr);
    for (int g = 0; g < nr; ++g) {
        int gn = rs.negative_of(g);
        long long tr = 0;
        for (int b = 0; b < alg.dim_; ++b) {
            for (const auto& t1 : table[idx(gn, b)])
                for (const auto& t2 : table[idx(g, t1.idx)])
                    if (t2.idx == b) tr += t1.c * t2.c;
        }
        alg.killing_root_[g] = tr;
        require(tr != 0, "Killing pairing of e_gamma with e_{-gamma} vanished");
    }
    alg.killing_cartan_.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long tr = 0;
            for (int g = 0; g < nr; ++g) {
                Rat vi = rs.pairing(rs.root(g).coords, rs.simple_root(i));
                Rat vj = rs.pairing(rs.root(g).coords, rs.simple_root(j));
                tr += numerator(vi).convert_to<long long>() * numerator(vj).convert_to<long long>();
            }
            alg.killing_cartan_[i][j] = tr;
        }
    return alg;
}

long long ChevalleyAlgebra::structure_constant(int x, int y) const {
    const BracketExpr& e = bracket(root_vector(x), root_vector(y));
    if (e.size() == 1 && is_root_vector(e[0].idx)) return e[0].c;
    return 0;
}

FpVec ChevalleyAlgebra::bracket_fp(const FpCtx& F, const FpVec& x, const FpVec& y) const {
    FpVec out(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!y[j]) continue;
            std::uint64_t xy = F.mul(x[i], y[j]);
            for (const auto& t : bracket(i, j))
                out[t.idx] = F.add(out[t.idx], F.mul(xy, F.from_int(t.c)));
        }
    }
    return out;
}

FpMat ChevalleyAlgebra::ad_restricted_fp(const FpCtx& F, const FpVec& x,
                                         const std::vector<int>& from,
                                         const std::vector<int>& to) const {
    std::vector<int> pos(dim_, -1);
    for (std::size_t r = 0; r < to.size(); ++r) pos[to[r]] = static_cast<int>(r);
    FpMat m(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
        int j = from[c];
        for (int i = 0; i < dim_; ++i) {
            if (!x[i]) continue;
            for (const auto& t : bracket(i, j)) {
                int r = pos[t.idx];
                if (r >= 0) m.at(r, c) = F.add(m.at(r, c), F.mul(x[i], F.from_int(t.c)));
            }
        }
    }
    return m;
}

FpMat ChevalleyAlgebra::ad_matrix_fp(const FpCtx& F, const FpVec& x) const {
    std::vector<int> all(dim_);
    for (int i = 0; i < dim_; ++i) all[i] = i;
    return ad_restricted_fp(F, x, all, all);
}

FpVec ChevalleyAlgebra::exp_ad_root_fp(const FpCtx& F, int root_idx, std::uint64_t t,
                                       FpVec v) const {
    FpVec acc = v;
    FpVec term = std::move(v);
    int ev = root_vector(root_idx);
    for (int k = 1; k <= 6; ++k) {
        FpVec next(dim_, 0);
        bool nonzero = false;
        for (int j = 0; j < dim_; ++j) {
            if (!term[j]) continue;
            for (const auto& e : bracket(ev, j)) {
                next[e.idx] = F.add(next[e.idx], F.mul(term[j], F.from_int(e.c)));
            }
        }
        std::uint64_t scale = F.mul(t, F.inv(k));
        for (int j = 0; j < dim_; ++j) {
            next[j] = F.mul(next[j], scale);
            if (next[j]) nonzero = true;
        }
        term = std::move(next);
        if (!nonzero) return acc;
        for (int j = 0; j < dim_; ++j) acc[j] = F.add(acc[j], term[j]);
    }
    throw CheckFailure("exp_ad_root_fp: ad e_gamma not nilpotent of small index");
}

FpMat ChevalleyAlgebra::root_group_matrix_fp(const FpCtx& F, int root_idx, std::uint64_t t) const {
    FpMat m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        FpVec v(dim_, 0);
        v[j] = 1;
        FpVec col = exp_ad_root_fp(F, root_idx, t, std::move(v));
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::uint64_t ChevalleyAlgebra::killing_fp(const FpCtx& F, const FpVec& x, const FpVec& y) const {
    int nr = num_root_vectors();
    std::uint64_t acc = 0;
    for (int g = 0; g < nr; ++g) {
        int gn = rs_.negative_of(g);
        if (x[g] && y[gn])
            acc = F.add(acc, F.mul(F.mul(x[g], y[gn]), F.from_int(killing_root_[g])));
    }
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) {
            if (x[cartan(i)] && y[cartan(j)])
                acc = F.add(acc, F.mul(F.mul(x[cartan(i)], y[cartan(j)]),
                                       F.from_int(killing_cartan_[i][j])));
        }
    return acc;
}

QVec ChevalleyAlgebra::bracket_q(const QVec& x, const QVec& y) const {
    QVec out(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Rat xy = x[i] * y[j];
            for (const auto& t : bracket(i, j)) out[t.idx] += xy * t.c;
        }
    }
    return out;
}

QMat ChevalleyAlgebra::ad_restricted_q(const QVec& x, const std::vector<int>& from,
                                       const std::vector<int>& to) const {
    std::vector<int> pos(dim_, -1);
    for (std::size_t r = 0; r < to.size(); ++r) pos[to[r]] = static_cast<int>(r);
    QMat m(to.size(), QVec(from.size(), Rat(0)));
    for (std::size_t c = 0; c < from.size(); ++c) {
        int j = from[c];
        for (int i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (const auto& t : bracket(i, j)) {
                int r = pos[t.idx];
                if (r >= 0) m[r][c] += x[i] * t.c;
            }
        }
    }
    return m;
}

QMat ChevalleyAlgebra::ad_matrix_q(const QVec& x) const {
    std::vector<int> all(dim_);
    for (int i = 0; i < dim_; ++i) all[i] = i;
    return ad_restricted_q(x, all, all);
}

Rat ChevalleyAlgebra::killing_q(const QVec& x, const QVec& y) const {
    int nr = num_root_vectors();
    Rat acc(0);
    for (int g = 0; g < nr; ++g) {
        int gn = rs_.negative_of(g);
        if (x[g] != 0 && y[gn] != 0) acc += x[g] * y[gn] * killing_root_[g];
    }
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            if (x[cartan(i)] != 0 && y[cartan(j)] != 0)
                acc += x[cartan(i)] * y[cartan(j)] * killing_cartan_[i][j];
    return acc;
}

QMat ChevalleyAlgebra::killing_gram_q() const {
    QMat g(dim_, QVec(dim_, Rat(0)));
    for (int r = 0; r < num_root_vectors(); ++r) g[r][rs_.negative_of(r)] = killing_root_[r];
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) g[cartan(i)][cartan(j)] = killing_cartan_[i][j];
    return g;
}

nlohmann::json ChevalleyAlgebra::structure_constants_json() const {
    nlohmann::json j;
    j["type"] = rs_.type().name();
    j["dim"] = dim_;
    j["constants"] = nlohmann::json::array();
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k)
            for (const auto& t : bracket(i, k))
                j["constants"].push_back({i, k, t.idx, t.c});
    return j;
}

Element ChevalleyAlgebra::bracket(const Element& x, const Element& y) const {
    if (x.field != y.field || (x.field == FieldKind::Fp && x.prime != y.prime))
        throw std::invalid_argument("mixed-field bracket rejected");
    if (x.field == FieldKind::Rational) return Element::rational(bracket_q(x.q, y.q));
    FpCtx F(x.prime);
    return Element::modp(x.prime, bracket_fp(F, x.fp, y.fp));
}

std::vector<Rat> ChevalleyAlgebra::degrees_under(const QVec& h) const {
    std::vector<Rat> deg(dim_, Rat(0));
    for (int g = 0; g < num_root_vectors(); ++g) {
        Rat d(0);
        for (int i = 0; i < rank(); ++i) {
            if (h[cartan(i)] == 0) continue;
            d += h[cartan(i)] * rs_.pairing(rs_.root(g).coords, rs_.simple_root(i));
        }
        deg[g] = d;
    }
    return deg;
}

std::optional<QVec> ChevalleyAlgebra::complete_sl2_triple(const QVec& e, const QVec& h) const {
    QVec he = bracket_q(h, e);
    for (int i = 0; i < dim_; ++i)
        if (he[i] != 2 * e[i]) throw std::domain_error("complete_sl2_triple: [h,e] != 2e");

    std::vector<Rat> deg = degrees_under(h);
    std::vector<int> lower;
    for (int i = 0; i < dim_; ++i)
        if (deg[i] == -2) lower.push_back(i);
    if (lower.empty()) return std::nullopt;

    QMat sys(dim_, QVec(lower.size(), Rat(0)));
    for (std::size_t c = 0; c < lower.size(); ++c) {
        QVec basis(dim_, Rat(0));
        basis[lower[c]] = 1;
        QVec col = bracket_q(e, basis);
        for (int r = 0; r < dim_; ++r) sys[r][c] = col[r];
    }
    auto sol = q_solve(sys, h);
    if (!sol) return std::nullopt;
    QVec f(dim_, Rat(0));
    for (std::size_t c = 0; c < lower.size(); ++c) f[lower[c]] = (*sol)[c];

    QVec hf = bracket_q(h, f);
    for (int i = 0; i < dim_; ++i) require(hf[i] == -2 * f[i], "sl2 triple: [h,f] != -2f");
    QVec ef = bracket_q(e, f);
    for (int i = 0; i < dim_; ++i) require(ef[i] == h[i], "sl2 triple: [e,f] != h");
    return f;
}

}  // namespace nilorbit
