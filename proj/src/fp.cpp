#include "nilorbit/fp.hpp"

#include <algorithm>

namespace nilorbit {

std::uint64_t FpCtx::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FpCtx::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero mod p");
    return pow(a, p - 2);
}

std::uint64_t FpCtx::from_rat(const Rat& v) const {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    Int pi(p);
    Int nr = num % pi;
    if (nr < 0) nr += pi;
    Int dr = den % pi;
    std::uint64_t n = nr.convert_to<std::uint64_t>();
    std::uint64_t d = dr.convert_to<std::uint64_t>();
    return mul(n, inv(d));
}

bool FpCtx::is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for n < 3.2e18 with these bases.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FpVec FpMat::apply(const FpCtx& F, const FpVec& v) const {
    FpVec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint64_t* r = row(i);
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (r[j] && v[j]) acc = F.add(acc, F.mul(r[j], v[j]));
        out[i] = acc;
    }
    return out;
}

FpMat FpMat::times(const FpCtx& F, const FpMat& other) const {
    FpMat out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t aik = at(i, k);
            if (!aik) continue;
            const std::uint64_t* rk = other.row(k);
            std::uint64_t* ri = out.row(i);
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (rk[j]) ri[j] = F.add(ri[j], F.mul(aik, rk[j]));
        }
    return out;
}

namespace {

// In-place row echelon; returns pivot column list.
std::vector<std::size_t> echelon(const FpCtx& F, FpMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        std::uint64_t pinv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), pinv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            std::uint64_t f = m.at(i, c);
            if (!f) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t FpMat::rank(const FpCtx& F) const {
    FpMat copy = *this;
    return echelon(F, copy).size();
}

std::vector<FpVec> FpMat::kernel(const FpCtx& F) const {
    FpMat m = *this;
    std::vector<std::size_t> pivots = echelon(F, m);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        FpVec v(cols_, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m.at(i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FpVec> FpMat::solve(const FpCtx& F, const FpVec& b) const {
    FpMat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::copy(row(i), row(i) + cols_, aug.row(i));
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = echelon(F, aug);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    FpVec x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // coeffs, low degree first

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const FpCtx& F, const Poly& a, const Poly& b, const Poly& mod) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j]) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    // reduce mod `mod` (monic not required)
    std::size_t dm = mod.size() - 1;
    std::uint64_t lead_inv = F.inv(mod.back());
    while (prod.size() > dm) {
        std::uint64_t c = F.mul(prod.back(), lead_inv);
        std::size_t off = prod.size() - 1 - dm;
        if (c)
            for (std::size_t j = 0; j <= dm; ++j)
                prod[off + j] = F.sub(prod[off + j], F.mul(c, mod[j]));
        prod.pop_back();
        poly_trim(prod);
        if (prod.empty()) break;
    }
    return prod;
}

Poly poly_gcd(const FpCtx& F, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = F.inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = F.mul(a.back(), lead_inv);
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[off + j] = F.sub(a[off + j], F.mul(c, b[j]));
            poly_trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t li = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, li);
    }
    return a;
}

// x^e mod f
Poly poly_xpow(const FpCtx& F, std::uint64_t e, const Poly& f) {
    Poly result{1};
    Poly base{0, 1};
    if (f.size() <= 2) {  // f linear: x ≡ -f0/f1
        std::uint64_t r = F.mul(F.neg(f[0]), F.inv(f[1]));
        return Poly{F.pow(r, e)};
    }
    while (e) {
        if (e & 1) result = poly_mulmod(F, result, base, f);
        base = poly_mulmod(F, base, base, f);
        e >>= 1;
    }
    return result;
}

void split_roots(const FpCtx& F, const Poly& f, std::mt19937_64& rng,
                 std::vector<std::uint64_t>& out) {
    if (f.size() <= 1) return;
    if (f.size() == 2) {
        out.push_back(F.mul(F.neg(f[0]), F.inv(f[1])));
        return;
    }
    // f splits into distinct linear factors here; random shift + gcd with
    // (x)^((p-1)/2) - 1 separates them.
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uint64_t shift = F.random(rng);
        // g(x) = f(x - shift); root r of g ↔ root r - shift of f
        Poly g = f;
        // evaluate shifted polynomial by synthetic translation
        {
            Poly res(f.size(), 0);
            // res = f(x + (-shift)) via Horner on coefficients
            for (std::size_t i = f.size(); i-- > 0;) {
                // res = res * (x - shift) + f[i]
                Poly next(res.size() + 1, 0);
                for (std::size_t j = 0; j < res.size(); ++j) {
                    next[j + 1] = F.add(next[j + 1], res[j]);
                    next[j] = F.sub(next[j], F.mul(res[j], shift));
                }
                next[0] = F.add(next[0], f[i]);
                poly_trim(next);
                res = next;
            }
            g = res;
            g.resize(f.size(), 0);
        }
        Poly h = poly_xpow(F, (F.p - 1) / 2, g);
        if (h.empty()) h.push_back(0);  // shift hit a root; gcd below yields 1 and we retry
        h[0] = F.sub(h[0], 1);
        Poly d = poly_gcd(F, g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            // translate factors back: root of d is root-of-g; f-root = g-root - shift
            std::vector<std::uint64_t> part;
            split_roots(F, d, rng, part);
            // remaining factor
            Poly q = g;
            {
                // q = g / d
                Poly quot(g.size() - d.size() + 1, 0);
                Poly rem = g;
                std::uint64_t li = F.inv(d.back());
                while (rem.size() >= d.size() && !rem.empty()) {
                    std::uint64_t c = F.mul(rem.back(), li);
                    std::size_t off = rem.size() - d.size();
                    quot[off] = c;
                    for (std::size_t j = 0; j < d.size(); ++j)
                        rem[off + j] = F.sub(rem[off + j], F.mul(c, d[j]));
                    poly_trim(rem);
                }
                q = quot;
                poly_trim(q);
            }
            split_roots(F, q, rng, part);
            for (std::uint64_t r : part) out.push_back(F.sub(r, shift));
            return;
        }
    }
    throw CheckFailure("fp_poly_roots: failed to split polynomial");
}

}  // namespace

std::vector<std::uint64_t> fp_poly_roots(const FpCtx& F, std::vector<std::uint64_t> coeffs) {
    poly_trim(coeffs);
    std::vector<std::uint64_t> out;
    if (coeffs.size() <= 1) return out;  // constant (or zero: caller's concern)
    // strip x = 0 roots
    std::size_t z = 0;
    while (z < coeffs.size() && coeffs[z] == 0) ++z;
    if (z > 0) {
        out.push_back(0);
        coeffs.erase(coeffs.begin(), coeffs.begin() + z);
    }
    if (coeffs.size() <= 1) return out;
    // product of distinct linear factors: gcd(f, x^p - x)
    Poly xp = poly_xpow(F, F.p, coeffs);
    // xp - x
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = F.sub(xp[1], 1);
    Poly lin = poly_gcd(F, coeffs, xp);
    if (lin.size() <= 1) return out;
    std::mt19937_64 rng(0xC0FFEEull);
    split_roots(F, lin, rng, out);
    return out;
}

FpVec fp_interpolate(const FpCtx& F, const FpVec& xs, const FpVec& ys) {
    std::size_t n = xs.size();
    FpVec coeffs(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // L_i(x) = prod_{j!=i} (x - x_j) / (x_i - x_j)
        FpVec num{1};
        std::uint64_t den = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            FpVec next(num.size() + 1, 0);
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k + 1] = F.add(next[k + 1], num[k]);
                next[k] = F.sub(next[k], F.mul(num[k], xs[j]));
            }
            num = next;
            den = F.mul(den, F.sub(xs[i], xs[j]));
        }
        std::uint64_t scale = F.mul(ys[i], F.inv(den));
        for (std::size_t k = 0; k < num.size(); ++k)
            coeffs[k] = F.add(coeffs[k], F.mul(scale, num[k]));
    }
    return coeffs;
}

}  // namespace nilorbit
