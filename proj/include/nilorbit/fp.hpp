#pragma once

#include "nilorbit/common.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace nilorbit {

// Arithmetic modulo an odd prime p < 2^32, so products fit in uint64.
struct FpCtx {
    std::uint64_t p;

    explicit FpCtx(std::uint64_t prime) : p(prime) {
        if (prime < 3 || prime >= (1ull << 32) || !is_probable_prime(prime))
            throw std::invalid_argument("prime must be an odd prime below 2^32");
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    // Reduction of a signed integer.
    std::uint64_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        return r < 0 ? static_cast<std::uint64_t>(r + static_cast<long long>(p))
                     : static_cast<std::uint64_t>(r);
    }
    std::uint64_t from_rat(const Rat& v) const;

    std::uint64_t random_nonzero(std::mt19937_64& rng) const { return 1 + rng() % (p - 1); }
    std::uint64_t random(std::mt19937_64& rng) const { return rng() % p; }

    static bool is_probable_prime(std::uint64_t n);
};

using FpVec = std::vector<std::uint64_t>;

// Dense row-major matrix over F_p.
class FpMat {
  public:
    FpMat() = default;
    FpMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint64_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint64_t* row(std::size_t i) const { return a_.data() + i * cols_; }

    FpVec apply(const FpCtx& F, const FpVec& v) const;  // matrix * vector
    FpMat times(const FpCtx& F, const FpMat& other) const;

    // Rank by in-place Gaussian elimination on a copy.
    std::size_t rank(const FpCtx& F) const;

    // Basis of the right kernel {v : A v = 0}, one vector per column of the result.
    std::vector<FpVec> kernel(const FpCtx& F) const;

    // One solution of A x = b, if consistent.
    std::optional<FpVec> solve(const FpCtx& F, const FpVec& b) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> a_;
};

// Roots in F_p of a polynomial given by coefficients c[0] + c[1] x + ... .
// Cantor-Zassenhaus on the product of linear factors; fine for tiny degrees.
std::vector<std::uint64_t> fp_poly_roots(const FpCtx& F, std::vector<std::uint64_t> coeffs);

// Lagrange interpolation through (xs[i], ys[i]); returns the coefficient vector.
FpVec fp_interpolate(const FpCtx& F, const FpVec& xs, const FpVec& ys);

}  // namespace nilorbit
