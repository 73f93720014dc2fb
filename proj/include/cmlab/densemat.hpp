#ifndef CMLAB_DENSEMAT_HPP
#define CMLAB_DENSEMAT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cmlab/fp.hpp"

namespace cmlab {

/// Dense row-major matrix over F_p.
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<std::uint32_t> a;

    DenseMat() = default;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::uint32_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::uint32_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

DenseMat mat_mul(const PrimeField& fp, const DenseMat& x, const DenseMat& y);
DenseMat mat_transpose(const DenseMat& x);
std::vector<std::uint32_t> mat_apply(const PrimeField& fp, const DenseMat& x,
                                     const std::vector<std::uint32_t>& v);

int mat_rank(const PrimeField& fp, DenseMat m);

/// Basis of the right kernel, one column vector per basis element.
std::vector<std::vector<std::uint32_t>> mat_kernel(const PrimeField& fp, DenseMat m);

/// Incrementally maintained row space with reduced echelon rows; used both
/// for span membership and for solving against a fixed generating set.
class RowSpan {
public:
    explicit RowSpan(const PrimeField& fp, int width) : fp_(fp), width_(width) {}

    /// Reduces v against the span; returns false (and absorbs the reduced
    /// vector) when v was independent.
    bool contains_or_insert(std::vector<std::uint32_t> v);
    bool contains(std::vector<std::uint32_t> v) const;
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(std::vector<std::uint32_t>& v) const;

    PrimeField fp_;
    int width_;
    std::vector<std::vector<std::uint32_t>> rows_;  // echelon, pivot-normalized
    std::vector<int> pivots_;
};

/// Solves A x = b where the columns of A are `gens`.
std::optional<std::vector<std::uint32_t>> solve_in_span(
    const PrimeField& fp, const std::vector<std::vector<std::uint32_t>>& gens,
    const std::vector<std::uint32_t>& b);

/// Repeated solves against a fixed generating set: echelonizes once with an
/// augmented coefficient block, then each solve is a reduction.
class SpanSolver {
public:
    SpanSolver(const PrimeField& fp, const std::vector<std::vector<std::uint32_t>>& gens);
    std::optional<std::vector<std::uint32_t>> solve(std::vector<std::uint32_t> b) const;

private:
    PrimeField fp_;
    int width_ = 0, ngens_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;    // echelon vectors
    std::vector<std::vector<std::uint32_t>> coeffs_;  // matching combinations
    std::vector<int> pivots_;
};

} // namespace cmlab

#endif
