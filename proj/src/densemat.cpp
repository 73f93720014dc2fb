#include "cmlab/densemat.hpp"

#include <stdexcept>

namespace cmlab {

DenseMat mat_mul(const PrimeField& fp, const DenseMat& x, const DenseMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    DenseMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::uint32_t v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.at(k, j)) r.at(i, j) = fp.add(r.at(i, j), fp.mul(v, y.at(k, j)));
        }
    return r;
}

DenseMat mat_transpose(const DenseMat& x) {
    DenseMat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

std::vector<std::uint32_t> mat_apply(const PrimeField& fp, const DenseMat& x,
                                     const std::vector<std::uint32_t>& v) {
    if (static_cast<int>(v.size()) != x.cols) throw std::invalid_argument("mat_apply: shape");
    std::vector<std::uint32_t> r(static_cast<std::size_t>(x.rows), 0);
    for (int i = 0; i < x.rows; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < x.cols; ++j) {
            acc += static_cast<std::uint64_t>(x.at(i, j)) * v[static_cast<std::size_t>(j)];
            if ((j & 15) == 15) acc %= fp.p();
        }
        r[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(acc % fp.p());
    }
    return r;
}

namespace {

// in-place row echelon; returns pivot column per pivot row
std::vector<int> echelon(const PrimeField& fp, DenseMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        std::uint32_t inv = fp.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = fp.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || !m.at(i, c)) continue;
            std::uint32_t f = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = fp.sub(m.at(i, j), fp.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int mat_rank(const PrimeField& fp, DenseMat m) {
    return static_cast<int>(echelon(fp, m).size());
}

std::vector<std::vector<std::uint32_t>> mat_kernel(const PrimeField& fp, DenseMat m) {
    int n = m.cols;
    std::vector<int> pivots = echelon(fp, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::uint32_t coeff = m.at(static_cast<int>(r), f);
            v[static_cast<std::size_t>(pivots[r])] = fp.neg(coeff);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void RowSpan::reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = v[static_cast<std::size_t>(pivots_[r])];
        if (!c) continue;
        for (int j = 0; j < width_; ++j)
            v[static_cast<std::size_t>(j)] =
                fp_.sub(v[static_cast<std::size_t>(j)], fp_.mul(c, rows_[r][static_cast<std::size_t>(j)]));
    }
}

bool RowSpan::contains(std::vector<std::uint32_t> v) const {
    reduce(v);
    for (std::uint32_t x : v)
        if (x) return false;
    return true;
}

bool RowSpan::contains_or_insert(std::vector<std::uint32_t> v) {
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < width_; ++j)
        if (v[static_cast<std::size_t>(j)]) { pivot = j; break; }
    if (pivot < 0) return true;
    std::uint32_t inv = fp_.inv(v[static_cast<std::size_t>(pivot)]);
    for (int j = 0; j < width_; ++j)
        v[static_cast<std::size_t>(j)] = fp_.mul(v[static_cast<std::size_t>(j)], inv);
    // keep earlier rows reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = rows_[r][static_cast<std::size_t>(pivot)];
        if (!c) continue;
        for (int j = 0; j < width_; ++j)
            rows_[r][static_cast<std::size_t>(j)] =
                fp_.sub(rows_[r][static_cast<std::size_t>(j)], fp_.mul(c, v[static_cast<std::size_t>(j)]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return false;
}

std::optional<std::vector<std::uint32_t>> solve_in_span(
    const PrimeField& fp, const std::vector<std::vector<std::uint32_t>>& gens,
    const std::vector<std::uint32_t>& b) {
    if (gens.empty()) {
        for (std::uint32_t x : b)
            if (x) return std::nullopt;
        return std::vector<std::uint32_t>{};
    }
    int n = static_cast<int>(gens.front().size());
    int m = static_cast<int>(gens.size());
    DenseMat aug(n, m + 1);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) aug.at(i, j) = gens[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (int i = 0; i < n; ++i) aug.at(i, m) = b[static_cast<std::size_t>(i)];
    std::vector<int> pivots = echelon(fp, aug);
    std::vector<std::uint32_t> x(static_cast<std::size_t>(m), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m) return std::nullopt;  // inconsistent
        x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), m);
    }
    return x;
}

} // namespace cmlab

namespace cmlab {

SpanSolver::SpanSolver(const PrimeField& fp, const std::vector<std::vector<std::uint32_t>>& gens)
    : fp_(fp) {
    ngens_ = static_cast<int>(gens.size());
    width_ = gens.empty() ? 0 : static_cast<int>(gens.front().size());
    for (int g = 0; g < ngens_; ++g) {
        std::vector<std::uint32_t> v = gens[static_cast<std::size_t>(g)];
        std::vector<std::uint32_t> c(static_cast<std::size_t>(ngens_), 0);
        c[static_cast<std::size_t>(g)] = 1;
        // reduce against existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::uint32_t f = v[static_cast<std::size_t>(pivots_[r])];
            if (!f) continue;
            for (int j = 0; j < width_; ++j)
                v[static_cast<std::size_t>(j)] = fp_.sub(v[static_cast<std::size_t>(j)],
                                                         fp_.mul(f, rows_[r][static_cast<std::size_t>(j)]));
            for (int j = 0; j < ngens_; ++j)
                c[static_cast<std::size_t>(j)] = fp_.sub(c[static_cast<std::size_t>(j)],
                                                         fp_.mul(f, coeffs_[r][static_cast<std::size_t>(j)]));
        }
        int pivot = -1;
        for (int j = 0; j < width_; ++j)
            if (v[static_cast<std::size_t>(j)]) { pivot = j; break; }
        if (pivot < 0) continue;  // dependent generator
        std::uint32_t inv = fp_.inv(v[static_cast<std::size_t>(pivot)]);
        for (int j = 0; j < width_; ++j)
            v[static_cast<std::size_t>(j)] = fp_.mul(v[static_cast<std::size_t>(j)], inv);
        for (int j = 0; j < ngens_; ++j)
            c[static_cast<std::size_t>(j)] = fp_.mul(c[static_cast<std::size_t>(j)], inv);
        rows_.push_back(std::move(v));
        coeffs_.push_back(std::move(c));
        pivots_.push_back(pivot);
    }
}

std::optional<std::vector<std::uint32_t>> SpanSolver::solve(std::vector<std::uint32_t> b) const {
    std::vector<std::uint32_t> acc(static_cast<std::size_t>(ngens_), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = b[static_cast<std::size_t>(pivots_[r])];
        if (!f) continue;
        for (int j = 0; j < width_; ++j)
            b[static_cast<std::size_t>(j)] = fp_.sub(b[static_cast<std::size_t>(j)],
                                                     fp_.mul(f, rows_[r][static_cast<std::size_t>(j)]));
        for (int j = 0; j < ngens_; ++j)
            acc[static_cast<std::size_t>(j)] = fp_.add(acc[static_cast<std::size_t>(j)],
                                                       fp_.mul(f, coeffs_[r][static_cast<std::size_t>(j)]));
    }
    for (std::uint32_t x : b)
        if (x) return std::nullopt;
    return acc;
}

} // namespace cmlab
