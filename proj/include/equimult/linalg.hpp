#ifndef EQUIMULT_LINALG_HPP
#define EQUIMULT_LINALG_HPP

#include <optional>
#include <vector>

#include "field.hpp"

namespace equimult {

// Small dense exact matrices; enough linear algebra for tangent spaces,
// stratum extraction, and the truncation oracle.
template <class K>
class matrix {
  public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols, field_ctx<K> ctx)
        : rows_(rows), cols_(cols), ctx_(ctx), a_(rows * cols, ctx.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    field_ctx<K> ctx() const { return ctx_; }

    K& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const K& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const std::vector<K>& row) {
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && at(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            K inv = at(r, c).inv();
            for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                K f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        matrix m(*this);
        return m.rref().size();
    }

    // Basis of the right kernel {x : Ax = 0}.
    std::vector<std::vector<K>> kernel_basis() const {
        matrix m(*this);
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(cols_, ctx_.zero());
            v[f] = ctx_.one();
            for (std::size_t pi = 0; pi < pivots.size(); ++pi)
                v[pivots[pi]] = -m.at(pi, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Solve Ax = b; nullopt if inconsistent. Returns one solution.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        matrix m(rows_, cols_ + 1, ctx_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
            m.at(i, cols_) = b[i];
        }
        auto pivots = m.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<K> x(cols_, ctx_.zero());
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = m.at(pi, cols_);
        return x;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    field_ctx<K> ctx_{};
    std::vector<K> a_;
};

// Row-span basis in RREF form (canonical). Input rows need not be independent.
template <class K>
std::vector<std::vector<K>> row_space_basis(const std::vector<std::vector<K>>& rows,
                                            std::size_t cols, field_ctx<K> ctx) {
    matrix<K> m(0, cols, ctx);
    for (const auto& r : rows) m.append_row(r);
    auto pivots = m.rref();
    std::vector<std::vector<K>> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::vector<K> r(cols, ctx.zero());
        for (std::size_t j = 0; j < cols; ++j) r[j] = m.at(i, j);
        out.push_back(std::move(r));
    }
    return out;
}

// Invert a square matrix; contract error if singular.
template <class K>
matrix<K> inverse(const matrix<K>& a) {
    std::size_t n = a.rows();
    if (n != a.cols()) throw contract_error("inverse(): matrix not square");
    matrix<K> m(n, 2 * n, a.ctx());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, n + i) = a.ctx().one();
    }
    auto pivots = m.rref();
    if (pivots.size() != n || pivots[n - 1] != n - 1)
        throw contract_error("inverse(): singular matrix");
    matrix<K> r(n, n, a.ctx());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = m.at(i, n + j);
    return r;
}

}  // namespace equimult

#endif
