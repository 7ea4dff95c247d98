#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lrckit/gf.hpp"

namespace lrckit::gf {

enum class SolveStatus { ok, inconsistent, rank_deficient };
struct Solution;

/// Dense row-major matrix over a GF(2^p) field. Elimination uses
/// first-nonzero pivoting in deterministic column order (finite fields have
/// no magnitudes to prefer).
class Matrix {
public:
    Matrix(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols);
    static Matrix identity(std::shared_ptr<const Field> field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }

    sym operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    sym& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::span<const sym> row(std::size_t r) const { return {&a_[r * cols_], cols_}; }
    std::span<sym> row(std::size_t r) { return {&a_[r * cols_], cols_}; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;

    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;

    /// Rank via in-place forward elimination on a copy.
    std::size_t rank() const;

    /// Inverse of a square matrix, or nullopt if singular.
    std::optional<Matrix> inverse() const;

    /// Solve A * X = B by Gauss-Jordan reduction of [A | B]. A singular or
    /// inconsistent system is reported in the status, never thrown.
    Solution solve(const Matrix& rhs) const;

private:
    std::shared_ptr<const Field> field_;
    std::size_t rows_, cols_;
    std::vector<sym> a_;
};

struct Solution {
    SolveStatus status;
    std::size_t rank = 0;
    Matrix x;  // meaningful only when status == ok
};

/// Forward elimination in place; returns the rank. Destroys the matrix.
std::size_t rank_destructive(Matrix& m);

}  // namespace lrckit::gf
