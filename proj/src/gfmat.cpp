#include "lrckit/gfmat.hpp"

#include <stdexcept>

namespace lrckit::gf {

Matrix::Matrix(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix needs a field");
}

Matrix Matrix::identity(std::shared_ptr<const Field> field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    if (!field_->same(*rhs.field_)) throw FieldMismatchError("matrix product across fields");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t l = 0; l < cols_; ++l) {
            const sym c = (*this)(i, l);
            if (c) field_->mul_add_into(out.row(i), rhs.row(l), c);
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_->same(*rhs.field_) && a_ == rhs.a_;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw std::out_of_range("row index");
        std::copy_n(&a_[idx[i] * cols_], cols_, &out.a_[i * cols_]);
    }
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= cols_) throw std::out_of_range("column index");
            out(r, i) = (*this)(r, idx[i]);
        }
    return out;
}

std::size_t rank_destructive(Matrix& m) {
    const Field& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t pr = pivot_row;
        while (pr < rows && m(pr, col) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != pivot_row)
            for (std::size_t c = col; c < cols; ++c) std::swap(m(pivot_row, c), m(pr, c));
        const sym piv = m(pivot_row, col);
        const sym piv_inv = f.inv(piv);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            const sym v = m(r, col);
            if (v == 0) continue;
            const sym factor = f.mul(v, piv_inv);
            f.mul_add_into(m.row(r).subspan(col), m.row(pivot_row).subspan(col), factor);
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t Matrix::rank() const {
    Matrix copy(*this);
    return rank_destructive(copy);
}

Solution Matrix::solve(const Matrix& rhs) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("rhs row count mismatch");
    if (!field_->same(*rhs.field_)) throw FieldMismatchError("solve across fields");
    const Field& f = *field_;
    const std::size_t w = rhs.cols_;

    // Gauss-Jordan on the augmented matrix [A | B].
    Matrix aug(field_, rows_, cols_ + w);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy_n(&a_[r * cols_], cols_, &aug(r, 0));
        std::copy_n(&rhs.a_[r * w], w, &aug(r, cols_));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t pr = pivot_row;
        while (pr < rows_ && aug(pr, col) == 0) ++pr;
        if (pr == rows_) continue;
        if (pr != pivot_row)
            for (std::size_t c = col; c < aug.cols_; ++c) std::swap(aug(pivot_row, c), aug(pr, c));
        const sym piv_inv = f.inv(aug(pivot_row, col));
        if (aug(pivot_row, col) != 1)
            for (std::size_t c = col; c < aug.cols_; ++c)
                aug(pivot_row, c) = f.mul(aug(pivot_row, c), piv_inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            const sym v = aug(r, col);
            if (v == 0) continue;
            f.mul_add_into(aug.row(r).subspan(col), aug.row(pivot_row).subspan(col), v);
        }
        pivot_col.push_back(col);
        ++pivot_row;
    }
    const std::size_t rank = pivot_row;

    for (std::size_t r = rank; r < rows_; ++r)
        for (std::size_t c = cols_; c < aug.cols_; ++c)
            if (aug(r, c) != 0) return {SolveStatus::inconsistent, rank, Matrix(field_, 0, 0)};

    if (rank < cols_) return {SolveStatus::rank_deficient, rank, Matrix(field_, 0, 0)};

    Matrix x(field_, cols_, w);
    for (std::size_t i = 0; i < rank; ++i)
        std::copy_n(&aug(i, cols_), w, &x(pivot_col[i], 0));
    return {SolveStatus::ok, rank, std::move(x)};
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Solution s = solve(identity(field_, rows_));
    if (s.status != SolveStatus::ok) return std::nullopt;
    return std::move(s.x);
}

}  // namespace lrckit::gf
