#pragma once

#include <vector>

#include "lrckit/gfmat.hpp"

namespace lrckit {

/// A vector-linear code seen as its generator matrix: file_symbols rows by
/// nodes*alpha columns, where node i (1-based) owns the alpha columns
/// [(i-1)*alpha, i*alpha). Row-vector convention: stored = file * mat.
///
/// Keeps a transposed copy so that rank queries over node subsets (the
/// entropy oracle for linear codes) gather contiguous rows.
class GeneratorView {
public:
    GeneratorView(gf::Matrix mat, int nodes, int alpha);

    const gf::Matrix& mat() const { return mat_; }
    int nodes() const { return nodes_; }
    int alpha() const { return alpha_; }
    std::size_t file_symbols() const { return mat_.rows(); }

    /// H(S) for linear codes: rank of the stacked columns of the given nodes,
    /// in field-symbol units. Node ids are 1-based.
    std::size_t node_rank(const std::vector<int>& node_ids) const;

    /// The alpha columns of one node, as an alpha x file_symbols matrix
    /// (rows of the transposed generator).
    gf::Matrix node_columns(const std::vector<int>& node_ids) const;

private:
    gf::Matrix mat_;
    gf::Matrix cols_t_;
    int nodes_;
    int alpha_;
};

}  // namespace lrckit
