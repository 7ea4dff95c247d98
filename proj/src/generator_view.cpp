#include "lrckit/generator_view.hpp"

#include <stdexcept>

namespace lrckit {

GeneratorView::GeneratorView(gf::Matrix mat, int nodes, int alpha)
    : mat_(std::move(mat)), cols_t_(mat_.transposed()), nodes_(nodes), alpha_(alpha) {
    if (nodes < 1 || alpha < 1) throw std::invalid_argument("nodes and alpha must be positive");
    if (mat_.cols() != static_cast<std::size_t>(nodes) * static_cast<std::size_t>(alpha))
        throw std::invalid_argument("generator column count != nodes * alpha");
}

gf::Matrix GeneratorView::node_columns(const std::vector<int>& node_ids) const {
    std::vector<std::size_t> rows;
    rows.reserve(node_ids.size() * alpha_);
    for (int id : node_ids) {
        if (id < 1 || id > nodes_) throw std::out_of_range("node id");
        for (int a = 0; a < alpha_; ++a)
            rows.push_back(static_cast<std::size_t>(id - 1) * alpha_ + a);
    }
    return cols_t_.select_rows(rows);
}

std::size_t GeneratorView::node_rank(const std::vector<int>& node_ids) const {
    gf::Matrix sub = node_columns(node_ids);
    return gf::rank_destructive(sub);
}

}  // namespace lrckit
