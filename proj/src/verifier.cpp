#include "lrckit/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrckit/errors.hpp"

namespace lrckit::verifier {

namespace {

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] != i + n - k + 1) {  // ids are 1-based
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int m) {
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = i + 1;
    return c;
}

}  // namespace

int exact_distance(const GeneratorView& gen) {
    const int n = gen.nodes();
    if (n > kMaxNodesExhaustive)
        throw SizeGuardError("exact_distance enumerates 2^n subsets; n > 24 refused");
    const std::size_t M = gen.file_symbols();

    std::vector<int> all = first_combination(n);
    if (gen.node_rank(all) < M)
        throw std::invalid_argument("generator rank below file size; no code distance");

    for (int m = n - 1; m >= 1; --m) {
        std::vector<int> pick = first_combination(m);
        do {
            if (gen.node_rank(pick) < M) return n - m;
        } while (next_combination(pick, n));
    }
    return n;  // even the empty set is deficient for M >= 1
}

int exact_locality(const GeneratorView& gen, int node) {
    const int n = gen.nodes();
    if (n > kMaxNodesExhaustive)
        throw SizeGuardError("exact_locality enumerates subsets; n > 24 refused");
    if (node < 1 || node > n) throw std::out_of_range("node id");

    std::vector<int> others;
    for (int i = 1; i <= n; ++i)
        if (i != node) others.push_back(i);

    for (int l = 1; l <= n - 1; ++l) {
        std::vector<int> idx = first_combination(l);  // positions into `others`
        do {
            std::vector<int> subset;
            subset.reserve(l + 1);
            for (int p : idx) subset.push_back(others[p - 1]);
            const std::size_t base = gen.node_rank(subset);
            subset.push_back(node);
            // node's columns lie in the span iff they add no rank
            if (gen.node_rank(subset) == base) return l;
        } while (next_combination(idx, n - 1));
    }
    return n;  // not a function of the rest
}

CertifyReport certify(const CodeParams& params) {
    CertifyReport rep;
    rep.n = params.n;
    rep.k = params.k;
    rep.r = params.r;
    rep.bound_tight_expected = params.bound_tight_expected();
    rep.rate = bounds::effective_rate(params);

    LrcCode code(params);
    GeneratorView gen = code.generator_view();

    rep.distance = exact_distance(gen);
    rep.bound = bounds::distance_bound({params.n, params.r, params.file_symbols(),
                                        params.node_capacity()});
    rep.per_node_locality.resize(params.n);
    for (int i = 1; i <= params.n; ++i) rep.per_node_locality[i - 1] = exact_locality(gen, i);
    rep.locality = *std::max_element(rep.per_node_locality.begin(), rep.per_node_locality.end());

    const std::size_t M = gen.file_symbols();
    rep.any_k_ok = true;
    std::vector<int> pick = first_combination(params.k);
    do {
        if (gen.node_rank(pick) < M) {
            rep.any_k_ok = false;
            break;
        }
    } while (next_combination(pick, params.n));

    rep.distance_ok = rep.distance >= params.n - params.k + 1 &&
                      (!rep.bound_tight_expected || rep.distance == rep.bound);
    rep.locality_ok = rep.locality <= params.r;
    rep.pass = rep.distance_ok && rep.locality_ok && rep.any_k_ok;
    return rep;
}

}  // namespace lrckit::verifier
