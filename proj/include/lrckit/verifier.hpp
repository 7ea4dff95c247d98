#pragma once

#include <vector>

#include "lrckit/bounds.hpp"
#include "lrckit/generator_view.hpp"
#include "lrckit/lrc.hpp"

namespace lrckit::verifier {

// Hard cap on exhaustive subset enumeration (2^n subsets).
inline constexpr int kMaxNodesExhaustive = 24;

/// Exact minimum distance of a vector-linear code: n minus the size of the
/// largest node subset whose columns have rank below the file size.
/// Enumerates subsets by decreasing size and stops at the first deficient
/// one. Throws SizeGuardError beyond kMaxNodesExhaustive nodes.
int exact_distance(const GeneratorView& gen);

/// Smallest number of other nodes whose columns span node i's columns
/// (i 1-based), searched by increasing cardinality. Returns n as a sentinel
/// when no proper subset works.
int exact_locality(const GeneratorView& gen, int node);

struct CertifyReport {
    int n = 0, k = 0, r = 0;
    int distance = 0;
    long long bound = 0;
    std::vector<int> per_node_locality;
    int locality = 0;  // max over nodes
    bounds::Rational rate;
    bool bound_tight_expected = true;
    // d >= n-k+1 always (any k nodes decode); d == bound required only when
    // (r+1) does not divide k, the regime where the bound is attained
    bool distance_ok = false;
    bool locality_ok = false;  // every node repairable from r others
    bool any_k_ok = false;     // every k-subset of nodes reaches full rank
    bool pass = false;
};

/// Build the explicit LRC for the given parameters and check it end to end
/// against the exhaustive oracles and the distance bound.
CertifyReport certify(const CodeParams& params);

}  // namespace lrckit::verifier
