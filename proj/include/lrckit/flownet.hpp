#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lrckit/generator_view.hpp"

namespace lrckit::flownet {

struct FlowEdge {
    int from = 0;
    int to = 0;
    long long cap = 0;
};

/// The locality-aware flow gadget: source X feeds one Gamma vertex per
/// (r+1)-group over capacity r*alpha edges; each Gamma feeds its group's
/// Y_in vertices at r*alpha; every Y_in -> Y_out link carries alpha; each of
/// the T = C(n, n-d+1) data collectors taps a distinct (n-d+1)-subset of
/// Y_out vertices at alpha per tap. No edges cross groups.
struct FlowNet {
    long long n = 0, r = 0, M = 0, alpha = 0;
    long long d = 0;  // distance_bound(n, r, M, alpha)
    int num_groups = 0;
    long long num_collectors = 0;
    std::vector<FlowEdge> edges;
    std::vector<std::vector<int>> collectors;  // F_t, 1-based node ids, lexicographic
    // The capacity analysis notes (n-d+1)/(r+1) should never be an integer;
    // recorded rather than assumed.
    bool ratio_is_integer = false;

    int num_vertices() const { return 1 + num_groups + 2 * static_cast<int>(n) +
                                      static_cast<int>(num_collectors); }
    int source() const { return 0; }
    int gamma(int g) const { return g; }                                   // g 1-based
    int y_in(int i) const { return num_groups + i; }                       // i 1-based
    int y_out(int i) const { return num_groups + static_cast<int>(n) + i; }
    int dc(int t) const { return num_groups + 2 * static_cast<int>(n) + t; }  // t 1-based
    std::string vertex_name(int v) const;
};

/// The gadget for an explicit distance d. Requires (r+1) | n and r <= n - d
/// (so every collector spans at least one whole group).
FlowNet build_gadget(long long n, long long r, long long d, long long alpha, long long M);

/// The gadget with d fixed to the distance bound for (n, r, M, alpha), the
/// regime of the capacity result.
FlowNet build_flownet(long long n, long long r, long long M, long long alpha);

/// Max-flow from X to one collector (shortest augmenting paths, deterministic
/// adjacency order), in symbol units.
long long max_flow_to_dc(const FlowNet& net, int t);

/// min over all T collectors of the X -> DC_t max-flow.
long long min_cut_all_dcs(const FlowNet& net);

/// Closed-form multicast capacity (n-d+1 - floor((n-d+1)/(r+1))) * alpha;
/// verifies it equals ceil(M/alpha)*alpha and throws std::logic_error outside
/// that regime.
long long multicast_capacity(long long n, long long r, long long M, long long alpha);

/// One random linear network coding assignment on the gadget. Random
/// coefficients sit on the X->Gamma edges (one M x r*alpha matrix per group)
/// and on the Y_in->Y_out edges (one r*alpha x alpha matrix per node);
/// forwarding edges of equal capacity carry their input unchanged. The
/// composite per-node map is w[group(i)] * a[i].
struct RlncTrial {
    std::shared_ptr<const gf::Field> field;
    long long n = 0, r = 0, M = 0, alpha = 0, d = 0;
    std::vector<gf::Matrix> w;  // per group, M x r*alpha
    std::vector<gf::Matrix> a;  // per node, r*alpha x alpha
    std::vector<int> failed_dcs;                    // collectors lacking full rank
    std::vector<std::pair<int, int>> failed_frs;    // (group, excluded node)
    bool passed() const { return failed_dcs.empty() && failed_frs.empty(); }
};

RlncTrial run_rlnc_trial(const FlowNet& net, std::shared_ptr<const gf::Field> field,
                         std::uint64_t seed);

struct RlncReport {
    long long q = 0;
    long long trials = 0;
    long long successes = 0;
    long long dc_failures = 0;  // trials with at least one collector failure
    long long fr_failures = 0;  // trials with at least one local full-rank failure
    std::vector<bool> trial_passed;
    std::vector<std::uint64_t> trial_seeds;  // feed run_rlnc_trial to replay one
    double success_rate() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

/// Runs seeded RLNC trials and checks the global decodability of every
/// collector plus the local full-rank condition of every r-subset of every
/// group. Requires alpha | M so the multicast capacity equals M exactly.
RlncReport rlnc_verify(const FlowNet& net, long long q, long long trials, std::uint64_t seed);

/// Composite per-node encoding functions of a passing trial, as a generator
/// view the verifier can certify (distance >= d, locality <= r).
GeneratorView extract_code(const RlncTrial& trial);

}  // namespace lrckit::flownet
