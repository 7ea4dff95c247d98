#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrckit/generator_view.hpp"
#include "lrckit/lrc.hpp"

namespace lrckit::bounds {

/// Exact reduced fraction with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d);
    bool operator==(const Rational&) const = default;
    std::string str() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

long long floor_div(long long a, long long b);  // b > 0
long long ceil_div(long long a, long long b);   // b > 0

struct BoundQuery {
    long long n = 0;
    long long r = 0;
    long long M = 0;
    long long alpha = 0;
};

/// d <= n - ceil(M/alpha) - ceil(M/(r*alpha)) + 2, the universal distance
/// limit for any code of length n with all-symbol locality r and per-node
/// capacity alpha storing M symbols.
long long distance_bound(const BoundQuery& q);

/// Scalar specialization (M = k, alpha = 1): d <= n - k - ceil(k/r) + 2.
long long scalar_bound(long long n, long long k, long long r);

/// M / (n * alpha) as an exact fraction; equals r/(r+1) * k/n for the
/// explicit construction.
Rational effective_rate(const CodeParams& params);

struct WitnessStep {
    std::vector<int> added;     // node ids joined this step
    long long size_delta = 0;   // s_i
    long long entropy_delta = 0;  // h_i, rank units
};

/// Outcome of the greedy set-builder: a set of nodes whose joint rank is
/// below the file size, certifying d <= n - |nodes|.
struct WitnessResult {
    std::vector<int> nodes;
    long long entropy = 0;
    int exit_line = 0;  // 9: no partial subset fit; 12: exited after a partial add
    long long bound = 0;
    std::vector<WitnessStep> steps;
};

/// Greedy witness construction over disjoint (r+1)-groups: repeatedly join
/// whole groups while the joint rank stays below M; on the first group that
/// would reach M, join the largest proper subset that still fits (lowest
/// node ids first, lexicographic among equal sizes) and stop. The rank of
/// node columns acts as the entropy oracle, valid for (vector-)linear codes.
WitnessResult witness_search(const GeneratorView& gen,
                             const std::vector<std::vector<int>>& groups);

struct IdentityReport {
    long long trials = 0;
    long long failures = 0;
    std::vector<std::string> failure_samples;  // at most a handful
};

/// Property-check the three ceiling/floor identities used by the capacity
/// derivation, on random integers and exact rationals.
IdentityReport check_ceiling_identities(long long trials, std::uint64_t seed = 1);

}  // namespace lrckit::bounds
