#include "lrckit/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace lrckit::bounds {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

long long distance_bound(const BoundQuery& q) {
    if (q.n < 1 || q.r < 1 || q.M < 1 || q.alpha < 1)
        throw std::invalid_argument("bound query needs positive n, r, M, alpha");
    return q.n - ceil_div(q.M, q.alpha) - ceil_div(q.M, q.r * q.alpha) + 2;
}

long long scalar_bound(long long n, long long k, long long r) {
    if (n < 1 || k < 1 || r < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n, r >= 1");
    return n - k - ceil_div(k, r) + 2;
}

Rational effective_rate(const CodeParams& params) {
    return Rational(params.file_symbols(),
                    static_cast<long long>(params.n) * params.node_capacity());
}

namespace {

// combinations of `pool` of size `want`, lexicographic, smallest ids first
bool next_subset(std::vector<int>& pick, const std::vector<int>& pool, std::size_t want) {
    if (pick.empty()) {
        if (pool.size() < want) return false;
        pick.assign(pool.begin(), pool.begin() + want);
        return true;
    }
    const std::size_t n = pool.size();
    std::vector<std::size_t> idx(pick.size());
    for (std::size_t i = 0; i < pick.size(); ++i)
        idx[i] = std::lower_bound(pool.begin(), pool.end(), pick[i]) - pool.begin();
    for (std::size_t i = want; i-- > 0;) {
        if (idx[i] != i + n - want) {
            ++idx[i];
            for (std::size_t j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
            for (std::size_t j = 0; j < want; ++j) pick[j] = pool[idx[j]];
            return true;
        }
    }
    return false;
}

}  // namespace

WitnessResult witness_search(const GeneratorView& gen,
                             const std::vector<std::vector<int>>& groups) {
    const int n = gen.nodes();
    const long long M = static_cast<long long>(gen.file_symbols());

    std::vector<int> group_of(n + 1, 0);
    int covered = 0;
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (int id : groups[g]) {
            if (id < 1 || id > n || group_of[id] != 0)
                throw std::invalid_argument("groups must partition the node set");
            group_of[id] = static_cast<int>(g) + 1;
            ++covered;
        }
    if (covered != n) throw std::invalid_argument("groups must partition the node set");

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    if (static_cast<long long>(gen.node_rank(all)) < M)
        throw std::invalid_argument("generator does not reach full rank M");

    WitnessResult res;
    std::set<int> S;
    long long H = 0;
    auto rank_of_union = [&](const std::vector<int>& extra) {
        std::vector<int> ids(S.begin(), S.end());
        ids.insert(ids.end(), extra.begin(), extra.end());
        return static_cast<long long>(gen.node_rank(ids));
    };

    while (H < M) {
        int j = 0;
        for (int cand = 1; cand <= n; ++cand)
            if (!S.count(cand)) {
                j = cand;
                break;
            }
        if (j == 0) break;  // unreachable for full-rank generators

        std::vector<int> gamma = groups[group_of[j] - 1];
        std::sort(gamma.begin(), gamma.end());
        std::vector<int> fresh;
        for (int id : gamma)
            if (!S.count(id)) fresh.push_back(id);

        const long long with_group = rank_of_union(fresh);
        if (with_group < M) {
            res.steps.push_back({fresh, static_cast<long long>(fresh.size()), with_group - H});
            S.insert(fresh.begin(), fresh.end());
            H = with_group;
            continue;
        }

        // largest proper subset that still keeps the rank below M,
        // lexicographically first among maximum-cardinality choices
        std::vector<int> best;
        long long best_rank = 0;
        for (std::size_t want = fresh.size() - 1; want >= 1 && best.empty(); --want) {
            std::vector<int> pick;
            while (next_subset(pick, fresh, want)) {
                const long long rk = rank_of_union(pick);
                if (rk < M) {
                    best = pick;
                    best_rank = rk;
                    break;
                }
            }
        }
        if (best.empty()) {
            res.exit_line = 9;
        } else {
            res.steps.push_back({best, static_cast<long long>(best.size()), best_rank - H});
            S.insert(best.begin(), best.end());
            H = best_rank;
            res.exit_line = 12;
        }
        break;
    }

    res.nodes.assign(S.begin(), S.end());
    res.entropy = H;
    res.bound = n - static_cast<long long>(S.size());
    return res;
}

namespace {

// exact ceil(a/b) for a rational given as (num, den), den > 0
long long rat_ceil(long long num, long long den) { return ceil_div(num, den); }

}  // namespace

IdentityReport check_ceiling_identities(long long trials, std::uint64_t seed) {
    IdentityReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> small(1, 1000);
    std::uniform_int_distribution<long long> num_dist(-1000000, 1000000);

    auto record = [&](const std::string& what) {
        ++rep.failures;
        if (rep.failure_samples.size() < 5) rep.failure_samples.push_back(what);
    };

    for (long long t = 0; t < trials; ++t) {
        const long long n = small(rng);
        const long long m = small(rng);
        const long long xn = num_dist(rng);
        const long long xd = small(rng);

        // (i) floor(n/m) = ceil((n+1)/m) - 1, positive integers
        if (floor_div(n, m) != ceil_div(n + 1, m) - 1)
            record("(i) n=" + std::to_string(n) + " m=" + std::to_string(m));

        // (ii) ceil((x+m)/n) = ceil((ceil(x)+m)/n), x = xn/xd
        {
            const long long lhs = rat_ceil(xn + m * xd, xd * n);
            const long long rhs = ceil_div(rat_ceil(xn, xd) + m, n);
            if (lhs != rhs)
                record("(ii) x=" + std::to_string(xn) + "/" + std::to_string(xd) +
                       " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }

        // (iii) ceil(ceil(x/m)/n) = ceil(x/(n*m))
        {
            const long long lhs = ceil_div(rat_ceil(xn, xd * m), n);
            const long long rhs = rat_ceil(xn, xd * n * m);
            if (lhs != rhs)
                record("(iii) x=" + std::to_string(xn) + "/" + std::to_string(xd) +
                       " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
    return rep;
}

}  // namespace lrckit::bounds
