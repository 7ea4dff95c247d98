#include "lrckit/flownet.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "lrckit/bounds.hpp"
#include "lrckit/errors.hpp"

namespace lrckit::flownet {

using gf::Matrix;
using gf::sym;

std::string FlowNet::vertex_name(int v) const {
    if (v == 0) return "X";
    if (v <= num_groups) return "Gamma" + std::to_string(v);
    if (v <= num_groups + n) return "Y" + std::to_string(v - num_groups) + "in";
    if (v <= num_groups + 2 * n) return "Y" + std::to_string(v - num_groups - n) + "out";
    return "DC" + std::to_string(v - num_groups - 2 * static_cast<int>(n));
}

FlowNet build_gadget(long long n, long long r, long long d, long long alpha, long long M) {
    if (n < 1 || r < 1 || M < 1 || alpha < 1)
        throw std::invalid_argument("n, r, M, alpha must be positive");
    if (n % (r + 1) != 0) throw std::invalid_argument("(r+1) must divide n");
    if (d < 1) throw std::invalid_argument("distance must be at least 1");
    if (r > n - d) throw std::invalid_argument("hypothesis r <= n - d violated");

    FlowNet net;
    net.n = n;
    net.r = r;
    net.M = M;
    net.alpha = alpha;
    net.d = d;
    net.num_groups = static_cast<int>(n / (r + 1));
    net.ratio_is_integer = (n - d + 1) % (r + 1) == 0;

    const long long picks = n - d + 1;
    double estimate = 1;
    for (long long i = 1; i <= picks; ++i) estimate = estimate * (n - picks + i) / i;
    if (estimate > 2e6)
        throw SizeGuardError("collector count C(n, n-d+1) too large to enumerate");
    std::vector<int> comb(picks);
    for (long long i = 0; i < picks; ++i) comb[i] = static_cast<int>(i) + 1;
    while (true) {
        net.collectors.push_back(comb);
        long long i = picks - 1;
        while (i >= 0 && comb[i] == i + n - picks + 1) --i;
        if (i < 0) break;
        ++comb[i];
        for (long long j = i + 1; j < picks; ++j) comb[j] = comb[j - 1] + 1;
    }
    net.num_collectors = static_cast<long long>(net.collectors.size());

    for (int g = 1; g <= net.num_groups; ++g) net.edges.push_back({net.source(), net.gamma(g), r * alpha});
    for (int i = 1; i <= n; ++i) {
        const int g = (i - 1) / static_cast<int>(r + 1) + 1;
        net.edges.push_back({net.gamma(g), net.y_in(i), r * alpha});
    }
    for (int i = 1; i <= n; ++i) net.edges.push_back({net.y_in(i), net.y_out(i), alpha});
    for (int t = 1; t <= net.num_collectors; ++t)
        for (int i : net.collectors[t - 1]) net.edges.push_back({net.y_out(i), net.dc(t), alpha});
    return net;
}

FlowNet build_flownet(long long n, long long r, long long M, long long alpha) {
    if (n < 1 || r < 1 || M < 1 || alpha < 1)
        throw std::invalid_argument("n, r, M, alpha must be positive");
    const long long d = bounds::distance_bound({n, r, M, alpha});
    if (d < 1) throw std::invalid_argument("distance bound is below 1; M too large");
    return build_gadget(n, r, d, alpha, M);
}

namespace {

// Edmonds-Karp on an adjacency-list residual graph.
struct Residual {
    struct E {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<E>> adj;

    explicit Residual(int vertices) : adj(vertices) {}
    void add(int u, int v, long long cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (true) {
            std::vector<int> prev_v(adj.size(), -1), prev_e(adj.size(), -1);
            std::deque<int> q{s};
            prev_v[s] = s;
            while (!q.empty() && prev_v[t] == -1) {
                const int u = q.front();
                q.pop_front();
                for (std::size_t e = 0; e < adj[u].size(); ++e) {
                    const E& ed = adj[u][e];
                    if (ed.cap > 0 && prev_v[ed.to] == -1) {
                        prev_v[ed.to] = u;
                        prev_e[ed.to] = static_cast<int>(e);
                        q.push_back(ed.to);
                    }
                }
            }
            if (prev_v[t] == -1) return flow;
            long long push = -1;
            for (int v = t; v != s; v = prev_v[v]) {
                const E& ed = adj[prev_v[v]][prev_e[v]];
                push = push < 0 ? ed.cap : std::min(push, ed.cap);
            }
            for (int v = t; v != s; v = prev_v[v]) {
                E& ed = adj[prev_v[v]][prev_e[v]];
                ed.cap -= push;
                adj[v][ed.rev].cap += push;
            }
            flow += push;
        }
    }
};

}  // namespace

long long max_flow_to_dc(const FlowNet& net, int t) {
    if (t < 1 || t > net.num_collectors) throw std::out_of_range("collector id");
    Residual res(net.num_vertices());
    for (const FlowEdge& e : net.edges) res.add(e.from, e.to, e.cap);
    return res.run(net.source(), net.dc(t));
}

long long min_cut_all_dcs(const FlowNet& net) {
    long long best = -1;
    for (int t = 1; t <= net.num_collectors; ++t) {
        const long long f = max_flow_to_dc(net, t);
        best = best < 0 ? f : std::min(best, f);
    }
    return best;
}

long long multicast_capacity(long long n, long long r, long long M, long long alpha) {
    const long long d = bounds::distance_bound({n, r, M, alpha});
    const long long picks = n - d + 1;
    const long long covered_groups = picks / (r + 1);
    const long long cap = (picks - covered_groups) * alpha;
    if (cap != bounds::ceil_div(M, alpha) * alpha)
        throw std::logic_error("capacity formula mismatch; parameters outside the closed-form regime");
    return cap;
}

namespace {

Matrix random_matrix(std::shared_ptr<const gf::Field> field, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
    Matrix m(field, rows, cols);
    std::uniform_int_distribution<std::uint32_t> dist(0, field->order() - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<sym>(dist(rng));
    return m;
}

}  // namespace

RlncTrial run_rlnc_trial(const FlowNet& net, std::shared_ptr<const gf::Field> field,
                         std::uint64_t seed) {
    RlncTrial trial;
    trial.field = std::move(field);
    trial.n = net.n;
    trial.r = net.r;
    trial.M = net.M;
    trial.alpha = net.alpha;
    trial.d = net.d;

    std::mt19937_64 rng(seed);
    const std::size_t ra = static_cast<std::size_t>(net.r * net.alpha);
    for (int g = 0; g < net.num_groups; ++g)
        trial.w.push_back(random_matrix(trial.field, net.M, ra, rng));
    for (long long i = 0; i < net.n; ++i)
        trial.a.push_back(random_matrix(trial.field, ra, net.alpha, rng));

    // composite per-node encodings f_i = w[g(i)] * a[i]
    std::vector<Matrix> f;
    f.reserve(net.n);
    for (long long i = 0; i < net.n; ++i) {
        const int g = static_cast<int>(i / (net.r + 1));
        f.push_back(trial.w[g] * trial.a[i]);
    }

    // global requirement: every collector's stacked columns reach rank M
    for (int t = 1; t <= net.num_collectors; ++t) {
        const auto& members = net.collectors[t - 1];
        Matrix stack(trial.field, net.M, members.size() * net.alpha);
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
            const Matrix& fi = f[members[mi] - 1];
            for (std::size_t row = 0; row < stack.rows(); ++row)
                for (long long c = 0; c < net.alpha; ++c)
                    stack(row, mi * net.alpha + c) = fi(row, c);
        }
        if (gf::rank_destructive(stack) < static_cast<std::size_t>(net.M))
            trial.failed_dcs.push_back(t);
    }

    // local requirement: every r-subset of a group stacks to a full-rank
    // r*alpha x r*alpha matrix
    for (int g = 1; g <= net.num_groups; ++g) {
        const int base = (g - 1) * static_cast<int>(net.r + 1);
        for (int excluded = base + 1; excluded <= base + net.r + 1; ++excluded) {
            Matrix stack(trial.field, ra, ra);
            std::size_t col = 0;
            for (int j = base + 1; j <= base + net.r + 1; ++j) {
                if (j == excluded) continue;
                const Matrix& aj = trial.a[j - 1];
                for (std::size_t row = 0; row < ra; ++row)
                    for (long long c = 0; c < net.alpha; ++c) stack(row, col + c) = aj(row, c);
                col += net.alpha;
            }
            if (gf::rank_destructive(stack) < ra) trial.failed_frs.push_back({g, excluded});
        }
    }
    return trial;
}

RlncReport rlnc_verify(const FlowNet& net, long long q, long long trials, std::uint64_t seed) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    int p = 0;
    while ((1LL << p) < q) ++p;
    if ((1LL << p) != q || p > 16)
        throw std::invalid_argument("field order must be a power of two up to 2^16");
    if (net.M % net.alpha != 0)
        throw std::invalid_argument("rlnc_verify needs alpha | M (capacity = M)");

    auto field = gf::Field::make(p);
    RlncReport rep;
    rep.q = q;
    rep.trials = trials;
    std::mt19937_64 seeder(seed);
    for (long long t = 0; t < trials; ++t) {
        rep.trial_seeds.push_back(seeder());
        const RlncTrial trial = run_rlnc_trial(net, field, rep.trial_seeds.back());
        const bool ok = trial.passed();
        rep.trial_passed.push_back(ok);
        if (ok) ++rep.successes;
        if (!trial.failed_dcs.empty()) ++rep.dc_failures;
        if (!trial.failed_frs.empty()) ++rep.fr_failures;
    }
    return rep;
}

GeneratorView extract_code(const RlncTrial& trial) {
    if (!trial.passed())
        throw std::invalid_argument("cannot extract a code from a failed trial");
    Matrix mat(trial.field, trial.M, static_cast<std::size_t>(trial.n) * trial.alpha);
    for (long long i = 0; i < trial.n; ++i) {
        const int g = static_cast<int>(i / (trial.r + 1));
        const Matrix fi = trial.w[g] * trial.a[i];
        for (std::size_t row = 0; row < mat.rows(); ++row)
            for (long long c = 0; c < trial.alpha; ++c)
                mat(row, i * trial.alpha + c) = fi(row, c);
    }
    return GeneratorView(std::move(mat), static_cast<int>(trial.n), static_cast<int>(trial.alpha));
}

}  // namespace lrckit::flownet
