#include "lrckit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "lrckit/bounds.hpp"
#include "lrckit/errors.hpp"
#include "lrckit/flownet.hpp"
#include "lrckit/storesim.hpp"
#include "lrckit/verifier.hpp"

namespace lrckit::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

struct Options {
    long long n = 0, k = 0, r = 0, M = 0, alpha = 0;
    int p = 8;
    long long q = 256;
    std::uint64_t seed = 1;
    long long trials = 100;
    long long failures = 10;
    std::string input, out_path, dir, nodes;
    int node = 0;
    std::string format = "human";
    bool force = false;
    bool rlnc = false;

    bool machine() const { return format == "machine"; }
    std::shared_ptr<const gf::Field> field() const { return gf::Field::make(p); }
};

std::string join_ids(const std::vector<int>& ids, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(ids[i]);
    }
    return s;
}

std::set<int> parse_node_list(const std::string& text) {
    std::set<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.insert(std::stoi(item));
    }
    return out;
}

int cmd_bound(const Options& o, std::ostream& out) {
    const bool vector_query = o.M > 0 && o.alpha > 0;
    if (!vector_query && o.k == 0)
        throw std::invalid_argument("bound needs --M and --alpha, or --k");

    if (vector_query) {
        const long long d = bounds::distance_bound({o.n, o.r, o.M, o.alpha});
        if (o.machine())
            out << "bound=" << d << "\n";
        else
            out << "d<=" << d << "\n";
    }
    if (o.k > 0) {
        const long long d = bounds::scalar_bound(o.n, o.k, o.r);
        const bounds::Rational rate(o.r * o.k, o.n * (o.r + 1));
        const bool tight = o.k % (o.r + 1) != 0;
        if (o.machine()) {
            out << "scalar_bound=" << d << "\n";
            out << "rate=" << rate.str() << "\n";
            out << "tight_expected=" << (tight ? 1 : 0) << "\n";
        } else {
            if (!vector_query) out << "d<=" << d << "\n";
            out << "rate=" << rate.str() << "\n";
            if (!tight)
                out << "warning: (r+1) divides k; the distance bound is not expected to be"
                       " tight here\n";
        }
    }
    return kExitOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
    std::ifstream in(o.input, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot read input file: " + o.input);
    const std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> data(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(data.data()), size);
    if (!in) throw IoError("short read: " + o.input);

    const CodeParams params(static_cast<int>(o.n), static_cast<int>(o.k), static_cast<int>(o.r),
                            o.field());
    const auto man = storesim::store(data, params, o.dir);
    if (o.machine()) {
        out << "nodes=" << man.n << "\n";
        out << "blocks_per_node=" << man.r + 1 << "\n";
        out << "block_bytes=" << man.block_symbols() * man.symbol_bytes() << "\n";
        out << "file_len=" << man.file_len << "\n";
        out << "pad_len=" << man.pad_len << "\n";
    } else {
        out << "encoded " << man.file_len << " bytes into " << man.n << " nodes ("
            << man.r + 1 << " blocks of " << man.block_symbols() * man.symbol_bytes()
            << " bytes each) under " << o.dir << "\n";
    }
    return kExitOk;
}

int cmd_repair(const Options& o, std::ostream& out) {
    const auto rep = storesim::fail_and_repair(o.dir, o.node);
    if (o.machine()) {
        out << "node=" << rep.failed << "\n";
        out << "contacted=" << join_ids(rep.contacted) << "\n";
        out << "blocks=" << rep.blocks_transferred << "\n";
        out << "bytes=" << rep.bytes_transferred << "\n";
        out << "success=" << (rep.success ? 1 : 0) << "\n";
    } else {
        out << "repaired node " << rep.failed << ": contacted {" << join_ids(rep.contacted)
            << "}, moved " << rep.blocks_transferred << " blocks (" << rep.bytes_transferred
            << " bytes)\n";
    }
    return rep.success ? kExitOk : kExitVerification;
}

int cmd_retrieve(const Options& o, std::ostream& out) {
    const std::set<int> allowed = parse_node_list(o.nodes);
    storesim::retrieve_to_file(o.dir, allowed, o.out_path);
    const auto size = std::filesystem::file_size(o.out_path);
    if (o.machine())
        out << "bytes=" << size << "\n";
    else
        out << "retrieved " << size << " bytes to " << o.out_path << "\n";
    return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const CodeParams params(static_cast<int>(o.n), static_cast<int>(o.k), static_cast<int>(o.r),
                            o.field());
    std::size_t block_symbols = 64;
    if (o.M > 0)
        block_symbols = static_cast<std::size_t>(
            std::max<long long>(1, bounds::ceil_div(o.M, params.file_symbols())));
    const auto rep = storesim::compare_schemes(params, o.failures, o.seed, block_symbols);
    auto emit = [&](const storesim::SchemeStats& s) {
        if (o.machine()) {
            out << s.name << "_overhead=" << s.storage_overhead.str() << "\n";
            out << s.name << "_nodes_contacted=" << s.nodes_contacted << "\n";
            out << s.name << "_repair_bytes_per_failure=" << s.repair_bytes_per_failure << "\n";
            out << s.name << "_total_repair_bytes=" << s.total_repair_bytes << "\n";
        } else {
            out << s.name << ": storage overhead " << s.storage_overhead.str()
                << ", repairs contact " << s.nodes_contacted << " nodes and move "
                << s.repair_bytes_per_failure << " bytes each (total "
                << s.total_repair_bytes << ")\n";
        }
    };
    if (o.machine()) out << "failures=" << rep.failures << "\n";
    else out << "simulated " << rep.failures << " failures\n";
    emit(rep.lrc);
    emit(rep.rs);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n > 14) {
        if (!o.force) {
            err << "verify enumerates 2^n subsets; n > 14 needs --force (this may take long)\n";
            return kExitUsage;
        }
        err << "warning: forcing exhaustive verification of n=" << o.n
            << "; expect exponential cost\n";
    }
    const CodeParams params(static_cast<int>(o.n), static_cast<int>(o.k), static_cast<int>(o.r),
                            o.field());
    const auto rep = verifier::certify(params);

    LrcCode code(params);
    std::vector<std::vector<int>> groups;
    for (int g = 1; g <= params.num_groups(); ++g)
        groups.push_back(code.layout().group_members(g));
    const auto wit = bounds::witness_search(code.generator_view(), groups);

    if (o.machine()) {
        out << "distance=" << rep.distance << "\n";
        out << "bound=" << rep.bound << "\n";
        out << "locality=" << rep.locality << "\n";
        out << "rate=" << rep.rate.str() << "\n";
        out << "tight_expected=" << (rep.bound_tight_expected ? 1 : 0) << "\n";
        out << "any_k=" << (rep.any_k_ok ? 1 : 0) << "\n";
        out << "witness_size=" << wit.nodes.size() << "\n";
        out << "witness_bound=" << wit.bound << "\n";
        out << "witness_exit_line=" << wit.exit_line << "\n";
        out << "result=" << (rep.pass ? "PASS" : "FAIL") << "\n";
    } else {
        out << "distance=" << rep.distance << " bound=" << rep.bound
            << " locality=" << rep.locality << " " << (rep.pass ? "PASS" : "FAIL") << "\n";
        if (!rep.bound_tight_expected)
            out << "note: (r+1) divides k; the bound is not expected to be tight\n";
        out << "witness: |S|=" << wit.nodes.size() << " nodes={" << join_ids(wit.nodes)
            << "} H=" << wit.entropy << " exit_line=" << wit.exit_line << " implies d<="
            << wit.bound << "\n";
    }
    return rep.pass ? kExitOk : kExitVerification;
}

int cmd_flowgraph(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n > 10) {
        if (!o.force) {
            err << "flowgraph enumerates C(n, n-d+1) collectors; n > 10 needs --force\n";
            return kExitUsage;
        }
        err << "warning: forcing flow-graph analysis of n=" << o.n
            << "; collector count grows combinatorially\n";
    }
    const auto net = flownet::build_flownet(o.n, o.r, o.M, o.alpha);
    const long long cut = flownet::min_cut_all_dcs(net);
    const long long cap = flownet::multicast_capacity(o.n, o.r, o.M, o.alpha);
    const bool agree = cut == cap;

    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw IoError("cannot write edge list: " + o.out_path);
        for (const auto& e : net.edges)
            f << net.vertex_name(e.from) << " " << net.vertex_name(e.to) << " " << e.cap << "\n";
    }

    if (o.machine()) {
        out << "d=" << net.d << "\n";
        out << "collectors=" << net.num_collectors << "\n";
        out << "min_cut=" << cut << "\n";
        out << "capacity=" << cap << "\n";
        out << "agree=" << (agree ? 1 : 0) << "\n";
    } else {
        out << "d=" << net.d << " collectors=" << net.num_collectors << " min_cut=" << cut
            << " capacity=" << cap << (agree ? " (agree)" : " (DISAGREE)") << "\n";
    }
    if (net.ratio_is_integer)
        err << "note: (n-d+1)/(r+1) is an integer, which the capacity analysis says"
               " should not happen\n";

    int rc = agree ? kExitOk : kExitVerification;
    if (o.rlnc) {
        const auto rep = flownet::rlnc_verify(net, o.q, o.trials, o.seed);
        if (o.machine()) {
            out << "rlnc_trials=" << rep.trials << "\n";
            out << "rlnc_successes=" << rep.successes << "\n";
        } else {
            out << "rlnc: " << rep.successes << "/" << rep.trials << " trials satisfied all"
                << " collector and local rank conditions over q=" << o.q << "\n";
        }
        // certify the first passing trial end to end
        for (long long t = 0; t < rep.trials; ++t) {
            if (!rep.trial_passed[t]) continue;
            int px = 0;
            while ((1LL << px) < o.q) ++px;
            const auto trial = flownet::run_rlnc_trial(net, gf::Field::make(px), rep.trial_seeds[t]);
            const auto gen = flownet::extract_code(trial);
            const int dist = verifier::exact_distance(gen);
            int loc = 0;
            for (int i = 1; i <= gen.nodes(); ++i)
                loc = std::max(loc, verifier::exact_locality(gen, i));
            const bool ok = dist >= net.d && loc <= net.r;
            if (o.machine()) {
                out << "extracted_distance=" << dist << "\n";
                out << "extracted_locality=" << loc << "\n";
                out << "extracted_ok=" << (ok ? 1 : 0) << "\n";
            } else {
                out << "extracted code: distance=" << dist << " (need >= " << net.d
                    << "), locality=" << loc << " (need <= " << net.r << ") "
                    << (ok ? "PASS" : "FAIL") << "\n";
            }
            if (!ok) rc = kExitVerification;
            break;
        }
        if (rep.successes == 0) rc = kExitVerification;
    }
    return rc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"locally repairable code toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "human or machine")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    auto* bound = app.add_subcommand("bound", "distance bound, scalar bound, effective rate");
    bound->add_option("--n", o.n, "code length")->required();
    bound->add_option("--r", o.r, "locality")->required();
    bound->add_option("--M", o.M, "file size in symbols");
    bound->add_option("--alpha", o.alpha, "node capacity in symbols");
    bound->add_option("--k", o.k, "reconstruction threshold (scalar bound and rate)");
    add_format(bound);

    auto* encode = app.add_subcommand("encode", "encode a file into a node directory");
    encode->add_option("--input", o.input)->required();
    encode->add_option("--dir", o.dir)->required();
    encode->add_option("--n", o.n)->required();
    encode->add_option("--k", o.k)->required();
    encode->add_option("--r", o.r)->required();
    encode->add_option("--p", o.p, "symbol width in bits (8 or 16)");
    add_format(encode);

    auto* repair = app.add_subcommand("repair", "fail a node and repair it from its group");
    repair->add_option("--dir", o.dir)->required();
    repair->add_option("--node", o.node)->required();
    add_format(repair);

    auto* retrieve = app.add_subcommand("retrieve", "decode the file back from node files");
    retrieve->add_option("--dir", o.dir)->required();
    retrieve->add_option("--out", o.out_path)->required();
    retrieve->add_option("--nodes", o.nodes, "comma-separated allowed node ids");
    add_format(retrieve);

    auto* simulate = app.add_subcommand("simulate", "compare repair traffic against an RS baseline");
    simulate->add_option("--n", o.n)->required();
    simulate->add_option("--k", o.k)->required();
    simulate->add_option("--r", o.r)->required();
    simulate->add_option("--p", o.p);
    simulate->add_option("--failures", o.failures);
    simulate->add_option("--seed", o.seed);
    simulate->add_option("--M", o.M, "file size in symbols (sets the block size)");
    add_format(simulate);

    auto* verify = app.add_subcommand("verify", "exhaustively certify the explicit construction");
    verify->add_option("--n", o.n)->required();
    verify->add_option("--k", o.k)->required();
    verify->add_option("--r", o.r)->required();
    verify->add_option("--p", o.p);
    verify->add_flag("--force", o.force, "override the n <= 14 size guard");
    add_format(verify);

    auto* flowgraph = app.add_subcommand("flowgraph", "build G(n,r,d,alpha), min-cut, RLNC trials");
    flowgraph->add_option("--n", o.n)->required();
    flowgraph->add_option("--r", o.r)->required();
    flowgraph->add_option("--M", o.M)->required();
    flowgraph->add_option("--alpha", o.alpha)->required();
    flowgraph->add_option("--q", o.q, "field order for RLNC trials");
    flowgraph->add_option("--trials", o.trials);
    flowgraph->add_option("--seed", o.seed);
    flowgraph->add_flag("--rlnc", o.rlnc, "run randomized achievability trials");
    flowgraph->add_option("--out", o.out_path, "write the edge list (u v capacity per line)");
    flowgraph->add_flag("--force", o.force, "override the n <= 10 size guard");
    add_format(flowgraph);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << app.help();
        return kExitUsage;
    }

    try {
        if (bound->parsed()) return cmd_bound(o, out);
        if (encode->parsed()) return cmd_encode(o, out);
        if (repair->parsed()) return cmd_repair(o, out);
        if (retrieve->parsed()) return cmd_retrieve(o, out);
        if (simulate->parsed()) return cmd_simulate(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (flowgraph->parsed()) return cmd_flowgraph(o, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

}  // namespace lrckit::cli
