#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lrckit/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = lrckit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("lrckit_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("bound prints the reference line") {
    const auto r = cli({"bound", "--n", "6", "--M", "8", "--alpha", "3", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "d<=3\n");
}

TEST_CASE("bound with k warns when (r+1) divides k") {
    const auto tight = cli({"bound", "--n", "6", "--r", "2", "--k", "4"});
    CHECK(tight.code == 0);
    CHECK(tight.out.find("warning") == std::string::npos);
    CHECK(tight.out.find("d<=2") == 0);

    const auto loose = cli({"bound", "--n", "6", "--r", "2", "--k", "3"});
    CHECK(loose.code == 0);
    CHECK(loose.out.find("warning") != std::string::npos);
}

TEST_CASE("bound machine format emits stable keys") {
    const auto r = cli({"bound", "--n", "6", "--M", "8", "--alpha", "3", "--r", "2", "--k", "4",
                        "--format", "machine"});
    CHECK(r.code == 0);
    CHECK(r.out == "bound=3\nscalar_bound=2\nrate=4/9\ntight_expected=1\n");
}

TEST_CASE("verify prints the reference pass line") {
    const auto r = cli({"verify", "--n", "6", "--k", "4", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("distance=3 bound=3 locality=2 PASS") == 0);
    CHECK(r.out.find("witness:") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(cli({"bound", "--n", "6"}).code == 1);           // missing --r
    CHECK(cli({"nonsense"}).code == 1);
    CHECK(cli({"bound", "--n", "6", "--r", "2"}).code == 1);  // neither M/alpha nor k
    CHECK(cli({"verify", "--n", "20", "--k", "4", "--r", "3"}).code == 1);  // size guard
}

TEST_CASE("encode, repair, retrieve round-trip through the CLI") {
    TempDir tmp;
    const fs::path input = tmp.path / "input.bin";
    const fs::path output = tmp.path / "output.bin";
    const fs::path dir = tmp.path / "cluster";
    {
        std::mt19937_64 rng(3);
        std::ofstream f(input, std::ios::binary);
        for (int i = 0; i < 5000; ++i) f.put(static_cast<char>(rng()));
    }

    const auto enc = cli({"encode", "--input", input.string(), "--dir", dir.string(), "--n", "6",
                          "--k", "4", "--r", "2"});
    CHECK(enc.code == 0);

    const auto rep = cli({"repair", "--dir", dir.string(), "--node", "1", "--format", "machine"});
    CHECK(rep.code == 0);
    CHECK(rep.out.find("contacted=2,3\n") != std::string::npos);
    CHECK(rep.out.find("blocks=6\n") != std::string::npos);

    const auto ret = cli({"retrieve", "--dir", dir.string(), "--out", output.string(), "--nodes",
                          "2,3,4,5"});
    CHECK(ret.code == 0);
    std::ifstream a(input, std::ios::binary), b(output, std::ios::binary);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);

    const auto io = cli({"encode", "--input", (tmp.path / "missing.bin").string(), "--dir",
                         dir.string(), "--n", "6", "--k", "4", "--r", "2"});
    CHECK(io.code == 3);
}

TEST_CASE("flowgraph agrees with the closed form and writes an edge list") {
    TempDir tmp;
    const fs::path edges = tmp.path / "edges.txt";
    const auto r = cli({"flowgraph", "--n", "6", "--r", "2", "--M", "8", "--alpha", "3", "--out",
                        edges.string(), "--format", "machine"});
    CHECK(r.code == 0);
    CHECK(r.out.find("min_cut=9\n") != std::string::npos);
    CHECK(r.out.find("capacity=9\n") != std::string::npos);
    CHECK(r.out.find("agree=1\n") != std::string::npos);

    std::ifstream f(edges);
    std::string first;
    std::getline(f, first);
    CHECK(first == "X Gamma1 6");
}

TEST_CASE("randomized subcommands are reproducible for a fixed seed") {
    const std::vector<std::string> flow{"flowgraph", "--n", "6", "--r", "2", "--M", "9",
                                        "--alpha", "3", "--rlnc", "--trials", "20", "--seed",
                                        "9", "--format", "machine"};
    const auto a = cli(flow);
    const auto b = cli(flow);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const std::vector<std::string> sim{"simulate", "--n", "6", "--k", "4", "--r", "2",
                                       "--failures", "5", "--seed", "11", "--format", "machine"};
    const auto c = cli(sim);
    const auto d = cli(sim);
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
    CHECK(c.out.find("lrc_nodes_contacted=2\n") != std::string::npos);
    CHECK(c.out.find("rs_nodes_contacted=4\n") != std::string::npos);
}
