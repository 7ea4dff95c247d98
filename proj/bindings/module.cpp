#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lrckit/bounds.hpp"
#include "lrckit/flownet.hpp"
#include "lrckit/lrc.hpp"
#include "lrckit/storesim.hpp"
#include "lrckit/verifier.hpp"

namespace py = pybind11;
using namespace lrckit;

namespace {

// pybind holders want non-const shared_ptrs; Field is immutable anyway
std::shared_ptr<gf::Field> field_for(int p) {
    return std::const_pointer_cast<gf::Field>(gf::Field::make(p));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "locally repairable code toolkit";

    py::register_exception<InsufficientSymbolsError>(m, "InsufficientSymbolsError",
                                                     PyExc_ValueError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
    py::register_exception<RepairError>(m, "RepairError", PyExc_ValueError);
    py::register_exception<CorruptBlockError>(m, "CorruptBlockError", PyExc_ValueError);

    py::class_<gf::Field, std::shared_ptr<gf::Field>>(m, "Field")
        .def(py::init<int, std::uint32_t>(), py::arg("p"), py::arg("modulus"))
        .def_static("make", &field_for, py::arg("p"))
        .def_property_readonly("p", &gf::Field::p)
        .def_property_readonly("modulus", &gf::Field::modulus)
        .def_property_readonly("order", &gf::Field::order)
        .def("add", &gf::Field::add)
        .def("mul", &gf::Field::mul)
        .def("inv", &gf::Field::inv)
        .def("div", &gf::Field::div);

    py::class_<RsCode>(m, "RsCode")
        .def(py::init([](int n, int k, int p) { return RsCode(gf::Field::make(p), n, k); }),
             py::arg("n"), py::arg("k"), py::arg("p") = 8)
        .def_property_readonly("n", &RsCode::n)
        .def_property_readonly("k", &RsCode::k)
        .def("encode",
             [](const RsCode& rs, const std::vector<gf::sym>& message) {
                 return rs.encode(message);
             })
        .def("decode", &RsCode::decode);

    py::class_<CodeParams>(m, "CodeParams")
        .def(py::init([](int n, int k, int r, int p) {
                 return CodeParams(n, k, r, gf::Field::make(p));
             }),
             py::arg("n"), py::arg("k"), py::arg("r"), py::arg("p") = 8)
        .def_readonly("n", &CodeParams::n)
        .def_readonly("k", &CodeParams::k)
        .def_readonly("r", &CodeParams::r)
        .def_property_readonly("M", &CodeParams::file_symbols)
        .def_property_readonly("alpha", &CodeParams::node_capacity)
        .def_property_readonly("bound_tight_expected", &CodeParams::bound_tight_expected);

    py::class_<Slot>(m, "Slot")
        .def_readonly("row", &Slot::row)
        .def_readonly("index", &Slot::index)
        .def("__repr__", [](const Slot& s) {
            return "Slot(row=" + std::to_string(s.row) + ", index=" + std::to_string(s.index) + ")";
        });

    py::class_<NodeContent>(m, "NodeContent")
        .def_readonly("node_id", &NodeContent::node_id)
        .def_readonly("blocks", &NodeContent::blocks);

    py::class_<LrcCode>(m, "LrcCode")
        .def(py::init<CodeParams>())
        .def_property_readonly("params", &LrcCode::params)
        .def("node_slots",
             [](const LrcCode& c, int node) { return c.layout().node_slots(node); })
        .def("group_members",
             [](const LrcCode& c, int g) { return c.layout().group_members(g); })
        .def("encode",
             [](const LrcCode& c, const std::vector<gf::sym>& file) { return c.encode(file); })
        .def("repair", &LrcCode::repair)
        .def("decode", &LrcCode::decode);

    m.def("distance_bound",
          [](long long n, long long r, long long M, long long alpha) {
              return bounds::distance_bound({n, r, M, alpha});
          },
          py::arg("n"), py::arg("r"), py::arg("M"), py::arg("alpha"));
    m.def("scalar_bound", &bounds::scalar_bound, py::arg("n"), py::arg("k"), py::arg("r"));
    m.def("effective_rate", [](const CodeParams& p) {
        const auto rate = bounds::effective_rate(p);
        return py::make_tuple(rate.num, rate.den);
    });
    m.def("check_ceiling_identities",
          [](long long trials, std::uint64_t seed) {
              const auto rep = bounds::check_ceiling_identities(trials, seed);
              return py::make_tuple(rep.trials, rep.failures);
          },
          py::arg("trials"), py::arg("seed") = 1);

    py::class_<verifier::CertifyReport>(m, "CertifyReport")
        .def_readonly("distance", &verifier::CertifyReport::distance)
        .def_readonly("bound", &verifier::CertifyReport::bound)
        .def_readonly("locality", &verifier::CertifyReport::locality)
        .def_readonly("per_node_locality", &verifier::CertifyReport::per_node_locality)
        .def_readonly("bound_tight_expected", &verifier::CertifyReport::bound_tight_expected)
        .def_readonly("any_k_ok", &verifier::CertifyReport::any_k_ok)
        .def_readonly("pass_", &verifier::CertifyReport::pass)
        .def_property_readonly("rate", [](const verifier::CertifyReport& r) {
            return py::make_tuple(r.rate.num, r.rate.den);
        });
    m.def("certify", &verifier::certify);

    m.def("exact_distance", [](const LrcCode& code) {
        return verifier::exact_distance(code.generator_view());
    });
    m.def("exact_locality", [](const LrcCode& code, int node) {
        return verifier::exact_locality(code.generator_view(), node);
    });

    py::class_<flownet::FlowNet>(m, "FlowNet")
        .def_readonly("n", &flownet::FlowNet::n)
        .def_readonly("r", &flownet::FlowNet::r)
        .def_readonly("M", &flownet::FlowNet::M)
        .def_readonly("alpha", &flownet::FlowNet::alpha)
        .def_readonly("d", &flownet::FlowNet::d)
        .def_readonly("num_collectors", &flownet::FlowNet::num_collectors)
        .def_property_readonly("num_vertices", &flownet::FlowNet::num_vertices);
    m.def("build_flownet", &flownet::build_flownet, py::arg("n"), py::arg("r"), py::arg("M"),
          py::arg("alpha"));
    m.def("min_cut_all_dcs", &flownet::min_cut_all_dcs);
    m.def("multicast_capacity", &flownet::multicast_capacity, py::arg("n"), py::arg("r"), py::arg("M"),
          py::arg("alpha"));
    m.def("rlnc_verify",
          [](const flownet::FlowNet& net, long long q, long long trials, std::uint64_t seed) {
              const auto rep = flownet::rlnc_verify(net, q, trials, seed);
              return py::make_tuple(rep.trials, rep.successes);
          },
          py::arg("net"), py::arg("q") = 256, py::arg("trials") = 100, py::arg("seed") = 1);

    py::class_<storesim::Manifest>(m, "Manifest")
        .def_readonly("n", &storesim::Manifest::n)
        .def_readonly("k", &storesim::Manifest::k)
        .def_readonly("r", &storesim::Manifest::r)
        .def_readonly("p", &storesim::Manifest::p)
        .def_readonly("file_len", &storesim::Manifest::file_len)
        .def_readonly("pad_len", &storesim::Manifest::pad_len)
        .def("to_json", &storesim::Manifest::to_json);

    py::class_<storesim::RepairReport>(m, "RepairReport")
        .def_readonly("failed", &storesim::RepairReport::failed)
        .def_readonly("contacted", &storesim::RepairReport::contacted)
        .def_readonly("blocks_transferred", &storesim::RepairReport::blocks_transferred)
        .def_readonly("bytes_transferred", &storesim::RepairReport::bytes_transferred)
        .def_readonly("success", &storesim::RepairReport::success);

    m.def("store",
          [](const py::bytes& data, const CodeParams& params, const std::filesystem::path& dir) {
              const std::string view = data;
              return storesim::store(std::vector<std::uint8_t>(view.begin(), view.end()), params,
                                     dir);
          },
          py::arg("data"), py::arg("params"), py::arg("dir"));
    m.def("fail_and_repair", &storesim::fail_and_repair, py::arg("dir"), py::arg("node"));
    m.def("retrieve",
          [](const std::filesystem::path& dir, const std::set<int>& allowed) {
              const auto bytes = storesim::retrieve(dir, allowed);
              return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
          },
          py::arg("dir"), py::arg("allowed") = std::set<int>{});

    py::class_<storesim::SchemeStats>(m, "SchemeStats")
        .def_readonly("name", &storesim::SchemeStats::name)
        .def_readonly("nodes_contacted", &storesim::SchemeStats::nodes_contacted)
        .def_readonly("repair_bytes_per_failure", &storesim::SchemeStats::repair_bytes_per_failure)
        .def_readonly("total_repair_bytes", &storesim::SchemeStats::total_repair_bytes)
        .def_property_readonly("storage_overhead", [](const storesim::SchemeStats& s) {
            return py::make_tuple(s.storage_overhead.num, s.storage_overhead.den);
        });
    py::class_<storesim::ComparisonReport>(m, "ComparisonReport")
        .def_readonly("failures", &storesim::ComparisonReport::failures)
        .def_readonly("lrc", &storesim::ComparisonReport::lrc)
        .def_readonly("rs", &storesim::ComparisonReport::rs);
    m.def("compare_schemes", &storesim::compare_schemes, py::arg("params"), py::arg("failures"),
          py::arg("seed"), py::arg("block_symbols") = 64);
}
