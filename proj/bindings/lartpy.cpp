#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "lart/bench.hpp"
#include "lart/cluster.hpp"
#include "lart/metrics.hpp"
#include "lart/multiplex.hpp"
#include "lart/synthgen.hpp"
#include "lart/walk.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> to_numpy(const Eigen::MatrixXd& m) {
    py::array_t<double> out({m.rows(), m.cols()});
    auto buf = out.mutable_unchecked<2>();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) buf(r, c) = m(r, c);
    return out;
}

}  // namespace

PYBIND11_MODULE(lartpy, m) {
    m.doc() = "LART community detection for multiplex networks";

    py::class_<lart::Multiplex>(m, "Multiplex")
        .def(py::init<int, int>(), py::arg("num_nodes"), py::arg("num_layers"))
        .def_property_readonly("num_nodes", &lart::Multiplex::num_nodes)
        .def_property_readonly("num_layers", &lart::Multiplex::num_layers)
        .def("add_edge", &lart::Multiplex::add_edge, py::arg("layer"), py::arg("u"),
             py::arg("v"))
        .def("has_edge", &lart::Multiplex::has_edge)
        .def("num_edges", &lart::Multiplex::num_edges)
        .def("edges", &lart::Multiplex::edges, py::arg("layer"))
        .def("__repr__", [](const lart::Multiplex& mp) {
            return "Multiplex(nodes=" + std::to_string(mp.num_nodes()) +
                   ", layers=" + std::to_string(mp.num_layers()) +
                   ", edges=" + std::to_string(mp.num_edges()) + ")";
        });

    m.def("read_multiplex", &lart::read_multiplex, py::arg("path"));
    m.def("write_multiplex", &lart::write_multiplex, py::arg("multiplex"), py::arg("path"));

    m.def(
        "generate",
        [](const std::string& scenario, std::uint64_t seed, double p_noise) {
            lart::ScenarioConfig cfg;
            cfg.scenario = lart::scenario_from_string(scenario);
            cfg.seed = seed;
            cfg.p_noise = p_noise;
            const auto inst = lart::generate(cfg);
            return py::make_tuple(inst.multiplex, inst.truth.labels);
        },
        py::arg("scenario"), py::arg("seed"), py::arg("p_noise") = 0.05,
        "Generate a synthetic multiplex; returns (multiplex, truth labels in "
        "layer-major flat order, -1 = background).");

    m.def(
        "detect",
        [](const lart::Multiplex& mp, std::optional<int> t, double epsilon, double gamma,
           std::optional<double> fixed_omega) {
            const int steps = t.value_or(3 * mp.num_layers());
            const auto res = lart::lart_detect(mp, steps, epsilon, gamma, fixed_omega);
            py::dict out;
            out["labels"] = res.partition.labels;
            out["num_communities"] = res.partition.num_communities;
            out["q_scores"] = res.dendrogram.q_scores;
            out["q_m"] = lart::multiplex_modularity(res.partition, res.supra, gamma);
            return out;
        },
        py::arg("multiplex"), py::arg("t") = py::none(), py::arg("epsilon") = 1.0,
        py::arg("gamma") = 1.0, py::arg("fixed_omega") = py::none(),
        "Run LART; returns a dict with flat labels, community count and the "
        "Q_M curve.");

    m.def(
        "dissimilarity",
        [](const lart::Multiplex& mp, std::optional<int> t, double epsilon) {
            const int steps = t.value_or(3 * mp.num_layers());
            const auto sa = lart::build_supra(mp, epsilon);
            const auto tp = lart::walk_power(lart::transition_matrix(sa), sa, steps);
            return to_numpy(lart::dissimilarity_matrix(tp).values);
        },
        py::arg("multiplex"), py::arg("t") = py::none(), py::arg("epsilon") = 1.0,
        "The NL x NL dissimilarity matrix S(t), flat layer-major indexing.");

    m.def(
        "transition_power",
        [](const lart::Multiplex& mp, int t, double epsilon) {
            const auto sa = lart::build_supra(mp, epsilon);
            return to_numpy(lart::walk_power(lart::transition_matrix(sa), sa, t).matrix);
        },
        py::arg("multiplex"), py::arg("t"), py::arg("epsilon") = 1.0,
        "The t-step transition matrix P^t.");

    auto labels_to_partition = [](const std::vector<int>& labels) {
        lart::Partition p;
        p.labels = labels;
        int max_label = -1;
        for (int x : labels) {
            if (x < 0) throw std::invalid_argument("labels must be >= 0");
            max_label = std::max(max_label, x);
        }
        p.num_communities = max_label + 1;
        return p;
    };

    m.def(
        "nmi",
        [labels_to_partition](const std::vector<int>& a, const std::vector<int>& b) {
            return lart::nmi(labels_to_partition(a), labels_to_partition(b));
        },
        py::arg("labels1"), py::arg("labels2"));

    m.def(
        "fowlkes_mallows",
        [labels_to_partition](const std::vector<int>& a, const std::vector<int>& b) {
            return lart::fowlkes_mallows(labels_to_partition(a), labels_to_partition(b));
        },
        py::arg("labels1"), py::arg("labels2"));

    m.def(
        "expand_background",
        [](const std::vector<int>& truth_labels, int num_nodes, int num_layers) {
            lart::GroundTruth gt;
            gt.num_nodes = num_nodes;
            gt.num_layers = num_layers;
            gt.labels = truth_labels;
            return lart::truth_partition(gt).labels;
        },
        py::arg("truth_labels"), py::arg("num_nodes"), py::arg("num_layers"),
        "Expand -1 background labels into unique singleton communities.");
}
