#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "comax/apps/spca.hpp"
#include "comax/comonotone/checker.hpp"
#include "comax/numerics/sym_eig.hpp"

namespace py = pybind11;
using namespace comax;

namespace {

py::dict to_dict(const SolveReport& rep) {
    py::dict d;
    d["value"] = rep.best.value;
    d["solution"] = rep.best.x;
    d["support"] = rep.support;
    d["candidate_count"] = rep.candidate_count;
    d["cell_count"] = rep.cell_count;
    d["oracle_calls"] = rep.oracle_calls;
    return d;
}

SpcaInstance make_instance(const Eigen::MatrixXd& a, int s) {
    SpcaInstance inst;
    inst.a = a;
    inst.s = s;
    return inst;
}

} // namespace

PYBIND11_MODULE(_comax, m) {
    m.doc() = "sparse convex maximization over low-rank quadratics";

    m.def(
        "solve_single_spca",
        [](const Eigen::MatrixXd& a, int s, int threads) {
            return to_dict(spca_single_solve(make_instance(a, s), threads));
        },
        py::arg("a"), py::arg("s"), py::arg("threads") = 1);

    m.def(
        "solve_nn_spca",
        [](const Eigen::MatrixXd& a, int s, int threads) {
            return to_dict(nn_spca_solve(make_instance(a, s), threads));
        },
        py::arg("a"), py::arg("s"), py::arg("threads") = 1);

    m.def(
        "solve_sphere_quadratic_linear",
        [](const Eigen::MatrixXd& a, const Eigen::VectorXd& lin, int s, int threads) {
            auto inst = make_instance(a, s);
            inst.a_lin = lin;
            return to_dict(tst_solve(inst, threads));
        },
        py::arg("a"), py::arg("linear"), py::arg("s"), py::arg("threads") = 1);

    m.def(
        "solve_multi_spca",
        [](const Eigen::MatrixXd& a, int s, int d, int threads) {
            auto inst = make_instance(a, s);
            inst.d = d;
            return to_dict(spca_multi_solve(inst, threads));
        },
        py::arg("a"), py::arg("s"), py::arg("d"), py::arg("threads") = 1);

    m.def(
        "solve_disjoint_spca",
        [](const Eigen::MatrixXd& a, const std::vector<int>& caps) {
            SpcaInstance inst;
            inst.a = a;
            inst.d = static_cast<int>(caps.size());
            inst.s_vec = caps;
            auto res = disjoint_spca_solve(inst);
            py::dict d;
            d["value"] = res.value;
            d["assignment"] = res.assignment.z;
            d["cell_count"] = res.cell_count;
            return d;
        },
        py::arg("a"), py::arg("caps"));

    m.def(
        "check_comonotone",
        [](const std::vector<Eigen::VectorXd>& points) {
            auto verdict = check_standard_comonotone(FinitePointSet::from_points(points));
            py::dict d;
            d["yes"] = verdict.yes;
            if (!verdict.yes) {
                d["witness_v"] = verdict.witness_v;
                d["pair"] = py::make_tuple(verdict.i, verdict.j);
                d["reason"] = verdict.reason;
            }
            return d;
        },
        py::arg("points"));

    m.def(
        "ky_fan",
        [](const Eigen::MatrixXd& m_, int d) { return ky_fan(m_, d); },
        py::arg("matrix"), py::arg("d"));
}
