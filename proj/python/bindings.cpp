#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "combrank/composition.hpp"
#include "combrank/ksubset.hpp"
#include "combrank/numerics.hpp"
#include "combrank/permutation.hpp"
#include "combrank/setpartition.hpp"
#include "combrank/subset.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// cpp_int <-> python int, round-tripped through decimal text so values of
// any size survive intact.
template <>
struct type_caster<combrank::Count> {
    PYBIND11_TYPE_CASTER(combrank::Count, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = combrank::Count(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const combrank::Count& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace detail
}  // namespace pybind11

PYBIND11_MODULE(_combrank, m) {
    using namespace combrank;

    m.doc() = "rank/unrank toolkit for combinatorial families";

    m.def("factorial", &factorial, py::arg("m"));
    m.def("binomial", &binomial, py::arg("a"), py::arg("b"));
    m.def("stirling2", &stirling2, py::arg("n"), py::arg("k"));
    m.def("bell", &bell, py::arg("n"));

    m.def("count_permutations", &count_permutations, py::arg("m"));
    m.def("serial_to_offset", &serial_to_offset, py::arg("serial"), py::arg("m"));
    m.def("offset_to_permutation", &offset_to_permutation, py::arg("offsets"));
    m.def("permutation_to_offset", &permutation_to_offset, py::arg("perm"));
    m.def("offset_to_serial", &offset_to_serial, py::arg("offsets"));
    m.def("unrank_permutation", &unrank_permutation, py::arg("serial"), py::arg("m"));
    m.def("rank_permutation", &rank_permutation, py::arg("perm"));

    m.def("count_compositions", &count_compositions, py::arg("n"), py::arg("k"));
    m.def("unrank_composition", &unrank_composition, py::arg("serial"), py::arg("n"),
          py::arg("k"));
    m.def("rank_composition", &rank_composition, py::arg("parts"));

    m.def(
        "build_d_matrix",
        [](int n) {
            const DMatrix d(n);
            std::vector<std::vector<Count>> rows(n);
            for (int u = 0; u < n; ++u)
                for (int v = 0; u + v <= n - 1; ++v) rows[u].push_back(d.entry(u, v));
            return rows;
        },
        py::arg("n"), "triangular subtree-size table as a list of rows");
    m.def("count_setpartitions", &count_setpartitions, py::arg("n"));
    m.def("unrank_setpartition",
          py::overload_cast<const Serial&, int>(&unrank_setpartition), py::arg("serial"),
          py::arg("n"));
    m.def("rank_setpartition",
          py::overload_cast<const std::vector<int>&>(&rank_setpartition),
          py::arg("blocks"));
    m.def("stylize", &stylize, py::arg("blocks"));

    m.def("count_ksubsets", &count_ksubsets, py::arg("n"), py::arg("k"));
    m.def("unrank_ksubset", &unrank_ksubset, py::arg("serial"), py::arg("n"), py::arg("k"));
    m.def("rank_ksubset", &rank_ksubset, py::arg("elements"), py::arg("n"));
    m.def("generate_ksubsets_lex", &generate_ksubsets_lex, py::arg("n"), py::arg("k"));

    m.def("count_subsets", &count_subsets, py::arg("n"));
    m.def("unrank_subset", &unrank_subset, py::arg("serial"), py::arg("n"));
    m.def("rank_subset", &rank_subset, py::arg("flags"));

#ifdef VERSION_INFO
#define COMBRANK_STR_(x) #x
#define COMBRANK_STR(x) COMBRANK_STR_(x)
    m.attr("__version__") = COMBRANK_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
