#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "homops/abgroup.hpp"
#include "homops/chains.hpp"
#include "homops/functors.hpp"
#include "homops/groupexpr.hpp"
#include "homops/jsonio.hpp"
#include "homops/moorecalc.hpp"
#include "homops/opsclassify.hpp"
#include "homops/oracle.hpp"
#include "homops/pointmaps.hpp"
#include "homops/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// exact integers cross the boundary as python ints, via decimal strings
template <>
struct type_caster<homops::Int> {
    PYBIND11_TYPE_CASTER(homops::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object as_str = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!as_str) return false;
        value = homops::Int(std::string(py::str(as_str)));
        return true;
    }

    static handle cast(const homops::Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace homops;

py::object json_to_py(const jsonio::json& j) {
    py::module_ jsonmod = py::module_::import("json");
    return jsonmod.attr("loads")(j.dump());
}

IntMatrix matrix_from_rows(const std::vector<std::vector<Int>>& rows) {
    return IntMatrix::from_rows(rows);
}

std::vector<std::vector<Int>> matrix_to_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

py::object order_to_py(const Order& o) {
    if (!o.finite) return py::cast(std::numeric_limits<double>::infinity());
    return py::cast(o.value);
}

ops::ProductKind parse_kind(const std::string& kind) {
    if (kind == "w" || kind == "whitehead") return ops::ProductKind::Whitehead;
    if (kind == "t" || kind == "torsion") return ops::ProductKind::Torsion;
    throw ValueError("kind must be 'whitehead' or 'torsion'");
}

const moore::StemTable& table_or_builtin(const moore::StemTable* table) {
    return table ? *table : moore::StemTable::builtin();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computation for homotopy groups with coefficients: finitely generated "
              "abelian groups, Hom/Ext/tensor/Tor, Moore-space calculus and binary-operation "
              "classification";

    py::register_exception<DegreeTooSmall>(m, "DegreeTooSmallError", PyExc_ValueError);
    py::register_exception<Unsupported2Torsion>(m, "Unsupported2TorsionError", PyExc_ValueError);
    py::register_exception<BoundExceeded>(m, "BoundExceededError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "GroupParseError", PyExc_ValueError);
    py::register_exception<ValueError>(m, "GroupValueError", PyExc_ValueError);

    py::class_<FgAbGroup>(m, "FgAbGroup",
                          "finitely generated abelian group in canonical form: free rank plus "
                          "the invariant-factor chain")
        .def(py::init([](std::size_t free_rank, const std::vector<Int>& orders) {
                 return FgAbGroup::from_orders(free_rank, orders);
             }),
             py::arg("free_rank") = 0, py::arg("orders") = std::vector<Int>{})
        .def_static("parse", &expr::parse_group, py::arg("text"),
                    "parse an expression like 'Z^2 + Z/4 + Z/6'")
        .def_property_readonly("free_rank", &FgAbGroup::free_rank)
        .def_property_readonly("invariant_factors", &FgAbGroup::invariant_factors)
        .def("is_trivial", &FgAbGroup::is_trivial)
        .def("is_finite", &FgAbGroup::is_finite)
        .def("is_free", &FgAbGroup::is_free)
        .def("has_2_torsion", &FgAbGroup::has_2_torsion)
        .def("order", [](const FgAbGroup& g) { return order_to_py(g.order()); },
             "group order; math.inf when the free rank is positive")
        .def("primary_factors", &FgAbGroup::primary_factors,
             "prime-power summands as (prime, exponent) pairs")
        .def("__eq__", [](const FgAbGroup& a, const FgAbGroup& b) { return a == b; })
        .def("__hash__",
             [](const FgAbGroup& g) { return py::hash(py::str(expr::render_group(g))); })
        .def("__str__", &expr::render_group)
        .def("__repr__",
             [](const FgAbGroup& g) { return "FgAbGroup('" + expr::render_group(g) + "')"; });

    m.def("parse_group", &expr::parse_group, py::arg("text"));
    m.def("render_group", &expr::render_group, py::arg("group"));
    m.def("direct_sum", &direct_sum, py::arg("g"), py::arg("h"));

    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<Int>>& rows) {
            SmithResult s = smith_normal_form(matrix_from_rows(rows));
            return py::make_tuple(s.diag, matrix_to_rows(s.smith));
        },
        py::arg("matrix"), "returns (invariant factors, diagonalized matrix)");
    m.def(
        "cokernel",
        [](const std::vector<std::vector<Int>>& rows) {
            return cokernel(matrix_from_rows(rows));
        },
        py::arg("relations"), "group presented by a relation matrix (rows are relations)");
    m.def(
        "kernel_basis",
        [](const std::vector<std::vector<Int>>& rows) {
            return matrix_to_rows(kernel_basis(matrix_from_rows(rows)));
        },
        py::arg("matrix"), "columns spanning the integer kernel");

    m.def("tensor", &functors::tensor, py::arg("g"), py::arg("h"));
    m.def("tor", &functors::tor, py::arg("g"), py::arg("h"));
    m.def("hom", &functors::hom, py::arg("g"), py::arg("h"));
    m.def("ext", &functors::ext, py::arg("g"), py::arg("h"));

    m.def("oracle_hom_count", &oracle::hom_count, py::arg("g"), py::arg("h"),
          py::arg("bound") = oracle::ElementTable::kDefaultBound);
    m.def("oracle_ext", &oracle::ext, py::arg("g"), py::arg("h"));
    m.def("oracle_tensor", &oracle::tensor, py::arg("g"), py::arg("h"),
          py::arg("bound") = oracle::ElementTable::kDefaultBound);
    m.def("oracle_tor", &oracle::tor, py::arg("g"), py::arg("h"),
          py::arg("bound") = oracle::ElementTable::kDefaultBound);

    py::class_<chains::ChainComplex>(m, "ChainComplex")
        .def_property_readonly("min_degree", &chains::ChainComplex::min_degree)
        .def_property_readonly("max_degree", &chains::ChainComplex::max_degree)
        .def("rank", &chains::ChainComplex::rank, py::arg("degree"))
        .def("boundary",
             [](const chains::ChainComplex& c, int n) { return matrix_to_rows(c.boundary(n)); },
             py::arg("degree"))
        .def("__repr__", [](const chains::ChainComplex& c) {
            std::ostringstream os;
            os << "ChainComplex(degrees " << c.min_degree() << ".." << c.max_degree() << ")";
            return os.str();
        });
    m.def("moore_complex", &chains::moore_complex, py::arg("group"), py::arg("degree"));
    m.def(
        "tensor_complex",
        [](const chains::ChainComplex& a, const chains::ChainComplex& b, bool sign_on_first) {
            return chains::tensor_complex(a, b,
                                          sign_on_first ? chains::LeibnizSign::OnFirstFactor
                                                        : chains::LeibnizSign::OnSecondFactor);
        },
        py::arg("a"), py::arg("b"), py::arg("sign_on_first") = false);
    m.def("wedge_complex", &chains::wedge_complex, py::arg("a"), py::arg("b"));
    m.def("homology", &chains::homology, py::arg("complex"), py::arg("degree"));
    m.def(
        "kunneth_check",
        [](const FgAbGroup& g1, int q1, const FgAbGroup& g2, int q2) {
            return json_to_py(jsonio::kunneth_json(chains::kunneth_check(g1, q1, g2, q2)));
        },
        py::arg("g1"), py::arg("q1"), py::arg("g2"), py::arg("q2"));

    py::class_<moore::MooreExpr>(m, "MooreExpr")
        .def_static("parse", &moore::parse_moore, py::arg("text"),
                    "parse a wedge like 'Z/3@4 | Z@5'")
        .def_static("atom", &moore::MooreExpr::atom, py::arg("group"), py::arg("degree"))
        .def_static("point", &moore::MooreExpr::point)
        .def_static("wedge", &moore::MooreExpr::wedge, py::arg("a"), py::arg("b"))
        .def("suspended", &moore::MooreExpr::suspended, py::arg("times") = 1)
        .def("is_point", &moore::MooreExpr::is_point)
        .def("atoms",
             [](const moore::MooreExpr& x) {
                 std::vector<std::pair<FgAbGroup, int>> out;
                 for (const moore::Atom& a : x.atoms()) out.emplace_back(a.group, a.degree);
                 return out;
             })
        .def("__eq__",
             [](const moore::MooreExpr& a, const moore::MooreExpr& b) { return a == b; })
        .def("__str__", &moore::render_moore)
        .def("__repr__", [](const moore::MooreExpr& x) {
            return "MooreExpr('" + moore::render_moore(x) + "')";
        });
    m.def("smash_decompose", &moore::smash_decompose, py::arg("a"), py::arg("b"));

    py::class_<moore::StemTable>(m, "StemTable")
        .def_static("builtin", [] { return moore::StemTable::builtin(); })
        .def_static("load", &moore::StemTable::load_file, py::arg("path"))
        .def("merged_with", &moore::StemTable::merged_with, py::arg("overrides"));

    m.def(
        "stem",
        [](const FgAbGroup& g, int k, int n, const moore::StemTable* table) -> py::object {
            Maybe<FgAbGroup> r = moore::stem(g, k, n, table_or_builtin(table));
            if (!r) return py::none();
            return py::cast(r.value());
        },
        py::arg("group"), py::arg("k"), py::arg("n"), py::arg("table") = nullptr,
        "pi_{n+k}(M(G, n)); None when the stem is not tabulated");

    py::class_<moore::UctSequence>(m, "UctSequence")
        .def_readonly("ext_term", &moore::UctSequence::ext_term)
        .def_readonly("hom_term", &moore::UctSequence::hom_term)
        .def_property_readonly(
            "middle_cardinality",
            [](const moore::UctSequence& s) { return order_to_py(s.middle_cardinality); })
        .def_readonly("notes", &moore::UctSequence::notes)
        .def("__repr__", [](const moore::UctSequence& s) {
            return "UctSequence(ext=" + expr::render_group(s.ext_term) +
                   ", hom=" + expr::render_group(s.hom_term) +
                   ", cardinality=" + s.middle_cardinality.to_string() + ")";
        });

    m.def(
        "homotopy_with_coeffs",
        [](const moore::MooreExpr& x, int n, const FgAbGroup& g,
           const moore::StemTable* table) -> py::object {
            Maybe<moore::UctSequence> r =
                moore::homotopy_with_coeffs(x, n, g, table_or_builtin(table));
            if (!r) return py::none();
            return py::cast(r.value());
        },
        py::arg("space"), py::arg("n"), py::arg("coefficients"), py::arg("table") = nullptr,
        "universal-coefficient data for pi_n(X; G); None when a stem is missing");

    auto make_type = [](const FgAbGroup& g1, const FgAbGroup& g2, const FgAbGroup& g3, int q1,
                        int q2, int q3) { return ops::OperationType(g1, g2, g3, q1, q2, q3); };
    m.def(
        "basic_range_check",
        [make_type](const FgAbGroup& g1, const FgAbGroup& g2, const FgAbGroup& g3, int q1, int q2,
                    int q3) {
            return ops::to_string(ops::basic_range_check(make_type(g1, g2, g3, q1, q2, q3)).verdict);
        },
        py::arg("g1"), py::arg("g2"), py::arg("g3"), py::arg("q1"), py::arg("q2"), py::arg("q3"));
    m.def(
        "triviality_check",
        [make_type](const FgAbGroup& g1, const FgAbGroup& g2, const FgAbGroup& g3, int q1, int q2,
                    int q3) { return ops::triviality_check(make_type(g1, g2, g3, q1, q2, q3)); },
        py::arg("g1"), py::arg("g2"), py::arg("g3"), py::arg("q1"), py::arg("q2"), py::arg("q3"));
    m.def(
        "special_kind",
        [make_type](const FgAbGroup& g1, const FgAbGroup& g2, const FgAbGroup& g3, int q1, int q2,
                    int q3) {
            return ops::to_string(ops::special_kind(make_type(g1, g2, g3, q1, q2, q3)));
        },
        py::arg("g1"), py::arg("g2"), py::arg("g3"), py::arg("q1"), py::arg("q2"), py::arg("q3"));
    m.def(
        "bo_group",
        [make_type](const FgAbGroup& g1, const FgAbGroup& g2, const FgAbGroup& g3, int q1, int q2,
                    int q3, const moore::StemTable* table) -> py::object {
            Maybe<moore::UctSequence> r =
                ops::bo_group(make_type(g1, g2, g3, q1, q2, q3), table_or_builtin(table));
            if (!r) return py::none();
            return py::cast(r.value());
        },
        py::arg("g1"), py::arg("g2"), py::arg("g3"), py::arg("q1"), py::arg("q2"), py::arg("q3"),
        py::arg("table") = nullptr);
    m.def(
        "count_whitehead",
        [](const FgAbGroup& g1, const FgAbGroup& g2, int q1, int q2,
           const moore::StemTable* table) -> py::object {
            ops::OperationType type(g1, g2, functors::tensor(g1, g2), q1, q2, q1 + q2 - 1);
            Maybe<Int> r = ops::count_special_ops(type, table_or_builtin(table));
            if (!r) return py::none();
            return py::cast(r.value());
        },
        py::arg("g1"), py::arg("g2"), py::arg("q1"), py::arg("q2"), py::arg("table") = nullptr,
        "number of Whitehead products of type {G1, G2; q1, q2}");
    m.def(
        "classify",
        [make_type](const FgAbGroup& g1, const FgAbGroup& g2, const FgAbGroup& g3, int q1, int q2,
                    int q3, const moore::StemTable* table) {
            return json_to_py(jsonio::classification_json(
                ops::classify(make_type(g1, g2, g3, q1, q2, q3), table_or_builtin(table))));
        },
        py::arg("g1"), py::arg("g2"), py::arg("g3"), py::arg("q1"), py::arg("q2"), py::arg("q3"),
        py::arg("table") = nullptr, "full classification report as a dict");
    m.def("torsion_exists", &ops::torsion_exists, py::arg("m"), py::arg("n"), py::arg("q1"),
          py::arg("q2"));
    m.def(
        "ext_ops_enumerate",
        [](long long k, int q1, int q2) {
            py::list out;
            for (const auto& d : ops::ext_ops_enumerate(k, q1, q2)) {
                py::dict item;
                item["index"] = d.index;
                item["is_zero"] = d.is_zero;
                item["universal_element"] = d.universal_element;
                item["g3"] = py::cast(d.g3);
                item["q3"] = d.q3;
                out.append(std::move(item));
            }
            return out;
        },
        py::arg("k"), py::arg("q1"), py::arg("q2"));
    m.def(
        "commutativity_sign",
        [](const std::string& kind, int q1, int q2) {
            ops::CommutativitySign s = ops::commutativity_sign(parse_kind(kind), q1, q2);
            return py::make_tuple(s.exponent, s.sign);
        },
        py::arg("kind"), py::arg("q1"), py::arg("q2"), "returns (exponent, sign)");
    m.def(
        "neisendorfer_shift",
        [](int n, const std::string& direction) {
            if (direction == "to-co-moore")
                return ops::neisendorfer_shift(n, ops::ShiftDirection::ToCoMoore);
            if (direction == "to-moore")
                return ops::neisendorfer_shift(n, ops::ShiftDirection::ToMoore);
            throw ValueError("direction must be 'to-co-moore' or 'to-moore'");
        },
        py::arg("n"), py::arg("direction"));

    m.def("maps_check", [] {
        py::list out;
        bool pass = true;
        for (const auto& s : homops::verify::pointmap_identity_suites()) {
            out.append(json_to_py(jsonio::suite_json(s)));
            pass = pass && s.pass();
        }
        return py::make_tuple(pass, out);
    });
    m.def(
        "verify_all",
        [](std::size_t kunneth_pairs, std::uint64_t seed) {
            py::list out;
            for (const auto& s : homops::verify::run_all(kunneth_pairs, seed))
                out.append(json_to_py(jsonio::suite_json(s)));
            return out;
        },
        py::arg("kunneth_pairs") = 200, py::arg("seed") = 0x5eed0000ULL);
}
