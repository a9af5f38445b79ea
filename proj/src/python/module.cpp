#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "inertia/bipartite.hpp"
#include "inertia/constructors.hpp"
#include "inertia/eig.hpp"
#include "inertia/exact.hpp"
#include "inertia/generators.hpp"
#include "inertia/json_io.hpp"
#include "inertia/sampling.hpp"
#include "inertia/separability.hpp"
#include "inertia/slocc.hpp"
#include "inertia/witness.hpp"

namespace py = pybind11;
using namespace inertia;

namespace {

using complex_array = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

HermitianMatrix matrix_from_array(const complex_array& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) {
    throw BadSpec("expected a square 2-d complex array");
  }
  const std::size_t d = static_cast<std::size_t>(arr.shape(0));
  Matrix m(d, Mode::Float);
  auto& e = m.float_entries();
  auto view = arr.unchecked<2>();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) e[i * d + j] = view(i, j);
  }
  return HermitianMatrix::checked(std::move(m));
}

complex_array matrix_to_array(const HermitianMatrix& m) {
  const std::size_t d = m.dim();
  complex_array arr({d, d});
  auto view = arr.mutable_unchecked<2>();
  const Matrix f = m.raw().to_float();
  const auto& e = f.float_entries();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) view(i, j) = e[i * d + j];
  }
  return arr;
}

py::tuple inertia_tuple(const Inertia& in) { return py::make_tuple(in.neg, in.zero, in.pos); }

HermitianMatrix state_from_json_str(const std::string& text) {
  return hermitian_from_json(json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Inertias of partially transposed bipartite operators";

  py::register_exception<Error>(m, "InertiaError");

  m.def(
      "inertia",
      [](const complex_array& arr, double tol) {
        return inertia_tuple(inertia_float(matrix_from_array(arr), tol));
      },
      py::arg("matrix"), py::arg("tol") = 1e-9,
      "Counts of (negative, zero, positive) eigenvalues at a relative threshold.");

  m.def(
      "inertia_exact_json",
      [](const std::string& matrix_json) {
        return inertia_tuple(inertia_exact(state_from_json_str(matrix_json)));
      },
      py::arg("matrix_json"),
      "Exact congruence-certified inertia of an exact-mode matrix document.");

  m.def(
      "partial_transpose",
      [](const complex_array& arr, std::size_t m_dim, std::size_t n_dim) {
        return matrix_to_array(
            partial_transpose(matrix_from_array(arr), BipartiteShape(m_dim, n_dim)));
      },
      py::arg("matrix"), py::arg("m"), py::arg("n"));

  m.def(
      "pt_inertia",
      [](const complex_array& arr, std::size_t m_dim, std::size_t n_dim, double tol) {
        const HermitianMatrix rho = matrix_from_array(arr);
        return inertia_tuple(
            inertia_float(partial_transpose(rho, BipartiteShape(m_dim, n_dim)), tol));
      },
      py::arg("matrix"), py::arg("m"), py::arg("n"), py::arg("tol") = 1e-9,
      "Inertia of the partial transpose.");

  m.def(
      "eig",
      [](const complex_array& arr) {
        const Spectrum s = eig_hermitian(matrix_from_array(arr));
        py::array_t<double> vals(s.eigenvalues.size());
        auto vv = vals.mutable_unchecked<1>();
        for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) vv(i) = s.eigenvalues[i];
        return py::make_tuple(vals, matrix_to_array(HermitianMatrix::trusted(s.eigenvectors)));
      },
      py::arg("matrix"), "Ascending eigenvalues and orthonormal eigenvector columns.");

  m.def("pure_state_inertia", [](std::size_t r, std::size_t m_dim, std::size_t n_dim) {
    return inertia_tuple(pure_state_inertia(r, m_dim, n_dim));
  });

  m.def(
      "enumerate_n2n",
      [](std::size_t n, bool with_states) {
        py::list out;
        for (const auto& cert : enumerate_n2n(n)) {
          py::dict d;
          d["claimed"] = inertia_tuple(cert.claimed);
          d["shape"] = py::make_tuple(cert.shape.m, cert.shape.n);
          d["verified"] = cert.verified == Verified::ExactVerified ? "exact" : "other";
          d["recipe"] = cert.recipe.dump();
          if (with_states) d["state"] = matrix_to_array(cert.state);
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("n"), py::arg("with_states") = false,
      "All (n-1)^2 attainable 2 x n partial-transpose inertias with certificates.");

  m.def("kron_inertia", [](py::tuple in1, py::tuple shape1, py::tuple in2, py::tuple shape2) {
    auto unpack_in = [](py::tuple t) {
      return Inertia{t[0].cast<std::size_t>(), t[1].cast<std::size_t>(),
                     t[2].cast<std::size_t>()};
    };
    auto unpack_sh = [](py::tuple t) {
      return BipartiteShape(t[0].cast<std::size_t>(), t[1].cast<std::size_t>());
    };
    return inertia_tuple(
        kron_inertia(unpack_in(in1), unpack_sh(shape1), unpack_in(in2), unpack_sh(shape2)));
  });

  m.def("ncopy_inertia", [](py::tuple in, unsigned copies) {
    const auto pair = ncopy_inertia(Inertia{in[0].cast<std::size_t>(), in[1].cast<std::size_t>(),
                                            in[2].cast<std::size_t>()},
                                    copies);
    return py::make_tuple(pair.first, pair.second);
  });

  m.def(
      "xstate",
      [](std::size_t n, std::vector<double> a, std::vector<double> b, std::vector<double> r,
         std::vector<double> theta) {
        XStateParams p{n, std::move(a), std::move(b), std::move(r), std::move(theta)};
        auto [state, shape] = xstate(p);
        return matrix_to_array(state);
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("r"), py::arg("theta"));

  m.def(
      "xstate_pt_spectrum",
      [](std::size_t n, std::vector<double> a, std::vector<double> b, std::vector<double> r,
         std::vector<double> theta) {
        XStateParams p{n, std::move(a), std::move(b), std::move(r), std::move(theta)};
        return xstate_pt_spectrum(p);
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("r"), py::arg("theta"),
      "Closed-form eigenvalues of the partially transposed X-state.");

  m.def("xstate_with_k_negatives", [](std::size_t n, std::size_t k) {
    const XStateParams p = xstate_with_k_negatives(n, k);
    py::dict d;
    d["n"] = p.n;
    d["a"] = p.a;
    d["b"] = p.b;
    d["r"] = p.r;
    d["theta"] = p.theta;
    return d;
  });

  m.def(
      "classify",
      [](const complex_array& arr, std::size_t m_dim, std::size_t n_dim, double tol) {
        const SloccClass cls =
            classify(matrix_from_array(arr), BipartiteShape(m_dim, n_dim), tol);
        return inertia_tuple(cls.pt_inertia);
      },
      py::arg("matrix"), py::arg("m"), py::arg("n"), py::arg("tol") = 1e-9,
      "Partial-transpose inertia label of an NPT state.");

  m.def(
      "is_entanglement_witness",
      [](const complex_array& arr, std::size_t m_dim, std::size_t n_dim, int budget,
         std::uint64_t seed) {
        const EwVerdict v = is_entanglement_witness(matrix_from_array(arr),
                                                    BipartiteShape(m_dim, n_dim), budget, seed);
        py::dict d;
        d["class"] = to_string(v.classification);
        d["min_value"] = v.min_value;
        d["restarts"] = v.restarts_used;
        d["seed"] = v.seed;
        if (v.witness_vector) {
          d["vector_a"] = v.witness_vector->a;
          d["vector_b"] = v.witness_vector->b;
        }
        return d;
      },
      py::arg("matrix"), py::arg("m"), py::arg("n"), py::arg("budget") = 64,
      py::arg("seed") = kDefaultSeed,
      "See-saw product-state minimization verdict.");

  m.def(
      "two_qubit_double_ew",
      [](double a, double b, double c) { return matrix_to_array(two_qubit_double_ew(a, b, c)); },
      py::arg("a") = 1.0, py::arg("b") = 4.0, py::arg("c") = 0.25);

  m.def("paper_examples_2x3", [] {
    py::list out;
    for (const auto& ex : paper_examples_2x3()) {
      out.append(py::make_tuple(matrix_to_array(ex.state), inertia_tuple(ex.pt_inertia)));
    }
    return out;
  });

  m.def(
      "sample_inertias",
      [](std::size_t m_dim, std::size_t n_dim, std::size_t count, std::uint64_t seed,
         double tol) {
        const BipartiteShape shape(m_dim, n_dim);
        py::dict table;
        for (std::size_t i = 0; i < count; ++i) {
          Rng rng(seed + i * 0x9E3779B97F4A7C15ULL);
          const HermitianMatrix rho = random_state_hs(shape.dim(), rng);
          const Inertia in = inertia_float(partial_transpose(rho, shape), tol);
          if (in.neg == 0) continue;
          py::tuple key = inertia_tuple(in);
          table[key] = table.contains(key) ? table[key].cast<std::size_t>() + 1 : 1;
        }
        return table;
      },
      py::arg("m"), py::arg("n"), py::arg("count") = 1000, py::arg("seed") = kDefaultSeed,
      py::arg("tol") = 1e-9,
      "Tabulates partial-transpose inertias of Hilbert-Schmidt NPT samples.");

  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.attr("__version__") = "0.1.0";
}
