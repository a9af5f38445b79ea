#include "inertia/generators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "inertia/bipartite.hpp"
#include "inertia/constructors.hpp"
#include "inertia/eig.hpp"
#include "inertia/exact.hpp"

namespace inertia {

bool verify_certificate(WitnessCertificate& cert, double tol) {
  const HermitianMatrix pt = partial_transpose(cert.state, cert.shape);
  const Inertia measured = cert.state.is_exact() ? inertia_exact(pt) : inertia_float(pt, tol);
  if (measured != cert.claimed) {
    cert.verified = Verified::Unverified;
    return false;
  }
  cert.verified = cert.state.is_exact() ? Verified::ExactVerified : Verified::FloatVerified;
  return true;
}

namespace {

std::string verified_str(Verified v) {
  switch (v) {
    case Verified::ExactVerified:
      return "exact";
    case Verified::FloatVerified:
      return "float";
    default:
      return "none";
  }
}

Verified verified_from_str(const std::string& s) {
  if (s == "exact") return Verified::ExactVerified;
  if (s == "float") return Verified::FloatVerified;
  if (s == "none") return Verified::Unverified;
  throw BadSpec("unknown verification tag: " + s);
}

}  // namespace

json certificate_to_json(const WitnessCertificate& cert, bool with_state) {
  json j{{"shape", shape_to_json(cert.shape)},
         {"claimed", inertia_to_json(cert.claimed)},
         {"recipe", cert.recipe},
         {"verified", verified_str(cert.verified)}};
  if (with_state) j["state"] = hermitian_to_json(cert.state);
  return j;
}

WitnessCertificate certificate_from_json(const json& j) {
  const BipartiteShape shape = bipartite_shape_from_json(j.at("shape"));
  const Inertia claimed = inertia_from_json(j.at("claimed"));
  const json& recipe = j.at("recipe");
  HermitianMatrix state = j.contains("state") ? hermitian_from_json(j.at("state"))
                                              : replay_recipe(recipe).first;
  WitnessCertificate cert{std::move(state), shape, claimed, recipe,
                          verified_from_str(j.value("verified", "none"))};
  return cert;
}

namespace {

std::pair<HermitianMatrix, BipartiteShape> run_construct_step(const json& step) {
  const std::string kind = step.at("kind").get<std::string>();
  if (kind == "staircase") {
    return staircase_state(step.at("j").get<std::size_t>());
  }
  if (kind == "pure") {
    SchmidtSpec spec;
    spec.r = step.at("r").get<std::size_t>();
    spec.m = step.at("m").get<std::size_t>();
    spec.n = step.at("n").get<std::size_t>();
    if (step.contains("coefficients")) {
      spec.coefficients = step.at("coefficients").get<std::vector<double>>();
    }
    return pure_state(spec);
  }
  if (kind == "xstate") {
    const std::size_t n = step.at("n").get<std::size_t>();
    XStateParams p;
    if (step.contains("k")) {
      p = xstate_with_k_negatives(n, step.at("k").get<std::size_t>());
    } else {
      p.n = n;
      p.a = step.at("a").get<std::vector<double>>();
      p.b = step.at("b").get<std::vector<double>>();
      p.r = step.at("r").get<std::vector<double>>();
      p.theta = step.contains("theta") ? step.at("theta").get<std::vector<double>>()
                                       : std::vector<double>(n, 0.0);
    }
    return xstate(p);
  }
  if (kind == "paper2x3") {
    const std::size_t index = step.at("index").get<std::size_t>();
    auto examples = paper_examples_2x3();
    if (index < 1 || index > examples.size()) throw BadSpec("paper2x3 index must be 1..4");
    return {examples[index - 1].state, examples[index - 1].shape};
  }
  if (kind == "diag") {
    const std::size_t m = step.at("m").get<std::size_t>();
    const std::size_t n = step.at("n").get<std::size_t>();
    return {diagonal_separable(m, n, step.at("p").get<std::size_t>()), BipartiteShape(m, n)};
  }
  if (kind == "doubleEW") {
    return {two_qubit_double_ew(step.at("a").get<double>(), step.at("b").get<double>(),
                                step.at("c").get<double>()),
            BipartiteShape(2, 2)};
  }
  throw BadSpec("unknown construction kind: " + kind);
}

HermitianMatrix add_basis_cells(const HermitianMatrix& state,
                                const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                                const BipartiteShape& shape) {
  Matrix out = state.raw();
  for (const auto& [p, q] : cells) {
    if (p >= shape.m || q >= shape.n) throw BadSpec("product cell outside the shape");
    const std::size_t idx = p * shape.n + q;
    out.set(idx, idx,
            out.entry(idx, idx) + (out.is_exact() ? ComplexScalar::exact_int(1)
                                                  : ComplexScalar(cd{1.0, 0.0})));
  }
  return HermitianMatrix::trusted(std::move(out));
}

}  // namespace

std::pair<HermitianMatrix, BipartiteShape> replay_recipe(const json& recipe) {
  json steps = recipe;
  if (recipe.is_object()) {
    json step = recipe;
    step["op"] = "construct";
    steps = json::array({step});
  }
  if (!steps.is_array() || steps.empty()) throw BadSpec("recipe must be a non-empty step array");

  HermitianMatrix state = HermitianMatrix::zero(1, Mode::Exact);
  BipartiteShape shape(1, 1);
  bool have_state = false;
  for (const json& step : steps) {
    const std::string op = step.value("op", step.contains("kind") ? "construct" : "");
    if (op == "construct") {
      std::tie(state, shape) = run_construct_step(step);
      have_state = true;
      continue;
    }
    if (op == "matrix") {
      state = hermitian_from_json(step.at("state"));
      shape = bipartite_shape_from_json(step.at("shape"));
      shape.require_dim(state.dim());
      have_state = true;
      continue;
    }
    if (!have_state) throw BadSpec("recipe must start with a construct or matrix step");
    if (op == "embed") {
      BipartiteShape to = bipartite_shape_from_json(step.at("to"));
      state = embed(state, shape, to);
      shape = to;
    } else if (op == "add_products") {
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (const auto& c : step.at("cells")) {
        cells.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
      }
      state = add_basis_cells(state, cells, shape);
    } else if (op == "shift") {
      const mpq_class x = rational_from_string(step.at("x").get<std::string>());
      HermitianMatrix eye = HermitianMatrix::identity(state.dim(), state.mode());
      state = state.add(eye.scaled_real(state.is_exact()
                                            ? ComplexScalar(GaussianRational(x, mpq_class(0)))
                                            : ComplexScalar(cd{x.get_d(), 0.0})));
    } else {
      throw BadSpec("unknown recipe op: " + op);
    }
  }
  return {std::move(state), shape};
}

WitnessCertificate shift_to_full_rank(const HermitianMatrix& rho, const BipartiteShape& shape,
                                      json base_recipe) {
  shape.require_dim(rho.dim());
  if (inertia_auto(rho).neg != 0) throw NotAState("shift requires a positive semidefinite input");
  const HermitianMatrix pt = partial_transpose(rho, shape);
  const Inertia before = inertia_auto(pt);

  mpq_class x(1);
  if (before.neg > 0) {
    const Spectrum s = eig_hermitian(pt);
    const double cut = 1e-9 * std::max(1.0, s.spectral_radius());
    double min_neg_mag = 0.0;
    for (double v : s.eigenvalues) {
      if (v < -cut) min_neg_mag = (min_neg_mag == 0.0) ? -v : std::min(min_neg_mag, -v);
    }
    x = mpq_class(min_neg_mag / 2.0);
  }

  const Inertia claimed{before.neg, 0, before.zero + before.pos};
  HermitianMatrix sigma = rho;
  for (int attempt = 0;; ++attempt) {
    const ComplexScalar xs = rho.is_exact()
                                 ? ComplexScalar(GaussianRational(x, mpq_class(0)))
                                 : ComplexScalar(cd{x.get_d(), 0.0});
    sigma = rho.add(HermitianMatrix::identity(rho.dim(), rho.mode()).scaled_real(xs));
    if (inertia_auto(partial_transpose(sigma, shape)) == claimed) break;
    if (attempt >= 64) throw Error("shift amount failed to certify after repeated halving");
    x /= 2;  // too aggressive an estimate; shrink until the inertia certifies
  }

  if (base_recipe.is_null()) {
    base_recipe = json::array(
        {json{{"op", "matrix"}, {"state", hermitian_to_json(rho)}, {"shape", shape_to_json(shape)}}});
  }
  json recipe = base_recipe;
  recipe.push_back(json{{"op", "shift"}, {"x", rational_to_string(x)}});
  WitnessCertificate cert{std::move(sigma), shape, claimed, std::move(recipe)};
  verify_certificate(cert);
  return cert;
}

WitnessCertificate pad_and_add_products(const HermitianMatrix& rho, const BipartiteShape& from,
                                        const BipartiteShape& to, std::size_t l,
                                        json base_recipe) {
  from.require_dim(rho.dim());
  if (to.m < from.m || to.n < from.n) throw ShapeMismatch("target shape is smaller");
  const std::size_t extra = to.dim() - from.dim();
  if (l > extra) throw TooManyProducts("at most " + std::to_string(extra) + " product cells fit");

  const Inertia before = inertia_auto(partial_transpose(rho, from));
  if (before.zero != 0) {
    throw BadSpec("input partial transpose must have no zero eigenvalues; shift first");
  }

  // Cells outside the embedded block, row-major; these are fixed points of
  // the partial transpose, so adding them before or after it is identical.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t p = 0; p < to.m && cells.size() < l; ++p) {
    for (std::size_t q = 0; q < to.n && cells.size() < l; ++q) {
      if (p >= from.m || q >= from.n) cells.emplace_back(p, q);
    }
  }

  HermitianMatrix sigma = embed(rho, from, to);
  {
    Matrix work = sigma.raw();
    for (const auto& [p, q] : cells) {
      const std::size_t idx = p * to.n + q;
      work.set(idx, idx,
               work.entry(idx, idx) + (work.is_exact() ? ComplexScalar::exact_int(1)
                                                       : ComplexScalar(cd{1.0, 0.0})));
    }
    sigma = HermitianMatrix::trusted(std::move(work));
  }

  if (base_recipe.is_null()) {
    base_recipe = json::array(
        {json{{"op", "matrix"}, {"state", hermitian_to_json(rho)}, {"shape", shape_to_json(from)}}});
  }
  json recipe = base_recipe;
  recipe.push_back(json{{"op", "embed"}, {"to", {to.m, to.n}}});
  json cell_arr = json::array();
  for (const auto& [p, q] : cells) cell_arr.push_back(json::array({p, q}));
  recipe.push_back(json{{"op", "add_products"}, {"cells", cell_arr}});

  const Inertia claimed{before.neg, extra - l, before.pos + l};
  WitnessCertificate cert{std::move(sigma), to, claimed, std::move(recipe)};
  verify_certificate(cert);
  return cert;
}

std::vector<Inertia> expected_n2n_inertias(std::size_t n) {
  if (n < 2) throw BadSpec("need n >= 2");
  std::vector<Inertia> out;
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t l = 0; l <= 2 * (n - j); ++l) {
      out.push_back(Inertia{j - 1, 2 * (n - j) - l, j + 1 + l});
    }
  }
  return out;
}

std::vector<WitnessCertificate> enumerate_n2n(std::size_t n, std::size_t jobs) {
  if (n < 2) throw BadSpec("need n >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> tasks;  // (j, l), canonical order
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t l = 0; l <= 2 * (n - j); ++l) tasks.emplace_back(j, l);
  }

  std::vector<WitnessCertificate> out(tasks.size(),
                                      WitnessCertificate{HermitianMatrix::zero(1, Mode::Exact),
                                                         BipartiteShape(1, 1), Inertia{}, json()});
  auto build = [&](std::size_t t) {
    const auto [j, l] = tasks[t];
    auto [seed, seed_shape] = staircase_state(j);
    json base = json::array({json{{"op", "construct"}, {"kind", "staircase"}, {"j", j}}});
    WitnessCertificate cert =
        pad_and_add_products(seed, seed_shape, BipartiteShape(2, n), l, std::move(base));
    if (cert.verified != Verified::ExactVerified) {
      throw Error("enumeration certificate failed exact verification");
    }
    out[t] = std::move(cert);
  };

  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) build(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers = std::min(jobs, tasks.size());
    std::atomic<bool> failed{false};
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
          try {
            build(t);
          } catch (...) {
            failed = true;
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failed) throw Error("enumeration worker failed");
  }
  return out;
}

Inertia kron_inertia(const Inertia& in1, const BipartiteShape& shape1, const Inertia& in2,
                     const BipartiteShape& shape2) {
  if (in1.dim() != shape1.dim() || in2.dim() != shape2.dim()) {
    throw BadSpec("inertia components must sum to the shape dimension");
  }
  const std::size_t neg = in1.neg * in2.pos + in2.neg * in1.pos;
  const std::size_t pos = in1.neg * in2.neg + in1.pos * in2.pos;
  const std::size_t zero =
      in1.zero * shape2.dim() + in2.zero * shape1.dim() - in1.zero * in2.zero;
  return Inertia{neg, zero, pos};
}

std::pair<std::uint64_t, std::uint64_t> ncopy_inertia(const Inertia& in, unsigned n_copies) {
  if (n_copies < 1) throw BadSpec("need at least one copy");
  // nu- collects tensor products with an odd number of negative factors,
  // nu+ those with an even number; zero factors never contribute.
  const unsigned __int128 a = in.neg, c = in.pos;
  unsigned __int128 odd = 0, even = 1;
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  for (unsigned step = 0; step < n_copies; ++step) {
    const unsigned __int128 new_odd = odd * c + even * a;
    const unsigned __int128 new_even = even * c + odd * a;
    if (new_odd > cap || new_even > cap) throw BadSpec("copy count overflows 64 bits");
    odd = new_odd;
    even = new_even;
  }
  return {static_cast<std::uint64_t>(odd), static_cast<std::uint64_t>(even)};
}

}  // namespace inertia
