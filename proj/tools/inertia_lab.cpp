#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "inertia/bipartite.hpp"
#include "inertia/constructors.hpp"
#include "inertia/eig.hpp"
#include "inertia/exact.hpp"
#include "inertia/generators.hpp"
#include "inertia/json_io.hpp"
#include "inertia/sampling.hpp"
#include "inertia/separability.hpp"
#include "inertia/slocc.hpp"
#include "inertia/verify.hpp"
#include "inertia/witness.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using inertia::json;

struct GlobalOpts {
  std::string command_line;
  std::uint64_t seed = inertia::kDefaultSeed;
  double tol = 1e-9;
  std::string out_path;
  std::size_t jobs = 1;
};

json make_manifest(const GlobalOpts& g, const std::string& mode, double wall_seconds) {
  return json{{"command", g.command_line}, {"seed", g.seed},          {"tolerance", g.tol},
              {"mode", mode},              {"version", kVersion},     {"wall_time_s", wall_seconds}};
}

void write_output(const GlobalOpts& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(g.out_path, std::ios::binary);
  if (!out) throw inertia::Error("cannot open output file: " + g.out_path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw inertia::Error("cannot open input file: " + path);
  return json::parse(in);
}

inertia::BipartiteShape parse_bipartite(const std::string& spec) {
  std::vector<std::size_t> dims;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) dims.push_back(std::stoul(item));
  if (dims.size() != 2) throw inertia::BadSpec("shape must be m,n");
  return {dims[0], dims[1]};
}

inertia::MultiShape parse_multi(const std::string& spec) {
  std::vector<std::size_t> dims;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) dims.push_back(std::stoul(item));
  return inertia::MultiShape(dims);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

int cmd_inertia(const GlobalOpts& g, const std::string& in_path, const std::string& shape_spec,
                bool gamma, bool exact) {
  Timer timer;
  inertia::HermitianMatrix m = inertia::hermitian_from_json(read_json_file(in_path));
  if (exact && !m.is_exact()) {
    throw inertia::NotExact("--exact requires an exact-mode matrix");
  }
  inertia::HermitianMatrix target = m;
  if (gamma) {
    if (shape_spec.empty()) throw inertia::BadSpec("--gamma needs --shape m,n");
    target = inertia::partial_transpose(m, parse_bipartite(shape_spec));
  } else if (!shape_spec.empty()) {
    parse_bipartite(shape_spec).require_dim(m.dim());
  }
  const inertia::Inertia in = exact ? inertia::inertia_exact(target)
                                    : inertia::inertia_float(target, g.tol);
  json out{{"inertia", inertia::inertia_to_json(in)}, {"of", gamma ? "gamma" : "raw"}};
  out["manifest"] = make_manifest(g, exact ? "exact" : "float", timer.seconds());
  write_output(g, out.dump(2));
  return 0;
}

int cmd_enumerate(const GlobalOpts& g, std::size_t n, bool with_states) {
  Timer timer;
  const auto certs = inertia::enumerate_n2n(n, g.jobs);
  json arr = json::array();
  for (const auto& c : certs) arr.push_back(inertia::certificate_to_json(c, with_states));
  json out{{"n", n}, {"count", certs.size()}, {"certificates", arr}};
  out["manifest"] = make_manifest(g, "exact", timer.seconds());
  write_output(g, out.dump(2));
  return 0;
}

int cmd_construct(const GlobalOpts& g, const std::string& recipe_path,
                  const std::string& recipe_inline) {
  Timer timer;
  json recipe;
  if (!recipe_inline.empty()) {
    recipe = json::parse(recipe_inline);
  } else if (!recipe_path.empty()) {
    recipe = read_json_file(recipe_path);
  } else {
    throw inertia::BadSpec("construct needs --recipe FILE or --recipe-json STRING");
  }
  auto [state, shape] = inertia::replay_recipe(recipe);
  const inertia::Inertia pt_in =
      inertia::inertia_auto(inertia::partial_transpose(state, shape), g.tol);
  json out{{"recipe", recipe},
           {"shape", inertia::shape_to_json(shape)},
           {"pt_inertia", inertia::inertia_to_json(pt_in)},
           {"state", inertia::hermitian_to_json(state)}};
  out["manifest"] = make_manifest(g, state.is_exact() ? "exact" : "float", timer.seconds());
  write_output(g, out.dump(2));
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& id, std::size_t n, std::size_t samples,
               int restarts) {
  Timer timer;
  inertia::VerifyParams params;
  params.n = n;
  params.samples = samples;
  params.seed = g.seed;
  params.tol = g.tol;
  params.restarts = restarts;
  params.jobs = g.jobs;
  const inertia::VerifyReport report = inertia::run_verify(id, params);
  json out = report.to_json();
  out["manifest"] = make_manifest(g, "mixed", timer.seconds());
  write_output(g, out.dump(2));
  return report.pass() ? 0 : 1;
}

int cmd_sample(const GlobalOpts& g, std::size_t m, std::size_t n, std::size_t count,
               const std::string& measure) {
  Timer timer;
  if (m > 6 || n > 6) throw inertia::BadSpec("sampling supports factor dimensions up to 6");
  const inertia::BipartiteShape shape(m, n);
  std::size_t induced_k = 0;  // 0 means Hilbert-Schmidt
  if (measure != "hilbert-schmidt") {
    if (measure.rfind("induced-", 0) != 0) {
      throw inertia::BadSpec("measure must be hilbert-schmidt or induced-<k>");
    }
    induced_k = std::stoul(measure.substr(8));
    if (induced_k == 0) throw inertia::BadSpec("induced measure needs k >= 1");
  }

  // Per-draw seeds make the tabulation independent of worker scheduling.
  std::map<std::array<std::size_t, 3>, std::size_t> table;
  std::size_t npt_total = 0;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::map<std::array<std::size_t, 3>, std::size_t> local;
    std::size_t local_npt = 0;
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      inertia::Rng rng(g.seed + i * 0x9E3779B97F4A7C15ULL);
      const inertia::HermitianMatrix rho =
          induced_k ? inertia::random_state_induced(shape.dim(), induced_k, rng)
                    : inertia::random_state_hs(shape.dim(), rng);
      const inertia::Inertia in =
          inertia::inertia_float(inertia::partial_transpose(rho, shape), g.tol);
      if (in.neg == 0) continue;  // PPT draw; only NPT states are tabulated
      ++local_npt;
      ++local[{in.neg, in.zero, in.pos}];
    }
    std::lock_guard<std::mutex> lock(mu);
    npt_total += local_npt;
    for (const auto& [key, cnt] : local) table[key] += cnt;
  };
  if (g.jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min<std::size_t>(g.jobs, count); ++w) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) th.join();
  }

  std::ostringstream csv;
  csv << "# inertia tabulation of partially transposed NPT samples;"
      << " empirical, not a claim\n";
  csv << "# manifest: " << make_manifest(g, "float", timer.seconds()).dump() << "\n";
  csv << "neg,zero,pos,count,fraction\n";
  for (const auto& [key, cnt] : table) {
    csv << key[0] << "," << key[1] << "," << key[2] << "," << cnt << ","
        << (npt_total ? double(cnt) / double(npt_total) : 0.0) << "\n";
  }
  write_output(g, csv.str());
  return 0;
}

int cmd_classify(const GlobalOpts& g, const std::string& in_path, const std::string& shape_spec) {
  Timer timer;
  const inertia::HermitianMatrix m = inertia::hermitian_from_json(read_json_file(in_path));
  const inertia::BipartiteShape shape = parse_bipartite(shape_spec);
  const inertia::SloccClass cls = inertia::classify(m, shape, g.tol);
  json out{{"label", inertia::inertia_to_json(cls.pt_inertia)},
           {"shape", {cls.shape.m, cls.shape.n}}};
  out["manifest"] = make_manifest(g, m.is_exact() ? "exact" : "float", timer.seconds());
  write_output(g, out.dump(2));
  return 0;
}

int cmd_reduce(const GlobalOpts& g, const std::string& in_path, const std::string& shape_spec) {
  Timer timer;
  const inertia::HermitianMatrix m = inertia::hermitian_from_json(read_json_file(in_path));
  const inertia::BipartiteShape shape = parse_bipartite(shape_spec);
  inertia::KernelSearchOptions opts;
  opts.seed = g.seed;
  const inertia::ReduceResult r = inertia::reduce_2xn(m, shape, g.tol, opts);
  json out{{"mode", r.mode == inertia::ReduceMode::ProjectedOut ? "projected_out"
                                                                : "congruence_reduced"},
           {"shape_before", inertia::shape_to_json(shape)},
           {"shape_after", inertia::shape_to_json(r.shape)},
           {"pt_inertia_before", inertia::inertia_to_json(r.pt_inertia_before)},
           {"pt_inertia_after", inertia::inertia_to_json(r.pt_inertia_after)},
           {"state", inertia::hermitian_to_json(r.state)}};
  out["manifest"] = make_manifest(g, r.state.is_exact() ? "exact" : "float", timer.seconds());
  write_output(g, out.dump(2));
  return 0;
}

int cmd_separability(const GlobalOpts& g, const std::string& in_path,
                     const std::string& dims_spec, bool exact) {
  Timer timer;
  const inertia::HermitianMatrix m = inertia::hermitian_from_json(read_json_file(in_path));
  if (exact && !m.is_exact()) throw inertia::NotExact("--exact requires an exact-mode matrix");
  const inertia::MultiShape shape = parse_multi(dims_spec);
  const auto report = inertia::rank_pt_all_bipartitions(m, shape, g.tol);
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back(json{{"subset", inertia::subset_to_json(row.subset)},
                        {"inertia", inertia::inertia_to_json(row.inertia)},
                        {"rank", row.rank},
                        {"margin", row.margin}});
  }
  json out{{"shape", inertia::shape_to_json(report.shape)},
           {"state_rank", report.state_rank},
           {"rows", rows},
           {"verdict", report.verdict == inertia::SeparabilityVerdict::SeparableByCriterion
                           ? "separable_by_criterion"
                           : "criterion_inapplicable"}};
  out["manifest"] = make_manifest(g, m.is_exact() ? "exact" : "float", timer.seconds());
  write_output(g, out.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  for (int i = 0; i < argc; ++i) {
    if (i) g.command_line += " ";
    g.command_line += argv[i];
  }
  if (const char* env_seed = std::getenv("INERTIA_LAB_SEED")) {
    g.seed = std::strtoull(env_seed, nullptr, 0);
  }

  CLI::App app{"Inertia laboratory for partially transposed bipartite operators"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--seed", g.seed, "random seed (also INERTIA_LAB_SEED)");
  app.add_option("--tol", g.tol, "relative zero threshold")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_path, "write output to this file instead of stdout");
  app.add_option("--jobs", g.jobs, "worker pool size for sampling and enumeration");

  std::string in_path, shape_spec, dims_spec, recipe_path, recipe_inline, id, measure =
      "hilbert-schmidt";
  bool gamma = false, exact = false, with_states = false;
  std::size_t n = 3, m_dim = 2, n_dim = 2, count = 1000, samples = 0, vn = 0;
  int restarts = 64;

  auto* c_inertia = app.add_subcommand("inertia", "inertia of a matrix or its partial transpose");
  c_inertia->add_option("--in", in_path, "matrix json file")->required();
  c_inertia->add_option("--shape", shape_spec, "bipartite shape m,n");
  c_inertia->add_flag("--gamma", gamma, "analyze the partial transpose");
  c_inertia->add_flag("--exact", exact, "certify by exact congruence");

  auto* c_enum = app.add_subcommand("enumerate", "attainable 2 x n partial-transpose inertias");
  c_enum->add_option("--n", n, "second factor dimension")->required();
  c_enum->add_flag("--with-states", with_states, "embed the state matrices");

  auto* c_construct = app.add_subcommand("construct", "build a state from a recipe");
  c_construct->add_option("--recipe", recipe_path, "recipe json file");
  c_construct->add_option("--recipe-json", recipe_inline, "inline recipe json");

  auto* c_verify = app.add_subcommand("verify", "run a property suite");
  c_verify->add_option("--id", id, "check id")->required();
  c_verify->add_option("--n", vn, "size parameter");
  c_verify->add_option("--samples", samples, "sample count");
  c_verify->add_option("--restarts", restarts, "see-saw restart budget");

  auto* c_sample = app.add_subcommand("sample", "tabulate inertias of random NPT states");
  c_sample->add_option("--m", m_dim, "first factor dimension")->required();
  c_sample->add_option("--n", n_dim, "second factor dimension")->required();
  c_sample->add_option("--count", count, "number of draws");
  c_sample->add_option("--measure", measure, "hilbert-schmidt or induced-<k>");

  auto* c_classify = app.add_subcommand("classify", "inertia class label of an NPT state");
  c_classify->add_option("--in", in_path, "matrix json file")->required();
  c_classify->add_option("--shape", shape_spec, "bipartite shape m,n")->required();

  auto* c_reduce = app.add_subcommand("reduce", "shrink a 2 x n state by one qudit level");
  c_reduce->add_option("--in", in_path, "matrix json file")->required();
  c_reduce->add_option("--shape", shape_spec, "bipartite shape 2,n")->required();

  auto* c_sep = app.add_subcommand("separability", "rank survey of all partial transposes");
  c_sep->add_option("--in", in_path, "matrix json file")->required();
  c_sep->add_option("--dims", dims_spec, "factor dimensions d1,d2,...")->required();
  c_sep->add_flag("--exact", exact, "force exact ranks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_inertia)) return cmd_inertia(g, in_path, shape_spec, gamma, exact);
    if (app.got_subcommand(c_enum)) return cmd_enumerate(g, n, with_states);
    if (app.got_subcommand(c_construct)) return cmd_construct(g, recipe_path, recipe_inline);
    if (app.got_subcommand(c_verify)) return cmd_verify(g, id, vn, samples, restarts);
    if (app.got_subcommand(c_sample)) return cmd_sample(g, m_dim, n_dim, count, measure);
    if (app.got_subcommand(c_classify)) return cmd_classify(g, in_path, shape_spec);
    if (app.got_subcommand(c_reduce)) return cmd_reduce(g, in_path, shape_spec);
    if (app.got_subcommand(c_sep)) return cmd_separability(g, in_path, dims_spec, exact);
  } catch (const inertia::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const inertia::BadSpec& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const inertia::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
