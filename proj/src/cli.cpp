#include "nodalq/cli.hpp"

#include "nodalq/io.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace nodalq::cli {

namespace {

using io::json;

constexpr const char* kToolVersion = "0.1.0";
constexpr std::uint64_t kDefaultSeed = 20240601;

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

// Order-stable fan-out: result i always comes from input i, and the first
// failing index (in input order) is the one rethrown.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, int workers, F fn) {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  const auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < items.size(); i += stride) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n = static_cast<std::size_t>(std::max(1, workers));
  if (n == 1 || items.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
  }
  std::vector<R> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

std::vector<Rational> parse_roots(const std::string& csv) {
  std::vector<Rational> roots;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) roots.push_back(parse_rational(item));
  return roots;
}

struct Context {
  json inputs = json::object();
  json payload = json::object();
  int exit_code = kExitOk;

  std::string add_input(const std::string& role, const std::string& path) {
    inputs[role] = {{"path", path}, {"sha256", sha256_file(path)}};
    return path;
  }
};

struct Options {
  std::string surface;
  std::string nodes;
  std::string family;
  std::string config;
  std::string search;
  std::string roots;
  std::string out;
  std::optional<int> delta;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
};

void cmd_certify(const Options& o, Context& ctx) {
  const HomogPoly f = io::poly_from_json(io::read_json_file(ctx.add_input("surface", o.surface)));
  const auto points = io::points_from_json(io::read_json_file(ctx.add_input("nodes", o.nodes)));
  const auto reports = parallel_map(points, o.workers, [&](const ProjPointQ& p) { return certify_point(f, p); });
  json list = json::array();
  int nodes = 0;
  for (const auto& r : reports) {
    list.push_back(io::to_json(r));
    nodes += r.classification == Classification::Node;
  }
  ctx.payload = {{"reports", list}, {"node_count", nodes}};
}

void cmd_find_singular(const Options& o, Context& ctx) {
  const HomogPoly f = io::poly_from_json(io::read_json_file(ctx.add_input("surface", o.surface)));
  SearchConfig cfg;
  if (!o.search.empty()) cfg = io::search_config_from_json(io::read_json_file(ctx.add_input("search", o.search)));
  std::mt19937_64 rng(o.seed);
  const auto candidates = find_singular_numeric(f, cfg, rng);
  json list = json::array();
  std::vector<ProjPointQ> exact_nodes;
  for (const auto& c : candidates) {
    list.push_back(io::to_json(c));
    if (c.report.mode == CertificationMode::Exact && c.report.classification == Classification::Node)
      exact_nodes.push_back(c.report.point);
  }
  ctx.payload = {{"seed", o.seed},
                 {"config", io::to_json(cfg)},
                 {"candidates", list},
                 {"exact_nodes", io::points_to_json(exact_nodes)}};
}

void cmd_severi(const Options& o, Context& ctx) {
  const NodeSet nodes(io::points_from_json(io::read_json_file(ctx.add_input("nodes", o.nodes))));
  SeveriReport report;
  if (o.surface.empty()) {
    report = independence_report(nodes);
  } else {
    const HomogPoly f = io::poly_from_json(io::read_json_file(ctx.add_input("surface", o.surface)));
    report = independence_test(f, nodes);
  }
  ctx.payload = io::to_json(report);
  if (report.violation()) ctx.exit_code = kExitViolation;
}

void cmd_stalk(const Options& o, Context& ctx) {
  if (o.delta.has_value() == !o.family.empty()) throw InvalidArgument("stalk needs exactly one of --delta, --family");
  OperatorFamily family;
  const bool nodal = o.delta.has_value();
  if (nodal) {
    family = pl_family(nodal_model(*o.delta), "nodal-" + std::to_string(*o.delta));
  } else {
    family = io::family_from_json(io::read_json_file(ctx.add_input("family", o.family)));
  }
  const BComplex b = build_bcomplex(family);
  json bdims = json::array();
  for (int p = 0; p <= b.top_degree(); ++p) bdims.push_back(b.dim(p));
  ctx.payload = {{"mode", nodal ? "nodal" : "family"},
                 {"label", family.label},
                 {"delta", family.delta()},
                 {"ambient_dim", family.ambient_dim},
                 {"commuting", b.commuting()},
                 {"corestricted", b.corestricted()},
                 {"d_squared_zero", b.d_squared_zero()},
                 {"b_dims", bdims}};
  if (!b.is_complex()) {
    ctx.payload["dims"] = nullptr;
    ctx.payload["euler"] = nullptr;
    ctx.exit_code = kExitViolation;
    return;
  }
  const StalkCohomology h = nodal ? nodal_stalk(*o.delta) : cohomology(b);
  ctx.payload["dims"] = h.dims;
  ctx.payload["euler"] = h.euler;
  if (nodal && std::any_of(h.dims.begin() + 1, h.dims.end(), [](Index d) { return d != 0; }))
    ctx.exit_code = kExitViolation;
}

void cmd_betti(const Options& o, Context& ctx) {
  if (!o.delta) throw InvalidArgument("betti needs --delta");
  ctx.payload = {{"delta", *o.delta}, {"betti", betti_nodal_quartic(*o.delta)}};
}

void cmd_lattice(const Options& o, Context& ctx) {
  if (o.delta.has_value() == !o.config.empty()) throw InvalidArgument("lattice needs exactly one of --delta, --config");
  const CycleConfiguration config = o.delta ? nodal_model(*o.delta)
                                            : io::configuration_from_json(io::read_json_file(ctx.add_input("config", o.config)));
  config.validate();
  const SigmaSplitting s = sigma_splitting(config);
  ctx.payload = io::to_json(s);
  ctx.payload["dim"] = config.space.dim();
  ctx.payload["delta"] = static_cast<int>(config.sigmas.size());
  ctx.payload["nodal_axioms"] = config.satisfies_nodal_axioms();
  ctx.payload["rank_check"] = 1 + s.sigma_perp_prim.dim() + s.sigma.dim() == config.space.dim();
}

void cmd_kummer(const Options& o, Context& ctx) {
  const auto roots = parse_roots(o.roots);
  if (roots.size() != 6) throw NotSplit("--roots must list six rational roots");
  const KummerOutput k = kummer_from_sextic(SexticCurve::from_roots(roots));
  const SeveriReport report = independence_test(k.quartic, NodeSet(k.node_candidates));
  json root_list = json::array();
  for (const auto& r : roots) root_list.push_back(to_string(r));
  json reports = json::array();
  for (const auto& r : k.reports) reports.push_back(io::to_json(r));
  ctx.payload = {{"roots", root_list},
                 {"surface", io::to_json(k.quartic)},
                 {"nodes", io::points_to_json(k.node_candidates)},
                 {"reports", reports},
                 {"severi", io::to_json(report)}};
  if (!o.out.empty()) {
    io::write_json_file(o.out + ".surface.json", io::to_json(k.quartic));
    io::write_json_file(o.out + ".nodes.json", io::points_to_json(k.node_candidates));
    io::write_json_file(o.out + ".severi.json", io::to_json(report));
  }
  if (report.violation()) ctx.exit_code = kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for nodal quartic surfaces", "nodalq"};
  app.require_subcommand(1);
  Options o;
  const auto add_common = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Also write the report to this file"); };

  auto* certify = app.add_subcommand("certify", "Certify points of a surface exactly");
  certify->add_option("--surface", o.surface, "Polynomial JSON")->required();
  certify->add_option("--nodes", o.nodes, "Points JSON")->required();
  certify->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 256));
  add_common(certify);

  auto* find = app.add_subcommand("find-singular", "Numerical search for singular points");
  find->add_option("--surface", o.surface, "Polynomial JSON")->required();
  find->add_option("--seed", o.seed, "Random seed");
  find->add_option("--search", o.search, "SearchConfig JSON");
  add_common(find);

  auto* severi = app.add_subcommand("severi", "Independence of node conditions on quartics");
  severi->add_option("--nodes", o.nodes, "Points JSON")->required();
  severi->add_option("--surface", o.surface, "Polynomial JSON; omit for rank-only mode");
  add_common(severi);

  auto* stalk = app.add_subcommand("stalk", "Intersection-cohomology stalk from monodromy operators");
  stalk->add_option("--delta", o.delta, "Number of nodes of the standard model")->check(CLI::Range(0, 16));
  stalk->add_option("--family", o.family, "OperatorFamily JSON");
  add_common(stalk);

  auto* betti = app.add_subcommand("betti", "Betti numbers of a nodal quartic");
  betti->add_option("--delta", o.delta, "Number of nodes")->required()->check(CLI::Range(0, 16));
  add_common(betti);

  auto* lattice = app.add_subcommand("lattice", "Splitting of H^2 around the vanishing cycles");
  lattice->add_option("--delta", o.delta, "Number of nodes of the standard model")->check(CLI::Range(0, 16));
  lattice->add_option("--config", o.config, "CycleConfiguration JSON");
  add_common(lattice);

  auto* kummer = app.add_subcommand("kummer", "Kummer quartic with sixteen rational nodes");
  kummer->add_option("--roots", o.roots, "Six distinct rational roots, comma separated")->required();
  kummer->add_option("--out", o.out, "Output prefix for <prefix>.surface/.nodes/.severi.json");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  Context ctx;
  const auto start = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "certify") cmd_certify(o, ctx);
    else if (name == "find-singular") cmd_find_singular(o, ctx);
    else if (name == "severi") cmd_severi(o, ctx);
    else if (name == "stalk") cmd_stalk(o, ctx);
    else if (name == "betti") cmd_betti(o, ctx);
    else if (name == "lattice") cmd_lattice(o, ctx);
    else if (name == "kummer") cmd_kummer(o, ctx);
  } catch (const CertificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const InternalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  json report = {{"command", name},
                 {"inputs", ctx.inputs},
                 {"outputs", ctx.payload},
                 {"versions", {{"tool", kToolVersion}, {"format", io::kFormatVersion}}},
                 {"timing", {{"wall_ms", std::round(elapsed.count() * 1000) / 1000}}}};
  out << report.dump(2) << '\n';
  if (!o.out.empty() && name != "kummer") {
    try {
      io::write_json_file(o.out, report);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  return ctx.exit_code;
}

}  // namespace nodalq::cli
