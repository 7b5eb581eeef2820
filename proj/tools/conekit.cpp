// Command-line front end: every subcommand prints one JSON document.
// Exit codes: 0 success, 2 invalid input, 3 uncertified result under --require-certified,
// 1 internal failure.

#include "conekit/error.hpp"
#include "conekit/hyperbolic.hpp"
#include "conekit/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace conekit;

namespace {

struct Options {
  std::string fixture;
  std::uint64_t seed = 1;
  std::size_t budget = 0;  // 0 keeps the fixture or library default
  bool require_certified = false;
  bool emit_plot_data = false;
  std::string output;

  std::string x, y, divisor, apply, show_name;
  long degree_bound = 3;
  std::vector<long> bounds{2, 3, 4};
  std::size_t samples = 100;
  bool run_self_test = false;
};

const SurfaceData& need_surface(const Fixture& f) {
  if (!f.surface) fail(ErrorCode::InvalidFixture, "fixture '" + f.name + "' has no surface data");
  return *f.surface;
}

VectorQ vector_arg(const std::string& text, const char* what) {
  if (text.empty()) fail(ErrorCode::MalformedInput, std::string("missing --") + what);
  return parse_vector(text);
}

// "name=coef,name=coef" over the curve list; coefficients default to 1.
std::vector<Rational> parse_divisor(const SurfaceData& s, const std::string& text) {
  std::vector<Rational> d(s.curves().size(), Rational(0));
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    const std::string name = item.substr(0, eq);
    const auto idx = s.curve_index(name);
    if (!idx) fail(ErrorCode::MalformedInput, "unknown curve '" + name + "'");
    d[*idx] += eq == std::string::npos ? Rational(1) : parse_rational(item.substr(eq + 1));
  }
  return d;
}

ZariskiDecomp decomposition(const SurfaceData& s, const std::string& divisor) {
  return divisor.empty() ? zariski_anticanonical(s) : zariski_decompose(s, parse_divisor(s, divisor));
}

DirichletOptions dirichlet_options(const Fixture& f, const Options& o) {
  DirichletOptions d = f.dirichlet.value_or(DirichletOptions{});
  if (o.budget) d.max_elements = o.budget;
  return d;
}

DirichletResult run_dirichlet(const Fixture& f, const Options& o) {
  if (!f.group || !f.basepoint) fail(ErrorCode::InvalidFixture, "fixture '" + f.name + "' has no group or basepoint");
  return dirichlet_domain(f.lattice, std::nullopt, *f.group, *f.basepoint, dirichlet_options(f, o));
}

Json plot_data(const PolyCone& c) {
  Json rays = Json::array();
  for (const auto& r : c.rays()) {
    Json row = Json::array();
    for (Index i = 0; i < r.size(); ++i) row.push_back(r[i].convert_to<double>());
    rays.push_back(row);
  }
  return rays;
}

int emit(const Json& doc, const Options& o) {
  const std::string text = doc.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) fail(ErrorCode::MalformedInput, "cannot write " + o.output);
    out << text;
  }
  return 0;
}

struct Outcome {
  Json doc;
  bool certified = true;
};

Outcome run(const std::string& cmd, const Options& o) {
  if (cmd == "fixtures-list") {
    return {{{"fixtures", fixture_names()}}};
  }
  if (cmd == "fixtures-show") {
    const Fixture f = load_fixture(o.show_name);
    Json doc = to_json(f);
    if (o.run_self_test) doc["self_test"] = {{"mismatches", self_test(f)}};
    return {doc};
  }
  const Fixture f = load_fixture(o.fixture);
  const LorentzLattice& L = f.lattice;
  if (cmd == "pairing") {
    const VectorQ x = vector_arg(o.x, "x");
    const VectorQ y = o.y.empty() ? x : parse_vector(o.y);
    return {{{"x", to_json(x)}, {"y", to_json(y)}, {"pairing", to_json(L.pairing(x, y))}}};
  }
  if (cmd == "signature") {
    const auto sig = signature(L);
    return {{{"rank", L.rank()}, {"signature", {sig.positive, sig.negative}}}};
  }
  if (cmd == "zariski") {
    const SurfaceData& s = need_surface(f);
    const ZariskiDecomp z = decomposition(s, o.divisor);
    Json doc = to_json(s, z);
    doc["iitaka"] = to_string(iitaka_case(s, z));
    return {doc};
  }
  if (cmd == "neg-curves") {
    const MinusOneResult m = minus_one_classes(need_surface(f), o.degree_bound);
    Json doc = to_json(m);
    doc["degree_bound"] = o.degree_bound;
    return {doc, m.complete};
  }
  if (cmd == "types") {
    const SurfaceData& s = need_surface(f);
    const ZariskiDecomp z = decomposition(s, o.divisor);
    Json support = Json::array();
    for (auto i : z.support) support.push_back(s.curves()[i].name);
    Json types = Json::array();
    for (const auto& t : curve_types(z)) {
      Json row = Json::array();
      for (const auto& v : t) row.push_back(to_json(Rational(v)));
      types.push_back(row);
    }
    return {{{"support", support}, {"coeffs", to_json(from_std(z.coeffs))}, {"count", types.size()}, {"types", types}}};
  }
  if (cmd == "mw-action") {
    const SurfaceData& s = need_surface(f);
    Json doc = {{"group", to_json(mordell_weil_group_data(s))}};
    if (!o.x.empty()) {
      const Isometry phi = mordell_weil_action(s, parse_vector(o.x));
      doc["x"] = to_json(parse_vector(o.x));
      doc["matrix"] = to_json(phi.matrix());
      if (!o.apply.empty()) {
        const VectorQ image = phi.apply(parse_vector(o.apply));
        doc["image"] = to_json(image);
        doc["image_norm"] = to_json(L.norm(image));
      }
    }
    return {doc};
  }
  if (cmd == "dirichlet") {
    const DirichletResult d = run_dirichlet(f, o);
    Json doc = to_json(d);
    if (o.emit_plot_data) doc["plot_data"] = {{"rays", plot_data(d.domain)}};
    return {doc, d.certified};
  }
  if (cmd == "tile-check") {
    const DirichletResult d = run_dirichlet(f, o);
    std::mt19937_64 rng(o.seed);
    const auto samples = sample_positive_cone(L, o.samples, rng);
    TileOptions t;
    if (o.budget) t.check_max_elements = o.budget;
    const TileReport r = tile_check(L, d, *f.group, samples, t);
    Json doc = to_json(r);
    doc["seed"] = o.seed;
    doc["domain_certified"] = d.certified;
    return {doc, d.certified && r.ok()};
  }
  if (cmd == "classify") {
    const ClassifyReport c = classify_cone(need_surface(f), o.bounds);
    return {to_json(c), c.verdict == ConeVerdict::PolyhedralCertified};
  }
  fail(ErrorCode::MalformedInput, "unknown command " + cmd);
}

int error_exit(const std::string& code, const std::string& message, int status) {
  std::cout << Json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lorentzian lattice, Dirichlet domain and nef cone computations"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;

  auto common = [&](CLI::App* sub, bool needs_fixture = true) {
    auto* opt = sub->add_option("--fixture", o.fixture, "fixture JSON file or built-in name");
    if (needs_fixture) opt->required();
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--budget", o.budget, "cap on orbit or enumeration size");
    sub->add_flag("--require-certified", o.require_certified, "exit 3 unless the result is certified");
    sub->add_flag("--emit-plot-data", o.emit_plot_data, "add floating point ray coordinates");
    sub->add_option("--output", o.output, "write the JSON document to this file");
    sub->callback([&chosen, sub] { chosen = sub->get_name(); });
    return sub;
  };

  auto* pairing = common(app.add_subcommand("pairing", "bilinear form of two classes"));
  pairing->add_option("--x", o.x)->required();
  pairing->add_option("--y", o.y);
  common(app.add_subcommand("signature", "signature of the lattice"));
  auto* zariski = common(app.add_subcommand("zariski", "Zariski decomposition (default: -K)"));
  zariski->add_option("--divisor", o.divisor, "name=coef,... over the curve list");
  auto* neg = common(app.add_subcommand("neg-curves", "(-1)-classes up to a degree bound"));
  neg->add_option("--degree-bound", o.degree_bound);
  auto* types = common(app.add_subcommand("types", "types of (-1)-curves over the negative part"));
  types->add_option("--divisor", o.divisor);
  auto* mw = common(app.add_subcommand("mw-action", "Mordell-Weil data and the action of a section class"));
  mw->add_option("--x", o.x);
  mw->add_option("--apply", o.apply);
  common(app.add_subcommand("dirichlet", "Dirichlet domain of the fixture group"));
  auto* tile = common(app.add_subcommand("tile-check", "locate random samples in translates of the domain"));
  tile->add_option("--samples", o.samples);
  auto* classify = common(app.add_subcommand("classify", "rational polyhedrality of the nef cone"));
  classify->add_option("--bounds", o.bounds)->delimiter(',');

  auto* fixtures = app.add_subcommand("fixtures", "packaged fixtures");
  fixtures->require_subcommand(1);
  auto* list = fixtures->add_subcommand("list");
  list->callback([&] { chosen = "fixtures-list"; });
  auto* show = fixtures->add_subcommand("show");
  show->add_option("name", o.show_name)->required();
  show->add_flag("--self-test", o.run_self_test);
  show->add_option("--output", o.output);
  show->callback([&] { chosen = "fixtures-show"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_exit("MalformedInput", e.what(), 2);
  }

  try {
    const Outcome out = run(chosen, o);
    emit(out.doc, o);
    return o.require_certified && !out.certified ? 3 : 0;
  } catch (const Error& e) {
    return error_exit(std::string(code_name(e.code())), e.what(), e.code() == ErrorCode::Internal ? 1 : 2);
  } catch (const Json::exception& e) {
    return error_exit("MalformedInput", e.what(), 2);
  } catch (const std::exception& e) {
    return error_exit("Internal", e.what(), 1);
  }
}
