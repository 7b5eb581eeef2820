#include "conekit/json_io.hpp"

#include "conekit/error.hpp"

#include <fstream>
#include <sstream>

namespace conekit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::MalformedInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

bool flag(const Json& j, const char* key) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) fail(ErrorCode::MalformedInput, std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

Integer integer_from_json(const Json& j) {
  const Rational q = rational_from_json(j);
  if (!is_integer(q)) fail(ErrorCode::MalformedInput, "expected an integer, got " + to_string(q));
  return mp::numerator(q);
}

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(word_to_string(w));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const VectorQ& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

Json to_json(const MatrixQ& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(VectorQ(m.row(i).transpose())));
  return out;
}

Json to_json(const std::vector<VectorQ>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorCode::MalformedInput, "expected an integer or a rational string, got " + j.dump());
}

VectorQ vector_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::MalformedInput, "expected an array, got " + j.dump());
  VectorQ v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = rational_from_json(j[i]);
  return v;
}

MatrixQ matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::MalformedInput, "expected a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  MatrixQ m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const VectorQ row = vector_from_json(j[i]);
    if (static_cast<std::size_t>(row.size()) != cols) fail(ErrorCode::MalformedInput, "matrix rows have different lengths");
    m.row(static_cast<Index>(i)) = row.transpose();
  }
  return m;
}

LorentzLattice lattice_from_json(const Json& j) {
  const MatrixQ gram = matrix_from_json(field(j, "gram"));
  if (j.contains("rank") && integer_from_json(j.at("rank")) != gram.rows())
    fail(ErrorCode::MalformedInput, "rank does not match the gram matrix");
  return LorentzLattice(gram, vector_from_json(field(j, "ample")));
}

Json to_json(const LorentzLattice& lattice) {
  return {{"rank", lattice.rank()}, {"gram", to_json(lattice.gram())}, {"ample", to_json(lattice.ample())}};
}

SurfaceData surface_from_json(const Json& j) {
  LorentzLattice lattice = lattice_from_json(field(j, "lattice"));
  const VectorQ K = vector_from_json(field(j, "K"));
  std::vector<Curve> curves;
  if (j.contains("curves"))
    for (const auto& c : j.at("curves"))
      curves.push_back({field(c, "name").get<std::string>(), vector_from_json(field(c, "class")), flag(c, "in_fiber")});
  std::vector<DeltaTerm> delta;
  if (j.contains("delta"))
    for (const auto& d : j.at("delta")) {
      const Json& ref = field(d, "curve");
      std::size_t index = 0;
      if (ref.is_string()) {
        const auto it = std::find_if(curves.begin(), curves.end(), [&](const Curve& c) { return c.name == ref.get<std::string>(); });
        if (it == curves.end()) fail(ErrorCode::MalformedInput, "boundary refers to unknown curve " + ref.dump());
        index = static_cast<std::size_t>(it - curves.begin());
      } else {
        const Integer i = integer_from_json(ref);
        if (i < 0) fail(ErrorCode::MalformedInput, "negative curve index");
        index = static_cast<std::size_t>(i);
      }
      delta.push_back({index, rational_from_json(field(d, "coeff"))});
    }
  Declarations decl;
  if (j.contains("declares")) {
    const Json& dj = j.at("declares");
    decl.rational_surface = flag(dj, "rational_surface");
    decl.anti_K_effective = flag(dj, "anti_K_effective");
    decl.calabi_yau = flag(dj, "calabi_yau");
    if (dj.contains("fibration") && !dj.at("fibration").is_null()) {
      const Json& fj = dj.at("fibration");
      Fibration fib{vector_from_json(field(fj, "P")), 1, 1};
      if (fj.contains("a")) fib.a = integer_from_json(fj.at("a"));
      if (fj.contains("b")) fib.b = integer_from_json(fj.at("b"));
      decl.fibration = fib;
    }
  }
  return SurfaceData(std::move(lattice), K, std::move(curves), std::move(delta), decl);
}

Json to_json(const SurfaceData& s) {
  Json curves = Json::array();
  for (const auto& c : s.curves()) curves.push_back({{"name", c.name}, {"class", to_json(c.cls)}, {"in_fiber", c.in_fiber}});
  Json delta = Json::array();
  for (const auto& d : s.delta()) delta.push_back({{"curve", d.curve}, {"coeff", to_json(d.coeff)}});
  Json declares = {{"rational_surface", s.declares().rational_surface},
                   {"anti_K_effective", s.declares().anti_K_effective},
                   {"calabi_yau", s.declares().calabi_yau}};
  if (const auto& f = s.declares().fibration)
    declares["fibration"] = {{"P", to_json(f->P)}, {"a", to_json(Rational(f->a))}, {"b", to_json(Rational(f->b))}};
  return {{"lattice", to_json(s.lattice())}, {"K", to_json(s.K())}, {"curves", curves}, {"delta", delta}, {"declares", declares}};
}

std::vector<MatrixQ> generators_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "generators") : j;
  if (!list.is_array()) fail(ErrorCode::MalformedInput, "generators must be an array of matrices");
  std::vector<MatrixQ> out;
  for (const auto& m : list) out.push_back(matrix_from_json(m));
  return out;
}

PolyCone cone_from_json(const Json& j, Index dim) {
  auto read = [&](const char* key) {
    std::vector<VectorQ> out;
    for (const auto& v : field(j, key)) {
      out.push_back(vector_from_json(v));
      if (out.back().size() != dim) fail(ErrorCode::DimensionMismatch, "cone vector has the wrong length");
    }
    return out;
  };
  if (j.contains("rays")) return PolyCone::from_rays(read("rays"), dim);
  return PolyCone::from_facets(read("facets"), dim);
}

Json to_json(const PolyCone& c) {
  Json out = {{"rays", to_json(c.rays())}, {"facets", to_json(c.facets())}, {"pointed", c.pointed()}};
  if (!c.pointed()) out["lineality"] = to_json(c.lineality());
  return out;
}

Fixture fixture_from_json(const Json& j, const std::string& fallback_name) {
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : fallback_name;
  std::optional<SurfaceData> surface;
  std::optional<LorentzLattice> lattice;
  if (j.contains("K")) {
    surface = surface_from_json(j);
    lattice = surface->lattice();
  } else {
    lattice = lattice_from_json(j.contains("lattice") ? j.at("lattice") : j);
  }
  Fixture f{name, j.value("description", std::string()), *lattice, surface, std::nullopt, std::nullopt, std::nullopt, {}};
  if (j.contains("generators")) f.group = make_group(f.lattice, generators_from_json(j.at("generators")));
  if (j.contains("basepoint")) f.basepoint = vector_from_json(j.at("basepoint"));
  if (j.contains("dirichlet")) {
    DirichletOptions o;
    const Json& dj = j.at("dirichlet");
    if (dj.contains("cosh_sq_bound")) o.cosh_sq_bound = rational_from_json(dj.at("cosh_sq_bound"));
    if (dj.contains("max_elements")) o.max_elements = static_cast<std::size_t>(integer_from_json(dj.at("max_elements")));
    f.dirichlet = o;
  }
  if (j.contains("expected"))
    for (const auto& [k, v] : j.at("expected").items()) f.expected[k] = v.is_string() ? v.get<std::string>() : v.dump();
  return f;
}

Json to_json(const Fixture& f) {
  Json out = f.surface ? to_json(*f.surface) : Json{{"lattice", to_json(f.lattice)}};
  out["name"] = f.name;
  out["description"] = f.description;
  if (f.group) {
    Json gens = Json::array();
    for (const auto& g : f.group->gens) gens.push_back(to_json(g.matrix()));
    out["generators"] = gens;
  }
  if (f.basepoint) out["basepoint"] = to_json(*f.basepoint);
  if (f.dirichlet)
    out["dirichlet"] = {{"cosh_sq_bound", to_json(f.dirichlet->cosh_sq_bound)}, {"max_elements", f.dirichlet->max_elements}};
  out["expected"] = f.expected;
  return out;
}

Fixture load_fixture(const std::string& name_or_path) {
  std::ifstream in(name_or_path);
  if (!in) return load_builtin_fixture(name_or_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::MalformedInput, "cannot parse " + name_or_path + ": " + e.what());
  }
  try {
    return fixture_from_json(j, name_or_path);
  } catch (const Json::exception& e) {
    fail(ErrorCode::MalformedInput, std::string("malformed fixture: ") + e.what());
  }
}

Json to_json(const Isometry& g) { return {{"matrix", to_json(g.matrix())}}; }

Json to_json(const DirichletResult& d) {
  Json facets = Json::array();
  for (const auto& f : d.facet_data)
    facets.push_back({{"functional", to_json(f.functional)}, {"ambient", f.from_ambient}, {"elements", words_json(f.words)}});
  return {{"domain", to_json(d.domain)},
          {"basepoint", to_json(d.basepoint)},
          {"orbit_used", d.orbit_used},
          {"cosh_sq_bound", to_json(d.cosh_sq_bound)},
          {"ball_complete", d.ball_complete},
          {"certified", d.certified},
          {"uncertified_reasons", d.uncertified_reasons},
          {"boundary_rational_rays", to_json(d.boundary_rational_rays)},
          {"facets", facets}};
}

Json to_json(const TileReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records)
    records.push_back({{"sample", to_json(rec.sample)},
                       {"word", rec.located ? Json(word_to_string(rec.word)) : Json(nullptr)},
                       {"multiplicity", rec.multiplicity},
                       {"interior", rec.interior},
                       {"violation", rec.violation}});
  return {{"records", records},
          {"located", r.located},
          {"failures", r.failures},
          {"interior", r.interior},
          {"interior_multiplicity_one", r.interior_multiplicity_one},
          {"boundary", r.boundary},
          {"violations", r.violations},
          {"check_ball_size", r.check_ball_size},
          {"check_ball_complete", r.check_ball_complete},
          {"ok", r.ok()}};
}

Json to_json(const SurfaceData& s, const ZariskiDecomp& z) {
  Json n = Json::array();
  for (std::size_t k = 0; k < z.support.size(); ++k)
    n.push_back({{"curve", s.curves()[z.support[k]].name}, {"coeff", to_json(z.coeffs[k])}});
  return {{"P", to_json(z.P)}, {"N", n}, {"N_class", to_json(z.N)}, {"P_squared", to_json(s.lattice().norm(z.P))}};
}

Json to_json(const MinusOneResult& m) {
  return {{"count", m.classes.size()},
          {"complete", m.complete},
          {"exhaustive_to_bound", m.exhaustive_to_bound},
          {"method", m.method},
          {"classes", to_json(m.classes)}};
}

Json to_json(const ClassifyReport& c) {
  Json out = {{"verdict", to_string(c.verdict)},
              {"condition", c.condition},
              {"calabi_yau_declared", c.calabi_yau_declared},
              {"bounds", c.bounds},
              {"counts", c.counts}};
  if (c.facet_count) out["facet_count"] = *c.facet_count;
  return out;
}

Json to_json(const MordellWeilData& m) {
  Json torsion = Json::array();
  for (const auto& t : m.torsion) torsion.push_back(to_json(Rational(t)));
  std::vector<VectorQ> basis;
  for (Index j = 0; j < m.action_basis.cols(); ++j) basis.push_back(to_rational(VectorZ(m.action_basis.col(j))));
  return {{"rank", m.rank}, {"torsion", torsion}, {"action_basis", to_json(basis)}};
}

}  // namespace conekit
