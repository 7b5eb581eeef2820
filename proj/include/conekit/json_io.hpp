#pragma once

// JSON reading and writing. Rationals are written as canonical strings ("3", "-1/2") and read
// from integers or such strings. Object keys come out sorted, so output is byte-stable.

#include "conekit/dirichlet.hpp"
#include "conekit/fixtures.hpp"
#include "conekit/surface.hpp"

#include <json.hpp>

#include <string>

namespace conekit {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const VectorQ& v);
Json to_json(const MatrixQ& m);
Json to_json(const std::vector<VectorQ>& vs);

Rational rational_from_json(const Json& j);
VectorQ vector_from_json(const Json& j);
MatrixQ matrix_from_json(const Json& j);

/// {"rank": n, "gram": [[...]], "ample": [...]}
LorentzLattice lattice_from_json(const Json& j);
Json to_json(const LorentzLattice& lattice);

/// {"lattice", "K", "delta": [{"curve", "coeff"}], "curves": [{"name", "class", "in_fiber"}],
///  "declares": {"rational_surface", "anti_K_effective", "calabi_yau", "fibration": {"P", "a", "b"}}}
SurfaceData surface_from_json(const Json& j);
Json to_json(const SurfaceData& s);

/// {"generators": [[[...]], ...]}
std::vector<MatrixQ> generators_from_json(const Json& j);

/// {"rays": [...]} or {"facets": [...]}
PolyCone cone_from_json(const Json& j, Index dim);
Json to_json(const PolyCone& c);

/// A surface document (has "K"), or a lattice document with optional "generators",
/// "basepoint" and "dirichlet": {"cosh_sq_bound", "max_elements"}.
Fixture fixture_from_json(const Json& j, const std::string& fallback_name);
Json to_json(const Fixture& f);

/// A path to a JSON file when one exists, otherwise a built-in fixture name.
Fixture load_fixture(const std::string& name_or_path);

Json to_json(const Isometry& g);
Json to_json(const DirichletResult& d);
Json to_json(const TileReport& r);
Json to_json(const SurfaceData& s, const ZariskiDecomp& z);
Json to_json(const MinusOneResult& m);
Json to_json(const ClassifyReport& c);
Json to_json(const MordellWeilData& m);

}  // namespace conekit
