#include "conekit/fixtures.hpp"

#include "conekit/enumeration.hpp"
#include "conekit/error.hpp"

#include <sstream>

namespace conekit {

namespace {

VectorQ vec(std::initializer_list<long> entries) {
  VectorQ v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v[i++] = e;
  return v;
}

MatrixQ diagonal_form(int r) {
  MatrixQ g = MatrixQ::Zero(r + 1, r + 1);
  g(0, 0) = 1;
  for (int i = 1; i <= r; ++i) g(i, i) = -1;
  return g;
}

VectorQ canonical_class(int r) {
  VectorQ k = VectorQ::Constant(r + 1, Rational(1));
  k[0] = -3;
  return k;
}

// "e3" for exceptional curves, otherwise "h<d>-<multiplicities>".
std::string blowup_class_name(const VectorQ& c) {
  const Index r = c.size() - 1;
  if (c[0] == 0) {
    for (Index i = 1; i <= r; ++i)
      if (c[i] != 0) return "e" + std::to_string(i);
  }
  std::string name = "h" + to_string(c[0]) + "-";
  for (Index i = 1; i <= r; ++i) name += to_string(Rational(-c[i]));
  return name;
}

// (-1)-classes of diag(1, -1 x r) with K = (-3, 1, ...), degree measured by `ample`.
std::vector<Curve> minus_one_curves(const MatrixQ& gram, const VectorQ& K, const VectorQ& ample, long max_degree) {
  const VectorQ gk = gram * K;
  const VectorQ ga = gram * ample;
  std::vector<VectorQ> found;
  for (long d = 1; d <= max_degree; ++d) {
    const auto s = enumerate_norm_slice(gram, {ga, gk}, {Rational(d), Rational(-1)}, Rational(-1));
    found.insert(found.end(), s.points.begin(), s.points.end());
  }
  std::vector<Curve> out;
  for (const auto& e : found) out.push_back({blowup_class_name(e), e, false});
  return out;
}

std::string join_vectors(std::vector<VectorQ> v) {
  std::sort(v.begin(), v.end(), lex_less);
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ";") + to_string(x);
  return out;
}

Declarations rational_cy() {
  Declarations d;
  d.rational_surface = true;
  d.anti_K_effective = true;
  d.calabi_yau = true;
  return d;
}

}  // namespace

Fixture fixture_del_pezzo(int r) {
  if (r < 1 || r > 8) fail(ErrorCode::InvalidFixture, "del Pezzo fixtures exist for r = 1..8");
  const MatrixQ g = diagonal_form(r);
  const VectorQ K = canonical_class(r);
  LorentzLattice lattice(g, -K);
  // K-perp is negative definite, so one slice holds every (-1)-class.
  const auto all = enumerate_norm_slice(g, {VectorQ(g * K)}, {Rational(-1)}, Rational(-1));
  std::vector<Curve> curves;
  for (const auto& e : all.points) curves.push_back({blowup_class_name(e), e, false});
  std::sort(curves.begin(), curves.end(), [](const Curve& a, const Curve& b) { return lex_less(b.cls, a.cls); });
  const std::size_t first = curves.size();
  curves.push_back({"A1", -K, false});
  curves.push_back({"A2", -K, false});
  std::vector<DeltaTerm> delta{{first, Rational(1, 2)}, {first + 1, Rational(1, 2)}};
  static const int counts[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  Fixture f{
      .name = "del-pezzo-" + std::to_string(r),
      .description = "P^2 blown up at " + std::to_string(r) + " general points, with two anticanonical curves",
      .lattice = lattice,
      .surface = SurfaceData(lattice, K, std::move(curves), std::move(delta), rational_cy()),
      .group = std::nullopt,
      .basepoint = std::nullopt,
      .dirichlet = std::nullopt,
      .expected = {{"signature", "(1," + std::to_string(r) + ")"},
                   {"minus_one_count", std::to_string(counts[r])},
                   {"iitaka", "two"}},
  };
  if (r == 6) f.expected["classify"] = "PolyhedralCertified";
  return f;
}

namespace {

Fixture nine_point_fixture(bool elliptic) {
  const MatrixQ g = diagonal_form(9);
  const VectorQ K = canonical_class(9);
  VectorQ A = -K;
  A[0] = 4;  // h - K
  LorentzLattice lattice(g, A);
  std::vector<Curve> curves;
  Declarations d;
  d.rational_surface = true;
  d.anti_K_effective = true;
  std::vector<DeltaTerm> delta;
  if (elliptic) {
    curves.push_back({"F1", -K, true});
    curves.push_back({"F2", -K, true});
    delta = {{0, Rational(1, 2)}, {1, Rational(1, 2)}};
    d.calabi_yau = true;
    d.fibration = Fibration{-K, 1, 1};
  } else {
    curves.push_back({"C", -K, false});
  }
  for (auto& c : minus_one_curves(g, K, A, 2)) curves.push_back(std::move(c));
  Fixture f{
      .name = elliptic ? "e1" : "bl9",
      .description = elliptic ? "rational elliptic surface: P^2 blown up at the base points of a cubic pencil"
                              : "P^2 blown up at 9 very general points",
      .lattice = lattice,
      .surface = SurfaceData(lattice, K, std::move(curves), std::move(delta), d),
      .group = std::nullopt,
      .basepoint = std::nullopt,
      .dirichlet = std::nullopt,
      .expected = {{"signature", "(1,9)"}},
  };
  if (elliptic) {
    f.expected["mw_rank"] = "8";
    f.expected["iitaka"] = "one";
  } else {
    f.expected["classify"] = "NotPolyhedralWithinBound";
  }
  return f;
}

}  // namespace

Fixture fixture_e1() { return nine_point_fixture(true); }
Fixture fixture_bl9() { return nine_point_fixture(false); }

MatrixQ hermitian_action(const EisensteinMatrix& g) {
  using E = Eisenstein;
  const E zeta{0, 1};
  // Basis of Hermitian matrices: E11, E22, B1 (off-diagonal 1), B2 (off-diagonal zeta).
  const std::array<EisensteinMatrix, 4> basis{{
      {{{E{1, 0}, E{}}, {E{}, E{}}}},
      {{{E{}, E{}}, {E{}, E{1, 0}}}},
      {{{E{}, E{1, 0}}, {E{1, 0}, E{}}}},
      {{{E{}, zeta}, {zeta.conj(), E{}}}},
  }};
  MatrixQ out(4, 4);
  for (int k = 0; k < 4; ++k) {
    const auto& m = basis[static_cast<std::size_t>(k)];
    EisensteinMatrix gm{}, res{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) gm[i][j] = gm[i][j] + g[i][l] * m[l][j];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) res[i][j] = res[i][j] + gm[i][l] * g[j][l].conj();
    if (res[0][0].y != 0 || res[1][1].y != 0 || !(res[1][0] == res[0][1].conj()))
      fail(ErrorCode::Internal, "hermitian_action: image is not Hermitian");
    out(0, k) = Rational(res[0][0].x);
    out(1, k) = Rational(res[1][1].x);
    out(2, k) = Rational(res[0][1].x);
    out(3, k) = Rational(res[0][1].y);
  }
  return out;
}

Fixture fixture_hesse() {
  MatrixQ g(4, 4);
  g << 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -2, 1, 0, 0, 1, -2;
  LorentzLattice lattice(g, vec({1, 1, 0, 0}));
  using E = Eisenstein;
  const E one{1, 0}, zero{}, zeta{0, 1};
  const std::vector<EisensteinMatrix> gens{
      {{{one, one}, {zero, one}}},                  // z -> z + 1
      {{{one, zeta}, {zero, one}}},                 // z -> z + zeta
      {{{zero, one}, {one, zero}}},                 // inversion
      {{{zero - zeta, zero}, {zero, one}}},         // multiplication by the unit -zeta
  };
  std::vector<MatrixQ> mats;
  for (const auto& m : gens) mats.push_back(hermitian_action(m));
  Fixture f{
      .name = "hesse",
      .description = "rank-4 lattice of Hermitian matrices over Z[zeta]; the nef cone is the round positive cone",
      .lattice = lattice,
      .surface = std::nullopt,
      .group = make_group(lattice, mats),
      // With <E11, y> = 1 a translation clears the off-diagonal entry and the unit -zeta fixes y.
      .basepoint = vec({12, 5, 1, 2}),
      .dirichlet = DirichletOptions{Rational(100), 50000},
      .expected = {{"signature", "(1,3)"},
                   {"generators_verified", "4"},
                   {"ample_in_positive_cone", "true"},
                   {"dirichlet_certified", "true"},
                   {"dirichlet_ideal_vertices", "(1, 0, 0, 0)"}},
  };
  return f;
}

Fixture fixture_hesse_blowup() {
  const int r = 12;
  const MatrixQ g = diagonal_form(r);
  const VectorQ K = canonical_class(r);
  VectorQ A = -K;
  A[0] = 5;
  LorentzLattice lattice(g, A);
  // Points p_{i,j} = [1, zeta^i, zeta^j] at index 1 + 3i + j; [1,0,0], [0,1,0], [0,0,1] at 10, 11, 12.
  auto p = [](int i, int j) { return 1 + 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
  std::vector<Curve> curves;
  auto line = [&](const std::string& name, std::vector<int> points) {
    VectorQ c = VectorQ::Zero(r + 1);
    c[0] = 1;
    for (int q : points) c[q] = -1;
    curves.push_back({name, c, false});
  };
  for (int a = 0; a < 3; ++a) line("Ly" + std::to_string(a), {p(a, 0), p(a, 1), p(a, 2), 12});   // y = zeta^a x
  for (int a = 0; a < 3; ++a) line("Lz" + std::to_string(a), {p(0, a), p(1, a), p(2, a), 11});   // z = zeta^a x
  for (int a = 0; a < 3; ++a) line("Lyz" + std::to_string(a), {p(0, a), p(1, 1 + a), p(2, 2 + a), 10});  // z = zeta^a y
  std::vector<DeltaTerm> delta;
  for (std::size_t i = 0; i < 9; ++i) delta.push_back({i, Rational(1, 3)});
  for (int q = 1; q <= r; ++q) {
    VectorQ c = VectorQ::Zero(r + 1);
    c[q] = 1;
    curves.push_back({"e" + std::to_string(q), c, false});
  }
  Fixture f{
      .name = "hesse-blowup",
      .description = "P^2 blown up at the 12 points of the dual Hesse configuration with Delta = (1/3) sum of 9 lines",
      .lattice = lattice,
      .surface = SurfaceData(lattice, K, std::move(curves), std::move(delta), rational_cy()),
      .group = std::nullopt,
      .basepoint = std::nullopt,
      .dirichlet = std::nullopt,
      .expected = {{"signature", "(1,12)"}, {"iitaka", "zero"}, {"curve_types", "165"}},
  };
  return f;
}

Fixture fixture_hirzebruch2() {
  MatrixQ g(2, 2);
  g << -2, 1, 1, 0;
  LorentzLattice lattice(g, vec({1, 3}));
  const VectorQ C = vec({1, 0}), F = vec({0, 1}), S = vec({1, 2});
  std::vector<Curve> curves{{"C", C, false},  {"F1", F, true},  {"F2", F, true},
                            {"S1", S, false}, {"S2", S, false}, {"S3", S, false}};
  std::vector<DeltaTerm> delta;
  for (std::size_t i = 0; i < curves.size(); ++i) delta.push_back({i, Rational(1, 2)});
  Declarations d = rational_cy();
  d.fibration = Fibration{F, 1, 1};
  Fixture f{
      .name = "hirzebruch-2",
      .description = "Hirzebruch surface F_2 in the basis (C, F) with C^2 = -2; Picard number two",
      .lattice = lattice,
      .surface = SurfaceData(lattice, vec({-2, -4}), std::move(curves), std::move(delta), d),
      .group = std::nullopt,
      .basepoint = std::nullopt,
      .dirichlet = std::nullopt,
      .expected = {{"signature", "(1,1)"}, {"classify", "PolyhedralCertified"}, {"mw_rank", "0"}, {"iitaka", "two"}},
  };
  return f;
}

Fixture fixture_pell() {
  MatrixQ g(2, 2);
  g << 1, 0, 0, -2;
  LorentzLattice lattice(g, vec({1, 0}));
  MatrixQ m(2, 2);
  m << 3, 4, 2, 3;
  Fixture f{
      .name = "pell",
      .description = "x^2 - 2y^2 with the automorph [[3,4],[2,3]]",
      .lattice = lattice,
      .surface = std::nullopt,
      .group = make_group(lattice, {m}),
      .basepoint = vec({1, 0}),
      .dirichlet = DirichletOptions{Rational(100), 1000},
      .expected = {{"signature", "(1,1)"},
                   {"dirichlet_rays", "(2, -1);(2, 1)"},
                   {"dirichlet_facets", "(1, -2);(1, 2)"},
                   {"dirichlet_certified", "true"}},
  };
  return f;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (int r = 1; r <= 8; ++r) out.push_back("del-pezzo-" + std::to_string(r));
  for (const char* n : {"e1", "bl9", "hesse", "hesse-blowup", "hirzebruch-2", "pell"}) out.emplace_back(n);
  return out;
}

Fixture load_builtin_fixture(const std::string& name) {
  if (name.rfind("del-pezzo-", 0) == 0 && name.size() == 11 && name[10] >= '1' && name[10] <= '8')
    return fixture_del_pezzo(name[10] - '0');
  if (name == "e1") return fixture_e1();
  if (name == "bl9") return fixture_bl9();
  if (name == "hesse") return fixture_hesse();
  if (name == "hesse-blowup") return fixture_hesse_blowup();
  if (name == "hirzebruch-2") return fixture_hirzebruch2();
  if (name == "pell") return fixture_pell();
  fail(ErrorCode::InvalidFixture, "unknown fixture '" + name + "'");
}

std::vector<std::string> self_test(const Fixture& f) {
  std::vector<std::string> failures;
  for (const auto& [key, want] : f.expected) {
    std::string got;
    try {
      if (key == "signature") {
        const auto s = signature(f.lattice);
        got = "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
      } else if (key == "minus_one_count") {
        const auto m = minus_one_classes(f.surface.value(), 1000);
        got = std::to_string(m.classes.size()) + (m.complete ? "" : " (incomplete)");
      } else if (key == "iitaka") {
        got = to_string(iitaka_case(*f.surface, zariski_anticanonical(f.surface.value())));
      } else if (key == "curve_types") {
        got = std::to_string(curve_types(zariski_anticanonical(f.surface.value())).size());
      } else if (key == "mw_rank") {
        got = std::to_string(mordell_weil_group_data(f.surface.value()).rank);
      } else if (key == "classify") {
        got = to_string(classify_cone(f.surface.value(), {2, 3, 4}).verdict);
      } else if (key == "generators_verified") {
        std::size_t ok = 0;
        for (const auto& g : f.group.value().gens) {
          verify_isometry(f.lattice, g.matrix());
          ++ok;
        }
        got = std::to_string(ok);
      } else if (key == "ample_in_positive_cone") {
        got = in_positive_cone(f.lattice, f.lattice.ample()) ? "true" : "false";
      } else if (key.rfind("dirichlet_", 0) == 0) {
        const auto d = dirichlet_domain(f.lattice, std::nullopt, f.group.value(), f.basepoint.value(), f.dirichlet.value());
        if (key == "dirichlet_rays") got = join_vectors(d.domain.rays());
        else if (key == "dirichlet_facets") got = join_vectors(d.domain.facets());
        else if (key == "dirichlet_certified") got = d.certified ? "true" : "false";
        else if (key == "dirichlet_ideal_vertices") got = join_vectors(d.boundary_rational_rays);
        else got = "unknown key";
      } else {
        got = "unknown key";
      }
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    if (got != want) failures.push_back(f.name + ": " + key + " expected " + want + ", got " + got);
  }
  return failures;
}

}  // namespace conekit
