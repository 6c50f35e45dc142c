#include <fstream>
#include <optional>
#include <random>

#include "doctest.h"
#include "liealg/contractions.hpp"
#include "liealg/invariants.hpp"
#include "liealg/json_io.hpp"
#include "support.hpp"

using namespace liealg;
using namespace testing_support;

namespace {

struct Expected {
  std::string name;
  std::map<std::string, long> params;
  bool nilpotent, solvable, filiform, semisimple;
  std::optional<size_t> nilindex;
  std::vector<size_t> char_seq;
};

std::vector<Expected> fixture_table() {
  return {
      {"abelian", {{"n", 1}}, true, true, false, false, 1, {1}},
      {"abelian", {{"n", 3}}, true, true, false, false, 1, {1, 1, 1}},
      {"aff2", {}, false, true, false, false, std::nullopt, {}},
      {"heisenberg", {{"p", 1}}, true, true, true, false, 2, {2, 1}},
      {"heisenberg", {{"p", 2}}, true, true, false, false, 2, {2, 1, 1, 1}},
      {"filiform_model", {{"n", 4}}, true, true, true, false, 3, {3, 1}},
      {"filiform_model", {{"n", 5}}, true, true, true, false, 4, {4, 1}},
      {"sl2", {}, false, false, false, true, std::nullopt, {}},
      {"so3", {}, false, false, false, true, std::nullopt, {}},
      {"so", {{"n", 4}}, false, false, false, true, std::nullopt, {}},
      {"poincare", {}, false, false, false, false, std::nullopt, {}},
      {"rigid11", {}, false, true, false, false, std::nullopt, {}},
      {"frobenius_model", {{"p", 2}, {"phi", 1}}, false, true, false, false, std::nullopt, {}},
      {"four_dim_solvable", {}, false, true, false, false, std::nullopt, {}},
      {"filiform4_target", {}, true, true, true, false, 3, {3, 1}},
  };
}

Vec unit(size_t n, size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("catalog entries pass Jacobi and reproduce their invariants") {
  auto cat = default_catalog();
  auto table = fixture_table();
  REQUIRE(cat.size() == table.size());
  for (size_t t = 0; t < cat.size(); ++t) {
    const auto& e = cat[t];
    const auto& x = table[t];
    CAPTURE(e.name);
    CHECK(e.name == x.name);
    CHECK(e.params == x.params);
    CHECK(validate_jacobi(e.algebra.sc()).ok);
    CHECK(e.algebra.status() == JacobiStatus::Verified);
    CHECK(catalog_build(e.name, e.params) == e.algebra);
    CHECK(is_nilpotent(e.algebra) == x.nilpotent);
    CHECK(is_solvable(e.algebra) == x.solvable);
    CHECK(is_filiform(e.algebra) == x.filiform);
    CHECK(is_semisimple(e.algebra) == x.semisimple);
    if (x.nilindex) CHECK(nilindex(e.algebra) == *x.nilindex);
    if (!x.char_seq.empty()) CHECK(characteristic_sequence(e.algebra).seq == x.char_seq);
  }
}

TEST_CASE("constructor examples") {
  CHECK(nilindex(heisenberg(1)) == 2);
  CHECK(heisenberg(2).dim() == 5);
  LieAlgebra a1 = abelian(1);
  CHECK(a1.dim() == 1);
  CHECK(validate_jacobi(a1.sc()).ok);
  CHECK(vec_is_zero(a1.basis_bracket(0, 0)));

  LieAlgebra p = poincare();
  REQUIRE(p.dim() == 10);
  for (size_t a = 6; a < 10; ++a)
    for (size_t b = 6; b < 10; ++b) CHECK(vec_is_zero(p.basis_bracket(a, b)));
  // [M_{mu nu}, P_rho] = eta_{mu rho} P_nu - eta_{nu rho} P_mu
  const long eta[4] = {-1, 1, 1, 1};
  size_t m = 0;
  for (size_t mu = 0; mu < 4; ++mu)
    for (size_t nu = mu + 1; nu < 4; ++nu, ++m)
      for (size_t rho = 0; rho < 4; ++rho) {
        Vec want(10);
        if (mu == rho) want[6 + nu] += Scalar(eta[mu]);
        if (nu == rho) want[6 + mu] -= Scalar(eta[nu]);
        CHECK(p.basis_bracket(m, 6 + rho) == want);
      }

  LieAlgebra f = frobenius_model(2, {Scalar(1)});
  CHECK(validate_jacobi(f.sc()).ok);
  CHECK(check_frobenius(f, ScalarForm::one_form(unit(4, 0))));

  CHECK_THROWS_AS(heisenberg(0), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_model(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(catalog_build("nonexistent", {}), std::invalid_argument);
  CHECK_THROWS_AS(catalog_build("abelian", {}), std::invalid_argument);
  CHECK_THROWS_AS(catalog_build("so", {{"n", 0}}), std::invalid_argument);
  CHECK(catalog_build("heisenberg", {{"p", 2}}) == heisenberg(2));
}

TEST_CASE("commutator_algebra") {
  LieAlgebra s = sl2();
  CHECK(s.basis_bracket(1, 2) == vec({1, 0, 0}));
  CHECK(s.basis_bracket(0, 1) == vec({0, 2, 0}));
  CHECK(s.basis_bracket(0, 2) == vec({0, 0, -2}));

  LieAlgebra d = commutator_algebra({mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 2}}), mat({{0, 0, 0}, {0, 3, 0}, {0, 0, 1}})});
  CHECK(d == abelian(2));

  LieAlgebra o = so3_cyclic();
  CHECK(o.basis_bracket(0, 1) == vec({0, 0, 1}));
  CHECK(o.basis_bracket(1, 2) == vec({1, 0, 0}));
  CHECK(o.basis_bracket(2, 0) == vec({0, 1, 0}));

  CHECK_THROWS_AS(commutator_algebra({elementary(2, 0, 1), elementary(2, 1, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(commutator_algebra({elementary(2, 0, 1), mat({{0, 2}, {0, 0}})}), std::invalid_argument);
}

TEST_CASE("algebra JSON round-trip on catalog and fuzzed algebras") {
  std::vector<LieAlgebra> algs;
  for (const auto& e : default_catalog()) algs.push_back(e.algebra);
  std::mt19937 rng(404);
  for (int t = 0; t < 100; ++t) {
    LieAlgebra g = random_nilpotent(rng);
    Matrix f = random_invertible(rng, g.dim());
    f(0, 0) = f(0, 0) / Scalar(3);
    if (det(f).is_zero()) f = Matrix::identity(g.dim());
    algs.push_back(act(g, f));
  }
  StructureConstants sc(2);
  sc.set(0, 1, 1, Scalar::imag_unit() + Scalar(1, 2));
  algs.push_back(LieAlgebra(sc, Field::QI, "gaussian"));
  for (const auto& g : algs) {
    json j = algebra_to_json(g);
    LieAlgebra back = parse_algebra(j);
    CHECK(back == g);
    CHECK(back.name() == g.name());
    std::string once = j.dump();
    CHECK(algebra_to_json(parse_algebra(json::parse(once))).dump() == once);
  }
}

TEST_CASE("cochain, form and jet JSON") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t)
    for (size_t p = 0; p <= 3; ++p) {
      Cochain c = random_cochain(rng, 4, p);
      c.coeffs()[0] = Scalar(t, 7);
      CHECK(parse_cochain(json::parse(cochain_to_json(c).dump()), 4) == c);
      ScalarForm w(4, p);
      for (size_t r = 0; r < w.coeffs().size(); ++r) w.coeffs()[r] = Scalar(static_cast<long>(r + t) - 3, 2);
      CHECK(parse_form(json::parse(form_to_json(w).dump()), 4) == w);
    }

  // an entry listed in non-increasing order picks up the permutation sign
  json jf = {{"p", 2}, {"entries", {{{"idx", {2, 1}}, {"c", "3"}}}}};
  CHECK(parse_form(jf, 3) == Scalar(-3) * ScalarForm::basis(3, {0, 1}));
  json jc = {{"p", 2}, {"entries", {{{"idx", {2, 1}}, {"k", 3}, {"c", "1/2"}}}}};
  Cochain want(3, 2);
  want.set({0, 1}, 2, Scalar(-1, 2));
  CHECK(parse_cochain(jc, 3) == want);

  json jet = {{"base", algebra_to_json(aff2())}, {"order", 3}, {"terms", {cochain_to_json(Cochain(2, 2))}}};
  DeformationJet d = parse_jet(jet);
  CHECK(d.base == aff2());
  CHECK(d.order == 3);
  CHECK(d.terms.size() == 1);
  jet["order"] = 0;
  CHECK_THROWS_AS(parse_jet(jet), ParseError);
  jet["order"] = 1;
  jet["terms"].push_back(cochain_to_json(Cochain(2, 2)));
  CHECK_THROWS_AS(parse_jet(jet), ParseError);
  jet["order"] = 2;
  jet["terms"][1] = cochain_to_json(Cochain(2, 1));
  CHECK_THROWS_AS(parse_jet(jet), ParseError);

  TruncatedSeries s({Scalar(1), Scalar(-2, 3)}, 4);
  CHECK(parse_series(series_to_json(s), 4) == s);
}

TEST_CASE("parse errors and field mismatch") {
  auto alg = [](json brackets) { return json{{"dim", 2}, {"field", "Q"}, {"brackets", brackets}}; };
  CHECK_THROWS_AS(parse_algebra(json::array()), ParseError);
  CHECK_THROWS_AS(parse_algebra(json{{"field", "Q"}}), ParseError);
  CHECK_THROWS_AS(parse_algebra(json{{"dim", -1}}), ParseError);
  CHECK_THROWS_AS(parse_algebra(json{{"dim", 2}, {"field", "R"}}), ParseError);
  CHECK_THROWS_AS(parse_algebra(alg({{{"i", 2}, {"j", 1}, {"c", {"0", "1"}}}})), ParseError);
  CHECK_THROWS_AS(parse_algebra(alg({{{"i", 1}, {"j", 3}, {"c", {"0", "1"}}}})), ParseError);
  CHECK_THROWS_AS(parse_algebra(alg({{{"i", 1}, {"j", 2}, {"c", {"1"}}}})), ParseError);
  CHECK_THROWS_AS(parse_algebra(alg({{{"i", 1}, {"j", 2}, {"c", {"x", "1"}}}})), ParseError);
  CHECK_THROWS_AS(parse_algebra(alg({{{"i", 1}, {"j", 2}, {"c", {"1/0", "1"}}}})), ParseError);
  CHECK_THROWS_AS(parse_algebra(alg({{{"i", 1}, {"j", 2}}})), ParseError);
  CHECK_THROWS_AS(parse_algebra(alg({{{"i", 1}, {"j", 2}, {"c", {"0", scalar_to_json(Scalar::imag_unit())}}}})),
                  FieldMismatch);
  json ok = alg({{{"i", 1}, {"j", 2}, {"c", {"0", "1"}}}});
  CHECK(parse_algebra(ok) == aff2());
  ok["field"] = "Q(i)";
  ok["brackets"][0]["c"][1] = scalar_to_json(Scalar::imag_unit());
  CHECK(parse_algebra(ok).field() == Field::QI);

  json broken = {{"dim", 3}, {"brackets", {{{"i", 1}, {"j", 2}, {"c", {"0", "0", "1"}}}, {{"i", 1}, {"j", 3}, {"c", {"1", "0", "0"}}}}}};
  CHECK_NOTHROW(parse_structure(broken));
  CHECK_THROWS_AS(parse_algebra(broken), JacobiError);

  CHECK_THROWS_AS(parse_cochain(json{{"p", 4}}, 3), ParseError);
  CHECK_THROWS_AS(parse_cochain(json{{"p", 2}, {"entries", {{{"idx", {1, 1}}, {"k", 1}, {"c", "1"}}}}}, 3), ParseError);
  CHECK_THROWS_AS(parse_form(json{{"p", 1}, {"entries", {{{"idx", {1, 2}}, {"c", "1"}}}}}, 3), ParseError);

  const std::string path = "catalog_json_malformed.json";
  {
    std::ofstream out(path);
    out << "{\"dim\": 2, \"brackets\": [";
  }
  CHECK_THROWS_AS(read_json_file(path), ParseError);
  CHECK_THROWS_AS(read_json_file("does/not/exist.json"), ParseError);
}
