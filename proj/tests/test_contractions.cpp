#include "doctest.h"
#include "liealg/catalog.hpp"
#include "liealg/cohomology.hpp"
#include "liealg/contractions.hpp"
#include "liealg/invariants.hpp"
#include "support.hpp"

using namespace liealg;
using namespace testing_support;

namespace {

ParamMatrix eps_identity(size_t n) { return ParamMatrix::diagonal(std::vector<int>(n, 1)); }

// [e3,e1]=e2, [e3,e2]=-e1, [e1,e2]=0
LieAlgebra euclidean2() { return from_brackets(3, {{2, 0, 1, 1}, {2, 1, 0, -1}}); }

}  // namespace

TEST_CASE("param_act") {
  auto h = heisenberg(1);
  auto pa = param_act(h, eps_identity(3));
  CHECK(pa.get(0, 1, 2) == RationalFunction(LaurentPoly(Scalar(1), 1)));
  auto s = sl2();
  auto ps = param_act(s, eps_identity(3));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k)
        CHECK(ps.get(i, j, k) == RationalFunction(LaurentPoly(Scalar(1), 1)) * RationalFunction(s.sc().get(i, j, k)));
  auto pid = param_act(s, ParamMatrix::constant(Matrix::identity(3)));
  for (size_t k = 0; k < 3; ++k) CHECK(pid.get(1, 2, k).is_constant());
  auto pd = param_act(h, ParamMatrix::diagonal({1, 0, 1}));
  CHECK(pd.get(0, 1, 2) == RationalFunction(Scalar(1)));
  CHECK_THROWS(param_act(h, ParamMatrix::constant(Matrix(3, 3))));
}

TEST_CASE("limit at zero") {
  for (const auto& g : small_catalog()) {
    auto l = limit_at_zero(param_act(g, eps_identity(g.dim())));
    REQUIRE(l);
    CHECK(*l == abelian(g.dim()));
    auto same = limit_at_zero(param_act(g, ParamMatrix::constant(Matrix::identity(g.dim()))));
    REQUIRE(same);
    CHECK(*same == g);
  }
  auto e2 = limit_at_zero(param_act(so3_cyclic(), ParamMatrix::diagonal({1, 1, 0})));
  REQUIRE(e2);
  CHECK(*e2 == euclidean2());
  CHECK_FALSE(limit_at_zero(param_act(heisenberg(1), ParamMatrix::diagonal({0, 0, 1}))).has_value());
}

TEST_CASE("Inonu-Wigner") {
  auto iw = inonu_wigner(so3_cyclic(), Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(iw.algebra == euclidean2());
  CHECK(inonu_wigner(abelian(3), Subspace::span(3, {unit_vec(3, 0)})).algebra == abelian(3));
  // h an ideal: [h, a] = 0 in the result
  auto h = heisenberg(1);
  auto r = inonu_wigner(h, Subspace::span(3, {unit_vec(3, 2)}));
  for (size_t s : r.h_slots)
    for (size_t j = 0; j < 3; ++j) CHECK(vec_is_zero(r.algebra.basis_bracket(s, j)));
  CHECK_THROWS(inonu_wigner(h, Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)})));
}

TEST_CASE("Inonu-Wigner complement is an abelian ideal") {
  for (const auto& g : small_catalog()) {
    const size_t n = g.dim();
    for (size_t i = 0; i < n; ++i) {
      Subspace h = Subspace::span(n, {unit_vec(n, i)});
      auto r = inonu_wigner(g, h);
      std::vector<Vec> comp;
      for (size_t s = 0; s < n; ++s)
        if (std::find(r.h_slots.begin(), r.h_slots.end(), s) == r.h_slots.end()) comp.push_back(unit_vec(n, s));
      Subspace a = Subspace::span(n, comp);
      CHECK(is_ideal(r.algebra, a));
      CHECK(bracket_span(r.algebra, a, a).dim() == 0);
    }
  }
}

TEST_CASE("Weimar-Woods") {
  auto s = sl2();
  CHECK(*weimar_woods(s, {0, 0, 0}) == s);
  CHECK(*weimar_woods(s, {1, 1, 1}) == abelian(3));
  auto w = search_weimar_woods(four_dim_solvable(), filiform4_target());
  REQUIRE(w);
  auto moved = act(four_dim_solvable(), w->basis);
  auto lim = weimar_woods(moved, w->exponents);
  REQUIRE(lim);
  CHECK(*lim == filiform4_target());
  for (int e : w->exponents) {
    CHECK(e >= -3);
    CHECK(e <= 3);
  }
}

TEST_CASE("Saletan iteration") {
  auto s0 = saletan(heisenberg(1), Matrix(3, 3));
  REQUIRE(s0.size() == 1);
  CHECK(s0[0] == abelian(3));

  auto so3 = so3_cyclic();
  auto seq = saletan(so3, elementary(3, 2, 2));
  REQUIRE_FALSE(seq.empty());
  CHECK(seq[0] == inonu_wigner(so3, Subspace::span(3, {unit_vec(3, 2)})).algebra);

  auto hs = saletan(heisenberg(1), elementary(3, 2, 2));
  CHECK(hs.size() <= 2);
  for (const auto& g : hs) CHECK(validate_jacobi(g.sc()).ok);

  CHECK_THROWS(saletan(heisenberg(1), Matrix::identity(3)));
}

TEST_CASE("contact forms") {
  auto h = heisenberg(1);
  CHECK(check_contact(h, ScalarForm::basis(3, {2})));
  CHECK_FALSE(check_contact(h, ScalarForm::basis(3, {0})));
  CHECK_FALSE(find_contact_form(abelian(3)).has_value());
  auto w = find_contact_form(sl2());
  REQUIRE(w);
  CHECK(check_contact(sl2(), w->omega));
  CHECK_THROWS(find_contact_form(aff2()));
}

TEST_CASE("contraction of a contact algebra onto Heisenberg") {
  auto h = heisenberg(1);
  auto wh = contact_witness(h, ScalarForm::basis(3, {2}));
  REQUIRE(wh);
  CHECK(contract_contact_to_heisenberg(h, *wh) == h);

  auto ws = find_contact_form(sl2());
  REQUIRE(ws);
  CHECK(contract_contact_to_heisenberg(sl2(), *ws) == heisenberg(1));

  auto w5 = find_contact_form(heisenberg(2));
  REQUIRE(w5);
  CHECK(contract_contact_to_heisenberg(heisenberg(2), *w5) == heisenberg(2));

  auto so3 = so3_cyclic();
  auto w3 = find_contact_form(so3);
  REQUIRE(w3);
  auto lim = contract_contact_to_heisenberg(so3, *w3);
  CHECK(lim == heisenberg(1));
  CHECK(is_nilpotent(lim));
}

TEST_CASE("Frobenius forms and the model contraction") {
  CHECK_FALSE(check_frobenius(aff2(), ScalarForm::basis(2, {0})));
  CHECK(check_frobenius(aff2(), ScalarForm::basis(2, {1})));
  for (size_t i = 0; i < 4; ++i) CHECK_FALSE(check_frobenius(abelian(4), ScalarForm::basis(4, {i})));
  CHECK_THROWS(check_frobenius(heisenberg(1), ScalarForm::basis(3, {2})));

  auto fm = frobenius_model(2, {Scalar(1)});
  REQUIRE(check_frobenius(fm, ScalarForm::basis(4, {0})));
  auto c = frobenius_contract_to_model(fm, ScalarForm::basis(4, {0}));
  CHECK(has_frobenius_model_shape(c.algebra));
  CHECK(validate_jacobi(c.algebra.sc()).ok);
  CHECK(has_frobenius_model_shape(fm));

  auto ca = frobenius_contract_to_model(aff2(), ScalarForm::basis(2, {1}));
  CHECK(has_frobenius_model_shape(ca.algebra));
  CHECK_THROWS(frobenius_contract_to_model(aff2(), ScalarForm::basis(2, {0})));
}

TEST_CASE("Frobenius model: eigenvalues of ad X2 pair as alpha and -1-alpha") {
  for (long a : {-2, 0, 1, 3}) {
    auto fm = frobenius_model(3, {Scalar(a), Scalar(a + 1)});
    Matrix ad = ad_basis(fm, 1);
    for (size_t k = 1; k < 3; ++k) {
      size_t x = 2 * k, y = 2 * k + 1;
      CHECK(ad(x, x) + ad(y, y) == Scalar(-1));
      CHECK(ad(x, y).is_zero());
      CHECK(ad(y, x).is_zero());
    }
  }
}

TEST_CASE("a proper contraction increases dim Der") {
  struct Pair {
    LieAlgebra from, to;
  };
  auto ws = find_contact_form(sl2());
  REQUIRE(ws);
  std::vector<Pair> pairs{
      {so3_cyclic(), euclidean2()},
      {sl2(), contract_contact_to_heisenberg(sl2(), *ws)},
      {four_dim_solvable(), filiform4_target()},
      {heisenberg(1), abelian(3)},
      {aff2(), abelian(2)},
  };
  for (const auto& p : pairs) {
    CHECK(derivations(p.to).size() > derivations(p.from).size());
    CHECK(orbit_dimension(p.to) < orbit_dimension(p.from));
  }
}

TEST_CASE("abelian contraction keeps nilpotency") {
  for (const auto& g : small_catalog())
    if (is_nilpotent(g)) CHECK(is_nilpotent(*limit_at_zero(param_act(g, eps_identity(g.dim())))));
}
