#include <random>

#include "doctest.h"
#include "liealg/catalog.hpp"
#include "liealg/deformations.hpp"
#include "support.hpp"

using namespace liealg;
using namespace testing_support;

namespace {

TruncatedSeries series(std::vector<long> c, size_t order) {
  std::vector<Scalar> s;
  for (long x : c) s.push_back(Scalar(x));
  s.resize(order + 1);
  return TruncatedSeries(s, order);
}

Cochain single(size_t n, size_t i, size_t j, size_t k, long c = 1) {
  Cochain phi(n, 2);
  phi.set({i, j}, k, Scalar(c));
  return phi;
}

Cochain random_cocycle(std::mt19937& rng, const LieAlgebra& g) {
  auto r = cohomology_dims(g, 2, true);
  std::uniform_int_distribution<int> d(-2, 2);
  Cochain z(g.dim(), 2);
  for (const auto& b : r.Z_basis) z += Scalar(d(rng)) * b;
  return z;
}

// Solves u o mu_t = mu_0 o (u x u) order by order; u[0] = Id.
std::optional<std::vector<Matrix>> trivialize(const DeformationJet& jet) {
  const auto& g = jet.base;
  const size_t n = g.dim();
  std::vector<Matrix> u{Matrix::identity(n)};
  for (size_t p = 1; p <= jet.order; ++p) {
    Cochain rhs(n, 2);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Vec v = jet.term(p).value({i, j});
        for (size_t a = 1; a < p; ++a) {
          v = vec_add(v, u[a] * jet.term(p - a).value({i, j}));
          v = vec_sub(v, bracket(g, u[a].col(i), u[p - a].col(j)));
        }
        for (size_t k = 0; k < n; ++k) rhs.set({i, j}, k, v[k]);
      }
    auto s = solve_delta(g, 1, rhs);
    if (!s) return std::nullopt;
    u.push_back(s->to_matrix());
  }
  return u;
}

}  // namespace

TEST_CASE("linear deformations") {
  auto l4 = filiform_model(4);
  auto r = linear_deformation_check(l4, Cochain::from_algebra(l4));
  CHECK(r.is_cocycle);
  CHECK(r.is_square_zero);
  CHECK(r.valid_for_all_t);

  Cochain phi = single(4, 1, 2, 3);
  auto r2 = linear_deformation_check(l4, phi);
  CHECK(r2.valid_for_all_t);
  auto deformed = (Cochain::from_algebra(l4) + phi).to_structure_constants();
  CHECK(validate_jacobi(deformed).ok);
  // the deformed law is filiform with a different bracket pattern
  CHECK(deformed.get(1, 2, 3) == Scalar(1));

  std::mt19937 rng(41);
  size_t seen = 0;
  for (int t = 0; t < 30; ++t) {
    Cochain c = random_cochain(rng, 4, 2, 40);
    if (delta(l4, c).is_zero()) continue;
    ++seen;
    auto rc = linear_deformation_check(l4, c);
    CHECK_FALSE(rc.is_cocycle);
    CHECK_FALSE(rc.valid_for_all_t);
  }
  CHECK(seen > 0);
}

TEST_CASE("Jacobi residuals of jets") {
  auto h = heisenberg(1);
  DeformationJet trivial{h, {}, 4};
  for (const auto& [k, c] : jacobi_residuals(trivial, 8)) CHECK(c.is_zero());

  std::mt19937 rng(42);
  auto l4 = filiform_model(4);
  for (int t = 0; t < 10; ++t) {
    Cochain p1 = random_cochain(rng, 4, 2, 40), p2 = random_cochain(rng, 4, 2, 40);
    DeformationJet j1{l4, {p1}, 4};
    CHECK(jacobi_residuals(j1, 1).at(1) == delta(l4, p1));
    DeformationJet j2{l4, {p1, p2}, 4};
    auto res = jacobi_residuals(j2, 2);
    CHECK(res.at(1) == delta(l4, p1));
    CHECK(res.at(2) == circle(p1, p1) + delta(l4, p2));
  }
  CHECK_THROWS(jacobi_residuals(trivial, 9));
}

TEST_CASE("integrate_step") {
  auto l4 = filiform_model(4);
  auto s = integrate_step(l4, {single(4, 1, 2, 3)});
  REQUIRE(s);
  CHECK(s->is_zero());

  // abelian base: no coboundaries, so a non square-zero phi_1 is obstructed
  Cochain bad = single(3, 0, 1, 2) + single(3, 0, 2, 0);
  REQUIRE_FALSE(circle(bad, bad).is_zero());
  CHECK_FALSE(integrate_step(abelian(3), {bad}).has_value());

  Cochain not_cocycle(3, 2);
  not_cocycle.set({0, 2}, 0, Scalar(1));
  CHECK_THROWS(integrate_step(heisenberg(1), {not_cocycle}));
}

TEST_CASE("integration never fails over aff2 and built jets are Lie laws") {
  std::mt19937 rng(43);
  auto a = aff2();
  for (int t = 0; t < 20; ++t) {
    std::vector<Cochain> prefix{random_cochain(rng, 2, 2, 80)};
    for (size_t p = 1; p < 6; ++p) {
      auto next = integrate_step(a, prefix);
      REQUIRE(next);
      prefix.push_back(*next + random_cochain(rng, 2, 2, 50));
    }
    DeformationJet jet{a, prefix, 6};
    for (const auto& [k, c] : jacobi_residuals(jet, 6)) CHECK(c.is_zero());
  }
  // a jet built over a nilpotent base
  auto l5 = filiform_model(5);
  std::vector<Cochain> prefix{single(5, 1, 2, 4)};
  for (size_t p = 1; p < 4; ++p) {
    auto next = integrate_step(l5, prefix);
    REQUIRE(next);
    prefix.push_back(*next);
  }
  for (const auto& [k, c] : jacobi_residuals(DeformationJet{l5, prefix, 4}, 4)) CHECK(c.is_zero());
}

TEST_CASE("jet equivalence") {
  auto h = heisenberg(1);
  DeformationJet base{h, {}, 3};
  std::vector<Matrix> id{Matrix::identity(3)};
  CHECK(jet_equivalence_check(base, base, id, 3));
  DeformationJet other{h, {single(3, 0, 2, 2)}, 3};
  CHECK_FALSE(jet_equivalence_check(other, base, id, 3));

  // mu + t delta(Phi) is equivalent to mu at order one through Id + t Phi
  std::mt19937 rng(44);
  for (int t = 0; t < 10; ++t) {
    Matrix Phi = random_matrix(rng, 3, 3);
    DeformationJet j{h, {delta(h, Cochain::from_matrix(Phi))}, 1};
    CHECK(jet_equivalence_check(j, base, {Matrix::identity(3), Phi}, 1));
  }

  // (t + ... + t^N) phi against t (1 - t^N) / (1 - t) phi
  const size_t N = 6;
  auto l4 = filiform_model(4);
  Cochain phi = single(4, 1, 2, 3);
  TruncatedSeries one = TruncatedSeries::constant(Scalar(1), N), t1 = TruncatedSeries::monomial(Scalar(1), 1, N);
  TruncatedSeries s = t1 * (one - TruncatedSeries::monomial(Scalar(1), N, N)) * (one - t1).inverse();
  DeformationJet ja{l4, {}, N}, jb{l4, {}, N};
  for (size_t p = 1; p <= N; ++p) {
    ja.terms.push_back(phi);
    jb.terms.push_back(s[p] * phi);
  }
  CHECK(jet_equivalence_check(ja, jb, {Matrix::identity(4)}, N));
  CHECK_THROWS(jet_equivalence_check(ja, jb, {Scalar(2) * Matrix::identity(4)}, N));
}

TEST_CASE("rigid bases: every fuzzed jet is equivalent to the trivial one") {
  std::mt19937 rng(45);
  for (const auto& g : {aff2(), sl2()}) {
    REQUIRE(cohomology_dims(g, 2).dim_H == 0);
    for (int t = 0; t < 5; ++t) {
      std::vector<Cochain> prefix{random_cocycle(rng, g)};
      for (size_t p = 1; p < 3; ++p) {
        auto next = integrate_step(g, prefix);
        REQUIRE(next);
        prefix.push_back(*next + random_cocycle(rng, g));
      }
      DeformationJet jet{g, prefix, 3};
      auto u = trivialize(jet);
      REQUIRE(u);
      CHECK(jet_equivalence_check(jet, DeformationJet{g, {}, 3}, *u, 3));
    }
  }
}

TEST_CASE("flag decomposition examples") {
  auto f = flag_decompose({series({0, 1, 1}, 6), series({0, 1}, 6)});
  REQUIRE(f.length() == 2);
  CHECK(f.b[0] == series({0, 1}, 6));
  CHECK(f.V[0] == vec({1, 1}));
  CHECK(f.b[1] == series({0, 1}, 5));
  CHECK(f.V[1] == vec({1, 0}));

  auto g = flag_decompose({series({0, 1}, 6), series({}, 6), series({}, 6)});
  REQUIRE(g.length() == 1);
  CHECK(g.b[0] == series({0, 1}, 6));
  CHECK(g.V[0] == vec({1, 0, 0}));

  auto h = flag_decompose({series({0, 0, 1}, 6), series({0, 0, 0, 1}, 6)});
  REQUIRE(h.length() == 2);
  CHECK(h.b[0] == series({0, 0, 1}, 6));
  CHECK(h.V[0] == vec({1, 0}));
  CHECK(h.b[1] == series({0, 1}, 4));
  CHECK(h.V[1] == vec({0, 1}));

  CHECK_THROWS(flag_decompose({series({1, 1}, 4)}));
}

TEST_CASE("flag decomposition: reconstruction and uniqueness (fuzzed)") {
  std::mt19937 rng(46);
  std::uniform_int_distribution<int> dim(1, 4), ord(4, 10), val(1, 3), coef(-3, 3), nvec(1, 3);
  for (int t = 0; t < 300; ++t) {
    const size_t k = static_cast<size_t>(dim(rng));
    const size_t N = static_cast<size_t>(ord(rng));
    // build from a random flag so that lengths > 1 are common
    std::vector<TruncatedSeries> v(k, TruncatedSeries(N));
    TruncatedSeries prod = TruncatedSeries::constant(Scalar(1), N);
    for (int m = nvec(rng); m > 0; --m) {
      TruncatedSeries b(N);
      size_t vb = static_cast<size_t>(val(rng));
      for (size_t i = vb; i <= N; ++i) b[i] = Scalar(coef(rng));
      if (vb <= N) b[vb] = Scalar(coef(rng) >= 0 ? 1 : -2);
      prod = prod * b;
      for (size_t i = 0; i < k; ++i) v[i] += Scalar(coef(rng)) * prod;
    }
    for (size_t i = 0; i < k; ++i) REQUIRE(v[i].in_maximal_ideal());
    auto f = flag_decompose(v);
    auto r = f.reconstruct();
    REQUIRE(r.size() == k);
    for (size_t i = 0; i < k; ++i) CHECK(r[i] == v[i]);
    for (const auto& b : f.b) CHECK(b.in_maximal_ideal());
    std::vector<Vec> vs = f.V;
    CHECK(Subspace::span(k, vs).dim() == f.length());

    Scalar c(coef(rng) == 0 ? 5 : coef(rng) + 7, 3);
    std::vector<TruncatedSeries> w;
    for (const auto& x : v) w.push_back(c * x);
    CHECK(flag_decompose(w).flag() == f.flag());
  }
}

TEST_CASE("valued decomposition of deformations") {
  auto l4 = filiform_model(4);
  Cochain phi = single(4, 1, 2, 3);
  auto d1 = decompose_deformation(DeformationJet{l4, {phi}, 6});
  REQUIRE(d1.phi.size() == 1);
  CHECK(d1.phi[0] == phi);
  CHECK(d1.eps[0] == series({0, 1}, 6));

  auto d2 = decompose_deformation(DeformationJet{l4, {phi, phi}, 6});
  REQUIRE(d2.phi.size() == 1);
  CHECK(d2.phi[0] == phi);
  CHECK(d2.eps[0] == series({0, 1, 1}, 6));

  auto ab = abelian(3);
  Cochain pa = single(3, 0, 1, 2), pb = single(3, 0, 2, 2);
  auto d3 = decompose_deformation(DeformationJet{ab, {pa, pb}, 6});
  REQUIRE(d3.phi.size() == 2);
  CHECK(d3.phi[0] == pa);
  CHECK(d3.phi[1] == pb);
  CHECK(d3.eps[0] == series({0, 1}, 6));
  CHECK(d3.eps[1] == series({0, 1}, 5));

  CHECK_THROWS(decompose_deformation(DeformationJet{ab, {single(3, 0, 1, 2) + single(3, 0, 2, 0)}, 4}));
}

TEST_CASE("finite system of the valued decomposition") {
  auto l4 = filiform_model(4);
  Cochain phi = single(4, 1, 2, 3);
  auto rep = finite_system_check(decompose_deformation(DeformationJet{l4, {phi}, 4}));
  CHECK(rep.k == 1);
  CHECK(rep.delta_phi1_zero);
  CHECK(rep.all_hold());
  CHECK(rep.bound == 0);
  CHECK(graded_bracket(phi, phi).is_zero());

  auto ab = abelian(3);
  auto rep2 = finite_system_check(decompose_deformation(DeformationJet{ab, {single(3, 0, 1, 2), single(3, 0, 2, 2)}, 6}));
  CHECK(rep2.k == 2);
  CHECK(rep2.all_hold());
  CHECK(rep2.dim_V <= rep2.bound);
}
