#include "liealg/deformations.hpp"

#include <algorithm>
#include <stdexcept>

namespace liealg {

Cochain DeformationJet::term(size_t p) const {
  if (p == 0) return Cochain::from_algebra(base);
  if (p <= terms.size()) return terms[p - 1];
  return Cochain(base.dim(), 2);
}

LinearDeformationReport linear_deformation_check(const LieAlgebra& mu0, const Cochain& phi) {
  if (phi.p() != 2 || phi.n() != mu0.dim()) throw std::invalid_argument("linear deformation needs a 2-cochain");
  LinearDeformationReport r;
  Cochain mu = Cochain::from_algebra(mu0);
  r.is_cocycle = (circle(mu, phi) + circle(phi, mu)).is_zero();
  r.is_square_zero = circle(phi, phi).is_zero();
  // (mu + t phi) o (mu + t phi) vanishes identically iff its t^0, t^1, t^2 parts do
  r.valid_for_all_t = circle(mu, mu).is_zero() && r.is_cocycle && r.is_square_zero;
  return r;
}

std::map<size_t, Cochain> jacobi_residuals(const DeformationJet& jet, size_t up_to) {
  if (up_to > 2 * jet.order) throw std::invalid_argument("jacobi_residuals: order beyond twice the truncation");
  std::map<size_t, Cochain> out;
  const size_t n = jet.base.dim();
  std::vector<Cochain> phi;
  for (size_t p = 0; p <= up_to; ++p) phi.push_back(p <= jet.order ? jet.term(p) : Cochain(n, 2));
  for (size_t k = 0; k <= up_to; ++k) {
    Cochain r(n, 3);
    for (size_t a = 0; a <= k; ++a) {
      if (phi[a].is_zero() || phi[k - a].is_zero()) continue;
      r += circle(phi[a], phi[k - a]);
    }
    out.emplace(k, std::move(r));
  }
  return out;
}

std::optional<Cochain> integrate_step(const LieAlgebra& mu0, const std::vector<Cochain>& prefix) {
  const size_t n = mu0.dim(), p = prefix.size();
  if (p == 0) throw std::invalid_argument("integrate_step needs phi_1");
  DeformationJet jet{mu0, prefix, p};
  auto res = jacobi_residuals(jet, p);
  for (const auto& [k, r] : res)
    if (!r.is_zero()) throw std::invalid_argument("integrate_step: prefix fails the Jacobi system at order " + std::to_string(k));
  Cochain obstruction(n, 3);
  for (size_t a = 1; a <= p; ++a) obstruction += circle(prefix[a - 1], prefix[p - a]);
  if (!delta(mu0, obstruction).is_zero()) throw std::logic_error("integrate_step: obstruction is not a cocycle");
  if (obstruction.is_zero()) return Cochain(n, 2);
  if (n < 3) return Cochain(n, 2);
  return solve_delta(mu0, 2, Scalar(-1) * obstruction);
}

namespace {

// c = phi(uX, uY) part: sum over b + c = m of phi(U_b X, U_c Y)
Vec apply_pair(const Cochain& phi, const Matrix& A, const Matrix& B, size_t i, size_t j) {
  const size_t n = phi.n();
  Vec x = A.col(i), y = B.col(j);
  Vec out(n);
  for (size_t a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (size_t b = 0; b < n; ++b) {
      if (y[b].is_zero() || a == b) continue;
      vec_axpy(out, x[a] * y[b], phi.value({a, b}));
    }
  }
  return out;
}

}  // namespace

bool jet_equivalence_check(const DeformationJet& jet1, const DeformationJet& jet2, const std::vector<Matrix>& u,
                           size_t up_to) {
  const size_t n = jet1.base.dim();
  if (jet2.base.dim() != n) throw std::invalid_argument("jet_equivalence_check: dimension mismatch");
  if (u.empty() || !(u[0] == Matrix::identity(n))) throw std::invalid_argument("jet_equivalence_check: u must be Id mod t");
  auto U = [&](size_t a) { return a < u.size() ? u[a] : Matrix(n, n); };
  for (size_t m = 0; m <= up_to; ++m)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Vec lhs(n), rhs(n);
        for (size_t a = 0; a <= m; ++a) {
          Matrix Ua = U(a);
          if (Ua.is_zero()) continue;
          lhs = vec_add(lhs, Ua * jet1.term(m - a).value({i, j}));
        }
        for (size_t a = 0; a <= m; ++a) {
          Cochain phi = jet2.term(a);
          if (phi.is_zero()) continue;
          for (size_t b = 0; a + b <= m; ++b) {
            Matrix Ub = U(b), Uc = U(m - a - b);
            if (Ub.is_zero() || Uc.is_zero()) continue;
            rhs = vec_add(rhs, apply_pair(phi, Ub, Uc, i, j));
          }
        }
        if (!(lhs == rhs)) return false;
      }
  return true;
}

std::vector<TruncatedSeries> FlagDecomposition::reconstruct() const {
  const size_t k = dim;
  if (V.empty()) return std::vector<TruncatedSeries>(k, TruncatedSeries(precision));
  TruncatedSeries prod = b[0];
  std::vector<TruncatedSeries> acc(k);
  for (size_t i = 0; i < k; ++i) acc[i] = V[0][i] * prod;
  for (size_t h = 1; h < V.size(); ++h) {
    prod = prod * b[h];
    for (size_t i = 0; i < k; ++i) acc[i] += V[h][i] * prod;
  }
  return acc;
}

std::vector<Subspace> FlagDecomposition::flag() const {
  std::vector<Subspace> out;
  for (size_t h = 1; h <= V.size(); ++h) out.push_back(Subspace::span(dim, {V.begin(), V.begin() + h}));
  return out;
}

FlagDecomposition flag_decompose(const std::vector<TruncatedSeries>& input) {
  FlagDecomposition out;
  const size_t k = input.size();
  out.dim = k;
  if (k == 0) return out;
  out.precision = input[0].order();
  for (const auto& s : input)
    if (!s.in_maximal_ideal()) throw std::invalid_argument("flag_decompose: entries must have positive valuation");
  std::vector<TruncatedSeries> cur = input;
  size_t total_shift = 0;
  for (;;) {
    std::optional<size_t> best, pivot;
    for (size_t i = 0; i < k; ++i) {
      auto v = cur[i].valuation();
      if (v && (!best || *v <= *best)) {
        best = v;
        pivot = i;
      }
    }
    size_t prec = cur[0].order();
    for (const auto& s : cur) prec = std::min(prec, s.order());
    if (!pivot) {
      if (prec < 1) {
        out.precision_exhausted = true;
        out.order_needed = input[0].order() + 1;
      }
      break;
    }
    // an entry known to be zero only below the candidate valuation could still win
    for (const auto& s : cur)
      if (!s.valuation() && s.order() < *best) {
        out.precision_exhausted = true;
        out.order_needed = input[0].order() + (*best - s.order());
      }
    TruncatedSeries bser = cur[*pivot];
    total_shift += *best;
    std::vector<TruncatedSeries> ratios(k);
    for (size_t i = 0; i < k; ++i) ratios[i] = TruncatedSeries::divide(cur[i], bser);
    Vec V(k);
    for (size_t i = 0; i < k; ++i) {
      V[i] = ratios[i][0];
      ratios[i][0] = 0;
    }
    ratios[*pivot] = TruncatedSeries(ratios[*pivot].order());
    out.b.push_back(bser);
    out.V.push_back(V);
    cur = std::move(ratios);
    if (out.V.size() > k) throw std::logic_error("flag_decompose: more vectors than the dimension");
  }
  if (out.order_needed == 0) out.order_needed = total_shift + 1;
  return out;
}

namespace {

std::vector<TruncatedSeries> jet_vector(const DeformationJet& jet) {
  const size_t n = jet.base.dim();
  const size_t len = Cochain(n, 2).size();
  std::vector<TruncatedSeries> v(len, TruncatedSeries(jet.order));
  for (size_t p = 1; p <= jet.terms.size() && p <= jet.order; ++p)
    for (size_t i = 0; i < len; ++i) v[i][p] = jet.terms[p - 1].coeffs()[i];
  return v;
}

}  // namespace

ValuedDecomposition decompose_deformation(const DeformationJet& jet) {
  auto res = jacobi_residuals(jet, jet.order);
  for (const auto& [k, r] : res)
    if (!r.is_zero()) throw std::invalid_argument("decompose_deformation: jet fails Jacobi at order " + std::to_string(k));
  ValuedDecomposition d;
  d.base = jet.base;
  d.flag = flag_decompose(jet_vector(jet));
  d.eps = d.flag.b;
  for (const auto& V : d.flag.V) d.phi.emplace_back(jet.base.dim(), 2, V);
  if (!d.phi.empty() && !delta(jet.base, d.phi[0]).is_zero())
    throw std::logic_error("decompose_deformation: leading term is not a cocycle");
  return d;
}

bool FiniteSystemReport::all_hold() const {
  if (!delta_phi1_zero) return false;
  for (bool b : delta_relations)
    if (!b) return false;
  for (bool b : bracket_relations)
    if (!b) return false;
  return dim_V <= bound;
}

FiniteSystemReport finite_system_check(const ValuedDecomposition& d) {
  FiniteSystemReport r;
  const size_t k = d.phi.size();
  r.k = k;
  r.bound = k * (k > 0 ? k - 1 : 0) / 2;
  if (k == 0) {
    r.delta_phi1_zero = true;
    return r;
  }
  const LieAlgebra& g = d.base;
  const size_t n = g.dim();
  const auto& phi = d.phi;
  r.delta_phi1_zero = delta(g, phi[0]).is_zero();
  // brackets [phi_i, phi_j] for i <= j, stored by (i, j)
  std::map<std::pair<size_t, size_t>, Cochain> br;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) br.emplace(std::make_pair(i, j), graded_bracket(phi[i], phi[j]));
  auto span_solve = [&](size_t upto, const Cochain& target) -> std::optional<Vec> {
    std::vector<Vec> cols;
    for (size_t i = 0; i < upto; ++i)
      for (size_t j = i; j < upto; ++j) cols.push_back(br.at({i, j}).coeffs());
    if (cols.empty()) return target.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
    return solve(Matrix::from_columns(cols, target.size()), target.coeffs());
  };
  for (size_t m = 1; m < k; ++m) {
    auto a = span_solve(m, delta(g, phi[m]));
    r.delta_relations.push_back(a.has_value());
    r.a.push_back(a);
  }
  for (size_t m = 0; m + 1 < k; ++m) {
    auto b = span_solve(k - 1, br.at({m, k - 1}));
    r.bracket_relations.push_back(b.has_value());
    r.b.push_back(b);
  }
  std::vector<Vec> vs;
  for (size_t i = 0; i + 1 < k; ++i) {
    vs.push_back(delta(g, phi[i]).coeffs());
    for (size_t j = i; j + 1 < k; ++j) vs.push_back(br.at({i, j}).coeffs());
  }
  r.dim_V = vs.empty() ? 0 : Subspace::span(Cochain(n, 3).size(), vs).dim();
  return r;
}

}  // namespace liealg
