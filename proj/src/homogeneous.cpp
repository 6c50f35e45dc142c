#include "liealg/homogeneous.hpp"

#include <stdexcept>

#include "liealg/catalog.hpp"

namespace liealg {

namespace {

void require_complement(const Subspace& h, const Subspace& m) {
  if (h.ambient() != m.ambient() || h.dim() + m.dim() != h.ambient() ||
      subspace_sum(h, m).dim() != h.ambient())
    throw std::invalid_argument("h and m are not complementary");
}

// Coordinates of v in the concatenated bases of h and m.
Vec split_coords(const Subspace& h, const Subspace& m, const Vec& v) {
  std::vector<Vec> cols = h.basis();
  cols.insert(cols.end(), m.basis().begin(), m.basis().end());
  auto c = solve(Matrix::from_columns(cols, h.ambient()), v);
  if (!c) throw std::logic_error("split_coords: vector outside h + m");
  return *c;
}

}  // namespace

bool reductive_check(const LieAlgebra& g, const Subspace& h, const Subspace& m) {
  require_complement(h, m);
  return is_subalgebra(g, h) && m.contains(bracket_span(g, h, m));
}

bool symmetric_check(const LieAlgebra& g, const Subspace& h, const Subspace& m) {
  return reductive_check(g, h, m) && h.contains(bracket_span(g, m, m));
}

bool naturally_reductive_check(const LieAlgebra& g, const Subspace& h, const Subspace& m, const Matrix& B) {
  require_complement(h, m);
  const size_t dm = m.dim(), dh = h.dim();
  if (B.rows() != dm || B.cols() != dm) throw std::invalid_argument("naturally_reductive_check: B has wrong size");
  if (!(B.transpose() == B) || det(B).is_zero())
    throw std::invalid_argument("naturally_reductive_check: B must be symmetric nondegenerate");
  if (!reductive_check(g, h, m)) return false;
  // C[z] columns: m-component of [m_z, m_j] in the m basis
  std::vector<Matrix> C(dm, Matrix(dm, dm));
  for (size_t z = 0; z < dm; ++z)
    for (size_t j = 0; j < dm; ++j) {
      Vec c = split_coords(h, m, bracket(g, m.basis()[z], m.basis()[j]));
      for (size_t r = 0; r < dm; ++r) C[z](r, j) = c[dh + r];
    }
  for (size_t z = 0; z < dm; ++z)
    if (!(C[z].transpose() * B + B * C[z]).is_zero()) return false;
  return true;
}

bool grading_check(const LieAlgebra& g, const Grading& gr) {
  const size_t n = g.dim();
  if (gr.components.size() != (size_t{1} << gr.rank)) throw std::invalid_argument("grading_check: wrong number of components");
  size_t total = 0;
  Subspace sum = Subspace::zero(n);
  for (const auto& c : gr.components) {
    if (c.ambient() != n) throw std::invalid_argument("grading_check: ambient dimension mismatch");
    total += c.dim();
    sum = subspace_sum(sum, c);
  }
  if (total != n || sum.dim() != n) throw std::invalid_argument("grading_check: components are not complementary");
  for (size_t x = 0; x < gr.components.size(); ++x)
    for (size_t y = x; y < gr.components.size(); ++y)
      if (!gr.components[x ^ y].contains(bracket_span(g, gr.components[x], gr.components[y]))) return false;
  return true;
}

size_t so_grading_component_dim(size_t k, size_t gamma) {
  return gamma == 0 ? k * (2 * k + 1) : k * (2 * k - 1);
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero())
        for (size_t p = 0; p < b.rows(); ++p)
          for (size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return out;
}

Vec antisym_coords(const Matrix& A) {
  const size_t N = A.rows();
  Vec v;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j) v.push_back(A(i, j));
  return v;
}

Matrix antisym_matrix(size_t N, const Vec& v) {
  Matrix A(N, N);
  size_t c = 0;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j, ++c) {
      A(i, j) = v[c];
      A(j, i) = -v[c];
    }
  return A;
}

// Which block of the first block row is symmetric (others antisymmetric) for a, b, c;
// the identity component has A antisymmetric and B, C, D symmetric.
bool block_symmetric(size_t gamma, size_t block) {
  switch (gamma) {
    case 0: return block != 0;
    case 1: return block == 3;
    case 2: return block == 1;
    default: return block == 2;
  }
}

}  // namespace

SoGrading build_so_grading(size_t k) {
  if (k == 0) throw std::invalid_argument("build_so_grading: k must be positive");
  const size_t N = 4 * k, dim = N * (N - 1) / 2;
  SoGrading out;
  out.k = k;
  out.algebra = so(N);
  Matrix S(2 * k, 2 * k);
  for (size_t i = 0; i < k; ++i) {
    S(i, k + i) = 1;
    S(k + i, i) = -1;
  }
  Matrix Xa(2, 2), Xb(2, 2);
  Xa(0, 0) = -1;
  Xa(1, 1) = 1;
  Xb(0, 1) = 1;
  Xb(1, 0) = 1;
  Matrix Ja = kron(Xa, S), Jb = kron(Xb, S);
  out.involutions = {Ja, Jb, Ja * Jb};
  std::array<std::vector<Vec>, 3> T;  // tau on so(N) coordinates, by column
  for (size_t t = 0; t < 3; ++t) {
    const Matrix& J = out.involutions[t];
    Matrix Ji = *inverse(J);
    if (!(J * J == Matrix::identity(N) || J * J == Scalar(-1) * Matrix::identity(N)))
      throw std::logic_error("build_so_grading: J^2 is not +-Id");
    for (size_t c = 0; c < dim; ++c) T[t].push_back(antisym_coords(Ji * antisym_matrix(N, unit_vec(dim, c)) * J));
  }
  auto apply = [&](size_t t, const Vec& v) {
    Vec out(dim);
    for (size_t c = 0; c < dim; ++c)
      if (!v[c].is_zero()) vec_axpy(out, v[c], T[t][c]);
    return out;
  };
  for (size_t c = 0; c < dim; ++c) {
    Vec e = unit_vec(dim, c);
    for (size_t s = 0; s < 3; ++s) {
      if (!(apply(s, T[s][c]) == e)) throw std::logic_error("build_so_grading: tau is not an involution");
      for (size_t t = s + 1; t < 3; ++t)
        if (!(apply(s, T[t][c]) == apply(t, T[s][c]))) throw std::logic_error("build_so_grading: involutions do not commute");
    }
  }
  // characters (tau_a, tau_b, tau_c) of e, a, b, c
  const int chars[4][3] = {{1, 1, 1}, {-1, 1, -1}, {1, -1, -1}, {-1, -1, 1}};
  out.grading.rank = 2;
  out.grading.labels = {"e", "a", "b", "c"};
  for (size_t gmm = 0; gmm < 4; ++gmm) {
    // image of the projector onto the simultaneous eigenspace
    std::vector<Vec> img;
    const Scalar sa(chars[gmm][0]), sb(chars[gmm][1]);
    for (size_t c = 0; c < dim; ++c) {
      Vec v = unit_vec(dim, c);
      vec_axpy(v, sa, T[0][c]);
      Vec w = v;
      vec_axpy(w, sb, apply(1, v));
      if (!vec_is_zero(w)) img.push_back(w);
    }
    Subspace comp = Subspace::span(dim, img);
    for (const auto& b : comp.basis())
      for (size_t t = 0; t < 3; ++t)
        if (!(apply(t, b) == vec_scale(Scalar(chars[gmm][t]), b)))
          throw std::logic_error("build_so_grading: component is not an eigenspace");
    if (comp.dim() != so_grading_component_dim(k, gmm)) throw std::logic_error("build_so_grading: unexpected component dimension");
    out.grading.components.push_back(comp);
    // adapted basis: elements whose first block row is a single block coordinate
    const auto& B = comp.basis();
    Matrix first(k * N, B.size());
    for (size_t c = 0; c < B.size(); ++c) {
      Matrix M = antisym_matrix(N, B[c]);
      for (size_t r = 0; r < k; ++r)
        for (size_t q = 0; q < N; ++q) first(r * N + q, c) = M(r, q);
    }
    for (size_t blk = 0; blk < 4; ++blk) {
      bool sym = block_symmetric(gmm, blk);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = sym ? i : i + 1; j < k; ++j) {
          Vec target(k * N);
          target[i * N + blk * k + j] = 1;
          if (i != j) target[j * N + blk * k + i] = sym ? Scalar(1) : Scalar(-1);
          auto c = solve(first, target);
          if (!c) throw std::logic_error("build_so_grading: block coordinate not realized");
          Vec v(dim);
          for (size_t q = 0; q < B.size(); ++q) vec_axpy(v, (*c)[q], B[q]);
          BlockCoord kind = !sym ? BlockCoord::Antisymmetric : (i == j ? BlockCoord::SymmetricDiag : BlockCoord::SymmetricOff);
          out.adapted[gmm].push_back({v, blk, kind, i, j});
        }
    }
    if (out.adapted[gmm].size() != comp.dim()) throw std::logic_error("build_so_grading: adapted basis has wrong size");
  }
  return out;
}

namespace {

void validate_spec(const MetricSpec& spec) {
  if (spec.k == 0) throw std::invalid_argument("metric spec: k must be positive");
  for (size_t t = 0; t < 3; ++t)
    if (spec.lambda1[t].is_zero() || !spec.lambda1[t].is_real() || !spec.lambda2[t].is_real())
      throw std::invalid_argument("metric spec: lambda1 must be a nonzero rational");
}

}  // namespace

std::array<GammaEigenvalues, 3> metric_eigenvalues(const MetricSpec& spec) {
  validate_spec(spec);
  const size_t r = spec.k, d = so_grading_component_dim(spec.k, 1);
  const Scalar R(static_cast<long>(r));
  std::array<GammaEigenvalues, 3> out;
  for (size_t t = 0; t < 3; ++t) {
    const Scalar& l1 = spec.lambda1[t];
    const Scalar& l2 = spec.lambda2[t];
    auto& e = out[t];
    e.mu1 = l1;
    e.mu2 = l2 / Scalar(2) + l1 / Scalar(4);
    e.mu3 = l2 * (R + Scalar(1)) / Scalar(2) - l1 * (R - Scalar(1)) / Scalar(4);
    e.m1 = d - r;
    e.m2 = r - 1;
    e.m3 = 1;
    if ((e.m1 && e.mu1.is_zero()) || (e.m2 && e.mu2.is_zero()) || e.mu3.is_zero())
      throw std::invalid_argument("metric spec is degenerate");
  }
  return out;
}

namespace {

Matrix literal_gram(const std::vector<BlockCoord>& kinds, const Scalar& l1, const Scalar& l2) {
  const Scalar cross = (l2 - l1 / Scalar(2)) / Scalar(2);
  Matrix G(kinds.size(), kinds.size());
  for (size_t u = 0; u < kinds.size(); ++u)
    for (size_t v = 0; v < kinds.size(); ++v) {
      bool du = kinds[u] == BlockCoord::SymmetricDiag, dv = kinds[v] == BlockCoord::SymmetricDiag;
      if (u == v) G(u, v) = du ? l2 : l1;
      else if (du && dv) G(u, v) = cross;
    }
  return G;
}

std::vector<BlockCoord> component_kinds(size_t k, size_t gamma) {
  std::vector<BlockCoord> out;
  for (size_t blk = 0; blk < 4; ++blk) {
    bool sym = block_symmetric(gamma, blk);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = sym ? i : i + 1; j < k; ++j)
        out.push_back(!sym ? BlockCoord::Antisymmetric : (i == j ? BlockCoord::SymmetricDiag : BlockCoord::SymmetricOff));
  }
  return out;
}

}  // namespace

AdaptedMetric adapted_metric(const SoGrading& gr, const MetricSpec& spec) {
  if (spec.k != gr.k) throw std::invalid_argument("adapted_metric: spec and grading have different k");
  validate_spec(spec);
  AdaptedMetric out;
  size_t total = 0;
  for (size_t t = 0; t < 3; ++t) total += gr.adapted[t + 1].size();
  out.gram_total = Matrix(total, total);
  size_t off = 0;
  for (size_t t = 0; t < 3; ++t) {
    const auto& basis = gr.adapted[t + 1];
    std::vector<BlockCoord> kinds;
    for (const auto& b : basis) kinds.push_back(b.kind);
    Matrix G = literal_gram(kinds, spec.lambda1[t], spec.lambda2[t]);
    for (size_t u = 0; u < basis.size(); ++u) {
      out.m_basis.push_back(basis[u].v);
      for (size_t v = 0; v < basis.size(); ++v) out.gram_total(off + u, off + v) = G(u, v);
    }
    off += basis.size();
    out.gram[t] = G;
  }
  if (det(out.gram_total).is_zero()) throw std::invalid_argument("adapted_metric: degenerate form");
  return out;
}

bool invariance_check(const SoGrading& gr, const AdaptedMetric& B) {
  const LieAlgebra& g = gr.algebra;
  const size_t dm = B.m_basis.size();
  Matrix Mb = Matrix::from_columns(B.m_basis, g.dim());
  for (const auto& z : gr.adapted[0]) {
    Matrix C(dm, dm);
    for (size_t j = 0; j < dm; ++j) {
      auto c = solve(Mb, bracket(g, z.v, B.m_basis[j]));
      if (!c) return false;
      for (size_t r = 0; r < dm; ++r) C(r, j) = (*c)[r];
    }
    if (!(C.transpose() * B.gram_total + B.gram_total * C).is_zero()) return false;
  }
  return true;
}

MetricSignature metric_signature(const MetricSpec& spec) {
  auto eig = metric_eigenvalues(spec);
  MetricSignature out;
  auto add = [](Signature& s, const Scalar& mu, size_t mult) {
    if (mult == 0) return;
    (mu.sign() > 0 ? s.pos : s.neg) += mult;
  };
  for (size_t t = 0; t < 3; ++t) {
    add(out.per_gamma[t], eig[t].mu1, eig[t].m1);
    add(out.per_gamma[t], eig[t].mu2, eig[t].m2);
    add(out.per_gamma[t], eig[t].mu3, eig[t].m3);
    out.total.pos += out.per_gamma[t].pos;
    out.total.neg += out.per_gamma[t].neg;
  }
  out.congruence_agrees = true;
  Signature sum;
  for (size_t t = 0; t < 3; ++t) {
    Signature c = congruence_signature(literal_gram(component_kinds(spec.k, t + 1), spec.lambda1[t], spec.lambda2[t]));
    if (!(c == out.per_gamma[t])) out.congruence_agrees = false;
    sum.pos += c.pos;
    sum.neg += c.neg;
    sum.zero += c.zero;
  }
  if (!(sum == out.total)) out.congruence_agrees = false;
  return out;
}

MetricClass classify_metric(const MetricSpec& spec) {
  MetricSignature s = metric_signature(spec);
  MetricClass c;
  c.riemannian = s.total.neg == 0 && s.total.zero == 0;
  c.lorentzian = s.total.neg == 1 && s.total.zero == 0;
  c.naturally_reductive = true;
  for (size_t t = 0; t < 3; ++t)
    if (!(spec.lambda1[t] == spec.lambda1[0]) || !(spec.lambda1[t] == Scalar(2) * spec.lambda2[t]))
      c.naturally_reductive = false;
  return c;
}

const std::vector<SymmetricPair>& cartan_symmetric_pairs() {
  static const std::vector<SymmetricPair> t = {
      {"AI", "su(n)", "so(n)"},
      {"AII", "su(2n)", "sp(n)"},
      {"AIII", "su(p+q)", "su(p)+su(q)"},
      {"BDI", "so(p+q)", "so(p)+so(q)"},
      {"DIII", "so(2n)", "u(n)"},
      {"CI", "sp(n)", "u(n)"},
      {"CII", "sp(p+q)", "sp(p)+sp(q)"},
      {"EI", "E6", "sp(4)"},
      {"EII", "E6", "su(6)+su(2)"},
      {"EIII", "E6", "so(10)+so(2)"},
      {"EIV", "E6", "F4"},
      {"EV", "E7", "su(8)"},
      {"EVI", "E7", "so(12)+su(2)"},
      {"EVII", "E7", "E6+so(2)"},
      {"EVIII", "E8", "so(16)"},
      {"EIX", "E8", "E7+su(2)"},
      {"FI", "F4", "sp(3)+su(2)"},
      {"FII", "F4", "so(9)"},
      {"G", "G2", "su(2)+su(2)"},
  };
  return t;
}

const std::vector<SymmetricPair>& z2z2_symmetric_pairs() {
  static const std::vector<SymmetricPair> t = {
      {"", "su(2n)", "su(n)"},
      {"", "su(k1+k2)", "su(k1)+su(k2)+C"},
      {"", "su(k1+k2+k3)", "su(k1)+su(k2)+su(k3)+C^2"},
      {"", "su(k1+k2+k3+k4)", "su(k1)+su(k2)+su(k3)+su(k4)+C^3"},
      {"", "su(n)", "so(n)"},
      {"", "su(2m)", "sp(m)"},
      {"", "su(k1+k2)", "so(k1)+so(k2)"},
      {"", "su(2(k1+k2))", "sp(2k1)+sp(2k2)"},
      {"", "so(k1+k2+k3+k4)", "so(k1)+so(k2)+so(k3)+so(k4)"},
      {"", "so(4m)", "sp(2m)"},
      {"", "so(2m)", "so(m)"},
      {"", "sp(k1+k2+k3+k4)", "sp(k1)+sp(k2)+sp(k3)+sp(k4)"},
      {"", "sp(4m)", "sp(2m)"},
      {"", "sp(2m)", "so(m)"},
  };
  return t;
}

}  // namespace liealg
