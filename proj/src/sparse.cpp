#include "liealg/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liealg {

SparseMatrix SparseMatrix::from_columns(const std::vector<SparseRow>& columns, size_t rows) {
  SparseMatrix m(rows, columns.size());
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, v] : columns[j]) {
      if (i >= rows) throw std::out_of_range("sparse column entry out of range");
      if (!v.is_zero()) m.data[i].push_back({j, v});
    }
  return m;  // columns visited in order, so rows stay sorted
}

Matrix SparseMatrix::dense() const {
  Matrix d(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (const auto& [j, v] : data[i]) d(i, j) = v;
  return d;
}

size_t SparseMatrix::nonzeros() const {
  size_t s = 0;
  for (const auto& r : data) s += r.size();
  return s;
}

namespace {

// row := row - f * piv, both sorted; result sorted without zeros.
SparseRow axpy_row(const SparseRow& row, const Scalar& f, const SparseRow& piv) {
  SparseRow out;
  out.reserve(row.size() + piv.size());
  size_t a = 0, b = 0;
  while (a < row.size() || b < piv.size()) {
    if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || piv[b].first < row[a].first) {
      out.push_back({piv[b].first, -(f * piv[b].second)});
      ++b;
    } else {
      Scalar v = row[a].second - f * piv[b].second;
      if (!v.is_zero()) out.push_back({row[a].first, std::move(v)});
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

size_t sparse_rank(const SparseMatrix& m) {
  // Process rows shortest first to limit fill-in.
  std::vector<size_t> order(m.rows);
  for (size_t i = 0; i < m.rows; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return m.data[x].size() < m.data[y].size(); });
  std::map<size_t, SparseRow> pivots;  // leading column -> row with leading 1
  for (size_t idx : order) {
    SparseRow row = m.data[idx];
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      Scalar f = row.front().second;
      row = axpy_row(row, f, it->second);
    }
    if (row.empty()) continue;
    Scalar inv = Scalar(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    pivots.emplace(row.front().first, std::move(row));
    if (pivots.size() == m.cols) break;
  }
  return pivots.size();
}

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) {
  if (p < (1ull << 32)) return a * b % p;
  return static_cast<u64>((u128)a * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  u64 out = 0;
  size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return count ? out : 0;
}

// Returns false if a denominator vanishes mod p.
bool reduce_scalar(const Scalar& s, u64 p, u64& out) {
  if (!s.is_real()) throw std::domain_error("modular rank needs rational entries");
  u64 d = reduce(s.re().get_den(), p);
  if (d == 0) return false;
  out = mulmod(reduce(s.re().get_num(), p), invmod(d, p), p);
  return true;
}

struct ModEchelon {
  std::vector<std::vector<u64>> rows;  // dense reduced rows
  std::vector<size_t> pivots;
};

bool modular_echelon(const SparseMatrix& m, u64 p, ModEchelon& out) {
  std::vector<std::vector<u64>> a(m.rows, std::vector<u64>(m.cols, 0));
  for (size_t i = 0; i < m.rows; ++i)
    for (const auto& [j, v] : m.data[i])
      if (!reduce_scalar(v, p, a[i][j])) return false;
  size_t r = 0;
  std::vector<size_t> piv;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t q = r;
    while (q < m.rows && a[q][c] == 0) ++q;
    if (q == m.rows) continue;
    std::swap(a[q], a[r]);
    u64 inv = invmod(a[r][c], p);
    for (size_t j = c; j < m.cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (size_t j = c; j < m.cols; ++j) {
        if (a[r][j] == 0) continue;
        u64 t = mulmod(f, a[r][j], p);
        a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
      }
    }
    piv.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  out.pivots = std::move(piv);
  return true;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int k = 1; k < s; ++k) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

std::vector<u64> prime_list(size_t count) {
  std::vector<u64> ps;
  u64 c = (1ull << 31) - 1;
  while (ps.size() < count) {
    if (is_prime(c)) ps.push_back(c);
    c -= 2;
  }
  return ps;
}

// Rational reconstruction of a residue modulo m.
bool rational_reconstruct(const mpz_class& a, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
  mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

mpz_class to_mpz(u64 v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
  return z;
}

}  // namespace

size_t modular_rank(const SparseMatrix& m, uint64_t p) {
  ModEchelon e;
  if (!modular_echelon(m, p, e)) throw std::domain_error("denominator divisible by the prime");
  return e.pivots.size();
}

VerifiedRank verified_rank(const SparseMatrix& m) {
  VerifiedRank out;
  const auto primes = prime_list(8);
  size_t best = 0;
  std::vector<ModEchelon> echelons;
  std::vector<u64> used;
  for (u64 p : primes) {
    ModEchelon e;
    if (!modular_echelon(m, p, e)) continue;
    if (e.pivots.size() > best) {
      best = e.pivots.size();
      echelons.clear();
      used.clear();
    }
    if (e.pivots.size() == best) {
      echelons.push_back(std::move(e));
      used.push_back(p);
    }
    if (echelons.empty()) continue;
    // Try to certify with the residues collected so far (same pivot pattern).
    const auto& piv = echelons.front().pivots;
    bool same = true;
    for (const auto& ee : echelons) same = same && ee.pivots == piv;
    if (!same) continue;
    std::vector<bool> is_piv(m.cols, false);
    for (size_t c : piv) is_piv[c] = true;
    mpz_class modulus = 1;
    for (u64 q : used) modulus *= to_mpz(q);
    bool ok = true;
    std::vector<Vec> kernel_vectors;
    for (size_t f = 0; f < m.cols && ok; ++f) {
      if (is_piv[f]) continue;
      Vec v(m.cols);
      v[f] = 1;
      for (size_t r = 0; r < piv.size() && ok; ++r) {
        // CRT combine -R[r][f] across primes.
        mpz_class x = 0, mm = 1;
        for (size_t t = 0; t < used.size(); ++t) {
          u64 p2 = used[t];
          u64 val = echelons[t].rows[r][f];
          val = val == 0 ? 0 : p2 - val;
          mpz_class pz = to_mpz(p2);
          // x' = x + mm * ((val - x) * mm^{-1} mod p2)
          mpz_class diff = to_mpz(val) - x;
          mpz_class inv;
          mpz_invert(inv.get_mpz_t(), mpz_class(mm % pz).get_mpz_t(), pz.get_mpz_t());
          mpz_class k = (diff * inv) % pz;
          if (k < 0) k += pz;
          x += mm * k;
          mm *= pz;
        }
        mpq_class q;
        if (!rational_reconstruct(x, modulus, q)) ok = false;
        else v[piv[r]] = Scalar(q);
      }
      if (ok) kernel_vectors.push_back(std::move(v));
    }
    if (!ok) continue;
    for (const auto& v : kernel_vectors) {
      for (size_t i = 0; i < m.rows && ok; ++i) {
        Scalar s = 0;
        for (const auto& [j, a] : m.data[i])
          if (!v[j].is_zero()) s += a * v[j];
        if (!s.is_zero()) ok = false;
      }
      if (!ok) break;
    }
    if (ok) {
      // kernel vectors have distinct free-column supports, hence independent
      out.rank = best;
      out.verified = true;
      out.primes = used;
      return out;
    }
  }
  out.rank = sparse_rank(m);
  out.verified = true;
  out.primes.clear();
  return out;
}

}  // namespace liealg
