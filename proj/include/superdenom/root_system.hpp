#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "superdenom/weight.hpp"

namespace superdenom {

enum class Family { GL, D };

inline std::string family_name(Family f) { return f == Family::GL ? "gl" : "d"; }

using ExpVec = std::vector<int32_t>;

// Exact coordinates of lattice vectors over a fixed linearly independent
// family of weights.  Built once per root system; per-call work is integer
// matrix-vector arithmetic plus a consistency check, so membership failures
// (w outside the lattice) come back as nullopt, never as a wrong answer.
class LatticeSolver {
 public:
  static LatticeSolver build(const std::vector<Weight>& basis) {
    LatticeSolver s;
    s.k_ = static_cast<int>(basis.size());
    s.dim_ = basis.empty() ? 0 : basis[0].m() + basis[0].n() + 1;
    s.cols_.assign(s.dim_, std::vector<int64_t>(s.k_, 0));
    for (int j = 0; j < s.k_; ++j) {
      auto flat = flatten(basis[j]);
      for (int i = 0; i < s.dim_; ++i) s.cols_[i][j] = flat[i];
    }
    s.compute_inverse();
    return s;
  }

  // Coordinates of w over the basis, if w lies in its integer span.
  std::optional<ExpVec> coords(const Weight& w) const {
    auto flat = flatten(w);
    if (static_cast<int>(flat.size()) != dim_)
      throw DimensionMismatch("lattice solver: wrong ambient space");
    // w must be integral: the lattice is generated by integral weights.
    for (int64_t c : flat)
      if (c % 2 != 0) return std::nullopt;
    ExpVec x(k_);
    for (int i = 0; i < k_; ++i) {
      int64_t num = 0;
      for (int j = 0; j < k_; ++j) num += inv_num_[i][j] * flat[pivot_rows_[j]];
      if (num % den_ != 0) return std::nullopt;
      int64_t xi = num / den_;
      x[i] = static_cast<int32_t>(xi);
      if (x[i] != xi) throw InternalCheckError("lattice coordinate overflow");
    }
    // Consistency over the non-pivot rows (the system may be overdetermined).
    for (int i = 0; i < dim_; ++i) {
      int64_t acc = 0;
      for (int j = 0; j < k_; ++j) acc += cols_[i][j] * x[j];
      if (acc != flat[i]) return std::nullopt;
    }
    return x;
  }

  int basis_size() const { return k_; }

 private:
  static std::vector<int64_t> flatten(const Weight& w) {
    std::vector<int64_t> v;
    v.reserve(w.m() + w.n() + 1);
    v.insert(v.end(), w.eps2.begin(), w.eps2.end());
    v.insert(v.end(), w.del2.begin(), w.del2.end());
    v.push_back(w.imag2);
    return v;
  }

  void compute_inverse() {
    // Row-reduce the dim x k matrix over Q to select k pivot rows, then
    // invert the square pivot submatrix exactly.
    std::vector<std::vector<mpq_class>> m(dim_, std::vector<mpq_class>(k_));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < k_; ++j) m[i][j] = cols_[i][j];
    std::vector<bool> used(dim_, false);
    pivot_rows_.clear();
    for (int col = 0; col < k_; ++col) {
      int piv = -1;
      for (int i = 0; i < dim_; ++i)
        if (!used[i] && m[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) throw InternalCheckError("dependent lattice basis");
      used[piv] = true;
      pivot_rows_.push_back(piv);
      mpq_class p = m[piv][col];
      for (int i = 0; i < dim_; ++i) {
        if (i == piv || m[i][col] == 0) continue;
        mpq_class f = m[i][col] / p;
        for (int j = col; j < k_; ++j) m[i][j] -= f * m[piv][j];
      }
    }
    // Invert B = cols_[pivot_rows_] by Gauss-Jordan over Q.
    std::vector<std::vector<mpq_class>> a(k_, std::vector<mpq_class>(2 * k_, 0));
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) a[i][j] = cols_[pivot_rows_[i]][j];
      a[i][k_ + i] = 1;
    }
    for (int col = 0; col < k_; ++col) {
      int piv = -1;
      for (int i = col; i < k_; ++i)
        if (a[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) throw InternalCheckError("singular pivot submatrix");
      std::swap(a[col], a[piv]);
      mpq_class p = a[col][col];
      for (int j = 0; j < 2 * k_; ++j) a[col][j] /= p;
      for (int i = 0; i < k_; ++i) {
        if (i == col || a[i][col] == 0) continue;
        mpq_class f = a[i][col];
        for (int j = 0; j < 2 * k_; ++j) a[i][j] -= f * a[col][j];
      }
    }
    // Common denominator of the inverse.
    mpz_class lcm = 1;
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) {
        mpz_class d = a[i][j + k_].get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
      }
    if (!lcm.fits_slong_p()) throw InternalCheckError("lattice inverse denominator overflow");
    den_ = lcm.get_si();
    inv_num_.assign(k_, std::vector<int64_t>(k_));
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) {
        mpq_class e = a[i][j + k_] * lcm;
        mpz_class z = e.get_num();  // denominator is 1 after scaling
        if (e.get_den() != 1 || !z.fits_slong_p())
          throw InternalCheckError("lattice inverse scaling failed");
        inv_num_[i][j] = z.get_si();
      }
  }

  int dim_ = 0, k_ = 0;
  std::vector<std::vector<int64_t>> cols_;  // dim x k, doubled entries
  std::vector<int> pivot_rows_;
  std::vector<std::vector<int64_t>> inv_num_;  // k x k
  int64_t den_ = 1;
};

// Full root datum of gl(n|n) or D(n+1|n) together with the affine simple
// system and exact basis conversion for the affine root lattice.
struct RootSystem {
  Family family;
  int m = 0;  // number of eps coordinates
  int n = 0;  // number of delta coordinates
  int rank = 0;

  std::vector<Weight> simple_roots;
  std::vector<Weight> pos_even_prime;        // Delta'_+  (span of delta_i)
  std::vector<Weight> pos_even_doubleprime;  // Delta''_+ (span of eps_i)
  std::vector<Weight> pos_odd;               // Delta_1+
  Weight rho;
  Weight str_weight;  // gl only; zero weight for D
  Weight delta;       // minimal imaginary root
  Weight theta;       // highest root of Delta
  std::vector<Weight> iso_set;  // S = {eps_i - delta_i}
  std::vector<Weight> affine_simple;  // alpha_0 = delta - theta, then Pi
  std::vector<int> marks;             // delta = sum marks * affine_simple

  LatticeSolver solver;

  std::vector<Weight> pos_even() const {
    auto v = pos_even_doubleprime;
    v.insert(v.end(), pos_even_prime.begin(), pos_even_prime.end());
    return v;
  }

  int affine_rank() const { return static_cast<int>(affine_simple.size()); }

  std::optional<ExpVec> to_affine_simple_coords(const Weight& w) const {
    return solver.coords(w);
  }

  Weight weight_of(const ExpVec& coords) const {
    Weight w(m, n);
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) w += static_cast<int64_t>(coords[i]) * affine_simple[i];
    return w;
  }

  static int height_of(const ExpVec& coords) {
    return std::accumulate(coords.begin(), coords.end(), 0);
  }

  std::optional<int> height(const Weight& w) const {
    auto c = to_affine_simple_coords(w);
    if (!c) return std::nullopt;
    return height_of(*c);
  }

  int height_checked(const Weight& w) const {
    auto h = height(w);
    if (!h) throw InternalCheckError("height of a weight outside the root lattice: " + w.str());
    return *h;
  }

  int delta_height() const { return std::accumulate(marks.begin(), marks.end(), 0); }
};

inline RootSystem build_root_system(Family family, int n) {
  if (n < 1) throw DimensionMismatch("build_root_system: n must be >= 1");
  RootSystem rs;
  rs.family = family;
  rs.n = n;
  rs.m = (family == Family::GL) ? n : n + 1;
  const int m = rs.m;
  auto E = [&](int i) { return Weight::eps(m, n, i); };
  auto D = [&](int i) { return Weight::del(m, n, i); };

  if (family == Family::GL) {
    rs.rank = 2 * n;
    for (int i = 0; i < n; ++i) {
      rs.simple_roots.push_back(E(i) - D(i));
      if (i + 1 < n) rs.simple_roots.push_back(D(i) - E(i + 1));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        rs.pos_even_doubleprime.push_back(E(i) - E(j));
        rs.pos_even_prime.push_back(D(i) - D(j));
      }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) rs.pos_odd.push_back(E(i) - D(j));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) rs.pos_odd.push_back(D(i) - E(j));
    rs.str_weight = Weight(m, n);
    for (int i = 0; i < n; ++i) rs.str_weight += E(i) - D(i);
    rs.rho = Weight(m, n);
    rs.rho.eps2.assign(m, -1);  // rho = -str/2
    rs.rho.del2.assign(n, 1);
  } else {
    rs.rank = 2 * n + 1;
    for (int i = 0; i < n; ++i) {
      rs.simple_roots.push_back(E(i) - D(i));
      rs.simple_roots.push_back(D(i) - E(i + 1));
    }
    rs.simple_roots.push_back(D(n - 1) + E(n));  // tail of Pi: delta_n -+ eps_{n+1}
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        rs.pos_even_doubleprime.push_back(E(i) - E(j));
        rs.pos_even_doubleprime.push_back(E(i) + E(j));
      }
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        rs.pos_even_prime.push_back(D(s) - D(t));
        rs.pos_even_prime.push_back(D(s) + D(t));
      }
    for (int s = 0; s < n; ++s) rs.pos_even_prime.push_back(2 * D(s));
    for (int i = 0; i < n; ++i)
      for (int s = i; s < n; ++s) rs.pos_odd.push_back(E(i) - D(s));
    for (int s = 0; s < n; ++s)
      for (int j = s + 1; j < m; ++j) rs.pos_odd.push_back(D(s) - E(j));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) rs.pos_odd.push_back(D(i) + E(j));
    rs.str_weight = Weight(m, n);
    rs.rho = Weight(m, n);
  }

  for (int i = 0; i < n; ++i) rs.iso_set.push_back(E(i) - D(i));
  rs.delta = Weight::imaginary(m, n);

  // theta: the unique dominance-maximal element of Delta_+, found by
  // coordinatizing every positive root over Pi.
  LatticeSolver finite = LatticeSolver::build(rs.simple_roots);
  std::vector<Weight> all_pos = rs.pos_even();
  all_pos.insert(all_pos.end(), rs.pos_odd.begin(), rs.pos_odd.end());
  std::vector<ExpVec> cs;
  for (const auto& b : all_pos) {
    auto c = finite.coords(b);
    if (!c) throw InternalCheckError("positive root outside the root lattice");
    cs.push_back(*c);
  }
  int best = -1;
  for (size_t i = 0; i < cs.size(); ++i) {
    bool dominates = true;
    for (size_t j = 0; j < cs.size() && dominates; ++j)
      for (size_t t = 0; t < cs[i].size(); ++t)
        if (cs[j][t] > cs[i][t]) {
          dominates = false;
          break;
        }
    if (dominates) {
      if (best >= 0) throw InternalCheckError("highest root is not unique");
      best = static_cast<int>(i);
    }
  }
  if (best < 0) throw InternalCheckError("no dominance-maximal positive root");
  rs.theta = all_pos[best];

  rs.affine_simple.push_back(rs.delta - rs.theta);
  rs.affine_simple.insert(rs.affine_simple.end(), rs.simple_roots.begin(),
                          rs.simple_roots.end());
  rs.marks.push_back(1);
  for (int32_t c : cs[best]) {
    if (c <= 0) throw InternalCheckError("non-positive mark");
    rs.marks.push_back(c);
  }

  rs.solver = LatticeSolver::build(rs.affine_simple);

  // delta = sum marks * affine_simple must hold exactly.
  {
    Weight acc(m, n);
    for (size_t i = 0; i < rs.affine_simple.size(); ++i)
      acc += static_cast<int64_t>(rs.marks[i]) * rs.affine_simple[i];
    if (!(acc == rs.delta)) throw InternalCheckError("marks do not reproduce delta");
  }
  return rs;
}

}  // namespace superdenom
