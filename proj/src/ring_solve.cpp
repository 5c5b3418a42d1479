#include "rdlift/ring_solve.hpp"

#include <stdexcept>

#include "rdlift/numutil.hpp"

namespace rdlift {

RingDiagonalization ring_diagonalize(const RingMatrix& a0) {
  const GaloisRing& R = a0.ring();
  RingMatrix a = a0;
  RingMatrix u = RingMatrix::identity(R, a.rows());
  RingMatrix v = RingMatrix::identity(R, a.cols());
  const int nmin = std::min(a.rows(), a.cols());
  std::vector<int> vals;

  for (int s = 0; s < nmin; ++s) {
    // minimal-valuation pivot in a(s:, s:)
    int pi = -1, pj = -1, pv = R.k();
    for (int i = s; i < a.rows(); ++i)
      for (int j = s; j < a.cols(); ++j) {
        int w = R.val(a.at(i, j));
        if (w < pv) {
          pv = w;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0 || pv >= R.k()) break;  // remaining block is zero

    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(s, j), a.at(pi, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(s, j), u.at(pi, j));
    for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, s), a.at(i, pj));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, s), v.at(i, pj));

    // normalize pivot to exactly p^pv
    GaloisRing::Elem unit = R.divide_exact_p(a.at(s, s), pv);
    GaloisRing::Elem uinv = R.inv(unit);
    for (int j = 0; j < a.cols(); ++j) a.at(s, j) = R.mul(a.at(s, j), uinv);
    for (int j = 0; j < u.cols(); ++j) u.at(s, j) = R.mul(u.at(s, j), uinv);

    // clear column and row s; every remaining entry has valuation >= pv
    for (int i = s + 1; i < a.rows(); ++i) {
      if (R.val(a.at(i, s)) >= R.k()) continue;
      GaloisRing::Elem f = R.divide_exact_p(a.at(i, s), pv);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = R.sub(a.at(i, j), R.mul(f, a.at(s, j)));
      for (int j = 0; j < u.cols(); ++j)
        u.at(i, j) = R.sub(u.at(i, j), R.mul(f, u.at(s, j)));
    }
    for (int j = s + 1; j < a.cols(); ++j) {
      if (R.val(a.at(s, j)) >= R.k()) continue;
      GaloisRing::Elem f = R.divide_exact_p(a.at(s, j), pv);
      for (int i = 0; i < a.rows(); ++i)
        a.at(i, j) = R.sub(a.at(i, j), R.mul(f, a.at(i, s)));
      for (int i = 0; i < v.rows(); ++i)
        v.at(i, j) = R.sub(v.at(i, j), R.mul(f, v.at(i, s)));
    }
    vals.push_back(pv);
  }

  RingDiagonalization d;
  d.u = std::move(u);
  d.v = std::move(v);
  d.pivot_vals = std::move(vals);
  return d;
}

LinearSolveResult linear_solve_mod(const RingMatrix& a, const RingMatrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows())
    throw std::invalid_argument("linear_solve_mod: b must be a rows(a) x 1 column");
  const GaloisRing& R = a.ring();
  RingDiagonalization d = ring_diagonalize(a);
  const int r = d.rank();
  const int n = a.cols();

  LinearSolveResult res;
  res.divisor_vals = d.pivot_vals;

  RingMatrix y = d.u * b;
  std::vector<GaloisRing::Elem> t(n, R.zero());
  res.solvable = true;
  for (int i = 0; i < a.rows(); ++i) {
    if (i < r) {
      if (R.val(y.at(i, 0)) < d.pivot_vals[i]) {
        res.solvable = false;
        break;
      }
      t[i] = R.divide_exact_p(y.at(i, 0), d.pivot_vals[i]);
    } else if (!R.is_zero(y.at(i, 0))) {
      res.solvable = false;
      break;
    }
  }

  if (res.solvable) {
    res.particular.assign(n, R.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        res.particular[i] = R.add(res.particular[i], R.mul(d.v.at(i, j), t[j]));
  }

  // homogeneous generators: columns of v scaled by p^(k - v_j) for torsion,
  // plain columns beyond the rank for the free part
  for (int j = 0; j < r; ++j) {
    if (d.pivot_vals[j] == 0) continue;
    mpz_class scale = pow_mpz(R.p(), static_cast<unsigned long>(R.k() - d.pivot_vals[j]));
    std::vector<GaloisRing::Elem> gen(n);
    for (int i = 0; i < n; ++i) gen[i] = R.mul_int(d.v.at(i, j), scale);
    res.hom_torsion.push_back(std::move(gen));
    res.hom_torsion_order_val.push_back(d.pivot_vals[j]);
  }
  for (int j = r; j < n; ++j) {
    std::vector<GaloisRing::Elem> gen(n);
    for (int i = 0; i < n; ++i) gen[i] = d.v.at(i, j);
    res.hom_free.push_back(std::move(gen));
  }
  return res;
}

LinearSolveResult kernel_module(const RingMatrix& a) {
  RingMatrix zero(a.ring(), a.rows(), 1);
  return linear_solve_mod(a, zero);
}

RingMatrix commutation_system(const std::vector<RingMatrix>& ms) {
  if (ms.empty()) throw std::invalid_argument("commutation_system: empty matrix list");
  const GaloisRing& R = ms.front().ring();
  const int n = ms.front().rows();
  RingMatrix sys(R, static_cast<int>(ms.size()) * n * n, n * n);
  int row = 0;
  for (const auto& m : ms) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // (X m - m X)_{ij} = sum_l X_{il} m_{lj} - m_{il} X_{lj}
        for (int l = 0; l < n; ++l) {
          sys.at(row, i * n + l) = R.add(sys.at(row, i * n + l), m.at(l, j));
          sys.at(row, l * n + j) = R.sub(sys.at(row, l * n + j), m.at(i, l));
        }
        ++row;
      }
  }
  return sys;
}

std::vector<RingMatrix> centralizer_basis(const GaloisRing& ring, int n,
                                          const std::vector<RingMatrix>& ms) {
  if (ms.empty()) {
    // centralizer of nothing: the full matrix algebra
    std::vector<RingMatrix> basis;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RingMatrix eij(ring, n, n);
        eij.at(i, j) = ring.one();
        basis.push_back(std::move(eij));
      }
    return basis;
  }
  LinearSolveResult ker = kernel_module(commutation_system(ms));
  if (!ker.homogeneous_module_free())
    throw std::domain_error("centralizer module over the ring is not free");
  std::vector<RingMatrix> basis;
  for (const auto& gen : ker.hom_free) {
    RingMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = gen[static_cast<size_t>(i) * n + j];
    basis.push_back(std::move(m));
  }
  return basis;
}

namespace {

// echelonize flattened rows over the residue field; returns rank (k must be 1)
int row_reduce(std::vector<std::vector<GaloisRing::Elem>>& rows, const GaloisRing& R) {
  if (R.k() != 1) throw std::invalid_argument("row_reduce: residue field only");
  int rank = 0;
  size_t width = rows.empty() ? 0 : rows.front().size();
  for (size_t col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (!R.is_zero(rows[i][col])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    GaloisRing::Elem inv = R.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = R.mul(x, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || R.is_zero(rows[i][col])) continue;
      GaloisRing::Elem f = rows[i][col];
      for (size_t j = 0; j < width; ++j)
        rows[i][j] = R.sub(rows[i][j], R.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::vector<GaloisRing::Elem> flatten_to_elems(const RingMatrix& m) {
  std::vector<GaloisRing::Elem> row;
  row.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
  return row;
}

}  // namespace

bool in_span(const std::vector<RingMatrix>& basis, const RingMatrix& target) {
  if (basis.empty()) return target.is_zero();
  const GaloisRing& R = basis.front().ring();
  std::vector<std::vector<GaloisRing::Elem>> rows;
  for (const auto& b : basis) rows.push_back(flatten_to_elems(b));
  int r0 = row_reduce(rows, R);
  rows.push_back(flatten_to_elems(target));
  int r1 = row_reduce(rows, R);
  return r1 == r0;
}

bool same_span(const std::vector<RingMatrix>& a, const std::vector<RingMatrix>& b) {
  for (const auto& m : b)
    if (!in_span(a, m)) return false;
  for (const auto& m : a)
    if (!in_span(b, m)) return false;
  return true;
}

}  // namespace rdlift
