#include "rdlift/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rdlift/numutil.hpp"

namespace rdlift {

namespace {

struct DiagramData {
  std::vector<std::pair<int, int>> edges;
  std::vector<long> d;  // half square lengths
};

DiagramData diagram(const SimpleFactor& f) {
  DiagramData g;
  const int n = f.rank;
  g.d.assign(n, 1);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) g.edges.emplace_back(i, i + 1);
  };
  switch (f.family) {
    case 'A':
      chain(n);
      break;
    case 'B':  // last simple root short
      chain(n);
      for (int i = 0; i + 1 < n; ++i) g.d[i] = 2;
      break;
    case 'C':  // last simple root long
      chain(n);
      g.d[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) g.edges.emplace_back(i, i + 1);
      if (n >= 3) g.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4
      g.edges.emplace_back(0, 2);
      for (int i = 2; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(1, 3);
      break;
    case 'F':
      chain(4);
      g.d[0] = g.d[1] = 2;
      break;
    case 'G':
      chain(2);
      g.d[0] = 3;
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
  return g;
}

}  // namespace

void CartanType::validate() const {
  if (torus_rank < 0) throw std::invalid_argument("negative torus rank");
  for (const auto& f : factors) {
    bool ok = false;
    switch (f.family) {
      case 'A': ok = f.rank >= 1; break;
      case 'B': ok = f.rank >= 2; break;
      case 'C': ok = f.rank >= 2; break;
      case 'D': ok = f.rank >= 3; break;
      case 'E': ok = f.rank >= 6 && f.rank <= 8; break;
      case 'F': ok = f.rank == 4; break;
      case 'G': ok = f.rank == 2; break;
      default: ok = false;
    }
    if (!ok)
      throw std::invalid_argument("invalid Cartan factor " + std::string(1, f.family) +
                                  std::to_string(f.rank));
  }
}

int CartanType::semisimple_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

CartanType CartanType::parse(const std::string& s) {
  CartanType t;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse Cartan type \"" + s + "\" at position " +
                                std::to_string(pos) + ": " + why);
  };
  auto read_int = [&]() {
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a rank digit");
    return std::stoi(s.substr(start, pos - start));
  };
  bool expect_factor = true;
  while (pos < s.size()) {
    char c = s[pos];
    if (c == 'T') {
      ++pos;
      t.torus_rank += read_int();
      expect_factor = false;
      if (pos < s.size()) {
        if (s[pos] == '+' || s[pos] == 'x') { ++pos; expect_factor = true; }
        else fail("trailing characters after torus factor");
      }
      continue;
    }
    if (c >= 'A' && c <= 'G') {
      ++pos;
      t.factors.push_back({c, read_int()});
      expect_factor = false;
      if (pos < s.size()) {
        if (s[pos] == 'x' || s[pos] == '+') { ++pos; expect_factor = true; }
        else fail("expected 'x', '+' or end");
      }
      continue;
    }
    fail("unexpected character");
  }
  if (expect_factor && !(t.factors.empty() && t.torus_rank == 0)) fail("dangling separator");
  if (t.factors.empty() && t.torus_rank == 0) fail("empty type");
  t.validate();
  return t;
}

std::string CartanType::to_string() const {
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += factors[i].family;
    out += std::to_string(factors[i].rank);
  }
  if (torus_rank > 0) {
    if (!out.empty()) out += "+";
    out += "T" + std::to_string(torus_rank);
  }
  if (out.empty()) out = "T0";
  return out;
}

IntMatrix cartan_matrix(const CartanType& t) {
  t.validate();
  const int n = t.semisimple_rank();
  IntMatrix a(n, n);
  int off = 0;
  for (const auto& f : t.factors) {
    DiagramData g = diagram(f);
    for (int i = 0; i < f.rank; ++i) a.at(off + i, off + i) = 2;
    for (auto [i, j] : g.edges) {
      long m = std::max(g.d[i], g.d[j]);
      // a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i) with (alpha_i, alpha_j) = -m
      a.at(off + i, off + j) = -(m / g.d[i]);
      a.at(off + j, off + i) = -(m / g.d[j]);
    }
    off += f.rank;
  }
  return a;
}

bool RootSystem::is_positive(int idx) const {
  for (long c : roots[idx]) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

int RootSystem::index_of(const std::vector<long>& v) const {
  for (int i = 0; i < n_roots(); ++i)
    if (roots[i] == v) return i;
  return -1;
}

int RootSystem::negative_of(int idx) const {
  std::vector<long> neg(rank);
  for (int i = 0; i < rank; ++i) neg[i] = -roots[idx][i];
  return index_of(neg);
}

long RootSystem::inner(const std::vector<long>& a, const std::vector<long>& b) const {
  // (a, b) = sum_ij a_i b_j d_i A[i][j]
  long s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      s += a[i] * b[j] * symmetrizer[i] * cartan.at(i, j).get_si();
    }
  }
  return s;
}

long RootSystem::pair_coroot(const std::vector<long>& beta, const std::vector<long>& gamma) const {
  long num = 2 * inner(beta, gamma);
  long den = inner(gamma, gamma);
  if (den == 0 || num % den != 0)
    throw std::logic_error("pair_coroot: non-integral pairing (inputs are not roots)");
  return num / den;
}

std::vector<long> RootSystem::coroot_coords(const std::vector<long>& beta) const {
  long len2 = inner(beta, beta);
  std::vector<long> out(rank);
  for (int i = 0; i < rank; ++i) {
    long num = 2 * beta[i] * symmetrizer[i];
    if (num % len2 != 0) throw std::logic_error("coroot_coords: not a root");
    out[i] = num / len2;
  }
  return out;
}

std::vector<int> RootSystem::reflection_perm(int idx) const {
  std::vector<int> perm(n_roots());
  const auto& alpha = roots[idx];
  for (int r = 0; r < n_roots(); ++r) {
    long c = pair_coroot(roots[r], alpha);
    std::vector<long> img = roots[r];
    for (int i = 0; i < rank; ++i) img[i] -= c * alpha[i];
    int to = index_of(img);
    if (to < 0) throw std::logic_error("reflection does not permute roots");
    perm[r] = to;
  }
  return perm;
}

RootSystem build_root_system(const CartanType& t) {
  t.validate();
  RootSystem rs;
  rs.type = t;
  rs.rank = t.semisimple_rank();
  rs.cartan = cartan_matrix(t);
  rs.symmetrizer.assign(rs.rank, 1);
  int off = 0;
  for (const auto& f : t.factors) {
    DiagramData g = diagram(f);
    for (int i = 0; i < f.rank; ++i) rs.symmetrizer[off + i] = g.d[i];
    off += f.rank;
  }

  // close the simple roots under all simple reflections
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<long> e(rs.rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<long> v = queue.back();
    queue.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      long c = 0;
      for (int j = 0; j < rs.rank; ++j) c += v[j] * rs.cartan.at(i, j).get_si();
      std::vector<long> img = v;
      img[i] -= c;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  rs.roots.assign(seen.begin(), seen.end());
  std::sort(rs.roots.begin(), rs.roots.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.simple_index.assign(rs.rank, -1);
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<long> e(rs.rank, 0);
    e[i] = 1;
    rs.simple_index[i] = rs.index_of(e);
  }
  return rs;
}

mpz_class weyl_order_of_type(const CartanType& t) {
  mpz_class w = 1;
  for (const auto& f : t.factors) {
    mpz_class fw;
    switch (f.family) {
      case 'A': {
        mpz_class x;
        mpz_fac_ui(x.get_mpz_t(), f.rank + 1);
        fw = x;
        break;
      }
      case 'B':
      case 'C': {
        mpz_class x;
        mpz_fac_ui(x.get_mpz_t(), f.rank);
        fw = x * pow_mpz(2, f.rank);
        break;
      }
      case 'D': {
        mpz_class x;
        mpz_fac_ui(x.get_mpz_t(), f.rank);
        fw = x * pow_mpz(2, f.rank - 1);
        break;
      }
      case 'E':
        fw = (f.rank == 6) ? 51840 : (f.rank == 7 ? 2903040 : mpz_class(696729600));
        break;
      case 'F':
        fw = 1152;
        break;
      case 'G':
        fw = 12;
        break;
      default:
        throw std::invalid_argument("unknown family");
    }
    w *= fw;
  }
  return w;
}

mpz_class weyl_order(const RootSystem& rs) { return weyl_order_of_type(rs.type); }

std::vector<std::vector<int>> weyl_group_perms(const RootSystem& rs, long max_order) {
  mpz_class expected = weyl_order(rs);
  if (expected > max_order)
    throw std::invalid_argument("weyl_group_perms: group too large to enumerate");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(rs.reflection_perm(rs.simple_index[i]));
  const int n = rs.n_roots();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  while (!queue.empty()) {
    std::vector<int> w = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      std::vector<int> wg(n);
      for (int i = 0; i < n; ++i) wg[i] = g[w[i]];
      if (seen.insert(wg).second) queue.push_back(wg);
    }
  }
  if (mpz_class(static_cast<long>(seen.size())) != expected)
    throw std::logic_error("weyl_group_perms: enumeration does not match the closed form");
  return {seen.begin(), seen.end()};
}

namespace {

// basis rows of the lattice generated by the rows (Hermite-style, via SNF)
IntMatrix lattice_basis(const IntMatrix& gens) {
  SnfResult s = smith_normal_form(gens);
  // u*m*v = d  =>  m = u^-1 d v^-1; rows of d v^-1 generate the same lattice
  // where v^-1 is recovered by solving; easier: basis = nonzero rows of
  // (d * v^-1).  Compute v inverse over Z by adjugate-free elimination: v is
  // unimodular so we can invert with the same SNF trick.  Cheaper here:
  // rows of u * m give the lattice in echelon-ish form already.
  IntMatrix um = s.u * gens;
  std::vector<std::vector<mpz_class>> rows;
  for (int i = 0; i < um.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < um.cols(); ++j)
      if (um.at(i, j) != 0) zero = false;
    if (!zero) {
      std::vector<mpz_class> r(um.cols());
      for (int j = 0; j < um.cols(); ++j) r[j] = um.at(i, j);
      rows.push_back(std::move(r));
    }
  }
  return IntMatrix::from_rows(rows, gens.cols());
}

// solve x * g = target over Z; throws if no integral solution
std::vector<mpz_class> solve_left(const IntMatrix& g, const std::vector<mpz_class>& target) {
  // x g = t  <=>  g^T x^T = t^T
  IntMatrix gt = g.transpose();
  SnfResult s = smith_normal_form(gt);
  // u gt v = d => gt = u^-1 d v^-1; gt x = t <=> d (v^-1 x) = u t
  IntMatrix t(gt.rows(), 1);
  for (int i = 0; i < gt.rows(); ++i) t.at(i, 0) = target[i];
  IntMatrix ut = s.u * t;
  std::vector<mpz_class> y(gt.cols(), 0);
  int nmin = static_cast<int>(s.d.size());
  for (int i = 0; i < gt.rows(); ++i) {
    if (i < nmin && s.d[i] != 0) {
      if (ut.at(i, 0) % s.d[i] != 0)
        throw std::invalid_argument("lattice membership fails: no integral solution");
      y[i] = ut.at(i, 0) / s.d[i];
    } else if (ut.at(i, 0) != 0) {
      throw std::invalid_argument("lattice membership fails: no integral solution");
    }
  }
  IntMatrix yv(gt.cols(), 1);
  for (int i = 0; i < gt.cols(); ++i) yv.at(i, 0) = y[i];
  IntMatrix x = s.v * yv;
  std::vector<mpz_class> out(gt.cols());
  for (int i = 0; i < gt.cols(); ++i) out[i] = x.at(i, 0);
  return out;
}

}  // namespace

std::vector<mpz_class> RootDatum::root_to_x(const std::vector<long>& simple_coords) const {
  std::vector<mpz_class> out(x_rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < x_rank; ++j) out[j] += mpz_class(simple_coords[i]) * roots_in_x.at(i, j);
  return out;
}

std::vector<mpz_class> RootDatum::coroot_to_y(const std::vector<long>& cc) const {
  std::vector<mpz_class> out(x_rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < x_rank; ++j) out[j] += mpz_class(cc[i]) * coroots_in_y.at(i, j);
  return out;
}

RootDatum build_root_datum(const CartanType& t, const IsogenyClass& iso) {
  t.validate();
  RootDatum d;
  d.type = t;
  d.rs = build_root_system(t);
  const int r = d.rs.rank;
  const int n = t.rank();
  d.x_rank = n;
  const IntMatrix& a = d.rs.cartan;

  switch (iso.kind) {
    case IsogenyKind::simply_connected:
      d.basis = IntMatrix::identity(n);
      break;
    case IsogenyKind::adjoint: {
      d.basis = IntMatrix(n, n);
      for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) d.basis.at(j, i) = a.at(i, j);  // row j = root j
      for (int tt = 0; tt < t.torus_rank; ++tt) d.basis.at(r + tt, r + tt) = 1;
      break;
    }
    case IsogenyKind::custom: {
      if (iso.custom_generators.cols() != n)
        throw std::invalid_argument("custom lattice generators must have rank(type) columns");
      IntMatrix b = lattice_basis(iso.custom_generators);
      if (b.rows() != n)
        throw std::invalid_argument("custom lattice must have full rank");
      d.basis = b;
      break;
    }
  }

  // simple roots in X coordinates: solve  c * basis = root_in_sc_coords
  std::vector<std::vector<mpz_class>> root_rows, coroot_rows;
  for (int j = 0; j < r; ++j) {
    std::vector<mpz_class> sc(n, 0);
    for (int i = 0; i < r; ++i) sc[i] = a.at(i, j);  // alpha_j in weight coords
    try {
      root_rows.push_back(solve_left(d.basis, sc));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("custom lattice does not contain the root lattice");
    }
    // coroot j in Y coordinates = basis * e_j (column j of basis)
    std::vector<mpz_class> cr(n);
    for (int i = 0; i < n; ++i) cr[i] = d.basis.at(i, j);
    coroot_rows.push_back(std::move(cr));
  }
  d.roots_in_x = IntMatrix::from_rows(root_rows, n);
  d.coroots_in_y = IntMatrix::from_rows(coroot_rows, n);
  d.pairing = IntMatrix::identity(n);

  // construction invariants: <alpha_j, alpha_i^vee> recovers the Cartan matrix
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      mpz_class pr = 0;
      for (int l = 0; l < n; ++l) pr += d.roots_in_x.at(j, l) * d.coroots_in_y.at(i, l);
      if (pr != a.at(i, j))
        throw std::logic_error("root datum construction: pairing does not recover Cartan matrix");
    }
  return d;
}

RootDatum gl_preset(int n) {
  if (n < 1) throw std::invalid_argument("gl_preset: need n >= 1");
  CartanType t;
  if (n >= 2) t.factors.push_back({'A', n - 1});
  t.torus_rank = 1;
  if (n == 1) return build_root_datum(t, IsogenyClass::sc());
  // rows: standard character e_i in (fundamental weights, torus) coordinates
  IntMatrix gens(n, n);
  for (int i = 0; i < n; ++i) {
    if (i < n - 1) gens.at(i, i) = 1;
    if (i > 0) gens.at(i, i - 1) = -1;
    gens.at(i, n - 1) = 1;
  }
  return build_root_datum(t, IsogenyClass::custom(gens));
}

RootDatum dual_datum(const RootDatum& d) {
  RootDatum out = d;
  std::swap(out.roots_in_x, out.coroots_in_y);
  out.rs.cartan = d.rs.cartan.transpose();
  // lengths invert relative scale; recompute symmetrizer for the dual system
  CartanType dual_type = d.type;
  for (auto& f : dual_type.factors) {
    if (f.family == 'B') f.family = 'C';
    else if (f.family == 'C') f.family = 'B';
  }
  out.type = dual_type;
  return out;
}

CenterPi1 center_and_pi1(const RootDatum& d) {
  CenterPi1 out;
  const int n = d.x_rank;
  if (d.rs.rank == 0) {
    out.center_free_rank = n;
    out.pi1_free_rank = n;
    return out;
  }
  SnfResult sx = smith_normal_form(d.roots_in_x);
  SnfResult sy = smith_normal_form(d.coroots_in_y);
  out.center_torsion = sx.torsion();
  out.pi1_torsion = sy.torsion();
  out.center_free_rank = n - sx.rank();
  out.pi1_free_rank = n - sy.rank();
  return out;
}

}  // namespace rdlift
