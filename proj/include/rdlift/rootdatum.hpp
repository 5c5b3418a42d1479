#pragma once

#include <string>
#include <vector>

#include "rdlift/intmat.hpp"
#include "rdlift/snf.hpp"

namespace rdlift {

struct SimpleFactor {
  char family;  // A B C D E F G
  int rank;
  bool operator==(const SimpleFactor&) const = default;
};

// Cartan type: product of simple factors plus a central torus.
struct CartanType {
  std::vector<SimpleFactor> factors;
  int torus_rank = 0;

  // "G2", "A3xA1+T2", "T3"; the GL_n preset lives in gl_preset()
  static CartanType parse(const std::string& s);
  std::string to_string() const;

  int semisimple_rank() const;
  int rank() const { return semisimple_rank() + torus_rank; }
  void validate() const;  // throws on invalid family/rank
};

// Cartan matrix of the semisimple part, a[i][j] = <alpha_j, alpha_i^vee>
IntMatrix cartan_matrix(const CartanType& t);

// Root system of the semisimple part in simple-root coordinates.
struct RootSystem {
  CartanType type;
  int rank = 0;                           // semisimple rank
  IntMatrix cartan;                       // a[i][j] = <alpha_j, alpha_i^vee>
  std::vector<long> symmetrizer;          // d_i = (alpha_i, alpha_i) / 2
  std::vector<std::vector<long>> roots;   // all roots, canonical order
  std::vector<int> simple_index;          // position of alpha_i in roots

  int n_roots() const { return static_cast<int>(roots.size()); }
  int n_positive() const { return n_roots() / 2; }
  bool is_positive(int idx) const;
  int index_of(const std::vector<long>& v) const;  // -1 if not a root
  int negative_of(int idx) const;

  long inner(const std::vector<long>& a, const std::vector<long>& b) const;
  // <beta, gamma^vee> = 2 (beta, gamma) / (gamma, gamma)
  long pair_coroot(const std::vector<long>& beta, const std::vector<long>& gamma) const;
  // coordinates of beta^vee in the simple-coroot basis
  std::vector<long> coroot_coords(const std::vector<long>& beta) const;

  // permutation of root indices induced by the reflection in roots[idx]
  std::vector<int> reflection_perm(int idx) const;
};

RootSystem build_root_system(const CartanType& t);

// |W| from the classical per-factor orders
mpz_class weyl_order(const RootSystem& rs);
mpz_class weyl_order_of_type(const CartanType& t);

// All Weyl group elements as permutations of the root list.  Guarded: throws
// if the order exceeds max_order (meant for rank <= 4 conjugacy work).
std::vector<std::vector<int>> weyl_group_perms(const RootSystem& rs,
                                               long max_order = 200000);

enum class IsogenyKind { simply_connected, adjoint, custom };

struct IsogenyClass {
  IsogenyKind kind = IsogenyKind::simply_connected;
  IntMatrix custom_generators;  // rows generate X inside the sc model

  static IsogenyClass sc() { return {IsogenyKind::simply_connected, {}}; }
  static IsogenyClass ad() { return {IsogenyKind::adjoint, {}}; }
  static IsogenyClass custom(IntMatrix gens) { return {IsogenyKind::custom, std::move(gens)}; }
};

// Root datum (X, Phi, Y, Phi^vee).  X and Y are Z^n in dual bases, so the
// pairing is the identity matrix; roots and coroots are stored as rows.
struct RootDatum {
  CartanType type;
  RootSystem rs;            // semisimple part
  int x_rank = 0;           // rank of X = semisimple rank + torus rank
  IntMatrix basis;          // basis of X inside the weight-plus-torus model
  IntMatrix roots_in_x;     // simple roots embedded in X
  IntMatrix coroots_in_y;   // simple coroots embedded in Y
  IntMatrix pairing;        // identity; kept explicit for the interface

  // any root (simple-root coordinates) mapped into X
  std::vector<mpz_class> root_to_x(const std::vector<long>& simple_coords) const;
  std::vector<mpz_class> coroot_to_y(const std::vector<long>& coroot_coords) const;
};

RootDatum build_root_datum(const CartanType& t, const IsogenyClass& iso);
RootDatum gl_preset(int n);
// swaps the roles of (X, Phi) and (Y, Phi^vee)
RootDatum dual_datum(const RootDatum& d);

struct CenterPi1 {
  std::vector<mpz_class> center_torsion;  // invariant factors > 1 of X / Z Phi
  std::vector<mpz_class> pi1_torsion;     // invariant factors > 1 of Y / Z Phi^vee
  int center_free_rank = 0;
  int pi1_free_rank = 0;
};

CenterPi1 center_and_pi1(const RootDatum& d);

}  // namespace rdlift
