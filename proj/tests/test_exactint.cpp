#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rdlift/galois_ring.hpp"
#include "rdlift/numutil.hpp"
#include "rdlift/ring_matrix.hpp"
#include "rdlift/ring_solve.hpp"
#include "rdlift/snf.hpp"

using namespace rdlift;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return m;
}

IntMatrix diag_of(const SnfResult& s) {
  IntMatrix d(s.rows, s.cols);
  for (size_t i = 0; i < s.d.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = s.d[i];
  return d;
}

}  // namespace

TEST_CASE("smith normal form: pinned examples") {
  CHECK(smith_normal_form(IntMatrix{{1, 0}, {0, 6}}).d == std::vector<mpz_class>{1, 6});
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 2}}).d == std::vector<mpz_class>{2, 2});
  // frozen from the gcd-of-minors oracle: g1 = 2, g2 = |det| = 8
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).d == std::vector<mpz_class>{2, 4});
}

TEST_CASE("smith normal form: round trip and divisibility on random matrices") {
  std::mt19937_64 rng(20240801);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    IntMatrix m = random_matrix(rng, rows, cols, 50);
    SnfResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == diag_of(s));
    for (size_t i = 0; i + 1 < s.d.size(); ++i) {
      if (s.d[i + 1] == 0) continue;
      REQUIRE(s.d[i] != 0);
      CHECK(s.d[i + 1] % s.d[i] == 0);
    }
    for (const auto& x : s.d) CHECK(x >= 0);
  }
}

TEST_CASE("smith normal form: gcd-of-minors oracle up to 4x4") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    IntMatrix m = random_matrix(rng, rows, cols, 12);
    CHECK(smith_normal_form(m).d == oracles::snf_by_minors(m));
  }
}

TEST_CASE("quotient torsion primes") {
  CHECK(quotient_torsion_primes(2, IntMatrix{{2, 0}, {0, 3}}) ==
        std::set<mpz_class>{2, 3});
  CHECK(quotient_torsion_primes(2, IntMatrix{{1, 0}, {0, 1}}).empty());
  CHECK(quotient_torsion_primes(1, IntMatrix{{2}, {3}}).empty());
}

TEST_CASE("galois ring: modulus search and base arithmetic") {
  // x^2 + 1 has the root 2 mod 5; x^2 + 2 is the first irreducible
  GaloisRing f25(5, 1, 2);
  CHECK(f25.modulus() == std::vector<mpz_class>{2, 0});

  GaloisRing r(5, 3, 1);
  auto a = r.from_int(7);
  auto b = r.inv(a);
  CHECK(r.mul(a, b) == r.one());
  CHECK_THROWS(r.inv(r.from_int(5)));

  GaloisRing gr(5, 3, 2);
  auto x = gr.make({mpz_class(3), mpz_class(4)});
  CHECK(gr.mul(x, gr.inv(x)) == gr.one());
}

TEST_CASE("teichmuller lifts over Z/125") {
  GaloisRing r(5, 3, 1);
  CHECK(r.teichmuller(r.from_int(1)) == r.from_int(1));
  CHECK(r.teichmuller(r.from_int(4)) == r.from_int(124));

  // enumeration oracle: the fourth roots of unity mod 125
  std::vector<long> quartic;
  for (long t = 0; t < 125; ++t) {
    long t4 = ((t * t) % 125 * t) % 125 * t % 125;
    if (t4 == 1) quartic.push_back(t);
  }
  long expected = -1;
  for (long t : quartic)
    if (t % 5 == 2) expected = t;
  REQUIRE(expected == 57);
  CHECK(r.teichmuller(r.from_int(2)) == r.from_int(expected));
  CHECK_THROWS(r.teichmuller(r.from_int(0)));
}

TEST_CASE("teichmuller is fixed by the Frobenius power") {
  GaloisRing r(5, 4, 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = r.make({mpz_class(static_cast<long>(rng() % 625)),
                     mpz_class(static_cast<long>(rng() % 625))});
    if (!r.is_unit(a)) continue;
    auto t = r.teichmuller(a);
    CHECK(r.pow(t, r.residue_card()) == t);
    CHECK(r.pow(t, r.residue_card() - 1) == r.one());
    CHECK(r.reduce_elem(t, 1) == r.reduce_elem(a, 1));
  }
}

TEST_CASE("linear solve over Z/125: pinned examples") {
  GaloisRing r(5, 3, 1);
  auto mat1 = [&](long v) {
    RingMatrix m(r, 1, 1);
    m.at(0, 0) = r.from_int(v);
    return m;
  };

  auto s1 = linear_solve_mod(mat1(1), mat1(7));
  REQUIRE(s1.solvable);
  CHECK(s1.particular[0] == r.from_int(7));
  CHECK(s1.hom_free.empty());
  CHECK(s1.hom_torsion.empty());

  auto s2 = linear_solve_mod(mat1(5), mat1(1));
  CHECK_FALSE(s2.solvable);

  auto s3 = linear_solve_mod(mat1(5), mat1(10));
  REQUIRE(s3.solvable);
  CHECK(s3.particular[0] == r.from_int(2));
  REQUIRE(s3.hom_torsion.size() == 1);
  // generator 25 = p^2, a cyclic group of order p
  CHECK(s3.hom_torsion[0][0] == r.from_int(25));
  CHECK(s3.hom_torsion_order_val[0] == 1);

  // enumeration oracle for the same system
  std::vector<long> sols;
  for (long x = 0; x < 125; ++x)
    if ((5 * x) % 125 == 10) sols.push_back(x);
  CHECK(sols == std::vector<long>{2, 27, 52, 77, 102});
}

TEST_CASE("linear solve: substitution and exhaustive-search agreement") {
  GaloisRing r(5, 3, 1);
  std::mt19937_64 rng(99);

  // all 1x1 systems
  for (long a = 0; a < 125; ++a)
    for (long b : {0L, 1L, 2L, 5L, 10L, 25L, 50L, 99L, 124L}) {
      RingMatrix am(r, 1, 1), bm(r, 1, 1);
      am.at(0, 0) = r.from_int(a);
      bm.at(0, 0) = r.from_int(b);
      auto s = linear_solve_mod(am, bm);
      bool exists = false;
      for (long x = 0; x < 125; ++x)
        if ((a * x) % 125 == b) exists = true;
      CHECK(s.solvable == exists);
      if (s.solvable) CHECK((a * s.particular[0][0].get_si()) % 125 == b);
    }

  // seeded 2x2 systems, each checked against exhaustive candidate search
  for (int trial = 0; trial < 40; ++trial) {
    RingMatrix a(r, 2, 2), b(r, 2, 1);
    long av[4], bv[2];
    for (int i = 0; i < 4; ++i) av[i] = static_cast<long>(rng() % 125);
    for (int i = 0; i < 2; ++i) bv[i] = static_cast<long>(rng() % 125);
    a.at(0, 0) = r.from_int(av[0]);
    a.at(0, 1) = r.from_int(av[1]);
    a.at(1, 0) = r.from_int(av[2]);
    a.at(1, 1) = r.from_int(av[3]);
    b.at(0, 0) = r.from_int(bv[0]);
    b.at(1, 0) = r.from_int(bv[1]);

    bool exists = false;
    for (long x0 = 0; x0 < 125 && !exists; ++x0)
      for (long x1 = 0; x1 < 125; ++x1)
        if ((av[0] * x0 + av[1] * x1) % 125 == bv[0] &&
            (av[2] * x0 + av[3] * x1) % 125 == bv[1]) {
          exists = true;
          break;
        }

    auto s = linear_solve_mod(a, b);
    CHECK(s.solvable == exists);
    if (s.solvable) {
      long x0 = s.particular[0][0].get_si(), x1 = s.particular[1][0].get_si();
      CHECK((av[0] * x0 + av[1] * x1) % 125 == bv[0]);
      CHECK((av[2] * x0 + av[3] * x1) % 125 == bv[1]);
      // homogeneous generators really solve a x = 0
      for (const auto& gen : s.hom_torsion) {
        CHECK((av[0] * gen[0][0].get_si() + av[1] * gen[1][0].get_si()) % 125 == 0);
        CHECK((av[2] * gen[0][0].get_si() + av[3] * gen[1][0].get_si()) % 125 == 0);
      }
      for (const auto& gen : s.hom_free) {
        CHECK((av[0] * gen[0][0].get_si() + av[1] * gen[1][0].get_si()) % 125 == 0);
        CHECK((av[2] * gen[0][0].get_si() + av[3] * gen[1][0].get_si()) % 125 == 0);
      }
    }
  }
}

TEST_CASE("ring diagonalization agrees with integer SNF valuations (e = 1)") {
  std::mt19937_64 rng(1234);
  GaloisRing r(5, 3, 1);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 4);
    IntMatrix zm = random_matrix(rng, n, m, 60);
    RingMatrix rm = RingMatrix::from_int(r, zm);

    auto d = ring_diagonalize(rm);
    SnfResult s = smith_normal_form(zm);

    std::vector<int> zvals;
    for (const auto& f : s.d) {
      if (f == 0) continue;
      int v = std::min(p_valuation(f, 5), 3);
      if (v < 3) zvals.push_back(v);
    }
    std::vector<int> rvals = d.pivot_vals;
    std::sort(zvals.begin(), zvals.end());
    std::sort(rvals.begin(), rvals.end());
    CHECK(rvals == zvals);
  }
}

TEST_CASE("ring matrix inverse and determinant over an extension ring") {
  GaloisRing r(7, 2, 2);
  std::mt19937_64 rng(31337);
  int checked = 0;
  while (checked < 15) {
    RingMatrix m(r, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m.at(i, j) = r.make({mpz_class(static_cast<long>(rng() % 49)),
                             mpz_class(static_cast<long>(rng() % 49))});
    if (!m.is_invertible()) continue;
    ++checked;
    CHECK((m * m.inverse()).is_identity());
    CHECK(r.is_unit(m.det()));
  }
}

TEST_CASE("partitions utility matches the counting oracle") {
  for (int n = 1; n <= 8; ++n)
    CHECK(static_cast<long>(partitions_of(n).size()) == oracles::count_partitions(n));
}
