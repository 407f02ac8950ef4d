#include <doctest.h>

#include <complex>
#include <random>

#include "oddwedge/character_table.hpp"
#include "oddwedge/class_function.hpp"
#include "oddwedge/group.hpp"

using namespace oddwedge;

namespace {

ClassFunction random_cf(const ClassStructurePtr& cs, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(cs->num_classes);
  for (auto& z : v) z = cplx(d(rng), d(rng));
  return ClassFunction(cs, std::move(v));
}

// Independent oracle: coefficients of prod_i (x + alpha_i) by convolution.
std::vector<cplx> poly_elementary(const std::vector<cplx>& roots) {
  std::vector<cplx> e = {1.0};
  for (const auto& a : roots) {
    std::vector<cplx> nxt(e.size() + 1, 0.0);
    for (size_t i = 0; i < e.size(); ++i) {
      nxt[i] += e[i];       // x * e_i term keeps degree alignment
      nxt[i + 1] += e[i] * a;
    }
    e = nxt;
  }
  return e;
}

}  // namespace

TEST_CASE("pointwise ring operations") {
  const auto cs = conjugacy_classes(frobenius21());
  std::mt19937 rng(11);
  const auto f = random_cf(cs, rng);

  const auto one = ClassFunction::constant(cs, 1.0);
  CHECK((f * one).sup_distance(f) == 0.0);
  CHECK((f + f.scaled(-1.0)).sup_distance(ClassFunction::constant(cs, 0.0)) == 0.0);

  const auto other = conjugacy_classes(cyclic_group(3));
  CHECK_THROWS_AS(f + random_cf(other, rng), std::invalid_argument);
  CHECK_THROWS_AS(ClassFunction(cs, {1.0, 2.0}), std::invalid_argument);  // wrong length
}

TEST_CASE("one-dimensional characters have unit modulus") {
  const auto g = frobenius21();
  const auto table = character_table(g);
  for (size_t r = 0; r < table.rows.size(); ++r) {
    if (table.dims[r] != 1) continue;
    std::vector<cplx> conj_vals(table.rows[r].values());
    for (auto& z : conj_vals) z = std::conj(z);
    const auto prod = table.rows[r] * ClassFunction(table.cs, conj_vals);
    CHECK(prod.sup_distance(ClassFunction::constant(table.cs, 1.0)) < 1e-9);
  }
}

TEST_CASE("power-map endomorphisms") {
  const auto cs = conjugacy_classes(frobenius21());
  std::mt19937 rng(12);
  const auto f = random_cf(cs, rng);

  CHECK(adams(f, 1).sup_distance(f) == 0.0);
  CHECK(adams(f, 21).sup_distance(ClassFunction::constant(cs, f[0])) == 0.0);

  // psi_i psi_j = psi_{ij}, exhaustively
  for (int i = 1; i <= 21; ++i)
    for (int j = 1; j <= 21; ++j)
      CHECK(adams(adams(f, i), j).sup_distance(adams(f, static_cast<long long>(i) * j)) == 0.0);
}

TEST_CASE("real class functions in the inverse-conjugate sense") {
  const auto cs = conjugacy_classes(frobenius21());
  const auto table = character_table(frobenius21());
  for (const auto& row : table.rows) CHECK(is_real_class_function(row));

  // conjugate values on swapped classes are required, same values are not
  ClassFunction f(cs, {1.0, cplx(0, 1), cplx(0, 1), 0.0, 0.0});
  CHECK_FALSE(is_real_class_function(f));
  ClassFunction h(cs, {1.0, cplx(0, 1), cplx(0, -1), 0.0, 0.0});
  CHECK(is_real_class_function(h));
}

TEST_CASE("conjugation and regular characters") {
  const auto cs = conjugacy_classes(frobenius21());
  const auto conj_char = conjugation_character(cs);
  CHECK(conj_char.values() == std::vector<cplx>{21.0, 7.0, 7.0, 3.0, 3.0});
  const auto cs2 = conjugacy_classes(cyclic_group(2));
  CHECK(regular_character(cs2).values() == std::vector<cplx>{2.0, 0.0});
}

TEST_CASE("newton identities: pinned values") {
  {
    const std::vector<cplx> p = {2.0};
    const auto e = newton_elementary(p);
    CHECK(e.size() == 2);
    CHECK(std::abs(e[1] - cplx(2.0)) == 0.0);
  }
  {
    // eigenvalues {1, w, w^2}: prod(x - a) = x^3 - 1, so prod(x + a) has
    // e = (1, 0, 0, 1)
    const std::vector<cplx> p = {0.0, 0.0, 3.0};
    const auto e = newton_elementary(p);
    CHECK(std::abs(e[0] - 1.0) < 1e-15);
    CHECK(std::abs(e[1]) < 1e-15);
    CHECK(std::abs(e[2]) < 1e-15);
    CHECK(std::abs(e[3] - 1.0) < 1e-15);
  }
  {
    // eigenvalues {2, 3}
    const std::vector<cplx> p = {5.0, 13.0};
    const auto e = newton_elementary(p);
    CHECK(std::abs(e[1] - 5.0) < 1e-14);
    CHECK(std::abs(e[2] - 6.0) < 1e-14);
  }
}

TEST_CASE("newton identities round-trip against direct expansion") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  std::uniform_int_distribution<int> sz(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<cplx> roots(sz(rng));
    for (auto& a : roots) a = cplx(d(rng), d(rng));
    std::vector<cplx> p(roots.size(), 0.0);
    for (size_t j = 1; j <= roots.size(); ++j)
      for (const auto& a : roots) p[j - 1] += std::pow(a, static_cast<double>(j));
    const auto e = newton_elementary(p);
    const auto expect = poly_elementary(roots);
    REQUIRE(e.size() == expect.size());
    for (size_t i = 0; i < e.size(); ++i) CHECK(std::abs(e[i] - expect[i]) < 1e-10);
  }
}

TEST_CASE("direct wedge character") {
  const auto cs = conjugacy_classes(frobenius21());
  const auto triv = ClassFunction::constant(cs, 1.0);
  CHECK(wedge_character_direct(triv, 1).sup_distance(ClassFunction::constant(cs, 2.0)) < 1e-14);

  // regular character of c2 vanishes at the involution after the wedge
  const auto cs2 = conjugacy_classes(cyclic_group(2));
  const auto w = wedge_character_direct(regular_character(cs2), 2);
  CHECK(std::abs(w[0] - 4.0) < 1e-14);
  CHECK(std::abs(w[1]) < 1e-14);

  CHECK_THROWS_AS(wedge_character_direct(triv, 0), std::invalid_argument);
}

TEST_CASE("wedge character never vanishes on odd-order groups") {
  for (const auto& g : {cyclic_group(3), cyclic_group(7), cyclic_group(9),
                        direct_product(cyclic_group(3), cyclic_group(3)), frobenius21()}) {
    CAPTURE(g.name);
    const auto table = character_table(g);
    for (size_t r = 0; r < table.rows.size(); ++r) {
      const auto w = wedge_character_direct(table.rows[r], table.dims[r]);
      for (int c = 0; c < w.size(); ++c) CHECK(std::abs(w[c]) > 1e-6);
    }
  }
}

TEST_CASE("wedge of a sum is the product of wedges (direct route)") {
  const auto g = frobenius21();
  const auto table = character_table(g);
  for (size_t a = 0; a < table.rows.size(); ++a)
    for (size_t b = 0; b < table.rows.size(); ++b) {
      const auto sum = table.rows[a] + table.rows[b];
      const auto lhs = wedge_character_direct(sum, table.dims[a] + table.dims[b]);
      const auto rhs = wedge_character_direct(table.rows[a], table.dims[a]) *
                       wedge_character_direct(table.rows[b], table.dims[b]);
      CHECK(lhs.sup_distance(rhs) < 1e-9);
    }
}
