#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oddwedge/character_table.hpp"
#include "oddwedge/group.hpp"

using namespace oddwedge;

namespace {

cplx herm(const ClassStructure& cs, const ClassFunction& a, const ClassFunction& b) {
  cplx s = 0.0;
  for (int c = 0; c < cs.num_classes; ++c)
    s += static_cast<double>(cs.sizes[c]) * a[c] * std::conj(b[c]);
  return s / static_cast<double>(cs.group_order);
}

}  // namespace

TEST_CASE("frobenius21 character table") {
  const auto g = frobenius21();
  const auto table = character_table(g);
  REQUIRE(table.rows.size() == 5);
  CHECK(table.dims == std::vector<int>{1, 1, 1, 3, 3});

  const double s7 = std::sqrt(7.0);
  const cplx j(-0.5, 0.5 * std::sqrt(3.0));
  const cplx j2 = std::conj(j);

  // trivial character first
  for (int c = 0; c < 5; ++c) CHECK(table.rows[0][c] == cplx(1.0));

  CHECK(std::abs(table.rows[1][3] - j2) < 1e-12);
  CHECK(std::abs(table.rows[1][4] - j) < 1e-12);
  CHECK(std::abs(table.rows[2][3] - j) < 1e-12);
  CHECK(std::abs(table.rows[2][4] - j2) < 1e-12);

  CHECK(std::abs(table.rows[3][0] - 3.0) < 1e-12);
  CHECK(std::abs(table.rows[3][1] - cplx(-0.5, -0.5 * s7)) < 1e-12);
  CHECK(std::abs(table.rows[3][2] - cplx(-0.5, 0.5 * s7)) < 1e-12);
  CHECK(std::abs(table.rows[3][3]) < 1e-12);
  CHECK(std::abs(table.rows[3][4]) < 1e-12);
  CHECK(std::abs(table.rows[4][1] - cplx(-0.5, 0.5 * s7)) < 1e-12);
  CHECK(std::abs(table.rows[4][2] - cplx(-0.5, -0.5 * s7)) < 1e-12);
}

TEST_CASE("cyclic group table is the dual cyclic group") {
  const auto g = cyclic_group(3);
  const auto table = character_table(g);
  REQUIRE(table.rows.size() == 3);
  const int cx = table.cs->class_of[1];   // class of the generator
  const int cx2 = table.cs->class_of[2];  // class of its square
  for (const auto& row : table.rows) {
    // multiplicative on the generator, and a cube root of unity there
    CHECK(std::abs(row[cx2] - row[cx] * row[cx]) < 1e-12);
    CHECK(std::abs(std::pow(row[cx], 3.0) - cplx(1.0)) < 1e-12);
  }
  // all three cube roots occur
  bool seen[3] = {false, false, false};
  for (const auto& row : table.rows) {
    const double arg = std::arg(row[cx]);
    if (std::abs(arg) < 1e-9) seen[0] = true;
    if (std::abs(arg - 2 * std::numbers::pi / 3) < 1e-9) seen[1] = true;
    if (std::abs(arg + 2 * std::numbers::pi / 3) < 1e-9) seen[2] = true;
  }
  CHECK(seen[0]);
  CHECK(seen[1]);
  CHECK(seen[2]);
}

TEST_CASE("orthogonality and dimension counts on all built-ins") {
  for (const auto& g : {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(7),
                        cyclic_group(9),
                        direct_product(cyclic_group(2), cyclic_group(2)),
                        direct_product(cyclic_group(3), cyclic_group(3)),
                        direct_product(cyclic_group(3), cyclic_group(7)), frobenius21()}) {
    CAPTURE(g.name);
    const auto table = character_table(g);
    const int c = table.cs->num_classes;
    REQUIRE(static_cast<int>(table.rows.size()) == c);

    long dimsq = 0;
    for (size_t r = 0; r < table.rows.size(); ++r) {
      dimsq += static_cast<long>(table.dims[r]) * table.dims[r];
      CHECK(std::abs(table.rows[r][0] - cplx(static_cast<double>(table.dims[r]))) < 1e-12);
    }
    CHECK(dimsq == g.order);

    for (int a = 0; a < c; ++a)
      for (int b = 0; b < c; ++b) {
        const cplx ip = herm(*table.cs, table.rows[a], table.rows[b]);
        CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-9);
      }

    // column orthogonality: sum_r chi_r(a) conj(chi_r(b)) = delta_ab |G|/|C_a|
    for (int a = 0; a < c; ++a)
      for (int b = 0; b < c; ++b) {
        cplx s = 0.0;
        for (int r = 0; r < c; ++r) s += table.rows[r][a] * std::conj(table.rows[r][b]);
        const double expect = (a == b) ? static_cast<double>(g.order) / table.cs->sizes[a] : 0.0;
        CHECK(std::abs(s - expect) < 1e-9);
      }
  }
}
