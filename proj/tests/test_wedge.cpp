#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oddwedge/hurwitz.hpp"
#include "oddwedge/wedge.hpp"

using namespace oddwedge;

namespace {

const double ln2 = std::numbers::ln2;
const double pi_s3 = std::numbers::pi / std::sqrt(3.0);

ClassFunction random_cf(const ClassStructurePtr& cs, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(cs->num_classes);
  for (auto& z : v) z = cplx(d(rng), d(rng));
  return ClassFunction(cs, std::move(v));
}

}  // namespace

TEST_CASE("T matrix of the order-21 group, entry by entry") {
  const auto t = build_t(conjugacy_classes(frobenius21()));
  Eigen::MatrixXd expect(5, 5);
  expect << ln2, 0, 0, 0, 0,                                        //
      ln2 / 7, 3 * ln2 / 7, 3 * ln2 / 7, 0, 0,                      //
      ln2 / 7, 3 * ln2 / 7, 3 * ln2 / 7, 0, 0,                      //
      ln2 / 3, 0, 0, (ln2 + pi_s3) / 3, (ln2 - pi_s3) / 3,          //
      ln2 / 3, 0, 0, (ln2 - pi_s3) / 3, (ln2 + pi_s3) / 3;
  CHECK((t.m - expect).cwiseAbs().maxCoeff() < 1e-12);

  // the order-7 rows see only f(e) and f(7A)+f(7B)
  CHECK(std::abs(t.m(1, 1) - t.m(1, 2)) < 1e-12);
  CHECK(std::abs(t.m(2, 1) - t.m(2, 2)) < 1e-12);
}

TEST_CASE("T matrices of the small cyclic groups") {
  const auto t1 = build_t(conjugacy_classes(cyclic_group(1)));
  REQUIRE(t1.m.rows() == 1);
  CHECK(std::abs(t1.m(0, 0) - ln2) < 1e-14);

  // by hand from the k = 3 coefficients and the power map of c3
  const auto wc = wedge_coefficients(3);
  const auto t3 = build_t(conjugacy_classes(cyclic_group(3)));
  Eigen::MatrixXd expect(3, 3);
  expect << wc.cj(1) + wc.cj(2) + wc.cj(3), 0, 0,  //
      wc.cj(3), wc.cj(1), wc.cj(2),                //
      wc.cj(3), wc.cj(2), wc.cj(1);
  CHECK((t3.m - expect).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("identity row and realness of T") {
  std::mt19937 rng(5);
  for (const auto& g : {cyclic_group(3), cyclic_group(9), frobenius21()}) {
    const auto cs = conjugacy_classes(g);
    const auto t = build_t(cs);
    CHECK(std::abs(t.m(0, 0) - ln2) < 1e-12);
    for (int c = 1; c < cs->num_classes; ++c) CHECK(std::abs(t.m(0, c)) < 1e-14);

    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::vector<cplx> v(cs->num_classes);
    for (auto& z : v) z = d(rng);
    const auto tf = t.apply(ClassFunction(cs, v));
    for (int c = 0; c < cs->num_classes; ++c) CHECK(tf[c].imag() == 0.0);
  }
}

TEST_CASE("even order is refused") {
  CHECK_THROWS_AS(build_t(conjugacy_classes(cyclic_group(2))), std::invalid_argument);
  CHECK_THROWS_AS(build_t(conjugacy_classes(direct_product(cyclic_group(2), cyclic_group(2)))),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_adams_theorem(cyclic_group(2)), std::invalid_argument);
}

TEST_CASE("wedge of characters") {
  const auto g = frobenius21();
  const auto cs = conjugacy_classes(g);
  const auto table = character_table(g, cs);
  const auto t = build_t(cs);

  // trivial -> constant 2, exactly (integer outputs are snapped)
  const auto w0 = wedge_exp(t, table.rows[0]);
  for (int c = 0; c < 5; ++c) CHECK(w0[c] == cplx(2.0));

  // one-dimensional chi -> 1 + chi
  for (int r = 1; r <= 2; ++r) {
    const auto w = wedge_exp(t, table.rows[r]);
    const auto expect = ClassFunction::constant(cs, 1.0) + table.rows[r];
    CHECK(w.sup_distance(expect) < 1e-12);
  }

  // three-dimensional rows map onto (8, 1, 1, 2, 2) = 2 rho1 + rho4 + rho5
  const std::vector<cplx> expect = {8.0, 1.0, 1.0, 2.0, 2.0};
  CHECK(wedge_exp(t, table.rows[3]).values() == expect);
  CHECK(wedge_exp(t, table.rows[4]).values() == expect);
}

TEST_CASE("spectrum of T for the order-21 group") {
  const auto t = build_t(conjugacy_classes(frobenius21()));
  const auto sp = t_spectrum(t);
  REQUIRE(sp.eigenvalues.size() == 5);
  const std::vector<double> expect = {2 * std::numbers::pi / (3 * std::sqrt(3.0)), ln2,
                                      6 * ln2 / 7, 2 * ln2 / 3, 0.0};
  for (size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(sp.eigenvalues[i].imag()) == 0.0);
    CHECK(std::abs(sp.eigenvalues[i].real() - expect[i]) < 1e-10);
  }

  // kernel direction (0, -1, 1, 0, 0)
  Eigen::VectorXd kv(5);
  kv << 0, -1, 1, 0, 0;
  CHECK((t.m * kv).cwiseAbs().maxCoeff() < 1e-12);
  const Eigen::VectorXcd ev = sp.eigenvectors.col(4);
  const cplx overlap = (ev.adjoint() * kv.cast<cplx>())(0, 0);
  CHECK(std::abs(std::abs(overlap) / kv.norm() - 1.0) < 1e-9);

  const auto sp1 = t_spectrum(build_t(conjugacy_classes(cyclic_group(1))));
  REQUIRE(sp1.eigenvalues.size() == 1);
  CHECK(std::abs(sp1.eigenvalues[0] - ln2) < 1e-14);
}

TEST_CASE("kernel witnesses") {
  {
    const auto g = frobenius21();
    const auto cs = conjugacy_classes(g);
    const auto pairs = kernel_witness(build_t(cs), character_table(g, cs));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<int, int>{3, 4});
  }
  {
    const auto g = cyclic_group(3);
    const auto cs = conjugacy_classes(g);
    CHECK(kernel_witness(build_t(cs), character_table(g, cs)).empty());
  }
  {
    const auto g = direct_product(cyclic_group(3), cyclic_group(3));
    const auto cs = conjugacy_classes(g);
    CHECK(kernel_witness(build_t(cs), character_table(g, cs)).empty());
  }
}

TEST_CASE("exponential formula equals the direct wedge on built-in odd groups") {
  for (const auto& g : {cyclic_group(1), cyclic_group(3), cyclic_group(7), cyclic_group(9),
                        direct_product(cyclic_group(3), cyclic_group(3)), frobenius21()}) {
    CAPTURE(g.name);
    const auto rep = verify_adams_theorem(g);
    CHECK(rep.pass);
    CHECK(rep.max_deviation < 1e-9);
  }
}

TEST_CASE("wedge is a homomorphism from sums to products") {
  const auto cs = conjugacy_classes(frobenius21());
  const auto t = build_t(cs);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_cf(cs, rng);
    const auto g = random_cf(cs, rng);
    const auto lhs = wedge_exp(t, f + g);
    const auto rhs = wedge_exp(t, f) * wedge_exp(t, g);
    for (int c = 0; c < cs->num_classes; ++c)
      CHECK(std::abs(lhs[c] - rhs[c]) <= 1e-9 * (1.0 + std::abs(rhs[c])));
  }
}

TEST_CASE("wedge of zero and inverses") {
  const auto cs = conjugacy_classes(frobenius21());
  const auto t = build_t(cs);
  const auto zero = ClassFunction::constant(cs, 0.0);
  CHECK(wedge_exp(t, zero).values() == std::vector<cplx>(5, cplx(1.0)));

  std::mt19937 rng(7);
  const auto f = random_cf(cs, rng);
  const auto prod = wedge_exp(t, f) * wedge_exp(t, f.scaled(-1.0));
  CHECK(prod.sup_distance(ClassFunction::constant(cs, 1.0)) < 1e-12);
}

TEST_CASE("exponential formula holds on an order-63 product group") {
  // c3 x frobenius21 exercises the generic paths well beyond the built-in
  // examples: 15 classes, coefficients at k = 63, character values that are
  // products of cube roots of unity with the Gauss sums.
  const auto g = direct_product(cyclic_group(3), frobenius21());
  const auto cs = conjugacy_classes(g);
  CHECK(cs->num_classes == 15);
  const auto rep = verify_adams_theorem(g);
  CHECK(rep.pass);
  CHECK(rep.max_deviation < 1e-9);
}

TEST_CASE("the alternating-sum operator is -k times T") {
  const auto cs = conjugacy_classes(frobenius21());
  const auto t = build_t(cs);
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(5);
  for (auto& z : v) z = cplx(d(rng), d(rng));
  const ClassFunction f(cs, v);
  const auto tf = t.apply(f);
  for (int c = 0; c < 5; ++c) {
    cplx lattice_sum = 0.0;
    for (int j = 1; j <= 21; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      lattice_sum += sign * h_closed(j, 21) * f[cs->power_class(j, c)];
    }
    CHECK(std::abs(lattice_sum - (-21.0) * tf[c]) < 1e-10);
  }
}

TEST_CASE("the kernel of T kills delta_7A - delta_7B") {
  const auto cs = conjugacy_classes(frobenius21());
  const auto t = build_t(cs);
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx s(d(rng), d(rng));
    const auto f = (ClassFunction::delta(cs, 1) - ClassFunction::delta(cs, 2)).scaled(s);
    CHECK(wedge_exp(t, f).sup_distance(ClassFunction::constant(cs, 1.0)) < 1e-12);
  }
}
