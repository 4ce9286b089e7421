#include <doctest.h>

#include <random>

#include "oqmi/qcore.hpp"
#include "oqmi/states.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace oqmi;
using testing::max_abs_diff;

TEST_CASE("party sets") {
  CHECK(PartySet::from_letters("CA") == PartySet{0, 2});
  CHECK(PartySet{0, 2}.letters() == "AC");
  CHECK(PartySet{1}.complement(3) == PartySet{0, 2});
  CHECK(PartySet::from_mask(0b101) == PartySet{0, 2});
  CHECK_THROWS_AS(PartySet({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PartySet::from_letters("a"), std::invalid_argument);
  CHECK_THROWS_AS(PartySet{3}.check_against(3), std::invalid_argument);
}

TEST_CASE("density matrix shape checks") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Identity(4, 4), {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Identity(4, 2), {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Identity(1, 1), {1}), std::invalid_argument);
}

TEST_CASE("tensor product") {
  const auto half = testing::maximally_mixed({2});
  const auto quarter = tensor_product(half, half);
  CHECK(quarter.dims() == Dims{2, 2});
  CHECK(max_abs_diff(quarter.matrix(), testing::maximally_mixed({2, 2}).matrix()) < 1e-15);

  const auto zero = testing::diag({1, 0}, {2});
  const auto one = testing::diag({0, 1}, {2});
  CHECK(max_abs_diff(tensor_product(zero, one).matrix(), testing::diag({0, 1, 0, 0}, {2, 2}).matrix()) == 0.0);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_mixed_state({2}, rng);
    const auto b = random_mixed_state({3, 2}, rng);
    const auto ab = tensor_product(a, b);
    CHECK(std::abs(ab.matrix().trace() - Complex{1.0, 0.0}) < 1e-12);
    CHECK(validate(ab).ok());
    // round trip through the partial trace
    CHECK(max_abs_diff(partial_trace(ab, {0}).matrix(), a.matrix()) < 1e-12);
    CHECK(max_abs_diff(partial_trace(ab, {1, 2}).matrix(), b.matrix()) < 1e-12);
  }
}

TEST_CASE("partial trace") {
  CHECK(max_abs_diff(partial_trace(testing::diag({1, 0, 0, 0}, {2, 2}), {0}).matrix(),
                     testing::diag({1, 0}, {2}).matrix()) == 0.0);

  const auto ghz = testing::named("ghz:3");
  const auto ab = partial_trace(ghz, {0, 1});
  CHECK(max_abs_diff(ab.matrix(), testing::classical_ghz(2).matrix()) < 1e-15);
  CHECK(max_abs_diff(ab.matrix(), oracle::partial_trace(ghz.matrix(), ghz.dims(), {0, 1})) < 1e-15);

  CHECK(max_abs_diff(partial_trace(testing::maximally_mixed({2, 2}), {1}).matrix(),
                     testing::maximally_mixed({2}).matrix()) < 1e-15);

  CHECK_THROWS_WITH_AS(partial_trace(ghz, PartySet{}), "cannot trace out all parties", std::invalid_argument);

  SUBCASE("matches the index-summation oracle on random states") {
    std::mt19937_64 rng(11);
    const Dims dims{2, 3, 2};
    const auto rho = random_mixed_state(dims, rng);
    for (unsigned mask = 1; mask < 8; ++mask) {
      const auto keep = PartySet::from_mask(mask);
      const auto fast = partial_trace(rho, keep);
      CHECK(max_abs_diff(fast.matrix(), oracle::partial_trace(rho.matrix(), dims, keep.indices())) < 1e-14);
      CHECK(std::abs(fast.matrix().trace().real() - 1.0) < 1e-12);
    }
  }

  SUBCASE("tracing in stages commutes with tracing at once") {
    std::mt19937_64 rng(12);
    for (const Dims& dims : {Dims{2, 2, 2}, Dims{2, 2, 2, 2}, Dims{3, 2, 2}}) {
      const auto rho = random_mixed_state(dims, rng);
      const std::size_t n = dims.size();
      // trace the last party, then the first remaining one
      const auto step1 = partial_trace(rho, PartySet{n - 1}.complement(n));
      const auto step2 = partial_trace(step1, PartySet{0}.complement(n - 1));
      std::vector<std::size_t> keep;
      for (std::size_t k = 1; k + 1 < n; ++k) keep.push_back(k);
      const auto once = partial_trace(rho, PartySet(keep));
      CHECK(max_abs_diff(step2.matrix(), once.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("partial transpose") {
  const auto bell = testing::bell();
  const auto pt = partial_transpose(bell, {0});
  const auto eig = hermitian_eigenvalues(pt);
  CHECK(eig.back() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(oracle::eigenvalues(pt).front() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(std::abs(pt.trace() - Complex{1.0, 0.0}) < 1e-15);

  std::mt19937_64 rng(3);
  const auto a = random_mixed_state({2}, rng);
  const auto b = random_mixed_state({3}, rng);
  const auto prod = tensor_product(a, b);
  const auto pt_prod = hermitian_eigenvalues(partial_transpose(prod, {0}));
  const auto plain = hermitian_eigenvalues(prod.matrix());
  for (std::size_t i = 0; i < plain.size(); ++i) CHECK(pt_prod[i] == doctest::Approx(plain[i]).epsilon(1e-12));
  CHECK(pt_prod.back() > -1e-12);

  const auto rho = random_mixed_state({2, 2, 2}, rng);
  const auto once = partial_transpose(rho, {1});
  CHECK(max_hermiticity_deviation(once) < 1e-15);
  CHECK(std::abs(once.trace() - Complex{1.0, 0.0}) < 1e-12);
  const auto twice = partial_transpose(DensityMatrix(once, rho.dims()), {1});
  CHECK(max_abs_diff(twice, rho.matrix()) == 0.0);

  CHECK_THROWS_AS(partial_transpose(rho, PartySet{}), std::invalid_argument);
  CHECK_THROWS_AS(partial_transpose(rho, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues") {
  auto eq = [](const std::vector<double>& got, const std::vector<double>& want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
  };
  eq(hermitian_eigenvalues(testing::maximally_mixed({2}).matrix()), {0.5, 0.5});
  eq(hermitian_eigenvalues(testing::diag({0.25, 0.75}, {2}).matrix()), {0.75, 0.25});
  eq(hermitian_eigenvalues(partial_trace(testing::named("w:3"), {0}).matrix()), {2.0 / 3.0, 1.0 / 3.0});

  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
  ComplexMatrix skew = ComplexMatrix::Identity(2, 2);
  skew(0, 1) = 1e-6;
  CHECK_THROWS_AS(hermitian_eigenvalues(skew), std::domain_error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto rho = random_mixed_state({3, 3}, rng);
    const auto ev = hermitian_eigenvalues(rho.matrix());
    double sum = 0.0;
    for (double x : ev) {
      CHECK(x >= -1e-9);
      CHECK(x <= 1.0);
      sum += x;
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);
    CHECK(std::is_sorted(ev.rbegin(), ev.rend()));
  }
}

TEST_CASE("validate") {
  CHECK(validate(testing::named("ghz:3")).ok());

  const auto short_trace = testing::diag({0.45, 0.45}, {2});
  const auto r1 = validate(short_trace);
  REQUIRE(r1.violations.size() == 1);
  CHECK(r1.violations[0].invariant == "trace");
  CHECK(r1.violations[0].magnitude == doctest::Approx(0.1));

  const auto negative = testing::diag({1.01, -0.01}, {2});
  const auto r2 = validate(negative);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].invariant == "positivity");
  CHECK(r2.violations[0].magnitude == doctest::Approx(0.01));

  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = 0.1;
  const auto r3 = validate(DensityMatrix(m, {2}));
  REQUIRE_FALSE(r3.ok());
  CHECK(r3.violations[0].invariant == "hermiticity");
  CHECK(r3.describe().find("hermiticity") != std::string::npos);
}
