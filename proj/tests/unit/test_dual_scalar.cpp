#include <doctest.h>

#include <cmath>
#include <random>

#include "darboux/dual_scalar.hpp"

using namespace darboux;

namespace {

// |x - y| within `ulps` units in the last place of the given scale.
bool close_ulps(double x, double y, double scale, double ulps) {
  return std::abs(x - y) <=
         ulps * std::numeric_limits<double>::epsilon() * std::max(1.0, scale);
}

}  // namespace

TEST_SUITE("dual_scalar") {

TEST_CASE("eps squares to zero") {
  const DualScalar eps{0.0, 1.0};
  const DualScalar sq = eps * eps;
  CHECK(sq.real == 0.0);
  CHECK(sq.dual == 0.0);
}

TEST_CASE("multiplicative identity") {
  const DualScalar x{-3.25, 7.5};
  CHECK(x * DualScalar{1.0, 0.0} == x);
  CHECK(DualScalar{1.0, 0.0} * x == x);
}

TEST_CASE("product expands as ab + eps(ab* + a*b)") {
  const DualScalar p = DualScalar{2.0, 3.0} * DualScalar{5.0, 7.0};
  CHECK(p.real == 10.0);
  CHECK(p.dual == 29.0);  // 2*7 + 3*5
}

TEST_CASE("division inverts multiplication") {
  const DualScalar q = DualScalar{10.0, 29.0} / DualScalar{5.0, 7.0};
  CHECK(q.real == 2.0);
  CHECK(q.dual == 3.0);

  const DualScalar x{-1.75, 0.3125};
  const DualScalar self = x / x;
  CHECK(self.real == 1.0);
  CHECK(self.dual == 0.0);
}

TEST_CASE("pure dual divisors are rejected") {
  CHECK_THROWS_AS(DualScalar(1.0) / DualScalar(0.0, 1.0), PureDualDivision);
  CHECK_THROWS_AS(div(DualScalar(1.0), DualScalar(1e-13, 1.0)), PureDualDivision);
  // the tolerance is an explicit knob
  CHECK_NOTHROW(div(DualScalar(1.0), DualScalar(1e-13, 1.0), 1e-14));
}

TEST_CASE("analytic lifts") {
  const DualScalar s = dual_sin({M_PI / 2.0, 3.0});
  CHECK(s.real == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s.dual) < 1e-15);

  const DualScalar c = dual_cos({0.0, 123.5});
  CHECK(c.real == 1.0);
  CHECK(c.dual == 0.0);

  const DualScalar r = dual_sqrt({9.0, 6.0});
  CHECK(r.real == 3.0);
  CHECK(r.dual == 1.0);

  CHECK_THROWS_AS(dual_sqrt({0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(dual_sqrt({-4.0, 1.0}), DomainError);

  const DualScalar via_generic = apply_analytic(
      [](double x) { return std::log(x); }, [](double x) { return 1.0 / x; },
      DualScalar{2.0, 5.0});
  CHECK(via_generic.real == std::log(2.0));
  CHECK(via_generic.dual == 2.5);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> pick(-2.0, 2.0);
  auto random_dual = [&] { return DualScalar{pick(rng), pick(rng)}; };

  for (int trial = 0; trial < 1000; ++trial) {
    const DualScalar a = random_dual(), b = random_dual(), c = random_dual();
    const double scale = (std::abs(a.real) + std::abs(a.dual)) *
                         (std::abs(b.real) + std::abs(b.dual)) *
                         (std::abs(c.real) + std::abs(c.dual) + 1.0);

    const DualScalar add_assoc_l = (a + b) + c, add_assoc_r = a + (b + c);
    CHECK(close_ulps(add_assoc_l.real, add_assoc_r.real, scale, 4));
    CHECK(close_ulps(add_assoc_l.dual, add_assoc_r.dual, scale, 4));

    const DualScalar mul_comm_l = a * b, mul_comm_r = b * a;
    CHECK(close_ulps(mul_comm_l.real, mul_comm_r.real, scale, 4));
    CHECK(close_ulps(mul_comm_l.dual, mul_comm_r.dual, scale, 4));

    const DualScalar mul_assoc_l = (a * b) * c, mul_assoc_r = a * (b * c);
    CHECK(close_ulps(mul_assoc_l.real, mul_assoc_r.real, scale, 4));
    CHECK(close_ulps(mul_assoc_l.dual, mul_assoc_r.dual, scale, 4));

    const DualScalar dist_l = a * (b + c), dist_r = a * b + a * c;
    CHECK(close_ulps(dist_l.real, dist_r.real, scale, 4));
    CHECK(close_ulps(dist_l.dual, dist_r.dual, scale, 4));
  }
}

TEST_CASE("dual part equals the derivative (finite-difference oracle)") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pick(0.2, 2.5);
  const double h = 1e-5;
  for (int trial = 0; trial < 64; ++trial) {
    const double x = pick(rng);
    const DualScalar seed{x, 1.0};
    auto fd = [&](auto&& f) { return (f(x + h) - f(x - h)) / (2.0 * h); };

    CHECK(sin(seed).dual ==
          doctest::Approx(fd([](double v) { return std::sin(v); })).epsilon(1e-8));
    CHECK(cos(seed).dual ==
          doctest::Approx(fd([](double v) { return std::cos(v); })).epsilon(1e-8));
    CHECK(sqrt(seed).dual ==
          doctest::Approx(fd([](double v) { return std::sqrt(v); })).epsilon(1e-8));
    CHECK(exp(seed).dual ==
          doctest::Approx(fd([](double v) { return std::exp(v); })).epsilon(1e-8));
  }
}

}  // TEST_SUITE
