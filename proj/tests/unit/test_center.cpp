#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_support.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("inverse path loss closed forms") {
  const auto single = pas::UserArray::make({3.0}, 2.0);
  CHECK_THAT(pas::inverse_path_loss(single, 3.0), WithinRel(1.0 / 4.0, 1e-15));

  const auto pair = pas::UserArray::make({-1.5, 1.5}, 2.0);
  CHECK_THAT(pas::inverse_path_loss(pair, 0.0),
             WithinRel(2.0 / (1.5 * 1.5 + 4.0), 1e-15));

  // term-by-term re-summation on a random instance
  std::mt19937_64 rng(3);
  const auto xs = test_support::random_increasing(rng, 5, -2.0, 2.0);
  const auto user = pas::UserArray::make(xs, 1.3);
  double expected = 0.0;
  for (double xm : xs) expected += 1.0 / ((0.7 - xm) * (0.7 - xm) + 1.3 * 1.3);
  CHECK_THAT(pas::inverse_path_loss(user, 0.7), WithinRel(expected, 1e-14));
}

TEST_CASE("inverse path loss derivatives") {
  const auto single = pas::UserArray::make({3.0}, 2.0);
  CHECK(pas::inverse_path_loss_derivative(single, 3.0) == 0.0);
  CHECK_THAT(pas::inverse_path_loss_second_derivative(single, 3.0),
             WithinRel(-2.0 / std::pow(2.0, 4.0), 1e-14));

  // symmetric pair: derivative cancels at the midpoint
  const auto pair = pas::UserArray::make({-1.5, 1.5}, 2.0);
  CHECK_THAT(pas::inverse_path_loss_derivative(pair, 0.0), WithinAbs(0.0, 1e-18));

  // curvature is negative whenever every antenna is within d/sqrt(3)
  const auto tight = pas::UserArray::make({-0.2, 0.1, 0.3}, 1.0);
  for (double x = -0.2; x <= 0.3; x += 0.05) {
    CHECK(pas::inverse_path_loss_second_derivative(tight, x) < 0.0);
  }

  // finite-difference cross-checks
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> sample(-3.0, 3.0);
  const auto xs = test_support::random_increasing(rng, 4, -1.0, 1.0);
  const auto user = pas::UserArray::make(xs, 2.2);
  for (int i = 0; i < 50; ++i) {
    const double x = sample(rng);
    const double fd1 = pas::finite_difference(
        [&](double t) { return pas::inverse_path_loss(user, t); }, x, 1e-6);
    const double a1 = pas::inverse_path_loss_derivative(user, x);
    if (std::abs(a1) > 1e-8) CHECK_THAT(fd1, WithinRel(a1, 1e-5));

    // second-order centered difference of the objective itself
    const double h = 1e-4;
    const double fd2 = (pas::inverse_path_loss(user, x + h) -
                        2.0 * pas::inverse_path_loss(user, x) +
                        pas::inverse_path_loss(user, x - h)) /
                       (h * h);
    const double a2 = pas::inverse_path_loss_second_derivative(user, x);
    if (std::abs(a2) > 1e-6) CHECK_THAT(fd2, WithinRel(a2, 1e-4));
  }
}

TEST_CASE("optimize_center picks the right branch") {
  CHECK_THROWS_AS(pas::optimize_center(pas::UserArray::make({1.0}, 1.0), 0.0),
                  pas::argument_error);

  // symmetric array: closed form
  const auto sym = pas::optimize_center(pas::UserArray::make({9.7, 10.3}, 4.0));
  CHECK(sym.x_center_m == 10.0);
  CHECK(sym.method == pas::CenterMethod::symmetric_closed_form);

  // single antenna is trivially symmetric
  const auto one = pas::optimize_center(pas::UserArray::make({5.0}, 1.0));
  CHECK(one.x_center_m == 5.0);

  // asymmetric narrow array: certified concave ternary search
  const auto narrow_user = pas::UserArray::make({0.0, 0.05, 0.2}, 4.0);
  const auto narrow = pas::optimize_center(narrow_user);
  CHECK(narrow.method == pas::CenterMethod::ternary_search);
  CHECK(narrow.concavity_certified);
  CHECK(narrow.x_center_m >= 0.0);
  CHECK(narrow.x_center_m <= 0.2);
  CHECK_THAT(narrow.l_value, WithinRel(pas::inverse_path_loss(narrow_user, narrow.x_center_m),
                                       1e-15));

  // asymmetric wide array: grid scan + refinement, checked against an
  // independent refined grid search
  const auto wide_user = pas::UserArray::make({0.0, 0.1, 0.5}, 4.0);
  const auto wide = pas::optimize_center(wide_user);
  const double reference = pas::refined_grid_argmax(
      [&](double x) { return pas::inverse_path_loss(wide_user, x); }, 0.0, 0.5, 1001,
      1e-8);
  CHECK_THAT(wide.x_center_m, WithinAbs(reference, 1e-6));

  // idempotence: restarting from the answer stays put
  const auto again = pas::optimize_center(wide_user);
  CHECK_THAT(again.x_center_m, WithinAbs(wide.x_center_m, 1e-12));
}

TEST_CASE("optimize_center stays within the array interval") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_real_distribution<double> distance(0.5, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = count(rng);
    const double d = distance(rng);
    const auto xs = test_support::random_increasing(rng, static_cast<std::size_t>(m),
                                                    -2.0 * d, 2.0 * d);
    const auto user = pas::UserArray::make(xs, d);
    const auto solution = pas::optimize_center(user);
    CHECK(solution.x_center_m >= user.x_m.front());
    CHECK(solution.x_center_m <= user.x_m.back());
  }
}
