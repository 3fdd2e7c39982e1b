#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "moseed/core.hpp"
#include "moseed/problems.hpp"

using namespace moseed;

namespace {

constexpr double kPi = 3.14159265358979323846;

DecisionVector filled(std::size_t n, double v) {
  return DecisionVector(n, v);
}

}  // namespace

TEST_CASE("registry contents") {
  const auto names = problem_names();
  CHECK(names.size() == 23);  // 5 zdt + 4 dtlz x 4 dims + 2 lz09
  for (const char* expected :
       {"zdt1", "zdt2", "zdt3", "zdt4", "zdt6", "dtlz1_d2", "dtlz2_d4",
        "dtlz3_d6", "dtlz4_d8", "lz09_f1", "lz09_f2"}) {
    bool found = false;
    for (const auto& n : names) found = found || n == expected;
    CHECK_MESSAGE(found, expected);
  }
  CHECK_THROWS_AS(find_problem("nope"), std::invalid_argument);

  CHECK(find_problem("zdt1").n == 30);
  CHECK(find_problem("zdt1").d == 2);
  CHECK(find_problem("zdt4").n == 10);
  CHECK(find_problem("zdt6").n == 10);
  CHECK(find_problem("dtlz2_d4").d == 4);
  CHECK(find_problem("dtlz3_d6").d == 6);
  CHECK(find_problem("lz09_f1").n == 30);

  const auto& zdt4 = find_problem("zdt4");
  CHECK(zdt4.bounds.lower[0] == 0.0);
  CHECK(zdt4.bounds.upper[0] == 1.0);
  CHECK(zdt4.bounds.lower[1] == -5.0);
  CHECK(zdt4.bounds.upper[1] == 5.0);
  const auto& lz2 = find_problem("lz09_f2");
  CHECK(lz2.bounds.lower[1] == -1.0);
  CHECK(lz2.bounds.upper[1] == 1.0);
}

TEST_CASE("evaluate validates input") {
  const auto& p = find_problem("zdt1");
  CHECK_THROWS_AS(evaluate(p, filled(29, 0.5)), std::domain_error);
  CHECK_THROWS_AS(evaluate(p, filled(30, 1.5)), std::domain_error);
  auto x = filled(30, 0.5);
  x[3] = -0.1;
  CHECK_THROWS_AS(evaluate(p, x), std::domain_error);
}

TEST_CASE("zdt1 spot values") {
  const auto& p = find_problem("zdt1");
  auto f = evaluate(p, filled(30, 0.0));
  CHECK(f[0] == 0.0);
  CHECK(f[1] == 1.0);
  auto x = filled(30, 0.0);
  x[0] = 1.0;
  f = evaluate(p, x);
  CHECK(f[0] == 1.0);
  CHECK(f[1] == doctest::Approx(0.0).epsilon(1e-14));
  // g = 1 + 9 * (29 * 0.5) / 29 = 5.5 at x = (0.5, ..., 0.5)
  f = evaluate(p, filled(30, 0.5));
  const double g = 5.5;
  CHECK(f[0] == 0.5);
  CHECK(f[1] == doctest::Approx(g * (1.0 - std::sqrt(0.5 / g))).epsilon(1e-14));
}

TEST_CASE("zdt2 zdt3 spot values") {
  auto x = filled(30, 0.0);
  x[0] = 0.5;
  auto f2 = evaluate(find_problem("zdt2"), x);
  CHECK(f2[0] == 0.5);
  CHECK(f2[1] == doctest::Approx(0.75).epsilon(1e-14));

  auto f3 = evaluate(find_problem("zdt3"), x);
  CHECK(f3[0] == 0.5);
  // sin(5 pi) = 0, so only the sqrt term remains
  CHECK(f3[1] ==
        doctest::Approx(1.0 - std::sqrt(0.5) - 0.5 * std::sin(5.0 * kPi))
            .epsilon(1e-12));
}

TEST_CASE("zdt4 spot values") {
  const auto& p = find_problem("zdt4");
  auto x = filled(10, 0.0);
  x[0] = 0.5;
  auto f = evaluate(p, x);
  // g = 1 + 10*9 + 9*(0 - 10 cos 0) = 1
  CHECK(f[0] == 0.5);
  CHECK(f[1] == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
  x[1] = 1.0;  // g = 1 + 90 + (1 - 10 cos(4 pi)) + 8*(0 - 10 cos 0) = 2
  f = evaluate(p, x);
  const double g = 2.0;
  CHECK(f[1] == doctest::Approx(g * (1.0 - std::sqrt(0.5 / g))).epsilon(1e-12));
}

TEST_CASE("zdt6 spot values") {
  const auto& p = find_problem("zdt6");
  auto x = filled(10, 0.0);
  x[0] = 1.0 / 12.0;  // sin(6 pi / 12) = 1
  auto f = evaluate(p, x);
  const double f1 = 1.0 - std::exp(-4.0 / 12.0);
  CHECK(f[0] == doctest::Approx(f1).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(1.0 - f1 * f1).epsilon(1e-12));

  x = filled(10, 1.0);  // g = 1 + 9 * (9/9)^0.25 = 10, f1 = 1 (sin(6 pi) = 0)
  f = evaluate(p, x);
  CHECK(f[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(10.0 * (1.0 - 0.01)).epsilon(1e-12));
}

TEST_CASE("dtlz1 spot values") {
  const auto& p = find_problem("dtlz1_d2");
  auto x = filled(30, 0.5);  // x_M = 0.5 -> g = 0
  x[0] = 0.0;
  auto f = evaluate(p, x);
  CHECK(f[0] == doctest::Approx(0.0));
  CHECK(f[1] == doctest::Approx(0.5));
  x[0] = 1.0;
  f = evaluate(p, x);
  CHECK(f[0] == doctest::Approx(0.5));
  CHECK(f[1] == doctest::Approx(0.0));
  x[0] = 0.5;
  f = evaluate(p, x);
  CHECK(f[0] + f[1] == doctest::Approx(0.5).epsilon(1e-14));

  // d=4: f = 0.5 (1+g) (x1 x2 x3, x1 x2 (1-x3), x1 (1-x2), 1-x1)
  const auto& p4 = find_problem("dtlz1_d4");
  auto y = filled(30, 0.5);
  y[0] = 0.2;
  y[1] = 0.4;
  y[2] = 0.8;
  f = evaluate(p4, y);
  CHECK(f[0] == doctest::Approx(0.5 * 0.2 * 0.4 * 0.8).epsilon(1e-13));
  CHECK(f[1] == doctest::Approx(0.5 * 0.2 * 0.4 * 0.2).epsilon(1e-13));
  CHECK(f[2] == doctest::Approx(0.5 * 0.2 * 0.6).epsilon(1e-13));
  CHECK(f[3] == doctest::Approx(0.5 * 0.8).epsilon(1e-13));
}

TEST_CASE("dtlz2 dtlz3 dtlz4 spot values") {
  const auto& p2 = find_problem("dtlz2_d2");
  auto x = filled(30, 0.5);
  auto f = evaluate(p2, x);  // theta = pi/4 on the unit circle
  CHECK(f[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(f[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  x[0] = 0.0;
  f = evaluate(p2, x);
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(0.0));

  // dtlz3 shares the shape; rastrigin g vanishes at x_M = 0.5
  const auto& p3 = find_problem("dtlz3_d2");
  f = evaluate(p3, x);
  CHECK(f[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(0.0).epsilon(1e-12));

  // dtlz4 biases via x^100
  const auto& p4 = find_problem("dtlz4_d2");
  x[0] = 0.5;
  f = evaluate(p4, x);
  const double theta = std::pow(0.5, 100.0) * kPi / 2.0;
  CHECK(f[0] == doctest::Approx(std::cos(theta)).epsilon(1e-13));
  CHECK(f[1] == doctest::Approx(std::sin(theta)).epsilon(1e-13));

  // d=4 point with g = 0 sits on the unit sphere
  const auto& p24 = find_problem("dtlz2_d4");
  auto y = filled(30, 0.5);
  y[0] = 0.3;
  y[1] = 0.7;
  y[2] = 0.1;
  f = evaluate(p24, y);
  double norm = 0.0;
  for (double v : f) norm += v * v;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  const double c1 = std::cos(0.3 * kPi / 2), s1 = std::sin(0.3 * kPi / 2);
  const double c2 = std::cos(0.7 * kPi / 2), s2 = std::sin(0.7 * kPi / 2);
  const double c3 = std::cos(0.1 * kPi / 2), s3 = std::sin(0.1 * kPi / 2);
  CHECK(f[0] == doctest::Approx(c1 * c2 * c3).epsilon(1e-13));
  CHECK(f[1] == doctest::Approx(c1 * c2 * s3).epsilon(1e-13));
  CHECK(f[2] == doctest::Approx(c1 * s2).epsilon(1e-13));
  CHECK(f[3] == doctest::Approx(s1).epsilon(1e-13));
}

TEST_CASE("lz09 spot values") {
  const auto& p1 = find_problem("lz09_f1");
  const std::size_t n = 30;
  // on the manifold x_j = x1^(0.5 (1 + 3 (j-2)/(n-2))), f = (x1, 1 - sqrt x1)
  DecisionVector x(n);
  const double x1 = 0.25;
  x[0] = x1;
  for (std::size_t j = 2; j <= n; ++j)
    x[j - 1] = std::pow(
        x1, 0.5 * (1.0 + 3.0 * (double(j) - 2.0) / (double(n) - 2.0)));
  auto f = evaluate(p1, x);
  CHECK(f[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-12));

  // off the manifold, a J1 (odd) index inflates only f1
  auto xo = x;
  xo[2] = std::min(1.0, xo[2] + 0.25);  // j = 3 is odd
  auto fo = evaluate(p1, xo);
  CHECK(fo[0] > f[0]);
  CHECK(fo[1] == doctest::Approx(f[1]).epsilon(1e-12));

  const auto& p2 = find_problem("lz09_f2");
  DecisionVector y(n);
  const double y1 = 0.09;
  y[0] = y1;
  for (std::size_t j = 2; j <= n; ++j)
    y[j - 1] = std::sin(6.0 * kPi * y1 + double(j) * kPi / double(n));
  f = evaluate(p2, y);
  CHECK(f[0] == doctest::Approx(y1).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(1.0 - std::sqrt(y1)).epsilon(1e-12));
}

TEST_CASE("front samples satisfy the analytic relations") {
  Rng rng(5);
  auto front = front_sample(find_problem("zdt1"), 500, rng);
  CHECK(front.size() == 500);
  for (const auto& f : front) {
    CHECK(f[0] >= 0.0);
    CHECK(f[0] <= 1.0);
    CHECK(f[1] == doctest::Approx(1.0 - std::sqrt(f[0])).epsilon(1e-12));
  }
  front = front_sample(find_problem("zdt2"), 500, rng);
  for (const auto& f : front)
    CHECK(f[1] == doctest::Approx(1.0 - f[0] * f[0]).epsilon(1e-12));

  front = front_sample(find_problem("zdt3"), 400, rng);
  for (const auto& f : front)
    CHECK(f[1] == doctest::Approx(1.0 - std::sqrt(f[0]) -
                                  f[0] * std::sin(10.0 * kPi * f[0]))
                      .epsilon(1e-10));
  // the zdt3 front keeps only the nondominated parts of the curve
  for (std::size_t i = 0; i < front.size(); ++i)
    for (std::size_t j = 0; j < front.size(); ++j)
      CHECK_FALSE(dominates(front[i], front[j]));

  front = front_sample(find_problem("zdt6"), 2000, rng);
  double min_f1 = 1.0;
  for (const auto& f : front) {
    CHECK(f[1] == doctest::Approx(1.0 - f[0] * f[0]).epsilon(1e-12));
    min_f1 = std::min(min_f1, f[0]);
  }
  CHECK(min_f1 > 0.2807);  // known zdt6 front lower end ~0.28078
  CHECK(min_f1 < 0.2830);

  front = front_sample(find_problem("lz09_f1"), 300, rng);
  for (const auto& f : front)
    CHECK(f[1] == doctest::Approx(1.0 - std::sqrt(f[0])).epsilon(1e-12));
}

TEST_CASE("dtlz front samples satisfy simplex and sphere constraints") {
  Rng rng(6);
  auto front = front_sample(find_problem("dtlz1_d4"), 300, rng);
  for (const auto& f : front) {
    double sum = 0.0;
    for (double v : f) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(sum == doctest::Approx(0.5).epsilon(1e-12));
  }
  for (const char* name : {"dtlz2_d6", "dtlz3_d2", "dtlz4_d8"}) {
    front = front_sample(find_problem(name), 300, rng);
    for (const auto& f : front) {
      double sq = 0.0;
      for (double v : f) {
        CHECK(v >= 0.0);
        sq += v * v;
      }
      CHECK(sq == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("front sampling is rng-deterministic") {
  const auto& p = find_problem("dtlz2_d4");
  Rng a(9), b(9);
  CHECK(front_sample(p, 100, a) == front_sample(p, 100, b));
  CHECK_THROWS_AS(front_sample(p, 0, a), std::invalid_argument);
}

TEST_CASE("objectives csv format") {
  std::ostringstream os;
  write_objectives_csv(os, {{0.5, 0.25}, {1.0, 0.0}});
  CHECK(os.str() == "0.5,0.25\n1,0\n");
}
