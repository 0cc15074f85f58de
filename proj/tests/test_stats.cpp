#include <cmath>
#include <vector>

#include "doctest.h"
#include "modnet/stats.hpp"

using namespace modnet;

TEST_CASE("summary statistics") {
  Summary s = summarize({1.0, 2.0, 3.0, 4.0});
  CHECK(s.count == 4);
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(s.stderr_mean == doctest::Approx(std::sqrt(5.0 / 3.0) / 2));

  Summary one = summarize({7.0});
  CHECK(one.mean == 7.0);
  CHECK(one.stddev == 0.0);
}

TEST_CASE("Wilson interval reference values") {
  Interval i = wilson_interval(5, 10);
  CHECK(i.low == doctest::Approx(0.236593090512564).epsilon(1e-9));
  CHECK(i.high == doctest::Approx(0.7634069094874361).epsilon(1e-9));
  CHECK(i.contains(0.5));

  Interval zero = wilson_interval(0, 20);
  CHECK(std::abs(zero.low) < 1e-12);
  CHECK(zero.high == doctest::Approx(0.16112515805281938).epsilon(1e-9));

  Interval all = wilson_interval(20, 20);
  CHECK(all.high == doctest::Approx(1.0));
  CHECK(all.low > 0.8);
}

TEST_CASE("normal interval brackets the mean") {
  Summary s = summarize({1.0, 2.0, 3.0, 4.0, 5.0});
  Interval i = normal_interval(s);
  CHECK(i.contains(s.mean));
  CHECK(i.high - s.mean == doctest::Approx(s.mean - i.low));
  CHECK(i.high - i.low ==
        doctest::Approx(2 * 1.959963984540054 * s.stderr_mean));
}

TEST_CASE("upper incomplete gamma") {
  // Q(1, x) = exp(-x)
  for (double x : {0.1, 1.0, 3.0}) {
    CHECK(gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-10));
  }
  CHECK(gamma_q(2.5, 1.0) ==
        doctest::Approx(0.8491450360846096).epsilon(1e-9));
  CHECK(gamma_q(1.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("chi-square tail probabilities") {
  // dof 2: survival is exp(-x/2)
  CHECK(chi_square_p_value(4.0, 2) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
  CHECK(chi_square_p_value(3.841, 1) ==
        doctest::Approx(0.050013683763956804).epsilon(1e-7));
  CHECK(chi_square_p_value(30.144, 19) ==
        doctest::Approx(0.04999416799668142).epsilon(1e-7));
  CHECK(chi_square_p_value(0.0, 5) == doctest::Approx(1.0));
}

TEST_CASE("Pearson statistic") {
  // observed (10, 20, 30) against uniform 20s: 25/20 + 0 + 100/20... by hand:
  // (10-20)^2/20 + 0 + (30-20)^2/20 = 10
  CHECK(chi_square_statistic({10, 20, 30}, {20, 20, 20}) ==
        doctest::Approx(10.0));
  CHECK(chi_square_statistic({5, 5}, {5, 5}) == doctest::Approx(0.0));
}
