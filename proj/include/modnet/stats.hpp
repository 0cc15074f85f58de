#pragma once

#include <cstddef>
#include <vector>

namespace modnet {

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double stderr_mean = 0.0;
};

Summary summarize(const std::vector<double>& values);

struct Interval {
  double low = 0.0;
  double high = 0.0;
  bool contains(double x) const { return low <= x && x <= high; }
};

// Wilson 95% score interval for a binomial proportion.
Interval wilson_interval(std::size_t successes, std::size_t trials);

// Normal-approximation 95% confidence interval for a mean.
Interval normal_interval(const Summary& s);

// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

// P(X >= statistic) for X ~ chi-square with `dof` degrees of freedom.
double chi_square_p_value(double statistic, int dof);

// Pearson statistic and p-value for observed counts against uniform (or
// given) expected counts.
double chi_square_statistic(const std::vector<double>& observed,
                            const std::vector<double>& expected);

}  // namespace modnet
