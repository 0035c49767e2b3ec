#pragma once

#include <cstddef>
#include <vector>

namespace xtruct {

double mean(const std::vector<double>& xs);

// Sample standard deviation; 0 for fewer than two values.
double sample_stdev(const std::vector<double>& xs);

// Upper tail of the chi-squared distribution: P(X >= stat) with df degrees
// of freedom. Regularized incomplete gamma Q(df/2, stat/2).
double chi_sq_p_value(double stat, int df);

// Nearest-rank percentile (q in [0,1]) of an unsorted sample.
double percentile(std::vector<double> xs, double q);

} // namespace xtruct
