#pragma once

#include <functional>
#include <vector>

#include "meixner/polyeval.hpp"

namespace meixner {

// all k zeros of the degree-k stepline polynomial, ascending; throws
// std::runtime_error if bracketing cannot isolate k sign changes
std::vector<double> stepline_zeros(const SteplineSequence& seq, int k);

// real zeros of an explicit low-degree polynomial via companion roots
std::vector<double> poly_real_zeros(const MonicPoly& p);

// rigorous upper bound on |zeros| of the degree-k stepline polynomial,
// from the banded recurrence matrix with diagonal balancing
double zero_bound(const SteplineSequence& seq, int k);

// divisor mapping degree to the zero-counting scale: k for the classical
// family, ceil(k/2) for the two multiple families
double zero_scale(const SteplineSequence& seq, int k);

// true if the two ascending zero lists strictly interlace (sizes must
// differ by exactly one; the longer list brackets the shorter)
bool interlace(const std::vector<double>& lo_deg, const std::vector<double>& hi_deg);

// sup-norm distance between the empirical CDF of sorted samples (each
// carrying total_mass/size) and a model CDF of the same total mass
double ks_distance(const std::vector<double>& sorted_samples, double total_mass,
                   const std::function<double(double)>& cdf);

}  // namespace meixner
