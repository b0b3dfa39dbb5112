#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace deviant::fixtures {

inline const std::vector<double> kBarnett{3, 4, 7, 8, 10, 949, 951};
inline const std::vector<double> kBarnettRdd{20.41, 20.30, 20.16, 20.16, 20.28, 1534.55, 1538.79};

inline const std::vector<double> kS1{3.1, 2.9, 2.85, 3,   3.05, 2.9, 3.2, 5.2,  8.5, 5.4,
                                     5.3, 5.1, 3.1,  3.05, 3,   2.99, 3,  3.02, 3.2};
inline const std::vector<double> kS1Rdd{0.001,  0.025,  0.061,  0.018, 0.031, 0.067, 0.138,
                                        17.956, 27.693, 23.879, 18.482, 14.609, 0.021, 0.003,
                                        0.005,  0.006,  0.008,  0.010, 0.002};

struct ReferenceColumn {
  std::string name;
  std::vector<double> data;
  std::vector<double> rdd;
  std::vector<double> expected_outliers;  ///< values, not indices
};

inline const std::vector<ReferenceColumn> kReferenceColumns{
    {"ROSNER",
     {40, 75, 80, 83, 86, 88, 90, 92, 93, 95},
     {167.84, 3.76, 1.30, 0.74, 0.56, 0.60, 0.76, 1.08, 1.34, 2.10},
     {40}},
    {"GRUBBS1",
     {568, 570, 570, 570, 572, 572, 572, 578, 584, 596},
     {1.11, 0.52, 0.52, 0.52, 0.43, 0.43, 0.43, 2.42, 11.67, 78.95},
     {596}},
    {"GRUBBS3",
     {2.02, 2.22, 3.04, 3.23, 3.59, 3.73, 3.94, 4.05, 4.11, 4.13},
     {3.72, 3.00, 0.47, 0.28, 0.15, 0.14, 0.17, 0.21, 0.24, 0.25},
     {2.02, 2.22}},
    {"CHSHNY",
     {0, 0.8, 1, 1.2, 1.3, 1.3, 1.4, 1.8, 2.4, 4.6},
     {0.92, 0.15, 0.09, 0.06, 0.05, 0.05, 0.06, 0.13, 0.57, 11.60},
     {4.6}},
};

/// One period of a sine over x = 0..47 with a low patch at 7..10 and a high
/// patch at 28..32.
inline std::vector<double> patched_sine() {
  std::vector<double> y(48);
  for (std::size_t x = 0; x < y.size(); ++x)
    y[x] = std::sin(2.0 * std::numbers::pi * static_cast<double>(x) / 47.0);
  for (std::size_t x = 7; x <= 10; ++x) y[x] -= 1.0;
  for (std::size_t x = 28; x <= 32; ++x) y[x] += 2.0;
  return y;
}

inline const std::vector<std::size_t> kSinePatch{7, 8, 9, 10, 28, 29, 30, 31, 32};

/// Top of the rdd ranking: 1-based position and printed value.
struct RankedScore {
  std::size_t position;
  double rdd;
};
inline const std::vector<RankedScore> kSineTop9{{29, 11.6}, {33, 11.6}, {30, 11.5},
                                                {32, 11.5}, {31, 11.4}, {8, 5.7},
                                                {11, 5.6},  {9, 5.6},   {10, 5.6}};

}  // namespace deviant::fixtures
