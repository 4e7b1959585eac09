// emofeat/series_stats.hpp

// Copyright 2026  emofeat authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOFEAT_SERIES_STATS_HPP_
#define EMOFEAT_SERIES_STATS_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "emofeat/core.hpp"

namespace emofeat {

/// One frame-level measurement series.
struct FrameSeries {
  std::vector<double> values;
  double hop = 0.01;         // seconds between frames
  double start_time = 0.0;   // time of the first frame
  std::vector<bool> voiced;  // pitch only; empty elsewhere

  double TimeOf(std::size_t i) const { return start_time + hop * static_cast<double>(i); }
};

/// The ten base statistics of one value sequence. Degenerate inputs (empty
/// sequences, zero variance) produce zeros rather than NaNs; `degenerate`
/// records that the fallback fired.
struct SeriesStats {
  double mean = 0, max = 0, min = 0, range = 0, var = 0, med = 0;
  double q1 = 0, q3 = 0, iqr = 0, mean_abs_derivative = 0;
  // extended statistics (pitch series only)
  double skewness = 0, fraction_above_mean = 0, range_above_mean = 0, range_below_mean = 0;
  bool degenerate = false;

  std::vector<double> Base() const {
    return {mean, max, min, range, var, med, q1, q3, iqr, mean_abs_derivative};
  }
  std::vector<double> Extended() const {
    auto v = Base();
    v.insert(v.end(), {skewness, fraction_above_mean, range_above_mean, range_below_mean});
    return v;
  }
};

/// Linear-interpolation quantile on a sorted copy.
inline double Quantile(std::vector<double> sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

/// Statistics of a plain value sequence; extended=true adds skewness and the
/// above/below-mean statistics.
inline SeriesStats ComputeStats(const std::vector<double>& values, bool extended = false) {
  SeriesStats s;
  const std::size_t n = values.size();
  if (n == 0) {
    s.degenerate = true;
    return s;
  }
  s.min = values[0];
  s.max = values[0];
  for (double v : values) {
    s.mean += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean /= static_cast<double>(n);
  s.range = s.max - s.min;
  double m2 = 0, m3 = 0;
  for (double v : values) {
    const double d = v - s.mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  s.var = m2 / static_cast<double>(n);
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  s.med = Quantile(sorted, 0.5);
  s.q1 = Quantile(sorted, 0.25);
  s.q3 = Quantile(sorted, 0.75);
  s.iqr = s.q3 - s.q1;
  if (n >= 2) {
    double acc = 0;
    for (std::size_t i = 1; i < n; ++i) acc += std::abs(values[i] - values[i - 1]);
    s.mean_abs_derivative = acc / static_cast<double>(n - 1);
  }
  if (extended) {
    const double sd = std::sqrt(s.var);
    if (sd > 1e-12) {
      s.skewness = (m3 / static_cast<double>(n)) / (sd * sd * sd);
    } else {
      s.skewness = 0.0;  // zero-variance rule
      s.degenerate = true;
    }
    std::size_t above = 0;
    for (double v : values) {
      if (v > s.mean) ++above;
    }
    s.fraction_above_mean = static_cast<double>(above) / static_cast<double>(n);
    s.range_above_mean = s.max - s.mean;
    s.range_below_mean = s.mean - s.min;
  }
  return s;
}

/// A local extremum is a strict interior turning point of the series, plus
/// the endpoint rule: an endpoint strictly below (above) its single neighbour
/// counts as a minimum (maximum).
struct ExtremaSplit {
  std::vector<double> minima;
  std::vector<double> maxima;
  std::vector<double> extremum_times;  // all extrema in time order
};

inline ExtremaSplit FindExtrema(const std::vector<double>& values,
                                const std::vector<double>& times) {
  ExtremaSplit out;
  const std::size_t n = values.size();
  if (n < 2) {
    return out;
  }
  auto push = [&out, &times](std::size_t i, bool is_min, const std::vector<double>& v) {
    (is_min ? out.minima : out.maxima).push_back(v[i]);
    out.extremum_times.push_back(times[i]);
  };
  if (values[0] < values[1]) push(0, true, values);
  if (values[0] > values[1]) push(0, false, values);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (values[i] < values[i - 1] && values[i] < values[i + 1]) push(i, true, values);
    if (values[i] > values[i - 1] && values[i] > values[i + 1]) push(i, false, values);
  }
  if (values[n - 1] < values[n - 2]) push(n - 1, true, values);
  if (values[n - 1] > values[n - 2]) push(n - 1, false, values);
  return out;
}

/// The four statistic groups of one series: (a) local-minima subsequence,
/// (b) local-maxima subsequence, (c) durations between consecutive local
/// extrema (seconds), (d) the series itself. With fewer than two extrema the
/// durations group falls back to a single value spanning the whole series.
struct SeriesStatGroups {
  SeriesStats minima;
  SeriesStats maxima;
  SeriesStats extrema_durations;
  SeriesStats series;
};

inline SeriesStatGroups SeriesStatistics(const std::vector<double>& values,
                                         const std::vector<double>& times, bool extended) {
  Require(values.size() == times.size(), Errc::kDimensionMismatch,
          "series/time length mismatch");
  SeriesStatGroups g;
  ExtremaSplit extrema = FindExtrema(values, times);
  g.minima = ComputeStats(extrema.minima);
  g.maxima = ComputeStats(extrema.maxima);
  if (extrema.extremum_times.size() >= 2) {
    std::vector<double> durations;
    durations.reserve(extrema.extremum_times.size() - 1);
    for (std::size_t i = 1; i < extrema.extremum_times.size(); ++i) {
      durations.push_back(extrema.extremum_times[i] - extrema.extremum_times[i - 1]);
    }
    g.extrema_durations = ComputeStats(durations);
  } else {
    const double span = values.empty() ? 0.0 : (times.back() - times.front());
    g.extrema_durations = ComputeStats({span});
    g.extrema_durations.degenerate = true;
  }
  g.series = ComputeStats(values, extended);
  return g;
}

/// Convenience overload: uniform frame times from the series layout.
inline SeriesStatGroups SeriesStatistics(const FrameSeries& series, bool extended) {
  std::vector<double> times(series.values.size());
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = series.TimeOf(i);
  return SeriesStatistics(series.values, times, extended);
}

}  // namespace emofeat

#endif  // EMOFEAT_SERIES_STATS_HPP_
