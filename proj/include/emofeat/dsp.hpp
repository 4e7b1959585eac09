// emofeat/dsp.hpp

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

#ifndef EMOFEAT_DSP_HPP_
#define EMOFEAT_DSP_HPP_

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "emofeat/core.hpp"

namespace emofeat {

inline constexpr double kPi = 3.14159265358979323846;

struct FrameLayout {
  int frame_samples = 0;
  int hop_samples = 0;
  int frame_count = 0;
};

inline FrameLayout LayoutFrames(std::size_t n_samples, int sample_rate, double frame_s,
                                double hop_s) {
  FrameLayout layout;
  layout.frame_samples = std::max(1, static_cast<int>(std::lround(frame_s * sample_rate)));
  layout.hop_samples = std::max(1, static_cast<int>(std::lround(hop_s * sample_rate)));
  if (n_samples >= static_cast<std::size_t>(layout.frame_samples)) {
    layout.frame_count =
        1 + static_cast<int>((n_samples - static_cast<std::size_t>(layout.frame_samples)) /
                             static_cast<std::size_t>(layout.hop_samples));
  }
  return layout;
}

inline std::vector<double> HammingWindow(int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = 0.54 - 0.46 * std::cos(2.0 * kPi * i / (n - 1));
  }
  return w;
}

/// In-place radix-2 FFT. Size must be a power of two.
inline void Fft(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> step(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= step;
      }
    }
  }
}

inline std::size_t NextPowerOfTwo(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// One second-order IIR section applied in direct form II transposed.
struct Biquad {
  double b0 = 1, b1 = 0, b2 = 0, a1 = 0, a2 = 0;

  void Apply(std::vector<double>& x) const {
    double z1 = 0.0, z2 = 0.0;
    for (double& v : x) {
      const double in = v;
      const double out = b0 * in + z1;
      z1 = b1 * in - a1 * out + z2;
      z2 = b2 * in - a2 * out;
      v = out;
    }
  }
};

namespace dsp_detail {

/// Butterworth lowpass/highpass biquad sections via bilinear transform;
/// `order` must be even.
inline std::vector<Biquad> ButterworthSections(double cutoff_hz, int sample_rate, int order,
                                               bool highpass) {
  Require(order > 0 && order % 2 == 0, Errc::kInvalidArgument, "filter order must be even");
  Require(cutoff_hz > 0 && cutoff_hz < sample_rate / 2.0, Errc::kInvalidArgument,
          "cutoff must lie below Nyquist");
  std::vector<Biquad> sections;
  const double warped = std::tan(kPi * cutoff_hz / sample_rate);
  for (int s = 0; s < order / 2; ++s) {
    // analog prototype pole pair angle
    const double theta = kPi * (2.0 * s + 1.0) / (2.0 * order);
    const double q = 1.0 / (2.0 * std::cos(theta));
    const double k = warped;
    const double norm = 1.0 / (1.0 + k / q + k * k);
    Biquad biq;
    if (!highpass) {
      biq.b0 = k * k * norm;
      biq.b1 = 2.0 * biq.b0;
      biq.b2 = biq.b0;
    } else {
      biq.b0 = 1.0 * norm;
      biq.b1 = -2.0 * biq.b0;
      biq.b2 = biq.b0;
    }
    biq.a1 = 2.0 * (k * k - 1.0) * norm;
    biq.a2 = (1.0 - k / q + k * k) * norm;
    sections.push_back(biq);
  }
  return sections;
}

}  // namespace dsp_detail

/// 4th-order Butterworth band split (roughly 48 dB of rejection two octaves
/// past the cutoff).
inline std::vector<double> ButterworthFilter(std::span<const double> signal, int sample_rate,
                                             double cutoff_hz, bool highpass, int order = 4) {
  std::vector<double> out(signal.begin(), signal.end());
  for (const Biquad& biq :
       dsp_detail::ButterworthSections(cutoff_hz, sample_rate, order, highpass)) {
    biq.Apply(out);
  }
  return out;
}

}  // namespace emofeat

#endif  // EMOFEAT_DSP_HPP_
