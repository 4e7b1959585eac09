// emofeat/acoustics.hpp

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

#ifndef EMOFEAT_ACOUSTICS_HPP_
#define EMOFEAT_ACOUSTICS_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "emofeat/core.hpp"
#include "emofeat/csv.hpp"
#include "emofeat/dsp.hpp"
#include "emofeat/series_stats.hpp"
#include "emofeat/wav.hpp"

namespace emofeat {

/// Frame-level analysis settings. None of these are dictated by the feature
/// registry; all are exposed in the config file.
struct ExtractionConfig {
  double frame_s = 0.040;           // pitch/intensity frame length
  double hop_s = 0.010;
  double pitch_floor_hz = 60.0;
  double pitch_ceiling_hz = 500.0;
  double voicing_threshold = 0.45;  // normalized autocorrelation peak
  double band_cutoff_hz = 250.0;    // low/high intensity split
  int mel_filters = 26;
  int cepstral_coefficients = 13;   // c0 dropped before aggregation
  double mfcc_frame_s = 0.025;
  double mfcc_hop_s = 0.010;
  std::string mfcc_aggregate = "mean";  // mean | c1 | l2norm over c1..c12
  int lpc_order_offset = 2;         // LPC order = offset + sample_rate/1000
  double formant_max_bandwidth_hz = 400.0;
  double audible_threshold_db = 35.0;  // below the 95th-percentile frame energy
  double min_audible_s = 0.200;
  double silence_floor_db = -120.0;

  void Validate() const {
    Require(frame_s > 0 && hop_s > 0 && mfcc_frame_s > 0 && mfcc_hop_s > 0,
            Errc::kInvalidArgument, "frame and hop lengths must be positive");
    Require(pitch_floor_hz > 0 && pitch_floor_hz < pitch_ceiling_hz, Errc::kInvalidArgument,
            "pitch floor must lie below the ceiling");
    Require(voicing_threshold > 0 && voicing_threshold < 1, Errc::kInvalidArgument,
            "voicing threshold must be in (0,1)");
    Require(band_cutoff_hz > 0, Errc::kInvalidArgument, "band cutoff must be positive");
    Require(mel_filters > 0 && cepstral_coefficients > 1, Errc::kInvalidArgument,
            "mel/cepstral counts must be positive");
    Require(min_audible_s >= 0 && audible_threshold_db > 0, Errc::kInvalidArgument,
            "audibility settings must be positive");
  }
};

inline ExtractionConfig LoadExtractionConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) Raise(Errc::kMissingFile, "cannot open config: " + path);
  ExtractionConfig cfg;
  std::string line;
  std::map<std::string, std::string> kv;
  while (std::getline(in, line)) {
    const std::string t = TrimWhitespace(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) Raise(Errc::kParseError, path + ": expected key = value");
    kv[TrimWhitespace(t.substr(0, eq))] = TrimWhitespace(t.substr(eq + 1));
  }
  auto num = [&kv](const std::string& key, double& field) {
    auto it = kv.find(key);
    if (it != kv.end()) field = ParseDoubleStrict(it->second, Errc::kParseError);
  };
  auto integer = [&kv](const std::string& key, int& field) {
    auto it = kv.find(key);
    if (it != kv.end()) field = static_cast<int>(ParseLongStrict(it->second, Errc::kParseError));
  };
  num("frame_s", cfg.frame_s);
  num("hop_s", cfg.hop_s);
  num("pitch_floor_hz", cfg.pitch_floor_hz);
  num("pitch_ceiling_hz", cfg.pitch_ceiling_hz);
  num("voicing_threshold", cfg.voicing_threshold);
  num("band_cutoff_hz", cfg.band_cutoff_hz);
  integer("mel_filters", cfg.mel_filters);
  integer("cepstral_coefficients", cfg.cepstral_coefficients);
  num("mfcc_frame_s", cfg.mfcc_frame_s);
  num("mfcc_hop_s", cfg.mfcc_hop_s);
  if (kv.count("mfcc_aggregate")) cfg.mfcc_aggregate = kv.at("mfcc_aggregate");
  integer("lpc_order_offset", cfg.lpc_order_offset);
  num("formant_max_bandwidth_hz", cfg.formant_max_bandwidth_hz);
  num("audible_threshold_db", cfg.audible_threshold_db);
  num("min_audible_s", cfg.min_audible_s);
  cfg.Validate();
  return cfg;
}

inline void WriteExtractionConfig(const ExtractionConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) Raise(Errc::kIoError, "cannot write config: " + path);
  out << "frame_s = " << cfg.frame_s << "\nhop_s = " << cfg.hop_s
      << "\npitch_floor_hz = " << cfg.pitch_floor_hz
      << "\npitch_ceiling_hz = " << cfg.pitch_ceiling_hz
      << "\nvoicing_threshold = " << cfg.voicing_threshold
      << "\nband_cutoff_hz = " << cfg.band_cutoff_hz << "\nmel_filters = " << cfg.mel_filters
      << "\ncepstral_coefficients = " << cfg.cepstral_coefficients
      << "\nmfcc_frame_s = " << cfg.mfcc_frame_s << "\nmfcc_hop_s = " << cfg.mfcc_hop_s
      << "\nmfcc_aggregate = " << cfg.mfcc_aggregate
      << "\nlpc_order_offset = " << cfg.lpc_order_offset
      << "\nformant_max_bandwidth_hz = " << cfg.formant_max_bandwidth_hz
      << "\naudible_threshold_db = " << cfg.audible_threshold_db
      << "\nmin_audible_s = " << cfg.min_audible_s << "\n";
}

// ---------------------------------------------------------------------------
// Pitch

/// Per-frame F0 by normalized autocorrelation with parabolic lag refinement.
/// Octave errors are damped by preferring the smallest lag whose peak comes
/// close to the global maximum.
inline FrameSeries ExtractPitchSeries(const AudioSignal& signal, const ExtractionConfig& config) {
  Require(signal.sample_rate >= 8000, Errc::kInvalidArgument, "sample rate must be >= 8 kHz");
  const FrameLayout layout =
      LayoutFrames(signal.samples.size(), signal.sample_rate, config.frame_s, config.hop_s);
  if (layout.frame_count < 2) Raise(Errc::kSignalTooShort, "signal shorter than two frames");

  const int lag_min =
      std::max(1, static_cast<int>(std::floor(signal.sample_rate / config.pitch_ceiling_hz)));
  const int lag_max = static_cast<int>(std::ceil(signal.sample_rate / config.pitch_floor_hz));
  Require(lag_max + 8 < layout.frame_samples, Errc::kInvalidArgument,
          "frame too short for the configured pitch floor");
  const int window = layout.frame_samples - lag_max;

  FrameSeries series;
  series.hop = config.hop_s;
  series.start_time = config.frame_s / 2.0;
  series.values.resize(static_cast<std::size_t>(layout.frame_count), 0.0);
  series.voiced.assign(static_cast<std::size_t>(layout.frame_count), false);

  std::vector<double> nac(static_cast<std::size_t>(lag_max) + 2, 0.0);
  for (int f = 0; f < layout.frame_count; ++f) {
    const double* frame = signal.samples.data() + static_cast<std::size_t>(f) * layout.hop_samples;
    double e0 = 0.0;
    for (int i = 0; i < window; ++i) e0 += frame[i] * frame[i];
    if (e0 <= 1e-12) continue;  // silent frame

    double best_peak = 0.0;
    for (int lag = lag_min; lag <= lag_max; ++lag) {
      double cross = 0.0, e1 = 0.0;
      for (int i = 0; i < window; ++i) {
        cross += frame[i] * frame[i + lag];
        e1 += frame[i + lag] * frame[i + lag];
      }
      const double denom = std::sqrt(e0 * e1);
      nac[static_cast<std::size_t>(lag)] = denom > 1e-12 ? cross / denom : 0.0;
      best_peak = std::max(best_peak, nac[static_cast<std::size_t>(lag)]);
    }
    if (best_peak < config.voicing_threshold) continue;

    // smallest local peak within 2% of the global maximum
    int chosen = -1;
    for (int lag = lag_min; lag <= lag_max; ++lag) {
      const double v = nac[static_cast<std::size_t>(lag)];
      const bool local_peak =
          (lag == lag_min || v >= nac[static_cast<std::size_t>(lag) - 1]) &&
          (lag == lag_max || v >= nac[static_cast<std::size_t>(lag) + 1]);
      if (local_peak && v >= 0.98 * best_peak && v >= config.voicing_threshold) {
        chosen = lag;
        break;
      }
    }
    if (chosen < 0) continue;

    double refined = static_cast<double>(chosen);
    if (chosen > lag_min && chosen < lag_max) {
      const double y0 = nac[static_cast<std::size_t>(chosen) - 1];
      const double y1 = nac[static_cast<std::size_t>(chosen)];
      const double y2 = nac[static_cast<std::size_t>(chosen) + 1];
      const double denom = y0 - 2.0 * y1 + y2;
      if (std::abs(denom) > 1e-12) {
        refined += 0.5 * (y0 - y2) / denom;
      }
    }
    const double f0 = signal.sample_rate / refined;
    if (f0 >= config.pitch_floor_hz && f0 <= config.pitch_ceiling_hz) {
      series.values[static_cast<std::size_t>(f)] = f0;
      series.voiced[static_cast<std::size_t>(f)] = true;
    }
  }
  return series;
}

// ---------------------------------------------------------------------------
// Intensity

enum class IntensityBand { kFull, kLowPass, kHighPass };

/// Per-frame RMS energy in dB relative to full scale; the low/high bands
/// filter the signal at the configured cutoff before framing.
inline FrameSeries ExtractIntensitySeries(const AudioSignal& signal,
                                          const ExtractionConfig& config, IntensityBand band) {
  Require(signal.sample_rate >= 8000, Errc::kInvalidArgument, "sample rate must be >= 8 kHz");
  std::vector<double> samples;
  switch (band) {
    case IntensityBand::kFull:
      samples.assign(signal.samples.begin(), signal.samples.end());
      break;
    case IntensityBand::kLowPass:
      samples = ButterworthFilter(signal.samples, signal.sample_rate, config.band_cutoff_hz, false);
      break;
    case IntensityBand::kHighPass:
      samples = ButterworthFilter(signal.samples, signal.sample_rate, config.band_cutoff_hz, true);
      break;
  }
  const FrameLayout layout =
      LayoutFrames(samples.size(), signal.sample_rate, config.frame_s, config.hop_s);
  if (layout.frame_count < 2) Raise(Errc::kSignalTooShort, "signal shorter than two frames");

  FrameSeries series;
  series.hop = config.hop_s;
  series.start_time = config.frame_s / 2.0;
  series.values.resize(static_cast<std::size_t>(layout.frame_count));
  const double floor_rms = std::pow(10.0, config.silence_floor_db / 20.0);
  for (int f = 0; f < layout.frame_count; ++f) {
    const double* frame = samples.data() + static_cast<std::size_t>(f) * layout.hop_samples;
    double acc = 0.0;
    for (int i = 0; i < layout.frame_samples; ++i) acc += frame[i] * frame[i];
    const double rms = std::sqrt(acc / layout.frame_samples);
    series.values[static_cast<std::size_t>(f)] = 20.0 * std::log10(std::max(rms, floor_rms));
  }
  return series;
}

// ---------------------------------------------------------------------------
// MFCC

namespace acoustics_detail {

inline double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
inline double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

}  // namespace acoustics_detail

/// One scalar per frame: an aggregate of cepstral coefficients c1..c12 (c0 is
/// dropped), so the series-statistics machinery sees a single MFCC series.
/// The aggregate is configurable: mean, c1, or the L2 norm.
inline FrameSeries ExtractMfccSeries(const AudioSignal& signal, const ExtractionConfig& config) {
  using namespace acoustics_detail;
  Require(signal.sample_rate >= 8000, Errc::kInvalidArgument, "sample rate must be >= 8 kHz");
  const FrameLayout layout =
      LayoutFrames(signal.samples.size(), signal.sample_rate, config.mfcc_frame_s,
                   config.mfcc_hop_s);
  if (layout.frame_count < 2) Raise(Errc::kSignalTooShort, "signal shorter than two frames");

  const std::size_t fft_size = NextPowerOfTwo(static_cast<std::size_t>(layout.frame_samples));
  const std::size_t bins = fft_size / 2 + 1;
  const std::vector<double> window = HammingWindow(layout.frame_samples);

  // triangular mel filterbank
  const int n_filters = config.mel_filters;
  const double mel_lo = HzToMel(0.0);
  const double mel_hi = HzToMel(signal.sample_rate / 2.0);
  std::vector<double> centers(static_cast<std::size_t>(n_filters) + 2);
  for (int m = 0; m < n_filters + 2; ++m) {
    centers[static_cast<std::size_t>(m)] =
        MelToHz(mel_lo + (mel_hi - mel_lo) * m / (n_filters + 1));
  }
  auto bin_freq = [&](std::size_t b) {
    return static_cast<double>(b) * signal.sample_rate / static_cast<double>(fft_size);
  };

  FrameSeries series;
  series.hop = config.mfcc_hop_s;
  series.start_time = config.mfcc_frame_s / 2.0;
  series.values.resize(static_cast<std::size_t>(layout.frame_count));

  const int n_ceps = config.cepstral_coefficients;
  std::vector<std::complex<double>> spectrum(fft_size);
  std::vector<double> filter_energy(static_cast<std::size_t>(n_filters));
  for (int f = 0; f < layout.frame_count; ++f) {
    const double* frame = signal.samples.data() + static_cast<std::size_t>(f) * layout.hop_samples;
    for (std::size_t i = 0; i < fft_size; ++i) {
      spectrum[i] = i < static_cast<std::size_t>(layout.frame_samples)
                        ? std::complex<double>(frame[i] * window[i], 0.0)
                        : std::complex<double>(0.0, 0.0);
    }
    Fft(spectrum);
    // power spectrum through the filterbank
    for (int m = 0; m < n_filters; ++m) {
      const double lo = centers[static_cast<std::size_t>(m)];
      const double mid = centers[static_cast<std::size_t>(m) + 1];
      const double hi = centers[static_cast<std::size_t>(m) + 2];
      double acc = 0.0;
      for (std::size_t b = 0; b < bins; ++b) {
        const double freq = bin_freq(b);
        double w = 0.0;
        if (freq > lo && freq < mid) {
          w = (freq - lo) / (mid - lo);
        } else if (freq >= mid && freq < hi) {
          w = (hi - freq) / (hi - mid);
        }
        if (w > 0.0) acc += w * std::norm(spectrum[b]);
      }
      filter_energy[static_cast<std::size_t>(m)] = std::log(std::max(acc, 1e-12));
    }
    // DCT-II to cepstra c0..c{n-1}; aggregate c1..c{n-1}
    double mean_acc = 0.0, l2_acc = 0.0, c1 = 0.0;
    for (int c = 1; c < n_ceps; ++c) {
      double coeff = 0.0;
      for (int m = 0; m < n_filters; ++m) {
        coeff += filter_energy[static_cast<std::size_t>(m)] *
                 std::cos(kPi * c * (m + 0.5) / n_filters);
      }
      if (c == 1) c1 = coeff;
      mean_acc += coeff;
      l2_acc += coeff * coeff;
    }
    double value;
    if (config.mfcc_aggregate == "c1") {
      value = c1;
    } else if (config.mfcc_aggregate == "l2norm") {
      value = std::sqrt(l2_acc);
    } else {
      value = mean_acc / static_cast<double>(n_ceps - 1);
    }
    series.values[static_cast<std::size_t>(f)] = value;
  }
  return series;
}

// ---------------------------------------------------------------------------
// Formants

struct FormantStats {
  // stat-major, matching the registry layout: mean, std, max, min, range x F1..F3
  std::vector<double> values;  // 15 entries
};

namespace acoustics_detail {

/// Levinson-Durbin solve of the LPC normal equations from autocorrelation.
inline std::vector<double> LpcCoefficients(const std::vector<double>& frame, int order) {
  std::vector<double> r(static_cast<std::size_t>(order) + 1, 0.0);
  for (int lag = 0; lag <= order; ++lag) {
    double acc = 0.0;
    for (std::size_t i = static_cast<std::size_t>(lag); i < frame.size(); ++i) {
      acc += frame[i] * frame[i - static_cast<std::size_t>(lag)];
    }
    r[static_cast<std::size_t>(lag)] = acc;
  }
  if (r[0] <= 1e-12) return {};
  std::vector<double> a(static_cast<std::size_t>(order) + 1, 0.0);
  a[0] = 1.0;
  double err = r[0];
  for (int i = 1; i <= order; ++i) {
    double acc = r[static_cast<std::size_t>(i)];
    for (int j = 1; j < i; ++j) acc += a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(i - j)];
    const double k = -acc / err;
    std::vector<double> prev = a;
    for (int j = 1; j < i; ++j) {
      a[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j)] +
                                       k * prev[static_cast<std::size_t>(i - j)];
    }
    a[static_cast<std::size_t>(i)] = k;
    err *= (1.0 - k * k);
    if (err <= 0.0) return {};
  }
  return a;
}

/// Durand-Kerner iteration for the roots of a real polynomial
/// a0 + a1 z + ... + an z^n (an != 0).
inline std::vector<std::complex<double>> PolynomialRoots(const std::vector<double>& coeffs) {
  const std::size_t degree = coeffs.size() - 1;
  std::vector<std::complex<double>> monic(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    monic[i] = std::complex<double>(coeffs[i] / coeffs[degree], 0.0);
  }
  std::vector<std::complex<double>> roots(degree);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> power(1.0, 0.0);
  for (std::size_t i = 0; i < degree; ++i) {
    power *= seed;
    roots[i] = power;
  }
  for (int iter = 0; iter < 200; ++iter) {
    double shift = 0.0;
    for (std::size_t i = 0; i < degree; ++i) {
      // evaluate monic polynomial at roots[i]
      std::complex<double> value(1.0, 0.0);
      for (std::size_t c = degree; c-- > 0;) value = value * roots[i] + monic[c];
      std::complex<double> denom(1.0, 0.0);
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      if (std::abs(denom) < 1e-18) continue;
      const std::complex<double> delta = value / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-12) break;
  }
  return roots;
}

}  // namespace acoustics_detail

/// F1/F2/F3 statistics from LPC root frequencies on voiced frames. Roots with
/// bandwidth above the configured ceiling are discarded; the lowest three
/// in-range frequencies per frame become the frame's formants.
inline FormantStats ExtractFormants(const AudioSignal& signal, const ExtractionConfig& config,
                                    const FrameSeries* pitch = nullptr) {
  using namespace acoustics_detail;
  Require(signal.sample_rate >= 8000, Errc::kInvalidArgument, "sample rate must be >= 8 kHz");
  FrameSeries voicing;
  if (pitch == nullptr) {
    voicing = ExtractPitchSeries(signal, config);
    pitch = &voicing;
  }
  const FrameLayout layout =
      LayoutFrames(signal.samples.size(), signal.sample_rate, config.frame_s, config.hop_s);
  const int order = config.lpc_order_offset + signal.sample_rate / 1000;

  std::vector<double> f1, f2, f3;
  std::vector<double> frame(static_cast<std::size_t>(layout.frame_samples));
  const std::vector<double> window = HammingWindow(layout.frame_samples);
  for (int f = 0; f < layout.frame_count && f < static_cast<int>(pitch->voiced.size()); ++f) {
    if (!pitch->voiced[static_cast<std::size_t>(f)]) continue;
    const double* src = signal.samples.data() + static_cast<std::size_t>(f) * layout.hop_samples;
    // pre-emphasis flattens the glottal tilt before LPC
    frame[0] = src[0] * window[0];
    for (int i = 1; i < layout.frame_samples; ++i) {
      frame[static_cast<std::size_t>(i)] = (src[i] - 0.97 * src[i - 1]) * window[static_cast<std::size_t>(i)];
    }
    std::vector<double> lpc = LpcCoefficients(frame, order);
    if (lpc.empty()) continue;
    // roots of A(z) in descending-power form a0 z^n + ...: reverse to a0 + a1 z + ...
    std::vector<double> poly(lpc.rbegin(), lpc.rend());
    std::vector<std::complex<double>> roots = PolynomialRoots(poly);
    std::vector<double> freqs;
    for (const auto& root : roots) {
      if (root.imag() <= 0.0) continue;  // keep one of each conjugate pair
      const double magnitude = std::abs(root);
      if (magnitude >= 1.0 || magnitude < 1e-6) continue;
      const double freq = std::arg(root) * signal.sample_rate / (2.0 * kPi);
      const double bandwidth = -std::log(magnitude) * signal.sample_rate / kPi;
      if (freq < 90.0 || freq > signal.sample_rate / 2.0 - 50.0) continue;
      if (bandwidth > config.formant_max_bandwidth_hz) continue;
      freqs.push_back(freq);
    }
    if (freqs.size() < 3) continue;
    std::sort(freqs.begin(), freqs.end());
    f1.push_back(freqs[0]);
    f2.push_back(freqs[1]);
    f3.push_back(freqs[2]);
  }
  if (f1.empty()) Raise(Errc::kNoVoicedFrames, "no voiced frames with three formants");

  FormantStats out;
  auto stat_block = [&out](const std::vector<double>& v, int which) {
    SeriesStats s = ComputeStats(v);
    switch (which) {
      case 0: out.values.push_back(s.mean); break;
      case 1: out.values.push_back(std::sqrt(s.var)); break;
      case 2: out.values.push_back(s.max); break;
      case 3: out.values.push_back(s.min); break;
      default: out.values.push_back(s.range); break;
    }
  };
  for (int which = 0; which < 5; ++which) {
    stat_block(f1, which);
    stat_block(f2, which);
    stat_block(f3, which);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Segments and duration features

struct SegmentSpan {
  double start = 0.0;  // seconds
  double end = 0.0;
  bool audible = false;

  double duration() const { return end - start; }
};

/// Splits the signal into alternating audible/inaudible spans. A frame is
/// audible when its energy sits within `audible_threshold_db` of the
/// utterance's 95th-percentile frame energy; audible runs shorter than the
/// minimum duration are demoted.
inline std::vector<SegmentSpan> DetectSegments(const AudioSignal& signal,
                                               const ExtractionConfig& config) {
  const FrameLayout layout =
      LayoutFrames(signal.samples.size(), signal.sample_rate, config.frame_s, config.hop_s);
  const double total = signal.duration();
  if (layout.frame_count < 1) {
    return {SegmentSpan{0.0, std::max(total, 1e-9), false}};
  }
  FrameSeries energy = ExtractIntensitySeries(signal, config, IntensityBand::kFull);
  std::vector<double> sorted = energy.values;
  std::sort(sorted.begin(), sorted.end());
  const double reference = Quantile(sorted, 0.95);
  const double threshold = reference - config.audible_threshold_db;
  const double silence_guard = config.silence_floor_db + 1.0;

  std::vector<bool> audible(energy.values.size());
  for (std::size_t f = 0; f < energy.values.size(); ++f) {
    audible[f] = energy.values[f] > threshold && energy.values[f] > silence_guard;
  }
  // demote audible runs shorter than the minimum
  const int min_frames = std::max(1, static_cast<int>(std::lround(config.min_audible_s / config.hop_s)));
  std::size_t f = 0;
  while (f < audible.size()) {
    if (!audible[f]) {
      ++f;
      continue;
    }
    std::size_t end = f;
    while (end < audible.size() && audible[end]) ++end;
    if (static_cast<int>(end - f) < min_frames) {
      for (std::size_t i = f; i < end; ++i) audible[i] = false;
    }
    f = end;
  }

  std::vector<SegmentSpan> spans;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= audible.size(); ++i) {
    if (i == audible.size() || audible[i] != audible[start]) {
      SegmentSpan span;
      span.start = static_cast<double>(start) * config.hop_s;
      span.end = i == audible.size() ? total : static_cast<double>(i) * config.hop_s;
      span.audible = audible[start];
      if (span.end > span.start) spans.push_back(span);
      start = i;
    }
  }
  if (spans.empty()) spans.push_back(SegmentSpan{0.0, std::max(total, 1e-9), false});
  return spans;
}

struct DurationFeatures {
  std::vector<double> values;  // 23, registry order
  bool degenerate = false;     // a zero-denominator ratio fired
};

/// The 23 duration features. Frame counts derive from span durations at the
/// configured hop; ratios with empty denominators emit 0 and set the flag.
inline DurationFeatures ExtractDurationFeatures(const std::vector<SegmentSpan>& spans,
                                                double total_duration, double hop_s) {
  std::vector<double> aud, inaud;
  for (const auto& span : spans) {
    (span.audible ? aud : inaud).push_back(span.duration());
  }
  DurationFeatures out;
  bool flag = false;
  auto ratio = [&flag](double num, double den) {
    if (den == 0.0) {
      flag = true;
      return 0.0;
    }
    return num / den;
  };
  auto sum = [](const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  };
  SeriesStats aud_stats = ComputeStats(aud);
  SeriesStats inaud_stats = ComputeStats(inaud);
  const double aud_total = sum(aud);
  const double inaud_total = sum(inaud);
  const double aud_frames = hop_s > 0 ? std::round(aud_total / hop_s) : 0.0;
  const double inaud_frames = hop_s > 0 ? std::round(inaud_total / hop_s) : 0.0;
  const double n_aud = static_cast<double>(aud.size());
  const double n_inaud = static_cast<double>(inaud.size());

  out.values = {
      aud_stats.mean,
      aud_stats.max,
      aud_stats.min,
      std::sqrt(aud_stats.var),
      inaud_stats.mean,
      inaud_stats.max,
      inaud_stats.min,
      std::sqrt(inaud_stats.var),
      n_aud,
      n_inaud,
      aud_frames,
      inaud_frames,
      aud_stats.max,   // longest audible segment
      inaud_stats.max, // longest inaudible segment
      ratio(aud_frames, inaud_frames),
      ratio(n_aud, n_inaud),
      ratio(aud_frames, aud_frames + inaud_frames),
      ratio(n_aud, n_aud + n_inaud),
      ratio(aud_frames, n_aud),
      ratio(aud_total, inaud_total),
      ratio(aud_total, total_duration),
      ratio(inaud_total, total_duration),
      ratio(aud_stats.mean, inaud_stats.mean),
  };
  out.degenerate = flag || aud.empty() || inaud.empty();
  return out;
}

}  // namespace emofeat

#endif  // EMOFEAT_ACOUSTICS_HPP_
