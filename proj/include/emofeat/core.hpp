// emofeat/core.hpp

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

#ifndef EMOFEAT_CORE_HPP_
#define EMOFEAT_CORE_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace emofeat {

/// Error codes for every named failure mode in the toolkit. Callers that
/// need to distinguish failures match on code(); the message is for humans.
enum class Errc {
  kMissingFile,
  kDuplicateUtteranceId,
  kUnknownLabel,
  kUnknownFeatureName,
  kNonNumericValue,
  kRowLengthMismatch,
  kUnmappedLabel,
  kDegenerateAlignment,
  kTooFewRowsPerClass,
  kEmptyTrainingSet,
  kSignalTooShort,
  kNoVoicedFrames,
  kNoAudibleSegments,
  kDimensionMismatch,
  kDegenerateClassCount,
  kMissingFeatureColumn,
  kEmptyPredictionSet,
  kEmptyIntersection,
  kEmptyResult,
  kWeakLearnerFailure,
  kParseError,
  kIoError,
  kInvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void Raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void Require(bool ok, Errc code, const std::string& msg) {
  if (!ok) Raise(code, msg);
}

enum class Representation { kUtterance, kSegment };

inline std::string ToString(Representation rep) {
  return rep == Representation::kUtterance ? "utterance" : "segment";
}

inline Representation RepresentationFromString(std::string_view s) {
  if (s == "utterance") return Representation::kUtterance;
  if (s == "segment") return Representation::kSegment;
  Raise(Errc::kParseError, "unknown representation: " + std::string(s));
}

// ---------------------------------------------------------------------------
// Seeding. All randomness in the toolkit flows from one master seed through
// named derivation, so stages stay reproducible under any schedule.

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t Fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Stage seed = f(master seed, stage name). Stage names are stable strings
/// like "folds:berlin:A1" or "ga:gees:A2:run17".
inline std::uint64_t DeriveSeed(std::uint64_t master, std::string_view stage) {
  return SplitMix64(master ^ Fnv1a64(stage));
}

/// Thin RNG wrapper. Distribution helpers are hand-rolled so streams do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  /// Uniform in [0, 1).
  double NextDouble() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be > 0.
  std::size_t NextIndex(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  bool NextBool(double p_true) { return NextDouble() < p_true; }

  /// Standard normal via Box-Muller (one value per call, no caching).
  double NextGaussian() {
    double u1 = NextDouble();
    double u2 = NextDouble();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[NextIndex(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace emofeat

#endif  // EMOFEAT_CORE_HPP_
