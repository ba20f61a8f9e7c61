// Copyright 2026 The Tailors Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Per-frame timbral descriptors for the vocal and background stems.
//
// Every extractor works on the one-sided power spectrum of a Hann-windowed
// frame. Constants live in FeatureConfig so they can be retuned from a config
// file without touching the formulas.

#ifndef TAILORS_TIMBRAL_FEATURES_H_
#define TAILORS_TIMBRAL_FEATURES_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tailors/audio_io.h"

namespace tailors {

// Zwicker's 24 critical bands, edges in Hz. Band z (1-based) spans
// [kBarkEdgesHz[z-1], kBarkEdgesHz[z]). Energy above the last edge is folded
// into band 24.
inline constexpr std::array<double, 25> kBarkEdgesHz = {
    0,    100,  200,  300,  400,  510,  630,  770,  920,  1080, 1270, 1480, 1720,
    2000, 2320, 2700, 3150, 3700, 4400, 5300, 6400, 7700, 9500, 12000, 15500};

struct FeatureConfig {
  std::size_t window_size = kDefaultWindowSize;
  std::size_t hop = kDefaultHopSize;
  // Peaks weaker than this many dB below the frame maximum are ignored.
  double peak_floor_db = 60.0;
  std::size_t max_peaks = 32;
  double brightness_min_hz = 1500.0;
  double warmth_low_hz = 50.0;
  double warmth_high_hz = 700.0;
  double depth_max_hz = 200.0;
};

struct SpectralPeak {
  double freq = 0.0;       // Hz, bin center
  double amplitude = 0.0;  // linear magnitude
};

// Raw (pre-normalization) scores for one analysis hop.
struct TimbralFrame {
  double vocal_roughness = 0.0;
  double vocal_sharpness = 0.0;
  double vocal_warmth = 0.0;
  double bg_roughness = 0.0;
  double bg_depth = 0.0;
  double bg_brightness = 0.0;
  double bg_hardness = 0.0;
  double bg_warmth = 0.0;

  bool operator==(const TimbralFrame&) const = default;
};

struct TimbralTimeSeries {
  std::vector<TimbralFrame> frames;
  // Frame k describes the window starting at k * hop_seconds.
  double hop_seconds = 0.0;
  // Length of the source audio.
  double duration_seconds = 0.0;
};

// Strict local maxima of the magnitude spectrum within peak_floor_db of the
// global maximum, largest first, at most max_peaks. DC and Nyquist bins are
// never peaks.
std::vector<SpectralPeak> SpectralPeaks(const Spectrum& spectrum,
                                        const FeatureConfig& config = {});

// Sensory roughness of a set of partials (Vassilakis). Summed over unordered
// pairs:
//   (Amin*Amax)^0.1 * 0.5 * (2*Amin/(Amin+Amax))^3.11
//     * (exp(-3.5*s*df) - exp(-5.75*s*df)),  s = 0.24 / (0.0207*fmin + 18.96)
double Roughness(std::span<const SpectralPeak> peaks);

// Roughness contribution of a single pair of partials.
double PairRoughness(const SpectralPeak& a, const SpectralPeak& b);

// Bark-weighted sharpness, 0.11 * sum N'(z) g(z) z / sum N'(z) with
// N'(z) = E_z^0.23. Zero for silence.
double Sharpness(const Spectrum& spectrum);

// Per-band energy over the 24 critical bands (index 0 is band z = 1).
std::array<double, 24> BarkBandEnergies(const Spectrum& spectrum);

// Fraction of energy at or above brightness_min_hz.
double Brightness(const Spectrum& spectrum, const FeatureConfig& config = {});

// Fraction of energy within [warmth_low_hz, warmth_high_hz].
double Warmth(const Spectrum& spectrum, const FeatureConfig& config = {});

// Fraction of energy below depth_max_hz.
double Depth(const Spectrum& spectrum, const FeatureConfig& config = {});

// Magnitude-weighted mean frequency in Hz; 0 for silence.
double SpectralCentroid(const Spectrum& spectrum);

// Largest positive step between consecutive RMS values divided by
// reference_rms. 0 when reference_rms is 0.
double AttackTerm(std::span<const double> hop_rms, double reference_rms);

// 0.5 * attack + 0.5 * centroid / nyquist, with the attack normalized by the
// largest value in hop_rms. Requires at least two RMS values.
double Hardness(std::span<const double> hop_rms, const Spectrum& spectrum);

// RMS of consecutive hop-sized blocks; a partial tail block is included.
std::vector<double> BlockRms(std::span<const double> samples, std::size_t hop);

// One TimbralFrame per analysis hop. Vocal features are computed on the vocal
// stem only and background features on the background stem only. Throws
// Error{kAudioTooShort} if the stems are shorter than one window.
TimbralTimeSeries ExtractTrackFeatures(const StemPair& stems,
                                       const FeatureConfig& config = {});

}  // namespace tailors

#endif  // TAILORS_TIMBRAL_FEATURES_H_
