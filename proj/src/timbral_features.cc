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

#include "tailors/timbral_features.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "tailors/error.h"

namespace tailors {

namespace {

// Fraction of total energy in bins whose center frequency satisfies `keep`.
template <typename Pred>
double EnergyRatio(const Spectrum& spectrum, Pred keep) {
  double total = 0.0;
  double selected = 0.0;
  for (std::size_t k = 0; k < spectrum.power.size(); ++k) {
    total += spectrum.power[k];
    if (keep(spectrum.bin_frequency(k))) selected += spectrum.power[k];
  }
  return total > 0.0 ? selected / total : 0.0;
}

// Sharpness weighting for critical-band rate z.
double SharpnessWeight(double z) {
  return z <= 15.8 ? 1.0 : 0.85 * std::exp(0.171 * (z - 15.8));
}

}  // namespace

std::vector<SpectralPeak> SpectralPeaks(const Spectrum& spectrum,
                                        const FeatureConfig& config) {
  const std::size_t n = spectrum.power.size();
  std::vector<SpectralPeak> peaks;
  if (n < 3) return peaks;
  std::vector<double> mag(n);
  std::transform(spectrum.power.begin(), spectrum.power.end(), mag.begin(),
                 [](double p) { return std::sqrt(p); });
  const double max_mag = *std::max_element(mag.begin(), mag.end());
  if (max_mag <= 0.0) return peaks;
  const double floor = max_mag * std::pow(10.0, -config.peak_floor_db / 20.0);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (mag[k] > mag[k - 1] && mag[k] > mag[k + 1] && mag[k] >= floor) {
      peaks.push_back({spectrum.bin_frequency(k), mag[k]});
    }
  }
  // Ties broken by frequency so the order is total.
  std::sort(peaks.begin(), peaks.end(), [](const SpectralPeak& a, const SpectralPeak& b) {
    return a.amplitude != b.amplitude ? a.amplitude > b.amplitude : a.freq < b.freq;
  });
  if (peaks.size() > config.max_peaks) peaks.resize(config.max_peaks);
  return peaks;
}

double PairRoughness(const SpectralPeak& a, const SpectralPeak& b) {
  const double a_min = std::min(a.amplitude, b.amplitude);
  const double a_max = std::max(a.amplitude, b.amplitude);
  if (a_max <= 0.0) return 0.0;
  const double f_min = std::min(a.freq, b.freq);
  const double df = std::abs(a.freq - b.freq);
  const double x = a_min * a_max;
  const double y = 2.0 * a_min / (a_min + a_max);
  const double s = 0.24 / (0.0207 * f_min + 18.96);
  const double z = std::exp(-3.5 * s * df) - std::exp(-5.75 * s * df);
  return std::pow(x, 0.1) * 0.5 * std::pow(y, 3.11) * z;
}

double Roughness(std::span<const SpectralPeak> peaks) {
  double total = 0.0;
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    for (std::size_t j = i + 1; j < peaks.size(); ++j) {
      total += PairRoughness(peaks[i], peaks[j]);
    }
  }
  return total;
}

std::array<double, 24> BarkBandEnergies(const Spectrum& spectrum) {
  std::array<double, 24> bands{};
  for (std::size_t k = 0; k < spectrum.power.size(); ++k) {
    const double f = spectrum.bin_frequency(k);
    const auto it = std::upper_bound(kBarkEdgesHz.begin() + 1, kBarkEdgesHz.end(), f);
    const std::size_t band =
        std::min<std::size_t>(static_cast<std::size_t>(it - kBarkEdgesHz.begin()) - 1, 23);
    bands[band] += spectrum.power[k];
  }
  return bands;
}

double Sharpness(const Spectrum& spectrum) {
  const std::array<double, 24> bands = BarkBandEnergies(spectrum);
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const double z = static_cast<double>(i + 1);
    const double loudness = std::pow(bands[i], 0.23);
    weighted += loudness * SharpnessWeight(z) * z;
    total += loudness;
  }
  return total > 0.0 ? 0.11 * weighted / total : 0.0;
}

double Brightness(const Spectrum& spectrum, const FeatureConfig& config) {
  return EnergyRatio(spectrum, [&](double f) { return f >= config.brightness_min_hz; });
}

double Warmth(const Spectrum& spectrum, const FeatureConfig& config) {
  return EnergyRatio(spectrum, [&](double f) {
    return f >= config.warmth_low_hz && f <= config.warmth_high_hz;
  });
}

double Depth(const Spectrum& spectrum, const FeatureConfig& config) {
  return EnergyRatio(spectrum, [&](double f) { return f < config.depth_max_hz; });
}

double SpectralCentroid(const Spectrum& spectrum) {
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < spectrum.power.size(); ++k) {
    const double mag = std::sqrt(spectrum.power[k]);
    weighted += mag * spectrum.bin_frequency(k);
    total += mag;
  }
  return total > 0.0 ? weighted / total : 0.0;
}

double AttackTerm(std::span<const double> hop_rms, double reference_rms) {
  if (reference_rms <= 0.0) return 0.0;
  double rise = 0.0;
  for (std::size_t i = 1; i < hop_rms.size(); ++i) {
    rise = std::max(rise, hop_rms[i] - hop_rms[i - 1]);
  }
  return rise / reference_rms;
}

double Hardness(std::span<const double> hop_rms, const Spectrum& spectrum) {
  if (hop_rms.size() < 2) {
    throw Error(ErrorKind::kOutOfRange, "hardness needs at least 2 RMS values");
  }
  const double max_rms = *std::max_element(hop_rms.begin(), hop_rms.end());
  const double nyquist = spectrum.nyquist_hz();
  const double centroid = nyquist > 0.0 ? SpectralCentroid(spectrum) / nyquist : 0.0;
  return 0.5 * AttackTerm(hop_rms, max_rms) + 0.5 * centroid;
}

std::vector<double> BlockRms(std::span<const double> samples, std::size_t hop) {
  std::vector<double> rms;
  if (hop == 0) return rms;
  rms.reserve((samples.size() + hop - 1) / hop);
  for (std::size_t start = 0; start < samples.size(); start += hop) {
    const std::size_t len = std::min(hop, samples.size() - start);
    double acc = 0.0;
    for (std::size_t i = start; i < start + len; ++i) acc += samples[i] * samples[i];
    rms.push_back(std::sqrt(acc / len));
  }
  return rms;
}

TimbralTimeSeries ExtractTrackFeatures(const StemPair& stems, const FeatureConfig& config) {
  const AudioBuffer& vocal = stems.vocal;
  const AudioBuffer& background = stems.background;
  if (vocal.sample_rate != background.sample_rate ||
      vocal.samples.size() != background.samples.size()) {
    throw Error(ErrorKind::kSampleRateMismatch, "stems are not a valid pair");
  }
  if (vocal.samples.size() < config.window_size) {
    throw Error(ErrorKind::kAudioTooShort,
                std::to_string(vocal.samples.size()) + " samples, window is " +
                    std::to_string(config.window_size));
  }
  const auto vocal_frames = FrameSignal(vocal, config.window_size, config.hop);
  const auto bg_frames = FrameSignal(background, config.window_size, config.hop);
  const std::vector<double> bg_rms = BlockRms(background.samples, config.hop);
  const double bg_max_rms = *std::max_element(bg_rms.begin(), bg_rms.end());
  const int sr = vocal.sample_rate;

  SpectrumAnalyzer analyzer(config.window_size);
  TimbralTimeSeries series;
  series.hop_seconds = static_cast<double>(config.hop) / sr;
  series.duration_seconds = vocal.duration_seconds();
  series.frames.reserve(vocal_frames.size());
  for (std::size_t k = 0; k < vocal_frames.size(); ++k) {
    TimbralFrame f;
    const Spectrum vs = analyzer.Compute(vocal_frames[k], sr);
    f.vocal_roughness = Roughness(SpectralPeaks(vs, config));
    f.vocal_sharpness = Sharpness(vs);
    f.vocal_warmth = Warmth(vs, config);

    const Spectrum bs = analyzer.Compute(bg_frames[k], sr);
    f.bg_roughness = Roughness(SpectralPeaks(bs, config));
    f.bg_depth = Depth(bs, config);
    f.bg_brightness = Brightness(bs, config);
    f.bg_warmth = Warmth(bs, config);
    // Attack is measured over the blocks inside this window plus the block
    // just before it, normalized by the loudest block of the whole track.
    const std::size_t start = k * config.hop;
    const std::size_t first = k > 0 ? k - 1 : 0;
    const std::size_t last = std::min(
        bg_rms.size(), (start + config.window_size + config.hop - 1) / config.hop);
    const std::span<const double> local(bg_rms.data() + first, last - first);
    const double nyquist = bs.nyquist_hz();
    f.bg_hardness = 0.5 * AttackTerm(local, bg_max_rms) +
                    0.5 * (nyquist > 0.0 ? SpectralCentroid(bs) / nyquist : 0.0);
    series.frames.push_back(f);
  }
  return series;
}

}  // namespace tailors
