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

// WAV decoding, stem pairing and short-time power spectra.

#ifndef TAILORS_AUDIO_IO_H_
#define TAILORS_AUDIO_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

namespace tailors {

// Analysis resolution shared by every extractor.
inline constexpr std::size_t kDefaultWindowSize = 4096;
inline constexpr std::size_t kDefaultHopSize = 1024;

// Decoded mono PCM. Samples lie in [-1, 1].
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Vocal and background stems of one track, time-aligned at t = 0 and of equal
// length.
struct StemPair {
  AudioBuffer vocal;
  AudioBuffer background;
};

// One-sided power spectrum of a Hann-windowed frame. power[k] = |X_k|^2 with
// the unnormalized DFT, so that
//   power[0] + power[N/2] + 2 * sum_{0<k<N/2} power[k] = N * sum (w[n] x[n])^2.
struct Spectrum {
  std::vector<double> power;
  double bin_hz = 0.0;
  std::size_t window_size = 0;

  double bin_frequency(std::size_t k) const { return bin_hz * k; }
  double nyquist_hz() const { return bin_hz * window_size / 2.0; }
};

// Decodes RIFF/WAVE PCM (16 or 24 bit, 1-2 channels, 44.1 or 48 kHz). Stereo
// is downmixed by the channel mean and integer samples are divided by
// 2^(bits-1). Throws Error{kMalformedHeader, kUnsupportedFormat,
// kTruncatedData}.
AudioBuffer DecodeWav(std::span<const std::uint8_t> bytes);

// Reads and decodes `path`. Throws Error{kFileNotFound} when it cannot be
// opened, otherwise as DecodeWav.
AudioBuffer LoadWav(const std::filesystem::path& path);

// Writes 16-bit mono PCM. Samples are scaled by 32768 and clamped to the
// integer range, so any multiple of 1/32768 round-trips exactly.
void WriteWav16(const std::filesystem::path& path, const AudioBuffer& buffer);

// Pairs two decoded stems. The shorter one is zero-padded at the tail.
// Throws Error{kSampleRateMismatch}.
StemPair MakeStemPair(AudioBuffer vocal, AudioBuffer background);

StemPair LoadStemPair(const std::filesystem::path& vocal_path,
                      const std::filesystem::path& background_path);

// floor((n - window) / hop) + 1, or 0 when window > n.
std::size_t FrameCount(std::size_t num_samples, std::size_t window_size,
                       std::size_t hop);

// Views of samples [k*hop, k*hop + window) for every full frame. The views
// borrow from `buffer`. Throws Error{kWindowTooLarge} if window exceeds the
// signal and Error{kOutOfRange} unless 0 < hop <= window.
std::vector<std::span<const double>> FrameSignal(const AudioBuffer& buffer,
                                                 std::size_t window_size,
                                                 std::size_t hop);

// Reusable FFT state for one window size. Not thread-safe; use one analyzer
// per thread.
class SpectrumAnalyzer {
 public:
  explicit SpectrumAnalyzer(std::size_t window_size);
  ~SpectrumAnalyzer();
  SpectrumAnalyzer(SpectrumAnalyzer&&) noexcept;
  SpectrumAnalyzer& operator=(SpectrumAnalyzer&&) noexcept;
  SpectrumAnalyzer(const SpectrumAnalyzer&) = delete;
  SpectrumAnalyzer& operator=(const SpectrumAnalyzer&) = delete;

  std::size_t window_size() const;

  // Hann-windowed power spectrum. frame.size() must equal window_size().
  Spectrum Compute(std::span<const double> frame, int sample_rate);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Convenience wrapper that builds a one-shot analyzer.
Spectrum PowerSpectrum(std::span<const double> frame, int sample_rate);

}  // namespace tailors

#endif  // TAILORS_AUDIO_IO_H_
