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

#include "tailors/audio_io.h"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "tailors/error.h"

namespace tailors {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t ReadU16(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint16_t>(b[off] | (b[off + 1] << 8));
}

std::uint32_t ReadU32(std::span<const std::uint8_t> b, std::size_t off) {
  return static_cast<std::uint32_t>(b[off]) |
         (static_cast<std::uint32_t>(b[off + 1]) << 8) |
         (static_cast<std::uint32_t>(b[off + 2]) << 16) |
         (static_cast<std::uint32_t>(b[off + 3]) << 24);
}

bool TagIs(std::span<const std::uint8_t> b, std::size_t off, const char* tag) {
  return std::memcmp(b.data() + off, tag, 4) == 0;
}

struct FormatChunk {
  int channels = 0;
  int sample_rate = 0;
  int bits = 0;
};

FormatChunk ParseFormat(std::span<const std::uint8_t> chunk) {
  if (chunk.size() < 16) {
    throw Error(ErrorKind::kMalformedHeader, "fmt chunk shorter than 16 bytes");
  }
  std::uint16_t format = ReadU16(chunk, 0);
  if (format == kFormatExtensible) {
    if (chunk.size() < 26) {
      throw Error(ErrorKind::kMalformedHeader, "truncated WAVE_FORMAT_EXTENSIBLE");
    }
    // First two bytes of the subformat GUID carry the codec tag.
    format = ReadU16(chunk, 24);
  }
  if (format != kFormatPcm) {
    throw Error(ErrorKind::kUnsupportedFormat,
                "codec " + std::to_string(format) + " is not integer PCM");
  }
  FormatChunk fmt;
  fmt.channels = ReadU16(chunk, 2);
  fmt.sample_rate = static_cast<int>(ReadU32(chunk, 4));
  const std::uint16_t block_align = ReadU16(chunk, 12);
  fmt.bits = ReadU16(chunk, 14);
  if (fmt.channels < 1 || fmt.channels > 2) {
    throw Error(ErrorKind::kUnsupportedFormat,
                std::to_string(fmt.channels) + " channels");
  }
  if (fmt.bits != 16 && fmt.bits != 24) {
    throw Error(ErrorKind::kUnsupportedFormat,
                std::to_string(fmt.bits) + "-bit samples");
  }
  if (fmt.sample_rate != 44100 && fmt.sample_rate != 48000) {
    throw Error(ErrorKind::kUnsupportedFormat,
                "sample rate " + std::to_string(fmt.sample_rate) + " Hz");
  }
  if (block_align != fmt.channels * fmt.bits / 8) {
    throw Error(ErrorKind::kMalformedHeader, "inconsistent block alignment");
  }
  return fmt;
}

std::int32_t ReadSample(const std::uint8_t* p, int bytes) {
  if (bytes == 2) {
    return static_cast<std::int16_t>(p[0] | (p[1] << 8));
  }
  std::uint32_t u = p[0] | (p[1] << 8) | (p[2] << 16);
  if (u & 0x800000u) u |= 0xFF000000u;
  return static_cast<std::int32_t>(u);
}

// FFTW's planner is not reentrant.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

AudioBuffer DecodeWav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !TagIs(bytes, 0, "RIFF") || !TagIs(bytes, 8, "WAVE")) {
    throw Error(ErrorKind::kMalformedHeader, "missing RIFF/WAVE magic");
  }
  std::optional<FormatChunk> fmt;
  std::size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const std::uint32_t size = ReadU32(bytes, off + 4);
    const std::size_t body = off + 8;
    if (TagIs(bytes, off, "fmt ")) {
      if (body + size > bytes.size()) {
        throw Error(ErrorKind::kMalformedHeader, "fmt chunk overruns file");
      }
      fmt = ParseFormat(bytes.subspan(body, size));
    } else if (TagIs(bytes, off, "data")) {
      if (!fmt) {
        throw Error(ErrorKind::kMalformedHeader, "data chunk before fmt chunk");
      }
      const std::size_t available = bytes.size() - body;
      if (available < size) {
        throw Error(ErrorKind::kTruncatedData,
                    "data chunk declares " + std::to_string(size) +
                        " bytes, " + std::to_string(available) + " present");
      }
      const int sample_bytes = fmt->bits / 8;
      const std::size_t frame_bytes =
          static_cast<std::size_t>(sample_bytes) * fmt->channels;
      if (size % frame_bytes != 0) {
        throw Error(ErrorKind::kTruncatedData, "partial sample frame at end of data");
      }
      const double scale = std::ldexp(1.0, fmt->bits - 1);
      AudioBuffer out;
      out.sample_rate = fmt->sample_rate;
      out.samples.resize(size / frame_bytes);
      const std::uint8_t* p = bytes.data() + body;
      for (double& s : out.samples) {
        double acc = 0.0;
        for (int c = 0; c < fmt->channels; ++c) {
          acc += ReadSample(p, sample_bytes) / scale;
          p += sample_bytes;
        }
        s = acc / fmt->channels;
      }
      return out;
    }
    off = body + size + (size & 1u);
  }
  throw Error(ErrorKind::kMalformedHeader,
              fmt ? "no data chunk" : "no fmt chunk");
}

AudioBuffer LoadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kFileNotFound, "cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return DecodeWav(bytes);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

void WriteWav16(const std::filesystem::path& path, const AudioBuffer& buffer) {
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(buffer.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  auto put_tag = [&](const char* tag) { out.insert(out.end(), tag, tag + 4); };
  auto put_u32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  auto put_u16 = [&](std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
  };
  put_tag("RIFF");
  put_u32(36 + data_bytes);
  put_tag("WAVE");
  put_tag("fmt ");
  put_u32(16);
  put_u16(kFormatPcm);
  put_u16(1);
  put_u32(static_cast<std::uint32_t>(buffer.sample_rate));
  put_u32(static_cast<std::uint32_t>(buffer.sample_rate) * 2);
  put_u16(2);
  put_u16(16);
  put_tag("data");
  put_u32(data_bytes);
  for (double s : buffer.samples) {
    const double v = std::clamp(std::round(s * 32768.0), -32768.0, 32767.0);
    put_u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  std::ofstream f(path, std::ios::binary);
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) {
    throw Error(ErrorKind::kSinkWriteFailure, "cannot write " + path.string());
  }
}

StemPair MakeStemPair(AudioBuffer vocal, AudioBuffer background) {
  if (vocal.sample_rate != background.sample_rate) {
    throw Error(ErrorKind::kSampleRateMismatch,
                "vocal " + std::to_string(vocal.sample_rate) + " Hz vs background " +
                    std::to_string(background.sample_rate) + " Hz");
  }
  const std::size_t n = std::max(vocal.samples.size(), background.samples.size());
  vocal.samples.resize(n, 0.0);
  background.samples.resize(n, 0.0);
  return StemPair{std::move(vocal), std::move(background)};
}

StemPair LoadStemPair(const std::filesystem::path& vocal_path,
                      const std::filesystem::path& background_path) {
  return MakeStemPair(LoadWav(vocal_path), LoadWav(background_path));
}

std::size_t FrameCount(std::size_t num_samples, std::size_t window_size,
                       std::size_t hop) {
  if (hop == 0 || window_size > num_samples) return 0;
  return (num_samples - window_size) / hop + 1;
}

std::vector<std::span<const double>> FrameSignal(const AudioBuffer& buffer,
                                                 std::size_t window_size,
                                                 std::size_t hop) {
  if (hop == 0 || hop > window_size) {
    throw Error(ErrorKind::kOutOfRange, "hop must satisfy 0 < hop <= window");
  }
  if (window_size > buffer.samples.size()) {
    throw Error(ErrorKind::kWindowTooLarge,
                "window " + std::to_string(window_size) + " exceeds " +
                    std::to_string(buffer.samples.size()) + " samples");
  }
  const std::span<const double> all(buffer.samples);
  const std::size_t count = FrameCount(all.size(), window_size, hop);
  std::vector<std::span<const double>> frames;
  frames.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    frames.push_back(all.subspan(k * hop, window_size));
  }
  return frames;
}

struct SpectrumAnalyzer::Impl {
  std::size_t n;
  std::vector<double> window;
  double* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan plan = nullptr;

  explicit Impl(std::size_t size) : n(size), window(size) {
    for (std::size_t i = 0; i < n; ++i) {
      window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
    }
    std::lock_guard<std::mutex> lock(PlannerMutex());
    in = fftw_alloc_real(n);
    out = fftw_alloc_complex(n / 2 + 1);
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
  }

  ~Impl() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan);
    fftw_free(in);
    fftw_free(out);
  }
};

SpectrumAnalyzer::SpectrumAnalyzer(std::size_t window_size) {
  if (window_size < 2 || window_size % 2 != 0) {
    throw Error(ErrorKind::kOutOfRange, "window size must be even and >= 2");
  }
  impl_ = std::make_unique<Impl>(window_size);
}

SpectrumAnalyzer::~SpectrumAnalyzer() = default;
SpectrumAnalyzer::SpectrumAnalyzer(SpectrumAnalyzer&&) noexcept = default;
SpectrumAnalyzer& SpectrumAnalyzer::operator=(SpectrumAnalyzer&&) noexcept = default;

std::size_t SpectrumAnalyzer::window_size() const { return impl_->n; }

Spectrum SpectrumAnalyzer::Compute(std::span<const double> frame, int sample_rate) {
  Impl& s = *impl_;
  if (frame.size() != s.n) {
    throw Error(ErrorKind::kOutOfRange,
                "frame length " + std::to_string(frame.size()) +
                    " != window " + std::to_string(s.n));
  }
  for (std::size_t i = 0; i < s.n; ++i) s.in[i] = frame[i] * s.window[i];
  fftw_execute(s.plan);
  Spectrum spec;
  spec.window_size = s.n;
  spec.bin_hz = static_cast<double>(sample_rate) / s.n;
  spec.power.resize(s.n / 2 + 1);
  for (std::size_t k = 0; k < spec.power.size(); ++k) {
    spec.power[k] = s.out[k][0] * s.out[k][0] + s.out[k][1] * s.out[k][1];
  }
  return spec;
}

Spectrum PowerSpectrum(std::span<const double> frame, int sample_rate) {
  SpectrumAnalyzer analyzer(frame.size());
  return analyzer.Compute(frame, sample_rate);
}

}  // namespace tailors
