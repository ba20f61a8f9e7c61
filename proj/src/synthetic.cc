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

#include "tailors/synthetic.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace tailors {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform in [-1, 1) straight from the engine so the sequence does not depend
// on the standard library's distribution implementation.
class Noise {
 public:
  explicit Noise(std::uint32_t seed) : engine_(seed) {}
  double operator()() { return engine_() / 2147483648.0 - 1.0; }

 private:
  std::mt19937 engine_;
};

double MidiToHz(double note) { return 440.0 * std::pow(2.0, (note - 69.0) / 12.0); }

AudioBuffer Empty(double seconds, int sample_rate) {
  AudioBuffer b;
  b.sample_rate = sample_rate;
  b.samples.assign(static_cast<std::size_t>(std::llround(seconds * sample_rate)), 0.0);
  return b;
}

}  // namespace

AudioBuffer SynthesizeVocalStem(double seconds, int sample_rate, std::uint32_t seed) {
  AudioBuffer b = Empty(seconds, sample_rate);
  Noise noise(seed);
  constexpr std::array<int, 8> kMelody = {64, 67, 69, 71, 72, 71, 67, 62};
  constexpr double kNoteSeconds = 0.5;
  const double dt = 1.0 / sample_rate;
  double phase = 0.0;
  for (std::size_t i = 0; i < b.samples.size(); ++i) {
    const double t = static_cast<double>(i) * dt;
    // Four-second phrases: three sung, one resting.
    const double in_phrase = std::fmod(t, 4.0);
    const double gate = std::clamp(std::min(in_phrase / 0.08, (3.0 - in_phrase) / 0.2), 0.0, 1.0);
    const auto note_index = static_cast<std::size_t>(t / kNoteSeconds) % kMelody.size();
    const double octave = std::fmod(t, 16.0) < 8.0 ? 0.0 : -12.0;
    const double f0 = MidiToHz(kMelody[note_index] + octave) *
                      (1.0 + 0.006 * std::sin(kTwoPi * 5.5 * t));
    phase += kTwoPi * f0 * dt;
    // Tilt sweeps from dark to bright and back every 10 s.
    const double tilt = 0.6 + 0.5 * std::sin(kTwoPi * t / 10.0);
    double v = 0.0;
    for (int h = 1; h <= 12; ++h) {
      if (f0 * h >= sample_rate / 2.0) break;
      v += std::pow(static_cast<double>(h), -1.0 - tilt) * std::sin(h * phase);
    }
    const double breath = 0.02 * noise();
    b.samples[i] = 0.35 * gate * v + 0.3 * gate * breath;
  }
  return b;
}

AudioBuffer SynthesizeBackgroundStem(double seconds, int sample_rate, std::uint32_t seed) {
  AudioBuffer b = Empty(seconds, sample_rate);
  Noise noise(seed);
  constexpr double kBeat = 0.5;  // 120 bpm
  constexpr std::array<std::array<int, 3>, 4> kChords = {
      {{57, 60, 64}, {53, 57, 60}, {48, 52, 55}, {55, 59, 62}}};
  const double dt = 1.0 / sample_rate;
  double hat_state = 0.0;
  for (std::size_t i = 0; i < b.samples.size(); ++i) {
    const double t = static_cast<double>(i) * dt;
    // Sections of 7.5 s: pad only, + bass, + kick, + hats.
    const int section = static_cast<int>(t / 7.5) % 4;
    const auto& chord = kChords[static_cast<std::size_t>(t / 2.0) % kChords.size()];
    double v = 0.0;
    for (int note : chord) {
      const double f = MidiToHz(note);
      v += 0.08 * (std::sin(kTwoPi * f * t) + 0.3 * std::sin(kTwoPi * 2.0 * f * t + 0.5));
    }
    if (section >= 1) {
      const double bass = MidiToHz(chord[0] - 24);
      v += 0.22 * std::sin(kTwoPi * bass * t);
    }
    const double in_beat = std::fmod(t, kBeat);
    if (section >= 2) {
      const double sweep = 50.0 + 70.0 * std::exp(-in_beat / 0.03);
      v += 0.45 * std::exp(-in_beat / 0.12) * std::sin(kTwoPi * sweep * in_beat);
    }
    if (section >= 3) {
      // One-pole high-passed noise for the hi-hat on every eighth note.
      const double raw = noise();
      const double hp = raw - hat_state;
      hat_state = raw;
      const double in_eighth = std::fmod(t, kBeat / 2.0);
      v += 0.18 * std::exp(-in_eighth / 0.03) * hp;
    }
    b.samples[i] = std::clamp(v, -1.0, 1.0);
  }
  return b;
}

}  // namespace tailors
