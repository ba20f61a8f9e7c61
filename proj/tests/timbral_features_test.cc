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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "tailors/audio_io.h"
#include "tailors/error.h"
#include "test_signals.h"

namespace tailors {
namespace {

using testing::Buffer;
using testing::Tone;

constexpr int kRate = 44100;
constexpr std::size_t kWindow = 4096;

Spectrum Spec(const std::vector<double>& frame, int rate = kRate) {
  return PowerSpectrum(frame, rate);
}

// Spectrum with all power in the single bin nearest `hz`.
Spectrum Impulse(double hz, double power = 1.0) {
  Spectrum s;
  s.window_size = kWindow;
  s.bin_hz = static_cast<double>(kRate) / kWindow;
  s.power.assign(kWindow / 2 + 1, 0.0);
  s.power[static_cast<std::size_t>(std::lround(hz / s.bin_hz))] = power;
  return s;
}

// Vassilakis pair term written out from the model definition.
double OraclePair(double f1, double a1, double f2, double a2) {
  const double lo = std::min(a1, a2), hi = std::max(a1, a2);
  const double s = 0.24 / (0.0207 * std::min(f1, f2) + 18.96);
  const double d = std::abs(f2 - f1);
  return std::pow(lo * hi, 0.1) * 0.5 * std::pow(2 * lo / (lo + hi), 3.11) *
         (std::exp(-3.5 * s * d) - std::exp(-5.75 * s * d));
}

TEST(SpectralPeaksTest, SilenceHasNoPeaks) {
  EXPECT_TRUE(SpectralPeaks(Spec(std::vector<double>(kWindow))).empty());
}

TEST(SpectralPeaksTest, PureToneGivesOnePeakNearItsFrequency) {
  for (double f : {220.0, 440.0, 1234.5, 5000.0}) {
    const auto peaks = SpectralPeaks(Spec(Tone(f, 0.5, kWindow, kRate)));
    ASSERT_EQ(peaks.size(), 1u) << f;
    EXPECT_LE(std::abs(peaks[0].freq - f), static_cast<double>(kRate) / kWindow) << f;
  }
}

TEST(SpectralPeaksTest, OctavePairBothRetained) {
  const auto frame = testing::Add(Tone(440, 0.4, kWindow, kRate), Tone(880, 0.4, kWindow, kRate));
  const auto peaks = SpectralPeaks(Spec(frame));
  ASSERT_EQ(peaks.size(), 2u);
  std::vector<double> f = {peaks[0].freq, peaks[1].freq};
  std::sort(f.begin(), f.end());
  EXPECT_NEAR(f[0], 440, 11);
  EXPECT_NEAR(f[1], 880, 11);
}

TEST(SpectralPeaksTest, PeaksAreStrictLocalMaximaAndCapped) {
  const auto frame = testing::WhiteNoise(kWindow, 0.5, 9);
  const Spectrum s = Spec(frame);
  const auto peaks = SpectralPeaks(s);
  EXPECT_EQ(peaks.size(), 32u);
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    const auto k = static_cast<std::size_t>(std::lround(peaks[i].freq / s.bin_hz));
    ASSERT_GT(k, 0u);
    ASSERT_LT(k + 1, s.power.size());
    EXPECT_GT(s.power[k], s.power[k - 1]);
    EXPECT_GT(s.power[k], s.power[k + 1]);
    if (i > 0) EXPECT_GE(peaks[i - 1].amplitude, peaks[i].amplitude);
  }
}

TEST(SpectralPeaksTest, FloorExcludesWeakPartials) {
  // Second tone 80 dB down.
  const auto frame = testing::Add(Tone(440, 1.0, kWindow, kRate), Tone(3000, 1e-4, kWindow, kRate));
  const auto peaks = SpectralPeaks(Spec(frame));
  for (const auto& p : peaks) EXPECT_GT(std::abs(p.freq - 3000), 50);
  FeatureConfig loose;
  loose.peak_floor_db = 120;
  EXPECT_GT(SpectralPeaks(Spec(frame), loose).size(), peaks.size());
}

TEST(RoughnessTest, FewerThanTwoPeaksIsZero) {
  EXPECT_EQ(Roughness({}), 0.0);
  const SpectralPeak one{500, 1};
  EXPECT_EQ(Roughness({&one, 1}), 0.0);
}

TEST(RoughnessTest, MatchesOracleOnRandomSets) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> fr(50, 8000), am(0.01, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SpectralPeak> p(2 + trial % 10);
    for (auto& x : p) x = {fr(rng), am(rng)};
    double oracle = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        oracle += OraclePair(p[i].freq, p[i].amplitude, p[j].freq, p[j].amplitude);
    EXPECT_NEAR(Roughness(p), oracle, 1e-12 * (1 + oracle));
  }
}

TEST(RoughnessTest, SweepPeaksNearTwentySevenHertz) {
  double best_df = 0, best = -1;
  for (double df = 0.5; df <= 200; df += 0.01) {
    const double r = PairRoughness({500, 1}, {500 + df, 1});
    if (r > best) best = r, best_df = df;
  }
  // Analytic optimum: s*df = ln(5.75/3.5)/2.25 with s at f_min = 500.
  const double s = 0.24 / (0.0207 * 500 + 18.96);
  const double analytic = std::log(5.75 / 3.5) / 2.25 / s;
  EXPECT_NEAR(best_df, analytic, 0.01);
  EXPECT_NEAR(best_df, 27, 3);
}

TEST(RoughnessTest, SymmetricAndAmplitudeScaling) {
  const SpectralPeak a{440, 0.7}, b{470, 0.3};
  EXPECT_EQ(PairRoughness(a, b), PairRoughness(b, a));
  for (double c : {0.01, 0.5, 3.0, 100.0}) {
    const double scaled = PairRoughness({440, 0.7 * c}, {470, 0.3 * c});
    EXPECT_NEAR(scaled / PairRoughness(a, b), std::pow(c, 0.2), 1e-12);
  }
}

TEST(RoughnessTest, AdditiveOverPairs) {
  const std::vector<SpectralPeak> p = {{300, 1}, {320, 0.5}, {1000, 0.8}};
  EXPECT_NEAR(Roughness(p),
              PairRoughness(p[0], p[1]) + PairRoughness(p[0], p[2]) + PairRoughness(p[1], p[2]),
              1e-15);
}

TEST(SharpnessTest, SingleBandTenGivesOnePointOne) {
  EXPECT_NEAR(Sharpness(Impulse(1150)), 1.1, 1e-12);
}

TEST(SharpnessTest, SilenceIsZero) { EXPECT_EQ(Sharpness(Impulse(1000, 0.0)), 0.0); }

TEST(SharpnessTest, HighBandSharperThanLowBand) {
  const double high = Sharpness(Impulse(8500));   // band 22
  const double low = Sharpness(Impulse(450));     // band 5
  EXPECT_NEAR(low, 0.55, 1e-12);
  EXPECT_NEAR(high, 0.11 * 22 * 0.85 * std::exp(0.171 * (22 - 15.8)), 1e-12);
  EXPECT_GT(high, low);
}

TEST(SharpnessTest, EnergyAboveLastEdgeCountsAsBandTwentyFour) {
  EXPECT_NEAR(Sharpness(Impulse(18000)), 0.11 * 24 * 0.85 * std::exp(0.171 * (24 - 15.8)), 1e-12);
}

TEST(SharpnessTest, BandEnergiesConserveTotal) {
  const Spectrum s = Spec(testing::WhiteNoise(kWindow, 0.5, 4));
  const auto bands = BarkBandEnergies(s);
  double a = 0, b = 0;
  for (double v : bands) a += v;
  for (double v : s.power) b += v;
  EXPECT_NEAR(a, b, 1e-9 * b);
}

TEST(RatioFeatureTest, PureTones) {
  EXPECT_NEAR(Brightness(Spec(Tone(3000, 0.5, kWindow, kRate))), 1.0, 1e-6);
  EXPECT_NEAR(Brightness(Spec(Tone(200, 0.5, kWindow, kRate))), 0.0, 1e-6);
  EXPECT_NEAR(Warmth(Spec(Tone(300, 0.5, kWindow, kRate))), 1.0, 1e-6);
  EXPECT_NEAR(Warmth(Spec(Tone(5000, 0.5, kWindow, kRate))), 0.0, 1e-6);
  EXPECT_NEAR(Depth(Spec(Tone(100, 0.5, kWindow, kRate))), 1.0, 1e-6);
  EXPECT_NEAR(Depth(Spec(Tone(1000, 0.5, kWindow, kRate))), 0.0, 1e-6);
}

TEST(RatioFeatureTest, EqualPowerPairsSplitEvenly) {
  auto pair = [](double f1, double f2) {
    return testing::Add(Tone(f1, 0.5, kWindow, kRate), Tone(f2, 0.5, kWindow, kRate));
  };
  const auto bright = pair(200, 3000);
  const auto warm = pair(300, 5000);
  const auto deep = pair(100, 1000);
  EXPECT_NEAR(Brightness(Spec(bright)), 0.5, 0.01);
  EXPECT_NEAR(Warmth(Spec(warm)), 0.5, 0.01);
  EXPECT_NEAR(Depth(Spec(deep)), 0.5, 0.01);
  EXPECT_NEAR(Brightness(Spec(bright)),
              testing::OracleEnergyRatio(bright, kRate, [](double f) { return f >= 1500; }), 1e-9);
  EXPECT_NEAR(Warmth(Spec(warm)),
              testing::OracleEnergyRatio(warm, kRate, [](double f) { return f >= 50 && f <= 700; }),
              1e-9);
  EXPECT_NEAR(Depth(Spec(deep)),
              testing::OracleEnergyRatio(deep, kRate, [](double f) { return f < 200; }), 1e-9);
}

TEST(RatioFeatureTest, SilenceIsZero) {
  const Spectrum s = Spec(std::vector<double>(kWindow));
  EXPECT_EQ(Brightness(s), 0.0);
  EXPECT_EQ(Warmth(s), 0.0);
  EXPECT_EQ(Depth(s), 0.0);
  EXPECT_EQ(SpectralCentroid(s), 0.0);
}

TEST(FeatureInvarianceTest, GainInvarianceAndRange) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> gain_db(-20, 20);
  for (int trial = 0; trial < 30; ++trial) {
    const auto frame = testing::Add(testing::WhiteNoise(kWindow, 0.2, 100 + trial),
                                    Tone(150 + 40 * trial, 0.5, kWindow, kRate));
    const double g = std::pow(10.0, gain_db(rng) / 20);
    const Spectrum a = Spec(frame), b = Spec(testing::Scale(frame, g));
    for (auto fn : {&Brightness, &Warmth, &Depth}) {
      const double va = fn(a, {}), vb = fn(b, {});
      EXPECT_GE(va, 0.0);
      EXPECT_LE(va, 1.0);
      EXPECT_NEAR(va, vb, 1e-9);
    }
    EXPECT_NEAR(Sharpness(a), Sharpness(b), 1e-9);
    const double ra = Roughness(SpectralPeaks(a)), rb = Roughness(SpectralPeaks(b));
    EXPECT_NEAR(rb / ra, std::pow(g, 0.2), 1e-6);
  }
}

TEST(HardnessTest, SilenceIsZero) {
  const std::vector<double> rms = {0, 0, 0};
  EXPECT_EQ(Hardness(rms, Spec(std::vector<double>(kWindow))), 0.0);
}

TEST(HardnessTest, NeedsTwoRmsValues) {
  const std::vector<double> rms = {1};
  EXPECT_THROW(Hardness(rms, Spec(std::vector<double>(kWindow))), Error);
}

TEST(HardnessTest, StepOnsetHarderThanFade) {
  const std::size_t n = kRate * 2;
  auto step = Tone(440, 0.5, n, kRate);
  auto fade = step;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < n / 2) step[i] = 0;
    fade[i] *= std::min(1.0, static_cast<double>(i) / kRate);
  }
  const Spectrum s = Spec(Tone(440, 0.5, kWindow, kRate));
  EXPECT_GT(Hardness(BlockRms(step, 1024), s), Hardness(BlockRms(fade, 1024), s));
}

TEST(HardnessTest, NoiseHarderThanLowSineAtEqualRms) {
  auto noise = testing::WhiteNoise(kWindow, 1.0, 3);
  const auto sine = Tone(100, 1.0, kWindow, kRate);
  noise = testing::Scale(noise, testing::Rms(sine) / testing::Rms(noise));
  const std::vector<double> flat = {1, 1};
  const Spectrum ns = Spec(noise), ss = Spec(sine);
  EXPECT_GT(Hardness(flat, ns), Hardness(flat, ss));
  // Centroid oracle from the direct DFT.
  const auto oracle = [&](const std::vector<double>& x) {
    const auto p = testing::DirectDftPower(x);
    double w = 0, t = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      w += std::sqrt(p[k]) * testing::BinCenterHz(k, kWindow, kRate);
      t += std::sqrt(p[k]);
    }
    return w / t;
  };
  EXPECT_NEAR(SpectralCentroid(ns), oracle(noise), 1e-6);
  EXPECT_NEAR(SpectralCentroid(ss), oracle(sine), 1e-6);
}

TEST(HardnessTest, AttackIsGainInvariant) {
  const std::vector<double> rms = {0.1, 0.5, 0.3, 0.9};
  std::vector<double> loud = rms;
  for (double& v : loud) v *= 7;
  EXPECT_NEAR(AttackTerm(rms, 0.9), AttackTerm(loud, 6.3), 1e-15);
  EXPECT_NEAR(AttackTerm(rms, 0.9), 0.6 / 0.9, 1e-15);
  EXPECT_EQ(AttackTerm(rms, 0.0), 0.0);
}

TEST(BlockRmsTest, IncludesPartialTail) {
  const std::vector<double> x = {1, 1, 2, 2, 3};
  EXPECT_EQ(BlockRms(x, 2), (std::vector<double>{1, 2, 3}));
}

TEST(ExtractTest, SilentStemsGiveZeroFeatures) {
  const StemPair p = MakeStemPair(Buffer(std::vector<double>(2 * kRate)),
                                  Buffer(std::vector<double>(2 * kRate)));
  const TimbralTimeSeries s = ExtractTrackFeatures(p);
  ASSERT_EQ(s.frames.size(), FrameCount(2 * kRate, kWindow, 1024));
  for (const auto& f : s.frames) EXPECT_EQ(f, TimbralFrame{});
  EXPECT_DOUBLE_EQ(s.hop_seconds, 1024.0 / kRate);
  EXPECT_DOUBLE_EQ(s.duration_seconds, 2.0);
}

TEST(ExtractTest, FrameCountAndDeterminism) {
  const StemPair p = MakeStemPair(Buffer(testing::WhiteNoise(8192, 0.3, 1)),
                                  Buffer(testing::WhiteNoise(8192, 0.3, 2)));
  const auto a = ExtractTrackFeatures(p);
  EXPECT_EQ(a.frames.size(), 5u);
  EXPECT_EQ(a.frames, ExtractTrackFeatures(p).frames);
}

TEST(ExtractTest, StemsAreIndependent) {
  const auto vocal = Tone(300, 0.5, 3 * kWindow, kRate);
  const StemPair a = MakeStemPair(Buffer(vocal), Buffer(Tone(5000, 0.5, 3 * kWindow, kRate)));
  const StemPair b = MakeStemPair(Buffer(vocal), Buffer(testing::WhiteNoise(3 * kWindow, 0.5, 8)));
  const auto fa = ExtractTrackFeatures(a), fb = ExtractTrackFeatures(b);
  ASSERT_EQ(fa.frames.size(), fb.frames.size());
  for (std::size_t k = 0; k < fa.frames.size(); ++k) {
    EXPECT_EQ(fa.frames[k].vocal_roughness, fb.frames[k].vocal_roughness);
    EXPECT_EQ(fa.frames[k].vocal_sharpness, fb.frames[k].vocal_sharpness);
    EXPECT_EQ(fa.frames[k].vocal_warmth, fb.frames[k].vocal_warmth);
    EXPECT_NE(fa.frames[k].bg_brightness, fb.frames[k].bg_brightness);
  }
}

TEST(ExtractTest, AllFeaturesFiniteAndNonnegative) {
  const auto v = testing::Add(testing::WhiteNoise(kRate, 0.1, 5), Tone(220, 0.4, kRate, kRate));
  const auto b = testing::Add(testing::WhiteNoise(kRate, 0.3, 6), Tone(80, 0.4, kRate, kRate));
  for (const auto& f : ExtractTrackFeatures(MakeStemPair(Buffer(v), Buffer(b))).frames) {
    for (double x : {f.vocal_roughness, f.vocal_sharpness, f.vocal_warmth, f.bg_roughness,
                     f.bg_depth, f.bg_brightness, f.bg_hardness, f.bg_warmth}) {
      EXPECT_TRUE(std::isfinite(x));
      EXPECT_GE(x, 0.0);
    }
    for (double x : {f.vocal_warmth, f.bg_depth, f.bg_brightness, f.bg_warmth}) EXPECT_LE(x, 1.0);
  }
}

TEST(ExtractTest, TooShortThrows) {
  try {
    ExtractTrackFeatures(MakeStemPair(Buffer(std::vector<double>(100)),
                                      Buffer(std::vector<double>(100))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAudioTooShort);
  }
}

}  // namespace
}  // namespace tailors
