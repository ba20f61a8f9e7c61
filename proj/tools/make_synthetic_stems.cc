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

// Writes deterministic <track>.vocal.wav / <track>.background.wav stems.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "tailors/audio_io.h"
#include "tailors/error.h"
#include "tailors/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate synthetic stems"};
  std::string out_dir = ".";
  std::string track = "synthetic";
  double seconds = 30.0;
  int sample_rate = 44100;
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--track", track, "Track name");
  app.add_option("--seconds", seconds, "Duration")->check(CLI::PositiveNumber);
  app.add_option("--sample-rate", sample_rate, "44100 or 48000")
      ->check(CLI::IsMember({44100, 48000}));
  CLI11_PARSE(app, argc, argv);
  try {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    tailors::WriteWav16(dir / (track + ".vocal.wav"),
                        tailors::SynthesizeVocalStem(seconds, sample_rate));
    tailors::WriteWav16(dir / (track + ".background.wav"),
                        tailors::SynthesizeBackgroundStem(seconds, sample_rate));
  } catch (const std::exception& e) {
    std::cerr << "make_synthetic_stems: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
