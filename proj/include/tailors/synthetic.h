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

// Deterministic synthetic stems for demos and end-to-end tests.

#ifndef TAILORS_SYNTHETIC_H_
#define TAILORS_SYNTHETIC_H_

#include <cstdint>

#include "tailors/audio_io.h"

namespace tailors {

// A sung-melody stand-in: a harmonic voice with vibrato, phrase envelopes and
// a slowly varying spectral tilt.
AudioBuffer SynthesizeVocalStem(double seconds, int sample_rate, std::uint32_t seed = 1);

// Bass, a chord pad, kick and hi-hat, arranged in sections of rising
// intensity so that every background descriptor moves over the track.
AudioBuffer SynthesizeBackgroundStem(double seconds, int sample_rate, std::uint32_t seed = 2);

}  // namespace tailors

#endif  // TAILORS_SYNTHETIC_H_
