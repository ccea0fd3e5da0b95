// Copyright 2026 The majent Authors
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

/**
 * @file
 * JSON serialization of density matrices and measurements.
 *
 * State:  { "dims": [dA, dB, ...], "matrix_re": [[...], ...], "matrix_im": [[...], ...] }
 * POVM:   { "label": "...", "elements": [ { "re": [[...]], "im": [[...]] }, ... ] }
 *
 * Matrices are row-major lists of rows. "matrix_im" / "im" may be omitted
 * for real matrices. Doubles are written with round-trip precision.
 */
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "majent/quantum.hpp"

namespace majent {

/// Malformed JSON, missing fields or a matrix violating the state/POVM invariants.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DensityMatrix parse_state_json(const std::string& text);
DensityMatrix load_state(const std::filesystem::path& path);
std::string state_to_json(const DensityMatrix& rho);
void save_state(const DensityMatrix& rho, const std::filesystem::path& path);

Povm parse_povm_json(const std::string& text);
Povm load_povm(const std::filesystem::path& path);
std::string povm_to_json(const Povm& m);

}  // namespace majent
