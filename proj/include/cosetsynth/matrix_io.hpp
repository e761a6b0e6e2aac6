// Copyright 2026 The cosetsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "cosetsynth/matrix.hpp"

namespace cosetsynth {

/**
 * Square matrix JSON, compact, row-major:
 *   {"dim":N,"data":[[[re,im],...],...]}
 * Doubles are written in shortest round-trip form.
 */
std::string serialize_matrix(const Mat& m);

/** Inverse of serialize_matrix. Rejects unknown keys, non-square, ragged,
 * or non-finite data with ParseError. */
Mat parse_matrix(std::string_view text);

}  // namespace cosetsynth
