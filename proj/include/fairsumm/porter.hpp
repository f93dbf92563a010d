// Copyright 2026 The Authors.
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

#ifndef FAIRSUMM_PORTER_HPP_
#define FAIRSUMM_PORTER_HPP_

#include <string>

namespace fairsumm {

/// One pass of the Porter suffix-stripping algorithm (steps 1a through 5b).
/// Expects a lowercase ASCII word; words of length <= 2 are returned as is.
std::string porter_stem_once(const std::string& word);

/// Porter stemming iterated to a fixed point. A single pass is not stable
/// for a few cascade words (an early step can expose a suffix that only a
/// later pass strips); iterating keeps preprocessing idempotent.
std::string porter_stem(const std::string& word);

}  // namespace fairsumm

#endif  // FAIRSUMM_PORTER_HPP_
