// Copyright 2026 The asrexplain Authors
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

#ifndef ASRX_TRANSCRIPT_HPP
#define ASRX_TRANSCRIPT_HPP

#include <string>
#include <vector>

namespace asrx {

/// A transcription plus its normalized token sequence. Tokens are produced
/// deterministically from `raw`: lowercased (ASCII), split on whitespace,
/// leading/trailing punctuation stripped, empty tokens dropped.
struct Transcript {
  std::string raw;
  std::vector<std::string> tokens;

  bool empty() const { return tokens.empty(); }
  /// Tokens joined by single spaces; the form handed to semantic providers.
  std::string normalized() const;
};

bool operator==(const Transcript& a, const Transcript& b);

Transcript make_transcript(std::string raw);

std::vector<std::string> tokenize(const std::string& raw);

}  // namespace asrx

#endif  // ASRX_TRANSCRIPT_HPP
