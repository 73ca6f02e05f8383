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

#include "asrx/transcript.hpp"

#include <cctype>

namespace asrx {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

std::string normalize_token(const std::string& piece) {
  size_t begin = 0, end = piece.size();
  while (begin < end && is_punct(piece[begin])) ++begin;
  while (end > begin && is_punct(piece[end - 1])) --end;
  std::string out;
  out.reserve(end - begin);
  for (size_t i = begin; i < end; ++i)
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(piece[i]))));
  return out;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& raw) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && is_space(raw[i])) ++i;
    size_t j = i;
    while (j < raw.size() && !is_space(raw[j])) ++j;
    if (j > i) {
      std::string tok = normalize_token(raw.substr(i, j - i));
      if (!tok.empty()) tokens.push_back(std::move(tok));
    }
    i = j;
  }
  return tokens;
}

Transcript make_transcript(std::string raw) {
  Transcript t;
  t.tokens = tokenize(raw);
  t.raw = std::move(raw);
  return t;
}

std::string Transcript::normalized() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

bool operator==(const Transcript& a, const Transcript& b) { return a.tokens == b.tokens; }

}  // namespace asrx
