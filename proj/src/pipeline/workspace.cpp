// Copyright 2026 The negaffect Authors.
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

#include <openssl/evp.h>

#include <sstream>

#include "negaffect/pipeline.hpp"

namespace negaffect::pipeline {
namespace {

void RequireFile(const std::filesystem::path& p, const char* what) {
  if (p.empty()) {
    throw ValidationError(std::string("config: no ") + what + " path given");
  }
  if (!std::filesystem::is_regular_file(p)) {
    throw IoError(std::string(what) + " not found: " + p.string());
  }
}

}  // namespace

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string CorpusHash(const corpus::Corpus& corpus) {
  std::ostringstream out;
  corpus::WriteCanonical(corpus, out);
  return Sha256Hex(out.str());
}

corpus::Corpus IngestConfigured(const RunConfig& config) {
  RequireFile(config.corpus_path, "corpus");
  if (config.corpus_format == "release") {
    return corpus::IngestReleaseAdapter(config.corpus_path);
  }
  return corpus::IngestCanonical(config.corpus_path);
}

Workspace Workspace::Load(const RunConfig& config) {
  return FromCorpus(config, IngestConfigured(config));
}

Workspace Workspace::FromCorpus(const RunConfig& config,
                                corpus::Corpus corpus) {
  config.Check();
  RequireFile(config.lexicon_path, "lexicon");
  RequireFile(config.emoticons_path, "emoticon config");
  if (!config.exclusions_path.empty()) {
    RequireFile(config.exclusions_path, "exclusion policy");
  }
  if (!config.scores_path.empty()) {
    RequireFile(config.scores_path, "contextual score file");
  }

  Workspace ws;
  ws.config = config;
  ws.corpus_hash = CorpusHash(corpus);
  ws.config_hash = Sha256Hex(config.CanonicalJson());
  const auto policy = config.exclusions_path.empty()
                          ? corpus::ExclusionPolicy::Default()
                          : corpus::ExclusionPolicy::Load(config.exclusions_path);
  auto excluded = corpus::ApplyExclusions(corpus, policy);
  ws.corpus = std::move(excluded.corpus);
  ws.exclusions = std::move(excluded.report);
  ws.emoticons = affect::EmoticonConfig::Load(config.emoticons_path);
  ws.lexicon = affect::Lexicon::Load(config.lexicon_path);
  if (!config.scores_path.empty()) {
    ws.scores = affect::LoadContextualScores(config.scores_path, ws.corpus,
                                             ws.emoticons);
  }
  ws.profiles = affect::BuildProfiles(ws.corpus, ws.emoticons, ws.lexicon,
                                      ws.scores ? &*ws.scores : nullptr);
  return ws;
}

lexcorr::AffectInputs Workspace::inputs() const {
  return {&emoticons, &lexicon, scores ? &*scores : nullptr};
}

}  // namespace negaffect::pipeline
