// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "cotdlg/rng.hpp"
#include "cotdlg/token_space.hpp"
#include "cotdlg/types.hpp"

namespace cotdlg {

struct WorldConfig {
  std::uint64_t seed = 7;
  int text_size = 32;
  std::vector<int> stream_sizes = {64, 64, 64};
  int frames_per_word = 4;  // L
  int speakers = 4;         // K
  double noise = 0.0;       // per-slot acoustic corruption rate
};

using IdMatrix = Eigen::Matrix<TokenId, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// The synthetic codec world. Tables hold global token ids.
///   semantic(word, j)             : stream-1 id of frame j of `word`
///   acoustic[m-2](word*K + spk, j): stream-m id of frame j of `word` by `spk`
/// The word -> semantic-block map is injective, so transcription by nearest
/// semantic block is exact at zero noise. Immutable after construction.
struct World {
  WorldConfig config;
  Vocabulary vocab;
  IdMatrix semantic;
  std::vector<IdMatrix> acoustic;
  std::vector<TokenId> response_perm;

  int frames_per_word() const { return config.frames_per_word; }
  int num_speakers() const { return config.speakers; }
};

/// One paired dialogue example. Response text is the world's response
/// function applied to the user text; audio is the codec encoding of each.
struct DialogueTurn {
  std::int64_t id = 0;
  int user_speaker = 0;
  int system_speaker = 0;
  std::vector<TokenId> user_text;
  std::vector<Frame> user_audio;
  std::vector<TokenId> response_text;
  std::vector<Frame> response_audio;
  std::vector<Frame> spk_prompt;  // 8 frames of the system speaker
};

struct Corpus {
  std::vector<DialogueTurn> train, dev, test;
};

struct PreprocessRules {
  int min_words = 5;
  int max_frames = 256;
  bool merge = true;
};

/// Deterministic world generation. Retries table draws until the semantic
/// map is injective and speakers are pairwise distinguishable on at least
/// half of all (word, frame) entries; throws GenerationError when the
/// configuration cannot satisfy that (pigeonhole) within bounded retries.
World make_world(const WorldConfig& config);

/// Synthetic Tok(.): |text| * L audio frames. With noise > 0 each acoustic
/// slot is independently resampled with that probability; semantic slots are
/// never corrupted.
std::vector<Frame> encode_speech(std::span<const TokenId> text, int speaker, const World& world,
                                 Rng& rng);
/// Zero-noise convenience overload.
std::vector<Frame> encode_speech(std::span<const TokenId> text, int speaker, const World& world);

/// Nearest-block decoding over the semantic stream: per L-frame block (the
/// trailing partial block included), the word minimizing Hamming distance,
/// ties to the smallest word id. Always returns a best-effort transcript.
std::vector<TokenId> oracle_transcribe(std::span<const Frame> audio, const World& world);

/// Per-frame best-matching (word, speaker) acoustic entry, majority vote
/// over frames, ties to the smallest speaker id.
int oracle_speaker(std::span<const Frame> audio, const World& world);
/// Vote counts per speaker backing oracle_speaker.
std::vector<int> oracle_speaker_votes(std::span<const Frame> audio, const World& world);

/// Reverse the utterance, then apply the world's token permutation.
/// Bijective on token sequences; preserves length.
std::vector<TokenId> response_fn(std::span<const TokenId> text, const World& world);

/// Deterministic corpus of paired turns: utterance lengths uniform in
/// [3, 12] words, speakers uniform, split sizes by largest remainder.
Corpus generate_corpus(const World& world, int n, std::uint64_t seed,
                       const std::vector<double>& split_ratios);

/// The preprocessing rules: merge consecutive same-user-speaker turns, drop
/// turns with fewer than min_words on either side, truncate audio to
/// max_frames with text cut to whole words. Responses are recomputed after
/// merging/truncation so turn invariants keep holding.
std::vector<DialogueTurn> preprocess(std::span<const DialogueTurn> turns,
                                     const PreprocessRules& rules, const World& world);

nlohmann::json world_to_json(const World& world);
World world_from_json(const nlohmann::json& j);

nlohmann::json turn_to_json(const DialogueTurn& turn);
DialogueTurn turn_from_json(const nlohmann::json& j);

}  // namespace cotdlg
