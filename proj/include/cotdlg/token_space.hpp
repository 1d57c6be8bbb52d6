// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cotdlg/types.hpp"

namespace cotdlg {

/// Named members of the special-token partition, in id-assignment order.
enum class Special : int {
  Asr = 0,   // <asr>
  T2t,       // <t2t>
  Tts,       // <tts>
  S2s,       // <s2s>
  AudioTk,   // <a_tk>
  TextTk,    // <t_tk>
  SpeakerTk, // <s_tk>
  Eos,       // <eos>
  Bos,       // <bos>
};

inline constexpr int kNumSpecials = 9;

extern const std::array<const char*, kNumSpecials> kSpecialNames;

enum class Partition { Text, Audio, Special, Null };

struct VocabConfig {
  int text_size = 32;
  std::vector<int> stream_sizes = {64, 64, 64};  // stream 1 is semantic
};

/// The shared discrete vector space: text ids first, then each audio stream's
/// ids in order, then the special tokens, then the null pad as the last id.
/// Immutable after construction; safe to share across threads.
class Vocabulary {
 public:
  int text_size() const { return text_size_; }
  int num_streams() const { return static_cast<int>(stream_sizes_.size()); }
  int stream_size(int m) const { return stream_sizes_.at(static_cast<std::size_t>(m)); }
  int total_size() const { return total_; }

  TokenId text_id(int word) const;
  /// Global id of local audio token `a` in stream `m` (0-based stream index).
  TokenId audio_id(int m, int a) const;
  TokenId special_id(Special s) const { return special_base_ + static_cast<TokenId>(s); }
  TokenId null_id() const { return null_; }

  bool is_text(TokenId id) const { return id >= 0 && id < text_size_; }
  bool is_audio(TokenId id, int m) const {
    return id >= stream_base_[static_cast<std::size_t>(m)] &&
           id < stream_base_[static_cast<std::size_t>(m) + 1];
  }
  bool is_special(TokenId id) const { return id >= special_base_ && id < null_; }
  bool is_null(TokenId id) const { return id == null_; }

  /// Every id below total_size() belongs to exactly one partition.
  Partition partition_of(TokenId id) const;

  /// Local index within the id's own partition (word index, stream-local
  /// audio index, or special ordinal).
  int local_index(TokenId id) const;

  /// A well-formed audio frame: slot m in stream m's partition, or null
  /// (nulls appear in delay-interleave lead-in and flush positions).
  bool is_audio_frame(const Frame& f) const;
  /// A well-formed text/special frame: slot 1 text or special, slots 2..M null.
  bool is_padded_frame(const Frame& f) const;
  bool is_valid_frame(const Frame& f) const { return is_audio_frame(f) || is_padded_frame(f); }

  nlohmann::json manifest() const;

  friend Vocabulary build_vocabulary(const VocabConfig& config);

 private:
  int text_size_ = 0;
  std::vector<int> stream_sizes_;
  std::vector<TokenId> stream_base_;  // size M+1; [m, m+1) is stream m's range
  TokenId special_base_ = 0;
  TokenId null_ = 0;
  int total_ = 0;
};

/// Deterministic id assignment from sizes alone; identical configs produce
/// identical tables. Throws ConfigError on zero-size partitions.
Vocabulary build_vocabulary(const VocabConfig& config);

/// Lift word ids into M-dimensional frames (slot 1 word, rest null).
std::vector<Frame> text_to_frames(std::span<const TokenId> words, const Vocabulary& vocab);

Frame special_to_frame(TokenId token, const Vocabulary& vocab);
Frame special_to_frame(Special s, const Vocabulary& vocab);

/// Inverse of text_to_frames: reads slot 1 of each frame.
std::vector<TokenId> frames_to_text(std::span<const Frame> frames, const Vocabulary& vocab);

}  // namespace cotdlg
