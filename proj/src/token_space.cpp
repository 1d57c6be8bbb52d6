// SPDX-License-Identifier: Apache-2.0
#include "cotdlg/token_space.hpp"

#include "cotdlg/errors.hpp"

namespace cotdlg {

const std::array<const char*, kNumSpecials> kSpecialNames = {
    "asr", "t2t", "tts", "s2s", "a_tk", "t_tk", "s_tk", "eos", "bos"};

Vocabulary build_vocabulary(const VocabConfig& config) {
  if (config.text_size < 1) throw ConfigError("text partition must be non-empty");
  if (config.stream_sizes.empty()) throw ConfigError("need at least one audio stream");
  for (int s : config.stream_sizes) {
    if (s < 1) throw ConfigError("audio stream partition must be non-empty");
  }
  Vocabulary v;
  v.text_size_ = config.text_size;
  v.stream_sizes_ = config.stream_sizes;
  TokenId next = config.text_size;
  v.stream_base_.push_back(next);
  for (int s : config.stream_sizes) {
    next += s;
    v.stream_base_.push_back(next);
  }
  v.special_base_ = next;
  next += kNumSpecials;
  v.null_ = next;
  v.total_ = next + 1;
  return v;
}

TokenId Vocabulary::text_id(int word) const {
  if (word < 0 || word >= text_size_) throw DomainError("word index out of range");
  return word;
}

TokenId Vocabulary::audio_id(int m, int a) const {
  if (m < 0 || m >= num_streams()) throw DomainError("stream index out of range");
  if (a < 0 || a >= stream_sizes_[static_cast<std::size_t>(m)])
    throw DomainError("audio token index out of range");
  return stream_base_[static_cast<std::size_t>(m)] + a;
}

Partition Vocabulary::partition_of(TokenId id) const {
  if (id < 0 || id >= total_) throw DomainError("token id out of range");
  if (id < text_size_) return Partition::Text;
  if (id < special_base_) return Partition::Audio;
  if (id < null_) return Partition::Special;
  return Partition::Null;
}

int Vocabulary::local_index(TokenId id) const {
  switch (partition_of(id)) {
    case Partition::Text:
      return id;
    case Partition::Audio:
      for (int m = 0; m < num_streams(); ++m) {
        if (is_audio(id, m)) return id - stream_base_[static_cast<std::size_t>(m)];
      }
      break;
    case Partition::Special:
      return id - special_base_;
    case Partition::Null:
      return 0;
  }
  throw DomainError("unreachable partition");
}

bool Vocabulary::is_audio_frame(const Frame& f) const {
  if (static_cast<int>(f.size()) != num_streams()) return false;
  for (int m = 0; m < num_streams(); ++m) {
    TokenId id = f[static_cast<std::size_t>(m)];
    if (!is_audio(id, m) && !is_null(id)) return false;
  }
  // an all-null column is still a legal flush frame
  return true;
}

bool Vocabulary::is_padded_frame(const Frame& f) const {
  if (static_cast<int>(f.size()) != num_streams()) return false;
  if (!is_text(f[0]) && !is_special(f[0])) return false;
  for (std::size_t m = 1; m < f.size(); ++m) {
    if (!is_null(f[m])) return false;
  }
  return true;
}

nlohmann::json Vocabulary::manifest() const {
  nlohmann::json streams = nlohmann::json::array();
  for (int m = 0; m < num_streams(); ++m) {
    streams.push_back({{"size", stream_sizes_[static_cast<std::size_t>(m)]},
                       {"first_id", stream_base_[static_cast<std::size_t>(m)]},
                       {"last_id", stream_base_[static_cast<std::size_t>(m) + 1] - 1}});
  }
  nlohmann::json specials;
  for (int i = 0; i < kNumSpecials; ++i) {
    specials[kSpecialNames[static_cast<std::size_t>(i)]] = special_base_ + i;
  }
  return {{"text", {{"size", text_size_}, {"first_id", 0}, {"last_id", text_size_ - 1}}},
          {"streams", streams},
          {"specials", specials},
          {"null_id", null_},
          {"total_size", total_}};
}

std::vector<Frame> text_to_frames(std::span<const TokenId> words, const Vocabulary& vocab) {
  std::vector<Frame> out;
  out.reserve(words.size());
  const int m = vocab.num_streams();
  for (TokenId w : words) {
    if (!vocab.is_text(w)) throw DomainError("text_to_frames: id outside text partition");
    Frame f(static_cast<std::size_t>(m), vocab.null_id());
    f[0] = w;
    out.push_back(std::move(f));
  }
  return out;
}

Frame special_to_frame(TokenId token, const Vocabulary& vocab) {
  if (!vocab.is_special(token)) throw DomainError("special_to_frame: id not a special token");
  Frame f(static_cast<std::size_t>(vocab.num_streams()), vocab.null_id());
  f[0] = token;
  return f;
}

Frame special_to_frame(Special s, const Vocabulary& vocab) {
  return special_to_frame(vocab.special_id(s), vocab);
}

std::vector<TokenId> frames_to_text(std::span<const Frame> frames, const Vocabulary& vocab) {
  std::vector<TokenId> out;
  out.reserve(frames.size());
  for (const Frame& f : frames) {
    if (!vocab.is_padded_frame(f) || !vocab.is_text(f[0]))
      throw DomainError("frames_to_text: not a text frame");
    out.push_back(f[0]);
  }
  return out;
}

}  // namespace cotdlg
