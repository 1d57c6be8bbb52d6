// SPDX-License-Identifier: Apache-2.0
#include "cotdlg/framing.hpp"

#include <algorithm>

#include "cotdlg/errors.hpp"

namespace cotdlg {

std::string task_name(Task t) {
  switch (t) {
    case Task::Asr: return "asr";
    case Task::T2t: return "t2t";
    case Task::Tts: return "tts";
    case Task::E2e: return "e2e";
    case Task::Cot: return "cot";
    case Task::TextLm: return "textlm";
  }
  throw ArgumentError("bad task enum");
}

Task parse_task(const std::string& name) {
  if (name == "asr") return Task::Asr;
  if (name == "t2t") return Task::T2t;
  if (name == "tts") return Task::Tts;
  if (name == "e2e") return Task::E2e;
  if (name == "cot") return Task::Cot;
  if (name == "textlm") return Task::TextLm;
  throw ArgumentError("unknown task: " + name);
}

std::string segment_label_name(SegmentLabel l) {
  switch (l) {
    case SegmentLabel::TaskToken: return "task_token";
    case SegmentLabel::TokenizerToken: return "tokenizer_token";
    case SegmentLabel::X: return "x";
    case SegmentLabel::XSpk: return "x_spk";
    case SegmentLabel::Y: return "y";
    case SegmentLabel::SAsr: return "s_asr";
    case SegmentLabel::SRes: return "s_res";
    case SegmentLabel::Eos: return "eos";
  }
  throw ArgumentError("bad segment label enum");
}

std::vector<Frame> delay_interleave(std::span<const Frame> audio_frames, const Vocabulary& vocab) {
  const int m_streams = vocab.num_streams();
  for (const Frame& f : audio_frames) {
    if (!vocab.is_audio_frame(f)) throw DomainError("delay_interleave: non-audio frame");
  }
  const int len = static_cast<int>(audio_frames.size());
  if (len == 0) return {};
  const int out_len = len + m_streams - 1;
  std::vector<Frame> out(static_cast<std::size_t>(out_len),
                         Frame(static_cast<std::size_t>(m_streams), vocab.null_id()));
  for (int m = 0; m < m_streams; ++m) {
    for (int t = 0; t < len; ++t) {
      out[static_cast<std::size_t>(t + m)][static_cast<std::size_t>(m)] =
          audio_frames[static_cast<std::size_t>(t)][static_cast<std::size_t>(m)];
    }
  }
  return out;
}

std::vector<Frame> delay_deinterleave(std::span<const Frame> frames, const Vocabulary& vocab) {
  const int m_streams = vocab.num_streams();
  const int total = static_cast<int>(frames.size());
  if (total == 0) return {};
  if (total < m_streams - 1) throw FormatError("delay_deinterleave: pattern too short");
  const int len = total - (m_streams - 1);
  // positions outside stream m's active window [m, m+len) must hold null
  for (int m = 0; m < m_streams; ++m) {
    for (int t = 0; t < total; ++t) {
      if (t >= m && t < m + len) continue;
      if (!vocab.is_null(frames[static_cast<std::size_t>(t)][static_cast<std::size_t>(m)]))
        throw FormatError("delay_deinterleave: non-null token where the pattern requires null");
    }
  }
  std::vector<Frame> out(static_cast<std::size_t>(len),
                         Frame(static_cast<std::size_t>(m_streams), vocab.null_id()));
  for (int m = 0; m < m_streams; ++m) {
    for (int t = 0; t < len; ++t) {
      out[static_cast<std::size_t>(t)][static_cast<std::size_t>(m)] =
          frames[static_cast<std::size_t>(t + m)][static_cast<std::size_t>(m)];
    }
  }
  return out;
}

std::vector<Frame> deinterleave_lenient(std::span<const Frame> frames, const Vocabulary& vocab) {
  const int m_streams = vocab.num_streams();
  const int total = static_cast<int>(frames.size());
  const int len = std::max(0, total - (m_streams - 1));
  std::vector<Frame> out(static_cast<std::size_t>(len),
                         Frame(static_cast<std::size_t>(m_streams), vocab.null_id()));
  for (int m = 0; m < m_streams; ++m) {
    for (int t = 0; t < len; ++t) {
      const int src = t + m;
      if (src < total)
        out[static_cast<std::size_t>(t)][static_cast<std::size_t>(m)] =
            frames[static_cast<std::size_t>(src)][static_cast<std::size_t>(m)];
    }
  }
  return out;
}

namespace {

Segment token_segment(SegmentLabel label, Special s, const Vocabulary& vocab) {
  return {label, Role::Condition, {special_to_frame(s, vocab)}};
}

Segment text_segment(SegmentLabel label, Role role, std::span<const TokenId> words,
                     const Vocabulary& vocab) {
  return {label, role, text_to_frames(words, vocab)};
}

Segment audio_segment(SegmentLabel label, Role role, std::span<const Frame> raw,
                      const Vocabulary& vocab) {
  return {label, role, delay_interleave(raw, vocab)};
}

Segment eos_segment(const Vocabulary& vocab) {
  return {SegmentLabel::Eos, Role::Target, {special_to_frame(Special::Eos, vocab)}};
}

// Condition blocks of the task-template table. Each returns the segments of
// one C^task block; CoT concatenates them around its intermediate targets.
std::vector<Segment> asr_condition(std::span<const Frame> x_raw, const Vocabulary& vocab) {
  std::vector<Segment> segs;
  segs.push_back(token_segment(SegmentLabel::TaskToken, Special::Asr, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::AudioTk, vocab));
  segs.push_back(audio_segment(SegmentLabel::X, Role::Condition, x_raw, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::TextTk, vocab));
  return segs;
}

std::vector<Segment> t2t_condition(std::span<const TokenId> s_asr, bool include_text,
                                   const Vocabulary& vocab) {
  std::vector<Segment> segs;
  segs.push_back(token_segment(SegmentLabel::TaskToken, Special::T2t, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::TextTk, vocab));
  if (include_text)
    segs.push_back(text_segment(SegmentLabel::SAsr, Role::Condition, s_asr, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::TextTk, vocab));
  return segs;
}

std::vector<Segment> tts_condition(std::span<const TokenId> s_res, bool include_text,
                                   std::span<const Frame> x_spk_raw, const Vocabulary& vocab) {
  std::vector<Segment> segs;
  segs.push_back(token_segment(SegmentLabel::TaskToken, Special::Tts, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::TextTk, vocab));
  if (include_text)
    segs.push_back(text_segment(SegmentLabel::SRes, Role::Condition, s_res, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::SpeakerTk, vocab));
  segs.push_back(audio_segment(SegmentLabel::XSpk, Role::Condition, x_spk_raw, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::AudioTk, vocab));
  return segs;
}

std::vector<Segment> e2e_condition(std::span<const Frame> x_raw, std::span<const Frame> x_spk_raw,
                                   const Vocabulary& vocab) {
  std::vector<Segment> segs;
  segs.push_back(token_segment(SegmentLabel::TaskToken, Special::S2s, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::AudioTk, vocab));
  segs.push_back(audio_segment(SegmentLabel::X, Role::Condition, x_raw, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::SpeakerTk, vocab));
  segs.push_back(audio_segment(SegmentLabel::XSpk, Role::Condition, x_spk_raw, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::AudioTk, vocab));
  return segs;
}

std::vector<Segment> textlm_condition(const Vocabulary& vocab) {
  std::vector<Segment> segs;
  segs.push_back(token_segment(SegmentLabel::TaskToken, Special::Bos, vocab));
  segs.push_back(token_segment(SegmentLabel::TokenizerToken, Special::TextTk, vocab));
  return segs;
}

void append(std::vector<Segment>& dst, std::vector<Segment>&& src) {
  for (auto& s : src) dst.push_back(std::move(s));
}

TaskSequence assemble(Task task, std::vector<Segment>&& segments, const Vocabulary& vocab) {
  TaskSequence seq;
  seq.task = task;
  seq.segments = std::move(segments);
  std::size_t total = 0;
  for (const auto& s : seq.segments) total += s.frames.size();
  seq.frames.reserve(total);
  for (const auto& s : seq.segments) {
    seq.frames.insert(seq.frames.end(), s.frames.begin(), s.frames.end());
  }
  seq.loss_mask = MaskMatrix::Constant(static_cast<Eigen::Index>(total), vocab.num_streams(), false);
  Eigen::Index row = 0;
  for (const auto& s : seq.segments) {
    for (std::size_t i = 0; i < s.frames.size(); ++i, ++row) {
      if (s.role == Role::Target) seq.loss_mask.row(row).setConstant(true);
    }
  }
  return seq;
}

std::vector<Frame> flatten(const std::vector<Segment>& segments) {
  std::vector<Frame> out;
  for (const auto& s : segments) out.insert(out.end(), s.frames.begin(), s.frames.end());
  return out;
}

void check_text_part(std::span<const TokenId> words, const Vocabulary& vocab, const char* what) {
  for (TokenId w : words) {
    if (!vocab.is_text(w)) throw DomainError(std::string(what) + ": id outside text partition");
  }
}

}  // namespace

TaskSequence build_sequence(Task task, const SequenceParts& parts, const Vocabulary& vocab,
                            const BuildOptions& options) {
  check_text_part(parts.s_asr, vocab, "s_asr");
  check_text_part(parts.s_res, vocab, "s_res");
  check_text_part(parts.text, vocab, "text");
  const bool dup = options.duplicate_intermediates;

  std::vector<Segment> segs;
  switch (task) {
    case Task::Asr:
      if (parts.x.empty()) throw ArgumentError("asr sequence requires x");
      append(segs, asr_condition(parts.x, vocab));
      segs.push_back(text_segment(SegmentLabel::SAsr, Role::Target, parts.s_asr, vocab));
      segs.push_back(eos_segment(vocab));
      break;
    case Task::T2t:
      append(segs, t2t_condition(parts.s_asr, true, vocab));
      segs.push_back(text_segment(SegmentLabel::SRes, Role::Target, parts.s_res, vocab));
      segs.push_back(eos_segment(vocab));
      break;
    case Task::Tts:
      if (parts.y.empty()) throw ArgumentError("tts sequence requires y");
      append(segs, tts_condition(parts.s_res, true, parts.x_spk, vocab));
      segs.push_back(audio_segment(SegmentLabel::Y, Role::Target, parts.y, vocab));
      segs.push_back(eos_segment(vocab));
      break;
    case Task::E2e:
      if (parts.x.empty() || parts.y.empty()) throw ArgumentError("e2e sequence requires x and y");
      append(segs, e2e_condition(parts.x, parts.x_spk, vocab));
      segs.push_back(audio_segment(SegmentLabel::Y, Role::Target, parts.y, vocab));
      segs.push_back(eos_segment(vocab));
      break;
    case Task::Cot:
      if (parts.x.empty() || parts.y.empty()) throw ArgumentError("cot sequence requires x and y");
      append(segs, asr_condition(parts.x, vocab));
      segs.push_back(text_segment(SegmentLabel::SAsr, Role::Target, parts.s_asr, vocab));
      segs.push_back(eos_segment(vocab));
      append(segs, t2t_condition(parts.s_asr, dup, vocab));
      segs.push_back(text_segment(SegmentLabel::SRes, Role::Target, parts.s_res, vocab));
      segs.push_back(eos_segment(vocab));
      append(segs, tts_condition(parts.s_res, dup, parts.x_spk, vocab));
      segs.push_back(audio_segment(SegmentLabel::Y, Role::Target, parts.y, vocab));
      segs.push_back(eos_segment(vocab));
      break;
    case Task::TextLm:
      append(segs, textlm_condition(vocab));
      segs.push_back(text_segment(SegmentLabel::SRes, Role::Target, parts.text, vocab));
      segs.push_back(eos_segment(vocab));
      break;
  }
  return assemble(task, std::move(segs), vocab);
}

MaskMatrix loss_mask_of(const TaskSequence& sequence) {
  Eigen::Index total = 0;
  for (const auto& s : sequence.segments) total += static_cast<Eigen::Index>(s.frames.size());
  const Eigen::Index m = sequence.loss_mask.cols();
  MaskMatrix mask = MaskMatrix::Constant(total, m, false);
  Eigen::Index row = 0;
  for (const auto& s : sequence.segments) {
    for (std::size_t i = 0; i < s.frames.size(); ++i, ++row) {
      if (s.role == Role::Target) mask.row(row).setConstant(true);
    }
  }
  return mask;
}

std::vector<Frame> cot_stage1_prompt(std::span<const Frame> x_raw, const Vocabulary& vocab) {
  return flatten(asr_condition(x_raw, vocab));
}

std::vector<Frame> cot_stage2_prompt(std::span<const Frame> x_raw, std::span<const TokenId> s_asr,
                                     const Vocabulary& vocab, const BuildOptions& options) {
  check_text_part(s_asr, vocab, "s_asr");
  auto segs = asr_condition(x_raw, vocab);
  segs.push_back(text_segment(SegmentLabel::SAsr, Role::Target, s_asr, vocab));
  segs.push_back(eos_segment(vocab));
  append(segs, t2t_condition(s_asr, options.duplicate_intermediates, vocab));
  return flatten(segs);
}

std::vector<Frame> cot_stage3_prompt(std::span<const Frame> x_raw, std::span<const TokenId> s_asr,
                                     std::span<const TokenId> s_res,
                                     std::span<const Frame> x_spk_raw, const Vocabulary& vocab,
                                     const BuildOptions& options) {
  check_text_part(s_res, vocab, "s_res");
  auto segs = asr_condition(x_raw, vocab);
  segs.push_back(text_segment(SegmentLabel::SAsr, Role::Target, s_asr, vocab));
  segs.push_back(eos_segment(vocab));
  append(segs, t2t_condition(s_asr, options.duplicate_intermediates, vocab));
  segs.push_back(text_segment(SegmentLabel::SRes, Role::Target, s_res, vocab));
  segs.push_back(eos_segment(vocab));
  append(segs, tts_condition(s_res, options.duplicate_intermediates, x_spk_raw, vocab));
  return flatten(segs);
}

std::vector<Frame> e2e_prompt(std::span<const Frame> x_raw, std::span<const Frame> x_spk_raw,
                              const Vocabulary& vocab) {
  return flatten(e2e_condition(x_raw, x_spk_raw, vocab));
}

std::vector<Frame> asr_prompt(std::span<const Frame> x_raw, const Vocabulary& vocab) {
  return flatten(asr_condition(x_raw, vocab));
}

std::vector<Frame> t2t_prompt(std::span<const TokenId> s_asr, const Vocabulary& vocab) {
  check_text_part(s_asr, vocab, "s_asr");
  return flatten(t2t_condition(s_asr, true, vocab));
}

std::vector<Frame> tts_prompt(std::span<const TokenId> s_res, std::span<const Frame> x_spk_raw,
                              const Vocabulary& vocab) {
  check_text_part(s_res, vocab, "s_res");
  return flatten(tts_condition(s_res, true, x_spk_raw, vocab));
}

std::vector<Frame> textlm_prompt(const Vocabulary& vocab) {
  return flatten(textlm_condition(vocab));
}

}  // namespace cotdlg
