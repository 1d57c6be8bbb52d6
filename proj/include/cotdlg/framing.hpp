// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cotdlg/token_space.hpp"
#include "cotdlg/types.hpp"

namespace cotdlg {

/// Training/inference sequence kinds. The first five follow the task-template
/// table; textlm is the plain text continuation task used in the pre-training
/// mix and by the perplexity scorer.
enum class Task { Asr, T2t, Tts, E2e, Cot, TextLm };

std::string task_name(Task t);
Task parse_task(const std::string& name);

enum class Role { Condition, Target };

enum class SegmentLabel { TaskToken, TokenizerToken, X, XSpk, Y, SAsr, SRes, Eos };

std::string segment_label_name(SegmentLabel l);

struct Segment {
  SegmentLabel label;
  Role role;
  std::vector<Frame> frames;
};

/// One flattened training sequence plus its per-(position, stream) loss mask.
/// The mask is true exactly on frames owned by role=target segments.
struct TaskSequence {
  Task task = Task::Asr;
  std::vector<Segment> segments;
  std::vector<Frame> frames;
  MaskMatrix loss_mask;  // length x M

  int length() const { return static_cast<int>(frames.size()); }
};

/// Raw inputs for sequence construction. Audio spans hold codec frames as
/// produced by the synthetic encoder; build_sequence applies the delay
/// interleave to them internally.
struct SequenceParts {
  std::vector<Frame> x;
  std::vector<TokenId> s_asr;
  std::vector<TokenId> s_res;
  std::vector<Frame> x_spk;
  std::vector<Frame> y;
  std::vector<TokenId> text;  // textlm only
};

struct BuildOptions {
  /// When true, the t2t and tts condition blocks inside the CoT sequence
  /// repeat the transcript / text response verbatim, matching the template
  /// table's definitions of those blocks. When false the copies are elided
  /// and only the task/tokenizer token skeleton remains.
  bool duplicate_intermediates = true;
};

/// Build the training sequence for `task` from `parts`. Segment order follows
/// the task-template table; every target segment is terminated by an <eos>
/// frame that is included in the loss mask.
TaskSequence build_sequence(Task task, const SequenceParts& parts, const Vocabulary& vocab,
                            const BuildOptions& options = {});

/// Shift stream m down by m-1 positions so one autoregressive step emits all
/// M streams; output holds |input| + M-1 frames, with nulls in the lead-in
/// and flush positions.
std::vector<Frame> delay_interleave(std::span<const Frame> audio_frames, const Vocabulary& vocab);

/// Strict inverse of delay_interleave. Throws FormatError when a position
/// that the pattern forces to null holds anything else.
std::vector<Frame> delay_deinterleave(std::span<const Frame> frames, const Vocabulary& vocab);

/// Inverse of the delay pattern for model-generated audio: undoes the shifts
/// without validating the pattern, substituting null for out-of-range reads.
std::vector<Frame> deinterleave_lenient(std::span<const Frame> frames, const Vocabulary& vocab);

/// Recompute the loss mask from segment roles.
MaskMatrix loss_mask_of(const TaskSequence& sequence);

// Decode-time prompt construction. These reuse the exact segment builders
// behind build_sequence, so inference contexts match training templates
// position for position.
std::vector<Frame> cot_stage1_prompt(std::span<const Frame> x_raw, const Vocabulary& vocab);
std::vector<Frame> cot_stage2_prompt(std::span<const Frame> x_raw, std::span<const TokenId> s_asr,
                                     const Vocabulary& vocab, const BuildOptions& options = {});
std::vector<Frame> cot_stage3_prompt(std::span<const Frame> x_raw, std::span<const TokenId> s_asr,
                                     std::span<const TokenId> s_res,
                                     std::span<const Frame> x_spk_raw, const Vocabulary& vocab,
                                     const BuildOptions& options = {});
std::vector<Frame> e2e_prompt(std::span<const Frame> x_raw, std::span<const Frame> x_spk_raw,
                              const Vocabulary& vocab);
std::vector<Frame> asr_prompt(std::span<const Frame> x_raw, const Vocabulary& vocab);
std::vector<Frame> t2t_prompt(std::span<const TokenId> s_asr, const Vocabulary& vocab);
std::vector<Frame> tts_prompt(std::span<const TokenId> s_res, std::span<const Frame> x_spk_raw,
                              const Vocabulary& vocab);
std::vector<Frame> textlm_prompt(const Vocabulary& vocab);

}  // namespace cotdlg
