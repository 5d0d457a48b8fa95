#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morpholab/corpus.hpp"

namespace morpholab {

enum class SegMethod { CHAR, BPE, MORFESSOR, FST_BPE, FST_MORFESSOR };

const char* seg_method_name(SegMethod m);
SegMethod seg_method_from_name(const std::string& name);

// Continuation marker carried as a suffix by every non-word-final unit of the
// subword methods; the character method instead separates word tokens with a
// standalone boundary unit.
inline constexpr const char* kContinuation = "@@";
inline constexpr const char* kWordBoundary = "_";

struct SegmentedVerse {
  std::string verse_id;
  std::vector<std::string> units;
  SegMethod method = SegMethod::CHAR;

  bool operator==(const SegmentedVerse&) const = default;
};

// Ordered BPE merge list plus the symbol vocabulary it induces. Symbols are
// UTF-8 strings; words carry an end-of-word sentinel during training that is
// stripped when units are emitted.
struct MergeTable {
  std::vector<std::pair<std::string, std::string>> merges;
  std::set<std::string> vocab;
};

inline constexpr const char* kEndOfWord = "</w>";

// All characters of all tokens in order, one boundary unit between
// consecutive tokens (none leading or trailing).
SegmentedVerse char_segment(const VerseRecord& verse);

// Greedy frequency merges within word boundaries. Stops after `merge_count`
// merges or when no adjacent pair occurs at least twice. Ties on frequency
// break toward the lexicographically smallest (left, right) pair.
MergeTable bpe_train(const std::vector<VerseRecord>& train, std::size_t merge_count);

// Number of merges from the fraction-of-types rule, half-up rounding.
std::size_t bpe_merge_count(std::size_t types, double fraction = 0.4);

// Raw subword segments of one token (no continuation markers).
std::vector<std::string> bpe_token_segments(const MergeTable& table, const std::string& token);

SegmentedVerse bpe_apply(const MergeTable& table, const VerseRecord& verse);

// Inverse of segmentation; throws on malformed unit sequences (dangling
// continuation marker, empty reconstructed token).
std::vector<std::string> desegment(const SegmentedVerse& sv);

// Suffixes every non-final unit of each token with the continuation marker.
std::vector<std::string> mark_continuations(const std::vector<std::vector<std::string>>& words);

// Merge list file: `left<SPACE>right` per line, training order.
void save_merge_table(const MergeTable& table, const std::string& path);
MergeTable load_merge_table(const std::string& path);

// Segmented corpus files share the corpus TSV shape with units space-separated.
void save_segmented(const std::vector<SegmentedVerse>& verses, const std::string& path);
std::vector<SegmentedVerse> load_segmented(const std::string& path, SegMethod method);

}  // namespace morpholab
