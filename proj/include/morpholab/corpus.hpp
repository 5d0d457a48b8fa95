#pragma once

#include <string>
#include <vector>

namespace morpholab {

// One verse of tokenized text. Tokens are non-empty and contain no whitespace.
struct VerseRecord {
  std::string verse_id;
  std::vector<std::string> tokens;

  bool operator==(const VerseRecord&) const = default;
};

// Verse-aligned corpus for one language. Verse order is the canonical order
// shared by all languages of the same collection.
struct ParallelCorpus {
  std::string language_code;
  std::vector<VerseRecord> verses;
};

struct DataSplit {
  std::vector<VerseRecord> train;
  std::vector<VerseRecord> dev;
  std::vector<VerseRecord> test;
};

// Default replacement for characters seen at most once in the training set.
// U+2047 DOUBLE QUESTION MARK; must not occur in input corpora.
inline constexpr char32_t kUnkChar = U'⁇';

// Reads a TSV corpus: `verse_id<TAB>tok1 tok2 ...`, UTF-8, one verse per line.
// Rejects lines without a TAB, duplicate verse ids, empty tokens (consecutive
// or leading/trailing spaces) and any occurrence of `reserved` in a token.
ParallelCorpus load_corpus(const std::string& path, const std::string& language_code,
                           char32_t reserved = kUnkChar);

// Writes the same TSV shape back (used by the CLI stage outputs).
void save_corpus(const std::vector<VerseRecord>& verses, const std::string& path);

// Deterministic block split: every complete block of 30 consecutive verses
// contributes its first 5 verses to dev, the next 5 to test and the remaining
// 20 to train; a trailing incomplete block goes entirely to train.
DataSplit split_corpus(const ParallelCorpus& corpus);

inline constexpr std::size_t kSplitBlock = 30;
inline constexpr std::size_t kSplitDevPerBlock = 5;
inline constexpr std::size_t kSplitTestPerBlock = 5;

// Replaces every character whose frequency over the train set is <= 1 with
// `unk` in all three splits. Characters absent from train are replaced too.
DataSplit unk_singleton_chars(const DataSplit& split, char32_t unk = kUnkChar);

}  // namespace morpholab
