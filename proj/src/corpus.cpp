#include "morpholab/corpus.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "morpholab/text_io.hpp"
#include "morpholab/utf8.hpp"

namespace morpholab {

ParallelCorpus load_corpus(const std::string& path, const std::string& language_code,
                           char32_t reserved) {
  ParallelCorpus corpus;
  corpus.language_code = language_code;
  std::unordered_set<std::string> seen_ids;
  const std::vector<std::string> lines = read_lines(path);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string& line = lines[ln];
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(path, ln + 1, "missing TAB separator");
    VerseRecord verse;
    verse.verse_id = line.substr(0, tab);
    if (verse.verse_id.empty()) throw ParseError(path, ln + 1, "empty verse id");
    if (!seen_ids.insert(verse.verse_id).second) {
      throw ParseError(path, ln + 1, "duplicate verse id: " + verse.verse_id);
    }
    const std::string text = line.substr(tab + 1);
    for (const std::string& tok : split_on(text, ' ')) {
      if (tok.empty()) throw ParseError(path, ln + 1, "empty token (check spacing)");
      for (char32_t c : utf8_decode(tok)) {
        if (c == reserved) {
          throw ParseError(path, ln + 1,
                           "reserved symbol " + utf8_encode(reserved) + " occurs in input");
        }
      }
      verse.tokens.push_back(tok);
    }
    if (verse.tokens.empty()) throw ParseError(path, ln + 1, "verse has no tokens");
    corpus.verses.push_back(std::move(verse));
  }
  return corpus;
}

void save_corpus(const std::vector<VerseRecord>& verses, const std::string& path) {
  std::string out;
  for (const VerseRecord& v : verses) {
    out += v.verse_id;
    out += '\t';
    for (std::size_t i = 0; i < v.tokens.size(); ++i) {
      if (i) out += ' ';
      out += v.tokens[i];
    }
    out += '\n';
  }
  write_file(path, out);
}

DataSplit split_corpus(const ParallelCorpus& corpus) {
  if (corpus.verses.empty()) throw std::invalid_argument("split_corpus: empty corpus");
  DataSplit split;
  const std::size_t n = corpus.verses.size();
  const std::size_t blocks = n / kSplitBlock;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t base = b * kSplitBlock;
    for (std::size_t i = 0; i < kSplitBlock; ++i) {
      const VerseRecord& v = corpus.verses[base + i];
      if (i < kSplitDevPerBlock) {
        split.dev.push_back(v);
      } else if (i < kSplitDevPerBlock + kSplitTestPerBlock) {
        split.test.push_back(v);
      } else {
        split.train.push_back(v);
      }
    }
  }
  for (std::size_t i = blocks * kSplitBlock; i < n; ++i) {
    split.train.push_back(corpus.verses[i]);
  }
  return split;
}

namespace {

void count_chars(const std::vector<VerseRecord>& verses,
                 std::unordered_map<char32_t, std::size_t>& counts) {
  for (const VerseRecord& v : verses) {
    for (const std::string& tok : v.tokens) {
      for (char32_t c : utf8_decode(tok)) ++counts[c];
    }
  }
}

std::vector<VerseRecord> replace_rare(const std::vector<VerseRecord>& verses,
                                      const std::unordered_map<char32_t, std::size_t>& counts,
                                      char32_t unk) {
  std::vector<VerseRecord> out;
  out.reserve(verses.size());
  for (const VerseRecord& v : verses) {
    VerseRecord nv;
    nv.verse_id = v.verse_id;
    nv.tokens.reserve(v.tokens.size());
    for (const std::string& tok : v.tokens) {
      std::u32string t = utf8_decode(tok);
      for (char32_t& c : t) {
        const auto it = counts.find(c);
        if (it == counts.end() || it->second <= 1) c = unk;
      }
      nv.tokens.push_back(utf8_encode(t));
    }
    out.push_back(std::move(nv));
  }
  return out;
}

}  // namespace

DataSplit unk_singleton_chars(const DataSplit& split, char32_t unk) {
  std::unordered_map<char32_t, std::size_t> counts;
  count_chars(split.train, counts);
  DataSplit out;
  out.train = replace_rare(split.train, counts, unk);
  out.dev = replace_rare(split.dev, counts, unk);
  out.test = replace_rare(split.test, counts, unk);
  return out;
}

}  // namespace morpholab
