#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morpholab/corpus.hpp"

namespace morpholab {

inline constexpr std::size_t kMattrWindow = 500;

// Corpus-based morphological complexity measures of a training set, computed
// on word tokens before any segmentation.
struct ComplexityProfile {
  std::size_t types = 0;
  std::size_t token_count = 0;
  double ttr = 0.0;
  double mattr = 0.0;
  double mlw = 0.0;
};

std::size_t count_types(const std::vector<std::string>& tokens);

// types / tokens; errors on empty input.
double ttr(const std::vector<std::string>& tokens);

// Mean TTR over every contiguous window of exactly `window` tokens (stride 1).
// Falls back to whole-text TTR when fewer than `window` tokens are available.
double mattr(const std::vector<std::string>& tokens, std::size_t window = kMattrWindow);

// Mean number of Unicode scalar values per token.
double mlw(const std::vector<std::string>& tokens);

// All four measures over the concatenated train token stream, in corpus order.
ComplexityProfile complexity_profile(const std::vector<VerseRecord>& train,
                                     std::size_t window = kMattrWindow);

// CSV row per the report format: language_code, token_count, types, ttr, mattr, mlw.
std::string complexity_csv_row(const std::string& language_code, const ComplexityProfile& p);
inline constexpr const char* kComplexityCsvHeader =
    "language_code,token_count,types,ttr,mattr,mlw";

}  // namespace morpholab
