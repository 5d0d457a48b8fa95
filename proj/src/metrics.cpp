#include "morpholab/metrics.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "morpholab/text_io.hpp"
#include "morpholab/utf8.hpp"

namespace morpholab {

std::size_t count_types(const std::vector<std::string>& tokens) {
  std::unordered_set<std::string> types(tokens.begin(), tokens.end());
  return types.size();
}

double ttr(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("ttr: empty token sequence");
  return static_cast<double>(count_types(tokens)) / static_cast<double>(tokens.size());
}

double mattr(const std::vector<std::string>& tokens, std::size_t window) {
  if (tokens.empty()) throw std::invalid_argument("mattr: empty token sequence");
  if (window == 0) throw std::invalid_argument("mattr: window must be >= 1");
  const std::size_t n = tokens.size();
  if (n < window) return ttr(tokens);
  // Sliding window with incremental distinct count.
  std::unordered_map<std::string, std::size_t> counts;
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < window; ++i) {
    if (++counts[tokens[i]] == 1) ++distinct;
  }
  double sum = static_cast<double>(distinct);
  for (std::size_t i = window; i < n; ++i) {
    if (++counts[tokens[i]] == 1) ++distinct;
    auto it = counts.find(tokens[i - window]);
    if (--it->second == 0) {
      counts.erase(it);
      --distinct;
    }
    sum += static_cast<double>(distinct);
  }
  const std::size_t windows = n - window + 1;
  return sum / (static_cast<double>(window) * static_cast<double>(windows));
}

double mlw(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("mlw: empty token sequence");
  std::size_t chars = 0;
  for (const std::string& t : tokens) chars += utf8_length(t);
  return static_cast<double>(chars) / static_cast<double>(tokens.size());
}

ComplexityProfile complexity_profile(const std::vector<VerseRecord>& train, std::size_t window) {
  std::vector<std::string> tokens;
  for (const VerseRecord& v : train) {
    tokens.insert(tokens.end(), v.tokens.begin(), v.tokens.end());
  }
  if (tokens.empty()) throw std::invalid_argument("complexity_profile: no tokens");
  ComplexityProfile p;
  p.types = count_types(tokens);
  p.token_count = tokens.size();
  p.ttr = ttr(tokens);
  p.mattr = mattr(tokens, window);
  p.mlw = mlw(tokens);
  return p;
}

std::string complexity_csv_row(const std::string& language_code, const ComplexityProfile& p) {
  return csv_join({language_code, std::to_string(p.token_count), std::to_string(p.types),
                   format_double(p.ttr), format_double(p.mattr), format_double(p.mlw)});
}

}  // namespace morpholab
