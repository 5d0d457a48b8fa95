#pragma once

#include <string>
#include <vector>

namespace morpholab {

// Thrown for malformed input files; carries the file path and 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        path_(path),
        line_(line) {}
  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

// Whole file as lines, LF endings stripped (a trailing CR is stripped too).
std::vector<std::string> read_lines(const std::string& path);

void write_file(const std::string& path, const std::string& content);

std::vector<std::string> split_on(const std::string& s, char sep);

// Locale-independent shortest-ish representation, stable across runs.
std::string format_double(double v);

// Minimal CSV quoting: fields containing comma, quote or newline are quoted.
std::string csv_join(const std::vector<std::string>& fields);

}  // namespace morpholab
