#include "jobs_input.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace parity::cli {

namespace {

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n' ||
         c == '\f' || c == '\v';
}

std::int64_t parse_token(std::string_view token) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+')
    digits.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError("value out of range: '" + std::string(token) + "'");
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("not an integer: '" + std::string(token) + "'");
  if (value > kMaxInputValue)
    throw ParseError("value above 2^40: '" + std::string(token) + "'");
  return value;
}

} // namespace

std::vector<std::int64_t> parse_jobs_text(std::string_view text) {
  std::vector<std::int64_t> values;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#')
      continue;

    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_separator(line[i]))
        ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_separator(line[i]))
        ++i;
      if (i > start)
        values.push_back(parse_token(line.substr(start, i - start)));
    }
  }
  return values;
}

std::vector<std::int64_t> read_jobs(const std::vector<std::string> &inline_values,
                                    const std::optional<std::string> &file,
                                    std::istream &stdin_stream) {
  std::string text;
  std::string source;
  if (!inline_values.empty()) {
    for (const auto &v : inline_values)
      text += v + "\n";
    source = "command line";
  } else if (file && *file != "-") {
    std::ifstream in(*file, std::ios::binary);
    if (!in)
      throw ParseError("cannot read jobs file '" + *file + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
    source = "file '" + *file + "'";
  } else {
    text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
    source = "standard input";
  }

  auto values = parse_jobs_text(text);
  if (values.empty())
    throw ParseError("no job values found on " + source);
  return values;
}

} // namespace parity::cli
