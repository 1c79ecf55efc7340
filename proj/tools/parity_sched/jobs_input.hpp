#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parity::cli {

/// Values above this are rejected so that exact bound checks
/// (48 M^3 * C_G) stay inside 128-bit arithmetic.
inline constexpr std::int64_t kMaxInputValue = std::int64_t{1} << 40;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Integers separated by any mix of whitespace and commas. Lines whose first
/// non-blank character is '#' are skipped. Throws ParseError naming the
/// offending token. Range checks beyond "is an integer" are left to the
/// library, except the 2^40 ceiling.
std::vector<std::int64_t> parse_jobs_text(std::string_view text);

/// Resolves the job source: inline values when given, otherwise the file
/// (where "-" means stdin), otherwise stdin. Throws ParseError on an empty
/// result or an unreadable file.
std::vector<std::int64_t> read_jobs(const std::vector<std::string> &inline_values,
                                    const std::optional<std::string> &file,
                                    std::istream &stdin_stream);

} // namespace parity::cli
