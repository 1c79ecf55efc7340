#include "parity_sched/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace parity {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::EmptyInput: return "EmptyInput";
  case ErrorCode::NonPositiveTime: return "NonPositiveTime";
  case ErrorCode::Overflow: return "Overflow";
  case ErrorCode::MismatchedInstance: return "MismatchedInstance";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::SumCapExceeded: return "SumCapExceeded";
  case ErrorCode::InvalidK: return "InvalidK";
  case ErrorCode::InvalidL: return "InvalidL";
  case ErrorCode::InvalidPlj: return "InvalidPlj";
  case ErrorCode::InvalidDelta: return "InvalidDelta";
  case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

JobSet JobSet::from_values(std::span<const std::int64_t> values) {
  if (values.empty())
    throw Error(ErrorCode::EmptyInput, "job set needs at least one value");

  std::vector<Time> times;
  times.reserve(values.size());
  Time total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto v = values[i];
    if (v <= 0)
      throw Error(ErrorCode::NonPositiveTime,
                  "processing time at position " + std::to_string(i) +
                      " is not positive: " + std::to_string(v));
    const auto t = static_cast<Time>(v);
    if (total > std::numeric_limits<Time>::max() - t)
      throw Error(ErrorCode::Overflow, "sum of processing times overflows 64 bits");
    total += t;
    times.push_back(t);
  }
  std::stable_sort(times.begin(), times.end(), std::greater<>{});
  return JobSet(std::move(times), total);
}

JobSet JobSet::prefix(std::size_t count) const {
  if (count == 0 || count > times_.size())
    throw Error(ErrorCode::MismatchedInstance, "prefix length out of range");
  std::vector<Time> head(times_.begin(), times_.begin() + count);
  const Time total = std::accumulate(head.begin(), head.end(), Time{0});
  return JobSet(std::move(head), total);
}

Partition Partition::from_membership(const JobSet &jobs,
                                     const std::vector<bool> &on_side1) {
  if (on_side1.size() != jobs.size())
    throw Error(ErrorCode::MismatchedInstance, "membership size differs from job count");
  Partition p;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (on_side1[i]) {
      p.side1.push_back(i);
      p.sum1 += jobs[i];
    } else {
      p.side2.push_back(i);
      p.sum2 += jobs[i];
    }
  }
  p.difference = p.sum1 > p.sum2 ? p.sum1 - p.sum2 : p.sum2 - p.sum1;
  return p;
}

namespace {
u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}
} // namespace

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0)
    throw Error(ErrorCode::Overflow, "ratio with zero denominator");
  const auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Ratio Ratio::from_wide(u128 numerator, u128 denominator) {
  if (denominator == 0)
    throw Error(ErrorCode::Overflow, "ratio with zero denominator");
  const u128 g = gcd128(numerator, denominator);
  numerator /= g;
  denominator /= g;
  constexpr u128 limit = std::numeric_limits<std::uint64_t>::max();
  if (numerator > limit || denominator > limit)
    throw Error(ErrorCode::Overflow, "ratio terms exceed 64 bits");
  Ratio r;
  r.num_ = static_cast<std::uint64_t>(numerator);
  r.den_ = static_cast<std::uint64_t>(denominator);
  return r;
}

std::string Ratio::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t ceil_half(std::size_t value) { return value / 2 + value % 2; }

} // namespace parity
