#pragma once

// Domain types shared by the scheduling, partition, bound and simulation
// modules. Everything here is immutable after construction.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parity {

using Time = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

enum class ErrorCode {
  EmptyInput,
  NonPositiveTime,
  Overflow,
  MismatchedInstance,
  TooLarge,
  SumCapExceeded,
  InvalidK,
  InvalidL,
  InvalidPlj,
  InvalidDelta,
  InvalidConfig,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// The multiset K of positive integer processing times, kept in
/// non-increasing order (t_1 >= t_2 >= ... >= t_n).
class JobSet {
public:
  /// Sorts `values` non-increasing (stable among equal values). Throws
  /// EmptyInput, NonPositiveTime, or Overflow when the total does not fit
  /// in 64 bits.
  static JobSet from_values(std::span<const std::int64_t> values);

  std::size_t size() const noexcept { return times_.size(); }
  std::span<const Time> times() const noexcept { return times_; }
  /// Zero-based access.
  Time operator[](std::size_t i) const { return times_[i]; }
  /// One-based access, t_i.
  Time t(std::size_t i) const { return times_.at(i - 1); }
  Time total_sum() const noexcept { return total_; }

  /// First `count` jobs, {t_1..t_count}.
  JobSet prefix(std::size_t count) const;

  bool operator==(const JobSet &) const = default;

private:
  JobSet(std::vector<Time> times, Time total)
      : times_(std::move(times)), total_(total) {}

  std::vector<Time> times_;
  Time total_ = 0;
};

/// S(K)
inline Time total_sum(const JobSet &jobs) { return jobs.total_sum(); }

/// A two-way split of a JobSet, indices are zero-based into the JobSet.
struct Partition {
  std::vector<std::size_t> side1;
  std::vector<std::size_t> side2;
  Time sum1 = 0;
  Time sum2 = 0;
  Time difference = 0;

  /// Builds a partition from the side-1 membership and fills sums.
  static Partition from_membership(const JobSet &jobs,
                                   const std::vector<bool> &on_side1);

  Time larger_sum() const { return sum1 > sum2 ? sum1 : sum2; }
};

enum class Machine : std::uint8_t { One = 1, Two = 2 };

struct TwoMachineSchedule {
  std::vector<Machine> assignment; // per job, zero-based
  Time load1 = 0;
  Time load2 = 0;
  Time makespan = 0;               // C_G
  std::size_t last_job_index = 0;  // L, one-based
  std::size_t critical_job_count = 0; // k
  std::size_t m_value = 0;         // ceil(L / 2)

  std::size_t job_count() const { return assignment.size(); }
};

/// Non-negative rational with a positive denominator. Stored in lowest
/// terms; ordering and equality go through 128-bit cross-multiplication.
class Ratio {
public:
  Ratio() = default;
  Ratio(std::uint64_t numerator, std::uint64_t denominator);

  /// Reduces a 128-bit fraction; throws Overflow if the reduced terms do
  /// not fit in 64 bits.
  static Ratio from_wide(u128 numerator, u128 denominator);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Ratio &a, const Ratio &b) {
    const u128 lhs = static_cast<u128>(a.num_) * b.den_;
    const u128 rhs = static_cast<u128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  friend bool operator==(const Ratio &a, const Ratio &b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// True iff a / b <= r, exact. Requires b > 0.
inline bool ratio_at_most(Time a, Time b, const Ratio &r) {
  return static_cast<u128>(a) * r.denominator() <=
         static_cast<u128>(r.numerator()) * b;
}

inline Ratio min(const Ratio &a, const Ratio &b) { return b < a ? b : a; }
inline Ratio max(const Ratio &a, const Ratio &b) { return a < b ? b : a; }

std::size_t ceil_half(std::size_t value);

} // namespace parity
