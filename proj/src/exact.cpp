#include "parity_sched/exact.hpp"

#include <bit>
#include <limits>

namespace parity {

namespace {

// Fixed-width bitset over subset sums with an in-place shift-or.
class SumBitset {
public:
  explicit SumBitset(std::uint64_t bits)
      : bits_(bits), words_((bits + 63) / 64, 0) {}

  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  // this |= this << shift; calls on_new(bit) for every bit that flips on.
  template <class OnNew> void or_shifted(std::uint64_t shift, OnNew &&on_new) {
    if (shift >= bits_)
      return;
    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    for (std::size_t w = words_.size(); w-- > ws;) {
      std::uint64_t v = words_[w - ws] << bs;
      if (bs != 0 && w - ws > 0)
        v |= words_[w - ws - 1] >> (64 - bs);
      if (w + 1 == words_.size())
        v &= tail_mask();
      std::uint64_t fresh = v & ~words_[w];
      words_[w] |= v;
      while (fresh) {
        const int b = std::countr_zero(fresh);
        on_new(static_cast<std::uint64_t>(w) * 64 + b);
        fresh &= fresh - 1;
      }
    }
  }

  // Largest set index <= limit, or bits_ if none.
  std::uint64_t highest_at_most(std::uint64_t limit) const {
    for (std::uint64_t i = limit + 1; i-- > 0;)
      if (test(i))
        return i;
    return bits_;
  }

private:
  std::uint64_t tail_mask() const {
    const unsigned used = bits_ & 63;
    return used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
  }

  std::uint64_t bits_;
  std::vector<std::uint64_t> words_;
};

void check_table(const JobSet &jobs, std::uint64_t cells, std::uint64_t cap) {
  if (cells > cap)
    throw Error(ErrorCode::SumCapExceeded,
                "subset-sum table of " + std::to_string(cells) +
                    " cells exceeds the cap of " + std::to_string(cap) +
                    " (S = " + std::to_string(jobs.total_sum()) + ")");
}

std::vector<std::size_t> side1_of(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> side{0};
  for (std::size_t j = 1; j < n; ++j)
    if (mask >> (j - 1) & 1u)
      side.push_back(j);
  return side;
}

} // namespace

OptimalResult optimal_bruteforce(const JobSet &jobs, std::size_t max_jobs) {
  const std::size_t n = jobs.size();
  if (n > max_jobs || n > 32)
    throw Error(ErrorCode::TooLarge,
                "exhaustive search limited to " + std::to_string(max_jobs) +
                    " jobs, got " + std::to_string(n));

  const Time total = jobs.total_sum();
  const std::uint64_t count = std::uint64_t{1} << (n - 1);

  // Gray-code walk: each step flips one job between sides.
  Time side1 = jobs[0];
  std::uint32_t mask = 0;
  std::uint32_t best_mask = 0;
  auto diff_of = [total](Time s1) {
    const Time s2 = total - s1;
    return s1 >= s2 ? s1 - s2 : s2 - s1;
  };
  Time best_diff = diff_of(side1);

  for (std::uint64_t step = 1; step < count; ++step) {
    const int flip = std::countr_zero(step);
    mask ^= std::uint32_t{1} << flip;
    const Time t = jobs[static_cast<std::size_t>(flip) + 1];
    side1 = (mask >> flip & 1u) ? side1 + t : side1 - t;
    const Time d = diff_of(side1);
    if (d < best_diff ||
        (d == best_diff && side1_of(mask, n) < side1_of(best_mask, n))) {
      best_diff = d;
      best_mask = mask;
    }
  }

  std::vector<bool> members(n, false);
  for (auto i : side1_of(best_mask, n))
    members[i] = true;

  OptimalResult r;
  r.witness = Partition::from_membership(jobs, members);
  r.min_difference = best_diff;
  r.optimal_makespan = r.witness.larger_sum();
  return r;
}

OptimalResult optimal_dp(const JobSet &jobs, std::uint64_t table_cap) {
  const Time total = jobs.total_sum();
  const std::uint64_t half = total / 2;
  check_table(jobs, half + 1, table_cap);

  // first_item[s] = zero-based job whose addition first reached sum s.
  constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> first_item(half + 1, none);
  SumBitset reach(half + 1);
  reach.set(0);

  for (std::size_t i = 0; i < jobs.size() && !reach.test(half); ++i)
    reach.or_shifted(jobs[i], [&](std::uint64_t s) {
      first_item[s] = static_cast<std::uint32_t>(i);
    });

  const std::uint64_t best = reach.highest_at_most(half);

  std::vector<bool> members(jobs.size(), false);
  for (std::uint64_t s = best; s > 0;) {
    const auto i = first_item[s];
    members[i] = true;
    s -= jobs[i];
  }

  OptimalResult r;
  r.witness = Partition::from_membership(jobs, members);
  r.optimal_makespan = total - best;
  r.min_difference = total - 2 * best;
  return r;
}

bool equivalence_check(const JobSet &jobs, std::uint64_t table_cap) {
  const Time total = jobs.total_sum();
  check_table(jobs, total / 2 + 1, table_cap);

  // Full range [0, S] so that both objectives scan independently.
  SumBitset reach(total + 1);
  reach.set(0);
  for (std::size_t i = 0; i < jobs.size(); ++i)
    reach.or_shifted(jobs[i], [](std::uint64_t) {});

  // 2PS: minimise max(s, S - s).
  Time b1 = total, b2 = 0;
  // NPP: minimise |s - (S - s)|.
  Time a1 = total, a2 = 0, best_diff = total;
  for (std::uint64_t s = 0; s <= total; ++s) {
    if (!reach.test(s))
      continue;
    const Time other = total - s;
    const Time hi = s > other ? s : other;
    const Time lo = total - hi;
    if (hi < b1) {
      b1 = hi;
      b2 = lo;
    }
    if (hi - lo < best_diff) {
      best_diff = hi - lo;
      a1 = hi;
      a2 = lo;
    }
  }

  const OptimalResult dp = optimal_dp(jobs, table_cap);
  return a1 == b1 && a2 == b2 && dp.optimal_makespan == b1 &&
         dp.min_difference == best_diff &&
         2 * dp.optimal_makespan == total + dp.min_difference;
}

} // namespace parity
