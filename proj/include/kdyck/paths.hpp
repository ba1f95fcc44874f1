#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kdyck/error.hpp"

namespace kdyck {

enum class Step : std::uint8_t { Up, Down };

/// A sequence of unit up-steps and down-steps of size k.
///
/// The text form is a string over {U, D}; D always means a drop of k levels.
/// Length and end level are derived from the steps.
class Path {
 public:
  explicit Path(int k);
  Path(int k, std::vector<Step> steps);

  /// Parses a U/D string. Throws ParseError on any other character.
  static Path parse(std::string_view text, int k);

  int k() const { return k_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::span<const Step> steps() const { return steps_; }
  Step operator[](std::size_t i) const { return steps_[i]; }

  std::int64_t up_count() const;
  std::int64_t down_count() const;
  std::int64_t end_level() const { return up_count() - k_ * down_count(); }

  std::string str() const;

  void push_back(Step s) { steps_.push_back(s); }
  void pop_back() { steps_.pop_back(); }
  void append(const Path& other);

  /// Steps [first, first + count).
  Path slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  int k_;
  std::vector<Step> steps_;
};

/// Prefix sums, +1 per up-step and -k per down-step. Empty path gives {}.
std::vector<std::int64_t> level_profile(const Path& p);

std::int64_t min_level(const Path& p);

/// True iff no prefix drops below -t and the path ends on level 0.
bool is_kt_dyck(const Path& p, int t);

/// True iff every prefix sum is >= 0.
bool is_nonnegative(const Path& p);

/// Number of steps taken until level t is reached for the first time
/// (0 when t == 0). This is the length of the F part of a path from 0 to t.
/// Throws std::invalid_argument if level t is never reached.
std::int64_t parameter_j(const Path& p, int t);

/// The path consisting of `count` up-steps.
Path ups(int k, std::size_t count);

}  // namespace kdyck
