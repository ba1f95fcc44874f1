#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "kdyck/paths.hpp"

// Exhaustive oracles. Everything here works on explicit step sequences or on
// the plain level recurrence, never on generating functions, so that it can
// serve as ground truth for the analytic modules.
namespace kdyck::brute {

inline constexpr int kDefaultStepLimit = 32;

/// Step limit for the exhaustive enumerators: KDYCK_BRUTE_LIMIT if set to a
/// positive integer, otherwise 32.
int step_limit();

struct EnumSpec {
  int k = 1;
  int t = 0;
  int n = 0;                        // paths have (k+1)n steps
  std::optional<int> upper;         // h
  std::optional<int> end_level;     // i
};

/// Lexicographic (U < D) stream of the k_t-Dyck paths of length (k+1)n.
class KtPathStream {
 public:
  explicit KtPathStream(const EnumSpec& spec, int step_limit = kdyck::brute::step_limit());

  /// The next path, or nullopt once the stream is exhausted.
  std::optional<Path> next();

 private:
  bool advance();

  int k_, t_, n_;
  std::string cur_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Path> enumerate_kt(const EnumSpec& spec, int step_limit = kdyck::brute::step_limit());

/// Paths of exactly `length` steps from 0 to spec.end_level inside
/// [-spec.t, spec.upper], by the backward level recurrence.
mpz_class count_strip(const EnumSpec& spec, int length);

/// Calls `visit` on every non-negative path with the given number of steps
/// that ends on `end_level`, in lexicographic order.
void for_each_nonnegative(int k, int length, std::int64_t end_level,
                          const std::function<void(const Path&)>& visit,
                          int step_limit = kdyck::brute::step_limit());

/// k = 1: over all non-negative paths of length 2n+t from 0 to t, the number
/// with parameter_j == t + 2s, keyed by s.
std::map<int, mpz_class> j_histogram(int t, int n, int step_limit = kdyck::brute::step_limit());

/// Non-negative paths of `length` steps whose first visit to level t is at
/// the last step.
mpz_class count_first_arrival(int k, int t, int length,
                              int step_limit = kdyck::brute::step_limit());

}  // namespace kdyck::brute
