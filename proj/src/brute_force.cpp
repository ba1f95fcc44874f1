#include "kdyck/brute_force.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace kdyck::brute {
namespace {

void check_limit(std::int64_t steps, int limit) {
  if (steps > limit)
    throw ResourceLimitError("exhaustive enumeration of " + std::to_string(steps) +
                             " steps exceeds the limit of " + std::to_string(limit) +
                             " (set KDYCK_BRUTE_LIMIT to raise it)");
}

}  // namespace

int step_limit() {
  if (const char* env = std::getenv("KDYCK_BRUTE_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1'000'000) return static_cast<int>(v);
  }
  return kDefaultStepLimit;
}

KtPathStream::KtPathStream(const EnumSpec& spec, int step_limit)
    : k_(spec.k), t_(spec.t), n_(spec.n) {
  if (spec.k < 1 || spec.t < 0 || spec.n < 0)
    throw std::invalid_argument("enumerate_kt needs k >= 1, t >= 0, n >= 0");
  if (spec.upper) throw std::invalid_argument("enumerate_kt does not take an upper bound");
  check_limit(static_cast<std::int64_t>(k_ + 1) * n_, step_limit);
}

// The first path is U^{kn} D^{n}. Any valid prefix completes by putting all
// remaining up-steps first, which is also the smallest completion, so the
// successor flips the rightmost U that may legally become a D and refills.
bool KtPathStream::advance() {
  const std::int64_t total_ups = static_cast<std::int64_t>(k_) * n_;
  if (!started_) {
    started_ = true;
    cur_ = std::string(total_ups, 'U') + std::string(n_, 'D');
    return true;
  }
  std::vector<std::int64_t> level(cur_.size() + 1, 0);
  std::vector<std::int64_t> downs(cur_.size() + 1, 0);
  for (std::size_t i = 0; i < cur_.size(); ++i) {
    bool up = cur_[i] == 'U';
    level[i + 1] = level[i] + (up ? 1 : -k_);
    downs[i + 1] = downs[i] + (up ? 0 : 1);
  }
  for (std::size_t p = cur_.size(); p-- > 0;) {
    if (cur_[p] != 'U') continue;
    if (downs[p] >= n_ || level[p] - k_ < -t_) continue;
    std::int64_t ups_before = static_cast<std::int64_t>(p) - downs[p];
    std::int64_t ups_left = total_ups - ups_before;
    std::int64_t downs_left = n_ - downs[p] - 1;
    cur_.resize(p);
    cur_.push_back('D');
    cur_.append(ups_left, 'U');
    cur_.append(downs_left, 'D');
    return true;
  }
  return false;
}

std::optional<Path> KtPathStream::next() {
  if (done_ || !advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Path::parse(cur_, k_);
}

std::vector<Path> enumerate_kt(const EnumSpec& spec, int step_limit) {
  KtPathStream stream(spec, step_limit);
  std::vector<Path> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

mpz_class count_strip(const EnumSpec& spec, int length) {
  if (!spec.upper || !spec.end_level)
    throw std::invalid_argument("count_strip needs both an upper bound and an end level");
  const int lo = -spec.t, hi = *spec.upper, target = *spec.end_level;
  if (spec.k < 1 || spec.t < 0 || hi < 0 || target < lo || target > hi || length < 0)
    throw std::invalid_argument("count_strip needs k >= 1, t >= 0, h >= 0 and -t <= i <= h");
  const int width = hi - lo + 1;

  // memo[len][level - lo]; a path ending on level i arrived from i-1 or i+k.
  std::vector<std::vector<std::optional<mpz_class>>> memo(
      length + 1, std::vector<std::optional<mpz_class>>(width));
  std::function<mpz_class(int, int)> ways = [&](int len, int level) -> mpz_class {
    if (level < lo || level > hi) return 0;
    if (len == 0) return level == 0 ? 1 : 0;
    auto& slot = memo[len][level - lo];
    if (!slot) slot = ways(len - 1, level - 1) + ways(len - 1, level + spec.k);
    return *slot;
  };
  return ways(length, target);
}

void for_each_nonnegative(int k, int length, std::int64_t end_level,
                          const std::function<void(const Path&)>& visit, int step_limit) {
  if (k < 1 || length < 0) throw std::invalid_argument("for_each_nonnegative needs k >= 1, length >= 0");
  check_limit(length, step_limit);
  Path cur(k);
  std::function<void(std::int64_t)> dfs = [&](std::int64_t level) {
    const std::int64_t left = length - static_cast<std::int64_t>(cur.size());
    if (left == 0) {
      if (level == end_level) visit(cur);
      return;
    }
    // Even with only up-steps left the end level must be reachable.
    if (level + left < end_level) return;
    cur.push_back(Step::Up);
    dfs(level + 1);
    cur.pop_back();
    if (level - k >= 0) {
      cur.push_back(Step::Down);
      dfs(level - k);
      cur.pop_back();
    }
  };
  dfs(0);
}

std::map<int, mpz_class> j_histogram(int t, int n, int step_limit) {
  if (t < 0 || n < 0) throw std::invalid_argument("j_histogram needs t >= 0, n >= 0");
  std::map<int, mpz_class> hist;
  for_each_nonnegative(1, 2 * n + t, t, [&](const Path& p) {
    std::int64_t j = parameter_j(p, t);
    hist[static_cast<int>((j - t) / 2)] += 1;
  }, step_limit);
  return hist;
}

mpz_class count_first_arrival(int k, int t, int length, int step_limit) {
  if (k < 1 || t < 0 || length < 0) throw std::invalid_argument("count_first_arrival needs k >= 1, t, length >= 0");
  check_limit(length, step_limit);
  mpz_class count = 0;
  // Prune prefixes that have already touched level t: those can never have
  // their first arrival at the final step.
  Path cur(k);
  std::function<void(std::int64_t)> dfs = [&](std::int64_t level) {
    if (static_cast<int>(cur.size()) == length) {
      if (level == t && parameter_j(cur, t) == length) ++count;
      return;
    }
    if (level == t) return;
    cur.push_back(Step::Up);
    dfs(level + 1);
    cur.pop_back();
    if (level - k >= 0) {
      cur.push_back(Step::Down);
      dfs(level - k);
      cur.pop_back();
    }
  };
  dfs(0);
  return count;
}

}  // namespace kdyck::brute
