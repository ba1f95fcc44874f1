#include "kdyck/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdyck {

Path::Path(int k) : Path(k, {}) {}

Path::Path(int k, std::vector<Step> steps) : k_(k), steps_(std::move(steps)) {
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
}

Path Path::parse(std::string_view text, int k) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      default:
        throw ParseError("invalid path character '" + std::string(1, text[i]) +
                         "' at position " + std::to_string(i) + " (expected U or D)");
    }
  }
  return Path(k, std::move(steps));
}

std::int64_t Path::up_count() const {
  return std::count(steps_.begin(), steps_.end(), Step::Up);
}

std::int64_t Path::down_count() const {
  return std::count(steps_.begin(), steps_.end(), Step::Down);
}

std::string Path::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

void Path::append(const Path& other) {
  if (other.k_ != k_) throw std::invalid_argument("cannot append paths with different k");
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

Path Path::slice(std::size_t first, std::size_t count) const {
  if (first > steps_.size() || count > steps_.size() - first)
    throw std::out_of_range("path slice out of range");
  return Path(k_, std::vector<Step>(steps_.begin() + first, steps_.begin() + first + count));
}

std::vector<std::int64_t> level_profile(const Path& p) {
  std::vector<std::int64_t> out;
  out.reserve(p.size());
  std::int64_t level = 0;
  for (Step s : p.steps()) {
    level += (s == Step::Up) ? 1 : -p.k();
    out.push_back(level);
  }
  return out;
}

std::int64_t min_level(const Path& p) {
  std::int64_t level = 0, lo = 0;
  for (Step s : p.steps()) {
    level += (s == Step::Up) ? 1 : -p.k();
    lo = std::min(lo, level);
  }
  return lo;
}

bool is_kt_dyck(const Path& p, int t) {
  return t >= 0 && min_level(p) >= -t && p.end_level() == 0;
}

bool is_nonnegative(const Path& p) { return min_level(p) >= 0; }

std::int64_t parameter_j(const Path& p, int t) {
  if (t == 0) return 0;
  std::int64_t level = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    level += (p[i] == Step::Up) ? 1 : -p.k();
    if (level == t) return static_cast<std::int64_t>(i) + 1;
  }
  throw std::invalid_argument("path " + p.str() + " never reaches level " + std::to_string(t));
}

Path ups(int k, std::size_t count) { return Path(k, std::vector<Step>(count, Step::Up)); }

}  // namespace kdyck
