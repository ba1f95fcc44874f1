#include "kdyck/bijections.hpp"

#include <stdexcept>
#include <string>

namespace kdyck {
namespace {

void require_nonneg_ending_at(const Path& q, int t, const char* what) {
  if (t < 0) throw std::invalid_argument(std::string(what) + ": t must be >= 0");
  if (!is_nonnegative(q) || q.end_level() != t)
    throw std::invalid_argument(std::string(what) + ": " + q.str() +
                                " is not a non-negative path ending on level " + std::to_string(t));
}

}  // namespace

std::size_t TupleDecomposition::total_length() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  return n;
}

Path lift_prepend(const Path& p, int t) {
  if (!is_kt_dyck(p, t))
    throw std::invalid_argument("lift_prepend: " + p.str() + " is not a " + std::to_string(p.k()) +
                                "_" + std::to_string(t) + "-Dyck path");
  Path out = ups(p.k(), static_cast<std::size_t>(t));
  out.append(p);
  return out;
}

TupleDecomposition decompose_last_visits(const Path& q, int t) {
  require_nonneg_ending_at(q, t, "decompose_last_visits");
  // last_visit[i] = largest position (0..|q|) at which the path sits on level i.
  std::vector<std::size_t> last_visit(t, 0);
  std::int64_t level = 0;
  for (std::size_t pos = 0;; ++pos) {
    if (level < t) last_visit[level] = pos;
    if (pos == q.size()) break;
    level += q[pos] == Step::Up ? 1 : -q.k();
  }

  TupleDecomposition out{q.k(), {}};
  std::size_t start = 0;
  for (int i = 0; i < t; ++i) {
    const std::size_t stop = last_visit[i];
    if (stop < start || q[stop] != Step::Up)
      throw std::logic_error("decompose_last_visits: marked step is not an up-step");
    out.parts.push_back(q.slice(start, stop - start));
    start = stop + 1;
  }
  out.parts.push_back(q.slice(start, q.size() - start));
  for (const auto& part : out.parts)
    if (!is_kt_dyck(part, 0)) throw std::logic_error("decompose_last_visits: part " + part.str() + " is not k-Dyck");
  return out;
}

Path compose(const TupleDecomposition& parts) {
  if (parts.parts.empty()) throw std::invalid_argument("compose: empty tuple");
  Path out(parts.k);
  for (std::size_t i = 0; i < parts.parts.size(); ++i) {
    const Path& part = parts.parts[i];
    if (part.k() != parts.k || !is_kt_dyck(part, 0))
      throw std::invalid_argument("compose: part " + std::to_string(i) + " (" + part.str() +
                                  ") is not a " + std::to_string(parts.k) + "-Dyck path");
    if (i > 0) out.push_back(Step::Up);
    out.append(part);
  }
  return out;
}

TupleDecomposition to_tuple(const Path& p, int t) {
  if (t > p.k())
    throw std::invalid_argument("to_tuple: t = " + std::to_string(t) + " exceeds k = " +
                                std::to_string(p.k()) + "; the tuple map is not a bijection there");
  return decompose_last_visits(lift_prepend(p, t), t);
}

Path from_tuple(const TupleDecomposition& parts) {
  const int t = parts.t();
  if (t < 0 || t > parts.k)
    throw std::invalid_argument("from_tuple: needs 1 to k+1 parts");
  Path q = compose(parts);
  for (int i = 0; i < t; ++i)
    if (q[i] != Step::Up) throw std::logic_error("from_tuple: composed path does not start with U^t");
  return q.slice(t, q.size() - t);
}

FGSplit split_fg(const Path& q, int t) {
  require_nonneg_ending_at(q, t, "split_fg");
  const auto j = static_cast<std::size_t>(parameter_j(q, t));
  return {q.slice(0, j), q.slice(j, q.size() - j), t};
}

}  // namespace kdyck
