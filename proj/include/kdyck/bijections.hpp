#pragma once

#include <vector>

#include "kdyck/paths.hpp"

namespace kdyck {

/// An ordered (t+1)-tuple of k-Dyck paths.
struct TupleDecomposition {
  int k;
  std::vector<Path> parts;

  int t() const { return static_cast<int>(parts.size()) - 1; }
  std::size_t total_length() const;
  friend bool operator==(const TupleDecomposition&, const TupleDecomposition&) = default;
};

/// A non-negative path from 0 to t cut at its first visit to level t.
struct FGSplit {
  Path f;
  Path g;
  int t;
};

/// U^t followed by p. Requires p to be a k_t-Dyck path.
Path lift_prepend(const Path& p, int t);

/// Splits a non-negative path ending on level t as P_0 U P_1 U ... U P_t,
/// where the i-th marked up-step leaves level i for the last time.
TupleDecomposition decompose_last_visits(const Path& q, int t);

/// P_0 U P_1 U ... U P_t. Every part must be a k-Dyck path.
Path compose(const TupleDecomposition& parts);

/// k_t-Dyck path -> (t+1)-tuple of k-Dyck paths, for t <= k only.
TupleDecomposition to_tuple(const Path& p, int t);

/// Inverse of to_tuple.
Path from_tuple(const TupleDecomposition& parts);

FGSplit split_fg(const Path& q, int t);

}  // namespace kdyck
