#pragma once

#include <string>
#include <vector>

namespace verlinde::fusion {

// Young diagram with at most n rows, rows padded with zeros to length n.
struct SpLabel {
  std::vector<int> rows;

  int level() const { return rows.empty() ? 0 : rows[0]; }
  bool is_unit() const { return level() == 0; }
  // column lengths, i.e. the conjugate partition
  std::vector<int> columns() const;
  static SpLabel from_columns(int n, const std::vector<int>& cols);
  // single column of length k
  static SpLabel fundamental(int n, int k);
  std::string to_string() const;
  friend auto operator<=>(const SpLabel&, const SpLabel&) = default;
};

// All partitions with at most n rows and first row <= max_level, lexicographic.
std::vector<SpLabel> labels_up_to_level(int n, int max_level);
// Exactly `level` columns, at most n rows.
std::vector<SpLabel> labels_of_level(int n, int level);
// Labels of V(m, n): first row <= m - n - 1; count C(m-1, n).
std::vector<SpLabel> verlinde_labels(int m, int n);

using EvalSet = std::vector<int>;
// n-subsets of {1..m-1}, lexicographic.
std::vector<EvalSet> eval_sets(int m, int n);

}  // namespace verlinde::fusion
