#include "verlinde/fusion/labels.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace verlinde::fusion {

std::vector<int> SpLabel::columns() const {
  std::vector<int> cols(level());
  for (int j = 0; j < level(); ++j)
    for (int r : rows)
      if (r > j) ++cols[j];
  return cols;
}

SpLabel SpLabel::from_columns(int n, const std::vector<int>& cols) {
  SpLabel l{std::vector<int>(n)};
  for (int c : cols) {
    if (c > n) throw std::invalid_argument("SpLabel: column longer than n");
    for (int i = 0; i < c; ++i) ++l.rows[i];
  }
  return l;
}

SpLabel SpLabel::fundamental(int n, int k) { return from_columns(n, {k}); }

std::string SpLabel::to_string() const {
  std::string s = "(";
  bool first = true;
  for (int r : rows) {
    if (!r) break;
    if (!first) s += ",";
    s += std::to_string(r);
    first = false;
  }
  return s + ")";
}

std::vector<SpLabel> labels_up_to_level(int n, int max_level) {
  std::vector<SpLabel> out;
  std::vector<int> rows(n);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == n) {
      out.push_back(SpLabel{rows});
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      rows[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, max_level);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpLabel> labels_of_level(int n, int level) {
  std::vector<SpLabel> out;
  for (auto& l : labels_up_to_level(n, level))
    if (l.level() == level) out.push_back(l);
  return out;
}

std::vector<SpLabel> verlinde_labels(int m, int n) {
  if (m < n + 2) throw std::invalid_argument("verlinde_labels: need m >= n + 2");
  return labels_up_to_level(n, m - n - 1);
}

std::vector<EvalSet> eval_sets(int m, int n) {
  std::vector<EvalSet> out;
  EvalSet cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= m - 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace verlinde::fusion
