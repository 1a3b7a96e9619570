#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rainbow4/lineplus.hpp"

namespace rainbow4 {
namespace {

void check_cap(const SimpleGraph& h, int cap) {
  if (h.size() > cap) {
    throw Error(ErrorCode::kSizeCapExceeded,
                std::to_string(h.size()) + " vertices exceed the exact cap of " +
                    std::to_string(cap));
  }
}

// Vertices in reverse degeneracy order: the densest core comes first.
std::vector<int> degeneracy_order(const SimpleGraph& h) {
  const int n = h.size();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = h.degree(v);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    }
    removed[pick] = 1;
    order.push_back(pick);
    for (int w = 0; w < n; ++w) {
      if (!removed[w] && h.adjacent(pick, w)) --deg[w];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const SimpleGraph& h) : h_(h) {}

  std::vector<int> run() {
    if (h_.size() == 0) return {};
    best_ = {0};
    expand(degeneracy_order(h_));
    return best_;
  }

 private:
  // Greedy sequential coloring of the candidates; returns them sorted by
  // color class together with each one's class number (an upper bound on
  // the clique size reachable through it).
  void color_sort(const std::vector<int>& cand, std::vector<int>& order,
                  std::vector<int>& bound) const {
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = std::any_of(classes[c].begin(), classes[c].end(),
                                 [&](int w) { return h_.adjacent(v, w); });
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    order.clear();
    bound.clear();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c) + 1);
      }
    }
  }

  void expand(const std::vector<int>& cand) {
    std::vector<int> order, bound;
    color_sort(cand, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_.size() + bound[i] <= best_.size()) return;
      int v = order[i];
      current_.push_back(v);
      std::vector<int> next;
      for (int j = 0; j < i; ++j) {
        if (h_.adjacent(v, order[j])) next.push_back(order[j]);
      }
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
    }
  }

  const SimpleGraph& h_;
  std::vector<int> current_;
  std::vector<int> best_;
};

bool is_clique(const SimpleGraph& h, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!h.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool is_proper(const SimpleGraph& h, const std::vector<int>& colors, int k) {
  for (int v = 0; v < h.size(); ++v) {
    if (colors[v] < 1 || colors[v] > k) return false;
    for (int w = v + 1; w < h.size(); ++w) {
      if (h.adjacent(v, w) && colors[v] == colors[w]) return false;
    }
  }
  return true;
}

// DSATUR: saturation first, then degree, then smallest index.
std::vector<int> dsatur(const SimpleGraph& h, int& k) {
  const int n = h.size();
  std::vector<int> color(n, 0);
  std::vector<std::vector<char>> seen(n, std::vector<char>(n + 2, 0));
  std::vector<int> sat(n, 0);
  k = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v]) continue;
      if (pick < 0 || sat[v] > sat[pick] ||
          (sat[v] == sat[pick] && h.degree(v) > h.degree(pick))) {
        pick = v;
      }
    }
    int c = 1;
    while (seen[pick][c]) ++c;
    color[pick] = c;
    k = std::max(k, c);
    for (int w = 0; w < n; ++w) {
      if (h.adjacent(pick, w) && !seen[w][c]) {
        seen[w][c] = 1;
        ++sat[w];
      }
    }
  }
  return color;
}

// Backtracking k-colorability with DSATUR branching. The clique seeds colors
// 1..|clique| and new colors are only opened in increasing order.
class ColorSearch {
 public:
  ColorSearch(const SimpleGraph& h, const std::vector<int>& clique, int k)
      : h_(h),
        k_(k),
        color_(h.size(), 0),
        count_(h.size(), std::vector<int>(k + 1, 0)),
        sat_(h.size(), 0) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      place(clique[i], static_cast<int>(i) + 1);
    }
    used_ = static_cast<int>(clique.size());
    remaining_ = h.size() - static_cast<int>(clique.size());
  }

  bool run() { return search(); }
  const std::vector<int>& colors() const { return color_; }

 private:
  void place(int v, int c) {
    color_[v] = c;
    for (int w = 0; w < h_.size(); ++w) {
      if (h_.adjacent(v, w) && count_[w][c]++ == 0) ++sat_[w];
    }
  }
  void unplace(int v) {
    int c = color_[v];
    color_[v] = 0;
    for (int w = 0; w < h_.size(); ++w) {
      if (h_.adjacent(v, w) && --count_[w][c] == 0) --sat_[w];
    }
  }

  bool search() {
    if (remaining_ == 0) return true;
    int pick = -1;
    for (int v = 0; v < h_.size(); ++v) {
      if (color_[v]) continue;
      if (pick < 0 || sat_[v] > sat_[pick] ||
          (sat_[v] == sat_[pick] && h_.degree(v) > h_.degree(pick))) {
        pick = v;
      }
    }
    if (sat_[pick] >= k_) return false;
    const int limit = std::min(k_, used_ + 1);
    for (int c = 1; c <= limit; ++c) {
      if (count_[pick][c]) continue;
      int saved_used = used_;
      used_ = std::max(used_, c);
      place(pick, c);
      --remaining_;
      if (search()) return true;
      ++remaining_;
      unplace(pick);
      used_ = saved_used;
    }
    return false;
  }

  const SimpleGraph& h_;
  int k_;
  std::vector<int> color_;
  std::vector<std::vector<int>> count_;
  std::vector<int> sat_;
  int used_ = 0;
  int remaining_ = 0;
};

}  // namespace

CliqueResult clique_number(const SimpleGraph& h, int cap) {
  check_cap(h, cap);
  CliqueResult res;
  res.vertices = CliqueSearch(h).run();
  std::sort(res.vertices.begin(), res.vertices.end());
  res.size = static_cast<int>(res.vertices.size());
  if (!is_clique(h, res.vertices)) {
    throw std::logic_error("clique_number produced a non-clique witness");
  }
  return res;
}

ChromaticResult chromatic_number(const SimpleGraph& h,
                                 std::optional<int> upper_bound_hint, int cap) {
  check_cap(h, cap);
  ChromaticResult res;
  if (h.size() == 0) return res;

  CliqueResult clique = clique_number(h, cap);
  int upper = 0;
  std::vector<int> witness = dsatur(h, upper);

  if (upper_bound_hint && *upper_bound_hint >= clique.size &&
      *upper_bound_hint < upper) {
    ColorSearch hinted(h, clique.vertices, *upper_bound_hint);
    if (hinted.run()) {
      upper = *upper_bound_hint;
      witness = hinted.colors();
    }
  }
  for (int k = clique.size; k < upper; ++k) {
    ColorSearch s(h, clique.vertices, k);
    if (s.run()) {
      upper = k;
      witness = s.colors();
      break;
    }
  }
  res.k = upper;
  res.colors = std::move(witness);
  if (!is_proper(h, res.colors, res.k)) {
    throw std::logic_error("chromatic_number produced an improper witness");
  }
  return res;
}

}  // namespace rainbow4
