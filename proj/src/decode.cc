#include "qalign/decode.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

namespace qalign {

namespace {

using Edge = std::pair<QaId, QaId>;

// Dense weight matrix over the distinct endpoints of an edge list; missing
// edges weigh 0.
struct Graph {
  std::vector<QaId> left;
  std::vector<QaId> right;
  std::vector<std::vector<double>> weight;
};

// Maximum-weight assignment value via the Hungarian algorithm with
// potentials, on the square completion of `w` (padding weighs 0). Returns
// the row -> column assignment through `match`.
double Hungarian(const std::vector<std::vector<double>>& w, int rows, int cols,
                 std::vector<int>* match) {
  const int n = std::max(rows, cols);
  match->assign(rows, -1);
  if (n == 0) return 0.0;
  auto cost = [&](int i, int j) {  // 1-based, minimization
    if (i > rows || j > cols) return 0.0;
    return -w[i - 1][j - 1];
  };
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j) {
    const int i = p[j];
    if (i >= 1 && i <= rows && j <= cols) {
      (*match)[i - 1] = j - 1;
      total += w[i - 1][j - 1];
    }
  }
  return total;
}

// Best achievable weight using only rows/columns not yet blocked.
double BestRemaining(const Graph& g, const std::vector<bool>& left_used,
                     const std::vector<bool>& right_used) {
  std::vector<int> rows, cols;
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    if (!left_used[i]) rows.push_back(static_cast<int>(i));
  }
  for (std::size_t j = 0; j < g.right.size(); ++j) {
    if (!right_used[j]) cols.push_back(static_cast<int>(j));
  }
  std::vector<std::vector<double>> sub(rows.size(), std::vector<double>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      sub[a][b] = g.weight[rows[a]][cols[b]];
    }
  }
  std::vector<int> match;
  return Hungarian(sub, static_cast<int>(rows.size()),
                   static_cast<int>(cols.size()), &match);
}

bool Close(double x, double y) {
  return std::fabs(x - y) <= 1e-11 * std::max({1.0, std::fabs(x), std::fabs(y)});
}

}  // namespace

double SortedSum(const std::vector<ScoredEdge>& edges) {
  std::vector<const ScoredEdge*> sorted;
  for (const ScoredEdge& e : edges) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](const ScoredEdge* x, const ScoredEdge* y) {
    return std::tie(x->left_qa, x->right_qa) < std::tie(y->left_qa, y->right_qa);
  });
  double total = 0.0;
  for (const ScoredEdge* e : sorted) total += e->score;
  return total;
}

Matching MaxWeightMatching(const std::vector<ScoredEdge>& edges) {
  std::map<Edge, double> best;
  for (const ScoredEdge& e : edges) {
    if (std::isnan(e.score) || e.score < 0.0) {
      throw DecodeError("invalid edge weight for (" + e.left_qa + ", " +
                        e.right_qa + ")");
    }
    auto [it, inserted] = best.emplace(Edge{e.left_qa, e.right_qa}, e.score);
    if (!inserted) it->second = std::max(it->second, e.score);
  }

  Graph g;
  std::map<QaId, int> li, ri;
  for (const auto& [edge, w] : best) {
    li.emplace(edge.first, 0);
    ri.emplace(edge.second, 0);
  }
  for (auto& [id, idx] : li) {
    idx = static_cast<int>(g.left.size());
    g.left.push_back(id);
  }
  for (auto& [id, idx] : ri) {
    idx = static_cast<int>(g.right.size());
    g.right.push_back(id);
  }
  g.weight.assign(g.left.size(), std::vector<double>(g.right.size(), 0.0));
  for (const auto& [edge, w] : best) {
    g.weight[li[edge.first]][ri[edge.second]] = w;
  }

  std::vector<bool> left_used(g.left.size(), false);
  std::vector<bool> right_used(g.right.size(), false);
  const double optimum = BestRemaining(g, left_used, right_used);

  // Greedy over edges in lexicographic order: fix an edge whenever some
  // optimal matching extends the fixed set with it. Stop once the fixed set
  // is optimal on its own, since a proper prefix sorts first.
  Matching out;
  std::vector<ScoredEdge> chosen;
  double fixed = 0.0;
  for (const auto& [edge, w] : best) {
    if (Close(fixed, optimum)) break;
    const int i = li[edge.first];
    const int j = ri[edge.second];
    if (left_used[i] || right_used[j]) continue;
    left_used[i] = right_used[j] = true;
    if (Close(fixed + w + BestRemaining(g, left_used, right_used), optimum)) {
      fixed += w;
      out.edges.insert(edge);
      chosen.push_back({edge.first, edge.second, w});
    } else {
      left_used[i] = right_used[j] = false;
    }
  }
  out.total_weight = SortedSum(chosen);
  return out;
}

std::vector<ScoredEdge> Threshold(const std::vector<ScoredEdge>& edges,
                                  double tau) {
  std::vector<ScoredEdge> out;
  for (const ScoredEdge& e : edges) {
    if (e.score >= tau) out.push_back(e);
  }
  return out;
}

AlignmentSet Decode(const std::string& pair_id,
                    const std::vector<ScoredEdge>& edges,
                    const DecoderConfig& config) {
  if (!(config.tau >= 0.0 && config.tau <= 1.0)) {
    throw DecodeError("tau must lie in [0, 1]");
  }
  for (const ScoredEdge& e : edges) {
    if (!(e.score >= 0.0 && e.score <= 1.0)) {
      throw DecodeError("score for (" + e.left_qa + ", " + e.right_qa +
                        ") outside [0, 1]");
    }
  }
  const Matching m = MaxWeightMatching(Threshold(edges, config.tau));
  AlignmentSet out;
  out.pair_id = pair_id;
  out.provenance = Provenance::kModel;
  for (const auto& [l, r] : m.edges) out.alignments.push_back(Alignment::OneToOne(l, r));
  return out;
}

}  // namespace qalign
