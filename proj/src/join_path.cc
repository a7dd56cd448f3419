// Copyright 2026 The sqlaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <deque>
#include <numeric>

#include "sqlaug/error.h"
#include "sqlaug/schema.h"

namespace sqlaug {

namespace {

struct Edge {
  int from;  // table holding from_col
  int to;
  std::string from_col;
  std::string to_col;
};

std::vector<std::vector<Edge>> Adjacency(const Schema& schema) {
  std::vector<std::vector<Edge>> adj(schema.tables.size());
  for (const ForeignKey& fk : schema.foreign_keys) {
    const Column& a = schema.columns[fk.column];
    const Column& b = schema.columns[fk.referenced];
    if (a.table == b.table) continue;
    adj[a.table].push_back({a.table, b.table, a.name, b.name});
    adj[b.table].push_back({b.table, a.table, b.name, a.name});
  }
  for (auto& edges : adj) {
    std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
      auto key = [&](const Edge& e) {
        return std::make_tuple(ToLower(schema.tables[e.to].name), ToLower(e.from_col),
                               ToLower(e.to_col));
      };
      return key(x) < key(y);
    });
  }
  return adj;
}

// BFS over `allowed` from root; returns visit order and tree edges.
std::pair<std::vector<int>, std::vector<Edge>> Bfs(const std::vector<std::vector<Edge>>& adj,
                                                   const std::vector<bool>& allowed,
                                                   int root) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> order{root};
  std::vector<Edge> tree;
  std::deque<int> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const Edge& e : adj[u]) {
      if (!allowed[e.to] || seen[e.to]) continue;
      seen[e.to] = true;
      order.push_back(e.to);
      tree.push_back(e);
      queue.push_back(e.to);
    }
  }
  return {order, tree};
}

}  // namespace

JoinPath FindJoinPath(const Schema& schema, const std::set<int>& tables,
                      std::optional<int> root) {
  if (tables.empty()) throw Error(ErrorCode::kInvalidArgument, "no tables to join");
  const int n = static_cast<int>(schema.tables.size());
  for (int t : tables) {
    if (t < 0 || t >= n) throw Error(ErrorCode::kInvalidArgument, "table index out of range");
  }
  auto by_name = [&](int a, int b) {
    return std::make_pair(ToLower(schema.tables[a].name), a) <
           std::make_pair(ToLower(schema.tables[b].name), b);
  };
  int start = root && tables.count(*root)
                  ? *root
                  : *std::min_element(tables.begin(), tables.end(), by_name);
  std::vector<std::vector<Edge>> adj = Adjacency(schema);

  std::vector<bool> everything(n, true);
  auto [component, unused] = Bfs(adj, everything, start);
  std::vector<bool> reachable(n, false);
  for (int t : component) reachable[t] = true;
  for (int t : tables) {
    if (!reachable[t]) {
      throw Error(ErrorCode::kDisconnected,
                  schema.db_id + ": no foreign-key path from '" +
                      schema.tables[start].name + "' to '" + schema.tables[t].name + "'");
    }
  }

  std::vector<int> candidates;
  for (int t : component) {
    if (!tables.count(t)) candidates.push_back(t);
  }
  std::sort(candidates.begin(), candidates.end(), by_name);

  // Smallest set of intermediate tables whose induced subgraph connects all
  // requested tables; subsets of equal size are tried in lexicographic order.
  const int m = static_cast<int>(candidates.size());
  for (int k = 0; k <= m; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<bool> allowed(n, false);
      for (int t : tables) allowed[t] = true;
      for (int i = 0; i < m; ++i) {
        if (pick[i]) allowed[candidates[i]] = true;
      }
      auto [order, tree] = Bfs(adj, allowed, start);
      if (order.size() == tables.size() + static_cast<std::size_t>(k)) {
        JoinPath path;
        for (int t : order) path.tables.push_back(schema.tables[t].name);
        for (const Edge& e : tree) {
          path.edges.push_back({schema.tables[e.from].name, e.from_col,
                                schema.tables[e.to].name, e.to_col});
        }
        return path;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw Error(ErrorCode::kDisconnected, schema.db_id + ": tables are not connected");
}

}  // namespace sqlaug
