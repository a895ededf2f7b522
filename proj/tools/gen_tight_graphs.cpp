// Regenerates the stored list of (2,2)-tight graphs used by the
// acceptance suite. The default mode runs the forward-move closure from
// K1; --exhaustive <n> instead filters every (2n-2)-edge subgraph of K_n
// through the pebble game, which is feasible up to n = 7 and was used to
// confirm the closure counts.

#include <cstdio>
#include <cstring>
#include <set>

#include "polyrig/json_io.hpp"
#include "polyrig/pebble.hpp"
#include "polyrig/reduction.hpp"

using namespace polyrig;

static void exhaustive(int n) {
  std::vector<std::pair<int, int>> all;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) all.emplace_back(v, w);
  const int m = static_cast<int>(all.size());
  const int want = 2 * n - 2;
  if (want > m) {
    std::printf("no (2,2)-tight graphs on %d vertices\n", n);
    return;
  }
  std::set<std::string> found;
  std::vector<int> comb(want);
  for (int i = 0; i < want; ++i) comb[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int i : comb) edges.push_back(all[i]);
    Graph g(n, edges);
    if (is_tight(g, 2)) found.insert(canonical_form(g));
    int i = want - 1;
    while (i >= 0 && comb[i] == m - want + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < want; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::printf("n=%d: %zu isomorphism classes (exhaustive)\n", n, found.size());
}

int main(int argc, char** argv) {
  int max_n = 8;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--exhaustive") == 0 && i + 1 < argc) {
      exhaustive(std::atoi(argv[i + 1]));
      return 0;
    }
    if (std::strcmp(argv[i], "--max-n") == 0 && i + 1 < argc) max_n = std::atoi(argv[i + 1]);
  }
  auto graphs = tight_graph_closure(max_n);
  Json out = Json::array();
  for (const auto& g : graphs) {
    if (!is_tight(g, 2)) {
      std::fprintf(stderr, "closure produced a non-tight graph\n");
      return 1;
    }
    out.push_back(graph_to_json(g));
  }
  std::printf("%s\n", out.dump().c_str());
  std::fprintf(stderr, "%zu graphs up to %d vertices\n", graphs.size(), max_n);
  return 0;
}
