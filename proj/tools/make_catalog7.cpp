// Enumerates all connected nonbipartite graphs on 7 vertices up to
// isomorphism and writes them as graph6 records. Test-data generator for
// the scan catalog; the toolkit itself only ingests catalogs.

#include <algorithm>
#include <array>
#include <iostream>
#include <numeric>
#include <vector>

#include "edgering/graph.hpp"

namespace {

constexpr int kN = 7;
constexpr int kBits = kN * (kN - 1) / 2;  // 21

int pair_index(int i, int j) {
  // row-major over 0 <= i < j < 7
  if (i > j) std::swap(i, j);
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += kN - 1 - a;
  return idx + (j - i - 1);
}

}  // namespace

int main(int argc, char** argv) {
  bool quiet = argc > 1 && std::string(argv[1]) == "--quiet";
  (void)quiet;

  // bit-permutation table per vertex permutation
  std::array<int, kN> perm;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::array<int, kBits>> bit_maps;
  do {
    std::array<int, kBits> map{};
    for (int i = 0; i < kN; ++i)
      for (int j = i + 1; j < kN; ++j) map[pair_index(i, j)] = pair_index(perm[i], perm[j]);
    bit_maps.push_back(map);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::size_t total = 1u << kBits;
  std::vector<bool> visited(total, false);
  std::vector<unsigned> canon_masks;
  std::size_t iso_classes = 0;

  std::vector<unsigned> orbit;
  for (unsigned mask = 0; mask < total; ++mask) {
    if (visited[mask]) continue;
    ++iso_classes;
    orbit.clear();
    unsigned canon = mask;
    for (const auto& map : bit_maps) {
      unsigned image = 0;
      for (int b = 0; b < kBits; ++b)
        if (mask & (1u << b)) image |= 1u << map[b];
      if (!visited[image]) {
        visited[image] = true;
        orbit.push_back(image);
      }
      canon = std::min(canon, image);
    }
    canon_masks.push_back(canon);
  }

  std::size_t connected = 0, nonbip = 0;
  std::vector<std::pair<int, std::string>> records;
  for (unsigned mask : canon_masks) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < kN; ++i)
      for (int j = i + 1; j < kN; ++j)
        if (mask & (1u << pair_index(i, j))) edges.push_back({i + 1, j + 1});
    edgering::Graph g(kN, edges);
    if (!g.connected()) continue;
    ++connected;
    if (g.bipartite()) continue;
    ++nonbip;
    records.push_back({g.edge_count(), edgering::encode_graph6(g)});
  }
  std::sort(records.begin(), records.end());
  for (const auto& [r, line] : records) std::cout << line << '\n';

  std::cerr << "isomorphism classes: " << iso_classes << ", connected: " << connected
            << ", connected nonbipartite: " << nonbip << '\n';
  return 0;
}
