#include <algorithm>
#include <numeric>

#include "ctlenum/error.hpp"
#include "ctlenum/kripke.hpp"

namespace ctlenum {
namespace {

// Frames on n <= 6 worlds as successor bitmasks, one per world.
using Frame = std::vector<unsigned>;

bool all_reachable(const Frame& f) {
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (std::size_t w = 0; w < f.size(); ++w) {
      if (frontier & (1u << w)) next |= f[w];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << f.size()) - 1;
}

Frame permute(const Frame& f, const std::vector<std::size_t>& p) {
  Frame g(f.size(), 0);
  for (std::size_t w = 0; w < f.size(); ++w) {
    unsigned img = 0;
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (f[w] & (1u << v)) img |= 1u << p[v];
    }
    g[p[w]] = img;
  }
  return g;
}

// Permutations of {0..n-1} fixing 0.
std::vector<std::vector<std::size_t>> root_fixing_perms(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

void frames(std::size_t n, bool connected_only, bool dedupe,
            const std::function<void(const Frame&)>& visit) {
  if (n == 0 || n > 6) throw PreconditionError("small frames need 1..6 worlds");
  const auto perms = root_fixing_perms(n);
  const unsigned full = (1u << n) - 1;
  Frame f(n, 1);
  while (true) {
    bool keep = !connected_only || all_reachable(f);
    if (keep && dedupe) {
      for (const auto& p : perms) {
        if (permute(f, p) < f) {
          keep = false;
          break;
        }
      }
    }
    if (keep) visit(f);
    std::size_t i = 0;
    while (i < n && f[i] == full) f[i++] = 1;
    if (i == n) break;
    ++f[i];
  }
}

std::vector<Edge> to_edges(const Frame& f) {
  std::vector<Edge> edges;
  for (std::size_t w = 0; w < f.size(); ++w) {
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (f[w] & (1u << v)) edges.push_back({w, v});
    }
  }
  return edges;
}

}  // namespace

void for_each_small_frame(
    std::size_t n, bool connected_only, bool dedupe_isomorphic,
    const std::function<void(const std::vector<Edge>&)>& visit) {
  frames(n, connected_only, dedupe_isomorphic,
         [&](const Frame& f) { visit(to_edges(f)); });
}

void for_each_small_model(
    const SmallModelOptions& options,
    const std::function<void(const KripkeModel&)>& visit) {
  const std::size_t a = options.atoms.size();
  if (a > 4) throw PreconditionError("small models support at most 4 atoms");
  for (std::size_t n = options.min_worlds; n <= options.max_worlds; ++n) {
    const auto perms = root_fixing_perms(n);
    const unsigned label_values = 1u << a;
    frames(n, options.connected_only, options.dedupe_isomorphic,
           [&](const Frame& f) {
             std::vector<const std::vector<std::size_t>*> autos;
             if (options.dedupe_isomorphic) {
               for (const auto& p : perms) {
                 if (permute(f, p) == f) autos.push_back(&p);
               }
             }
             std::vector<unsigned> lab(n, 0);
             while (true) {
               bool keep = true;
               for (const auto* p : autos) {
                 std::vector<unsigned> img(n);
                 for (std::size_t w = 0; w < n; ++w) img[(*p)[w]] = lab[w];
                 if (img < lab) {
                   keep = false;
                   break;
                 }
               }
               if (keep) {
                 ModelData d;
                 for (std::size_t w = 0; w < n; ++w) {
                   World world{"w" + std::to_string(w), {}};
                   for (std::size_t k = 0; k < a; ++k) {
                     if (lab[w] & (1u << k)) world.labels.insert(options.atoms[k]);
                   }
                   d.worlds.push_back(std::move(world));
                 }
                 for (const Edge& e : to_edges(f)) {
                   d.edges.emplace_back(d.worlds[e.source].id,
                                        d.worlds[e.target].id);
                 }
                 d.root = "w0";
                 visit(KripkeModel(std::move(d)));
               }
               std::size_t i = 0;
               while (i < n && lab[i] == label_values - 1) lab[i++] = 0;
               if (i == n) break;
               ++lab[i];
             }
           });
  }
}

}  // namespace ctlenum
