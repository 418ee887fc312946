#include <algorithm>

#include "gammalab/theorem_lab.hpp"

namespace gammalab {

  namespace {
    std::uint64_t splitmix64(std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    }

    std::uint64_t mix(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
      return splitmix64(splitmix64(splitmix64(seed) ^ i) ^ j);
    }

    bool structural_ok(TheoremId id, GammaGroupoid const& G) {
      return !theorem_info(id).needs_intra_regular || is_intra_regular(G);
    }
  }  // namespace

  std::vector<GammaGroupoid> groupoid_pool(TheoremId     id,
                                           std::size_t   n,
                                           std::size_t   g,
                                           std::uint64_t seed,
                                           std::size_t   limit) {
    auto const                 laws = required_laws(id);
    std::vector<GammaGroupoid> pool;
    if (n <= 3) {
      for_each_groupoid(n, g, laws, [&](GammaGroupoid const& G) {
        if (structural_ok(id, G)) {
          pool.push_back(G);
        }
        return pool.size() < limit;
      });
      return pool;
    }
    // Larger carriers: a bounded number of seeded draws, deduplicated.
    std::uint64_t const attempts = 4 * static_cast<std::uint64_t>(limit);
    for (std::uint64_t k = 0; k < attempts && pool.size() < limit; ++k) {
      auto G = random_groupoid(n, g, laws, mix(seed, k, 0x9001));
      if (G && structural_ok(id, *G)
          && std::find(pool.begin(), pool.end(), *G) == pool.end()) {
        pool.push_back(std::move(*G));
      }
    }
    return pool;
  }

  HuntReport hunt(TheoremId id, HuntConfig const& config) {
    auto const& info = theorem_info(id);
    auto const  pool = config.groupoids.empty()
                           ? groupoid_pool(id,
                                           config.n,
                                           config.gamma,
                                           config.seed,
                                           config.pool_limit)
                           : config.groupoids;
    HuntReport report{id, pool.size(), 0, 0, std::nullopt};
    if (pool.empty()) {
      return report;
    }
    std::size_t const set_count
        = id == TheoremId::semilattice ? config.list_size : info.min_sets;
    for (std::uint64_t i = 0; i < config.budget; ++i) {
      auto const&      G = pool[i % pool.size()];
      std::vector<Ifs> sets;
      for (std::size_t j = 0; j < set_count; ++j) {
        sets.push_back(random_ifs(G.size(), config.denominator, mix(config.seed, i, j)));
      }
      InstanceBundle bundle{G, std::move(sets), {}};
      if (id == TheoremId::level_cut) {
        bundle.alpha_grid = alpha_grid(config.denominator);
      }
      auto verdict = verify(id, bundle, {config.relax_hypotheses});
      ++report.tried;
      if (verdict.hypotheses_hold) {
        ++report.qualified;
      }
      if (verdict.is_counterexample()) {
        report.counterexample
            = Counterexample{i, std::move(bundle), std::move(verdict)};
        break;
      }
    }
    return report;
  }

}  // namespace gammalab
