#include <algorithm>
#include <numeric>
#include <random>

#include "gammalab/error.hpp"
#include "gammalab/theorem_lab.hpp"

namespace gammalab {

  namespace {
    constexpr int unset = -1;

    // Cells are laid out operation-major, then row, then column, which is
    // also the order they are filled in.
    class PartialTables {
     public:
      PartialTables(std::size_t n, std::size_t g)
          : _n(n), _g(g), _cells(g * n * n, unset) {}

      std::size_t cell_count() const {
        return _cells.size();
      }

      int& operator[](std::size_t i) {
        return _cells[i];
      }

      int at(std::size_t op, int x, int y) const {
        return _cells[(op * _n + x) * _n + y];
      }

      // False if some fully determined instance of (a g b) h c = (c g b) h a
      // is violated.
      bool left_invertive_so_far() const {
        for (std::size_t g = 0; g < _g; ++g) {
          for (int a = 0; a < static_cast<int>(_n); ++a) {
            for (int b = 0; b < static_cast<int>(_n); ++b) {
              int const ab = at(g, a, b);
              if (ab == unset) {
                continue;
              }
              for (int c = 0; c < static_cast<int>(_n); ++c) {
                int const cb = at(g, c, b);
                if (cb == unset) {
                  continue;
                }
                for (std::size_t h = 0; h < _g; ++h) {
                  int const l = at(h, ab, c);
                  int const r = at(h, cb, a);
                  if (l != unset && r != unset && l != r) {
                    return false;
                  }
                }
              }
            }
          }
        }
        return true;
      }

      GammaGroupoid freeze() const {
        RawTables raw(_g, RawTable(_n, std::vector<std::int64_t>(_n)));
        for (std::size_t op = 0; op < _g; ++op) {
          for (std::size_t x = 0; x < _n; ++x) {
            for (std::size_t y = 0; y < _n; ++y) {
              raw[op][x][y] = at(op, static_cast<int>(x), static_cast<int>(y));
            }
          }
        }
        return validate_groupoid(_n, _g, raw);
      }

     private:
      std::size_t      _n;
      std::size_t      _g;
      std::vector<int> _cells;
    };

    bool satisfies(GammaGroupoid const& G, std::vector<Law> const& laws) {
      return std::all_of(laws.begin(), laws.end(), [&G](Law law) {
        return check_law(G, law).holds;
      });
    }

    void require_enumerable(std::size_t n, std::size_t g) {
      if (n == 0 || g == 0) {
        throw Error(ErrorCode::wrong_shape, "n and |Gamma| must be positive");
      }
      if (n > max_enumeration_size) {
        throw Error(ErrorCode::carrier_too_large,
                    "enumeration supports n <= "
                        + std::to_string(max_enumeration_size) + ", got "
                        + std::to_string(n));
      }
    }

    // Depth-first fill. `order(cell)` yields the values to try at a cell;
    // `on_complete` returns false to stop. Returns false if stopped.
    template <typename Order, typename OnComplete, typename Tick>
    bool backtrack(PartialTables&          t,
                   std::size_t             cell,
                   bool                    prune,
                   Order&&                 order,
                   OnComplete&&            on_complete,
                   Tick&&                  tick) {
      if (cell == t.cell_count()) {
        return on_complete(t);
      }
      for (int v : order(cell)) {
        if (!tick()) {
          return false;
        }
        t[cell] = v;
        if (prune && !t.left_invertive_so_far()) {
          continue;
        }
        if (!backtrack(t, cell + 1, prune, order, on_complete, tick)) {
          t[cell] = unset;
          return false;
        }
      }
      t[cell] = unset;
      return true;
    }
  }  // namespace

  std::size_t for_each_groupoid(std::size_t             n,
                                std::size_t             g,
                                std::vector<Law> const& required,
                                GroupoidVisitor const&  visit) {
    require_enumerable(n, g);
    bool const prune = std::find(required.begin(), required.end(),
                                 Law::left_invertive)
                       != required.end();
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 0);
    std::size_t   emitted = 0;
    PartialTables t(n, g);
    backtrack(
        t,
        0,
        prune,
        [&values](std::size_t) -> std::vector<int> const& { return values; },
        [&](PartialTables const& full) {
          auto G = full.freeze();
          if (!satisfies(G, required)) {
            return true;
          }
          ++emitted;
          return visit(G);
        },
        [] { return true; });
    return emitted;
  }

  std::vector<GammaGroupoid> enumerate_groupoids(std::size_t             n,
                                                 std::size_t             g,
                                                 std::vector<Law> const& required,
                                                 std::size_t             limit) {
    std::vector<GammaGroupoid> out;
    if (limit == 0) {
      return out;
    }
    for_each_groupoid(n, g, required, [&](GammaGroupoid const& G) {
      out.push_back(G);
      return out.size() < limit;
    });
    return out;
  }

  std::optional<GammaGroupoid> random_groupoid(std::size_t             n,
                                               std::size_t             g,
                                               std::vector<Law> const& required,
                                               std::uint64_t           seed,
                                               std::size_t node_budget) {
    if (n == 0 || g == 0) {
      throw Error(ErrorCode::wrong_shape, "n and |Gamma| must be positive");
    }
    bool const prune = std::find(required.begin(), required.end(),
                                 Law::left_invertive)
                       != required.end();
    std::mt19937_64              rng(seed);
    std::vector<int>             values(n);
    std::size_t                  nodes = 0;
    std::optional<GammaGroupoid> found;
    PartialTables                t(n, g);
    backtrack(
        t,
        0,
        prune,
        [&](std::size_t) {
          std::iota(values.begin(), values.end(), 0);
          std::shuffle(values.begin(), values.end(), rng);
          return values;
        },
        [&](PartialTables const& full) {
          auto G = full.freeze();
          if (!satisfies(G, required)) {
            return true;
          }
          found = std::move(G);
          return false;
        },
        [&] { return ++nodes <= node_budget; });
    return found;
  }

}  // namespace gammalab
