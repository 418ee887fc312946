#include "gammalab/crisp.hpp"

#include <algorithm>
#include <array>

#include "gammalab/error.hpp"

namespace gammalab {

  CrispSubset CrispSubset::full(std::size_t n) {
    CrispSubset s(n);
    s._bits.assign(n, true);
    return s;
  }

  CrispSubset CrispSubset::of(std::size_t n, std::vector<Element> const& members) {
    CrispSubset s(n);
    for (auto x : members) {
      if (x.index >= n) {
        throw Error(ErrorCode::out_of_range,
                    "element " + std::to_string(x.index + 1)
                        + " is outside a carrier of size " + std::to_string(n));
      }
      s.insert(x);
    }
    return s;
  }

  CrispSubset CrispSubset::from_mask(std::size_t n, std::uint64_t mask) {
    CrispSubset s(n);
    for (std::size_t i = 0; i < n && i < 64; ++i) {
      s._bits[i] = (mask >> i) & 1U;
    }
    return s;
  }

  std::size_t CrispSubset::count() const {
    return static_cast<std::size_t>(std::count(_bits.begin(), _bits.end(), true));
  }

  std::vector<Element> CrispSubset::members() const {
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i]) {
        out.push_back(Element{i});
      }
    }
    return out;
  }

  bool CrispSubset::is_subset_of(CrispSubset const& other) const {
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i] && !other._bits[i]) {
        return false;
      }
    }
    return true;
  }

  namespace {
    void require_universe(std::size_t n, CrispSubset const& A) {
      if (A.universe() != n) {
        throw Error(ErrorCode::size_mismatch,
                    "subset over " + std::to_string(A.universe())
                        + " elements used with a carrier of size "
                        + std::to_string(n));
      }
    }

    // Binary products x g y with x drawn from X and y from Y.
    std::optional<CrispWitness> scan_binary(GammaGroupoid const& G,
                                            CrispSubset const&   A,
                                            CrispSubset const&   X,
                                            CrispSubset const&   Y,
                                            CrispKind            clause) {
      std::size_t const n = G.size();
      for (std::uint32_t x = 0; x < n; ++x) {
        if (!X.contains(Element{x})) {
          continue;
        }
        for (std::uint32_t y = 0; y < n; ++y) {
          if (!Y.contains(Element{y})) {
            continue;
          }
          for (std::uint32_t g = 0; g < G.gamma_count(); ++g) {
            Element r{G.at(g, x, y)};
            if (!A.contains(r)) {
              return CrispWitness{
                  clause, r, {Element{x}, Element{y}}, {GammaIndex{g}}};
            }
          }
        }
      }
      return std::nullopt;
    }

    // Ternary products (x b a) g y.
    std::optional<CrispWitness> scan_ternary(GammaGroupoid const& G,
                                             CrispSubset const&   A,
                                             CrispSubset const&   X,
                                             CrispSubset const&   M,
                                             CrispSubset const&   Y,
                                             CrispKind            clause) {
      std::size_t const n = G.size(), k = G.gamma_count();
      for (std::uint32_t x = 0; x < n; ++x) {
        if (!X.contains(Element{x})) {
          continue;
        }
        for (std::uint32_t a = 0; a < n; ++a) {
          if (!M.contains(Element{a})) {
            continue;
          }
          for (std::uint32_t y = 0; y < n; ++y) {
            if (!Y.contains(Element{y})) {
              continue;
            }
            for (std::uint32_t b = 0; b < k; ++b) {
              for (std::uint32_t g = 0; g < k; ++g) {
                Element r{G.at(g, G.at(b, x, a), y)};
                if (!A.contains(r)) {
                  return CrispWitness{clause,
                                      r,
                                      {Element{x}, Element{a}, Element{y}},
                                      {GammaIndex{b}, GammaIndex{g}}};
                }
              }
            }
          }
        }
      }
      return std::nullopt;
    }

    // Smallest (x, y, g) with x in X, y in Y and x g y = z.
    std::optional<std::pair<std::array<std::uint32_t, 2>, std::uint32_t>>
    find_factor(GammaGroupoid const& G,
                CrispSubset const&   X,
                CrispSubset const&   Y,
                std::uint32_t        z) {
      for (std::uint32_t x = 0; x < G.size(); ++x) {
        if (!X.contains(Element{x})) {
          continue;
        }
        for (std::uint32_t y = 0; y < G.size(); ++y) {
          if (!Y.contains(Element{y})) {
            continue;
          }
          for (std::uint32_t g = 0; g < G.gamma_count(); ++g) {
            if (G.at(g, x, y) == z) {
              return std::make_pair(std::array<std::uint32_t, 2>{x, y}, g);
            }
          }
        }
      }
      return std::nullopt;
    }

    std::optional<CrispWitness> witness_for(GammaGroupoid const& G,
                                            CrispSubset const&   A,
                                            CrispKind            kind) {
      auto const S = CrispSubset::full(G.size());
      switch (kind) {
        case CrispKind::subgroupoid:
          return scan_binary(G, A, A, A, kind);
        case CrispKind::left_ideal: return scan_binary(G, A, S, A, kind);
        case CrispKind::right_ideal: return scan_binary(G, A, A, S, kind);
        case CrispKind::two_sided:
          if (auto w = witness_for(G, A, CrispKind::left_ideal)) {
            return w;
          }
          return witness_for(G, A, CrispKind::right_ideal);
        case CrispKind::generalized_bi:
          return scan_ternary(G, A, A, S, A, kind);
        case CrispKind::bi:
          if (auto w = witness_for(G, A, CrispKind::subgroupoid)) {
            return w;
          }
          return witness_for(G, A, CrispKind::generalized_bi);
        case CrispKind::interior: return scan_ternary(G, A, S, A, S, kind);
        case CrispKind::quasi: {
          auto both = set_intersection(subset_product(G, S, A),
                                       subset_product(G, A, S));
          for (auto z : both.members()) {
            if (A.contains(z)) {
              continue;
            }
            auto l = find_factor(G, S, A, z.index);
            auto r = find_factor(G, A, S, z.index);
            return CrispWitness{kind,
                                z,
                                {Element{l->first[0]},
                                 Element{l->first[1]},
                                 Element{r->first[0]},
                                 Element{r->first[1]}},
                                {GammaIndex{l->second}, GammaIndex{r->second}}};
          }
          return std::nullopt;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  CrispSubset set_union(CrispSubset const& A, CrispSubset const& B) {
    require_universe(A.universe(), B);
    CrispSubset out = A;
    for (auto x : B.members()) {
      out.insert(x);
    }
    return out;
  }

  CrispSubset set_intersection(CrispSubset const& A, CrispSubset const& B) {
    require_universe(A.universe(), B);
    CrispSubset out(A.universe());
    for (auto x : A.members()) {
      if (B.contains(x)) {
        out.insert(x);
      }
    }
    return out;
  }

  std::string_view crisp_kind_name(CrispKind kind) {
    switch (kind) {
      case CrispKind::subgroupoid: return "SUBGROUPOID";
      case CrispKind::left_ideal: return "LEFT_IDEAL";
      case CrispKind::right_ideal: return "RIGHT_IDEAL";
      case CrispKind::two_sided: return "TWO_SIDED";
      case CrispKind::generalized_bi: return "GENERALIZED_BI";
      case CrispKind::bi: return "BI";
      case CrispKind::interior: return "INTERIOR";
      case CrispKind::quasi: return "QUASI";
    }
    return "UNKNOWN";
  }

  CrispSubset subset_product(GammaGroupoid const& G,
                             CrispSubset const&   A,
                             CrispSubset const&   B) {
    require_universe(G.size(), A);
    require_universe(G.size(), B);
    CrispSubset out(G.size());
    for (auto a : A.members()) {
      for (auto b : B.members()) {
        for (std::uint32_t g = 0; g < G.gamma_count(); ++g) {
          out.insert(Element{G.at(g, a.index, b.index)});
        }
      }
    }
    return out;
  }

  CrispVerdict is_crisp(GammaGroupoid const& G,
                        CrispSubset const&   A,
                        CrispKind            kind) {
    require_universe(G.size(), A);
    auto w = witness_for(G, A, kind);
    return CrispVerdict{kind, !w.has_value(), !A.empty(), std::move(w)};
  }

  CrispSubset level_cut(Ifs const& A, Grade alpha) {
    if (alpha == Grade::zero()) {
      throw Error(ErrorCode::alpha_out_of_range,
                  "level must lie in (0, 1], got 0/1");
    }
    CrispSubset out(A.size());
    for (std::uint32_t x = 0; x < A.size(); ++x) {
      if (A.mu(x) >= alpha && A.nu(x) <= alpha) {
        out.insert(Element{x});
      }
    }
    return out;
  }

  DuoVerdict is_duo(GammaGroupoid const& G, Side side, std::size_t bound) {
    if (G.size() > bound || G.size() >= 64) {
      throw Error(ErrorCode::carrier_too_large,
                  "duo check enumerates 2^n subsets; n = "
                      + std::to_string(G.size()) + " exceeds the bound "
                      + std::to_string(bound));
    }
    auto const one_sided
        = side == Side::left ? CrispKind::left_ideal : CrispKind::right_ideal;
    std::uint64_t const total = std::uint64_t{1} << G.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      auto A = CrispSubset::from_mask(G.size(), mask);
      if (is_crisp(G, A, one_sided).holds
          && !is_crisp(G, A, CrispKind::two_sided).holds) {
        return DuoVerdict{side, false, A};
      }
    }
    return DuoVerdict{side, true, std::nullopt};
  }

}  // namespace gammalab
