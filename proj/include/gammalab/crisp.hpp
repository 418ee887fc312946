#pragma once

// Crisp subsets of the carrier, the seven subset-ideal notions, and the
// bridge from fuzzy sets to subsets via level cuts.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gammalab/carrier.hpp"
#include "gammalab/grade.hpp"
#include "gammalab/ifs.hpp"

namespace gammalab {

  class CrispSubset {
   public:
    explicit CrispSubset(std::size_t n) : _bits(n, false) {}

    static CrispSubset full(std::size_t n);
    static CrispSubset of(std::size_t n, std::vector<Element> const& members);
    // Bit i of mask selects element i; requires n <= 64.
    static CrispSubset from_mask(std::size_t n, std::uint64_t mask);

    std::size_t universe() const noexcept {
      return _bits.size();
    }

    bool contains(Element x) const {
      return _bits[x.index];
    }

    void insert(Element x) {
      _bits[x.index] = true;
    }

    std::size_t count() const;

    bool empty() const {
      return count() == 0;
    }

    std::vector<Element> members() const;

    bool is_subset_of(CrispSubset const& other) const;

    friend bool operator==(CrispSubset const&, CrispSubset const&) = default;

   private:
    std::vector<bool> _bits;
  };

  CrispSubset set_union(CrispSubset const& A, CrispSubset const& B);
  CrispSubset set_intersection(CrispSubset const& A, CrispSubset const& B);

  enum class CrispKind {
    subgroupoid,
    left_ideal,
    right_ideal,
    two_sided,
    generalized_bi,
    bi,
    interior,
    quasi,
  };

  inline constexpr CrispKind all_crisp_kinds[] = {CrispKind::subgroupoid,
                                                  CrispKind::left_ideal,
                                                  CrispKind::right_ideal,
                                                  CrispKind::two_sided,
                                                  CrispKind::generalized_bi,
                                                  CrispKind::bi,
                                                  CrispKind::interior,
                                                  CrispKind::quasi};

  std::string_view crisp_kind_name(CrispKind kind);

  // An instantiation whose product lands outside A. `clause` is the
  // defining containment that failed (for two_sided and bi it names the
  // constituent notion).
  //   subgroupoid, left, right: factors (x, y), gammas (g), result x g y
  //   generalized_bi, interior: factors (x, a, y), gammas (b, g),
  //                             result (x b a) g y
  //   quasi: result z, factors (s, a, a', s'), gammas (g, g') with
  //          z = s g a = a' g' s'
  struct CrispWitness {
    CrispKind               clause;
    Element                 result;
    std::vector<Element>    factors;
    std::vector<GammaIndex> gammas;
  };

  struct CrispVerdict {
    CrispKind                   kind;
    bool                        holds;
    // The empty set satisfies every containment vacuously; callers that
    // follow the non-empty convention check this flag.
    bool                        nonempty;
    std::optional<CrispWitness> witness;
  };

  // { a g b : a in A, b in B, g in Gamma }
  CrispSubset subset_product(GammaGroupoid const& G,
                             CrispSubset const&   A,
                             CrispSubset const&   B);

  CrispVerdict is_crisp(GammaGroupoid const& G,
                        CrispSubset const&   A,
                        CrispKind            kind);

  // { x : mu(x) >= alpha and nu(x) <= alpha }, alpha in (0, 1].
  CrispSubset level_cut(Ifs const& A, Grade alpha);

  enum class Side { left, right };

  struct DuoVerdict {
    Side                       side;
    bool                       holds;
    std::optional<CrispSubset> witness;
  };

  inline constexpr std::size_t default_duo_bound = 12;

  // Enumerates every subset (in increasing bitmask order) and checks that
  // each one-sided ideal on `side` is two-sided.
  DuoVerdict is_duo(GammaGroupoid const& G,
                    Side                 side,
                    std::size_t          bound = default_duo_bound);

}  // namespace gammalab
