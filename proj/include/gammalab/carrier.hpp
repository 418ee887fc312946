#pragma once

// Finite Gamma-groupoids given by explicit multiplication tables, the
// identity laws they may satisfy, and intra-regularity.
//
// Elements and operation indexes are 0-based here; every document and
// report produced by the command line shows them 1-based.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gammalab {

  struct Element {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Element, Element) = default;
  };

  struct GammaIndex {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(GammaIndex, GammaIndex) = default;
  };

  // A pair (b, c) with b op c = a for at least one operation.
  using Factorization = std::pair<std::uint32_t, std::uint32_t>;

  // Raw nested input: tables[op][row][col].
  using RawTables = std::vector<std::vector<std::vector<std::int64_t>>>;
  using RawTable  = std::vector<std::vector<std::int64_t>>;

  enum class IndexBase { zero, one };

  class GammaGroupoid {
   public:
    std::size_t size() const noexcept {
      return _n;
    }

    std::size_t gamma_count() const noexcept {
      return _g;
    }

    // Unchecked lookup of x op y; hot loops use this.
    std::uint32_t at(std::size_t op, std::size_t x, std::size_t y) const {
      return _cells[(op * _n + x) * _n + y];
    }

    Element product(Element x, GammaIndex op, Element y) const {
      return Element{at(op.index, x.index, y.index)};
    }

    // Distinct (b, c) with b gamma c = a for some gamma, in lexicographic
    // order.
    std::span<Factorization const> factorizations(std::size_t a) const {
      return std::span<Factorization const>(_factors.data() + _offsets[a],
                                            _offsets[a + 1] - _offsets[a]);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    // Display name of x: its label if any, otherwise x + 1.
    std::string label(Element x) const;

    // 0-based copy of the tables.
    RawTables tables() const;

    friend bool operator==(GammaGroupoid const& a, GammaGroupoid const& b) {
      return a._n == b._n && a._g == b._g && a._cells == b._cells;
    }

   private:
    friend GammaGroupoid validate_groupoid(std::size_t,
                                           std::size_t,
                                           RawTables const&,
                                           IndexBase,
                                           std::vector<std::string>);

    GammaGroupoid(std::size_t                n,
                  std::size_t                g,
                  std::vector<std::uint32_t> cells,
                  std::vector<std::string>   labels);

    std::size_t                _n;
    std::size_t                _g;
    std::vector<std::uint32_t> _cells;
    std::vector<std::string>   _labels;
    std::vector<Factorization> _factors;
    std::vector<std::size_t>   _offsets;
  };

  // Throws Error{wrong_shape} if the table count is not g or a table is not
  // n x n, and Error{out_of_range} for an entry outside the carrier after
  // normalizing from `base`.
  GammaGroupoid validate_groupoid(std::size_t              n,
                                  std::size_t              g,
                                  RawTables const&         raw,
                                  IndexBase                base   = IndexBase::zero,
                                  std::vector<std::string> labels = {});

  // Convenience for the common |Gamma| = 1 case.
  GammaGroupoid single_operation(RawTable const& raw,
                                 IndexBase       base = IndexBase::zero);

  inline Element product(GammaGroupoid const& G,
                         Element              x,
                         GammaIndex           op,
                         Element              y) {
    return G.product(x, op, y);
  }

  ////////////////////////////////////////////////////////////////////////
  // Laws
  ////////////////////////////////////////////////////////////////////////

  enum class Law {
    left_invertive,
    medial,
    ag_star_star,
    paramedial,
    commutative,
    associative,
    idempotent_band,
    s_equals_sgs,
  };

  inline constexpr Law all_laws[] = {Law::left_invertive,
                                     Law::medial,
                                     Law::ag_star_star,
                                     Law::paramedial,
                                     Law::commutative,
                                     Law::associative,
                                     Law::idempotent_band,
                                     Law::s_equals_sgs};

  std::string_view law_name(Law law);
  std::optional<Law> law_from_name(std::string_view name);

  // Number of element and operation variables quantified by a law.
  //   left_invertive  (x y z; a b)    (x a y) b z = (z a y) b x
  //   medial          (w x y z; a b c) (w a x) b (y c z) = (w a y) b (x c z)
  //   ag_star_star    (x y z; a b)    x a (y b z) = y a (x b z)
  //   paramedial      (w x y z; a b c) (w a x) b (y c z) = (z a y) b (x c w)
  //   commutative     (x y; a)        x a y = y a x
  //   associative     (x y z; a b)    (x a y) b z = x a (y b z)
  //   idempotent_band (x; a)          x a x = x
  //   s_equals_sgs    (x;)            x = b g c for some b, g, c
  std::pair<std::size_t, std::size_t> law_arity(Law law);

  struct LawWitness {
    std::vector<Element>    elements;
    std::vector<GammaIndex> gammas;
    Element                 lhs;
    // Empty for s_equals_sgs: lhs has no factorization at all.
    std::optional<Element> rhs;

    bool violated() const {
      return !rhs.has_value() || *rhs != lhs;
    }
  };

  struct LawReport {
    Law                       law;
    bool                      holds;
    std::optional<LawWitness> witness;
  };

  // Exhaustive scan; on failure the witness is the lexicographically
  // smallest violating assignment, element variables before operation
  // variables.
  LawReport check_law(GammaGroupoid const& G, Law law);

  // Evaluates both sides of `law` at one assignment. Throws
  // Error{arity_mismatch} if the assignment has the wrong shape and
  // Error{out_of_range} for indexes outside G.
  LawWitness evaluate_law(GammaGroupoid const&        G,
                          Law                         law,
                          std::span<Element const>    elements,
                          std::span<GammaIndex const> gammas);

  ////////////////////////////////////////////////////////////////////////
  // Intra-regularity
  ////////////////////////////////////////////////////////////////////////

  // a = (x alpha (a beta a)) gamma y
  struct IntraRegularWitness {
    Element    a;
    Element    x;
    Element    y;
    GammaIndex alpha;
    GammaIndex beta;
    GammaIndex gamma;

    Element evaluate(GammaGroupoid const& G) const;
  };

  struct IntraRegularityReport {
    bool                                  regular;
    std::map<Element, IntraRegularWitness> witnesses;
    std::vector<Element>                  failures;
  };

  // First witness in lexicographic (x, y, alpha, beta, gamma) order.
  std::optional<IntraRegularWitness> intra_regular_witness(GammaGroupoid const& G,
                                                           Element a);

  IntraRegularityReport intra_regularity(GammaGroupoid const& G);

  // Cheaper yes/no form used by enumeration filters.
  bool is_intra_regular(GammaGroupoid const& G);

  // From one table builds the two operations a alpha b = (ab)^2 and
  // a beta b = a^3 b^2, with left-normed powers t^2 = t t and
  // t^3 = (t t) t.
  GammaGroupoid derive_power_gamma(GammaGroupoid const& base);

}  // namespace gammalab
