#pragma once

// The eight intuitionistic fuzzy ideal notions, decided pointwise with
// counterwitnesses, plus their characterizations through composition.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gammalab/carrier.hpp"
#include "gammalab/grade.hpp"
#include "gammalab/ifs.hpp"

namespace gammalab {

  enum class IfsKind {
    subgroupoid,
    left,
    right,
    two_sided,
    generalized_bi,
    bi,
    interior,
    quasi,
  };

  inline constexpr IfsKind all_ifs_kinds[] = {IfsKind::subgroupoid,
                                              IfsKind::left,
                                              IfsKind::right,
                                              IfsKind::two_sided,
                                              IfsKind::generalized_bi,
                                              IfsKind::bi,
                                              IfsKind::interior,
                                              IfsKind::quasi};

  std::string_view ifs_kind_name(IfsKind kind);

  enum class Component { mu, nu };

  // One strict violation of a defining inequality.
  //
  // For the pointwise notions `elements`/`gammas` hold the quantified
  // variables in the order (x, y; g) or (x, a, y; b, g), `target` is the
  // product they evaluate to, `observed` is the grade at the product and
  // `bound` the grade it had to dominate (mu) or stay under (nu).
  //
  // For quasi and for the composition characterizations `elements` is the
  // single point where containment in A fails, `observed` is the grade of
  // A there and `bound` the composed grade it failed to dominate (mu) or
  // stay under (nu); `compositions` carries the two one-sided compositions
  // whose intersection was taken (quasi only).
  struct IfsWitness {
    IfsKind                            clause;
    Component                          component;
    std::vector<Element>               elements;
    std::vector<GammaIndex>            gammas;
    Element                            target;
    Grade                              observed;
    Grade                              bound;
    std::optional<std::pair<Grade, Grade>> compositions;

    // Strictness of the violation as recorded.
    bool is_strict() const {
      return component == Component::mu ? observed < bound : observed > bound;
    }
  };

  struct IfsVerdict {
    IfsKind                   kind;
    bool                      holds;
    std::optional<IfsWitness> witness;
  };

  // Exhaustive scan over every element and Gamma tuple; the witness is the
  // smallest violating tuple, mu checked before nu at each tuple.
  IfsVerdict is_if(GammaGroupoid const& G, Ifs const& A, IfsKind kind);

  // A o A <= A (subgroupoid), delta o A <= A (left), A o delta <= A
  // (right). Throws Error{arity_mismatch} for any other kind.
  IfsVerdict characterize_by_composition(GammaGroupoid const& G,
                                         Ifs const&           A,
                                         IfsKind              kind);

}  // namespace gammalab
