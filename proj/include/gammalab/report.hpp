#pragma once

// Human-readable, 1-based renderings of witnesses and sets.

#include <span>
#include <string>

#include "gammalab/carrier.hpp"
#include "gammalab/crisp.hpp"
#include "gammalab/ifs.hpp"
#include "gammalab/ifs_ideals.hpp"

namespace gammalab {

  std::string describe(std::span<Element const> elements);
  std::string describe(CrispSubset const& A);
  std::string describe(Ifs const& A);
  std::string describe(LawWitness const& w);
  std::string describe(IntraRegularWitness const& w);
  std::string describe(CrispWitness const& w);
  std::string describe(IfsWitness const& w);
  std::string describe(IfsDifference const& d);

}  // namespace gammalab
