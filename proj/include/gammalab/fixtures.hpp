#pragma once

// The worked examples bundled with the library, by name.

#include <span>
#include <string_view>

#include "gammalab/carrier.hpp"
#include "gammalab/ifs.hpp"

namespace gammalab {

  enum class FixtureKind { groupoid, ifs };

  struct FixtureInfo {
    std::string_view name;
    FixtureKind      kind;
    std::string_view description;
  };

  std::span<FixtureInfo const> fixture_catalog();
  FixtureInfo const*           find_fixture(std::string_view name);

  // Both throw Error{parse_error} for an unknown name or a name of the
  // other kind.
  GammaGroupoid groupoid_fixture(std::string_view name);
  Ifs           ifs_fixture(std::string_view name);

}  // namespace gammalab
