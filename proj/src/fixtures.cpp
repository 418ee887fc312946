#include "gammalab/fixtures.hpp"

#include <array>
#include <string>

#include "gammalab/error.hpp"

namespace gammalab {

  namespace {
    // 1-based.
    RawTable const f1 = {{1, 4, 7, 3, 6, 8, 2, 9, 5},
                         {9, 2, 5, 7, 1, 4, 8, 6, 3},
                         {6, 8, 3, 5, 9, 2, 4, 1, 7},
                         {5, 9, 2, 4, 7, 1, 6, 3, 8},
                         {3, 6, 8, 2, 5, 9, 1, 7, 4},
                         {7, 1, 4, 8, 3, 6, 9, 5, 2},
                         {8, 3, 6, 9, 2, 5, 7, 4, 1},
                         {2, 5, 9, 1, 4, 7, 3, 8, 6},
                         {4, 7, 1, 6, 8, 3, 5, 2, 9}};

    RawTable const f2 = {{1, 1, 1, 1, 1},
                         {1, 2, 2, 2, 2},
                         {1, 2, 4, 5, 3},
                         {1, 2, 3, 4, 5},
                         {1, 2, 5, 3, 4}};

    RawTable const f3 = {{1, 1, 1, 1, 1},
                         {1, 5, 5, 3, 5},
                         {1, 5, 5, 2, 5},
                         {1, 2, 3, 4, 5},
                         {1, 5, 5, 5, 5}};

    // Grades in tenths.
    struct TenthsIfs {
      std::array<int, 5> mu;
      std::array<int, 5> nu;
    };

    TenthsIfs const a_ex  = {{10, 0, 0, 0, 0}, {3, 4, 2, 2, 2}};
    TenthsIfs const a_cut = {{4, 8, 0, 0, 0}, {4, 3, 9, 9, 10}};
    TenthsIfs const a_fgh = {{3, 3, 3, 1, 4}, {2, 3, 4, 5, 2}};
    TenthsIfs const b_fgh = {{5, 5, 5, 4, 6}, {3, 4, 5, 6, 3}};

    // A-ex and A-cut break mu + nu <= 1 at one element each (README, errata).
    Ifs from_tenths(TenthsIfs const& t) {
      std::vector<Grade> mu, nu;
      for (std::size_t x = 0; x < t.mu.size(); ++x) {
        mu.emplace_back(t.mu[x], 10);
        nu.emplace_back(t.nu[x], 10);
      }
      return Ifs::unchecked(std::move(mu), std::move(nu));
    }

    constexpr std::array<FixtureInfo, 8> catalog = {{
        {"F1", FixtureKind::groupoid, "9-element AG-band, single operation"},
        {"F1-power",
         FixtureKind::groupoid,
         "F1 with the two operations built from squares and cubes"},
        {"F2", FixtureKind::groupoid, "5-element intra-regular example, Gamma = {alpha}"},
        {"F3", FixtureKind::groupoid, "5-element non-intra-regular example, Gamma = {1}"},
        {"A-ex", FixtureKind::ifs, "IFS on F2 claimed to be an IF two-sided ideal"},
        {"A-cut", FixtureKind::ifs, "IFS on F2 whose 2/5-cut is {1,2}"},
        {"A-fgh", FixtureKind::ifs, "first IFS of the product example on F3"},
        {"B-fgh", FixtureKind::ifs, "second IFS of the product example on F3"},
    }};

    FixtureInfo const& require(std::string_view name, FixtureKind kind) {
      auto const* info = find_fixture(name);
      if (info == nullptr || info->kind != kind) {
        throw Error(ErrorCode::parse_error,
                    "no bundled "
                        + std::string(kind == FixtureKind::groupoid ? "groupoid"
                                                                    : "IFS")
                        + " fixture named '" + std::string(name) + "'");
      }
      return *info;
    }
  }  // namespace

  std::span<FixtureInfo const> fixture_catalog() {
    return catalog;
  }

  FixtureInfo const* find_fixture(std::string_view name) {
    for (auto const& info : catalog) {
      if (info.name == name) {
        return &info;
      }
    }
    return nullptr;
  }

  GammaGroupoid groupoid_fixture(std::string_view name) {
    auto const& info = require(name, FixtureKind::groupoid);
    if (info.name == "F1") {
      return single_operation(f1, IndexBase::one);
    }
    if (info.name == "F1-power") {
      return derive_power_gamma(single_operation(f1, IndexBase::one));
    }
    return single_operation(info.name == "F2" ? f2 : f3, IndexBase::one);
  }

  Ifs ifs_fixture(std::string_view name) {
    auto const& info = require(name, FixtureKind::ifs);
    if (info.name == "A-ex") {
      return from_tenths(a_ex);
    }
    if (info.name == "A-cut") {
      return from_tenths(a_cut);
    }
    return from_tenths(info.name == "A-fgh" ? a_fgh : b_fgh);
  }

}  // namespace gammalab
