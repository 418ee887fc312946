#pragma once

#include <cstdint>
#include <vector>

#include "gammalab/carrier.hpp"
#include "gammalab/fixtures.hpp"
#include "gammalab/grade.hpp"
#include "gammalab/ifs.hpp"

namespace gammalab::testing {

  inline Grade gr(std::int64_t p, std::int64_t q) {
    return Grade(p, q);
  }

  inline Ifs tenths(std::vector<int> const& mu, std::vector<int> const& nu) {
    std::vector<Grade> m, v;
    for (int x : mu) {
      m.emplace_back(x, 10);
    }
    for (int x : nu) {
      v.emplace_back(x, 10);
    }
    return Ifs(std::move(m), std::move(v));
  }

  inline std::vector<Element> elems(std::vector<std::uint32_t> const& one_based) {
    std::vector<Element> out;
    for (auto x : one_based) {
      out.push_back(Element{x - 1});
    }
    return out;
  }

  inline GammaGroupoid F1() {
    return groupoid_fixture("F1");
  }

  inline GammaGroupoid F2() {
    return groupoid_fixture("F2");
  }

  inline GammaGroupoid F3() {
    return groupoid_fixture("F3");
  }

}  // namespace gammalab::testing
