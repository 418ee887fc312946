#include <gtest/gtest.h>

#include "gammalab/crisp.hpp"
#include "gammalab/error.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace gammalab;
using namespace gammalab::testing;

namespace {
  oracle::Bits bits_of(CrispSubset const& A) {
    oracle::Bits b(A.universe());
    for (auto x : A.members()) {
      b[x.index] = true;
    }
    return b;
  }
}  // namespace

TEST(CrispSubset, Basics) {
  auto A = CrispSubset::of(5, elems({1, 3}));
  EXPECT_EQ(A.count(), 2U);
  EXPECT_TRUE(A.contains(Element{2}));
  EXPECT_FALSE(A.contains(Element{1}));
  EXPECT_TRUE(A.is_subset_of(CrispSubset::full(5)));
  EXPECT_EQ(set_union(A, CrispSubset::of(5, elems({2}))), CrispSubset::of(5, elems({1, 2, 3})));
  EXPECT_EQ(set_intersection(A, CrispSubset::of(5, elems({3, 4}))), CrispSubset::of(5, elems({3})));
  EXPECT_EQ(CrispSubset::from_mask(5, 0b101), A);
  EXPECT_THROW(CrispSubset::of(5, elems({6})), Error);
}

TEST(LevelCut, ExampleCutIsOneTwo) {
  auto const cut = level_cut(ifs_fixture("A-cut"), gr(2, 5));
  EXPECT_EQ(cut, CrispSubset::of(5, elems({1, 2})));
  auto const G = F2();
  EXPECT_TRUE(is_crisp(G, cut, CrispKind::left_ideal).holds);
  EXPECT_TRUE(is_crisp(G, cut, CrispKind::right_ideal).holds);
  EXPECT_TRUE(is_crisp(G, cut, CrispKind::bi).holds);
  EXPECT_TRUE(is_crisp(G, cut, CrispKind::generalized_bi).holds);
}

TEST(LevelCut, ZeroIsRejected) {
  try {
    level_cut(ifs_fixture("A-cut"), Grade::zero());
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::alpha_out_of_range);
  }
}

TEST(LevelCutProperty, MembershipIsBitExact) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    auto const A = random_ifs(6, 10, s);
    for (int k = 1; k <= 10; ++k) {
      auto const alpha = gr(k, 10);
      auto const cut   = level_cut(A, alpha);
      for (std::uint32_t x = 0; x < 6; ++x) {
        EXPECT_EQ(cut.contains(Element{x}), A.mu(x) >= alpha && A.nu(x) <= alpha);
      }
    }
  }
}

TEST(SubsetProduct, DistributesOverUnion) {
  for (auto const& G : {F1(), F2(), F3()}) {
    std::uint64_t const n = G.size();
    for (std::uint64_t s = 0; s < 200; ++s) {
      auto const A = CrispSubset::from_mask(n, (s * 2654435761U) % (1U << n));
      auto const B = CrispSubset::from_mask(n, (s * 40503U + 7) % (1U << n));
      auto const C = CrispSubset::from_mask(n, (s * 97U + 3) % (1U << n));
      EXPECT_EQ(subset_product(G, set_union(A, B), C),
                set_union(subset_product(G, A, C), subset_product(G, B, C)));
      EXPECT_EQ(subset_product(G, C, set_union(A, B)),
                set_union(subset_product(G, C, A), subset_product(G, C, B)));
    }
  }
}

TEST(CrispProperty, AgreesWithBruteForceOnEverySubset) {
  for (auto const& G : {F2(), F3()}) {
    auto const t = oracle::from_groupoid(G);
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
      auto const A = CrispSubset::from_mask(5, mask);
      auto const b = bits_of(A);
      EXPECT_EQ(is_crisp(G, A, CrispKind::left_ideal).holds, oracle::crisp_left(t, b));
      EXPECT_EQ(is_crisp(G, A, CrispKind::right_ideal).holds, oracle::crisp_right(t, b));
      EXPECT_EQ(is_crisp(G, A, CrispKind::bi).holds, oracle::crisp_bi(t, b));
      EXPECT_EQ(is_crisp(G, A, CrispKind::two_sided).holds,
                oracle::crisp_left(t, b) && oracle::crisp_right(t, b));
    }
  }
}

TEST(CrispProperty, OneSidedIdealsAreQuasiIdeals) {
  auto const G = F3();
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    auto const A = CrispSubset::from_mask(5, mask);
    if (is_crisp(G, A, CrispKind::left_ideal).holds
        || is_crisp(G, A, CrispKind::right_ideal).holds) {
      EXPECT_TRUE(is_crisp(G, A, CrispKind::quasi).holds);
    }
  }
}

TEST(CrispWitness, LandsOutsideTheSet) {
  auto const G = F2();
  for (std::uint64_t mask = 1; mask < 32; ++mask) {
    auto const A = CrispSubset::from_mask(5, mask);
    for (auto kind : all_crisp_kinds) {
      auto const v = is_crisp(G, A, kind);
      EXPECT_TRUE(v.nonempty);
      if (!v.witness) {
        continue;
      }
      EXPECT_FALSE(A.contains(v.witness->result));
      auto const& f = v.witness->factors;
      auto const& g = v.witness->gammas;
      if (f.size() == 2) {
        EXPECT_EQ(G.product(f[0], g[0], f[1]), v.witness->result);
      } else if (f.size() == 3) {
        EXPECT_EQ(G.product(G.product(f[0], g[0], f[1]), g[1], f[2]), v.witness->result);
      } else {
        ASSERT_EQ(f.size(), 4U);
        EXPECT_EQ(G.product(f[0], g[0], f[1]), v.witness->result);
        EXPECT_EQ(G.product(f[2], g[1], f[3]), v.witness->result);
      }
    }
  }
}

TEST(CrispVerdict, EmptySetIsFlagged) {
  auto const v = is_crisp(F2(), CrispSubset(5), CrispKind::left_ideal);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.nonempty);
}

TEST(Duo, BoundedExhaustiveCheck) {
  auto const left = is_duo(F2(), Side::left);
  auto const right = is_duo(F2(), Side::right);
  auto const t = oracle::from_groupoid(F2());
  bool left_oracle = true, right_oracle = true;
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    auto const b = bits_of(CrispSubset::from_mask(5, mask));
    bool const two = oracle::crisp_left(t, b) && oracle::crisp_right(t, b);
    left_oracle  = left_oracle && (!oracle::crisp_left(t, b) || two);
    right_oracle = right_oracle && (!oracle::crisp_right(t, b) || two);
  }
  EXPECT_EQ(left.holds, left_oracle);
  EXPECT_EQ(right.holds, right_oracle);
  EXPECT_EQ(left.witness.has_value(), !left.holds);
}

TEST(Duo, CarrierBound) {
  try {
    is_duo(F1(), Side::left, 8);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::carrier_too_large);
  }
}
