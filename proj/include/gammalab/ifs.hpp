#pragma once

// Intuitionistic fuzzy sets over a finite carrier with exact grades.
//
// The nonmembership map is called `nu` throughout, so that it cannot be
// confused with the operation indexes of Gamma.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gammalab/carrier.hpp"
#include "gammalab/grade.hpp"

namespace gammalab {

  class Ifs {
   public:
    // Throws Error{length_mismatch} if mu and nu differ in length and
    // Error{sum_exceeds_one} naming the first x with mu(x) + nu(x) > 1.
    Ifs(std::vector<Grade> mu, std::vector<Grade> nu);

    // Skips the mu + nu <= 1 check; only length_mismatch is raised. The
    // bundled A-ex and A-cut fixtures need this.
    static Ifs unchecked(std::vector<Grade> mu, std::vector<Grade> nu);

    bool within_sum_bound() const;

    std::size_t size() const noexcept {
      return _mu.size();
    }

    Grade mu(std::size_t x) const {
      return _mu[x];
    }

    Grade nu(std::size_t x) const {
      return _nu[x];
    }

    std::span<Grade const> mu() const noexcept {
      return _mu;
    }

    std::span<Grade const> nu() const noexcept {
      return _nu;
    }

    friend bool operator==(Ifs const&, Ifs const&) = default;

   private:
    struct NoSumCheck {};
    Ifs(std::vector<Grade> mu, std::vector<Grade> nu, NoSumCheck);

    std::vector<Grade> _mu;
    std::vector<Grade> _nu;
  };

  // Same as the constructor, but also checks both lists have length n.
  Ifs make_ifs(std::size_t n, std::vector<Grade> mu, std::vector<Grade> nu);

  // The whole-space set: mu = 1 and nu = 0 everywhere.
  Ifs delta(std::size_t n);

  bool is_delta(Ifs const& A);

  Ifs constant_ifs(std::size_t n, Grade mu, Grade nu);

  // Sup-min composition on mu and inf-max on nu over every factorization
  // a = b gamma c; elements without a factorization get (0, 1).
  Ifs compose(GammaGroupoid const& G, Ifs const& A, Ifs const& B);

  // Pointwise (min mu, max nu).
  Ifs intersect(Ifs const& A, Ifs const& B);

  // Pointwise (max mu, min nu).
  Ifs unite(Ifs const& A, Ifs const& B);

  // A is contained in B: mu_A <= mu_B and nu_A >= nu_B everywhere.
  bool is_subset(Ifs const& A, Ifs const& B);

  bool equals(Ifs const& A, Ifs const& B);

  // compose(G, A, A) == A
  bool is_idempotent(GammaGroupoid const& G, Ifs const& A);

  // First point where two sets differ, if any. Used as a witness for the
  // equalities checked by the theorem catalog.
  struct IfsDifference {
    Element at;
    bool    in_mu;  // false: the nu components differ
    Grade   left;
    Grade   right;
  };

  std::optional<IfsDifference> first_difference(Ifs const& A, Ifs const& B);

  // Each (mu(x), nu(x)) is drawn uniformly from
  // { (p/D, q/D) : p + q <= D }. Deterministic in (n, D, seed).
  Ifs random_ifs(std::size_t n, std::uint64_t denominator, std::uint64_t seed);

}  // namespace gammalab
