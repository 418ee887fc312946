#include "gammalab/ifs.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "gammalab/error.hpp"

namespace gammalab {

  namespace {
    void require_same_size(std::size_t a, std::size_t b, char const* what) {
      if (a != b) {
        throw Error(ErrorCode::size_mismatch,
                    std::string(what) + ": sizes " + std::to_string(a)
                        + " and " + std::to_string(b) + " differ");
      }
    }
  }  // namespace

  Ifs::Ifs(std::vector<Grade> mu, std::vector<Grade> nu, NoSumCheck)
      : _mu(std::move(mu)), _nu(std::move(nu)) {
    if (_mu.size() != _nu.size()) {
      throw Error(ErrorCode::length_mismatch,
                  "mu has " + std::to_string(_mu.size()) + " grades, nu has "
                      + std::to_string(_nu.size()));
    }
  }

  Ifs::Ifs(std::vector<Grade> mu, std::vector<Grade> nu)
      : Ifs(std::move(mu), std::move(nu), NoSumCheck{}) {
    for (std::size_t x = 0; x < _mu.size(); ++x) {
      if (!sum_at_most_one(_mu[x], _nu[x])) {
        throw Error(ErrorCode::sum_exceeds_one,
                    "element " + std::to_string(x + 1) + ": "
                        + _mu[x].to_string() + " + " + _nu[x].to_string()
                        + " > 1");
      }
    }
  }

  Ifs Ifs::unchecked(std::vector<Grade> mu, std::vector<Grade> nu) {
    return Ifs(std::move(mu), std::move(nu), NoSumCheck{});
  }

  bool Ifs::within_sum_bound() const {
    for (std::size_t x = 0; x < _mu.size(); ++x) {
      if (!sum_at_most_one(_mu[x], _nu[x])) {
        return false;
      }
    }
    return true;
  }

  Ifs make_ifs(std::size_t n, std::vector<Grade> mu, std::vector<Grade> nu) {
    if (mu.size() != n || nu.size() != n) {
      throw Error(ErrorCode::length_mismatch,
                  "expected " + std::to_string(n) + " grades, got "
                      + std::to_string(mu.size()) + " and "
                      + std::to_string(nu.size()));
    }
    return Ifs(std::move(mu), std::move(nu));
  }

  Ifs delta(std::size_t n) {
    return Ifs(std::vector<Grade>(n, Grade::one()),
               std::vector<Grade>(n, Grade::zero()));
  }

  bool is_delta(Ifs const& A) {
    return A == delta(A.size());
  }

  Ifs constant_ifs(std::size_t n, Grade mu, Grade nu) {
    return Ifs(std::vector<Grade>(n, mu), std::vector<Grade>(n, nu));
  }

  Ifs compose(GammaGroupoid const& G, Ifs const& A, Ifs const& B) {
    require_same_size(G.size(), A.size(), "compose");
    require_same_size(G.size(), B.size(), "compose");
    std::size_t const  n = G.size();
    std::vector<Grade> mu(n, Grade::zero());
    std::vector<Grade> nu(n, Grade::one());
    for (std::size_t a = 0; a < n; ++a) {
      auto factors = G.factorizations(a);
      if (factors.empty()) {
        continue;
      }
      Grade best_mu = Grade::zero();
      Grade best_nu = Grade::one();
      for (auto [b, c] : factors) {
        best_mu = std::max(best_mu, std::min(A.mu(b), B.mu(c)));
        best_nu = std::min(best_nu, std::max(A.nu(b), B.nu(c)));
      }
      mu[a] = best_mu;
      nu[a] = best_nu;
    }
    // The bound is preserved, so only inputs that already broke it can
    // produce a result that does.
    auto C = Ifs::unchecked(std::move(mu), std::move(nu));
    assert(!A.within_sum_bound() || !B.within_sum_bound() || C.within_sum_bound());
    return C;
  }

  Ifs intersect(Ifs const& A, Ifs const& B) {
    require_same_size(A.size(), B.size(), "intersect");
    std::vector<Grade> mu(A.size()), nu(A.size());
    for (std::size_t x = 0; x < A.size(); ++x) {
      mu[x] = std::min(A.mu(x), B.mu(x));
      nu[x] = std::max(A.nu(x), B.nu(x));
    }
    return Ifs::unchecked(std::move(mu), std::move(nu));
  }

  Ifs unite(Ifs const& A, Ifs const& B) {
    require_same_size(A.size(), B.size(), "unite");
    std::vector<Grade> mu(A.size()), nu(A.size());
    for (std::size_t x = 0; x < A.size(); ++x) {
      mu[x] = std::max(A.mu(x), B.mu(x));
      nu[x] = std::min(A.nu(x), B.nu(x));
    }
    return Ifs::unchecked(std::move(mu), std::move(nu));
  }

  bool is_subset(Ifs const& A, Ifs const& B) {
    require_same_size(A.size(), B.size(), "is_subset");
    for (std::size_t x = 0; x < A.size(); ++x) {
      if (A.mu(x) > B.mu(x) || A.nu(x) < B.nu(x)) {
        return false;
      }
    }
    return true;
  }

  bool equals(Ifs const& A, Ifs const& B) {
    require_same_size(A.size(), B.size(), "equals");
    return A == B;
  }

  bool is_idempotent(GammaGroupoid const& G, Ifs const& A) {
    return compose(G, A, A) == A;
  }

  std::optional<IfsDifference> first_difference(Ifs const& A, Ifs const& B) {
    require_same_size(A.size(), B.size(), "first_difference");
    for (std::uint32_t x = 0; x < A.size(); ++x) {
      if (A.mu(x) != B.mu(x)) {
        return IfsDifference{Element{x}, true, A.mu(x), B.mu(x)};
      }
      if (A.nu(x) != B.nu(x)) {
        return IfsDifference{Element{x}, false, A.nu(x), B.nu(x)};
      }
    }
    return std::nullopt;
  }

  Ifs random_ifs(std::size_t n, std::uint64_t denominator, std::uint64_t seed) {
    if (denominator == 0) {
      throw Error(ErrorCode::invalid_grade, "denominator must be positive");
    }
    auto const D = static_cast<std::int64_t>(denominator);
    // Pairs (p, q) with p + q <= D, listed row by row in p.
    std::uint64_t const cells = (denominator + 1) * (denominator + 2) / 2;
    // mt19937_64 output is fully specified, unlike the standard
    // distributions, so sampling is done by rejection on the raw stream.
    std::mt19937_64     rng(seed);
    std::uint64_t const limit
        = std::mt19937_64::max() - std::mt19937_64::max() % cells;
    std::vector<Grade> mu(n), nu(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t r;
      do {
        r = rng();
      } while (r >= limit);
      auto k = static_cast<std::int64_t>(r % cells);
      // Row p holds D - p + 1 cells.
      std::int64_t p = 0;
      while (k > D - p) {
        k -= D - p + 1;
        ++p;
      }
      mu[x] = Grade(p, D);
      nu[x] = Grade(k, D);
    }
    return Ifs(std::move(mu), std::move(nu));
  }

}  // namespace gammalab
