#include "gammalab/ifs_ideals.hpp"

#include <algorithm>

#include "gammalab/error.hpp"

namespace gammalab {

  namespace {
    void require_size(GammaGroupoid const& G, Ifs const& A) {
      if (G.size() != A.size()) {
        throw Error(ErrorCode::size_mismatch,
                    "fuzzy set over " + std::to_string(A.size())
                        + " elements used with a carrier of size "
                        + std::to_string(G.size()));
      }
    }

    // Tests mu(target) >= mu_bound and nu(target) <= nu_bound.
    std::optional<IfsWitness> compare_at(Ifs const&                     A,
                                         IfsKind                        clause,
                                         std::vector<Element> const&    elements,
                                         std::vector<GammaIndex> const& gammas,
                                         std::uint32_t                  target,
                                         Grade                          mu_bound,
                                         Grade                          nu_bound) {
      if (A.mu(target) < mu_bound) {
        return IfsWitness{clause,
                          Component::mu,
                          elements,
                          gammas,
                          Element{target},
                          A.mu(target),
                          mu_bound,
                          std::nullopt};
      }
      if (A.nu(target) > nu_bound) {
        return IfsWitness{clause,
                          Component::nu,
                          elements,
                          gammas,
                          Element{target},
                          A.nu(target),
                          nu_bound,
                          std::nullopt};
      }
      return std::nullopt;
    }

    std::optional<IfsWitness> scan_binary(GammaGroupoid const& G,
                                          Ifs const&           A,
                                          IfsKind              clause) {
      std::size_t const n = G.size();
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          Grade mu_bound, nu_bound;
          switch (clause) {
            case IfsKind::left:
              mu_bound = A.mu(y);
              nu_bound = A.nu(y);
              break;
            case IfsKind::right:
              mu_bound = A.mu(x);
              nu_bound = A.nu(x);
              break;
            default:
              mu_bound = std::min(A.mu(x), A.mu(y));
              nu_bound = std::max(A.nu(x), A.nu(y));
              break;
          }
          for (std::uint32_t g = 0; g < G.gamma_count(); ++g) {
            if (auto w = compare_at(A,
                                    clause,
                                    {Element{x}, Element{y}},
                                    {GammaIndex{g}},
                                    G.at(g, x, y),
                                    mu_bound,
                                    nu_bound)) {
              return w;
            }
          }
        }
      }
      return std::nullopt;
    }

    std::optional<IfsWitness> scan_ternary(GammaGroupoid const& G,
                                           Ifs const&           A,
                                           IfsKind              clause) {
      std::size_t const n = G.size(), k = G.gamma_count();
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t a = 0; a < n; ++a) {
          for (std::uint32_t y = 0; y < n; ++y) {
            Grade mu_bound, nu_bound;
            if (clause == IfsKind::interior) {
              mu_bound = A.mu(a);
              nu_bound = A.nu(a);
            } else {
              mu_bound = std::min(A.mu(x), A.mu(y));
              nu_bound = std::max(A.nu(x), A.nu(y));
            }
            for (std::uint32_t b = 0; b < k; ++b) {
              for (std::uint32_t g = 0; g < k; ++g) {
                if (auto w = compare_at(A,
                                        clause,
                                        {Element{x}, Element{a}, Element{y}},
                                        {GammaIndex{b}, GammaIndex{g}},
                                        G.at(g, G.at(b, x, a), y),
                                        mu_bound,
                                        nu_bound)) {
                  return w;
                }
              }
            }
          }
        }
      }
      return std::nullopt;
    }

    // First point where `composed` is not contained in A.
    std::optional<IfsWitness> containment_witness(Ifs const& composed,
                                                  Ifs const& A,
                                                  IfsKind    clause) {
      for (std::uint32_t a = 0; a < A.size(); ++a) {
        if (composed.mu(a) > A.mu(a)) {
          return IfsWitness{clause,
                            Component::mu,
                            {Element{a}},
                            {},
                            Element{a},
                            A.mu(a),
                            composed.mu(a),
                            std::nullopt};
        }
        if (composed.nu(a) < A.nu(a)) {
          return IfsWitness{clause,
                            Component::nu,
                            {Element{a}},
                            {},
                            Element{a},
                            A.nu(a),
                            composed.nu(a),
                            std::nullopt};
        }
      }
      return std::nullopt;
    }

    std::optional<IfsWitness> quasi_witness(GammaGroupoid const& G, Ifs const& A) {
      auto const d     = delta(G.size());
      auto const right = compose(G, A, d);
      auto const left  = compose(G, d, A);
      auto       w     = containment_witness(intersect(right, left), A, IfsKind::quasi);
      if (w) {
        auto a = w->target.index;
        w->compositions
            = w->component == Component::mu
                  ? std::make_pair(right.mu(a), left.mu(a))
                  : std::make_pair(right.nu(a), left.nu(a));
      }
      return w;
    }

    std::optional<IfsWitness> witness_for(GammaGroupoid const& G,
                                          Ifs const&           A,
                                          IfsKind              kind) {
      switch (kind) {
        case IfsKind::subgroupoid:
        case IfsKind::left:
        case IfsKind::right: return scan_binary(G, A, kind);
        case IfsKind::two_sided:
          if (auto w = scan_binary(G, A, IfsKind::left)) {
            return w;
          }
          return scan_binary(G, A, IfsKind::right);
        case IfsKind::generalized_bi:
        case IfsKind::interior: return scan_ternary(G, A, kind);
        case IfsKind::bi:
          if (auto w = scan_binary(G, A, IfsKind::subgroupoid)) {
            return w;
          }
          return scan_ternary(G, A, IfsKind::generalized_bi);
        case IfsKind::quasi: return quasi_witness(G, A);
      }
      return std::nullopt;
    }
  }  // namespace

  std::string_view ifs_kind_name(IfsKind kind) {
    switch (kind) {
      case IfsKind::subgroupoid: return "IF_SUBGROUPOID";
      case IfsKind::left: return "IF_LEFT";
      case IfsKind::right: return "IF_RIGHT";
      case IfsKind::two_sided: return "IF_TWO_SIDED";
      case IfsKind::generalized_bi: return "IF_GENERALIZED_BI";
      case IfsKind::bi: return "IF_BI";
      case IfsKind::interior: return "IF_INTERIOR";
      case IfsKind::quasi: return "IF_QUASI";
    }
    return "UNKNOWN";
  }

  IfsVerdict is_if(GammaGroupoid const& G, Ifs const& A, IfsKind kind) {
    require_size(G, A);
    auto w = witness_for(G, A, kind);
    return IfsVerdict{kind, !w.has_value(), std::move(w)};
  }

  IfsVerdict characterize_by_composition(GammaGroupoid const& G,
                                         Ifs const&           A,
                                         IfsKind              kind) {
    require_size(G, A);
    auto const d = delta(G.size());
    std::optional<Ifs> composed;
    switch (kind) {
      case IfsKind::subgroupoid: composed = compose(G, A, A); break;
      case IfsKind::left: composed = compose(G, d, A); break;
      case IfsKind::right: composed = compose(G, A, d); break;
      default:
        throw Error(ErrorCode::arity_mismatch,
                    std::string(ifs_kind_name(kind))
                        + " has no composition characterization");
    }
    auto w = containment_witness(*composed, A, kind);
    return IfsVerdict{kind, !w.has_value(), std::move(w)};
  }

}  // namespace gammalab
