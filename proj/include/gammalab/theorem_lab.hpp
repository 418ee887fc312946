#pragma once

// Catalog of the characterization results for intra-regular AG**-type
// Gamma-groupoids, a verifier that checks hypotheses before conclusions on
// concrete instances, a deterministic counterexample hunter and a small-n
// groupoid enumerator.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammalab/carrier.hpp"
#include "gammalab/grade.hpp"
#include "gammalab/ifs.hpp"
#include "gammalab/ifs_ideals.hpp"

namespace gammalab {

  enum class TheoremId {
    level_cut,         // IF one-sided/bi ideal => every level cut is the crisp one
    characterization,  // pointwise ideal <=> composition containment
    bi_eq,             // IF bi-ideal <=> (A o d) o A = A and A o A = A
    int_eq,            // IF interior <=> (d o A) o d = A
    lr_iff,            // IF left <=> IF right
    duo,               // every IF one-sided ideal is two-sided
    absorb,            // d o A = A and A o d = A for IF one-sided ideals
    delta_idem,        // d o d = d
    quasi_eq,          // IF quasi <=> (A o d) n (d o A) = A
    quasi_ts,          // IF quasi <=> IF two-sided
    int_ts,            // IF interior <=> IF two-sided
    grand_eq,          // the eight notions coincide
    prod_cap,          // two-sided A, B: A o B = A n B
    ts_idem,           // two-sided ideals are idempotent
    semilattice,       // two-sided ideals form a semilattice with identity d
  };

  struct TheoremInfo {
    TheoremId        id;
    std::string_view name;  // e.g. "GRAND_EQ"
    std::string_view slug;  // e.g. "grand-eq", used on the command line
    std::size_t      min_sets;
    std::size_t      max_sets;  // SIZE_MAX for "a list"
    bool             needs_intra_regular;
    bool             needs_ag_star_star;
    std::string_view statement;
  };

  std::span<TheoremInfo const> theorem_catalog();
  TheoremInfo const&           theorem_info(TheoremId id);
  // Accepts the name or the slug, case-insensitively.
  std::optional<TheoremId> theorem_from_name(std::string_view name);

  // Laws a groupoid must satisfy for the theorem's structural hypotheses.
  std::vector<Law> required_laws(TheoremId id);

  struct InstanceBundle {
    GammaGroupoid      groupoid;
    std::vector<Ifs>   sets;
    std::vector<Grade> alpha_grid;  // level_cut only; empty means k/10
  };

  // { 1/D, 2/D, ..., D/D }
  std::vector<Grade> alpha_grid(std::uint64_t denominator);

  struct HypothesisCheck {
    std::string name;
    bool        holds;
    std::string detail;
    // Input-role hypothesis ignored under relax_hypotheses.
    bool relaxed = false;
  };

  // One implication (or sub-claim) of a theorem. `holds` is absent when
  // the premise fails.
  struct ClauseResult {
    std::string         name;
    bool                premise_holds;
    std::optional<bool> holds;
    std::string         detail;
  };

  struct TheoremWitness {
    std::string                  direction;
    std::string                  detail;
    std::optional<IfsDifference> difference;
    std::optional<IfsVerdict>    predicate;
  };

  struct TheoremVerdict {
    TheoremId                     id;
    std::vector<HypothesisCheck>  hypotheses;
    bool                          hypotheses_hold;
    // Absent whenever hypotheses_hold is false.
    std::optional<bool>           conclusion_holds;
    std::vector<ClauseResult>     clauses;
    std::optional<TheoremWitness> witness;
    // The bare equation of PROD_CAP, evaluated even when hypotheses fail so
    // that converse failures can be exhibited.
    std::optional<bool> ungated_statement;

    bool is_counterexample() const {
      return hypotheses_hold && conclusion_holds == false;
    }
  };

  struct VerifyOptions {
    // Drops input-role hypotheses (e.g. "A is an IF left ideal"); the
    // structural ones on the groupoid always apply.
    bool relax_hypotheses = false;
  };

  // Throws Error{arity_mismatch} if the number of sets does not fit the
  // theorem and Error{size_mismatch} if a set does not fit the groupoid.
  TheoremVerdict verify(TheoremId             id,
                        InstanceBundle const& bundle,
                        VerifyOptions         options = {});

  // Checks on the finite list, closed under composition: closure (new
  // products must themselves be two-sided ideals), commutativity,
  // associativity, idempotence and delta as a two-sided identity.
  TheoremVerdict semilattice_check(GammaGroupoid const&    G,
                                   std::vector<Ifs> const& ideals,
                                   VerifyOptions           options = {});

  ////////////////////////////////////////////////////////////////////////
  // Instance supply
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_enumeration_size = 4;

  // Return false to stop the enumeration.
  using GroupoidVisitor = std::function<bool(GammaGroupoid const&)>;

  // Backtracks over table cells in lexicographic order, pruning on
  // left-invertive violations among filled cells when that law is
  // required. Emits tables satisfying every required law, in
  // lexicographic order. Returns the number emitted. Throws
  // Error{carrier_too_large} for n > max_enumeration_size.
  std::size_t for_each_groupoid(std::size_t             n,
                                std::size_t             g,
                                std::vector<Law> const& required,
                                GroupoidVisitor const&  visit);

  std::vector<GammaGroupoid> enumerate_groupoids(std::size_t             n,
                                                 std::size_t             g,
                                                 std::vector<Law> const& required,
                                                 std::size_t             limit);

  // Same backtracking with a seeded random value order per cell; gives up
  // after `node_budget` search nodes. Not uniform over solutions.
  std::optional<GammaGroupoid> random_groupoid(std::size_t             n,
                                               std::size_t             g,
                                               std::vector<Law> const& required,
                                               std::uint64_t           seed,
                                               std::size_t node_budget = 200000);

  ////////////////////////////////////////////////////////////////////////
  // Counterexample search
  ////////////////////////////////////////////////////////////////////////

  struct HuntConfig {
    // Explicit groupoids to draw from; when empty a pool is built from
    // (n, gamma): enumerated for n <= 3, randomly generated otherwise,
    // filtered by the theorem's structural hypotheses.
    std::vector<GammaGroupoid> groupoids;
    std::size_t                n           = 3;
    std::size_t                gamma       = 1;
    std::uint64_t              denominator = 4;
    std::uint64_t              budget      = 1000;
    std::uint64_t              seed        = 1;
    bool                       relax_hypotheses = false;
    std::size_t                list_size        = 3;  // SEMILATTICE only
    std::size_t                pool_limit       = 10000;
  };

  struct Counterexample {
    std::uint64_t  sample;
    InstanceBundle instance;
    TheoremVerdict verdict;
  };

  struct HuntReport {
    TheoremId                     id;
    std::size_t                   pool_size;
    std::uint64_t                 tried;
    std::uint64_t                 qualified;
    std::optional<Counterexample> counterexample;
  };

  // Sample i uses groupoid i mod |pool| and fuzzy sets seeded from
  // (seed, i); stops at the first counterexample, so the report is the
  // one with the smallest sample index.
  HuntReport hunt(TheoremId id, HuntConfig const& config);

  // The pool hunt() draws from when no explicit groupoids are given.
  std::vector<GammaGroupoid> groupoid_pool(TheoremId     id,
                                           std::size_t   n,
                                           std::size_t   g,
                                           std::uint64_t seed,
                                           std::size_t   limit);

}  // namespace gammalab
