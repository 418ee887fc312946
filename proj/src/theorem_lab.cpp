#include "gammalab/theorem_lab.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include "gammalab/crisp.hpp"
#include "gammalab/error.hpp"
#include "gammalab/report.hpp"

namespace gammalab {

  namespace {
    constexpr std::size_t any_count = SIZE_MAX;

    constexpr std::array<TheoremInfo, 15> catalog = {{
        {TheoremId::level_cut,
         "LEVELCUT",
         "levelcut",
         1,
         1,
         false,
         false,
         "If A is an IF right (left, two-sided, bi-, generalized bi-) ideal, "
         "every level cut of A is a crisp ideal of the same kind."},
        {TheoremId::characterization,
         "CHAR",
         "char",
         1,
         1,
         false,
         false,
         "A is an IF subgroupoid (left ideal, right ideal) iff A o A <= A "
         "(d o A <= A, A o d <= A)."},
        {TheoremId::bi_eq,
         "BI_EQ",
         "bi-eq",
         1,
         1,
         true,
         true,
         "A is an IF bi-ideal iff (A o d) o A = A and A o A = A."},
        {TheoremId::int_eq,
         "INT_EQ",
         "int-eq",
         1,
         1,
         true,
         true,
         "A is an IF interior ideal iff (d o A) o d = A."},
        {TheoremId::lr_iff,
         "LR_IFF",
         "lr-iff",
         1,
         1,
         true,
         true,
         "A is an IF left ideal iff A is an IF right ideal."},
        {TheoremId::duo,
         "DUO",
         "duo",
         1,
         1,
         true,
         true,
         "Every IF left ideal and every IF right ideal is two-sided."},
        {TheoremId::absorb,
         "ABSORB",
         "absorb",
         1,
         1,
         true,
         false,
         "d o A = A and A o d = A for every IF left, right or two-sided "
         "ideal A."},
        {TheoremId::delta_idem,
         "DELTA_IDEM",
         "delta-idem",
         0,
         0,
         true,
         false,
         "d o d = d."},
        {TheoremId::quasi_eq,
         "QUASI_EQ",
         "quasi-eq",
         1,
         1,
         true,
         true,
         "A is an IF quasi ideal iff (A o d) n (d o A) = A."},
        {TheoremId::quasi_ts,
         "QUASI_TS",
         "quasi-ts",
         1,
         1,
         true,
         true,
         "A is an IF quasi ideal iff A is an IF two-sided ideal."},
        {TheoremId::int_ts,
         "INT_TS",
         "int-ts",
         1,
         1,
         true,
         true,
         "A is an IF interior ideal iff A is an IF two-sided ideal."},
        {TheoremId::grand_eq,
         "GRAND_EQ",
         "grand-eq",
         1,
         1,
         true,
         true,
         "IF left, right, two-sided, bi-, generalized bi-, interior and quasi "
         "ideals coincide, and each is equivalent to A o d = A and d o A = A."},
        {TheoremId::prod_cap,
         "PROD_CAP",
         "prod-cap",
         2,
         2,
         true,
         true,
         "A o B = A n B for IF two-sided ideals A and B."},
        {TheoremId::ts_idem,
         "TS_IDEM",
         "ts-idem",
         1,
         1,
         true,
         false,
         "Every IF two-sided ideal A satisfies A o A = A."},
        {TheoremId::semilattice,
         "SEMILATTICE",
         "semilattice",
         1,
         any_count,
         true,
         true,
         "IF two-sided ideals form a semilattice under o with identity d."},
    }};

    std::string lower(std::string_view s) {
      std::string out;
      for (char c : s) {
        out.push_back(c == '_' ? '-'
                               : static_cast<char>(std::tolower(
                                   static_cast<unsigned char>(c))));
      }
      return out;
    }

    // One side of a biconditional together with the evidence that it is
    // false, when it is.
    struct Claim {
      std::string                  name;
      bool                         value;
      std::optional<IfsVerdict>    predicate;
      std::optional<IfsDifference> difference;
    };

    Claim predicate_claim(std::string name, IfsVerdict verdict) {
      bool holds = verdict.holds;
      return Claim{std::move(name), holds, std::move(verdict), std::nullopt};
    }

    // All of the listed (computed, expected) pairs are equal.
    Claim equation_claim(std::string                                  name,
                       std::vector<std::pair<Ifs, Ifs>> const&      pairs) {
      for (auto const& [computed, expected] : pairs) {
        if (auto d = first_difference(computed, expected)) {
          return Claim{std::move(name), false, std::nullopt, d};
        }
      }
      return Claim{std::move(name), true, std::nullopt, std::nullopt};
    }

    std::string evidence(Claim const& side) {
      if (side.predicate && side.predicate->witness) {
        return describe(*side.predicate->witness);
      }
      if (side.difference) {
        return describe(*side.difference);
      }
      return {};
    }

    TheoremWitness witness_against(std::string direction, Claim const& false_claim) {
      return TheoremWitness{std::move(direction),
                            evidence(false_claim),
                            false_claim.difference,
                            false_claim.predicate};
    }

    void biconditional(TheoremVerdict& v, Claim const& lhs, Claim const& rhs) {
      std::string fwd = lhs.name + " => " + rhs.name;
      std::string bwd = rhs.name + " => " + lhs.name;
      v.clauses.push_back(ClauseResult{
          fwd,
          lhs.value,
          lhs.value ? std::optional<bool>(rhs.value) : std::nullopt,
          lhs.value && !rhs.value ? evidence(rhs) : ""});
      v.clauses.push_back(ClauseResult{
          bwd,
          rhs.value,
          rhs.value ? std::optional<bool>(lhs.value) : std::nullopt,
          rhs.value && !lhs.value ? evidence(lhs) : ""});
      v.conclusion_holds = lhs.value == rhs.value;
      if (lhs.value && !rhs.value) {
        v.witness = witness_against(fwd, rhs);
      } else if (rhs.value && !lhs.value) {
        v.witness = witness_against(bwd, lhs);
      }
    }

    // A list of sub-claims that must all hold.
    void conjunction(TheoremVerdict& v, std::vector<Claim> const& parts) {
      v.conclusion_holds = true;
      for (auto const& part : parts) {
        v.clauses.push_back(ClauseResult{
            part.name, true, part.value, part.value ? "" : evidence(part)});
        if (!part.value && *v.conclusion_holds) {
          v.conclusion_holds = false;
          v.witness          = witness_against(part.name, part);
        }
      }
    }

    void add_structural(TheoremVerdict&      v,
                        GammaGroupoid const& G,
                        TheoremInfo const&   info) {
      auto li = check_law(G, Law::left_invertive);
      v.hypotheses.push_back(
          {"left_invertive", li.holds, li.witness ? describe(*li.witness) : ""});
      if (info.needs_intra_regular) {
        auto ir = intra_regularity(G);
        v.hypotheses.push_back(
            {"intra_regular",
             ir.regular,
             ir.regular ? "" : "not intra-regular at " + describe(ir.failures)});
      }
      if (info.needs_ag_star_star) {
        auto ag = check_law(G, Law::ag_star_star);
        v.hypotheses.push_back({"ag_star_star",
                                ag.holds,
                                ag.witness ? describe(*ag.witness) : ""});
      }
    }

    void add_role(TheoremVerdict&    v,
                  std::string        name,
                  bool               holds,
                  std::string        detail,
                  VerifyOptions      options) {
      v.hypotheses.push_back(HypothesisCheck{
          std::move(name), holds, std::move(detail), options.relax_hypotheses});
    }

    bool all_hold(std::vector<HypothesisCheck> const& hs) {
      return std::all_of(hs.begin(), hs.end(), [](auto const& h) {
        return h.holds || h.relaxed;
      });
    }

    std::string verdict_detail(IfsVerdict const& v) {
      return v.witness ? describe(*v.witness) : "";
    }

    void verify_level_cut(TheoremVerdict&       v,
                          InstanceBundle const& b,
                          VerifyOptions         options) {
      struct CutClause {
        char const* name;
        IfsKind     premise;
        CrispKind   crisp;
      };
      static constexpr CutClause clauses[] = {
          {"IF right => cut right ideal", IfsKind::right, CrispKind::right_ideal},
          {"IF left => cut left ideal", IfsKind::left, CrispKind::left_ideal},
          {"IF two-sided => cut two-sided ideal",
           IfsKind::two_sided,
           CrispKind::two_sided},
          {"IF bi => cut bi-ideal", IfsKind::bi, CrispKind::bi},
          {"IF generalized bi => cut generalized bi-ideal",
           IfsKind::generalized_bi,
           CrispKind::generalized_bi},
      };
      auto const& G = b.groupoid;
      auto const& A = b.sets.front();

      std::vector<IfsVerdict> premises;
      bool                    any_premise = false;
      std::string             detail;
      for (auto const& c : clauses) {
        premises.push_back(is_if(G, A, c.premise));
        any_premise = any_premise || premises.back().holds;
        detail += std::string(ifs_kind_name(c.premise)) + "="
                  + (premises.back().holds ? "true" : "false") + " ";
      }
      detail.pop_back();
      add_role(v, "A satisfies some premise", any_premise, detail, options);
      v.hypotheses_hold = all_hold(v.hypotheses);
      if (!v.hypotheses_hold) {
        return;
      }

      auto const grid
          = b.alpha_grid.empty() ? alpha_grid(10) : b.alpha_grid;
      v.conclusion_holds = true;
      for (std::size_t i = 0; i < std::size(clauses); ++i) {
        auto const& c       = clauses[i];
        bool const  premise = premises[i].holds;
        if (!premise && !options.relax_hypotheses) {
          v.clauses.push_back(
              {c.name, false, std::nullopt, verdict_detail(premises[i])});
          continue;
        }
        ClauseResult clause{c.name, premise, true, ""};
        for (auto alpha : grid) {
          auto cut     = level_cut(A, alpha);
          auto verdict = is_crisp(G, cut, c.crisp);
          if (!verdict.holds) {
            clause.holds  = false;
            clause.detail = "alpha=" + alpha.to_string() + " cut="
                            + describe(cut) + ": " + describe(*verdict.witness);
            break;
          }
        }
        if (clause.holds == false && *v.conclusion_holds) {
          v.conclusion_holds = false;
          v.witness = TheoremWitness{c.name, clause.detail, std::nullopt, premises[i]};
        }
        v.clauses.push_back(std::move(clause));
      }
    }

    void verify_characterization(TheoremVerdict& v, InstanceBundle const& b) {
      auto const& G = b.groupoid;
      auto const& A = b.sets.front();
      v.conclusion_holds = true;
      for (auto kind : {IfsKind::subgroupoid, IfsKind::left, IfsKind::right}) {
        std::string const name(ifs_kind_name(kind));
        TheoremVerdict    part{v.id, {}, true, {}, {}, {}, {}};
        biconditional(part,
                      predicate_claim("pointwise " + name, is_if(G, A, kind)),
                      predicate_claim("composition " + name,
                                     characterize_by_composition(G, A, kind)));
        for (auto& clause : part.clauses) {
          v.clauses.push_back(std::move(clause));
        }
        if (!*part.conclusion_holds && *v.conclusion_holds) {
          v.conclusion_holds = false;
          v.witness          = part.witness;
        }
      }
    }

    void verify_grand(TheoremVerdict& v, InstanceBundle const& b) {
      auto const& G = b.groupoid;
      auto const& A = b.sets.front();
      auto const  d = delta(G.size());
      std::vector<Claim> sides = {
          predicate_claim("(i) left", is_if(G, A, IfsKind::left)),
          predicate_claim("(ii) right", is_if(G, A, IfsKind::right)),
          predicate_claim("(iii) two-sided", is_if(G, A, IfsKind::two_sided)),
          predicate_claim("(iv) bi", is_if(G, A, IfsKind::bi)),
          predicate_claim("(v) generalized bi",
                         is_if(G, A, IfsKind::generalized_bi)),
          predicate_claim("(vi) interior", is_if(G, A, IfsKind::interior)),
          predicate_claim("(vii) quasi", is_if(G, A, IfsKind::quasi)),
          equation_claim("(viii) A o d = A and d o A = A",
                        {{compose(G, A, d), A}, {compose(G, d, A), A}}),
      };
      v.conclusion_holds = true;
      auto const& first  = sides.front();
      for (std::size_t k = 1; k < sides.size(); ++k) {
        auto const& other = sides[k];
        bool const  agree = first.value == other.value;
        std::string name  = first.name + " <=> " + other.name;
        auto const& false_claim = first.value ? other : first;
        v.clauses.push_back(
            ClauseResult{name, true, agree, agree ? "" : evidence(false_claim)});
        if (!agree && *v.conclusion_holds) {
          v.conclusion_holds = false;
          std::string direction = first.value ? first.name + " => " + other.name
                                              : other.name + " => " + first.name;
          v.witness = witness_against(direction, false_claim);
        }
      }
    }
  }  // namespace

  std::span<TheoremInfo const> theorem_catalog() {
    return catalog;
  }

  TheoremInfo const& theorem_info(TheoremId id) {
    for (auto const& info : catalog) {
      if (info.id == id) {
        return info;
      }
    }
    throw Error(ErrorCode::arity_mismatch, "unknown theorem id");
  }

  std::optional<TheoremId> theorem_from_name(std::string_view name) {
    auto const key = lower(name);
    for (auto const& info : catalog) {
      if (key == info.slug || key == lower(info.name)) {
        return info.id;
      }
    }
    return std::nullopt;
  }

  std::vector<Law> required_laws(TheoremId id) {
    std::vector<Law> laws{Law::left_invertive};
    if (theorem_info(id).needs_ag_star_star) {
      laws.push_back(Law::ag_star_star);
    }
    return laws;
  }

  std::vector<Grade> alpha_grid(std::uint64_t denominator) {
    std::vector<Grade> grid;
    auto const         D = static_cast<std::int64_t>(denominator);
    for (std::int64_t k = 1; k <= D; ++k) {
      grid.emplace_back(k, D);
    }
    return grid;
  }

  TheoremVerdict verify(TheoremId             id,
                        InstanceBundle const& b,
                        VerifyOptions         options) {
    auto const& info = theorem_info(id);
    if (b.sets.size() < info.min_sets || b.sets.size() > info.max_sets) {
      throw Error(ErrorCode::arity_mismatch,
                  std::string(info.name) + " takes "
                      + (info.max_sets == any_count
                             ? "at least " + std::to_string(info.min_sets)
                             : std::to_string(info.min_sets))
                      + " fuzzy set(s), got " + std::to_string(b.sets.size()));
    }
    auto const& G = b.groupoid;
    for (auto const& A : b.sets) {
      if (A.size() != G.size()) {
        throw Error(ErrorCode::size_mismatch,
                    "fuzzy set over " + std::to_string(A.size())
                        + " elements used with a carrier of size "
                        + std::to_string(G.size()));
      }
    }
    if (id == TheoremId::semilattice) {
      return semilattice_check(G, b.sets, options);
    }

    TheoremVerdict v{id, {}, false, std::nullopt, {}, std::nullopt, std::nullopt};
    add_structural(v, G, info);
    if (id == TheoremId::level_cut) {
      verify_level_cut(v, b, options);
      return v;
    }

    auto const d = delta(G.size());
    switch (id) {
      case TheoremId::absorb: {
        auto const& A     = b.sets[0];
        auto        left  = is_if(G, A, IfsKind::left);
        auto        right = is_if(G, A, IfsKind::right);
        add_role(v,
                 "A is an IF left, right or two-sided ideal",
                 left.holds || right.holds,
                 left.holds || right.holds
                     ? ""
                     : verdict_detail(left) + "; " + verdict_detail(right),
                 options);
        break;
      }
      case TheoremId::prod_cap: {
        auto const& A = b.sets[0];
        auto const& B = b.sets[1];
        auto        a = is_if(G, A, IfsKind::two_sided);
        auto        c = is_if(G, B, IfsKind::two_sided);
        add_role(v, "A is an IF two-sided ideal", a.holds, verdict_detail(a), options);
        add_role(v, "B is an IF two-sided ideal", c.holds, verdict_detail(c), options);
        v.ungated_statement = compose(G, A, B) == intersect(A, B);
        break;
      }
      case TheoremId::ts_idem: {
        auto a = is_if(G, b.sets[0], IfsKind::two_sided);
        add_role(v, "A is an IF two-sided ideal", a.holds, verdict_detail(a), options);
        break;
      }
      default: break;
    }
    v.hypotheses_hold = all_hold(v.hypotheses);
    if (!v.hypotheses_hold) {
      return v;
    }

    switch (id) {
      case TheoremId::characterization: verify_characterization(v, b); break;
      case TheoremId::bi_eq: {
        auto const& A = b.sets[0];
        biconditional(v,
                      predicate_claim("IF bi-ideal", is_if(G, A, IfsKind::bi)),
                      equation_claim("(A o d) o A = A and A o A = A",
                                    {{compose(G, compose(G, A, d), A), A},
                                     {compose(G, A, A), A}}));
        break;
      }
      case TheoremId::int_eq: {
        auto const& A = b.sets[0];
        biconditional(v,
                      predicate_claim("IF interior", is_if(G, A, IfsKind::interior)),
                      equation_claim("(d o A) o d = A",
                                    {{compose(G, compose(G, d, A), d), A}}));
        break;
      }
      case TheoremId::lr_iff: {
        auto const& A = b.sets[0];
        biconditional(v,
                      predicate_claim("IF left", is_if(G, A, IfsKind::left)),
                      predicate_claim("IF right", is_if(G, A, IfsKind::right)));
        break;
      }
      case TheoremId::duo: {
        auto const& A     = b.sets[0];
        auto        left  = is_if(G, A, IfsKind::left);
        auto        right = is_if(G, A, IfsKind::right);
        auto        both  = is_if(G, A, IfsKind::two_sided);
        v.conclusion_holds = true;
        for (auto const& [name, premise] :
             {std::pair{"IF left => IF two-sided", left.holds},
              std::pair{"IF right => IF two-sided", right.holds}}) {
          std::optional<bool> holds;
          if (premise) {
            holds = both.holds;
          }
          v.clauses.push_back(ClauseResult{
              name, premise, holds, holds == false ? verdict_detail(both) : ""});
          if (holds == false && *v.conclusion_holds) {
            v.conclusion_holds = false;
            v.witness          = TheoremWitness{
                name, verdict_detail(both), std::nullopt, both};
          }
        }
        break;
      }
      case TheoremId::absorb: {
        auto const& A = b.sets[0];
        conjunction(v,
                    {equation_claim("d o A = A", {{compose(G, d, A), A}}),
                     equation_claim("A o d = A", {{compose(G, A, d), A}})});
        break;
      }
      case TheoremId::delta_idem:
        conjunction(v, {equation_claim("d o d = d", {{compose(G, d, d), d}})});
        break;
      case TheoremId::quasi_eq: {
        auto const& A = b.sets[0];
        biconditional(
            v,
            predicate_claim("IF quasi", is_if(G, A, IfsKind::quasi)),
            equation_claim("(A o d) n (d o A) = A",
                          {{intersect(compose(G, A, d), compose(G, d, A)), A}}));
        break;
      }
      case TheoremId::quasi_ts: {
        auto const& A = b.sets[0];
        biconditional(v,
                      predicate_claim("IF quasi", is_if(G, A, IfsKind::quasi)),
                      predicate_claim("IF two-sided",
                                     is_if(G, A, IfsKind::two_sided)));
        break;
      }
      case TheoremId::int_ts: {
        auto const& A = b.sets[0];
        biconditional(v,
                      predicate_claim("IF interior", is_if(G, A, IfsKind::interior)),
                      predicate_claim("IF two-sided",
                                     is_if(G, A, IfsKind::two_sided)));
        break;
      }
      case TheoremId::grand_eq: verify_grand(v, b); break;
      case TheoremId::prod_cap: {
        auto const& A = b.sets[0];
        auto const& B = b.sets[1];
        conjunction(v,
                    {equation_claim("A o B = A n B",
                                   {{compose(G, A, B), intersect(A, B)}})});
        break;
      }
      case TheoremId::ts_idem: {
        auto const& A = b.sets[0];
        conjunction(v, {equation_claim("A o A = A", {{compose(G, A, A), A}})});
        break;
      }
      default: break;
    }
    return v;
  }

  TheoremVerdict semilattice_check(GammaGroupoid const&    G,
                                   std::vector<Ifs> const& ideals,
                                   VerifyOptions           options) {
    TheoremVerdict v{TheoremId::semilattice,
                     {},
                     false,
                     std::nullopt,
                     {},
                     std::nullopt,
                     std::nullopt};
    for (auto const& A : ideals) {
      if (A.size() != G.size()) {
        throw Error(ErrorCode::size_mismatch,
                    "fuzzy set does not match the carrier size");
      }
    }
    add_structural(v, G, theorem_info(TheoremId::semilattice));
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      auto ts = is_if(G, ideals[k], IfsKind::two_sided);
      add_role(v,
               "member " + std::to_string(k + 1) + " is an IF two-sided ideal",
               ts.holds,
               verdict_detail(ts),
               options);
    }
    v.hypotheses_hold = all_hold(v.hypotheses);
    if (!v.hypotheses_hold) {
      return v;
    }

    auto const d = delta(G.size());
    // Working set: the members, delta, and every product reached from them.
    std::vector<Ifs> work;
    auto             add_unique = [&work](Ifs const& A) {
      if (std::find(work.begin(), work.end(), A) == work.end()) {
        work.push_back(A);
        return true;
      }
      return false;
    };
    for (auto const& A : ideals) {
      add_unique(A);
    }
    add_unique(d);

    constexpr std::size_t closure_cap = 256;
    Claim                  closure{"closure", true, std::nullopt, std::nullopt};
    std::string           closure_detail;
    bool                  grew = true;
    while (grew && closure.value) {
      grew                    = false;
      std::size_t const count = work.size();
      for (std::size_t i = 0; i < count && closure.value; ++i) {
        for (std::size_t j = 0; j < count && closure.value; ++j) {
          auto P = compose(G, work[i], work[j]);
          if (std::find(work.begin(), work.end(), P) != work.end()) {
            continue;
          }
          auto ts = is_if(G, P, IfsKind::two_sided);
          if (!ts.holds) {
            closure.value     = false;
            closure.predicate = ts;
            break;
          }
          work.push_back(std::move(P));
          grew = true;
          if (work.size() > closure_cap) {
            closure.value = false;
          }
        }
      }
    }

    Claim commutative{"commutativity", true, std::nullopt, std::nullopt};
    Claim associative{"associativity", true, std::nullopt, std::nullopt};
    Claim idempotent{"idempotence", true, std::nullopt, std::nullopt};
    Claim identity{"delta identity", true, std::nullopt, std::nullopt};
    if (closure.value) {
      std::size_t const m = work.size();
      std::vector<Ifs>  products;
      products.reserve(m * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          products.push_back(compose(G, work[i], work[j]));
        }
      }
      auto prod = [&](std::size_t i, std::size_t j) -> Ifs const& {
        return products[i * m + j];
      };
      auto index_of = [&](Ifs const& A) {
        return static_cast<std::size_t>(
            std::find(work.begin(), work.end(), A) - work.begin());
      };
      for (std::size_t i = 0; i < m && commutative.value; ++i) {
        for (std::size_t j = i + 1; j < m && commutative.value; ++j) {
          if (auto diff = first_difference(prod(i, j), prod(j, i))) {
            commutative.value      = false;
            commutative.difference = diff;
          }
        }
      }
      for (std::size_t i = 0; i < m && associative.value; ++i) {
        for (std::size_t j = 0; j < m && associative.value; ++j) {
          // Closure guarantees both inner products are members.
          std::size_t const ij = index_of(prod(i, j));
          for (std::size_t k = 0; k < m && associative.value; ++k) {
            std::size_t const jk = index_of(prod(j, k));
            if (auto diff = first_difference(prod(ij, k), prod(i, jk))) {
              associative.value      = false;
              associative.difference = diff;
            }
          }
        }
      }
      for (std::size_t i = 0; i < m && idempotent.value; ++i) {
        if (auto diff = first_difference(prod(i, i), work[i])) {
          idempotent.value      = false;
          idempotent.difference = diff;
        }
      }
      std::size_t const di = index_of(d);
      for (std::size_t i = 0; i < m && identity.value; ++i) {
        auto diff = first_difference(prod(di, i), work[i]);
        if (!diff) {
          diff = first_difference(prod(i, di), work[i]);
        }
        if (diff) {
          identity.value      = false;
          identity.difference = diff;
        }
      }
    }
    conjunction(v, {closure, commutative, associative, idempotent, identity});
    if (closure.value) {
      v.clauses.front().detail
          = "closed set of " + std::to_string(work.size()) + " members";
    } else if (!closure.predicate) {
      v.clauses.front().detail = "closure exceeded "
                                 + std::to_string(closure_cap) + " members";
    }
    return v;
  }

}  // namespace gammalab
