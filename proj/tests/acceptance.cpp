// Acceptance run: one PASS/FAIL line per criterion. All tolerances are
// exact (zero violations, exact rational equality).
//
// Exit status is 0 when every criterion passes or the only failures are
// entries of `documented_divergences` failing in exactly the documented
// way; those lines still print FAIL.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gammalab/carrier.hpp"
#include "gammalab/crisp.hpp"
#include "gammalab/fixtures.hpp"
#include "gammalab/ifs.hpp"
#include "gammalab/ifs_ideals.hpp"
#include "gammalab/theorem_lab.hpp"

using namespace gammalab;

namespace {

  struct Outcome {
    bool        pass;
    std::string detail;
    // Set when a failure is the documented one and nothing else broke.
    bool        documented = false;
  };

  std::string one_based(std::vector<Element> const& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      s += (i ? "," : "") + std::to_string(xs[i].index + 1);
    }
    return s + "}";
  }

  LawWitness eval(GammaGroupoid const&              G,
                  Law                               law,
                  std::vector<std::uint32_t> const& xs,
                  std::vector<std::uint32_t> const& ops) {
    std::vector<Element>    e;
    std::vector<GammaIndex> g;
    for (auto x : xs) {
      e.push_back(Element{x - 1});
    }
    for (auto o : ops) {
      g.push_back(GammaIndex{o - 1});
    }
    return evaluate_law(G, law, e, g);
  }

  bool shows(LawWitness const& w, std::uint32_t lhs, std::uint32_t rhs) {
    return w.violated() && w.lhs.index + 1 == lhs && w.rhs && w.rhs->index + 1 == rhs;
  }

  std::uint64_t seed_of(std::uint64_t stream, std::uint64_t i) {
    return stream * 0x100000000ULL + i;
  }

  std::vector<GammaGroupoid> enumerated_up_to_three(std::vector<Law> const& laws) {
    std::vector<GammaGroupoid> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      for_each_groupoid(n, 1, laws, [&](GammaGroupoid const& G) {
        out.push_back(G);
        return true;
      });
    }
    return out;
  }

  Outcome fixture_laws() {
    auto const G  = groupoid_fixture("F1");
    bool const li = check_law(G, Law::left_invertive).holds;
    bool const md = check_law(G, Law::medial).holds;
    bool const cm = !check_law(G, Law::commutative).holds;
    bool const as = !check_law(G, Law::associative).holds;
    bool const wc = shows(eval(G, Law::commutative, {2, 3}, {1}), 5, 8);
    bool const wa = shows(eval(G, Law::associative, {4, 2, 3}, {1, 1}), 1, 7);
    std::ostringstream d;
    d << "LI=" << li << " MEDIAL=" << md << " non-commutative=" << cm
      << " non-associative=" << as << " 2.3=5!=8=3.2:" << wc << " (4.2).3=1!=7:" << wa;
    return {li && md && cm && as && wc && wa, d.str()};
  }

  Outcome power_laws() {
    auto const P   = derive_power_gamma(groupoid_fixture("F1"));
    bool const fix = P == groupoid_fixture("F1-power");
    bool const li  = check_law(P, Law::left_invertive).holds;
    bool const md  = check_law(P, Law::medial).holds;
    bool const bd  = check_law(P, Law::idempotent_band).holds;
    bool const w   = shows(eval(P, Law::commutative, {9, 1}, {1}), 4, 5);
    std::ostringstream d;
    d << "gamma=" << P.gamma_count() << " LI=" << li << " MEDIAL=" << md << " BAND=" << bd
      << " 9a1=4!=5=1a9:" << w << " fixture=" << fix;
    return {P.gamma_count() == 2 && li && md && bd && w && fix, d.str()};
  }

  Outcome intra() {
    auto const F2  = groupoid_fixture("F2");
    auto const F3  = groupoid_fixture("F3");
    auto const r2  = intra_regularity(F2);
    auto const r3  = intra_regularity(F3);
    bool all_evaluate = r2.witnesses.size() == F2.size();
    for (auto const& [a, w] : r2.witnesses) {
      all_evaluate = all_evaluate && w.evaluate(F2) == a;
    }
    bool const three = r2.witnesses.count(Element{2}) && r2.witnesses.at(Element{2}).evaluate(F2) == Element{2};
    bool const f3 = !r3.regular
                    && std::find(r3.failures.begin(), r3.failures.end(), Element{2}) != r3.failures.end();
    std::ostringstream d;
    d << "F2 regular=" << r2.regular << " witnesses re-evaluate=" << all_evaluate
      << " a=3:" << three << "; F3 regular=" << r3.regular << " failures=" << one_based(r3.failures);
    return {r2.regular && all_evaluate && three && f3, d.str()};
  }

  Outcome level_cut_fixture() {
    auto const F2  = groupoid_fixture("F2");
    auto const A   = ifs_fixture("A-cut");
    auto const cut = level_cut(A, Grade(2, 5));
    bool const set = cut == CrispSubset::of(5, {Element{0}, Element{1}});
    bool const left  = is_crisp(F2, cut, CrispKind::left_ideal).holds;
    bool const right = is_crisp(F2, cut, CrispKind::right_ideal).holds;
    bool const bi    = is_crisp(F2, cut, CrispKind::bi).holds;
    auto const v     = is_if(F2, A, IfsKind::right);
    bool const wit   = !v.holds && v.witness
                     && v.witness->elements == std::vector<Element>{Element{1}, Element{0}};
    std::ostringstream d;
    d << "cut=" << one_based(cut.members()) << " LEFT=" << left << " RIGHT=" << right
      << " BI=" << bi << " A-cut IF_RIGHT fails at (2,1)=" << wit;
    return {set && left && right && bi && wit, d.str()};
  }

  // Constraint "grade of target is at least as good as the worst source"
  // for each instance of the defining inequality of `kind`.
  struct Constraint {
    std::size_t              target;
    std::vector<std::size_t> sources;
  };

  std::vector<Constraint> constraints(GammaGroupoid const& G, IfsKind kind) {
    std::vector<Constraint> out;
    auto const n = G.size(), g = G.gamma_count();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t a = 0; a < g; ++a) {
          auto const r = G.at(a, x, y);
          if (kind == IfsKind::right) out.push_back({r, {x}});
          if (kind == IfsKind::left) out.push_back({r, {y}});
          if (kind == IfsKind::bi) out.push_back({r, {x, y}});
          if (kind == IfsKind::bi || kind == IfsKind::generalized_bi)
            for (std::size_t m = 0; m < n; ++m)
              for (std::size_t b = 0; b < g; ++b)
                out.push_back({G.at(b, G.at(a, x, m), y), {x, y}});
        }
    return out;
  }

  // Smallest raise of mu, then lowering of nu (never past 1 - mu), that
  // satisfies every constraint. Grades stay on the original grid.
  Ifs lift(std::vector<Constraint> const& cs, Ifs const& A) {
    std::vector<Grade> mu(A.mu().begin(), A.mu().end());
    std::vector<Grade> nu(A.nu().begin(), A.nu().end());
    for (bool changed = true; changed;) {
      changed = false;
      for (auto const& c : cs) {
        Grade low = Grade::one();
        for (auto s : c.sources) low = std::min(low, mu[s]);
        if (mu[c.target] < low) {
          mu[c.target] = low;
          changed      = true;
        }
      }
    }
    for (std::size_t x = 0; x < nu.size(); ++x) {
      nu[x] = std::min(nu[x], Grade(mu[x].denominator() - mu[x].numerator(), mu[x].denominator()));
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (auto const& c : cs) {
        Grade high = Grade::zero();
        for (auto s : c.sources) high = std::max(high, nu[s]);
        if (nu[c.target] > high) {
          nu[c.target] = high;
          changed      = true;
        }
      }
    }
    return make_ifs(mu.size(), mu, nu);
  }

  // Uniform samples alone almost never satisfy a premise, so each kind
  // also gets the same number of samples lifted into that kind.
  Outcome level_cut_property() {
    auto const G = groupoid_fixture("F2");
    constexpr std::uint64_t samples = 1000;
    struct Pair {
      IfsKind   fuzzy;
      CrispKind crisp;
    };
    Pair const pairs[] = {{IfsKind::right, CrispKind::right_ideal},
                          {IfsKind::left, CrispKind::left_ideal},
                          {IfsKind::bi, CrispKind::bi},
                          {IfsKind::generalized_bi, CrispKind::generalized_bi}};
    auto const grid = alpha_grid(10);
    std::size_t premises = 0, violations = 0, lift_failures = 0;
    auto check = [&](Ifs const& A, Pair const& p) {
      if (!is_if(G, A, p.fuzzy).holds) {
        return false;
      }
      ++premises;
      for (auto const& alpha : grid) {
        if (!is_crisp(G, level_cut(A, alpha), p.crisp).holds) {
          ++violations;
        }
      }
      return true;
    };
    for (auto const& p : pairs) {
      auto const cs = constraints(G, p.fuzzy);
      for (std::uint64_t i = 0; i < samples; ++i) {
        auto const A = random_ifs(5, 10, seed_of(5, i));
        check(A, p);
        lift_failures += check(lift(cs, A), p) ? 0 : 1;
      }
    }
    std::ostringstream d;
    d << samples << " uniform + " << samples << " lifted IFS per kind x " << grid.size()
      << " levels, " << premises << " premise hits, violations=" << violations;
    return {violations == 0 && lift_failures == 0 && premises >= 4 * samples, d.str()};
  }

  Outcome dual_path() {
    IfsKind const kinds[] = {IfsKind::subgroupoid, IfsKind::left, IfsKind::right};
    std::size_t checks = 0, disagreements = 0;
    auto run = [&](GammaGroupoid const& G, Ifs const& A) {
      for (auto kind : kinds) {
        ++checks;
        if (is_if(G, A, kind).holds != characterize_by_composition(G, A, kind).holds) {
          ++disagreements;
        }
      }
    };
    auto const F2 = groupoid_fixture("F2");
    constexpr std::uint64_t samples = 10000;
    for (std::uint64_t i = 0; i < samples; ++i) {
      run(F2, random_ifs(5, 4, seed_of(6, i)));
    }
    auto const pool = enumerated_up_to_three({Law::left_invertive});
    std::uint64_t k = 0;
    for (auto const& G : pool) {
      for (int j = 0; j < 10; ++j) {
        run(G, random_ifs(G.size(), 4, seed_of(60, k++)));
      }
    }
    std::ostringstream d;
    d << samples << " IFS on F2 + " << pool.size() << " enumerated groupoids x 10, " << checks
      << " checks, disagreements=" << disagreements;
    return {disagreements == 0, d.str()};
  }

  Outcome grand_equivalence() {
    auto const F2     = groupoid_fixture("F2");
    bool const ag     = check_law(F2, Law::ag_star_star).holds;
    bool const regular = is_intra_regular(F2);
    std::vector<GammaGroupoid> carriers;
    if (ag && regular) {
      carriers.push_back(F2);
    } else {
      carriers = groupoid_pool(TheoremId::grand_eq, 3, 1, 1, 100000);
    }
    constexpr std::uint64_t samples = 10000;
    std::size_t disagreements = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto const& G = carriers[i % carriers.size()];
      auto const  A = random_ifs(G.size(), 4, seed_of(7, i));
      std::set<bool> values;
      for (auto kind : {IfsKind::left, IfsKind::right, IfsKind::two_sided, IfsKind::bi,
                        IfsKind::generalized_bi, IfsKind::interior, IfsKind::quasi}) {
        values.insert(is_if(G, A, kind).holds);
      }
      auto const d = delta(G.size());
      values.insert(equals(compose(G, A, d), A) && equals(compose(G, d, A), A));
      if (values.size() != 1 || verify(TheoremId::grand_eq, {G, {A}, {}}).is_counterexample()) {
        ++disagreements;
      }
    }
    TheoremId const others[] = {TheoremId::quasi_ts, TheoremId::int_ts, TheoremId::lr_iff,
                                TheoremId::quasi_eq, TheoremId::bi_eq,  TheoremId::int_eq,
                                TheoremId::absorb,   TheoremId::ts_idem};
    std::ostringstream d;
    d << "F2 AG**=" << ag << " intra-regular=" << regular << "; GRAND_EQ disagreements="
      << disagreements;
    bool ok = disagreements == 0;
    for (auto id : others) {
      HuntConfig config;
      config.groupoids   = carriers;
      config.denominator = 4;
      config.budget      = samples;
      config.seed        = 7;
      auto const r       = hunt(id, config);
      d << " " << theorem_info(id).name << "=" << (r.counterexample ? "violated" : "0");
      ok = ok && !r.counterexample && r.tried == samples;
    }
    return {ok, d.str()};
  }

  Outcome product_cap() {
    // Qualifying instances: every enumerated intra-regular AG** carrier
    // with n <= 3, plus F2.
    auto pool = groupoid_pool(TheoremId::prod_cap, 3, 1, 1, 100000);
    pool.push_back(groupoid_fixture("F2"));
    std::size_t pairs = 0, violations = 0;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      auto const& G = pool[k];
      std::vector<Ifs> ideals;
      for (std::uint64_t i = 0; i < 4000 && ideals.size() < 12; ++i) {
        auto A = random_ifs(G.size(), 2, seed_of(8, k * 4000 + i));
        if (is_if(G, A, IfsKind::two_sided).holds) {
          ideals.push_back(std::move(A));
        }
      }
      ideals.push_back(delta(G.size()));
      ideals.push_back(constant_ifs(G.size(), Grade(1, 3), Grade(1, 2)));
      for (auto const& A : ideals) {
        for (auto const& B : ideals) {
          auto const v = verify(TheoremId::prod_cap, {G, {A, B}, {}});
          if (!v.hypotheses_hold) {
            continue;
          }
          ++pairs;
          violations += v.is_counterexample() ? 1 : 0;
        }
      }
    }
    auto const F3       = groupoid_fixture("F3");
    bool const f3_fails = !is_intra_regular(F3);
    auto const A        = ifs_fixture("A-fgh");
    auto const B        = ifs_fixture("B-fgh");
    bool const equality = equals(compose(F3, A, B), intersect(A, B));
    std::ostringstream d;
    d << pool.size() << " carriers, " << pairs << " two-sided pairs, violations=" << violations
      << "; F3 intra-regular=" << !f3_fails << " A-fgh o B-fgh = A-fgh n B-fgh: " << equality;
    bool const forward = violations == 0 && pairs > 0;
    bool const pass    = forward && f3_fails && equality;
    return {pass, d.str(), forward && f3_fails && !equality};
  }

  Outcome hunter_demo() {
    auto const F2 = groupoid_fixture("F2");
    HuntConfig config;
    config.groupoids        = {F2};
    config.denominator      = 1;
    config.budget           = 10000;
    config.relax_hypotheses = true;
    auto const relaxed      = hunt(TheoremId::absorb, config);
    config.relax_hypotheses = false;
    auto const enforced     = hunt(TheoremId::absorb, config);

    std::vector<Grade> mu(5, Grade::zero()), nu(5, Grade::zero());
    mu[4] = Grade::one();
    nu[0] = Grade::one();
    Ifs const  A        = make_ifs(5, mu, nu);
    bool const directed = !equals(compose(F2, delta(5), A), A);

    std::ostringstream d;
    d << "relaxed: " << (relaxed.counterexample
                             ? "counterexample at sample " + std::to_string(relaxed.counterexample->sample)
                             : std::string("none"))
      << "; directed d o A != A: " << directed << "; enforced: tried " << enforced.tried
      << ", qualified " << enforced.qualified << ", counterexamples "
      << (enforced.counterexample ? 1 : 0);
    bool const pass = relaxed.counterexample && directed && !enforced.counterexample
                      && enforced.tried == 10000;
    return {pass, d.str()};
  }

  std::size_t brute_count(std::size_t n) {
    std::size_t const cells = n * n;
    std::vector<std::uint32_t> t(cells, 0);
    std::size_t count = 0;
    while (true) {
      bool li = true;
      for (std::size_t x = 0; x < n && li; ++x)
        for (std::size_t y = 0; y < n && li; ++y)
          for (std::size_t z = 0; z < n && li; ++z)
            li = t[t[x * n + y] * n + z] == t[t[z * n + y] * n + x];
      count += li ? 1 : 0;
      std::size_t i = 0;
      while (i < cells && ++t[i] == n) {
        t[i++] = 0;
      }
      if (i == cells) {
        return count;
      }
    }
  }

  Outcome enumeration() {
    std::ostringstream d;
    bool ok = true;
    for (std::size_t n : {2U, 3U}) {
      std::size_t emitted = 0, medial = 0;
      for_each_groupoid(n, 1, {Law::left_invertive}, [&](GammaGroupoid const& G) {
        ++emitted;
        medial += check_law(G, Law::medial).holds ? 1 : 0;
        return true;
      });
      auto const expected = brute_count(n);
      d << "n=" << n << ": " << emitted << " vs brute " << expected << ", medial " << medial << "; ";
      ok = ok && emitted == expected && medial == emitted;
    }
    return {ok, d.str()};
  }

  Outcome semilattice() {
    auto const G = groupoid_fixture("F2");
    std::vector<Ifs> members{delta(5), constant_ifs(5, Grade(1, 2), Grade(1, 2)),
                             constant_ifs(5, Grade(1, 5), Grade(3, 5)),
                             constant_ifs(5, Grade::one(), Grade::zero())};
    std::size_t sampled = 0;
    for (std::uint64_t i = 0; i < 5000 && sampled < 4; ++i) {
      auto A = random_ifs(5, 5, seed_of(3, i));
      if (is_if(G, A, IfsKind::two_sided).holds) {
        members.push_back(std::move(A));
        ++sampled;
      }
    }
    auto const v = semilattice_check(G, members);
    std::ostringstream d;
    d << members.size() << " members (" << sampled << " sampled); ";
    for (auto const& c : v.clauses) {
      d << c.name << "=" << (c.holds == true ? "ok" : "violated") << " ";
    }
    return {v.hypotheses_hold && v.conclusion_holds == true && sampled > 0, d.str()};
  }

  Outcome errata() {
    auto const v = is_if(groupoid_fixture("F2"), ifs_fixture("A-ex"), IfsKind::left);
    bool ok = !v.holds && v.witness;
    if (ok) {
      auto const& w = *v.witness;
      ok = w.elements == std::vector<Element>{Element{0}, Element{2}}
           && w.gammas == std::vector<GammaIndex>{GammaIndex{0}} && w.component == Component::nu
           && w.observed == Grade(3, 10) && w.bound == Grade(1, 5);
    }
    return {ok, ok ? "A-ex fails IF_LEFT at (1,a,3): nu 3/10 > 1/5" : "witness differs"};
  }

}  // namespace

int main() {
  std::function<Outcome()> const criteria[] = {
      fixture_laws, power_laws,  intra,       level_cut_fixture, level_cut_property,
      dual_path,    grand_equivalence, product_cap, hunter_demo, enumeration,
      semilattice,  errata};
  std::set<int> const documented_divergences = {8};

  bool undocumented_failure = false;
  int  index                = 0;
  for (auto const& criterion : criteria) {
    ++index;
    auto const start   = std::chrono::steady_clock::now();
    Outcome const o    = criterion();
    auto const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const known   = !o.pass && o.documented && documented_divergences.count(index);
    std::printf("criterion %2d: %s  %s (%.2fs)%s\n", index, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds, known ? " [documented divergence]" : "");
    undocumented_failure = undocumented_failure || (!o.pass && !known);
  }
  return undocumented_failure ? 1 : 0;
}
