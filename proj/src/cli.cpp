#include "gammalab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "gammalab/error.hpp"
#include "gammalab/fixtures.hpp"
#include "gammalab/io.hpp"
#include "gammalab/report.hpp"
#include "gammalab/theorem_lab.hpp"

namespace gammalab {

  namespace {
    constexpr int exit_ok      = 0;
    constexpr int exit_fails   = 1;
    constexpr int exit_invalid = 2;

    // A path that exists wins; otherwise a bundled fixture name, with or
    // without a ".json" suffix.
    std::string fixture_key(std::string const& arg) {
      auto name = std::filesystem::path(arg).filename().string();
      if (name.ends_with(".json")) {
        name.resize(name.size() - 5);
      }
      return name;
    }

    GammaGroupoid resolve_groupoid(std::string const& arg) {
      if (std::filesystem::is_regular_file(arg)) {
        return groupoid_from_json(read_json_file(arg));
      }
      return groupoid_fixture(fixture_key(arg));
    }

    Ifs resolve_ifs(std::string const& arg) {
      if (std::filesystem::is_regular_file(arg)) {
        return ifs_from_json(read_json_file(arg));
      }
      return ifs_fixture(fixture_key(arg));
    }

    template <typename T>
    std::vector<T> split_list(std::string const&                    text,
                              std::function<T(std::string const&)>  convert) {
      std::vector<T>     out;
      std::stringstream  ss(text);
      std::string        item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
          out.push_back(convert(item));
        }
      }
      return out;
    }

    Law law_arg(std::string const& name) {
      auto law = law_from_name(name);
      if (!law) {
        throw Error(ErrorCode::parse_error, "unknown law '" + name + "'");
      }
      return *law;
    }

    void check_size(GammaGroupoid const& G, Ifs const& A) {
      if (A.size() != G.size()) {
        throw Error(ErrorCode::size_mismatch,
                    "fuzzy set over " + std::to_string(A.size())
                        + " elements used with a carrier of size "
                        + std::to_string(G.size()));
      }
    }

    struct Context {
      std::ostream& out;
      bool          json = false;

      void emit(Json const& doc) const {
        out << doc.dump(2) << '\n';
      }
    };

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    void print_theorem(std::ostream& out, TheoremVerdict const& v) {
      auto const& info = theorem_info(v.id);
      out << info.name << ": " << info.statement << '\n';
      for (auto const& h : v.hypotheses) {
        out << "  hypothesis " << h.name << ": " << yes_no(h.holds)
            << (h.relaxed ? " (relaxed)" : "");
        if (!h.holds && !h.detail.empty()) {
          out << "  [" << h.detail << ']';
        }
        out << '\n';
      }
      if (!v.hypotheses_hold) {
        out << "  hypotheses fail; conclusion not evaluated\n";
      }
      for (auto const& c : v.clauses) {
        out << "  " << c.name << ": "
            << (c.holds ? (*c.holds ? "holds" : "FAILS") : "premise false");
        if (!c.detail.empty()) {
          out << "  [" << c.detail << ']';
        }
        out << '\n';
      }
      if (v.conclusion_holds) {
        out << "  conclusion: " << (*v.conclusion_holds ? "holds" : "FAILS") << '\n';
      }
      if (v.witness) {
        out << "  witness (" << v.witness->direction << "): " << v.witness->detail
            << '\n';
      }
      if (v.ungated_statement) {
        out << "  equation regardless of hypotheses: "
            << (*v.ungated_statement ? "holds" : "fails") << '\n';
      }
    }

    void print_groupoid(std::ostream& out, GammaGroupoid const& G) {
      for (std::size_t op = 0; op < G.gamma_count(); ++op) {
        if (G.gamma_count() > 1) {
          out << "g" << op + 1 << ":\n";
        }
        for (std::uint32_t x = 0; x < G.size(); ++x) {
          for (std::uint32_t y = 0; y < G.size(); ++y) {
            out << (y ? " " : "") << G.at(op, x, y) + 1;
          }
          out << '\n';
        }
      }
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Explore Gamma-AG-groupoids and their intuitionistic fuzzy ideals",
                 "gammalab"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out};
    app.add_flag("--json", ctx.json, "Print machine-readable documents");

    // Each handler returns the exit code.
    std::function<int()> handler;

    // check-laws
    auto*                    laws_cmd = app.add_subcommand("check-laws", "Check groupoid laws");
    std::string              laws_groupoid;
    std::string              laws_list;
    laws_cmd->add_option("groupoid", laws_groupoid, "Groupoid file or fixture")->required();
    laws_cmd->add_option("--laws", laws_list, "Comma-separated laws (default: all)");
    laws_cmd->callback([&] {
      handler = [&] {
        auto const G    = resolve_groupoid(laws_groupoid);
        auto       laws = laws_list.empty()
                              ? std::vector<Law>(std::begin(all_laws), std::end(all_laws))
                              : split_list<Law>(laws_list, law_arg);
        bool       all  = true;
        Json       docs = Json::array();
        for (auto law : laws) {
          auto r = check_law(G, law);
          all    = all && r.holds;
          if (ctx.json) {
            docs.push_back(to_json(r));
          } else {
            out << std::left << std::setw(16) << law_name(law)
                << (r.holds ? "holds" : "fails at " + describe(*r.witness)) << '\n';
          }
        }
        if (ctx.json) {
          ctx.emit(Json{{"type", "laws"}, {"results", docs}});
        }
        return all ? exit_ok : exit_fails;
      };
    });

    // intra
    auto*       intra_cmd = app.add_subcommand("intra", "Check intra-regularity");
    std::string intra_groupoid;
    intra_cmd->add_option("groupoid", intra_groupoid, "Groupoid file or fixture")->required();
    intra_cmd->callback([&] {
      handler = [&] {
        auto const r = intra_regularity(resolve_groupoid(intra_groupoid));
        if (ctx.json) {
          ctx.emit(to_json(r));
        } else {
          out << "intra-regular: " << yes_no(r.regular) << '\n';
          for (auto const& [a, w] : r.witnesses) {
            out << "  " << describe(w) << '\n';
          }
          if (!r.failures.empty()) {
            out << "  no witness for " << describe(r.failures) << '\n';
          }
        }
        return r.regular ? exit_ok : exit_fails;
      };
    });

    // crisp-check
    auto*       crisp_cmd = app.add_subcommand("crisp-check", "Check a crisp subset");
    std::string crisp_kind, crisp_groupoid, crisp_set;
    crisp_cmd->add_option("--kind", crisp_kind, "e.g. left-ideal, bi, quasi")->required();
    crisp_cmd->add_option("groupoid", crisp_groupoid, "Groupoid file or fixture")->required();
    crisp_cmd->add_option("--set", crisp_set, "Comma-separated 1-based elements")->required();
    crisp_cmd->callback([&] {
      handler = [&] {
        auto kind = crisp_kind_from_name(crisp_kind);
        if (!kind) {
          throw Error(ErrorCode::parse_error, "unknown crisp kind '" + crisp_kind + "'");
        }
        auto const G     = resolve_groupoid(crisp_groupoid);
        auto const elems = split_list<Element>(crisp_set, [](std::string const& item) {
          std::size_t pos = 0;
          long long   v   = 0;
          try {
            v = std::stoll(item, &pos);
          } catch (std::exception const&) {
            pos = 0;
          }
          if (pos != item.size() || v < 1) {
            throw Error(ErrorCode::parse_error, "not an element: '" + item + "'");
          }
          return Element{static_cast<std::uint32_t>(v - 1)};
        });
        auto const set = CrispSubset::of(G.size(), elems);
        auto const v   = is_crisp(G, set, *kind);
        if (ctx.json) {
          ctx.emit(to_json(v, set));
        } else {
          out << crisp_kind_name(v.kind) << ' ' << describe(set) << ": "
              << (v.holds ? "holds" : "fails") << '\n';
          if (v.witness) {
            out << "  witness " << describe(*v.witness) << '\n';
          }
        }
        return v.holds ? exit_ok : exit_fails;
      };
    });

    // ifs-check
    auto*       ifs_cmd = app.add_subcommand("ifs-check", "Check an IF ideal notion");
    std::string ifs_kind, ifs_groupoid, ifs_set;
    ifs_cmd->add_option("--kind", ifs_kind, "e.g. right-ideal, bi, quasi")->required();
    ifs_cmd->add_option("groupoid", ifs_groupoid, "Groupoid file or fixture")->required();
    ifs_cmd->add_option("ifs", ifs_set, "IFS file or fixture")->required();
    ifs_cmd->callback([&] {
      handler = [&] {
        auto kind = ifs_kind_from_name(ifs_kind);
        if (!kind) {
          throw Error(ErrorCode::parse_error, "unknown IF kind '" + ifs_kind + "'");
        }
        auto const G = resolve_groupoid(ifs_groupoid);
        auto const A = resolve_ifs(ifs_set);
        auto const v = is_if(G, A, *kind);
        if (ctx.json) {
          ctx.emit(to_json(v));
        } else {
          out << ifs_kind_name(v.kind) << ": " << (v.holds ? "holds" : "fails") << '\n';
          if (v.witness) {
            out << "  witness " << describe(*v.witness) << '\n';
          }
        }
        return v.holds ? exit_ok : exit_fails;
      };
    });

    // compose
    auto*       compose_cmd = app.add_subcommand("compose", "Compose two IFS");
    std::string compose_groupoid, compose_a, compose_b;
    compose_cmd->add_option("groupoid", compose_groupoid, "Groupoid file or fixture")->required();
    compose_cmd->add_option("A", compose_a, "Left IFS (or 'delta')")->required();
    compose_cmd->add_option("B", compose_b, "Right IFS (or 'delta')")->required();
    compose_cmd->callback([&] {
      handler = [&] {
        auto const G   = resolve_groupoid(compose_groupoid);
        auto       get = [&G](std::string const& arg) {
          return arg == "delta" ? delta(G.size()) : resolve_ifs(arg);
        };
        auto const A = get(compose_a);
        auto const B = get(compose_b);
        check_size(G, A);
        check_size(G, B);
        auto const C = compose(G, A, B);
        if (ctx.json) {
          ctx.emit(ifs_to_json(C));
        } else {
          out << describe(C) << '\n';
        }
        return exit_ok;
      };
    });

    // levelcut
    auto*       cut_cmd = app.add_subcommand("levelcut", "Level cut of an IFS");
    std::string cut_ifs, cut_alpha;
    cut_cmd->add_option("ifs", cut_ifs, "IFS file or fixture")->required();
    cut_cmd->add_option("--alpha", cut_alpha, "Level in (0, 1], e.g. 2/5")->required();
    cut_cmd->callback([&] {
      handler = [&] {
        auto const A     = resolve_ifs(cut_ifs);
        auto const alpha = parse_level(cut_alpha);
        auto const cut   = level_cut(A, alpha);
        if (ctx.json) {
          Json doc;
          doc["type"]  = "level_cut";
          doc["alpha"] = alpha.to_string();
          Json set     = Json::array();
          for (auto x : cut.members()) {
            set.push_back(x.index + 1);
          }
          doc["set"] = std::move(set);
          ctx.emit(doc);
        } else {
          out << describe(cut) << '\n';
        }
        return exit_ok;
      };
    });

    // theorem
    auto* theorem_cmd = app.add_subcommand("theorem", "Theorem catalog");
    theorem_cmd->require_subcommand(1);

    auto* list_cmd = theorem_cmd->add_subcommand("list", "List the catalog");
    list_cmd->callback([&] {
      handler = [&] {
        if (ctx.json) {
          Json docs = Json::array();
          for (auto const& info : theorem_catalog()) {
            docs.push_back(Json{{"id", info.name},
                                {"slug", info.slug},
                                {"intra_regular", info.needs_intra_regular},
                                {"ag_star_star", info.needs_ag_star_star},
                                {"statement", info.statement}});
          }
          ctx.emit(docs);
        } else {
          for (auto const& info : theorem_catalog()) {
            out << std::left << std::setw(12) << info.slug << info.statement << '\n';
          }
        }
        return exit_ok;
      };
    });

    auto*                    verify_cmd = theorem_cmd->add_subcommand("verify", "Verify one instance");
    std::string              verify_id;
    std::vector<std::string> verify_inputs;
    bool                     verify_relax = false;
    std::uint64_t            verify_grid  = 10;
    verify_cmd->add_option("--id", verify_id, "Theorem name or slug")->required();
    verify_cmd->add_option("inputs", verify_inputs, "Groupoid, then IFS files or fixtures")
        ->required();
    verify_cmd->add_flag("--relax-hypotheses", verify_relax,
                         "Ignore hypotheses on the input sets");
    verify_cmd->add_option("--alpha-denominator", verify_grid,
                           "Level grid k/D for levelcut")
        ->check(CLI::PositiveNumber);
    verify_cmd->callback([&] {
      handler = [&] {
        auto id = theorem_from_name(verify_id);
        if (!id) {
          throw Error(ErrorCode::parse_error, "unknown theorem '" + verify_id + "'");
        }
        InstanceBundle bundle{resolve_groupoid(verify_inputs.front()), {}, alpha_grid(verify_grid)};
        for (std::size_t i = 1; i < verify_inputs.size(); ++i) {
          bundle.sets.push_back(resolve_ifs(verify_inputs[i]));
        }
        auto const v = verify(*id, bundle, {verify_relax});
        if (ctx.json) {
          ctx.emit(to_json(v));
        } else {
          print_theorem(out, v);
        }
        return v.is_counterexample() ? exit_fails : exit_ok;
      };
    });

    auto*                    hunt_cmd = theorem_cmd->add_subcommand("hunt", "Search for counterexamples");
    std::string              hunt_id;
    HuntConfig               config;
    std::vector<std::string> hunt_groupoids;
    hunt_cmd->add_option("--id", hunt_id, "Theorem name or slug")->required();
    hunt_cmd->add_option("--n", config.n, "Carrier size")->check(CLI::Range(1, 16));
    hunt_cmd->add_option("--gamma", config.gamma, "Number of operations")
        ->check(CLI::Range(1, 8));
    hunt_cmd->add_option("--denominator", config.denominator, "Grade denominator D")
        ->check(CLI::Range(1, 1000));
    hunt_cmd->add_option("--samples", config.budget, "Sample budget")
        ->check(CLI::PositiveNumber);
    hunt_cmd->add_option("--seed", config.seed, "Random seed");
    hunt_cmd->add_option("--list-size", config.list_size, "Sets per semilattice sample")
        ->check(CLI::PositiveNumber);
    hunt_cmd->add_option("--groupoid", hunt_groupoids, "Draw from these groupoids instead");
    hunt_cmd->add_flag("--relax-hypotheses", config.relax_hypotheses,
                       "Ignore hypotheses on the input sets");
    hunt_cmd->callback([&] {
      handler = [&] {
        auto id = theorem_from_name(hunt_id);
        if (!id) {
          throw Error(ErrorCode::parse_error, "unknown theorem '" + hunt_id + "'");
        }
        for (auto const& g : hunt_groupoids) {
          config.groupoids.push_back(resolve_groupoid(g));
        }
        auto const r = hunt(*id, config);
        if (ctx.json) {
          ctx.emit(to_json(r));
        } else {
          out << theorem_info(r.id).name << ": pool " << r.pool_size << ", tried "
              << r.tried << ", qualified " << r.qualified << '\n';
          if (r.counterexample) {
            auto const& c = *r.counterexample;
            out << "counterexample at sample " << c.sample << '\n';
            print_groupoid(out, c.instance.groupoid);
            for (auto const& A : c.instance.sets) {
              out << describe(A) << '\n';
            }
            print_theorem(out, c.verdict);
          } else {
            out << "no counterexample\n";
          }
        }
        return r.counterexample ? exit_fails : exit_ok;
      };
    });

    // enumerate
    auto*         enum_cmd = app.add_subcommand("enumerate", "Enumerate small groupoids");
    std::size_t   enum_n = 2, enum_g = 1, enum_limit = 100;
    std::string   enum_laws = "LEFT_INVERTIVE";
    bool          enum_count = false;
    enum_cmd->add_option("--n", enum_n, "Carrier size")->check(CLI::Range(1, 4));
    enum_cmd->add_option("--gamma", enum_g, "Number of operations")->check(CLI::Range(1, 4));
    enum_cmd->add_option("--laws", enum_laws, "Comma-separated required laws");
    enum_cmd->add_option("--limit", enum_limit, "Stop after this many")
        ->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--count", enum_count, "Only count, ignoring --limit");
    enum_cmd->callback([&] {
      handler = [&] {
        auto const laws = split_list<Law>(enum_laws, law_arg);
        if (enum_count) {
          auto const count = for_each_groupoid(enum_n, enum_g, laws,
                                               [](GammaGroupoid const&) { return true; });
          if (ctx.json) {
            ctx.emit(Json{{"type", "count"}, {"count", count}});
          } else {
            out << count << '\n';
          }
          return exit_ok;
        }
        auto const found = enumerate_groupoids(enum_n, enum_g, laws, enum_limit);
        if (ctx.json) {
          Json docs = Json::array();
          for (auto const& G : found) {
            docs.push_back(groupoid_to_json(G));
          }
          ctx.emit(docs);
        } else {
          for (std::size_t i = 0; i < found.size(); ++i) {
            out << (i ? "\n" : "") << "# " << i + 1 << '\n';
            print_groupoid(out, found[i]);
          }
        }
        return exit_ok;
      };
    });

    // fixtures
    auto* fixtures_cmd = app.add_subcommand("fixtures", "Bundled examples");
    fixtures_cmd->require_subcommand(1);
    auto* fixtures_list = fixtures_cmd->add_subcommand("list", "List fixtures");
    fixtures_list->callback([&] {
      handler = [&] {
        for (auto const& info : fixture_catalog()) {
          out << std::left << std::setw(10) << info.name
              << (info.kind == FixtureKind::groupoid ? "groupoid  " : "ifs       ")
              << info.description << '\n';
        }
        return exit_ok;
      };
    });
    auto*       fixtures_dump = fixtures_cmd->add_subcommand("dump", "Print a fixture as JSON");
    std::string dump_name;
    fixtures_dump->add_option("name", dump_name, "Fixture name")->required();
    fixtures_dump->callback([&] {
      handler = [&] {
        auto const* info = find_fixture(fixture_key(dump_name));
        if (info == nullptr) {
          throw Error(ErrorCode::parse_error, "no fixture named '" + dump_name + "'");
        }
        out << (info->kind == FixtureKind::groupoid
                    ? groupoid_to_json(groupoid_fixture(info->name))
                    : ifs_to_json(ifs_fixture(info->name)))
                   .dump(2)
            << '\n';
        return exit_ok;
      };
    });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_invalid;
    }
    try {
      return handler ? handler() : exit_invalid;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_invalid;
    }
  }

}  // namespace gammalab
