#include "gammalab/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gammalab/error.hpp"

namespace gammalab {

  namespace {
    [[noreturn]] void fail(std::string const& what) {
      throw Error(ErrorCode::parse_error, what);
    }

    std::int64_t parse_int(std::string_view text, std::string_view whole) {
      std::int64_t value = 0;
      auto const* first = text.data();
      auto const* last  = text.data() + text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (text.empty() || ec != std::errc() || ptr != last) {
        fail("malformed grade '" + std::string(whole) + "'");
      }
      return value;
    }

    // Exact value of "p/q", "n" or a decimal, not yet range-checked.
    std::pair<std::int64_t, std::int64_t> parse_fraction(std::string_view text) {
      auto const whole = text;
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
      }
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
      }
      if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto const p = parse_int(text.substr(0, slash), whole);
        auto const q = parse_int(text.substr(slash + 1), whole);
        if (q <= 0) {
          fail("grade '" + std::string(whole) + "' has a non-positive denominator");
        }
        return {p, q};
      }
      auto const dot = text.find('.');
      if (dot == std::string_view::npos) {
        return {parse_int(text, whole), 1};
      }
      auto head = text.substr(0, dot);
      auto tail = text.substr(dot + 1);
      bool negative = !head.empty() && head.front() == '-';
      if (negative) {
        head.remove_prefix(1);
      }
      if (tail.empty() || tail.size() > 15 || tail.front() == '-'
          || tail.front() == '+') {
        fail("malformed grade '" + std::string(whole) + "'");
      }
      std::int64_t den = 1;
      for (std::size_t i = 0; i < tail.size(); ++i) {
        den *= 10;
      }
      std::int64_t const int_part = head.empty() ? 0 : parse_int(head, whole);
      std::int64_t const frac     = parse_int(tail, whole);
      if (int_part < 0 || int_part > 1000) {
        fail("malformed grade '" + std::string(whole) + "'");
      }
      std::int64_t num = int_part * den + frac;
      return {negative ? -num : num, den};
    }

    std::string grade_text(Json const& j, std::string const& where) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      if (j.is_number()) {
        return j.dump();
      }
      fail(where + ": expected a grade string");
    }

    Grade grade_at(Json const& j, std::string const& where) {
      try {
        return parse_grade(grade_text(j, where));
      } catch (Error const& e) {
        throw Error(e.code(), where + ": " + e.message());
      }
    }

    Json const& field(Json const& doc, char const* name, std::string const& where = "") {
      if (!doc.is_object()) {
        fail((where.empty() ? std::string("document") : where)
             + ": expected an object");
      }
      auto it = doc.find(name);
      if (it == doc.end()) {
        fail((where.empty() ? std::string() : where + ".") + name
             + ": missing field");
      }
      return *it;
    }

    std::uint64_t positive_at(Json const& j, std::string const& where) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
        fail(where + ": expected a positive integer");
      }
      return j.get<std::uint64_t>();
    }

    bool bool_at(Json const& j, std::string const& where) {
      if (!j.is_boolean()) {
        fail(where + ": expected true or false");
      }
      return j.get<bool>();
    }

    std::optional<bool> optional_bool_at(Json const& j, std::string const& where) {
      if (j.is_null()) {
        return std::nullopt;
      }
      return bool_at(j, where);
    }

    std::string string_at(Json const& j, std::string const& where) {
      if (!j.is_string()) {
        fail(where + ": expected a string");
      }
      return j.get<std::string>();
    }

    Json const& array_at(Json const& j, std::string const& where) {
      if (!j.is_array()) {
        fail(where + ": expected an array");
      }
      return j;
    }

    Element element_at(Json const& j, std::string const& where) {
      return Element{static_cast<std::uint32_t>(positive_at(j, where) - 1)};
    }

    GammaIndex gamma_at(Json const& j, std::string const& where) {
      return GammaIndex{static_cast<std::uint32_t>(positive_at(j, where) - 1)};
    }

    Json elements_json(std::span<Element const> xs) {
      Json out = Json::array();
      for (auto x : xs) {
        out.push_back(x.index + 1);
      }
      return out;
    }

    Json gammas_json(std::span<GammaIndex const> gs) {
      Json out = Json::array();
      for (auto g : gs) {
        out.push_back(g.index + 1);
      }
      return out;
    }

    std::vector<Element> elements_at(Json const& j, std::string const& where) {
      std::vector<Element> out;
      std::size_t          i = 0;
      for (auto const& x : array_at(j, where)) {
        out.push_back(element_at(x, where + "[" + std::to_string(i++) + "]"));
      }
      return out;
    }

    std::vector<GammaIndex> gammas_at(Json const& j, std::string const& where) {
      std::vector<GammaIndex> out;
      std::size_t             i = 0;
      for (auto const& x : array_at(j, where)) {
        out.push_back(gamma_at(x, where + "[" + std::to_string(i++) + "]"));
      }
      return out;
    }

    Json optional_json(std::optional<bool> b) {
      return b ? Json(*b) : Json(nullptr);
    }

    void expect_type(Json const& doc, char const* type) {
      if (string_at(field(doc, "type"), "type") != type) {
        fail(std::string("type: expected \"") + type + "\"");
      }
    }

    std::string canonical_kind(std::string_view name) {
      std::string s;
      for (char c : name) {
        s.push_back(c == '-' ? '_'
                             : static_cast<char>(std::tolower(
                                 static_cast<unsigned char>(c))));
      }
      if (s.starts_with("if_")) {
        s.erase(0, 3);
      }
      if (s.ends_with("_ideal")) {
        s.erase(s.size() - 6);
      }
      return s;
    }

    Component component_from(std::string const& s) {
      if (s == "mu") {
        return Component::mu;
      }
      if (s == "nu") {
        return Component::nu;
      }
      fail("component: expected \"mu\" or \"nu\", got \"" + s + "\"");
    }

    Json difference_json(IfsDifference const& d) {
      Json j;
      j["at"]        = d.at.index + 1;
      j["component"] = d.in_mu ? "mu" : "nu";
      j["left"]      = d.left.to_string();
      j["right"]     = d.right.to_string();
      return j;
    }

    IfsDifference difference_from(Json const& j) {
      return IfsDifference{element_at(field(j, "at", "difference"), "difference.at"),
                           component_from(string_at(field(j, "component"),
                                                    "difference.component"))
                               == Component::mu,
                           grade_at(field(j, "left"), "difference.left"),
                           grade_at(field(j, "right"), "difference.right")};
    }
  }  // namespace

  Grade parse_grade(std::string_view text) {
    auto [p, q] = parse_fraction(text);
    return Grade(p, q);
  }

  Grade parse_level(std::string_view text) {
    auto [p, q] = parse_fraction(text);
    if (p <= 0 || p > q) {
      throw Error(ErrorCode::alpha_out_of_range,
                  "level must lie in (0, 1], got " + std::string(text));
    }
    return Grade(p, q);
  }

  Json groupoid_to_json(GammaGroupoid const& G) {
    Json doc;
    doc["n"]     = G.size();
    doc["gamma"] = G.gamma_count();
    Json tables  = Json::array();
    for (std::size_t op = 0; op < G.gamma_count(); ++op) {
      Json table = Json::array();
      for (std::uint32_t x = 0; x < G.size(); ++x) {
        Json row = Json::array();
        for (std::uint32_t y = 0; y < G.size(); ++y) {
          row.push_back(G.at(op, x, y) + 1);
        }
        table.push_back(std::move(row));
      }
      tables.push_back(std::move(table));
    }
    doc["tables"] = std::move(tables);
    if (!G.labels().empty()) {
      doc["labels"] = G.labels();
    }
    return doc;
  }

  GammaGroupoid groupoid_from_json(Json const& doc) {
    std::size_t const n = positive_at(field(doc, "n"), "n");
    std::size_t const g
        = doc.contains("gamma") ? positive_at(doc["gamma"], "gamma") : 1;
    auto const& tables = array_at(field(doc, "tables"), "tables");
    if (tables.size() != g) {
      fail("tables: expected " + std::to_string(g) + " table(s), got "
           + std::to_string(tables.size()));
    }
    RawTables raw;
    for (std::size_t t = 0; t < g; ++t) {
      std::string const where = "table " + std::to_string(t + 1);
      auto const&       table = array_at(tables[t], where);
      if (table.size() != n) {
        fail(where + ": expected " + std::to_string(n) + " rows, got "
             + std::to_string(table.size()));
      }
      RawTable rows;
      for (std::size_t r = 0; r < n; ++r) {
        std::string const row_where = where + ", row " + std::to_string(r + 1);
        auto const&       row       = array_at(table[r], row_where);
        if (row.size() != n) {
          fail(row_where + ": expected " + std::to_string(n) + " entries, got "
               + std::to_string(row.size()));
        }
        std::vector<std::int64_t> values;
        for (auto const& v : row) {
          if (!v.is_number_integer()) {
            fail(row_where + ": entries must be integers");
          }
          values.push_back(v.get<std::int64_t>());
        }
        rows.push_back(std::move(values));
      }
      raw.push_back(std::move(rows));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
      std::size_t i = 0;
      for (auto const& l : array_at(doc["labels"], "labels")) {
        labels.push_back(string_at(l, "labels[" + std::to_string(i++) + "]"));
      }
    }
    return validate_groupoid(n, g, raw, IndexBase::one, std::move(labels));
  }

  Json ifs_to_json(Ifs const& A) {
    Json doc;
    Json mu = Json::array(), nu = Json::array();
    for (std::size_t x = 0; x < A.size(); ++x) {
      mu.push_back(A.mu(x).to_string());
      nu.push_back(A.nu(x).to_string());
    }
    doc["mu"] = std::move(mu);
    doc["nu"] = std::move(nu);
    if (!A.within_sum_bound()) {
      doc["allow_sum_over_one"] = true;
    }
    return doc;
  }

  Ifs ifs_from_json(Json const& doc) {
    std::vector<Grade> mu, nu;
    for (auto [name, out] : {std::pair{"mu", &mu}, std::pair{"nu", &nu}}) {
      std::size_t i = 0;
      for (auto const& v : array_at(field(doc, name), name)) {
        out->push_back(grade_at(v, std::string(name) + "[" + std::to_string(i++) + "]"));
      }
    }
    bool const allow = doc.contains("allow_sum_over_one")
                       && bool_at(doc["allow_sum_over_one"], "allow_sum_over_one");
    return allow ? Ifs::unchecked(std::move(mu), std::move(nu))
                 : Ifs(std::move(mu), std::move(nu));
  }

  Json parse_json_text(std::string const& text, std::string_view origin) {
    try {
      return Json::parse(text);
    } catch (Json::parse_error const& e) {
      fail(std::string(origin) + ": " + e.what());
    }
  }

  Json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      fail("cannot read " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path.string());
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdicts
  ////////////////////////////////////////////////////////////////////////

  Json to_json(LawReport const& r) {
    Json j;
    j["type"]  = "law";
    j["law"]   = law_name(r.law);
    j["holds"] = r.holds;
    if (r.witness) {
      Json w;
      w["elements"] = elements_json(r.witness->elements);
      w["gammas"]   = gammas_json(r.witness->gammas);
      w["lhs"]      = r.witness->lhs.index + 1;
      w["rhs"] = r.witness->rhs ? Json(r.witness->rhs->index + 1) : Json(nullptr);
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }

  LawReport law_report_from_json(Json const& doc) {
    expect_type(doc, "law");
    auto const name = string_at(field(doc, "law"), "law");
    auto const law  = law_from_name(name);
    if (!law) {
      fail("law: unknown law \"" + name + "\"");
    }
    LawReport r{*law, bool_at(field(doc, "holds"), "holds"), std::nullopt};
    auto const& w = field(doc, "witness");
    if (!w.is_null()) {
      auto const& rhs = field(w, "rhs", "witness");
      r.witness       = LawWitness{
          elements_at(field(w, "elements", "witness"), "witness.elements"),
          gammas_at(field(w, "gammas", "witness"), "witness.gammas"),
          element_at(field(w, "lhs", "witness"), "witness.lhs"),
          rhs.is_null() ? std::nullopt
                              : std::optional(element_at(rhs, "witness.rhs"))};
    }
    return r;
  }

  Json to_json(IntraRegularityReport const& r) {
    Json j;
    j["type"]     = "intra_regularity";
    j["regular"]  = r.regular;
    j["failures"] = elements_json(r.failures);
    Json ws       = Json::array();
    for (auto const& [a, w] : r.witnesses) {
      Json e;
      e["a"]     = w.a.index + 1;
      e["x"]     = w.x.index + 1;
      e["y"]     = w.y.index + 1;
      e["alpha"] = w.alpha.index + 1;
      e["beta"]  = w.beta.index + 1;
      e["gamma"] = w.gamma.index + 1;
      ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return j;
  }

  IntraRegularityReport intra_report_from_json(Json const& doc) {
    expect_type(doc, "intra_regularity");
    IntraRegularityReport r{bool_at(field(doc, "regular"), "regular"),
                            {},
                            elements_at(field(doc, "failures"), "failures")};
    for (auto const& e : array_at(field(doc, "witnesses"), "witnesses")) {
      IntraRegularWitness w{element_at(field(e, "a", "witness"), "witness.a"),
                            element_at(field(e, "x", "witness"), "witness.x"),
                            element_at(field(e, "y", "witness"), "witness.y"),
                            gamma_at(field(e, "alpha", "witness"), "witness.alpha"),
                            gamma_at(field(e, "beta", "witness"), "witness.beta"),
                            gamma_at(field(e, "gamma", "witness"), "witness.gamma")};
      r.witnesses.emplace(w.a, w);
    }
    return r;
  }

  Json to_json(CrispVerdict const& v, CrispSubset const& set) {
    Json j;
    j["type"]     = "crisp";
    j["kind"]     = crisp_kind_name(v.kind);
    j["set"]      = elements_json(set.members());
    j["holds"]    = v.holds;
    j["nonempty"] = v.nonempty;
    if (v.witness) {
      Json w;
      w["clause"]  = crisp_kind_name(v.witness->clause);
      w["result"]  = v.witness->result.index + 1;
      w["factors"] = elements_json(v.witness->factors);
      w["gammas"]  = gammas_json(v.witness->gammas);
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }

  CrispVerdict crisp_verdict_from_json(Json const& doc) {
    expect_type(doc, "crisp");
    auto kind_of = [](Json const& j, std::string const& where) {
      auto const name = string_at(j, where);
      auto const kind = crisp_kind_from_name(name);
      if (!kind) {
        fail(where + ": unknown kind \"" + name + "\"");
      }
      return *kind;
    };
    CrispVerdict v{kind_of(field(doc, "kind"), "kind"),
                   bool_at(field(doc, "holds"), "holds"),
                   bool_at(field(doc, "nonempty"), "nonempty"),
                   std::nullopt};
    auto const& w = field(doc, "witness");
    if (!w.is_null()) {
      v.witness = CrispWitness{
          kind_of(field(w, "clause", "witness"), "witness.clause"),
          element_at(field(w, "result", "witness"), "witness.result"),
          elements_at(field(w, "factors", "witness"), "witness.factors"),
          gammas_at(field(w, "gammas", "witness"), "witness.gammas")};
    }
    return v;
  }

  Json to_json(IfsVerdict const& v) {
    Json j;
    j["type"]  = "ifs";
    j["kind"]  = ifs_kind_name(v.kind);
    j["holds"] = v.holds;
    if (v.witness) {
      auto const& w = *v.witness;
      Json        e;
      e["clause"]    = ifs_kind_name(w.clause);
      e["component"] = w.component == Component::mu ? "mu" : "nu";
      e["elements"]  = elements_json(w.elements);
      e["gammas"]    = gammas_json(w.gammas);
      e["target"]    = w.target.index + 1;
      e["observed"]  = w.observed.to_string();
      e["bound"]     = w.bound.to_string();
      if (w.compositions) {
        e["compositions"] = Json::array(
            {w.compositions->first.to_string(), w.compositions->second.to_string()});
      } else {
        e["compositions"] = nullptr;
      }
      j["witness"] = std::move(e);
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }

  IfsVerdict ifs_verdict_from_json(Json const& doc) {
    expect_type(doc, "ifs");
    auto kind_of = [](Json const& j, std::string const& where) {
      auto const name = string_at(j, where);
      auto const kind = ifs_kind_from_name(name);
      if (!kind) {
        fail(where + ": unknown kind \"" + name + "\"");
      }
      return *kind;
    };
    IfsVerdict  v{kind_of(field(doc, "kind"), "kind"),
                 bool_at(field(doc, "holds"), "holds"),
                 std::nullopt};
    auto const& w = field(doc, "witness");
    if (!w.is_null()) {
      IfsWitness e{
          kind_of(field(w, "clause", "witness"), "witness.clause"),
          component_from(string_at(field(w, "component", "witness"),
                                   "witness.component")),
          elements_at(field(w, "elements", "witness"), "witness.elements"),
          gammas_at(field(w, "gammas", "witness"), "witness.gammas"),
          element_at(field(w, "target", "witness"), "witness.target"),
          grade_at(field(w, "observed", "witness"), "witness.observed"),
          grade_at(field(w, "bound", "witness"), "witness.bound"),
          std::nullopt};
      auto const& c = field(w, "compositions", "witness");
      if (!c.is_null()) {
        if (!c.is_array() || c.size() != 2) {
          fail("witness.compositions: expected two grades");
        }
        e.compositions = std::pair{grade_at(c[0], "witness.compositions[0]"),
                                   grade_at(c[1], "witness.compositions[1]")};
      }
      v.witness = std::move(e);
    }
    return v;
  }

  Json to_json(TheoremVerdict const& v) {
    Json j;
    j["type"]            = "theorem";
    j["id"]              = theorem_info(v.id).name;
    j["hypotheses_hold"] = v.hypotheses_hold;
    Json hs              = Json::array();
    for (auto const& h : v.hypotheses) {
      Json e;
      e["name"]    = h.name;
      e["holds"]   = h.holds;
      e["relaxed"] = h.relaxed;
      e["detail"]  = h.detail;
      hs.push_back(std::move(e));
    }
    j["hypotheses"]       = std::move(hs);
    j["conclusion_holds"] = optional_json(v.conclusion_holds);
    Json cs               = Json::array();
    for (auto const& c : v.clauses) {
      Json e;
      e["name"]          = c.name;
      e["premise_holds"] = c.premise_holds;
      e["holds"]         = optional_json(c.holds);
      e["detail"]        = c.detail;
      cs.push_back(std::move(e));
    }
    j["clauses"] = std::move(cs);
    if (v.witness) {
      Json w;
      w["direction"] = v.witness->direction;
      w["detail"]    = v.witness->detail;
      w["difference"]
          = v.witness->difference ? difference_json(*v.witness->difference) : Json(nullptr);
      w["predicate"]
          = v.witness->predicate ? to_json(*v.witness->predicate) : Json(nullptr);
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    j["ungated_statement"] = optional_json(v.ungated_statement);
    return j;
  }

  TheoremVerdict theorem_verdict_from_json(Json const& doc) {
    expect_type(doc, "theorem");
    auto const name = string_at(field(doc, "id"), "id");
    auto const id   = theorem_from_name(name);
    if (!id) {
      fail("id: unknown theorem \"" + name + "\"");
    }
    TheoremVerdict v{*id,
                     {},
                     bool_at(field(doc, "hypotheses_hold"), "hypotheses_hold"),
                     optional_bool_at(field(doc, "conclusion_holds"),
                                      "conclusion_holds"),
                     {},
                     std::nullopt,
                     optional_bool_at(field(doc, "ungated_statement"),
                                      "ungated_statement")};
    for (auto const& h : array_at(field(doc, "hypotheses"), "hypotheses")) {
      v.hypotheses.push_back(
          HypothesisCheck{string_at(field(h, "name", "hypothesis"), "hypothesis.name"),
                          bool_at(field(h, "holds", "hypothesis"), "hypothesis.holds"),
                          string_at(field(h, "detail", "hypothesis"),
                                    "hypothesis.detail"),
                          bool_at(field(h, "relaxed", "hypothesis"),
                                  "hypothesis.relaxed")});
    }
    for (auto const& c : array_at(field(doc, "clauses"), "clauses")) {
      v.clauses.push_back(ClauseResult{
          string_at(field(c, "name", "clause"), "clause.name"),
          bool_at(field(c, "premise_holds", "clause"), "clause.premise_holds"),
          optional_bool_at(field(c, "holds", "clause"), "clause.holds"),
          string_at(field(c, "detail", "clause"), "clause.detail")});
    }
    auto const& w = field(doc, "witness");
    if (!w.is_null()) {
      TheoremWitness tw{string_at(field(w, "direction", "witness"), "witness.direction"),
                        string_at(field(w, "detail", "witness"), "witness.detail"),
                        std::nullopt,
                        std::nullopt};
      if (auto const& d = field(w, "difference", "witness"); !d.is_null()) {
        tw.difference = difference_from(d);
      }
      if (auto const& p = field(w, "predicate", "witness"); !p.is_null()) {
        tw.predicate = ifs_verdict_from_json(p);
      }
      v.witness = std::move(tw);
    }
    return v;
  }

  Json to_json(HuntReport const& r) {
    Json j;
    j["type"]      = "hunt";
    j["id"]        = theorem_info(r.id).name;
    j["pool_size"] = r.pool_size;
    j["tried"]     = r.tried;
    j["qualified"] = r.qualified;
    if (r.counterexample) {
      auto const& c = *r.counterexample;
      Json        e;
      e["sample"]   = c.sample;
      e["groupoid"] = groupoid_to_json(c.instance.groupoid);
      Json sets     = Json::array();
      for (auto const& A : c.instance.sets) {
        sets.push_back(ifs_to_json(A));
      }
      e["sets"] = std::move(sets);
      Json grid = Json::array();
      for (auto const& g : c.instance.alpha_grid) {
        grid.push_back(g.to_string());
      }
      e["alpha_grid"]     = std::move(grid);
      e["verdict"]        = to_json(c.verdict);
      j["counterexample"] = std::move(e);
    } else {
      j["counterexample"] = nullptr;
    }
    return j;
  }

  std::optional<IfsKind> ifs_kind_from_name(std::string_view name) {
    auto const key = canonical_kind(name);
    for (auto kind : all_ifs_kinds) {
      if (canonical_kind(ifs_kind_name(kind)) == key) {
        return kind;
      }
    }
    return std::nullopt;
  }

  std::optional<CrispKind> crisp_kind_from_name(std::string_view name) {
    auto const key = canonical_kind(name);
    for (auto kind : all_crisp_kinds) {
      if (canonical_kind(crisp_kind_name(kind)) == key) {
        return kind;
      }
    }
    return std::nullopt;
  }

}  // namespace gammalab
