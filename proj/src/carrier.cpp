#include "gammalab/carrier.hpp"

#include <algorithm>
#include <cctype>
#include <array>

#include "gammalab/error.hpp"

namespace gammalab {

  GammaGroupoid::GammaGroupoid(std::size_t                n,
                               std::size_t                g,
                               std::vector<std::uint32_t> cells,
                               std::vector<std::string>   labels)
      : _n(n), _g(g), _cells(std::move(cells)), _labels(std::move(labels)) {
    std::vector<bool> seen(_n * _n * _n, false);
    std::vector<std::vector<Factorization>> per(_n);
    for (std::size_t op = 0; op < _g; ++op) {
      for (std::size_t b = 0; b < _n; ++b) {
        for (std::size_t c = 0; c < _n; ++c) {
          std::size_t a = at(op, b, c);
          if (!seen[(a * _n + b) * _n + c]) {
            seen[(a * _n + b) * _n + c] = true;
            per[a].emplace_back(b, c);
          }
        }
      }
    }
    _offsets.reserve(_n + 1);
    _offsets.push_back(0);
    for (auto& list : per) {
      std::sort(list.begin(), list.end());
      _factors.insert(_factors.end(), list.begin(), list.end());
      _offsets.push_back(_factors.size());
    }
  }

  std::string GammaGroupoid::label(Element x) const {
    if (x.index < _labels.size()) {
      return _labels[x.index];
    }
    return std::to_string(x.index + 1);
  }

  RawTables GammaGroupoid::tables() const {
    RawTables out(_g, RawTable(_n, std::vector<std::int64_t>(_n)));
    for (std::size_t op = 0; op < _g; ++op) {
      for (std::size_t x = 0; x < _n; ++x) {
        for (std::size_t y = 0; y < _n; ++y) {
          out[op][x][y] = at(op, x, y);
        }
      }
    }
    return out;
  }

  GammaGroupoid validate_groupoid(std::size_t              n,
                                  std::size_t              g,
                                  RawTables const&         raw,
                                  IndexBase                base,
                                  std::vector<std::string> labels) {
    if (n == 0 || g == 0) {
      throw Error(ErrorCode::wrong_shape,
                  "carrier size and Gamma count must be at least 1");
    }
    if (raw.size() != g) {
      throw Error(ErrorCode::wrong_shape,
                  "expected " + std::to_string(g) + " tables, got "
                      + std::to_string(raw.size()));
    }
    if (!labels.empty() && labels.size() != n) {
      throw Error(ErrorCode::wrong_shape,
                  "expected " + std::to_string(n) + " labels, got "
                      + std::to_string(labels.size()));
    }
    std::int64_t const         offset = base == IndexBase::one ? 1 : 0;
    std::vector<std::uint32_t> cells;
    cells.reserve(g * n * n);
    for (std::size_t op = 0; op < g; ++op) {
      if (raw[op].size() != n) {
        throw Error(ErrorCode::wrong_shape,
                    "table " + std::to_string(op) + " has "
                        + std::to_string(raw[op].size()) + " rows, expected "
                        + std::to_string(n));
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (raw[op][x].size() != n) {
          throw Error(ErrorCode::wrong_shape,
                      "table " + std::to_string(op) + " row "
                          + std::to_string(x) + " has "
                          + std::to_string(raw[op][x].size())
                          + " entries, expected " + std::to_string(n));
        }
        for (std::size_t y = 0; y < n; ++y) {
          std::int64_t v = raw[op][x][y] - offset;
          if (v < 0 || v >= static_cast<std::int64_t>(n)) {
            throw Error(ErrorCode::out_of_range,
                        "entry " + std::to_string(raw[op][x][y])
                            + " at table " + std::to_string(op) + " ("
                            + std::to_string(x) + "," + std::to_string(y)
                            + ") is outside the carrier");
          }
          cells.push_back(static_cast<std::uint32_t>(v));
        }
      }
    }
    return GammaGroupoid(n, g, std::move(cells), std::move(labels));
  }

  GammaGroupoid single_operation(RawTable const& raw, IndexBase base) {
    return validate_groupoid(raw.size(), 1, RawTables{raw}, base);
  }

  ////////////////////////////////////////////////////////////////////////
  // Laws
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct LawNameEntry {
      Law              law;
      std::string_view name;
    };

    constexpr std::array<LawNameEntry, 8> law_names = {
        {{Law::left_invertive, "LEFT_INVERTIVE"},
         {Law::medial, "MEDIAL"},
         {Law::ag_star_star, "AG_STAR_STAR"},
         {Law::paramedial, "PARAMEDIAL"},
         {Law::commutative, "COMMUTATIVE"},
         {Law::associative, "ASSOCIATIVE"},
         {Law::idempotent_band, "IDEMPOTENT_BAND"},
         {Law::s_equals_sgs, "S_EQUALS_SGS"}}};

    using Values = std::array<std::uint32_t, 4>;

    // Both sides of an equational law at one assignment.
    std::pair<std::uint32_t, std::uint32_t> sides(GammaGroupoid const& G,
                                                  Law                  law,
                                                  Values const&        e,
                                                  Values const&        o) {
      auto m = [&G](std::uint32_t op, std::uint32_t x, std::uint32_t y) {
        return G.at(op, x, y);
      };
      switch (law) {
        case Law::left_invertive:
          return {m(o[1], m(o[0], e[0], e[1]), e[2]),
                  m(o[1], m(o[0], e[2], e[1]), e[0])};
        case Law::medial:
          return {m(o[1], m(o[0], e[0], e[1]), m(o[2], e[2], e[3])),
                  m(o[1], m(o[0], e[0], e[2]), m(o[2], e[1], e[3]))};
        case Law::ag_star_star:
          return {m(o[0], e[0], m(o[1], e[1], e[2])),
                  m(o[0], e[1], m(o[1], e[0], e[2]))};
        case Law::paramedial:
          return {m(o[1], m(o[0], e[0], e[1]), m(o[2], e[2], e[3])),
                  m(o[1], m(o[0], e[3], e[2]), m(o[2], e[1], e[0]))};
        case Law::commutative:
          return {m(o[0], e[0], e[1]), m(o[0], e[1], e[0])};
        case Law::associative:
          return {m(o[1], m(o[0], e[0], e[1]), e[2]),
                  m(o[0], e[0], m(o[1], e[1], e[2]))};
        case Law::idempotent_band:
          return {m(o[0], e[0], e[0]), e[0]};
        case Law::s_equals_sgs: break;
      }
      return {0, 0};
    }

    // Advances a little-endian odometer over [0, base)^k in lexicographic
    // order (last coordinate fastest). Returns false after the last tuple.
    bool advance(Values& v, std::size_t k, std::size_t base) {
      for (std::size_t i = k; i-- > 0;) {
        if (++v[i] < base) {
          return true;
        }
        v[i] = 0;
      }
      return false;
    }

    LawWitness make_witness(GammaGroupoid const& G,
                            Law                  law,
                            Values const&        e,
                            Values const&        o) {
      auto [ne, ng] = law_arity(law);
      LawWitness w;
      for (std::size_t i = 0; i < ne; ++i) {
        w.elements.push_back(Element{e[i]});
      }
      for (std::size_t i = 0; i < ng; ++i) {
        w.gammas.push_back(GammaIndex{o[i]});
      }
      if (law == Law::s_equals_sgs) {
        w.lhs = Element{e[0]};
        if (!G.factorizations(e[0]).empty()) {
          w.rhs = w.lhs;
        }
      } else {
        auto [l, r] = sides(G, law, e, o);
        w.lhs       = Element{l};
        w.rhs       = Element{r};
      }
      return w;
    }
  }  // namespace

  std::string_view law_name(Law law) {
    for (auto const& entry : law_names) {
      if (entry.law == law) {
        return entry.name;
      }
    }
    return "UNKNOWN";
  }

  std::optional<Law> law_from_name(std::string_view name) {
    std::string canonical;
    for (char c : name) {
      canonical.push_back(c == '-' ? '_'
                                   : static_cast<char>(std::toupper(
                                       static_cast<unsigned char>(c))));
    }
    for (auto const& entry : law_names) {
      if (entry.name == canonical) {
        return entry.law;
      }
    }
    return std::nullopt;
  }

  std::pair<std::size_t, std::size_t> law_arity(Law law) {
    switch (law) {
      case Law::left_invertive: return {3, 2};
      case Law::medial: return {4, 3};
      case Law::ag_star_star: return {3, 2};
      case Law::paramedial: return {4, 3};
      case Law::commutative: return {2, 1};
      case Law::associative: return {3, 2};
      case Law::idempotent_band: return {1, 1};
      case Law::s_equals_sgs: return {1, 0};
    }
    return {0, 0};
  }

  LawReport check_law(GammaGroupoid const& G, Law law) {
    if (law == Law::s_equals_sgs) {
      for (std::uint32_t a = 0; a < G.size(); ++a) {
        if (G.factorizations(a).empty()) {
          return {law, false, make_witness(G, law, {a, 0, 0, 0}, {})};
        }
      }
      return {law, true, std::nullopt};
    }
    auto [ne, ng] = law_arity(law);
    Values e{};
    do {
      Values o{};
      do {
        auto [l, r] = sides(G, law, e, o);
        if (l != r) {
          return {law, false, make_witness(G, law, e, o)};
        }
      } while (advance(o, ng, G.gamma_count()));
    } while (advance(e, ne, G.size()));
    return {law, true, std::nullopt};
  }

  LawWitness evaluate_law(GammaGroupoid const&        G,
                          Law                         law,
                          std::span<Element const>    elements,
                          std::span<GammaIndex const> gammas) {
    auto [ne, ng] = law_arity(law);
    if (elements.size() != ne || gammas.size() != ng) {
      throw Error(ErrorCode::arity_mismatch,
                  std::string(law_name(law)) + " takes "
                      + std::to_string(ne) + " elements and "
                      + std::to_string(ng) + " Gamma indexes");
    }
    Values e{}, o{};
    for (std::size_t i = 0; i < ne; ++i) {
      if (elements[i].index >= G.size()) {
        throw Error(ErrorCode::out_of_range, "element outside the carrier");
      }
      e[i] = elements[i].index;
    }
    for (std::size_t i = 0; i < ng; ++i) {
      if (gammas[i].index >= G.gamma_count()) {
        throw Error(ErrorCode::out_of_range, "Gamma index outside Gamma");
      }
      o[i] = gammas[i].index;
    }
    return make_witness(G, law, e, o);
  }

  ////////////////////////////////////////////////////////////////////////
  // Intra-regularity
  ////////////////////////////////////////////////////////////////////////

  Element IntraRegularWitness::evaluate(GammaGroupoid const& G) const {
    auto square = G.at(beta.index, a.index, a.index);
    auto left   = G.at(alpha.index, x.index, square);
    return Element{G.at(gamma.index, left, y.index)};
  }

  std::optional<IntraRegularWitness> intra_regular_witness(GammaGroupoid const& G,
                                                           Element a) {
    std::size_t const n = G.size(), g = G.gamma_count();
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        for (std::uint32_t al = 0; al < g; ++al) {
          for (std::uint32_t be = 0; be < g; ++be) {
            auto left = G.at(al, x, G.at(be, a.index, a.index));
            for (std::uint32_t ga = 0; ga < g; ++ga) {
              if (G.at(ga, left, y) == a.index) {
                return IntraRegularWitness{a,
                                           Element{x},
                                           Element{y},
                                           GammaIndex{al},
                                           GammaIndex{be},
                                           GammaIndex{ga}};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  IntraRegularityReport intra_regularity(GammaGroupoid const& G) {
    IntraRegularityReport report{true, {}, {}};
    for (std::uint32_t a = 0; a < G.size(); ++a) {
      if (auto w = intra_regular_witness(G, Element{a})) {
        report.witnesses.emplace(Element{a}, *w);
      } else {
        report.failures.push_back(Element{a});
        report.regular = false;
      }
    }
    return report;
  }

  bool is_intra_regular(GammaGroupoid const& G) {
    for (std::uint32_t a = 0; a < G.size(); ++a) {
      if (!intra_regular_witness(G, Element{a})) {
        return false;
      }
    }
    return true;
  }

  GammaGroupoid derive_power_gamma(GammaGroupoid const& base) {
    if (base.gamma_count() != 1) {
      throw Error(ErrorCode::wrong_shape,
                  "power derivation needs a single-operation table, got "
                      + std::to_string(base.gamma_count()) + " operations");
    }
    std::size_t const n   = base.size();
    auto              mul = [&base](std::size_t x, std::size_t y) {
      return base.at(0, x, y);
    };
    auto sq   = [&](std::size_t t) { return mul(t, t); };
    auto cube = [&](std::size_t t) { return mul(sq(t), t); };

    RawTables raw(2, RawTable(n, std::vector<std::int64_t>(n)));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        raw[0][a][b] = sq(mul(a, b));
        raw[1][a][b] = mul(cube(a), sq(b));
      }
    }
    return validate_groupoid(n, 2, raw, IndexBase::zero, base.labels());
  }

}  // namespace gammalab
