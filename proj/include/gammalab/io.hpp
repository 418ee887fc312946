#pragma once

// JSON documents for groupoids, fuzzy sets and verdicts. Elements and
// operation indexes are 1-based; grades are reduced "p/q" strings.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gammalab/carrier.hpp"
#include "gammalab/crisp.hpp"
#include "gammalab/grade.hpp"
#include "gammalab/ifs.hpp"
#include "gammalab/ifs_ideals.hpp"
#include "gammalab/theorem_lab.hpp"

namespace gammalab {

  using Json = nlohmann::ordered_json;

  // "p/q", an integer, or a finite decimal such as "0.3" or ".25".
  // Throws Error{parse_error} for malformed text and Error{invalid_grade}
  // for a value outside [0, 1].
  Grade parse_grade(std::string_view text);

  // Same syntax, but any value outside (0, 1] is Error{alpha_out_of_range}.
  Grade parse_level(std::string_view text);

  Json          groupoid_to_json(GammaGroupoid const& G);
  GammaGroupoid groupoid_from_json(Json const& doc);
  Json          ifs_to_json(Ifs const& A);
  Ifs           ifs_from_json(Json const& doc);

  // Throws Error{parse_error} naming the file for unreadable or malformed
  // input.
  Json read_json_file(std::filesystem::path const& path);
  Json parse_json_text(std::string const& text, std::string_view origin);

  Json to_json(LawReport const& r);
  Json to_json(IntraRegularityReport const& r);
  Json to_json(CrispVerdict const& v, CrispSubset const& set);
  Json to_json(IfsVerdict const& v);
  Json to_json(TheoremVerdict const& v);
  Json to_json(HuntReport const& r);

  LawReport             law_report_from_json(Json const& doc);
  IntraRegularityReport intra_report_from_json(Json const& doc);
  CrispVerdict          crisp_verdict_from_json(Json const& doc);
  IfsVerdict            ifs_verdict_from_json(Json const& doc);
  TheoremVerdict        theorem_verdict_from_json(Json const& doc);

  std::optional<IfsKind>   ifs_kind_from_name(std::string_view name);
  std::optional<CrispKind> crisp_kind_from_name(std::string_view name);

}  // namespace gammalab
