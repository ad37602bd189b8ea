#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quartsum/render.hpp"

namespace quartsum {

enum class Section { summarium, s7, s8, elkies, footnotes };
enum class Verdict { confirmed, refuted, typo_suspected };

std::string_view to_string(Section section);
std::string_view to_string(Verdict verdict);
/// Throws Error(ParseError) for unknown names.
Section parse_section(std::string_view name);
Verdict parse_verdict(std::string_view name);

struct ClaimRow {
  std::string claim;
  std::string printed;
  std::string recomputed;
  Verdict verdict;
  // What the fixture table records as the known outcome; confirmed unless
  // the table documents a discrepancy.
  Verdict expected;
  std::string note;

  bool as_expected() const { return verdict == expected; }
};

struct ReplicationReport {
  Section section;
  std::vector<ClaimRow> rows;

  bool all_as_expected() const;
};

/// Verdict for a printed value against its recomputation: equal values are
/// confirmed, a printed value whose characters are a rearrangement of the
/// recomputed one is a suspected typo, anything else is refuted.
Verdict compare_printed(std::string_view printed, std::string_view recomputed);

/// Recomputes every claim listed for the section in the fixture table.
ReplicationReport replicate(Section section, const Json& fixtures);

/// Same, against the fixture table compiled into the library.
ReplicationReport replicate(Section section);

/// The compiled-in fixture table.
const Json& builtin_fixtures();

Json to_json(const ReplicationReport& report);
std::string render_text(const ReplicationReport& report);

}  // namespace quartsum
