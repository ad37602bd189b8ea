#include "quartsum/replicate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quartsum/error.hpp"

namespace quartsum {

namespace {

constexpr std::string_view kFixtureText =
#include "quartsum/fixtures.inc"
    ;

std::vector<Integer> parse_list(const Json& values) {
  std::vector<Integer> out;
  for (const auto& v : values) out.push_back(parse_integer(v.get<std::string>()));
  return out;
}

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (const Integer& v : values) {
    if (!out.empty()) out += ",";
    out += v.str();
  }
  return out;
}

std::string quantity(const DerivationTrace& t, std::string_view name) {
  if (name == "b") return to_string(t.b);
  if (name == "f") return to_string(t.f);
  if (name == "g") return to_string(t.g);
  if (name == "z") return to_string(t.z);
  if (name == "k") return to_string(t.k);
  if (name == "x_ratio") return to_string(t.x_ratio);
  if (name == "y_ratio") return to_string(t.y_ratio);
  if (name == "x") return t.x.str();
  if (name == "y") return t.y.str();
  if (name == "p") return t.p.str();
  if (name == "q") return t.q.str();
  if (name == "r") return t.r.str();
  if (name == "s") return t.s.str();
  if (name == "A") return t.A.str();
  if (name == "B") return t.B.str();
  if (name == "C") return t.C.str();
  if (name == "D") return t.D.str();
  throw Error(ErrorKind::ParseError, "unknown derivation quantity '" + std::string(name) + "'");
}

std::string quartet_text(const Quartet& q) {
  return q.a1().str() + "," + q.b1().str() + ";" + q.a2().str() + "," + q.b2().str();
}

class Replicator {
 public:
  ClaimRow run(const Json& claim) {
    const std::string kind = claim.at("kind").get<std::string>();
    ClaimRow row;
    if (kind == "derivation") {
      row = derivation_claim(claim);
    } else if (kind == "identity") {
      row = identity_claim(claim);
    } else if (kind == "minimality") {
      row = minimality_claim(claim);
    } else {
      throw Error(ErrorKind::ParseError, "unknown claim kind '" + kind + "'");
    }
    if (claim.contains("label")) row.claim = claim["label"].get<std::string>();
    row.expected = claim.contains("documented")
                       ? parse_verdict(claim["documented"].get<std::string>())
                       : Verdict::confirmed;
    return row;
  }

 private:
  const DerivationTrace& trace_for(const std::string& b_text) {
    auto it = traces_.find(b_text);
    if (it == traces_.end()) it = traces_.emplace(b_text, derive_quartet(parse_rational(b_text))).first;
    return it->second;
  }

  ClaimRow derivation_claim(const Json& claim) {
    const std::string b = claim.at("b").get<std::string>();
    const std::string name = claim.at("quantity").get<std::string>();
    ClaimRow row;
    row.claim = name + " at b=" + b;
    row.printed = claim.at("printed").get<std::string>();
    row.recomputed = quantity(trace_for(b), name);
    row.verdict = compare_printed(row.printed, row.recomputed);
    if (claim.contains("printed_as")) row.note = "printed as " + claim["printed_as"].get<std::string>();
    return row;
  }

  ClaimRow identity_claim(const Json& claim) {
    const auto lhs = parse_list(claim.at("lhs"));
    const auto rhs = parse_list(claim.at("rhs"));
    const bool holds = verify_identity(lhs, rhs);
    ClaimRow row;
    row.claim = "identity " + join(lhs) + " | " + join(rhs);
    row.printed = claim.at("printed").get<std::string>();
    row.recomputed = holds ? "holds" : "fails";
    row.verdict = row.printed == row.recomputed ? Verdict::confirmed : Verdict::refuted;
    return row;
  }

  ClaimRow minimality_claim(const Json& claim) {
    const auto lhs = parse_list(claim.at("lhs"));
    const auto rhs = parse_list(claim.at("rhs"));
    const Quartet claimed = canonicalize(lhs.at(0), lhs.at(1), rhs.at(0), rhs.at(1));
    const Integer limit = parse_integer(claim.at("search_limit").get<std::string>());
    const std::optional<Quartet> smallest = min_quartet(limit);

    ClaimRow row;
    row.claim = "minimality of " + quartet_text(claimed);
    row.printed = quartet_text(claimed);
    row.recomputed = smallest ? quartet_text(*smallest) : "none";
    row.verdict = smallest && *smallest == claimed ? Verdict::confirmed : Verdict::refuted;
    std::ostringstream note;
    note << "exhaustive up to " << limit.str();
    if (smallest) {
      note << "; smallest common sum " << smallest->common_sum().str() << " vs claimed "
           << claimed.common_sum().str();
    }
    row.note = note.str();
    return row;
  }

  std::map<std::string, DerivationTrace> traces_;
};

}  // namespace

std::string_view to_string(Section section) {
  switch (section) {
    case Section::summarium: return "summarium";
    case Section::s7: return "s7";
    case Section::s8: return "s8";
    case Section::elkies: return "elkies";
    case Section::footnotes: return "footnotes";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::typo_suspected: return "typo_suspected";
  }
  return "unknown";
}

Section parse_section(std::string_view name) {
  for (Section s : {Section::summarium, Section::s7, Section::s8, Section::elkies,
                    Section::footnotes}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::ParseError, "unknown section '" + std::string(name) + "'");
}

Verdict parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::confirmed, Verdict::refuted, Verdict::typo_suspected}) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorKind::ParseError, "unknown verdict '" + std::string(name) + "'");
}

bool ReplicationReport::all_as_expected() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClaimRow& r) { return r.as_expected(); });
}

Verdict compare_printed(std::string_view printed, std::string_view recomputed) {
  if (printed == recomputed) return Verdict::confirmed;
  std::string a(printed), b(recomputed);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b ? Verdict::typo_suspected : Verdict::refuted;
}

ReplicationReport replicate(Section section, const Json& fixtures) {
  const Json& claims = fixtures.at("sections").at(std::string(to_string(section)));
  ReplicationReport report{section, {}};
  Replicator replicator;
  for (const Json& claim : claims) report.rows.push_back(replicator.run(claim));
  return report;
}

ReplicationReport replicate(Section section) { return replicate(section, builtin_fixtures()); }

const Json& builtin_fixtures() {
  static const Json fixtures = Json::parse(kFixtureText);
  return fixtures;
}

Json to_json(const ReplicationReport& report) {
  Json out;
  out["section"] = std::string(to_string(report.section));
  Json rows = Json::array();
  for (const ClaimRow& r : report.rows) {
    Json row;
    row["claim"] = r.claim;
    row["printed"] = r.printed;
    row["recomputed"] = r.recomputed;
    row["verdict"] = std::string(to_string(r.verdict));
    row["expected"] = std::string(to_string(r.expected));
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  out["claims"] = std::move(rows);
  out["all_as_expected"] = report.all_as_expected();
  return out;
}

std::string render_text(const ReplicationReport& report) {
  std::ostringstream out;
  out << "section " << to_string(report.section) << '\n';
  for (const ClaimRow& r : report.rows) {
    out << "  [" << to_string(r.verdict) << "] " << r.claim << ": printed " << r.printed
        << ", recomputed " << r.recomputed;
    if (!r.note.empty()) out << " (" << r.note << ")";
    if (!r.as_expected()) out << "  UNEXPECTED, documented as " << to_string(r.expected);
    out << '\n';
  }
  out << (report.all_as_expected() ? "all claims match the documented outcome\n"
                                   : "unexpected mismatch\n");
  return out.str();
}

}  // namespace quartsum
