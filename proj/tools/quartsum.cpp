// quartsum: equal sums of two fourth powers.
//
//   quartsum derive --b <rat> [--json]
//   quartsum search --max <N> [--all|--primitive] [--json] [--force]
//   quartsum verify --lhs a,b,... --rhs c,d,...
//   quartsum replicate --section <summarium|s7|s8|elkies|footnotes> [--json]
//
// Exit codes: 0 success or identity holds, 1 identity fails or unexpected
// replication mismatch, 2 usage error or degenerate input.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quartsum/error.hpp"
#include "quartsum/parametrization.hpp"
#include "quartsum/render.hpp"
#include "quartsum/replicate.hpp"
#include "quartsum/search.hpp"

namespace {

using namespace quartsum;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

constexpr const char* kGuardEnv = "QUARTSUM_SEARCH_GUARD";

std::vector<Integer> parse_csv(const std::string& text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_integer(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t guard_from_env() {
  const char* raw = std::getenv(kGuardEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultSearchGuard;
  const Integer value = parse_integer(raw);
  if (value < 1) throw Error(ErrorKind::ParseError, std::string(kGuardEnv) + " must be positive");
  return value > kMaxSearchLimit ? kMaxSearchLimit : value.convert_to<std::uint64_t>();
}

int run_derive(const std::string& b_text, bool json) {
  const DerivationTrace trace = derive_quartet(parse_rational(b_text));
  std::cout << (json ? dump(to_json(trace)) : render_text(trace));
  return kOk;
}

int run_search(const std::string& max_text, bool all, bool json, bool force, unsigned threads) {
  SearchConfig config;
  config.guard = force ? kMaxSearchLimit : guard_from_env();
  config.threads = threads;
  const auto hits = enumerate_hits(parse_integer(max_text), !all, config);
  std::cout << (json ? dump(to_json(hits)) : render_text(hits));
  return kOk;
}

int run_verify(const std::string& lhs_text, const std::string& rhs_text) {
  const bool holds = verify_identity(parse_csv(lhs_text), parse_csv(rhs_text));
  std::cout << (holds ? "true" : "false") << '\n';
  return holds ? kOk : kFailed;
}

int run_replicate(const std::string& section_text, bool json) {
  const ReplicationReport report = replicate(parse_section(section_text));
  std::cout << (json ? dump(to_json(report)) : render_text(report));
  return report.all_as_expected() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal sums of two fourth powers: parametric derivation, search and verification"};
  app.require_subcommand(1);

  std::string b_text;
  bool derive_json = false;
  auto* derive = app.add_subcommand("derive", "Derive a quartet from the rational parameter b");
  derive->add_option("--b", b_text, "Parameter as n or n/m (use --b=-n/m for negatives)")->required();
  derive->add_flag("--json", derive_json, "Emit JSON");

  std::string max_text;
  bool search_all = false, search_primitive = false, search_json = false, search_force = false;
  unsigned search_threads = 1;
  auto* search = app.add_subcommand("search", "Enumerate collisions a^4 + b^4 = c^4 + d^4");
  search->add_option("--max", max_text, "Largest member considered")->required();
  auto* all_flag = search->add_flag("--all", search_all, "Report non-primitive hits too");
  search->add_flag("--primitive", search_primitive, "Report primitive hits only (default)")
      ->excludes(all_flag);
  search->add_flag("--json", search_json, "Emit JSON");
  search->add_flag("--force", search_force,
                   std::string("Ignore the memory guard (default 20000, env ") + kGuardEnv + ")");
  search->add_option("--threads", search_threads, "Threads used to build the pair table")
      ->check(CLI::PositiveNumber);

  std::string lhs_text, rhs_text;
  auto* verify = app.add_subcommand("verify", "Check sum(lhs^4) == sum(rhs^4)");
  verify->add_option("--lhs", lhs_text, "Comma-separated integers")->required();
  verify->add_option("--rhs", rhs_text, "Comma-separated integers")->required();

  std::string section_text;
  bool replicate_json = false;
  auto* replicate_cmd = app.add_subcommand("replicate", "Recompute a table of published claims");
  replicate_cmd->add_option("--section", section_text, "summarium, s7, s8, elkies or footnotes")
      ->required()
      ->check(CLI::IsMember({"summarium", "s7", "s8", "elkies", "footnotes"}));
  replicate_cmd->add_flag("--json", replicate_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*derive) return run_derive(b_text, derive_json);
    if (*search) return run_search(max_text, search_all, search_json, search_force, search_threads);
    if (*verify) return run_verify(lhs_text, rhs_text);
    if (*replicate_cmd) return run_replicate(section_text, replicate_json);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
