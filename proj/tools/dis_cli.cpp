// dis: construct, verify, search and bound double-interval societies.
//
// Exit codes: 0 success, 1 verification or search failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dis/bounds.hpp"
#include "dis/corpus.hpp"
#include "dis/delta_search.hpp"
#include "dis/double_string.hpp"
#include "dis/endpoint_rep.hpp"
#include "dis/search.hpp"
#include "dis/society.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Argument is a file when one exists at that path, otherwise literal text.
std::string text_or_file(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

int run_diameter(const std::string& input) {
  const dis::DoubleNString s = dis::parse_double_string(text_or_file(input));
  const dis::DiameterReport report = dis::diameter(s);
  std::cout << "diameter=" << report.diameter;
  if (report.witness) {
    std::cout << " witness=" << report.witness->first << ","
              << report.witness->second;
  }
  std::cout << " n=" << s.n() << '\n';
  return kOk;
}

int run_delta(int n, int limit, int jobs, bool no_prefix_pruning) {
  dis::DeltaOptions options;
  options.limit = limit;
  options.jobs = jobs;
  options.distinct_prefix_pruning = !no_prefix_pruning;
  const dis::DeltaResult result = dis::delta_exhaustive(n, options);
  std::cout << "delta(" << n << ")=" << result.delta
            << " witness=" << dis::to_string(result.witness, dis::StringStyle::comma)
            << " nodes=" << result.nodes << '\n';
  return kOk;
}

int run_construct(const std::string& method, int n, std::optional<int> width,
                  const std::string& emit) {
  const dis::DoubleNString s = method == "quarter"
                                   ? dis::construct_quarter(n)
                                   : dis::construct_thirteen(n);
  if (emit == "string") {
    std::cout << dis::to_string(s, dis::StringStyle::comma) << '\n';
    return kOk;
  }
  const int w = width.value_or(dis::diameter(s).diameter);
  std::cout << "# " << method << " n=" << n << " width=" << w << '\n'
            << dis::format_society(dis::society_from_string(s, w));
  return kOk;
}

int run_corpus() {
  bool all = true;
  auto line = [&](bool ok, const std::string& what) {
    all = all && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
  };
  auto check_rep = [&](const std::string& label, std::string_view text,
                       int claim) {
    const auto report =
        dis::verify_certificate(dis::parse_endpoint_rep(text), claim);
    std::string summary = dis::format_report(report).substr(5);
    if (!summary.empty() && summary.back() == '\n') summary.pop_back();
    line(report.pass, label + ": " + summary);
  };
  check_rep("four-voter society", dis::corpus::kFourVoters, 3);
  check_rep("eight-voter swap society", dis::corpus::kEightVoters, 3);
  for (const auto& listing : dis::corpus::kSwapListings) {
    check_rep("listing n=" + std::to_string(listing.n), listing.rep,
              listing.approval);
  }
  const int five = dis::diameter(dis::parse_double_string(dis::corpus::kFiveString))
                       .diameter;
  line(five == 2, std::string(dis::corpus::kFiveString) +
                      " diameter=" + std::to_string(five) + " (expected 2)");
  const int seed =
      dis::diameter(dis::from_labels(dis::thirteen_seed())).diameter;
  line(seed == 4, "13-symbol seed diameter=" + std::to_string(seed) +
                      " (expected 4)");
  const auto built = dis::construct_thirteen(34);
  const bool same = built == dis::parse_double_string(dis::corpus::kThirteen34);
  const int d34 = dis::diameter(built).diameter;
  line(same && d34 <= 14, "construct_thirteen(34) matches reference, diameter=" +
                              std::to_string(d34) + " (bound 14)");
  return all ? kOk : kFailed;
}

int run_verify(const std::string& file, const std::string& format,
               std::optional<int> claim, bool corpus) {
  if (corpus) return run_corpus();
  if (file.empty()) throw UsageError("verify needs a FILE or --paper-corpus");
  const std::string text = read_file(file);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw UsageError(file + " is empty");
  }
  dis::CertificateReport report;
  if (format == "society") {
    report = dis::verify_society(dis::parse_society(text), claim);
  } else {
    const dis::Certificate cert = dis::parse_certificate(text);
    report = dis::verify_certificate(cert.rep, claim ? claim : cert.claimed);
  }
  std::cout << dis::format_report(report);
  if (report.pass && !dis::conjecture_holds(report.approval,
                                            static_cast<std::int64_t>(report.n))) {
    std::cout << "EXTRAORDINARY: approval ratio below 1/3\n";
  }
  return report.pass ? kOk : kFailed;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::int64_t a = std::stoll(text);
      return {a, a};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("malformed range '" + text + "', expected LO..HI");
  }
}

int run_bounds(const std::string& a_range, std::optional<std::int64_t> n,
               bool csv) {
  if (n) {
    if (*n < 1) throw UsageError("--n must be positive");
    const std::int64_t a = dis::approval_lower_bound(*n);
    std::cout << "n=" << *n << " min_approval=" << a << " ratio>="
              << dis::format_ratio_decimal(dis::Ratio(a, *n))
              << " estimate=" << static_cast<double>(
                                     dis::ratio_lower_bound_estimate(*n))
              << " delta_lower=" << dis::delta_theoretical_lower(*n) << '\n';
    return kOk;
  }
  const auto [lo, hi] = parse_range(a_range);
  const auto rows = dis::bounds_table(lo, hi);
  std::cout << (csv ? dis::format_bounds_csv(rows)
                    : dis::format_bounds_text(rows));
  return kOk;
}

struct SearchArgs {
  int n = 0;
  int target = 0;
  std::uint64_t seed = 1;
  std::uint64_t iters = 20'000;
  int restarts = 500;
  std::uint64_t sideways = 1'000;
  int jobs = 1;
  std::string out;
  std::string preserve_dir;
};

int run_search(const SearchArgs& args) {
  if (args.n < 1) throw UsageError("n must be positive");
  dis::SearchConfig config;
  config.target_approval = args.target;
  config.max_iterations = args.iters;
  config.restarts = args.restarts;
  config.sideways_limit = args.sideways;
  config.rng_seed = args.seed;
  config.jobs = args.jobs;
  if (!args.preserve_dir.empty()) config.preserve_dir = args.preserve_dir;
  const auto start = dis::starting_rep(args.n, args.target);
  const dis::SearchResult result = dis::hill_climb(start, config);
  const std::string cert = dis::format_certificate(result.best, args.seed);
  if (!result.success) {
    std::cout << "# best-effort: no society with a<=" << args.target
              << " found; best objective excess=" << result.objective.excess
              << " missing=" << result.objective.missing
              << " moves=" << result.moves << '\n'
              << cert;
    return kFailed;
  }
  std::cout << cert << "# run=" << result.run << " moves=" << result.moves
            << '\n';
  if (!args.out.empty()) std::ofstream(args.out) << cert;
  if (result.extraordinary) std::cout << "# EXTRAORDINARY: ratio below 1/3\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double-interval societies: strings, bounds, search, verification"};
  app.require_subcommand(1);

  std::string diameter_input;
  auto* diameter_cmd = app.add_subcommand("diameter", "Diameter of a double-n string");
  diameter_cmd->add_option("string", diameter_input, "String or file")->required();

  int delta_n = 0;
  int delta_limit = 8;
  int delta_jobs = 1;
  bool no_prefix_pruning = false;
  auto* delta_cmd = app.add_subcommand("delta", "Exhaustive minimum diameter");
  delta_cmd->add_option("n", delta_n, "Number of symbols")->required();
  delta_cmd->add_option("--limit", delta_limit, "Largest n to enumerate");
  delta_cmd->add_option("--jobs", delta_jobs, "Worker threads");
  delta_cmd->add_flag("--no-prefix-pruning", no_prefix_pruning,
                      "Disable the distinct-prefix rule");

  std::string method = "quarter";
  int construct_n = 0;
  std::optional<int> width;
  std::string emit = "string";
  auto* construct_cmd = app.add_subcommand("construct", "Build a double-n string");
  construct_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"quarter", "thirteen"}));
  construct_cmd->add_option("n", construct_n)->required();
  construct_cmd->add_option("--width", width, "Interval width for --emit society");
  construct_cmd->add_option("--emit", emit)
      ->check(CLI::IsMember({"string", "society"}));

  std::string verify_file;
  std::string format = "endpoints";
  std::optional<int> claim;
  bool corpus = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate or society");
  verify_cmd->add_option("file", verify_file);
  verify_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"endpoints", "society"}));
  verify_cmd->add_option("--claim", claim, "Claimed approval number");
  verify_cmd->add_flag("--paper-corpus", corpus,
                       "Verify the built-in reference corpus");

  std::string a_range = "2..12";
  std::optional<std::int64_t> bound_n;
  bool csv = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Approval lower bounds");
  bounds_cmd->add_option("--a-range", a_range, "Approval range LO..HI");
  bounds_cmd->add_option("--n", bound_n, "Society size");
  bounds_cmd->add_flag("--csv", csv);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Endpoint-swap local search");
  search_cmd->add_option("n", search.n)->required();
  search_cmd->add_option("--target", search.target)->required();
  search_cmd->add_option("--seed", search.seed);
  search_cmd->add_option("--iters", search.iters, "Moves per run");
  search_cmd->add_option("--restarts", search.restarts, "Number of runs");
  search_cmd->add_option("--sideways", search.sideways);
  search_cmd->add_option("--jobs", search.jobs);
  search_cmd->add_option("--out", search.out, "Also write the certificate here");
  search_cmd->add_option("--preserve-dir", search.preserve_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*diameter_cmd) return run_diameter(diameter_input);
    if (*delta_cmd) return run_delta(delta_n, delta_limit, delta_jobs, no_prefix_pruning);
    if (*construct_cmd) return run_construct(method, construct_n, width, emit);
    if (*verify_cmd) return run_verify(verify_file, format, claim, corpus);
    if (*bounds_cmd) return run_bounds(a_range, bound_n, csv);
    if (*search_cmd) return run_search(search);
  } catch (const dis::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
