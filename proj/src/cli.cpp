#include "rabbit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "rabbit/acceptance.hpp"
#include "rabbit/census.hpp"
#include "rabbit/errors.hpp"
#include "rabbit/nineadic.hpp"
#include "rabbit/nucleus.hpp"
#include "rabbit/prefix.hpp"
#include "rabbit/word.hpp"
#include "rabbit/wreath.hpp"

namespace rabbit {

namespace {

constexpr long kCrosscheckWordLimit = 1000000;

struct Options {
  std::string word;
  std::string algorithm = "both";
  bool trace = false;

  std::string m;
  std::string family = "n3";
  bool crosscheck = false;

  int max_len = 9;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string format = "csv";
  std::string output;

  std::size_t budget = 10000;

  std::vector<int> only;
};

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const Word w = parse(o.word);
  const Algorithm algorithm = parse_algorithm(o.algorithm);
  std::optional<PolyClass3> whole, pre;
  if (algorithm != Algorithm::prefix) {
    TraceFn trace;
    if (o.trace) trace = [&](const Word& g) { err << "psi: " << display(g) << '\n'; };
    whole = classify_whole_word(w, trace);
  }
  if (algorithm != Algorithm::whole_word) {
    PrefixTraceFn trace;
    if (o.trace) {
      trace = [&](const Word& g, const RewriteRule* rule) {
        err << "P: " << display(g);
        if (rule) err << "  [" << rule->name << "]";
        err << '\n';
      };
    }
    pre = classify_prefix(w, RuleSet::standard(), trace);
  }
  if (whole && pre && *whole != *pre) {
    throw InconsistencyError("whole-word gives " + std::string(label(*whole)) + ", prefix gives " +
                             std::string(label(*pre)));
  }
  out << label(whole ? *whole : *pre) << '\n';
  return kExitOk;
}

mpz_class parse_integer(const std::string& text) {
  const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](unsigned char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return mpz_class(text[0] == '+' ? text.substr(1) : text, 10);
}

int cmd_power(const Options& o, std::ostream& out, std::ostream& err) {
  const mpz_class m = parse_integer(o.m);
  const DigitExpansion e = expand(m);
  if (o.family == "n3") {
    const PolyClass3 cls = classify_power_3(e);
    out << to_string(e) << " → " << label(cls) << '\n';
    if (!o.crosscheck) return kExitOk;
    const PolyClass3 oracle = oracle_classify_3(m);
    err << "oracle: " << label(oracle) << '\n';
    bool agree = oracle == cls;
    if (abs(m) <= kCrosscheckWordLimit) {
      const Word w = Word::power(Generator::x, m.get_si());
      const PolyClass3 whole = classify_whole_word(w);
      const PolyClass3 pre = classify_prefix(w);
      err << "whole-word: " << label(whole) << "\nprefix: " << label(pre) << '\n';
      agree = agree && whole == cls && pre == cls;
    } else {
      err << "word algorithms skipped: |m| > " << kCrosscheckWordLimit << '\n';
    }
    if (!agree) throw InconsistencyError("cross-check disagreement for m = " + m.get_str());
    return kExitOk;
  }
  const PolyClassN cls = classify_power_n(e);
  out << to_string(e) << " → " << label(cls) << '\n';
  if (o.crosscheck) {
    const PolyClassN oracle = oracle_classify_n(m);
    err << "oracle: " << label(oracle) << '\n';
    if (oracle != cls) throw InconsistencyError("cross-check disagreement for m = " + m.get_str());
  }
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
  const CensusReport report = run_census(o.max_len, parse_algorithm(o.algorithm), o.workers);
  const std::string text = o.format == "csv" ? export_csv(report) : export_table(report);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << text)) throw std::runtime_error("cannot write " + o.output);
  }
  err << "census: max-len " << o.max_len << ", " << to_string(report.algorithm) << ", "
      << o.workers << " workers, " << report.elapsed.count() << " s\n";
  return kExitOk;
}

int cmd_nucleus(const Options& o, std::ostream& out, std::ostream&) {
  const std::set<Word> n = nucleus({Word::letter(Letter::x), Word::letter(Letter::z)}, o.budget);
  std::vector<Word> sorted(n.begin(), n.end());
  std::sort(sorted.begin(), sorted.end(), shortlex_less);
  const auto k = verification_depth(n);
  out << '{';
  for (std::size_t i = 0; i < sorted.size(); ++i) out << (i ? ", " : "") << display(sorted[i]);
  out << '}';
  if (!k) {
    out << ", not verified for k <= 8\n";
    return kExitInconsistent;
  }
  out << ", verified at depth k = " << *k << '\n';
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const std::vector<int> ids = o.only.empty() ? acceptance_ids() : o.only;
  const auto results = run_acceptance(ids, out);
  const bool all = std::all_of(results.begin(), results.end(),
                               [](const CriterionResult& r) { return r.passed; });
  return all ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Thurston classes of twisted cubic rabbits", "rabbit"};
  app.require_subcommand(1);

  const auto algorithms = CLI::IsMember({"whole-word", "prefix", "both"});

  auto* classify = app.add_subcommand("classify", "Classify g R3 for a word g in x, z");
  classify->add_option("word", o.word, "Word such as \"z x^2\" (uppercase = inverse)");
  classify->add_option("--algorithm", o.algorithm, "whole-word, prefix or both")
      ->check(algorithms);
  classify->add_flag("--trace", o.trace, "Print every iterate to stderr");

  auto* power = app.add_subcommand("power", "Classify D_x^m R_n from the base-9 digits of m");
  power->add_option("m", o.m, "Integer of any size")->required();
  power->add_option("--family", o.family, "n3 or nGeq4")->check(CLI::IsMember({"n3", "nGeq4"}));
  power->add_flag("--crosscheck", o.crosscheck, "Compare against the recursion and word algorithms");

  auto* census = app.add_subcommand("census", "Class counts over the ball of radius max-len");
  census->add_option("--max-len", o.max_len, "Ball radius")->check(CLI::Range(0, 20));
  census->add_option("--algorithm", o.algorithm, "whole-word, prefix or both")->check(algorithms);
  census->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 1024));
  census->add_option("--format", o.format, "csv or table")->check(CLI::IsMember({"csv", "table"}));
  census->add_option("--output", o.output, "Write to this file instead of stdout");

  auto* nuc = app.add_subcommand("nucleus", "Compute and verify the nucleus");
  nuc->add_option("--budget", o.budget, "Vertex limit for the restriction closure")
      ->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--only", o.only, "Criterion ids to run")->check(CLI::Range(1, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out, err);
    if (power->parsed()) return cmd_power(o, out, err);
    if (census->parsed()) return cmd_census(o, out, err);
    if (nuc->parsed()) return cmd_nucleus(o, out, err);
    if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const rabbit::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitUsage;
}

}  // namespace rabbit
