#include "rabbit/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rabbit/ball.hpp"
#include "rabbit/errors.hpp"
#include "rabbit/prefix.hpp"
#include "rabbit/wreath.hpp"

namespace rabbit {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::whole_word: return "whole-word";
    case Algorithm::prefix: return "prefix";
    case Algorithm::both: return "both";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "whole-word") return Algorithm::whole_word;
  if (text == "prefix") return Algorithm::prefix;
  if (text == "both") return Algorithm::both;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

namespace {

using Tally = std::vector<ClassCounts>;

PolyClass3 classify_one(const Word& w, const WreathElement& phi_w, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::whole_word: return classify_whole_word(w, phi_w);
    case Algorithm::prefix: return classify_prefix(w);
    case Algorithm::both: break;
  }
  const PolyClass3 a = classify_whole_word(w, phi_w);
  const PolyClass3 b = classify_prefix(w);
  if (a != b) {
    throw InconsistencyError("whole-word (" + std::string(label(a)) + ") and prefix (" +
                             std::string(label(b)) + ") disagree on " + display(w));
  }
  return a;
}

// Depth-first walk that carries Φ(w) along: one wreath product per letter.
class SubtreeWalker {
 public:
  SubtreeWalker(int radius, Algorithm algorithm, Tally& tally)
      : radius_(radius), algorithm_(algorithm), tally_(tally) {}

  void walk(const Word& root) {
    Word w = root;
    visit(w, phi(root));
  }

 private:
  void visit(Word& w, const WreathElement& phi_w) {
    const PolyClass3 cls = classify_one(w, phi_w, algorithm_);
    ++tally_[static_cast<std::size_t>(w.length())][static_cast<std::size_t>(cls)];
    if (w.length() >= radius_) return;
    const bool has_last = !w.is_identity();
    const Letter forbidden = has_last ? inverse_of(w.back_letter()) : Letter::x;
    for (Letter l : kLetterOrder) {
      if (has_last && l == forbidden) continue;
      w.push_back(l);
      visit(w, phi_w * phi(l));
      w.pop_back_letter();
    }
  }

  int radius_;
  Algorithm algorithm_;
  Tally& tally_;
};

}  // namespace

CensusReport run_census(int max_len, Algorithm algorithm, int workers) {
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t rows = static_cast<std::size_t>(max_len) + 1;

  const BallPartition part = partition_ball(max_len, 2);
  Tally total(rows, ClassCounts{});
  for (const auto& w : part.short_words) {
    const PolyClass3 cls = classify_one(w, phi(w), algorithm);
    ++total[static_cast<std::size_t>(w.length())][static_cast<std::size_t>(cls)];
  }

  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  std::exception_ptr failure;
  const auto worker = [&] {
    Tally local(rows, ClassCounts{});
    try {
      SubtreeWalker walker(max_len, algorithm, local);
      for (std::size_t i = next++; i < part.roots.size(); i = next++) walker.walk(part.roots[i]);
    } catch (...) {
      std::lock_guard lock(merge_mutex);
      if (!failure) failure = std::current_exception();
      return;
    }
    std::lock_guard lock(merge_mutex);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < 4; ++c) total[r][c] += local[r][c];
    }
  };

  const std::size_t thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(1, part.roots.size()));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(thread_count);
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CensusReport report;
  report.max_len = max_len;
  report.algorithm = algorithm;
  report.rows.resize(rows);
  ClassCounts running{};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < 4; ++c) running[c] += total[r][c];
    report.rows[r] = running;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string export_csv(const CensusReport& report) {
  std::string out = "ell,R3,coR3,A3,coA3,total\n";
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    const auto& row = report.rows[r];
    out += std::to_string(r);
    for (auto v : row) out += "," + std::to_string(v);
    out += "," + std::to_string(std::accumulate(row.begin(), row.end(), std::uint64_t{0})) + "\n";
  }
  return out;
}

std::string export_table(const CensusReport& report) {
  constexpr std::string_view kNames[] = {"R3", "coR3", "A3", "coA3"};
  std::size_t width = 2;
  for (const auto& row : report.rows) {
    const auto total = std::accumulate(row.begin(), row.end(), std::uint64_t{0});
    width = std::max(width, std::to_string(total).size());
  }
  const auto cell = [&](const std::string& s) {
    return std::string(width + 1 - std::min(width, s.size()), ' ') + s;
  };
  const auto head = [](std::string_view s) {
    std::string h(s);
    h.resize(6, ' ');
    return h + "|";
  };
  std::string out = head("ell");
  for (std::size_t r = 0; r < report.rows.size(); ++r) out += cell(std::to_string(r));
  out += "\n";
  for (std::size_t c = 0; c < 4; ++c) {
    out += head(kNames[c]);
    for (const auto& row : report.rows) out += cell(std::to_string(row[c]));
    out += "\n";
  }
  out += head("total");
  for (const auto& row : report.rows) {
    out += cell(std::to_string(std::accumulate(row.begin(), row.end(), std::uint64_t{0})));
  }
  out += "\n";
  return out;
}

std::vector<std::array<Ratio, 4>> ratio_trend(const CensusReport& report) {
  std::vector<std::array<Ratio, 4>> out;
  out.reserve(report.rows.size());
  for (const auto& row : report.rows) {
    const auto total = std::accumulate(row.begin(), row.end(), std::uint64_t{0});
    std::array<Ratio, 4> r{};
    for (std::size_t c = 0; c < 4; ++c) r[c] = {row[c], total};
    out.push_back(r);
  }
  return out;
}

}  // namespace rabbit
