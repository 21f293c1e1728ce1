#include "arborist/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

#include "arborist/errors.hpp"

namespace arborist {

namespace {

constexpr std::size_t kBatch = 256;

using Key = std::pair<std::string, int>;

struct Work {
  Rational a;
  Family family;
};

void count(SearchSummary& summary, const std::string& status, const Json& condition) {
  ++summary.by_status[status];
  if (condition.is_string()) ++summary.by_condition[condition.get<std::string>()];
}

// Reads an existing output file; empty set when it does not exist.
std::set<Key> existing_keys(const std::filesystem::path& path, SearchSummary* summary) {
  std::set<Key> keys;
  std::ifstream in(path);
  if (!in) return keys;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error&) {
      throw InvalidInput(path.string() + ":" + std::to_string(lineno) + ": not JSON");
    }
    if (lineno == 1) {
      if (!j.contains("schema") || j["schema"] != kSchema) {
        throw InvalidInput(path.string() + ": missing or foreign schema header");
      }
      continue;
    }
    if (!j.contains("a") || !j.contains("family") || !j.contains("verdict")) {
      throw InvalidInput(path.string() + ":" + std::to_string(lineno) + ": not a search row");
    }
    keys.emplace(j["a"].get<std::string>(), j["family"].get<int>());
    if (summary != nullptr) {
      const Json& v = j["verdict"];
      count(*summary, v["status"].get<std::string>(), v["condition"]);
      ++summary->rows_written;
    }
  }
  return keys;
}

}  // namespace

std::vector<Rational> enumerate_rationals(unsigned long height) {
  if (height == 0) throw InvalidInput("height must be at least 1");
  std::vector<Rational> out;
  for (unsigned long s = 1; s <= height; ++s) {
    for (long r = -static_cast<long>(height); r <= static_cast<long>(height); ++r) {
      if (r == 0) continue;
      if (std::gcd(static_cast<unsigned long>(r < 0 ? -r : r), s) != 1) continue;
      out.emplace_back(Integer(r), Integer(s));
    }
  }
  return out;
}

bool admissible(const Rational& a, Family family) {
  switch (family) {
    case Family::Family1: return !a.is_zero() && a != Rational(-1);
    case Family::Family2: return !a.is_zero() && a != Rational(Integer(1), Integer(2));
    case Family::Custom: return false;
  }
  return false;
}

SearchRow search_row(const Rational& a, Family family, std::size_t depth) {
  const auto start = std::chrono::steady_clock::now();
  SearchRow row;
  row.verdict = certify(a, family, depth);
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

Json to_json(const SearchRow& row) {
  Json out;
  out["a"] = row.verdict.a.to_string();
  out["family"] = family_number(row.verdict.family);
  out["r"] = row.verdict.a.num().get_str();
  out["s"] = row.verdict.a.den().get_str();
  out["verdict"] = to_json(row.verdict);
  out["ms"] = row.ms;
  return out;
}

SearchSummary search(const SearchConfig& cfg) {
  if (cfg.height == 0) throw InvalidInput("height must be at least 1");
  if (cfg.depth == 0) throw InvalidInput("depth must be positive");
  if (cfg.workers == 0) throw InvalidInput("workers must be positive");
  if (cfg.families.empty()) throw InvalidInput("no family selected");
  if (cfg.output.empty()) throw InvalidInput("output path required");

  SearchSummary summary;
  const std::set<Key> done = existing_keys(cfg.output, nullptr);
  const bool fresh = !std::filesystem::exists(cfg.output) || std::filesystem::file_size(cfg.output) == 0;

  std::vector<Work> work;
  for (const Rational& a : enumerate_rationals(cfg.height)) {
    for (Family family : cfg.families) {
      if (!admissible(a, family)) continue;
      if (done.contains(Key{a.to_string(), family_number(family)})) {
        ++summary.rows_skipped;
        continue;
      }
      work.push_back({a, family});
    }
  }

  std::ofstream out(cfg.output, std::ios::app);
  if (!out) throw InvalidInput("cannot open " + cfg.output.string() + " for writing");
  if (fresh) out << Json{{"schema", kSchema}}.dump() << '\n';

  for (std::size_t begin = 0; begin < work.size(); begin += kBatch) {
    const std::size_t end = std::min(work.size(), begin + kBatch);
    std::vector<std::string> lines(end - begin);
    std::atomic<std::size_t> next{begin};
    auto run = [&] {
      for (std::size_t i = next++; i < end; i = next++) {
        lines[i - begin] = to_json(search_row(work[i].a, work[i].family, cfg.depth)).dump();
      }
    };
    // An exception escaping a worker would terminate; capture the first one.
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto guarded = [&] {
      try {
        run();
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next = end;
      }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < cfg.workers; ++w) threads.emplace_back(guarded);
    guarded();
    for (std::thread& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    for (const std::string& line : lines) {
      out << line << '\n';
      const Json row = Json::parse(line);
      count(summary, row["verdict"]["status"].get<std::string>(), row["verdict"]["condition"]);
      ++summary.rows_written;
    }
    out.flush();
    if (!out) throw InvalidInput("write to " + cfg.output.string() + " failed");
  }
  return summary;
}

SearchSummary tally(const std::filesystem::path& jsonl) {
  if (!std::filesystem::exists(jsonl)) throw InvalidInput("no such file: " + jsonl.string());
  SearchSummary summary;
  existing_keys(jsonl, &summary);
  return summary;
}

std::string format_report(const SearchSummary& summary) {
  std::size_t width = 9;
  for (const auto& [k, v] : summary.by_status) width = std::max(width, k.size());
  for (const auto& [k, v] : summary.by_condition) width = std::max(width, k.size());
  char buf[160];
  std::string out;
  auto line = [&](const std::string& label, std::size_t n) {
    std::snprintf(buf, sizeof buf, "  %-*s %8zu\n", static_cast<int>(width), label.c_str(), n);
    out += buf;
  };
  line("rows", summary.rows_written);
  out += "status\n";
  for (const auto& [k, v] : summary.by_status) line(k, v);
  out += "condition\n";
  if (summary.by_condition.empty()) out += "  (none)\n";
  for (const auto& [k, v] : summary.by_condition) line(k, v);
  return out;
}

}  // namespace arborist
