#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arborist/backorbit.hpp"
#include "arborist/errors.hpp"
#include "arborist/search.hpp"
#include "arborist/serialize.hpp"

using namespace arborist;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 1;

Family parse_family(int n) {
  if (n != 1 && n != 2) throw InvalidInput("family must be 1 or 2");
  return family_from_number(n);
}

double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rational::parse(text).to_double();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("malformed number '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw InvalidInput("malformed number '" + text + "'");
  return v;
}

// RE or RE,IM where each part is a decimal or a rational r/s.
ComplexPoint parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

void write_bytes(const std::string& path, const void* data, std::size_t size) {
  if (path == "-") {
    std::fwrite(data, 1, size, stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) throw InvalidInput("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arboreal Galois certification for x^2 + c with preperiodic base points"};
  app.require_subcommand(1);

  int family = 1;
  std::string a_text;
  std::size_t depth = kDefaultAuditDepth;

  auto* verify = app.add_subcommand("verify", "Certify one base point; prints the verdict as JSON");
  verify->add_option("--family", family, "1 or 2")->required();
  verify->add_option("--a", a_text, "Base point r/s (use --a=-r/s for negatives)")->required();
  verify->add_option("--depth", depth, "Audit / fallback depth")->check(CLI::PositiveNumber);

  std::size_t orbit_depth = kDefaultDepth;
  std::vector<std::string> prime_texts;
  auto* orbit = app.add_subcommand("orbit", "Adjusted critical orbit with valuation, sign and congruence checks");
  orbit->add_option("--family", family, "1 or 2")->required();
  orbit->add_option("--a", a_text, "Base point r/s")->required();
  orbit->add_option("--depth", orbit_depth, "Number of terms")->check(CLI::PositiveNumber);
  orbit->add_option("--primes", prime_texts, "Primes for the valuation checks")->delimiter(',');

  std::vector<std::string> value_texts;
  bool oracle = false;
  auto* independence = app.add_subcommand("independence", "Multiplicative independence modulo squares");
  independence->add_option("--values", value_texts, "Comma-separated nonzero rationals")
      ->required()
      ->delimiter(',');
  independence->add_flag("--oracle", oracle, "Use exhaustive subset search instead of elimination");

  SearchConfig search_cfg;
  std::vector<int> families;
  std::string out_path;
  auto* search_cmd = app.add_subcommand("search", "Certify every base point up to a height, appending JSONL rows");
  search_cmd->add_option("--height", search_cfg.height, "Maximum of |r| and s")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--family", families, "Families to search (default both)")->delimiter(',');
  search_cmd->add_option("--out", out_path, "JSONL output, resumed if present")->required();
  search_cmd->add_option("--workers", search_cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--depth", search_cfg.depth, "Audit / fallback depth")->check(CLI::PositiveNumber);

  RenderConfig render;
  std::string c_text;
  std::string julia_a = "0";
  std::string csv_path;
  auto* julia = app.add_subcommand("julia", "Backward-orbit Julia set as a binary PGM");
  julia->add_option("--c", c_text, "RE[,IM]")->required();
  julia->add_option("--a", julia_a, "Starting point RE[,IM]")->required();
  julia->add_option("--points", render.n_points, "Points kept after burn-in")->check(CLI::PositiveNumber);
  julia->add_option("--seed", render.seed, "Generator seed");
  julia->add_option("--burn-in", render.burn_in, "Points discarded first");
  julia->add_option("--width", render.width, "Image width")->check(CLI::PositiveNumber);
  julia->add_option("--height", render.height, "Image height")->check(CLI::PositiveNumber);
  julia->add_option("--out", out_path, "PGM path, - for stdout")->required();
  julia->add_option("--csv", csv_path, "Also write the points as re,im rows");

  std::string in_path;
  auto* report = app.add_subcommand("report", "Status and condition tallies of a search file");
  report->add_option("--in", in_path, "JSONL file from search")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      const Verdict v = certify(Rational::parse(a_text), parse_family(family), depth);
      std::cout << to_json(v).dump() << '\n';
    } else if (*orbit) {
      const Rational a = Rational::parse(a_text);
      const QuadMap map = parse_family(family) == Family::Family1 ? family1(a) : family2(a);
      const AdjustedOrbit o = d_sequence(map, orbit_depth);
      std::vector<Integer> primes;
      for (const std::string& t : prime_texts) {
        const Rational p = Rational::parse(t);
        if (!p.is_integer() || primality(p.num()) != Primality::Prime) {
          throw InvalidInput("'" + t + "' is not a prime");
        }
        primes.push_back(p.num());
      }
      if (primes.empty()) primes = default_report_primes(o);
      std::cout << orbit_report(o, primes).dump(2) << '\n';
    } else if (*independence) {
      std::vector<Rational> values;
      for (const std::string& t : value_texts) values.push_back(Rational::parse(t));
      const IndependenceResult r = oracle ? brute_force_independent(values) : two_independent(values);
      std::cout << to_json(r, values).dump() << '\n';
    } else if (*search_cmd) {
      if (!families.empty()) {
        search_cfg.families.clear();
        for (int f : families) search_cfg.families.push_back(parse_family(f));
      }
      search_cfg.output = out_path;
      const SearchSummary summary = search(search_cfg);
      std::cout << "skipped " << summary.rows_skipped << " existing rows\n" << format_report(summary);
    } else if (*julia) {
      const std::vector<ComplexPoint> points = sample_backward(parse_complex(c_text), parse_complex(julia_a), render);
      const std::vector<std::uint8_t> pgm = render_pgm(points, render);
      write_bytes(out_path, pgm.data(), pgm.size());
      if (!csv_path.empty()) {
        const std::string csv = points_csv(points);
        write_bytes(csv_path, csv.data(), csv.size());
      }
      if (out_path != "-") {
        std::cout << "lit " << lit_pixels(pgm, render) << " of " << render.width * render.height << " pixels\n";
      }
    } else if (*report) {
      std::cout << format_report(tally(in_path));
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
