// verify: command-line runner for the named checks.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "chowkit/bott_c3.hpp"
#include "chowkit/catalog.hpp"
#include "chowkit/checks.hpp"
#include "chowkit/pencil.hpp"
#include "chowkit/ring_document.hpp"

using namespace chowkit;

namespace {

/// Accepts "3", "§3" and "props".
std::string normalize_section(std::string s) {
  const std::string mark = "\xC2\xA7";
  if (s.rfind(mark, 0) == 0) s = s.substr(mark.size());
  if (s == "1" || s == "2" || s == "3" || s == "4" || s == "props") return s;
  throw CLI::ValidationError("--section", "expected 1, 2, 3, 4, §N or props, got '" + s + "'");
}

void print_text(const std::vector<CheckReport>& reports, std::uint64_t seed, bool timing) {
  int failed = 0;
  for (const auto& r : reports) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " [section " << r.section << ", "
              << runtime_name(r.runtime) << "]";
    if (timing) std::cout << ' ' << r.millis << " ms";
    std::cout << "\n  ref: " << r.ref << '\n';
    for (const auto& line : r.transcript) std::cout << "  " << line << '\n';
    failed += !r.passed;
  }
  std::cout << "summary: " << reports.size() - failed << " passed, " << failed << " failed, seed " << seed << '\n';
}

void print_json(const std::vector<CheckReport>& reports, std::uint64_t seed, bool timing) {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  auto& arr = doc["checks"] = nlohmann::ordered_json::array();
  int failed = 0;
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["name"] = r.name;
    o["section"] = r.section;
    o["ref"] = r.ref;
    o["runtime"] = runtime_name(r.runtime);
    o["status"] = r.passed ? "pass" : "fail";
    o["transcript"] = r.transcript;
    if (timing) o["millis"] = r.millis;
    arr.push_back(std::move(o));
    failed += !r.passed;
  }
  doc["passed"] = reports.size() - failed;
  doc["failed"] = failed;
  std::cout << doc.dump(2) << '\n';
}

Vec3 parse_weight(const std::string& text) {
  Vec3 w{};
  std::stringstream in(text);
  std::string part;
  int k = 0;
  while (std::getline(in, part, ',')) {
    if (k == 3) throw CLI::ValidationError("--weight", "expected three integers");
    try {
      std::size_t used = 0;
      w[k] = std::stol(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--weight", "'" + part + "' is not an integer");
    }
    ++k;
  }
  if (k != 3) throw CLI::ValidationError("--weight", "expected three integers");
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of intersection-theoretic and linear-algebraic claims"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the registered checks");

  auto* run = app.add_subcommand("run", "Run checks");
  std::vector<std::string> names;
  bool all = false, slow = false, no_timing = false;
  std::string section, format = "text";
  unsigned workers = 1;
  std::uint64_t seed = 1;
  run->add_option("--check", names, "Check name (repeatable)");
  run->add_flag("--all", all, "Run every check (fast ones unless --slow)");
  run->add_option("--section", section, "Restrict --all to a part: 1-4, §N or props");
  run->add_flag("--slow", slow, "Include slow checks in --all");
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));
  run->add_option("--seed", seed, "Seed for sampled checks");
  run->add_flag("--no-timing", no_timing, "Omit timings so output is reproducible byte for byte");

  auto* pencil = app.add_subcommand("pencil", "The net of skew forms");
  bool dump = false;
  pencil->add_flag("--dump", dump, "Print the built-in matrices exactly as embedded");

  auto* bott = app.add_subcommand("bott", "Cohomology of a homogeneous bundle on LG(3,6)");
  std::string weight;
  bott->add_option("--weight", weight, "Weight a,b,c with a >= b >= c")->required();

  auto* ring = app.add_subcommand("ring", "Export a catalog ring as a ring document");
  std::string label;
  ring->add_option("label", label, "P<n>, P1^<k>, G26, Gw36, B, FB, I, Pi or pt")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& c : registry())
        std::cout << c.name << '\t' << c.section << '\t' << runtime_name(c.runtime) << '\t' << c.ref << '\n';
      return 0;
    }

    if (*run) {
      if (all == !names.empty()) {
        std::cerr << "error: give either --all or --check <name>\n";
        return 2;
      }
      std::vector<const Check*> selected;
      if (all) {
        const std::string sec = section.empty() ? "" : normalize_section(section);
        for (const auto& c : registry())
          if ((sec.empty() || c.section == sec) && (slow || c.runtime == Runtime::Fast)) selected.push_back(&c);
      } else {
        if (!section.empty()) {
          std::cerr << "error: --section needs --all\n";
          return 2;
        }
        for (const auto& n : names) {
          const Check* c = find_check(n);
          if (!c) {
            std::cerr << "error: unknown check '" << n << "'\n";
            return 2;
          }
          selected.push_back(c);
        }
      }
      const auto reports = run_checks(selected, CheckContext{seed}, workers);
      if (format == "json")
        print_json(reports, seed, !no_timing);
      else
        print_text(reports, seed, !no_timing);
      for (const auto& r : reports)
        if (!r.passed) return 1;
      return 0;
    }

    if (*pencil) {
      if (dump) {
        std::cout << kBetaText << '\n' << kFlatteningText;
        return 0;
      }
      const auto cert = constant_rank_certificate(SkewPencil::beta());
      std::cout << "Pf(beta) = " << cert.pfaffian.to_string() << '\n';
      std::cout << "gcd of 4x4 sub-Pfaffians = " << cert.gcd.to_string() << '\n';
      std::cout << "constant rank 4: " << (cert.certified ? "certified" : "not certified") << '\n';
      std::cout << "rank of the 12x12 matrix = " << rank(printed_flattening()) << '\n';
      return cert.certified ? 0 : 1;
    }

    if (*bott) {
      const Vec3 a = parse_weight(weight);
      const WeightC3 w(a[0], a[1], a[2]);
      if (auto wit = acyclicity_witness(w)) {
        std::cout << w.to_string() << ": acyclic, " << wit->describe() << '\n';
      } else {
        const auto c = cohomology(w);
        std::cout << w.to_string() << ": H^" << c->degree << " of dimension " << c->dimension.get_str()
                  << " (dominant " << c->dominant.to_string() << ")\n";
      }
      return 0;
    }

    if (*ring) {
      std::cout << export_ring(*catalog(label));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
