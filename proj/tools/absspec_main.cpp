#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "absspec/canonical.hpp"
#include "absspec/enumeration.hpp"
#include "absspec/error.hpp"
#include "absspec/families.hpp"
#include "absspec/graph6.hpp"
#include "absspec/spectral.hpp"
#include "absspec/transforms.hpp"
#include "absspec/verify.hpp"

namespace {

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::string edges_text(const absspec::Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

// Graphs arrive either as a family token or as graph6 lines on stdin.
std::vector<absspec::Graph> input_graphs(const std::string& family_token) {
  std::vector<absspec::Graph> graphs;
  if (!family_token.empty()) {
    graphs.push_back(absspec::family_from_token(family_token));
    return graphs;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    graphs.push_back(absspec::graph6_decode(line));
  }
  if (graphs.empty()) absspec::raise(absspec::errc::bad_params, "no input graphs");
  return graphs;
}

absspec::ClassSpec class_spec(const std::string& cls, int n,
                              const std::string& filter) {
  absspec::ClassSpec spec;
  spec.n = n;
  if (cls == "bip-unicyclic") {
    spec.cycle_rank = 1;
    spec.bipartite = true;
  } else if (cls == "bicyclic") {
    spec.cycle_rank = 2;
  } else {
    absspec::raise(absspec::errc::bad_params, "unknown class " + cls);
  }
  if (!filter.empty()) {
    std::istringstream in(filter);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto parse_int = [&](std::size_t at) {
        std::size_t used = 0;
        int value = std::stoi(item.substr(at), &used);
        if (at + used != item.size())
          absspec::raise(absspec::errc::bad_params, "bad filter item " + item);
        return value;
      };
      if (item.rfind("girth=", 0) == 0)
        spec.girth_eq = parse_int(6);
      else if (item.rfind("diam<=", 0) == 0)
        spec.diameter_max = parse_int(6);
      else if (item.rfind("pendants=", 0) == 0)
        spec.pendant_eq = parse_int(9);
      else
        absspec::raise(absspec::errc::bad_params, "bad filter item " + item);
    }
  }
  return spec;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    absspec::raise(absspec::errc::bad_params, "range must look like a..b");
  std::size_t used = 0;
  int lo = std::stoi(text.substr(0, pos), &used);
  if (used != pos) absspec::raise(absspec::errc::bad_params, "bad range " + text);
  int hi = std::stoi(text.substr(pos + 2), &used);
  if (pos + 2 + used != text.size() || lo > hi)
    absspec::raise(absspec::errc::bad_params, "bad range " + text);
  return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ABS matrix toolkit: families, spectra, enumeration, verification"};
  app.require_subcommand(1);
  int precision = 6;
  app.add_option("--precision", precision, "significant digits (1..12)")
      ->check(CLI::Range(1, 12));
  // let --precision appear after the subcommand name
  app.fallthrough();

  auto* family_cmd = app.add_subcommand("family", "construct a named family graph");
  std::string family_token, family_format = "g6";
  family_cmd->add_option("token", family_token, "family token, e.g. h1:8 or binf:3,1,3")
      ->required();
  family_cmd->add_option("--format", family_format, "g6 or edges")
      ->check(CLI::IsMember({"g6", "edges"}));

  auto* spectral_cmd = app.add_subcommand("spectral", "spectral quantities of graphs");
  std::string spectral_family, spectral_matrix = "abs", spectral_what = "radius";
  spectral_cmd->add_option("--family", spectral_family, "family token instead of stdin");
  spectral_cmd->add_option("--matrix", spectral_matrix, "abs or adj")
      ->check(CLI::IsMember({"abs", "adj"}));
  spectral_cmd->add_option("--what", spectral_what,
                           "radius, spectrum, index, or charpoly-check:<name>");

  auto* enum_cmd = app.add_subcommand("enumerate", "stream a graph class as graph6");
  std::string enum_class, enum_filter;
  int enum_n = 0;
  enum_cmd->add_option("--class", enum_class, "bip-unicyclic or bicyclic")->required();
  enum_cmd->add_option("--n", enum_n, "graph order")->required();
  enum_cmd->add_option("--filter", enum_filter, "girth=G,diam<=D,pendants=P");

  auto* verify_cmd = app.add_subcommand("verify", "run paper verification checks");
  std::string verify_check = "all", verify_range, verify_out, verify_profile = "full";
  std::uint64_t verify_seed = 42;
  verify_cmd->add_option("--check", verify_check, "check id or all");
  verify_cmd->add_option("--n-range", verify_range, "restrict to a..b");
  verify_cmd->add_option("--profile", verify_profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--seed", verify_seed, "seed for randomized checks");
  verify_cmd->add_option("--out", verify_out, "write JSONL report here");

  auto* kelmans_cmd = app.add_subcommand("kelmans", "apply the Kelmans operation");
  std::string kelmans_family;
  int kelmans_u = 0, kelmans_v = 0;
  kelmans_cmd->add_option("--family", kelmans_family, "family token instead of stdin");
  kelmans_cmd->add_option("--u", kelmans_u, "vertex u")->required();
  kelmans_cmd->add_option("--v", kelmans_v, "vertex v")->required();

  auto* top_cmd = app.add_subcommand("top", "largest ABS spectral radii in a class");
  std::string top_class;
  int top_n = 0, top_k_count = 1;
  top_cmd->add_option("--class", top_class, "bip-unicyclic or bicyclic")->required();
  top_cmd->add_option("--n", top_n, "graph order")->required();
  top_cmd->add_option("--k", top_k_count, "how many ranks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(family_cmd)) {
      absspec::Graph g = absspec::family_from_token(family_token);
      std::cout << (family_format == "edges" ? edges_text(g)
                                             : absspec::graph6_encode(g))
                << "\n";
      return 0;
    }

    if (app.got_subcommand(spectral_cmd)) {
      bool any_fail = false;
      for (const auto& g : input_graphs(spectral_family)) {
        if (spectral_what.rfind("charpoly-check:", 0) == 0) {
          absspec::PaperPoly claim =
              absspec::paper_poly_from_token(spectral_what.substr(15));
          bool wants_abs = absspec::charpoly_claim_uses_abs(claim);
          if (spectral_cmd->count("--matrix") > 0 &&
              (spectral_matrix == "abs") != wants_abs)
            absspec::raise(absspec::errc::bad_params,
                           "this claim is about the " +
                               std::string(wants_abs ? "abs" : "adj") + " matrix");
          absspec::SymMatrix m =
              wants_abs ? absspec::abs_matrix(g) : absspec::adjacency_matrix(g);
          double worst = 0.0;
          bool ok = absspec::spectrum_matches_factorization(
              m, absspec::charpoly_claim_factors(claim, g.order()), 1e-8, &worst);
          std::cout << (ok ? "pass" : "fail") << " max-discrepancy "
                    << fmt(worst, precision) << "\n";
          any_fail = any_fail || !ok;
          continue;
        }
        absspec::SymMatrix m = spectral_matrix == "abs" ? absspec::abs_matrix(g)
                                                        : absspec::adjacency_matrix(g);
        if (spectral_what == "radius") {
          std::cout << fmt(absspec::spectral_radius(m), precision) << "\n";
        } else if (spectral_what == "spectrum") {
          auto sp = absspec::eigenvalues(m);
          std::string line;
          for (double v : sp.values) {
            if (!line.empty()) line += ' ';
            line += fmt(v, precision);
          }
          std::cout << line << "\n";
        } else if (spectral_what == "index") {
          if (spectral_matrix != "abs")
            absspec::raise(absspec::errc::bad_params, "index is an abs-matrix quantity");
          std::cout << fmt(absspec::abs_index(g), precision) << "\n";
        } else {
          absspec::raise(absspec::errc::bad_params, "unknown --what " + spectral_what);
        }
      }
      return any_fail ? 1 : 0;
    }

    if (app.got_subcommand(enum_cmd)) {
      absspec::for_each_in_class(
          class_spec(enum_class, enum_n, enum_filter),
          [](const absspec::Graph& g) { std::cout << absspec::graph6_encode(g) << "\n"; });
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      absspec::VerifyOptions options;
      options.seed = verify_seed;
      if (!verify_range.empty()) {
        auto [lo, hi] = parse_range(verify_range);
        options.n_lo = lo;
        options.n_hi = hi;
      }
      std::vector<absspec::CheckReport> reports =
          verify_check == "all"
              ? absspec::run_all(verify_profile == "quick" ? absspec::Profile::quick
                                                           : absspec::Profile::full,
                                 options)
              : absspec::run_check(verify_check, options);
      if (!verify_out.empty()) {
        std::ofstream out(verify_out);
        if (!out) absspec::raise(absspec::errc::bad_params, "cannot open " + verify_out);
        out << absspec::to_jsonl(reports);
      }
      absspec::print_summary(std::cout, reports);
      for (const auto& r : reports)
        if (r.status == absspec::CheckStatus::fail) return 1;
      return 0;
    }

    if (app.got_subcommand(kelmans_cmd)) {
      for (const auto& g : input_graphs(kelmans_family))
        std::cout << absspec::graph6_encode(absspec::kelmans(g, kelmans_u, kelmans_v))
                  << "\n";
      return 0;
    }

    if (app.got_subcommand(top_cmd)) {
      auto results = absspec::top_k(class_spec(top_class, top_n, ""), top_k_count);
      for (const auto& r : results)
        std::cout << r.rank << " " << fmt(r.value, precision) << " "
                  << fmt(r.margin_to_next, precision) << " " << r.graph6 << "\n";
      return 0;
    }
  } catch (const absspec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
