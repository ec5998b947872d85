#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "absspec/graph.hpp"

namespace absspec {

enum class CheckStatus { pass, fail, finding };

const char* to_string(CheckStatus s) noexcept;

struct Witness {
  std::string g6;
  double value = 0.0;  // eta_1 or lambda_1, whichever the check is about
};

// One verification record per (check, n). A fail means a paper claim is
// numerically violated beyond tolerance; a finding flags near-ties or
// anomalies that need human eyes without contradicting the paper.
struct CheckReport {
  std::string check_id;
  int n = 0;
  CheckStatus status = CheckStatus::pass;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, double>> margins;  // named, ordered
  long long runtime_ms = 0;

  bool operator==(const CheckReport& o) const;
};

struct ExtremalResult {
  int rank = 0;
  std::string graph6;
  double value = 0.0;
  double margin_to_next = 0.0;
};

// The k largest ABS spectral radii over an enumerable class, with
// representatives in stream order for tied values.
std::vector<ExtremalResult> top_k(const ClassSpec& spec, int k);

struct CheckInfo {
  std::string id;
  std::string description;
  int default_lo = 0;  // default n sweep
  int default_hi = 0;
  bool quick = false;  // included in the quick profile
};

const std::vector<CheckInfo>& check_catalog();

enum class Profile { quick, full };

struct VerifyOptions {
  std::uint64_t seed = 42;  // used by CHK_KELMANS only
  int n_lo = 0;             // 0 = check's default range
  int n_hi = 0;
};

std::vector<CheckReport> run_check(const std::string& check_id,
                                   const VerifyOptions& options = {});
std::vector<CheckReport> run_all(Profile profile,
                                 const VerifyOptions& options = {});

// One JSON object per line, fields exactly
// {check_id, n, status, witnesses:[{g6, value}], margins:{name: value},
//  runtime_ms}. Parsing inverts serialization losslessly.
std::string to_jsonl(const std::vector<CheckReport>& reports);
std::vector<CheckReport> from_jsonl(const std::string& text);

// Aggregated per-check table. Deliberately omits runtimes so identical
// inputs give byte-identical output. Every sweep is labeled as
// finite-range (or sampled) evidence, never as a proof of an all-n claim.
void print_summary(std::ostream& os, const std::vector<CheckReport>& reports);

// Random connected graph: spanning tree plus extra distinct edges.
// Deterministic for a given generator state.
Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges);

}  // namespace absspec
