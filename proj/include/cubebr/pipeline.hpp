#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "cubebr/rational.hpp"

namespace cubebr {

struct PointInput {
  Rat r, s;
  std::string curve = "E";  // "E" or "E'", on the sixth-power-free model
};

struct JobConfig {
  std::string field = "Q";  // "Q" or "Q(omega)"
  bool diagonal = true;
  Rat a = 1, b = 1;
  std::array<Rat, 4> coeffs{};             // A, B, C, D of A X^3 + 3B X^2 Y + 3C X Y^2 + D Y^3
  std::string normalization = "normalized";  // or "raw": coefficients of X^3, X^2Y, XY^2, Y^3
  std::optional<long> rank, rank_L;
  std::string rank_citation;
  std::vector<PointInput> extra_points;
  long search_bound = 10000;
  long denom_bound = 8;
  std::vector<Int> invariant_primes;
  bool verify_clifford = false;
  int clifford_trials = 25;
  std::vector<std::uint64_t> clifford_fields{7, 13, 31, 61};
  std::uint64_t seed = 1;
  nlohmann::json echo;
};

JobConfig parse_config(const nlohmann::json& j);
JobConfig load_config(const std::string& path);

struct JobResult {
  nlohmann::json report;
  std::string status;  // "proved", "lower-bound-only", "needs-rank", "inconsistent"
  int exit_code = 0;   // 0 proved, 2 lower-bound-only or needs-rank, 1 inconsistent
};

JobResult run_job(const JobConfig& cfg);

// Clifford identity suite only.
JobResult run_verify(const JobConfig& cfg);

// Serialized report text: sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json& report);

}  // namespace cubebr
