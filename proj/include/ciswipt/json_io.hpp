// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.
//
// JSON round-trips for the data the CLI moves between runs: channel
// instances, solved precoders with the context they were solved under,
// sweep configs, and audit/SER reports. Complex numbers travel as
// [re, im] pairs.

#pragma once

#include "ciswipt/bench.hpp"
#include "ciswipt/model.hpp"
#include "ciswipt/verify.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace ciswipt::io {

/// A solved precoder plus everything needed to re-audit it.
struct SolutionEnvelope {
  std::string scheme;  // CLI token: ci-dc | ci-sub | ci-sinr | conv-sca | conv-sinr
  PrecoderStatus status = PrecoderStatus::Infeasible;
  double iterations = 0.0;
  bool is_ci = true;
  CiSolution ci;
  ConventionalSolution conv;
  std::vector<int> frame_symbols;  // data frame the symbol-level design targets
  double sinr_db = 0.0;
  double eh_db = 0.0;
  double n0 = 1.0;
  double nc = 1.0;
  int modulation = 4;
};

bench::Scheme scheme_from_token(const std::string& token);
std::string scheme_token(bench::Scheme scheme);

nlohmann::json channels_to_json(const ChannelInstance& channels);
/// Accepts either the full object form or a bare row-of-rows array.
ChannelInstance channels_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const SolutionEnvelope& envelope);
SolutionEnvelope solution_from_json(const nlohmann::json& j);

bench::SweepConfig sweep_config_from_json(const nlohmann::json& j);

nlohmann::json slack_report_to_json(const verify::SlackReport& report);
nlohmann::json ser_to_json(const verify::SerResult& result);

nlohmann::json load_json(const std::string& path);
void save_text(const std::string& text, const std::string& path);

}  // namespace ciswipt::io
