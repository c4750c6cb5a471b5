// SPDX-License-Identifier: Apache-2.0
//
// Part of ci-swipt, a transmit-precoder design library for joint wireless
// information and power transfer in the MISO downlink.

#include "ciswipt/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ciswipt::io {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("json: complex entries must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json cvector_to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVector cvector_from_json(const json& j) {
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) =
      complex_from_json(j[i]);
  return v;
}

std::string status_token(PrecoderStatus status) { return to_string(status); }

PrecoderStatus status_from_token(const std::string& token) {
  if (token == "OPTIMAL") return PrecoderStatus::Optimal;
  if (token == "INFEASIBLE") return PrecoderStatus::Infeasible;
  if (token == "MAX_ITER") return PrecoderStatus::MaxIter;
  throw std::invalid_argument("json: unknown solver status '" + token + "'");
}

}  // namespace

bench::Scheme scheme_from_token(const std::string& token) {
  if (token == "ci-dc") return bench::Scheme::CiDc;
  if (token == "ci-sub") return bench::Scheme::CiSubopt;
  if (token == "ci-sinr") return bench::Scheme::CiSinrOnly;
  if (token == "conv-sca") return bench::Scheme::ConvSca;
  if (token == "conv-sinr") return bench::Scheme::ConvSinrOnly;
  throw std::invalid_argument("unknown scheme token '" + token + "'");
}

std::string scheme_token(bench::Scheme scheme) {
  switch (scheme) {
    case bench::Scheme::CiDc: return "ci-dc";
    case bench::Scheme::CiSubopt: return "ci-sub";
    case bench::Scheme::CiSinrOnly: return "ci-sinr";
    case bench::Scheme::ConvSca: return "conv-sca";
    case bench::Scheme::ConvSinrOnly: return "conv-sinr";
  }
  throw std::invalid_argument("scheme_token: unknown scheme");
}

json channels_to_json(const ChannelInstance& channels) {
  json rows = json::array();
  for (int i = 0; i < channels.users(); ++i) {
    json row = json::array();
    for (int j = 0; j < channels.antennas(); ++j) row.push_back(complex_to_json(channels.rows(i, j)));
    rows.push_back(row);
  }
  return json{{"users", channels.users()}, {"antennas", channels.antennas()}, {"rows", rows}};
}

ChannelInstance channels_from_json(const json& j) {
  const json& rows = j.is_array() ? j : j.at("rows");
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("json: channels need rows");
  const int users = static_cast<int>(rows.size());
  const int antennas = static_cast<int>(rows[0].size());
  ChannelInstance ch;
  ch.rows.resize(users, antennas);
  for (int i = 0; i < users; ++i) {
    if (static_cast<int>(rows[i].size()) != antennas) {
      throw std::invalid_argument("json: ragged channel rows");
    }
    for (int c = 0; c < antennas; ++c) ch.rows(i, c) = complex_from_json(rows[i][c]);
  }
  ch.validate();
  return ch;
}

json solution_to_json(const SolutionEnvelope& envelope) {
  json meta{{"sinr_db", envelope.sinr_db}, {"eh_db", envelope.eh_db},
            {"n0", envelope.n0},           {"nc", envelope.nc},
            {"modulation", envelope.modulation}};
  if (envelope.is_ci) meta["frame"] = envelope.frame_symbols;
  json out{{"scheme", envelope.scheme},
           {"status", status_token(envelope.status)},
           {"iterations", envelope.iterations},
           {"rho", envelope.is_ci ? envelope.ci.rho : envelope.conv.rho},
           {"meta", meta}};
  if (envelope.is_ci) {
    out["w"] = cvector_to_json(envelope.ci.w);
  } else {
    json beams = json::array();
    for (Eigen::Index k = 0; k < envelope.conv.beams.cols(); ++k) {
      beams.push_back(cvector_to_json(envelope.conv.beams.col(k)));
    }
    out["beams"] = beams;
  }
  return out;
}

SolutionEnvelope solution_from_json(const json& j) {
  SolutionEnvelope env;
  env.scheme = j.at("scheme").get<std::string>();
  env.status = status_from_token(j.at("status").get<std::string>());
  env.iterations = j.value("iterations", 0.0);
  env.is_ci = j.contains("w");
  const json& meta = j.at("meta");
  env.sinr_db = meta.at("sinr_db").get<double>();
  env.eh_db = meta.at("eh_db").get<double>();
  env.n0 = meta.value("n0", 1.0);
  env.nc = meta.value("nc", 1.0);
  env.modulation = meta.value("modulation", 4);
  const std::vector<double> rho = j.at("rho").get<std::vector<double>>();
  if (env.is_ci) {
    env.ci.w = cvector_from_json(j.at("w"));
    env.ci.rho = rho;
    env.frame_symbols = meta.at("frame").get<std::vector<int>>();
  } else {
    const json& beams = j.at("beams");
    if (!beams.is_array() || beams.empty()) throw std::invalid_argument("json: empty beams");
    const int antennas = static_cast<int>(beams[0].size());
    env.conv.beams.resize(antennas, static_cast<int>(beams.size()));
    for (std::size_t k = 0; k < beams.size(); ++k) {
      env.conv.beams.col(static_cast<Eigen::Index>(k)) = cvector_from_json(beams[k]);
    }
    env.conv.rho = rho;
  }
  return env;
}

bench::SweepConfig sweep_config_from_json(const json& j) {
  bench::SweepConfig cfg;
  cfg.users = j.value("users", cfg.users);
  cfg.antennas = j.value("antennas", cfg.antennas);
  cfg.modulation = j.value("modulation", cfg.modulation);
  cfg.n0 = j.value("n0", cfg.n0);
  cfg.nc = j.value("nc", cfg.nc);
  if (j.contains("axis")) cfg.axis = bench::axis_from_name(j.at("axis").get<std::string>());
  if (j.contains("axis_values")) {
    cfg.axis_values = j.at("axis_values").get<std::vector<double>>();
  }
  cfg.sinr_db = j.value("sinr_db", cfg.sinr_db);
  cfg.eh_db = j.value("eh_db", cfg.eh_db);
  cfg.instances = j.value("instances", cfg.instances);
  cfg.base_seed = j.value("base_seed", cfg.base_seed);
  if (j.contains("schemes")) {
    cfg.schemes.clear();
    for (const json& name : j.at("schemes")) {
      cfg.schemes.push_back(bench::scheme_from_name(name.get<std::string>()));
    }
  }
  cfg.solver_tol = j.value("solver_tol", cfg.solver_tol);
  cfg.max_outer = j.value("max_outer", cfg.max_outer);
  cfg.dc_from_suboptimal = j.value("dc_from_suboptimal", cfg.dc_from_suboptimal);
  cfg.mean_of_db = j.value("mean_of_db", cfg.mean_of_db);
  cfg.wall_clock = j.value("wall_clock", cfg.wall_clock);
  cfg.validate();
  return cfg;
}

json slack_report_to_json(const verify::SlackReport& report) {
  json users = json::array();
  for (const verify::UserSlacks& u : report.users) {
    users.push_back(json{{"decode", u.decode}, {"harvest", u.harvest}});
  }
  return json{{"pass", report.pass}, {"min_slack", report.min_slack}, {"users", users}};
}

json ser_to_json(const verify::SerResult& result) {
  return json{{"symbols", result.symbols}, {"ser", result.ser}};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace ciswipt::io
