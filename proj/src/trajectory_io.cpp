#include "gaitkit/trajectory_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaitkit/errors.hpp"
#include "json_detail.hpp"

namespace gaitkit {

using nlohmann::json;

namespace {

constexpr std::string_view kHeader =
    "t,l_hip_roll,l_hip_pitch,l_knee,l_ankle_pitch,l_ankle_roll,"
    "r_hip_roll,r_hip_pitch,r_knee,r_ankle_pitch,r_ankle_roll";

constexpr double kGridSlack = 1e-9;

double parse_field(std::string_view token, std::size_t row, std::size_t col) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() ||
      !std::isfinite(v)) {
    throw MalformedInputError("bad numeric field at row " + std::to_string(row) +
                              ", column " + std::to_string(col));
  }
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw MalformedInputError("cannot open for writing: " + path);
  }
  return out;
}

PhaseKind kind_from_string(const std::string& s) {
  if (s == "initial_stance") return PhaseKind::InitialStance;
  if (s == "lateral_shift") return PhaseKind::LateralShift;
  if (s == "half_step") return PhaseKind::HalfStep;
  if (s == "shift_and_advance") return PhaseKind::ShiftAndAdvance;
  if (s == "full_step") return PhaseKind::FullStep;
  if (s == "final_half_step") return PhaseKind::FinalHalfStep;
  if (s == "recenter") return PhaseKind::Recenter;
  throw MalformedInputError("unknown phase kind \"" + s + "\"");
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // no "-0" in output
  std::array<char, 32> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream out = open_out(path);
  out << kHeader << '\n';
  for (const JointPose& s : traj.samples) {
    const LegAngles& l = s.left;
    const LegAngles& r = s.right;
    const double row[11] = {s.t,
                            l.hip_roll, l.hip_pitch, l.knee_pitch, l.ankle_pitch, l.ankle_roll,
                            r.hip_roll, r.hip_pitch, r.knee_pitch, r.ankle_pitch, r.ankle_roll};
    for (int i = 0; i < 11; ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  if (!out) {
    throw MalformedInputError("write failed: " + path);
  }
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MalformedInputError("cannot open trajectory: " + path);
  }
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw MalformedInputError("trajectory header mismatch in " + path);
  }

  Trajectory traj;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) {
      throw MalformedInputError("empty row " + std::to_string(row));
    }
    double fields[11];
    std::size_t col = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      const std::string_view token =
          std::string_view(line).substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
      if (col >= 11) {
        throw MalformedInputError("too many fields at row " + std::to_string(row));
      }
      fields[col] = parse_field(token, row, col);
      ++col;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (col != 11) {
      throw MalformedInputError("expected 11 fields at row " + std::to_string(row) +
                                ", got " + std::to_string(col));
    }
    JointPose pose;
    pose.t = fields[0];
    pose.left = {fields[1], fields[2], fields[3], fields[4], fields[5]};
    pose.right = {fields[6], fields[7], fields[8], fields[9], fields[10]};
    if (pose.left.knee_pitch < 0.0 || pose.right.knee_pitch < 0.0) {
      throw MalformedInputError("negative knee at row " + std::to_string(row));
    }
    traj.samples.push_back(pose);
  }
  if (traj.samples.empty()) {
    throw MalformedInputError("trajectory has no samples: " + path);
  }
  if (std::abs(traj.samples.front().t) > kGridSlack) {
    throw MalformedInputError("trajectory must start at t=0");
  }

  // The grid must be uniform; recover the rate from it.
  if (traj.samples.size() >= 2) {
    const double dt = traj.samples[1].t - traj.samples[0].t;
    if (dt <= 0.0) {
      throw MalformedInputError("non-increasing time at row 3");
    }
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
      if (std::abs(traj.samples[i].t - static_cast<double>(i) * dt) > kGridSlack) {
        throw MalformedInputError("non-uniform time grid at row " +
                                  std::to_string(i + 2));
      }
    }
    traj.sample_rate = 1.0 / dt;
  }
  return traj;
}

void write_manifest(const Manifest& manifest, const std::string& path) {
  json phases = json::array();
  for (const GaitPhase& ph : manifest.phases) {
    phases.push_back(json{{"kind", phase_kind_name(ph.kind)},
                          {"leg", leg_name(ph.leg)},
                          {"advance", ph.advance},
                          {"start", ph.start},
                          {"duration", ph.duration}});
  }
  const json j{{"config_hash", manifest.config_hash},
               {"geometry", detail::geometry_to_json(manifest.geometry)},
               {"gait", detail::gait_to_json(manifest.gait, manifest.geometry)},
               {"sample_rate", manifest.sample_rate},
               {"n_samples", manifest.n_samples},
               {"phases", phases}};
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) {
    throw MalformedInputError("write failed: " + path);
  }
}

Manifest read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MalformedInputError("cannot open manifest: " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInputError("manifest parse error in " + path + ": " + e.what());
  }

  Manifest m;
  try {
    detail::reject_unknown_keys(j,
                                {"config_hash", "geometry", "gait", "sample_rate",
                                 "n_samples", "phases"},
                                "manifest");
    m.config_hash = j.at("config_hash").get<std::string>();
    detail::parse_geometry(j.at("geometry"), m.geometry);
    detail::parse_gait(j.at("gait"), m.gait);
    m.sample_rate = j.at("sample_rate").get<double>();
    m.n_samples = j.at("n_samples").get<std::size_t>();
    for (const json& pj : j.at("phases")) {
      detail::reject_unknown_keys(pj, {"kind", "leg", "advance", "start", "duration"},
                                  "phase");
      GaitPhase ph;
      ph.kind = kind_from_string(pj.at("kind").get<std::string>());
      const std::string leg = pj.at("leg").get<std::string>();
      if (leg != "left" && leg != "right") {
        throw MalformedInputError("unknown leg \"" + leg + "\"");
      }
      ph.leg = leg == "left" ? Leg::Left : Leg::Right;
      ph.advance = pj.at("advance").get<double>();
      ph.start = pj.at("start").get<double>();
      ph.duration = pj.at("duration").get<double>();
      m.phases.push_back(ph);
    }
  } catch (const json::exception& e) {
    throw MalformedInputError("manifest field error in " + path + ": " + e.what());
  } catch (const ConfigError& e) {
    throw MalformedInputError("manifest field error in " + path + ": " + e.what());
  }
  return m;
}

void write_report_csv(const StabilityReport& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "t,margin,support\n";
  for (const MarginSample& s : report.samples) {
    out << format_double(s.t) << ',' << format_double(s.margin) << ','
        << (s.double_support ? "double" : "single") << '\n';
  }
  if (!out) {
    throw MalformedInputError("write failed: " + path);
  }
}

}  // namespace gaitkit
