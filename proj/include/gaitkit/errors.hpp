#pragma once

#include <stdexcept>
#include <string>

namespace gaitkit {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ankle target outside the leg's reachable annulus [|T-S|, T+S].
class UnreachableError : public Error {
 public:
  UnreachableError(double distance, double min_reach, double max_reach);
  double distance;
  double min_reach;
  double max_reach;
};

// A geometric construction collapsed (zero-length chord, vertical shank, ...).
class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

// A parameter struct failed validation.
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class InvalidDurationError : public Error {
 public:
  explicit InvalidDurationError(double duration);
  double duration;
};

// Swing phase argument outside [0, 1].
class PhaseOutOfRangeError : public Error {
 public:
  explicit PhaseOutOfRangeError(double u);
  double u;
};

// plan_walk hit an unreachable target; records where in the gait it happened.
class PlanError : public Error {
 public:
  PlanError(const std::string& phase, double t, const UnreachableError& cause);
  std::string phase;
  double t;
};

// No foot in contact at the queried time.
class NoContactError : public Error {
 public:
  using Error::Error;
};

// Fewer than three distinct non-collinear points for a support polygon.
class DegeneratePolygonError : public Error {
 public:
  using Error::Error;
};

// Config file missing, unparseable, or failing validation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Trajectory CSV or manifest that does not match the expected format.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaitkit
