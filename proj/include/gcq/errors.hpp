#pragma once

#include <stdexcept>
#include <string>

namespace gcq {

// Base class for all gcq error conditions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eq.-4-style amplitude is undefined: the stability radicand went negative.
struct StabilityViolation : Error {
  using Error::Error;
};

// Relaxation exceeded the step budget without the residual dropping below
// the convergence tolerance.
struct NoConvergence : Error {
  explicit NoConvergence(int steps)
      : Error("network did not converge within " + std::to_string(steps) +
              " steps"),
        steps_taken(steps) {}
  int steps_taken;
};

// A numeric buffer picked up an inf/nan.
struct NonFinite : Error {
  using Error::Error;
};

// Two dataset action symbols map to the same per-factor move tuple, or the
// symbol count exceeds the action-space capacity.
struct NonInjectiveActionMap : Error {
  using Error::Error;
};

// An action symbol has no entry in the action map.
struct UnknownAction : Error {
  explicit UnknownAction(const std::string& symbol)
      : Error("unknown action symbol: " + symbol) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// gcq_loss_learnable was invoked against a fixed codebook (or vice versa).
struct LearnableFlagMismatch : Error {
  using Error::Error;
};

// The maze's free region is not connected.
struct DisconnectedMaze : Error {
  using Error::Error;
};

// Greedy inversion stopped making progress between two observations.
struct NoProgress : Error {
  NoProgress(int pair, std::string detail)
      : Error("no greedy progress between observations " +
              std::to_string(pair) + " and " + std::to_string(pair + 1) +
              ": " + detail),
        pair_index(pair) {}
  int pair_index;
};

// Configuration parse/validation failure; message carries section.key paths.
struct ConfigError : Error {
  using Error::Error;
};

// Defensive: a graph node referenced a node created after it.
struct GraphCycle : Error {
  using Error::Error;
};

}  // namespace gcq
