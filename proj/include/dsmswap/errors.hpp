#pragma once

#include <stdexcept>
#include <string>

namespace dsmswap {

/// Dimension/shape mismatch between operands.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requested dense dimensions exceed the configured cap.
struct SizeError : std::length_error {
  using std::length_error::length_error;
};

/// Invalid argument value (bad index, non-matching class, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Coupling graph violates the model assumptions (disconnected or complete).
struct TopologyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file or field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value violated a contract it was required to satisfy (e.g. an angle
/// expected on the pi/2 grid).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Non-finite value encountered during optimization.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Undefined relative measure (zero baseline).
struct MetricsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The router could not reach feasibility; carries the stuck layer index.
struct RoutingError : std::runtime_error {
  int stuck_layer;
  RoutingError(const std::string& what, int layer)
      : std::runtime_error(what), stuck_layer(layer) {}
};

}  // namespace dsmswap
