#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace emff {

/// Malformed or invariant-violating configuration; `field()` names the
/// offending key so CLI layers can emit machine-readable errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Radio operation attempted on a node that is already dead.
class DeadNodeError : public std::logic_error {
 public:
  explicit DeadNodeError(std::uint32_t node_id)
      : std::logic_error("node " + std::to_string(node_id) + " is dead"),
        node_id_(node_id) {}

  std::uint32_t node_id() const noexcept { return node_id_; }

 private:
  std::uint32_t node_id_;
};

/// Point handed to sector assignment lies outside the enclosing circle.
class OutOfRegionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace emff
