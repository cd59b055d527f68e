#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Raised when an element lies outside the materialized length ball.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when elements from different group contexts are mixed.
struct context_mismatch : std::invalid_argument {
  explicit context_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a vector violates the model's lattice constraints.
struct lattice_error : std::invalid_argument {
  explicit lattice_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an argument is not a member of the required set
// (coset representative sets, admissible sets, straight elements...).
struct membership_error : std::invalid_argument {
  explicit membership_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a structural identity that must hold by theorem fails;
// always indicates an implementation bug.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace strata
