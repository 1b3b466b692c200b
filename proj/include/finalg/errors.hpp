#pragma once

#include <stdexcept>
#include <string>

namespace finalg {

struct SizeCapExceeded : std::runtime_error {
  explicit SizeCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct RingMismatch : std::runtime_error {
  explicit RingMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotAnIdeal : std::runtime_error {
  explicit NotAnIdeal(const std::string& what) : std::runtime_error(what) {}
};

// Malformed description files or ill-formed witness payloads.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct ArithmeticOverflow : std::runtime_error {
  explicit ArithmeticOverflow(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finalg
