#pragma once

#include <stdexcept>
#include <string>

namespace montee {

// File access / stream failures. Carries the path so the CLI can report it.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (bad lexicon row, bad corpus line, bad label file).
// The message names the source and line number where applicable.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke an operation contract (e.g. empty category set).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace montee
