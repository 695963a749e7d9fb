#pragma once

#include <stdexcept>
#include <string>

namespace qdig {

// Exit-code mapping lives in the CLI: ConfigError -> 1, BackendError -> 2,
// DataError -> 3.

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct BackendError : std::runtime_error {
  explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdig
