#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wordrep {

// All library failures surface as Error with a short machine-readable kind
// ("unknown-vertex", "oracle-bound", ...) followed by a human detail string.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace wordrep
