#pragma once

#include <stdexcept>
#include <string>

namespace topogame {

// Rejected caller input: bad vertex, malformed file, disconnected graph, ...
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

class SingularMatrixError : public std::domain_error {
 public:
  SingularMatrixError() : std::domain_error("singular matrix") {}
};

}  // namespace topogame
