#ifndef PENCILLAB_ERROR_HPP
#define PENCILLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace pencillab {

/// Exception carrying a stable machine-readable code ("nonpositive-a",
/// "singular-system", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace pencillab

#endif
