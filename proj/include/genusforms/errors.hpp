#ifndef GENUSFORMS_ERRORS_HPP
#define GENUSFORMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace genusforms {

/// Domain-level failure with a stable machine-readable name.
///
/// The name (e.g. "DiscMismatch", "NotCoprime") is part of the library
/// contract: the CLI prints it verbatim and exits with status 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void raise(const char* name, const std::string& message) {
  throw DomainError(name, message);
}

/// Bad command-line / textual input. Maps to exit code 2 in the CLI.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace genusforms

#endif
