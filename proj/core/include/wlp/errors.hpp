#pragma once

#include <stdexcept>
#include <string>

namespace wlp {

/// Raised when an argument lies outside an operation's domain
/// (empty families, out-of-range vertices, violated lemma hypotheses).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (edge lists, generator files, CLI ranges).
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotArtinianError : public DomainError {
 public:
  NotArtinianError(std::size_t variable, const std::string& name)
      : DomainError("ideal is not Artinian: no pure power of " + name),
        variable_(variable) {}
  std::size_t variable() const noexcept { return variable_; }

 private:
  std::size_t variable_;
};

class EmptyGeneratorsError : public DomainError {
 public:
  EmptyGeneratorsError() : DomainError("monomial ideal needs at least one generator") {}
};

}  // namespace wlp
