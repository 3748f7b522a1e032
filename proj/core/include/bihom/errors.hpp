#ifndef BIHOM_ERRORS_HPP
#define BIHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bihom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// invert() on a singular matrix. A legitimate outcome, not a bug.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// A map handed to a derivation / Rota-Baxter kind is not an algebra map,
/// or an argument is otherwise unusable.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// A construction's hypothesis failed; `hypothesis()` names it.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(std::string hypothesis, const std::string& detail = {})
      : Error("precondition violated: " + hypothesis +
              (detail.empty() ? std::string{} : " (" + detail + ")")),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Two formulas that must agree under the verified hypotheses did not.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

class SearchSpaceTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Malformed or schema-violating document. `path()` is a JSON pointer.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error((path.empty() ? std::string("/") : path) + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace bihom

#endif  // BIHOM_ERRORS_HPP
