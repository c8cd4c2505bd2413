#pragma once

#include <stdexcept>
#include <string>

namespace indres {

// Every failure surfaced by the library derives from Error; kind() is the
// machine-readable tag used by the command line front end.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct FormatError : Error {
  explicit FormatError(const std::string& w) : Error("format", w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error("domain", w) {}
};
struct ResourceError : Error {
  explicit ResourceError(const std::string& w) : Error("resource", w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error("precondition", w) {}
};
struct IntegrityError : Error {
  explicit IntegrityError(const std::string& w) : Error("integrity", w) {}
};
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& w) : Error("consistency", w) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error("internal", w) {}
};

#define INDRES_ASSERT(cond, msg)                                   \
  do {                                                             \
    if (!(cond)) throw ::indres::InternalError(std::string(msg)); \
  } while (0)

}  // namespace indres
