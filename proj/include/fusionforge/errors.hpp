#ifndef GUARD_FUSIONFORGE_ERRORS_H
#define GUARD_FUSIONFORGE_ERRORS_H

#include <stdexcept>
#include <string>

namespace fusionforge {

struct Error : public std::runtime_error {
  explicit Error(std::string const &what) : std::runtime_error(what) {}
};

// A configured resource cap (closure size, subgroup enumeration order, ...) would be exceeded.
struct CapExceeded : public Error {
  explicit CapExceeded(std::string const &what) : Error(what) {}
};

struct NotNormal : public Error {
  explicit NotNormal(std::string const &what) : Error(what) {}
};

struct NotStronglyClosed : public Error {
  explicit NotStronglyClosed(std::string const &what) : Error(what) {}
};

struct NotInjective : public Error {
  explicit NotInjective(std::string const &what) : Error(what) {}
};

struct NotIsomorphism : public Error {
  explicit NotIsomorphism(std::string const &what) : Error(what) {}
};

struct UnequalOrders : public Error {
  explicit UnequalOrders(std::string const &what) : Error(what) {}
};

// Malformed or inconsistent input data (JSON, reconstruction quintuples, ...).
struct InvalidData : public Error {
  explicit InvalidData(std::string const &what) : Error(what) {}
};

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_ERRORS_H
