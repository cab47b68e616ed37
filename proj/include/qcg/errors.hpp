#ifndef QCG_ERRORS_HPP
#define QCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcg {

// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad partition syntax, invalid (k,n), bad flags.
class UsageError : public Error {
public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

// A mathematical identity that must hold failed (cross-check violation).
class InconsistencyError : public Error {
public:
  explicit InconsistencyError(const std::string& msg) : Error(msg) {}
};

// Numeric pipeline could not reach the requested accuracy.
class PrecisionError : public Error {
public:
  explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// Formal-q reduction would need division by a q-dependent coefficient.
class FormalModeError : public Error {
public:
  explicit FormalModeError(const std::string& msg) : Error(msg) {}
};

} // namespace qcg

#endif
