#ifndef FOLDSYM_ERRORS_HPP
#define FOLDSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace foldsym {

// Error taxonomy mirrors the CLI exit-code contract:
//   ConfigError -> 2, CheckFailure -> 1, NumericsError -> 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: dimension mismatches, malformed configs, unknown ids,
// invalid construction parameters.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class DimensionError : public ConfigError {
public:
    explicit DimensionError(const std::string& msg) : ConfigError(msg) {}
};

// Geometry precondition violated at runtime (region not star-shaped,
// section not transversal, epsilon collar leaving the chart, ...).
class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& msg) : Error(msg) {}
};

// The observable has no smooth Hamiltonian field on the fold.
class AdmissibilityError : public Error {
public:
    explicit AdmissibilityError(const std::string& msg) : Error(msg) {}
};

// A numerical procedure failed to reach its tolerance or budget:
// Newton stagnation, no near-return, blow-up, continuation jump.
class NumericsError : public Error {
public:
    explicit NumericsError(const std::string& msg) : Error(msg) {}
};

class NonCompactOrbitError : public NumericsError {
public:
    explicit NonCompactOrbitError(const std::string& msg) : NumericsError(msg) {}
};

class ContinuationError : public NumericsError {
public:
    explicit ContinuationError(const std::string& msg) : NumericsError(msg) {}
};

} // namespace foldsym

#endif
