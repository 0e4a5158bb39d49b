#pragma once

#include <stdexcept>
#include <string>

namespace vlcsim {

/// Argument outside the mathematical domain of a model function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed or schema-violating scene document.
class SceneFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vlcsim
