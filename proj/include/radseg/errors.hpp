#pragma once

#include <stdexcept>

namespace radseg {

// Rejected parameter set; raised before any output is written.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unreadable or structurally broken dataset / file.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace radseg
