#pragma once

#include <stdexcept>
#include <string>

namespace salesforge {

// Error taxonomy shared by the core, the C API status codes and the CLI
// exit-code contract (0 ok, 2 usage/schema, 3 runtime failure).

// Input file unreadable or absent.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input data violates a documented schema (bad cell, bad header, duplicate
// key). Messages name the offending file, column and line where known.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed an invalid argument or configuration.
class ArgError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace salesforge
