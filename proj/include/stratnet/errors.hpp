#pragma once

#include <stdexcept>
#include <string>

namespace stratnet {

/// Malformed or inconsistent input data (bad files, unknown labels,
/// infeasible parameters). CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A metric is mathematically undefined for the given input (edgeless graph,
/// zero score variance, singular normalization). CLI exit code 4.
class DegenerateError : public std::runtime_error {
public:
    explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stratnet
