#pragma once

#include <stdexcept>
#include <string>

namespace permeq {

/// Malformed input data (bad permutation, parse error, shape mismatch).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural axiom failed during validation; message names the axiom and a
/// witness.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permeq
