#pragma once

#include <stdexcept>
#include <string>

namespace svcvv {

/// Raised for malformed user input (files, flags, specs). The command-line
/// front end maps this to exit code 2; everything else maps to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace svcvv
