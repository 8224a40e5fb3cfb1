#pragma once
#include <stdexcept>
#include <string>

namespace zs {

// Exit-code mapping in the CLI: validation -> 1, numerical -> 2, io -> 3.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& m) : std::runtime_error(m) {}
};
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& m) : std::runtime_error(m) {}
};
struct io_error : std::runtime_error {
    explicit io_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace zs
