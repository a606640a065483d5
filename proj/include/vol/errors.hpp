#ifndef VOL_ERRORS_HPP
#define VOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vol {

// Error categories map 1:1 onto CLI exit codes (2/3/4).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace vol

#endif // VOL_ERRORS_HPP
