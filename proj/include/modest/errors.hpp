#ifndef MODEST_ERRORS_HPP
#define MODEST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modest {

// Invalid or inconsistent configuration (bad parameters, missing m0, ...).
// CLI maps this to exit code 1.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or non-finite input data. CLI maps this to exit code 2.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// An estimate left the guarded region (non-finite or absurdly large).
// CLI maps this to exit code 3.
struct divergence_error : std::runtime_error {
    explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

// A reference computation (quadrature, grid search) could not meet its
// accuracy contract, e.g. an argmax landing on the grid boundary.
struct oracle_error : std::runtime_error {
    explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace modest

#endif
