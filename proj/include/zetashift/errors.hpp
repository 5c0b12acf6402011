// Error taxonomy shared by the whole library.
//
// Four families, matched 1:1 with the CLI exit codes:
//   validation_error  (2) -- bad arguments / preconditions / usage
//   data_error        (3) -- unreadable or inconsistent input data
//   accuracy_error    (4) -- a numeric routine could not reach its target
//   resource_error    (2) -- a requested computation exceeds the memory budget

#ifndef ZETASHIFT_ERRORS_HPP
#define ZETASHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetashift {

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Out-of-domain argument to a mathematical operation.
struct domain_error : validation_error {
    using validation_error::validation_error;
};

// Misuse of an API (unknown tag, refused combination, ...).
struct usage_error : validation_error {
    using validation_error::validation_error;
};

struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failures carry the offending line number.
struct format_error : data_error {
    format_error(const std::string& what, long line)
        : data_error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    long line;
};

// A numeric routine failed to reach its accuracy contract.
struct accuracy_error : std::runtime_error {
    accuracy_error(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved " + std::to_string(achieved) + ")"),
          achieved(achieved) {}
    double achieved;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zetashift

#endif
