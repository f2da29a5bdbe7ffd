// errors.hpp
// Exception types shared across the library, and their process exit codes.
//
// Exit code contract (used by the CLI):
//   0  success
//   1  runtime / resource failure
//   2  usage or domain error
//   3  theorem falsified (a computed counterexample; never expected)

#pragma once
#include <stdexcept>
#include <string>

namespace pidiv {

// A request exceeded a configured memory/time budget or machine capacity.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Loaded data failed a structural invariant (e.g. a corrupt checkpoint file).
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computed counterexample to one of the verified theorems.
// This is the most important possible output of the toolkit: it is never
// swallowed, and the CLI turns it into exit code 3 plus a reproduction file.
class falsification_error : public std::runtime_error {
public:
    falsification_error(std::string theorem_id, std::string detail)
        : std::runtime_error("THEOREM FALSIFIED [" + theorem_id + "]: " + detail),
          theorem_id_(std::move(theorem_id)),
          detail_(std::move(detail)) {}

    const std::string& theorem_id() const { return theorem_id_; }
    const std::string& detail() const { return detail_; }

private:
    std::string theorem_id_;
    std::string detail_;
};

enum class ExitCode : int {
    Ok = 0,
    Runtime = 1,
    Usage = 2,
    Falsified = 3,
};

} // namespace pidiv
