#ifndef EQUIMULT_ERRORS_HPP
#define EQUIMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equimult {

// Stable error codes surfaced by the CLI (exit code 2 for resource/parse).
enum class errc {
    contract_violation,   // precondition or invariant broken by the caller
    resource_budget,      // step/point budget exceeded
    genericity_failure,   // random draws exhausted over a small field
    inconclusive,         // fit window never stabilized
    parse_error,          // problem-file syntax
    internal_error        // theorem-level consistency broken: a bug, not an input problem
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::contract_violation: return "contract-violation";
        case errc::resource_budget:    return "resource-budget";
        case errc::genericity_failure: return "genericity-failure";
        case errc::inconclusive:       return "inconclusive";
        case errc::parse_error:        return "parse-error";
        case errc::internal_error:     return "internal-error";
    }
    return "unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

struct contract_error : error {
    explicit contract_error(const std::string& w) : error(errc::contract_violation, w) {}
};

struct resource_error : error {
    explicit resource_error(const std::string& w) : error(errc::resource_budget, w) {}
};

struct genericity_error : error {
    explicit genericity_error(const std::string& w) : error(errc::genericity_failure, w) {}
};

struct inconclusive_error : error {
    explicit inconclusive_error(const std::string& w) : error(errc::inconclusive, w) {}
};

struct parse_error : error {
    parse_error(std::size_t line, std::size_t col, const std::string& w)
        : error(errc::parse_error, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + w),
          line(line), col(col) {}
    std::size_t line, col;
};

struct internal_error : error {
    explicit internal_error(const std::string& w) : error(errc::internal_error, w) {}
};

}  // namespace equimult

#endif
