#pragma once

#include <stdexcept>
#include <string>

namespace spinh {

enum class Errc {
    signature_mismatch,
    invalid_argument,
    inapplicable,
    non_unit,
    non_integral,
    bound_exceeded,
    degree_cap,
    missing_input,
    unmatched_family,
    parse_error,
};

const char* errc_name(Errc c);

class DomainError : public std::runtime_error {
public:
    DomainError(Errc c, const std::string& what)
        : std::runtime_error(what), code_(c) {}
    Errc code() const { return code_; }
    const char* category() const { return errc_name(code_); }

private:
    Errc code_;
};

} // namespace spinh
