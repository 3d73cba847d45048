#pragma once

#include <stdexcept>
#include <string>

namespace fvm {

// Error taxonomy shared by the library and the CLI exit-code contract:
// config/domain problems are caller mistakes (exit 2), data/numeric/io
// problems arise from inputs or computation (exit 3).
enum class ErrorKind {
    config,
    domain,
    data,
    numeric,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    static const char* kind_name(ErrorKind k) {
        switch (k) {
            case ErrorKind::config: return "config";
            case ErrorKind::domain: return "domain";
            case ErrorKind::data: return "data";
            case ErrorKind::numeric: return "numeric";
            case ErrorKind::io: return "io";
        }
        return "unknown";
    }

    static int exit_code(ErrorKind k) {
        switch (k) {
            case ErrorKind::config:
            case ErrorKind::domain:
                return 2;
            default:
                return 3;
        }
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_config(const std::string& msg) { throw Error(ErrorKind::config, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(ErrorKind::domain, msg); }
[[noreturn]] inline void throw_data(const std::string& msg) { throw Error(ErrorKind::data, msg); }
[[noreturn]] inline void throw_numeric(const std::string& msg) { throw Error(ErrorKind::numeric, msg); }
[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(ErrorKind::io, msg); }

} // namespace fvm
