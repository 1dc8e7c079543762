#ifndef ONEPLANAR_ERROR_HPP
#define ONEPLANAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace onep {

enum class ErrorCode {
    invalid_argument,
    size_limit,
    parse,
    budget,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace onep

#endif
