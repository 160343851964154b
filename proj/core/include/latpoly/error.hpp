#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

enum class ErrorKind { domain, usage, resource };

// Every failure raised by the library carries a kind (mapped to CLI exit codes)
// and a message naming the violated invariant.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorKind::domain, what); }
[[noreturn]] inline void fail_resource(const std::string& what) { throw Error(ErrorKind::resource, what); }

}  // namespace latpoly
