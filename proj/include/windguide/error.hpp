#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace windguide {

enum class ErrorClass {
    invalid_argument,
    singular_state,
    degenerate_horizon,
    singular_tracking,
    config,
    io,
};

std::string_view to_string(ErrorClass c) noexcept;

/// Base exception for every failure raised by the library. The class tag is
/// stable and is what the CLI prints as the machine-readable error kind.
class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

[[noreturn]] inline void fail(ErrorClass cls, const std::string& what) { throw Error(cls, what); }

inline void require(bool cond, ErrorClass cls, const std::string& what) {
    if (!cond) fail(cls, what);
}

}  // namespace windguide
