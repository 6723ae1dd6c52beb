#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sheffer {

// Base class for every precondition / domain failure raised by the library.
// `module_name` identifies the subsystem so CLI diagnostics can name it.
class Error : public std::runtime_error {
public:
    Error(std::string module_name, const std::string& what)
        : std::runtime_error("[" + module_name + "] " + what), module_(std::move(module_name)) {}

    const std::string& module_name() const { return module_; }

private:
    std::string module_;
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error("powerseries", what) {}
};

struct NotDelta : Error {
    explicit NotDelta(const std::string& what) : Error("powerseries", what) {}
};

struct InnerNotDelta : Error {
    explicit InnerNotDelta(const std::string& what) : Error("powerseries", what) {}
};

// Raised when exp/log/pow/sqrt (or series division) is asked for outside its
// constant-term domain. The message names the failed condition.
struct DomainViolation : Error {
    DomainViolation(std::string module_name, const std::string& what) : Error(std::move(module_name), what) {}
};

struct InsufficientOrder : Error {
    InsufficientOrder(std::string module_name, const std::string& what) : Error(std::move(module_name), what) {}
};

struct MixedReferenceSequence : Error {
    explicit MixedReferenceSequence(const std::string& what) : Error("riordan", what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("determinantal", what) {}
};

struct ZeroDiagonal : Error {
    explicit ZeroDiagonal(const std::string& what) : Error("determinantal", what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error("iterated", what) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error("families", what) {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(std::string module_name, const std::string& what) : Error(std::move(module_name), what) {}
};

struct UnboundParameter : Error {
    explicit UnboundParameter(const std::string& what) : Error("specparse", what) {}
};

// Syntax failure with a byte offset into the input and the token kinds that
// would have been accepted at that point.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::string found, std::vector<std::string> expected)
        : Error("specparse", format(offset, found, expected)),
          offset_(offset),
          found_(std::move(found)),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& found() const { return found_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(std::size_t offset, const std::string& found,
                              const std::vector<std::string>& expected) {
        std::string msg = "syntax error at byte " + std::to_string(offset) + ": found " + found;
        if (!expected.empty()) {
            msg += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) msg += i + 1 == expected.size() ? " or " : ", ";
                msg += expected[i];
            }
        }
        return msg;
    }

    std::size_t offset_;
    std::string found_;
    std::vector<std::string> expected_;
};

} // namespace sheffer
