#ifndef OCTAD_ERRORS_HPP
#define OCTAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace octad {

// Base of all domain errors. `code()` is the stable machine-readable
// identifier used by the CLI report channel.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct BadInput : Error {
    explicit BadInput(const std::string& what) : Error("BadInput", what) {}
};

struct NoIsometry : Error {
    explicit NoIsometry(const std::string& what) : Error("NoIsometry", what) {}
};

struct NotInduced : Error {
    explicit NotInduced(const std::string& what) : Error("NotInduced", what) {}
};

struct ResourceGuard : Error {
    explicit ResourceGuard(const std::string& what) : Error("ResourceGuard", what) {}
};

struct MoveNotAllowed : Error {
    explicit MoveNotAllowed(const std::string& what) : Error("MoveNotAllowed", what) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error("DegenerateInput", what) {}
};

struct NotZeroDimensional : Error {
    explicit NotZeroDimensional(const std::string& what) : Error("NotZeroDimensional", what) {}
};

struct MultiplePoint : Error {
    explicit MultiplePoint(const std::string& what) : Error("MultiplePoint", what) {}
};

struct NotOnBase : Error {
    explicit NotOnBase(const std::string& what) : Error("NotOnBase", what) {}
};

struct Degenerate : Error {
    explicit Degenerate(const std::string& what) : Error("Degenerate", what) {}
};

struct NotSkew : Error {
    explicit NotSkew(const std::string& what) : Error("NotSkew", what) {}
};

struct NotSimple : Error {
    explicit NotSimple(const std::string& what) : Error("NotSimple", what) {}
};

struct NotRegular : Error {
    explicit NotRegular(const std::string& what) : Error("NotRegular", what) {}
};

struct Inconsistent : Error {
    explicit Inconsistent(const std::string& what) : Error("Inconsistent", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

} // namespace octad

#endif
