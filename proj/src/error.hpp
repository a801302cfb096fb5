#pragma once

#include <stdexcept>
#include <string>

namespace llc {

enum class Errc {
    Ok = 0,
    InvalidOperand,
    EvaluationPole,
    LabelGroupMismatch,
    Unsupported,
    IncompleteData,
    InvalidDatum,
    NeedsDeclaration,
    NotApplicable,
    MalformedDescriptor,
    InvalidEnhancement,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace llc
