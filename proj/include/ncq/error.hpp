#pragma once

#include <stdexcept>
#include <string>

namespace ncq {

enum class Err {
    BadParameter,
    NonConfluent,
    DegenerateLeading,
    InhomogeneousRelation,
    NotCentral,
    WrongCase,
    NotOnScheme,
    KernelTooBig,
    NonSquare,
    FactorMismatch,
    NotNormal,
    OrderInfinite,
    DimensionMismatch,
    NeitherHolds,
    NotIrreducible,
    TruncationTooShallow,
    SyntaxError,
};

const char* err_name(Err e);

class NcqError : public std::runtime_error {
public:
    NcqError(Err code, const std::string& msg);
    Err code;
};

[[noreturn]] void fail(Err code, const std::string& msg);

}  // namespace ncq
