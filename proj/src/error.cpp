#include "ncq/error.hpp"

namespace ncq {

const char* err_name(Err e) {
    switch (e) {
        case Err::BadParameter: return "BadParameter";
        case Err::NonConfluent: return "NonConfluent";
        case Err::DegenerateLeading: return "DegenerateLeading";
        case Err::InhomogeneousRelation: return "InhomogeneousRelation";
        case Err::NotCentral: return "NotCentral";
        case Err::WrongCase: return "WrongCase";
        case Err::NotOnScheme: return "NotOnScheme";
        case Err::KernelTooBig: return "KernelTooBig";
        case Err::NonSquare: return "NonSquare";
        case Err::FactorMismatch: return "FactorMismatch";
        case Err::NotNormal: return "NotNormal";
        case Err::OrderInfinite: return "OrderInfinite";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::NeitherHolds: return "NeitherHolds";
        case Err::NotIrreducible: return "NotIrreducible";
        case Err::TruncationTooShallow: return "TruncationTooShallow";
        case Err::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

NcqError::NcqError(Err c, const std::string& msg)
    : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}

void fail(Err code, const std::string& msg) { throw NcqError(code, msg); }

}  // namespace ncq
