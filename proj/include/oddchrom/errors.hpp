#pragma once

#include <stdexcept>
#include <string>

namespace oddchrom {

enum class ErrorKind {
    SyntaxError,
    AsymmetricAdjacency,
    SelfLoop,
    DuplicateNeighbor,
    Disconnected,
    NonEdge,
    UncoloredNeighbor,
    NotConvenient,
    PaletteExhausted,
    SizeGuard,
    ImproperPartial,
    ConfigurationNotPresent,
    ExtensionFailure,
    HypothesisViolation,
    FallbackExhausted,
    OutOfRange,
    PlantInfeasible,
    LedgerPhase,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateNeighbor: return "DuplicateNeighbor";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NonEdge: return "NonEdge";
        case ErrorKind::UncoloredNeighbor: return "UncoloredNeighbor";
        case ErrorKind::NotConvenient: return "NotConvenient";
        case ErrorKind::PaletteExhausted: return "PaletteExhausted";
        case ErrorKind::SizeGuard: return "SizeGuard";
        case ErrorKind::ImproperPartial: return "ImproperPartial";
        case ErrorKind::ConfigurationNotPresent: return "ConfigurationNotPresent";
        case ErrorKind::ExtensionFailure: return "ExtensionFailure";
        case ErrorKind::HypothesisViolation: return "HypothesisViolation";
        case ErrorKind::FallbackExhausted: return "FallbackExhausted";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::PlantInfeasible: return "PlantInfeasible";
        case ErrorKind::LedgerPhase: return "LedgerPhase";
    }
    return "UnknownError";
}

}  // namespace oddchrom
