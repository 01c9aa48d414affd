// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/errors.hpp"

namespace agora {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::MissingProperty: return "MissingProperty";
        case Errc::InvalidRange: return "InvalidRange";
        case Errc::ConstraintViolation: return "ConstraintViolation";
        case Errc::MissingBinding: return "MissingBinding";
        case Errc::UnknownTerm: return "UnknownTerm";
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::MissingObservation: return "MissingObservation";
        case Errc::InvalidDocument: return "InvalidDocument";
        case Errc::ParseError: return "ParseError";
        case Errc::ConflictingDuplicate: return "ConflictingDuplicate";
        case Errc::InvalidIdentifier: return "InvalidIdentifier";
        case Errc::IllegalTransition: return "IllegalTransition";
        case Errc::SessionClosed: return "SessionClosed";
        case Errc::SessionMismatch: return "SessionMismatch";
        case Errc::InvalidMessage: return "InvalidMessage";
        case Errc::UnscoredTerm: return "UnscoredTerm";
        case Errc::UnboundTerm: return "UnboundTerm";
        case Errc::EmptyPermissibleRange: return "EmptyPermissibleRange";
        case Errc::UnknownOperation: return "UnknownOperation";
        case Errc::UnknownDomain: return "UnknownDomain";
        case Errc::DuplicateProviderId: return "DuplicateProviderId";
        case Errc::NoTemplatesSurviveFilter: return "NoTemplatesSurviveFilter";
        case Errc::SelectionEmpty: return "SelectionEmpty";
        case Errc::NegotiationFailed: return "NegotiationFailed";
        case Errc::ExecutionRejected: return "ExecutionRejected";
        case Errc::NoShowsFound: return "NoShowsFound";
        case Errc::BookingRejected: return "BookingRejected";
        case Errc::ScenarioInvalid: return "ScenarioInvalid";
        case Errc::GridTooCoarse: return "GridTooCoarse";
        case Errc::NativeFailure: return "NativeFailure";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace agora
