// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agora {

enum class Errc {
    // contract model
    MissingProperty,
    InvalidRange,
    ConstraintViolation,
    MissingBinding,
    UnknownTerm,
    DomainMismatch,
    MissingObservation,
    InvalidDocument,
    ParseError,
    // aggregation
    ConflictingDuplicate,
    InvalidIdentifier,
    // protocol engine
    IllegalTransition,
    SessionClosed,
    SessionMismatch,
    InvalidMessage,
    // strategy
    UnscoredTerm,
    UnboundTerm,
    EmptyPermissibleRange,
    // marketplace
    UnknownOperation,
    UnknownDomain,
    DuplicateProviderId,
    NoTemplatesSurviveFilter,
    SelectionEmpty,
    NegotiationFailed,
    ExecutionRejected,
    NoShowsFound,
    BookingRejected,
    // sim harness
    ScenarioInvalid,
    GridTooCoarse,
    NativeFailure,
    IoError,
};

std::string_view errc_name(Errc code);

/// Library-wide exception. `detail` carries the offending identifier
/// (term id, provider id, session phase, ...) when one exists.
class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string detail)
        : std::runtime_error(std::string(errc_name(code)) +
                             (detail.empty() ? "" : ": " + detail)),
          code_(code),
          detail_(std::move(detail)) {}

    explicit Error(Errc code) : Error(code, "") {}

    Errc code() const { return code_; }
    const std::string& detail() const { return detail_; }

  private:
    Errc code_;
    std::string detail_;
};

}  // namespace agora
