// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agora/protocol/message.hpp"
#include "agora/protocol/spec.hpp"

namespace agora::protocol {

enum class OutcomeKind { Pending, Agreed, Rejected, Expired, Withdrawn };

std::string_view outcome_name(OutcomeKind k);

/// Signing vocabulary retained as status metadata on the agreed outcome;
/// there is no cryptography behind it.
enum class SigningStatus { Unsigned, SinglePartySigned, Signed };

struct Outcome {
    OutcomeKind kind = OutcomeKind::Pending;
    std::optional<contract::AgreementDocument> agreement;  // engaged when agreed
};

struct SessionState {
    std::string session_id;
    Protocol protocol = Protocol::Cnip;
    std::string phase;
    int round = 0;
    int deadline_round = 0;
    Tick deadline_tick = 0;
    std::optional<contract::AgreementDocument> last_offer;
    Outcome outcome;
    SigningStatus signing = SigningStatus::Unsigned;
    std::string note;  // diagnostic, e.g. the violation that aborted a session

    bool terminal() const { return outcome.kind != OutcomeKind::Pending; }
};

struct StepResult {
    SessionState state;
    std::vector<NegotiationMessage> emitted;
};

/// Opens a session in the protocol's initial state.
SessionState open_session(std::string session_id, Protocol protocol,
                          int deadline_round, Tick deadline_tick);

/// Advances a session by one message.
///
/// The transition table of the session's protocol decides legality; a
/// deadline overtaking the move turns it into an Expired emission
/// instead. Consumer proposals (Propose/Modify) begin a new round.
/// Returns the successor state plus the messages the engine emits on
/// behalf of the stepped party (normally the stamped input message).
///
/// Throws Error{SessionClosed} once terminal, Error{SessionMismatch} on
/// foreign messages and Error{IllegalTransition} for moves the protocol
/// does not permit in the current phase.
StepResult step(const SessionState& state, const NegotiationMessage& msg);

}  // namespace agora::protocol
