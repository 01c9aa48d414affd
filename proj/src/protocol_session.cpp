// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/protocol/session.hpp"

#include "agora/errors.hpp"

namespace agora::protocol {

std::string_view outcome_name(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::Pending: return "pending";
        case OutcomeKind::Agreed: return "agreed";
        case OutcomeKind::Rejected: return "rejected";
        case OutcomeKind::Expired: return "expired";
        case OutcomeKind::Withdrawn: return "withdrawn";
    }
    return "?";
}

SessionState open_session(std::string session_id, Protocol protocol,
                          int deadline_round, Tick deadline_tick) {
    SessionState s;
    s.session_id = std::move(session_id);
    s.protocol = protocol;
    s.phase = spec_for(protocol).initial;
    s.deadline_round = deadline_round;
    s.deadline_tick = deadline_tick;
    return s;
}

namespace {

void enter_terminal(SessionState* state, const ProtocolSpec& spec,
                    const ProtocolSpec::Transition& tr,
                    const NegotiationMessage& msg) {
    if (!spec.is_terminal(tr.to)) {
        return;
    }
    if (msg.msg_type == MsgType::Expired || msg.primitive == Primitive::Terminate) {
        state->outcome.kind = OutcomeKind::Expired;
    } else if (msg.primitive == Primitive::Accept) {
        state->outcome.kind = OutcomeKind::Agreed;
        state->signing = SigningStatus::Signed;
        if (msg.payload && msg.payload->stage == contract::Stage::Agreement) {
            state->outcome.agreement = msg.payload;
        }
    } else if (msg.primitive == Primitive::Withdraw) {
        state->outcome.kind = OutcomeKind::Withdrawn;
    } else {
        state->outcome.kind = OutcomeKind::Rejected;
    }
}

StepResult expire(SessionState state, const ProtocolSpec& spec,
                  const NegotiationMessage& cause) {
    NegotiationMessage expired;
    expired.msg_type = MsgType::Expired;
    expired.primitive = Primitive::Terminate;
    expired.session_id = state.session_id;
    expired.round = state.round;
    expired.sender = cause.sender;
    expired.tick = cause.tick;

    const ProtocolSpec::Transition* tr =
        spec.find(state.phase, Primitive::Terminate, cause.sender);
    if (!tr) {
        throw Error(Errc::IllegalTransition,
                    state.phase + " has no expiry transition");
    }
    state.phase = tr->to;
    enter_terminal(&state, spec, *tr, expired);
    return {std::move(state), {std::move(expired)}};
}

}  // namespace

StepResult step(const SessionState& state, const NegotiationMessage& msg) {
    if (state.terminal()) {
        throw Error(Errc::SessionClosed, state.session_id);
    }
    if (msg.session_id != state.session_id) {
        throw Error(Errc::SessionMismatch,
                    msg.session_id + " vs " + state.session_id);
    }
    check_message(msg);
    const ProtocolSpec& spec = spec_for(state.protocol);

    // Expiry takes precedence over any pending move.
    if (msg.tick > state.deadline_tick) {
        return expire(state, spec, msg);
    }
    if (spec.begins_round(msg) && state.round + 1 > state.deadline_round) {
        return expire(state, spec, msg);
    }

    const ProtocolSpec::Transition* tr =
        spec.find(state.phase, msg.primitive, msg.sender);
    if (!tr) {
        throw Error(Errc::IllegalTransition,
                    state.phase + " / " + std::string(primitive_name(msg.primitive)) +
                        " by " + std::string(sender_name(msg.sender)));
    }

    SessionState next = state;
    if (spec.begins_round(msg)) {
        ++next.round;
    }
    NegotiationMessage stamped = msg;
    stamped.round = next.round;
    next.phase = tr->to;
    if (stamped.payload && stamped.payload->stage == contract::Stage::Offer) {
        next.last_offer = stamped.payload;
    }
    enter_terminal(&next, spec, *tr, stamped);
    return {std::move(next), {std::move(stamped)}};
}

}  // namespace agora::protocol
