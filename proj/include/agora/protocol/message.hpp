// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "agora/contract/document.hpp"

namespace agora::protocol {

using contract::Tick;

/// The eight negotiation message types.
enum class MsgType {
    Offer,
    Counteroffer,
    Rejected,
    Accepted,
    Expired,
    SinglePartySigned,
    Signed,
    Unsigned,
};

/// The eight negotiation primitives.
enum class Primitive {
    CallForProposal,
    Propose,
    Accept,
    Terminate,
    Reject,
    Acknowledge,
    Modify,
    Withdraw,
};

enum class Sender { Consumer, Provider };

std::string_view msg_type_name(MsgType t);
std::string_view primitive_name(Primitive p);
std::string_view sender_name(Sender s);

std::optional<MsgType> msg_type_from_string(std::string_view s);
std::optional<Primitive> primitive_from_string(std::string_view s);
std::optional<Sender> sender_from_string(std::string_view s);

struct NegotiationMessage {
    MsgType msg_type = MsgType::Offer;
    Primitive primitive = Primitive::Propose;
    std::optional<contract::AgreementDocument> payload;
    std::string session_id;
    int round = 0;
    Sender sender = Sender::Consumer;
    Tick tick = 0;
};

/// Validates the type/primitive/payload coupling: Offer and Counteroffer
/// carry offer-stage payloads, an Accept-Accepted carries an agreement.
/// Throws Error{InvalidMessage}.
void check_message(const NegotiationMessage& msg);

}  // namespace agora::protocol
