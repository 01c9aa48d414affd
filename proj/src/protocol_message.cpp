// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/protocol/message.hpp"

#include "agora/errors.hpp"

namespace agora::protocol {

std::string_view msg_type_name(MsgType t) {
    switch (t) {
        case MsgType::Offer: return "Offer";
        case MsgType::Counteroffer: return "Counteroffer";
        case MsgType::Rejected: return "Rejected";
        case MsgType::Accepted: return "Accepted";
        case MsgType::Expired: return "Expired";
        case MsgType::SinglePartySigned: return "SinglePartySigned";
        case MsgType::Signed: return "Signed";
        case MsgType::Unsigned: return "Unsigned";
    }
    return "?";
}

std::string_view primitive_name(Primitive p) {
    switch (p) {
        case Primitive::CallForProposal: return "CallForProposal";
        case Primitive::Propose: return "Propose";
        case Primitive::Accept: return "Accept";
        case Primitive::Terminate: return "Terminate";
        case Primitive::Reject: return "Reject";
        case Primitive::Acknowledge: return "Acknowledge";
        case Primitive::Modify: return "Modify";
        case Primitive::Withdraw: return "Withdraw";
    }
    return "?";
}

std::string_view sender_name(Sender s) {
    return s == Sender::Consumer ? "consumer" : "provider";
}

std::optional<MsgType> msg_type_from_string(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(MsgType::Unsigned); ++i) {
        MsgType t = static_cast<MsgType>(i);
        if (msg_type_name(t) == s) {
            return t;
        }
    }
    return std::nullopt;
}

std::optional<Primitive> primitive_from_string(std::string_view s) {
    for (int i = 0; i <= static_cast<int>(Primitive::Withdraw); ++i) {
        Primitive p = static_cast<Primitive>(i);
        if (primitive_name(p) == s) {
            return p;
        }
    }
    return std::nullopt;
}

std::optional<Sender> sender_from_string(std::string_view s) {
    if (s == "consumer") return Sender::Consumer;
    if (s == "provider") return Sender::Provider;
    return std::nullopt;
}

void check_message(const NegotiationMessage& msg) {
    using contract::Stage;
    if (msg.msg_type == MsgType::Offer || msg.msg_type == MsgType::Counteroffer) {
        if (!msg.payload || msg.payload->stage != Stage::Offer) {
            throw Error(Errc::InvalidMessage,
                        std::string(msg_type_name(msg.msg_type)) +
                            " must carry an offer-stage payload");
        }
    }
    if (msg.msg_type == MsgType::Accepted && msg.primitive == Primitive::Accept) {
        if (!msg.payload || msg.payload->stage != Stage::Agreement) {
            throw Error(Errc::InvalidMessage,
                        "Accepted/Accept must carry an agreement payload");
        }
    }
    if (msg.round < 0) {
        throw Error(Errc::InvalidMessage, "negative round");
    }
}

}  // namespace agora::protocol
