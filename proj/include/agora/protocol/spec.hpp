// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agora/protocol/message.hpp"

namespace agora::protocol {

enum class Protocol { Cnip, AlternatingOffers, IteratedCnip };

std::string_view protocol_name(Protocol p);
std::optional<Protocol> protocol_from_string(std::string_view s);

/// A protocol is an explicit transition table over named states. The
/// engine interprets these tables; new protocols can coexist without
/// touching the engine.
struct ProtocolSpec {
    struct Transition {
        std::string from;
        Primitive primitive;
        Sender sender;
        std::string guard;  // human-readable precondition note
        std::string to;
    };

    std::string name;
    std::vector<std::string> states;
    std::vector<Transition> transitions;
    std::string initial;
    std::vector<std::string> terminal;
    /// Consumer-sent primitives that begin a new round (an exchange).
    std::vector<Primitive> round_primitives;

    bool begins_round(const NegotiationMessage& msg) const;

    bool is_terminal(const std::string& state) const;
    const Transition* find(const std::string& from, Primitive primitive,
                           Sender sender) const;

    /// Structural checks: states exist, one initial, terminals have no
    /// outgoing transitions. Throws Error{InvalidDocument}.
    void check() const;
};

/// Contract Net: take it or leave it.
const ProtocolSpec& cnip_spec();

/// Rubinstein alternating offers with provider counter templates.
const ProtocolSpec& alternating_offers_spec();

/// Coordinator of the iterated contract net (reverse auction).
const ProtocolSpec& iterated_cnip_spec();

const ProtocolSpec& spec_for(Protocol p);

}  // namespace agora::protocol
