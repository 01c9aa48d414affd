// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/protocol/spec.hpp"

#include <algorithm>

#include "agora/errors.hpp"

namespace agora::protocol {

std::string_view protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Cnip: return "cnip";
        case Protocol::AlternatingOffers: return "alternating-offers";
        case Protocol::IteratedCnip: return "iterated-cnip";
    }
    return "?";
}

std::optional<Protocol> protocol_from_string(std::string_view s) {
    if (s == "cnip") return Protocol::Cnip;
    if (s == "alternating-offers") return Protocol::AlternatingOffers;
    if (s == "iterated-cnip") return Protocol::IteratedCnip;
    return std::nullopt;
}

bool ProtocolSpec::begins_round(const NegotiationMessage& msg) const {
    return msg.sender == Sender::Consumer &&
           std::find(round_primitives.begin(), round_primitives.end(),
                     msg.primitive) != round_primitives.end();
}

bool ProtocolSpec::is_terminal(const std::string& state) const {
    return std::find(terminal.begin(), terminal.end(), state) != terminal.end();
}

const ProtocolSpec::Transition* ProtocolSpec::find(const std::string& from,
                                                   Primitive primitive,
                                                   Sender sender) const {
    for (const Transition& t : transitions) {
        if (t.from == from && t.primitive == primitive && t.sender == sender) {
            return &t;
        }
    }
    return nullptr;
}

void ProtocolSpec::check() const {
    auto known = [&](const std::string& s) {
        return std::find(states.begin(), states.end(), s) != states.end();
    };
    if (!known(initial)) {
        throw Error(Errc::InvalidDocument, name + ": unknown initial state " + initial);
    }
    if (is_terminal(initial)) {
        throw Error(Errc::InvalidDocument, name + ": initial state is terminal");
    }
    for (const std::string& t : terminal) {
        if (!known(t)) {
            throw Error(Errc::InvalidDocument, name + ": unknown terminal state " + t);
        }
    }
    for (const Transition& t : transitions) {
        if (!known(t.from) || !known(t.to)) {
            throw Error(Errc::InvalidDocument,
                        name + ": transition references unknown state");
        }
        if (is_terminal(t.from)) {
            throw Error(Errc::InvalidDocument,
                        name + ": terminal state " + t.from + " has outgoing transition");
        }
    }
}

namespace {

// Every non-terminal state can expire; the engine emits the Expired
// message when a deadline overtakes a pending move.
void add_expiry(ProtocolSpec* spec, const std::string& expired_state) {
    for (const std::string& s : spec->states) {
        if (!spec->is_terminal(s)) {
            spec->transitions.push_back(
                {s, Primitive::Terminate, Sender::Consumer, "deadline passed", expired_state});
            spec->transitions.push_back(
                {s, Primitive::Terminate, Sender::Provider, "deadline passed", expired_state});
        }
    }
}

ProtocolSpec make_cnip() {
    ProtocolSpec s;
    s.name = "cnip";
    s.states = {"Init", "AwaitingDecision", "Agreed", "Rejected", "Expired"};
    s.initial = "Init";
    s.terminal = {"Agreed", "Rejected", "Expired"};
    s.round_primitives = {Primitive::Propose, Primitive::Modify};
    s.transitions = {
        {"Init", Primitive::Propose, Sender::Consumer, "offer admissible", "AwaitingDecision"},
        {"AwaitingDecision", Primitive::Accept, Sender::Provider, "offer meets policy", "Agreed"},
        {"AwaitingDecision", Primitive::Reject, Sender::Provider, "take it or leave it", "Rejected"},
    };
    add_expiry(&s, "Expired");
    s.check();
    return s;
}

ProtocolSpec make_alternating_offers() {
    ProtocolSpec s;
    s.name = "alternating-offers";
    s.states = {"Init", "ConsumerTurn", "ProviderTurn", "Agreed", "Rejected", "Expired"};
    s.initial = "Init";
    s.terminal = {"Agreed", "Rejected", "Expired"};
    s.round_primitives = {Primitive::Propose, Primitive::Modify};
    s.transitions = {
        {"Init", Primitive::Propose, Sender::Consumer, "opening offer", "ProviderTurn"},
        {"ProviderTurn", Primitive::Accept, Sender::Provider, "offer acceptable", "Agreed"},
        {"ProviderTurn", Primitive::Reject, Sender::Provider, "provider quits", "Rejected"},
        {"ProviderTurn", Primitive::CallForProposal, Sender::Provider,
         "counter template with permissible values", "ConsumerTurn"},
        {"ConsumerTurn", Primitive::Modify, Sender::Consumer,
         "counteroffer within permissible values", "ProviderTurn"},
        {"ConsumerTurn", Primitive::Withdraw, Sender::Consumer, "consumer quits", "Rejected"},
        {"ConsumerTurn", Primitive::Reject, Sender::Consumer,
         "strategy emitted an out-of-range counteroffer", "Rejected"},
    };
    add_expiry(&s, "Expired");
    s.check();
    return s;
}

ProtocolSpec make_iterated_cnip() {
    ProtocolSpec s;
    s.name = "iterated-cnip";
    s.states = {"Dispatch", "CheckAgreements", "CounterTemplates",
                "Confirmed", "Quit", "Exhausted"};
    s.initial = "Dispatch";
    s.terminal = {"Confirmed", "Quit", "Exhausted"};
    s.round_primitives = {Primitive::Propose};  // one round per iteration
    s.transitions = {
        {"Dispatch", Primitive::Propose, Sender::Consumer,
         "offers sent, bilateral sessions joined", "CheckAgreements"},
        {"Dispatch", Primitive::Reject, Sender::Provider,
         "every provider terminal-rejected", "Exhausted"},
        {"CheckAgreements", Primitive::Accept, Sender::Consumer,
         "confirm selected agreements", "Confirmed"},
        {"CheckAgreements", Primitive::Withdraw, Sender::Consumer,
         "strategy quits", "Quit"},
        {"CheckAgreements", Primitive::CallForProposal, Sender::Consumer,
         "request counter templates", "CounterTemplates"},
        {"CounterTemplates", Primitive::Modify, Sender::Consumer,
         "filtered counteroffers for next iteration", "Dispatch"},
        {"CounterTemplates", Primitive::Withdraw, Sender::Consumer,
         "no provider kept", "Quit"},
        // Iteration limit plays the deadline role for the coordinator.
        {"Dispatch", Primitive::Terminate, Sender::Consumer, "iteration limit", "Quit"},
        {"CheckAgreements", Primitive::Terminate, Sender::Consumer, "iteration limit", "Quit"},
        {"CounterTemplates", Primitive::Terminate, Sender::Consumer, "iteration limit", "Quit"},
    };
    s.check();
    return s;
}

}  // namespace

const ProtocolSpec& cnip_spec() {
    static const ProtocolSpec spec = make_cnip();
    return spec;
}

const ProtocolSpec& alternating_offers_spec() {
    static const ProtocolSpec spec = make_alternating_offers();
    return spec;
}

const ProtocolSpec& iterated_cnip_spec() {
    static const ProtocolSpec spec = make_iterated_cnip();
    return spec;
}

const ProtocolSpec& spec_for(Protocol p) {
    switch (p) {
        case Protocol::Cnip: return cnip_spec();
        case Protocol::AlternatingOffers: return alternating_offers_spec();
        case Protocol::IteratedCnip: return iterated_cnip_spec();
    }
    return cnip_spec();
}

}  // namespace agora::protocol
