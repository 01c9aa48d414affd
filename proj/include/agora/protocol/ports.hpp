// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agora/contract/operations.hpp"
#include "agora/protocol/message.hpp"
#include "agora/protocol/spec.hpp"

namespace agora::protocol {

using contract::AgreementDocument;
using contract::Bindings;

/// Session context handed to a port with each call so stateless
/// transports can still react to round and iteration numbers.
struct NegotiationContext {
    std::string session_id;
    int round = 0;
    int iteration = 1;
};

/// A provider's reply to an offer. `delay_ticks` models response
/// latency; a provider that never answers reports a delay beyond any
/// deadline.
struct ProviderResponse {
    enum class Action { Accept, Reject, CounterTemplate };

    Action action = Action::Reject;
    std::optional<AgreementDocument> document;  // agreement or counter template
    Tick delay_ticks = 0;

    static ProviderResponse accept(AgreementDocument agreement, Tick delay = 0) {
        return {Action::Accept, std::move(agreement), delay};
    }
    static ProviderResponse reject(Tick delay = 0) {
        return {Action::Reject, std::nullopt, delay};
    }
    static ProviderResponse counter(AgreementDocument tmpl, Tick delay = 0) {
        return {Action::CounterTemplate, std::move(tmpl), delay};
    }
};

/// The provider side of a negotiation, implemented by simulator
/// providers (or adapters around contract-unaware services).
class ProviderPort {
  public:
    virtual ~ProviderPort() = default;

    virtual std::string provider_id() const = 0;

    /// Bilateral protocol this provider speaks.
    virtual Protocol protocol() const { return Protocol::Cnip; }

    /// Current template; counter templates reflect any concession the
    /// provider has made by `ctx.iteration` / `ctx.round`.
    virtual AgreementDocument get_template(const NegotiationContext& ctx) = 0;

    virtual ProviderResponse handle_offer(const AgreementDocument& offer,
                                          const NegotiationContext& ctx) = 0;

    /// Cancels a provisional agreement (non-selected in a multilateral
    /// run). Idempotent.
    virtual void cancel(const AgreementDocument& agreement) = 0;

    /// Performs the agreed service call. The agreement authorizes it.
    /// Throws Error{ExecutionRejected} when the provider refuses.
    virtual Bindings execute(const AgreementDocument& agreement,
                             const Bindings& input) = 0;
};

struct OfferHistory {
    struct Entry {
        int round = 0;
        Sender sender = Sender::Consumer;
        AgreementDocument document;  // own offer or provider counter template
    };

    std::vector<Entry> entries;

    const AgreementDocument* last_counter_template() const;
    const AgreementDocument* last_own_offer() const;
};

/// Consumer decision in a bilateral round.
struct Decision {
    enum class Kind { Accept, Counter, Quit };

    Kind kind = Kind::Quit;
    Bindings bindings;  // engaged for Counter

    static Decision accept() { return {Kind::Accept, {}}; }
    static Decision counter(Bindings b) { return {Kind::Counter, std::move(b)}; }
    static Decision quit() { return {Kind::Quit, {}}; }
};

/// Consumer decision over collected agreements in a multilateral round.
struct AgreementsDecision {
    enum class Kind { Confirm, Counter, Quit };

    Kind kind = Kind::Quit;
    std::vector<std::string> confirm_ids;  // agreement ids, engaged for Confirm

    static AgreementsDecision confirm(std::vector<std::string> ids) {
        return {Kind::Confirm, std::move(ids)};
    }
    static AgreementsDecision counter() { return {Kind::Counter, {}}; }
    static AgreementsDecision quit() { return {Kind::Quit, {}}; }
};

/// The consumer's strategic negotiation logic.
class StrategyPort {
  public:
    virtual ~StrategyPort() = default;

    /// Bilateral: how to respond after the provider's counter template.
    virtual Decision decide(int round, const OfferHistory& history) = 0;

    /// Multilateral: what to do with the agreements of one iteration.
    virtual AgreementsDecision check_agreements(
        const std::vector<AgreementDocument>& agreements, int round) = 0;

    /// Multilateral counter step: bindings per provider kept in the next
    /// iteration; providers omitted from the map are excluded for good.
    virtual std::map<std::string, Bindings> filter_and_counter(
        const std::vector<std::pair<std::string, AgreementDocument>>& templates,
        int round) = 0;
};

}  // namespace agora::protocol
