// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <string>
#include <vector>

#include "agora/protocol/ports.hpp"
#include "agora/protocol/session.hpp"
#include "agora/protocol/transcript.hpp"

namespace agora::protocol {

struct Limits {
    int deadline_round = 20;
    Tick deadline_tick = 1'000'000;
    int iteration_limit = 10;
};

/// One participant of a multilateral negotiation. `party_id` is usually
/// the provider id; Search & Book negotiates per show and uses
/// "<provider>/<show>" ids against the same port.
struct Party {
    std::string party_id;
    ProviderPort* port = nullptr;
    AgreementDocument offer;
};

struct MultilateralOutcome {
    OutcomeKind outcome = OutcomeKind::Withdrawn;
    std::string reason;  // AllProvidersExhausted, IterationLimit, ... or empty
    std::vector<AgreementDocument> agreements;  // confirmed
    int iterations = 0;
    std::size_t cancellations = 0;
    /// Agreements collected per iteration, before confirm/cancel.
    std::vector<std::vector<AgreementDocument>> provisional_history;
};

/// Drives negotiation protocols against provider ports, recording every
/// message in the transcript (which owns the logical clock).
class NegotiationEngine {
  public:
    NegotiationEngine(Transcript& transcript, bool deterministic = true)
        : transcript_(transcript), deterministic_(deterministic) {}

    /// Take it or leave it: one offer, one reply, never a counteroffer.
    SessionState run_cnip(const AgreementDocument& offer, ProviderPort& provider,
                          const Limits& limits, const std::string& session_id,
                          int iteration = 1);

    /// Alternating offers: the provider answers with accept, quit,
    /// or a counter template whose permissible values bound the next
    /// counteroffer.
    SessionState run_alternating_offers(const AgreementDocument& initial_offer,
                                        ProviderPort& provider,
                                        StrategyPort& strategy,
                                        const Limits& limits,
                                        const std::string& session_id,
                                        int iteration = 1);

    /// Iterated contract net across competing providers. Each iteration
    /// runs every party's own bilateral protocol, hands collected
    /// agreements to the strategy, and either confirms (cancelling the
    /// rest), quits, or counters into the next iteration.
    MultilateralOutcome run_iterated_cnip(const std::vector<Party>& parties,
                                          StrategyPort& strategy,
                                          const Limits& limits,
                                          const std::string& run_id);

    /// Records an agreement cancellation (Unsigned/Withdraw) and calls
    /// the provider port.
    void cancel_agreement(ProviderPort& port, const AgreementDocument& agreement,
                          const std::string& session_id, int round);

    Transcript& transcript() { return transcript_; }

  private:
    SessionState run_cnip_prepared(const AgreementDocument& offer,
                                   const ProviderResponse& resp,
                                   const Limits& limits,
                                   const std::string& session_id);

    Transcript& transcript_;
    bool deterministic_;
};

/// Clamps bindings into the template's permissible values: numeric
/// values move to the nearest range bound, values outside enumerations
/// fall back to the first member. Nullopt when a term's permissible set
/// is empty.
std::optional<Bindings> clamp_bindings(const AgreementDocument& tmpl,
                                       const Bindings& bindings);

}  // namespace agora::protocol
