// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/protocol/runners.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "agora/errors.hpp"

namespace agora::protocol {

using contract::Stage;
using contract::TermValue;
using contract::ValueDomain;

namespace {

const AgreementDocument* find_entry(const OfferHistory& history, Sender sender) {
    for (auto it = history.entries.rbegin(); it != history.entries.rend(); ++it) {
        if (it->sender == sender) {
            return &it->document;
        }
    }
    return nullptr;
}

NegotiationMessage make_message(MsgType type, Primitive primitive, Sender sender,
                                const std::string& session_id, Tick tick,
                                std::optional<AgreementDocument> payload = {}) {
    NegotiationMessage msg;
    msg.msg_type = type;
    msg.primitive = primitive;
    msg.sender = sender;
    msg.session_id = session_id;
    msg.tick = tick;
    msg.payload = std::move(payload);
    return msg;
}

void require_agreement_matches_offer(const AgreementDocument& agreement,
                                     const AgreementDocument& offer) {
    if (agreement.stage != Stage::Agreement) {
        throw Error(Errc::InvalidDocument, "provider accepted without an agreement");
    }
    if (agreement.bindings != offer.bindings) {
        throw Error(Errc::InvalidDocument,
                    "agreement bindings differ from the accepted offer");
    }
}

}  // namespace

const AgreementDocument* OfferHistory::last_counter_template() const {
    return find_entry(*this, Sender::Provider);
}

const AgreementDocument* OfferHistory::last_own_offer() const {
    return find_entry(*this, Sender::Consumer);
}

std::optional<Bindings> clamp_bindings(const AgreementDocument& tmpl,
                                       const Bindings& bindings) {
    Bindings out;
    for (const auto& [id, value] : bindings) {
        const contract::TermDefinition* term = tmpl.find_term(id);
        if (!term) {
            continue;  // term absent from the counter template: drop it
        }
        auto allowed = tmpl.permissible(id);
        if (!allowed || allowed->empty()) {
            return std::nullopt;
        }
        if (allowed->contains(value)) {
            out.emplace(id, value);
            continue;
        }
        switch (allowed->kind()) {
            case contract::DomainKind::IntRange:
                if (value.kind() != contract::ValueKind::Integer) {
                    return std::nullopt;
                }
                out.emplace(id, TermValue::integer(std::clamp(
                                    value.as_integer(), allowed->int_lo(),
                                    allowed->int_hi())));
                break;
            case contract::DomainKind::DecRange:
                if (value.kind() != contract::ValueKind::Decimal) {
                    return std::nullopt;
                }
                out.emplace(id, TermValue::decimal(std::clamp(
                                    value.as_decimal(), allowed->dec_lo(),
                                    allowed->dec_hi())));
                break;
            case contract::DomainKind::Enumeration:
                if (allowed->members().empty()) {
                    return std::nullopt;
                }
                out.emplace(id, TermValue::enum_member(allowed->members().front()));
                break;
            case contract::DomainKind::Boolean:
                if (allowed->bool_only()) {
                    out.emplace(id, TermValue::boolean(*allowed->bool_only()));
                    break;
                }
                return std::nullopt;
            default:
                return std::nullopt;
        }
    }
    return out;
}

SessionState NegotiationEngine::run_cnip(const AgreementDocument& offer,
                                         ProviderPort& provider,
                                         const Limits& limits,
                                         const std::string& session_id,
                                         int iteration) {
    SessionState state = open_session(session_id, Protocol::Cnip,
                                      limits.deadline_round, limits.deadline_tick);
    auto [after_offer, sent] =
        step(state, make_message(MsgType::Offer, Primitive::Propose, Sender::Consumer,
                                 session_id, transcript_.now() + 1, offer));
    state = after_offer;
    for (const auto& m : sent) {
        transcript_.append(m);
    }
    if (state.terminal()) {
        return state;
    }

    NegotiationContext ctx{session_id, state.round, iteration};
    ProviderResponse resp = provider.handle_offer(offer, ctx);
    Tick reply_tick = transcript_.now() + 1 + resp.delay_ticks;

    NegotiationMessage reply;
    if (resp.action == ProviderResponse::Action::Accept) {
        require_agreement_matches_offer(*resp.document, offer);
        reply = make_message(MsgType::Accepted, Primitive::Accept, Sender::Provider,
                             session_id, reply_tick, resp.document);
    } else {
        // Take it or leave it: a counter template from the port is a
        // provider error here and degrades to a plain rejection.
        reply = make_message(MsgType::Rejected, Primitive::Reject, Sender::Provider,
                             session_id, reply_tick);
    }
    auto [final_state, replies] = step(state, reply);
    state = final_state;
    for (const auto& m : replies) {
        transcript_.append(m);
    }
    return state;
}

SessionState NegotiationEngine::run_alternating_offers(
    const AgreementDocument& initial_offer, ProviderPort& provider,
    StrategyPort& strategy, const Limits& limits, const std::string& session_id,
    int iteration) {
    SessionState state =
        open_session(session_id, Protocol::AlternatingOffers,
                     limits.deadline_round, limits.deadline_tick);
    OfferHistory history;
    AgreementDocument current = initial_offer;
    bool opening = true;

    auto send = [&](NegotiationMessage msg) {
        auto [next, emitted] = step(state, msg);
        state = next;
        for (const auto& m : emitted) {
            transcript_.append(m);
        }
    };

    while (true) {
        send(make_message(opening ? MsgType::Offer : MsgType::Counteroffer,
                          opening ? Primitive::Propose : Primitive::Modify,
                          Sender::Consumer, session_id, transcript_.now() + 1,
                          current));
        if (state.terminal()) {
            return state;  // round or tick deadline passed
        }
        history.entries.push_back({state.round, Sender::Consumer, current});
        opening = false;

        NegotiationContext ctx{session_id, state.round, iteration};
        ProviderResponse resp = provider.handle_offer(current, ctx);
        Tick reply_tick = transcript_.now() + 1 + resp.delay_ticks;
        if (resp.action == ProviderResponse::Action::Accept) {
            require_agreement_matches_offer(*resp.document, current);
            send(make_message(MsgType::Accepted, Primitive::Accept, Sender::Provider,
                              session_id, reply_tick, resp.document));
            return state;
        }
        if (resp.action == ProviderResponse::Action::Reject) {
            send(make_message(MsgType::Rejected, Primitive::Reject, Sender::Provider,
                              session_id, reply_tick));
            return state;
        }
        const AgreementDocument counter_tmpl = *resp.document;
        if (counter_tmpl.stage != Stage::Template) {
            throw Error(Errc::InvalidDocument, "counter template not a template");
        }
        send(make_message(MsgType::Rejected, Primitive::CallForProposal,
                          Sender::Provider, session_id, reply_tick, counter_tmpl));
        if (state.terminal()) {
            return state;
        }
        history.entries.push_back({state.round, Sender::Provider, counter_tmpl});

        Decision decision = strategy.decide(state.round, history);
        if (decision.kind == Decision::Kind::Quit) {
            send(make_message(MsgType::Rejected, Primitive::Withdraw,
                              Sender::Consumer, session_id, transcript_.now() + 1));
            return state;
        }
        Bindings next_bindings;
        if (decision.kind == Decision::Kind::Accept) {
            // Comply with the provider's counter template: keep the
            // current bindings, clamped into its permissible values.
            auto clamped = clamp_bindings(counter_tmpl, current.bindings);
            if (!clamped) {
                send(make_message(MsgType::Rejected, Primitive::Withdraw,
                                  Sender::Consumer, session_id,
                                  transcript_.now() + 1));
                return state;
            }
            next_bindings = *clamped;
        } else {
            next_bindings = decision.bindings;
        }
        try {
            current = contract::fill_template(counter_tmpl, next_bindings);
        } catch (const Error& e) {
            // Out-of-range counteroffer: abort, outcome rejected, the
            // violation kept on the session state.
            send(make_message(MsgType::Rejected, Primitive::Reject,
                              Sender::Consumer, session_id, transcript_.now() + 1));
            state.note = e.what();
            return state;
        }
    }
}

void NegotiationEngine::cancel_agreement(ProviderPort& port,
                                         const AgreementDocument& agreement,
                                         const std::string& session_id, int round) {
    port.cancel(agreement);
    NegotiationMessage msg =
        make_message(MsgType::Unsigned, Primitive::Withdraw, Sender::Consumer,
                     session_id, transcript_.now() + 1, agreement);
    msg.round = round;
    transcript_.append(msg);
}

namespace {

struct PartyState {
    Party party;
    bool active = true;
    std::string last_session_id;
};

}  // namespace

MultilateralOutcome NegotiationEngine::run_iterated_cnip(
    const std::vector<Party>& parties, StrategyPort& strategy,
    const Limits& limits, const std::string& run_id) {
    if (parties.empty()) {
        throw Error(Errc::InvalidDocument, "no parties for multilateral negotiation");
    }
    const std::string coord_id = run_id + ".icnip";
    SessionState coord = open_session(coord_id, Protocol::IteratedCnip,
                                      limits.iteration_limit, limits.deadline_tick);
    MultilateralOutcome outcome;

    std::vector<PartyState> roster;
    roster.reserve(parties.size());
    for (const Party& p : parties) {
        roster.push_back({p, true, ""});
    }

    auto coord_step = [&](MsgType type, Primitive primitive, Sender sender,
                          std::optional<AgreementDocument> payload = {}) {
        auto [next, emitted] =
            step(coord, make_message(type, primitive, sender, coord_id,
                                     transcript_.now() + 1, std::move(payload)));
        coord = next;
        for (const auto& m : emitted) {
            transcript_.append(m);
        }
    };

    auto cancel_all = [&](const std::vector<std::pair<std::size_t, AgreementDocument>>&
                              provisional) {
        for (const auto& [idx, agreement] : provisional) {
            cancel_agreement(*roster[idx].party.port, agreement,
                             roster[idx].last_session_id, coord.round);
            ++outcome.cancellations;
        }
    };

    std::map<std::string, Bindings> previous_offers;
    bool stalled = false;

    while (true) {
        // Phase Dispatch: nobody left or no possible progress ends the
        // auction before new offers go out.
        std::size_t active_count = 0;
        for (const PartyState& ps : roster) {
            active_count += ps.active;
        }
        if (active_count == 0 || stalled) {
            coord_step(MsgType::Rejected, Primitive::Reject, Sender::Provider);
            outcome.outcome = OutcomeKind::Withdrawn;
            outcome.reason = "AllProvidersExhausted";
            return outcome;
        }

        // Dispatch marker; expires into Quit once past the iteration limit.
        coord_step(MsgType::Unsigned, Primitive::Propose, Sender::Consumer);
        if (coord.terminal()) {
            outcome.outcome = OutcomeKind::Expired;
            outcome.reason = "IterationLimit";
            return outcome;
        }
        const int iteration = coord.round;
        outcome.iterations = iteration;

        // Fan out the bilateral sessions. Contract-net parties carry no
        // mid-session strategy calls, so their provider decisions can be
        // evaluated concurrently; transcripts stay in registration order
        // because the sessions are replayed from the precomputed
        // responses sequentially.
        std::vector<std::pair<std::size_t, AgreementDocument>> provisional;
        std::size_t rejected_sessions = 0;

        std::map<std::size_t, ProviderResponse> prepared;
        if (!deterministic_) {
            std::vector<std::pair<std::size_t, std::future<ProviderResponse>>> futures;
            for (std::size_t i = 0; i < roster.size(); ++i) {
                PartyState& ps = roster[i];
                if (!ps.active || ps.party.port->protocol() != Protocol::Cnip) {
                    continue;
                }
                const std::string session_id = run_id + ".neg." + ps.party.party_id +
                                               ".i" + std::to_string(iteration);
                NegotiationContext ctx{session_id, 1, iteration};
                futures.emplace_back(
                    i, std::async(std::launch::async,
                                  [&ps, ctx]() {
                                      return ps.party.port->handle_offer(
                                          ps.party.offer, ctx);
                                  }));
            }
            for (auto& [i, fut] : futures) {
                prepared.emplace(i, fut.get());
            }
        }

        for (std::size_t i = 0; i < roster.size(); ++i) {
            PartyState& ps = roster[i];
            if (!ps.active) {
                continue;
            }
            const std::string session_id = run_id + ".neg." + ps.party.party_id +
                                           ".i" + std::to_string(iteration);
            ps.last_session_id = session_id;
            SessionState session;
            if (ps.party.port->protocol() == Protocol::AlternatingOffers) {
                session = run_alternating_offers(ps.party.offer, *ps.party.port,
                                                 strategy, limits, session_id,
                                                 iteration);
            } else if (auto it = prepared.find(i); it != prepared.end()) {
                session = run_cnip_prepared(ps.party.offer, it->second, limits,
                                            session_id);
            } else {
                session = run_cnip(ps.party.offer, *ps.party.port, limits,
                                   session_id, iteration);
            }
            switch (session.outcome.kind) {
                case OutcomeKind::Agreed:
                    provisional.emplace_back(i, *session.outcome.agreement);
                    break;
                case OutcomeKind::Expired:
                    ps.active = false;  // unresponsive provider drops out
                    break;
                default:
                    ++rejected_sessions;
                    break;
            }
        }

        outcome.provisional_history.emplace_back();
        for (const auto& [idx, agreement] : provisional) {
            outcome.provisional_history.back().push_back(agreement);
        }

        std::vector<AgreementDocument> collected;
        for (const auto& [idx, agreement] : provisional) {
            collected.push_back(agreement);
        }
        AgreementsDecision decision = strategy.check_agreements(collected, iteration);

        if (decision.kind == AgreementsDecision::Kind::Confirm) {
            std::vector<std::pair<std::size_t, AgreementDocument>> to_cancel;
            std::vector<std::pair<std::size_t, AgreementDocument>> confirmed;
            for (const auto& entry : provisional) {
                bool keep = std::find(decision.confirm_ids.begin(),
                                      decision.confirm_ids.end(),
                                      entry.second.context.agreement_id) !=
                            decision.confirm_ids.end();
                (keep ? confirmed : to_cancel).push_back(entry);
            }
            if (confirmed.empty()) {
                throw Error(Errc::InvalidDocument,
                            "strategy confirmed no collected agreement");
            }
            coord_step(MsgType::Signed, Primitive::Accept, Sender::Consumer,
                       confirmed.front().second);
            for (std::size_t i = 1; i < confirmed.size(); ++i) {
                NegotiationMessage extra = make_message(
                    MsgType::Signed, Primitive::Accept, Sender::Consumer, coord_id,
                    transcript_.now() + 1, confirmed[i].second);
                extra.round = coord.round;
                transcript_.append(extra);
            }
            cancel_all(to_cancel);
            for (const auto& [idx, agreement] : confirmed) {
                outcome.agreements.push_back(agreement);
            }
            outcome.outcome = OutcomeKind::Agreed;
            return outcome;
        }

        if (decision.kind == AgreementsDecision::Kind::Quit) {
            coord_step(MsgType::Rejected, Primitive::Withdraw, Sender::Consumer);
            cancel_all(provisional);
            outcome.outcome = OutcomeKind::Withdrawn;
            return outcome;
        }

        // Counter: request counter templates, filter, re-offer.
        coord_step(MsgType::Unsigned, Primitive::CallForProposal, Sender::Consumer);
        if (coord.terminal()) {
            cancel_all(provisional);
            outcome.outcome = OutcomeKind::Expired;
            outcome.reason = "DeadlineExceeded";
            return outcome;
        }
        std::vector<std::pair<std::string, AgreementDocument>> templates;
        for (PartyState& ps : roster) {
            if (!ps.active) {
                continue;
            }
            NegotiationContext ctx{coord_id, coord.round, iteration + 1};
            AgreementDocument tmpl = ps.party.port->get_template(ctx);
            NegotiationMessage response =
                make_message(MsgType::Unsigned, Primitive::Acknowledge,
                             Sender::Provider, coord_id, transcript_.now() + 1, tmpl);
            response.round = coord.round;
            transcript_.append(response);
            templates.emplace_back(ps.party.party_id, tmpl);
        }

        std::map<std::string, Bindings> counters =
            strategy.filter_and_counter(templates, iteration);
        if (counters.empty()) {
            coord_step(MsgType::Rejected, Primitive::Withdraw, Sender::Consumer);
            cancel_all(provisional);
            outcome.outcome = OutcomeKind::Withdrawn;
            outcome.reason = "NoProvidersKept";
            return outcome;
        }

        // Counteroffers supersede this iteration's provisional agreements.
        cancel_all(provisional);

        bool any_change = !provisional.empty();
        for (PartyState& ps : roster) {
            if (!ps.active) {
                continue;
            }
            auto it = counters.find(ps.party.party_id);
            if (it == counters.end()) {
                ps.active = false;  // excluded; never re-admitted
                continue;
            }
            auto prev = previous_offers.find(ps.party.party_id);
            if (prev == previous_offers.end() || prev->second != it->second) {
                any_change = true;
            }
            const AgreementDocument* tmpl = nullptr;
            for (const auto& [pid, t] : templates) {
                if (pid == ps.party.party_id) {
                    tmpl = &t;
                    break;
                }
            }
            ps.party.offer = contract::fill_template(*tmpl, it->second);
            previous_offers[ps.party.party_id] = it->second;
        }
        // Re-sending offers that every provider just rejected cannot
        // succeed; flag the stall and let Dispatch close the auction.
        stalled = !any_change && rejected_sessions > 0;

        coord_step(MsgType::Unsigned, Primitive::Modify, Sender::Consumer);
    }
}

SessionState NegotiationEngine::run_cnip_prepared(const AgreementDocument& offer,
                                                  const ProviderResponse& resp,
                                                  const Limits& limits,
                                                  const std::string& session_id) {
    SessionState state = open_session(session_id, Protocol::Cnip,
                                      limits.deadline_round, limits.deadline_tick);
    auto [after_offer, sent] =
        step(state, make_message(MsgType::Offer, Primitive::Propose, Sender::Consumer,
                                 session_id, transcript_.now() + 1, offer));
    state = after_offer;
    for (const auto& m : sent) {
        transcript_.append(m);
    }
    if (state.terminal()) {
        return state;
    }
    Tick reply_tick = transcript_.now() + 1 + resp.delay_ticks;
    NegotiationMessage reply;
    if (resp.action == ProviderResponse::Action::Accept) {
        require_agreement_matches_offer(*resp.document, offer);
        reply = make_message(MsgType::Accepted, Primitive::Accept, Sender::Provider,
                             session_id, reply_tick, resp.document);
    } else {
        reply = make_message(MsgType::Rejected, Primitive::Reject, Sender::Provider,
                             session_id, reply_tick);
    }
    auto [final_state, replies] = step(state, reply);
    state = final_state;
    for (const auto& m : replies) {
        transcript_.append(m);
    }
    return state;
}

}  // namespace agora::protocol
