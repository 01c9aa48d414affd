// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/strategy/strategies.hpp"

#include <algorithm>

#include "agora/errors.hpp"
#include "agora/protocol/runners.hpp"

namespace agora::strategy {

using contract::DomainKind;
using contract::TermDefinition;
using contract::TermKind;
using contract::ValueKind;

Bindings complete_bindings(const AgreementDocument& tmpl, const Bindings& partial) {
    auto clamped = protocol::clamp_bindings(tmpl, partial);
    if (!clamped) {
        throw Error(Errc::EmptyPermissibleRange, "clamping failed");
    }
    Bindings out = std::move(*clamped);
    for (const TermDefinition& term : tmpl.terms) {
        if (term.kind == TermKind::Output || out.count(term.id)) {
            continue;
        }
        bool needed = term.required;
        for (auto* c : tmpl.constraints_for(term.id)) {
            needed = needed || c->mandatory;
        }
        if (!needed) {
            continue;
        }
        auto allowed = tmpl.permissible(term.id);
        if (!allowed || allowed->empty()) {
            throw Error(Errc::EmptyPermissibleRange, term.id);
        }
        switch (allowed->kind()) {
            case DomainKind::DecRange:
                out.emplace(term.id, TermValue::decimal(allowed->dec_lo()));
                break;
            case DomainKind::IntRange:
                out.emplace(term.id, TermValue::integer(allowed->int_lo()));
                break;
            case DomainKind::Enumeration:
                out.emplace(term.id,
                            TermValue::enum_member(allowed->members().front()));
                break;
            case DomainKind::Boolean:
                out.emplace(term.id,
                            TermValue::boolean(allowed->bool_only().value_or(false)));
                break;
            case DomainKind::FreeText:
                out.emplace(term.id, TermValue::text(""));
                break;
        }
    }
    return out;
}

// --- TacticStrategy ---------------------------------------------------

Decision TacticStrategy::decide(int round, const protocol::OfferHistory& history) {
    const AgreementDocument* tmpl = history.last_counter_template();
    if (!tmpl || round >= config_.deadline_round) {
        return Decision::quit();
    }
    try {
        Bindings next =
            generate_counteroffer(config_.tactics, config_.schedule, *tmpl, round,
                                  history);
        for (const auto& [id, v] : config_.base_bindings) {
            if (!next.count(id) && tmpl->find_term(id)) {
                next.emplace(id, v);
            }
        }
        return Decision::counter(complete_bindings(*tmpl, next));
    } catch (const Error& e) {
        if (e.code() == Errc::EmptyPermissibleRange) {
            return Decision::quit();
        }
        throw;
    }
}

AgreementsDecision TacticStrategy::check_agreements(
    const std::vector<AgreementDocument>& agreements, int round) {
    CheckResult result =
        strategy::check_agreements(config_.model, agreements, round,
                                   config_.confirm_threshold,
                                   config_.iteration_limit);
    switch (result.kind) {
        case CheckResult::Kind::Confirm:
            return AgreementsDecision::confirm(result.confirm_ids);
        case CheckResult::Kind::Counter:
            return AgreementsDecision::counter();
        case CheckResult::Kind::Quit:
            return AgreementsDecision::quit();
    }
    return AgreementsDecision::quit();
}

std::map<std::string, Bindings> TacticStrategy::filter_and_counter(
    const std::vector<std::pair<std::string, AgreementDocument>>& templates,
    int round) {
    std::map<std::string, Bindings> out;
    protocol::OfferHistory empty;
    for (const auto& [pid, tmpl] : templates) {
        try {
            Bindings next = generate_counteroffer(config_.tactics, config_.schedule,
                                                  tmpl, round, empty);
            for (const auto& [id, v] : config_.base_bindings) {
                if (!next.count(id) && tmpl.find_term(id)) {
                    next.emplace(id, v);
                }
            }
            out.emplace(pid, complete_bindings(tmpl, next));
        } catch (const Error& e) {
            if (e.code() != Errc::EmptyPermissibleRange) {
                throw;
            }
            // provider excluded: nothing satisfiable in its template
        }
    }
    return out;
}

// --- FixedConcessionStrategy ------------------------------------------

Decision FixedConcessionStrategy::decide(int round,
                                         const protocol::OfferHistory& history) {
    Bindings next;
    if (const AgreementDocument* own = history.last_own_offer()) {
        next = own->bindings;
    }
    next.insert_or_assign(
        term_id_, TermValue::decimal(Decimal::from_raw(
                      start_.raw() + step_.raw() * static_cast<std::int64_t>(round))));
    return Decision::counter(std::move(next));
}

AgreementsDecision FixedConcessionStrategy::check_agreements(
    const std::vector<AgreementDocument>& agreements, int round) {
    (void)round;
    if (agreements.empty()) {
        return AgreementsDecision::counter();
    }
    return AgreementsDecision::confirm({agreements.front().context.agreement_id});
}

std::map<std::string, Bindings> FixedConcessionStrategy::filter_and_counter(
    const std::vector<std::pair<std::string, AgreementDocument>>& templates,
    int round) {
    std::map<std::string, Bindings> out;
    for (const auto& [pid, tmpl] : templates) {
        Bindings b;
        b.emplace(term_id_,
                  TermValue::decimal(Decimal::from_raw(
                      start_.raw() + step_.raw() * static_cast<std::int64_t>(round))));
        out.emplace(pid, complete_bindings(tmpl, b));
    }
    return out;
}

// --- ReverseAuctionStrategy ---------------------------------------------

Decision ReverseAuctionStrategy::decide(int round,
                                        const protocol::OfferHistory& history) {
    (void)round;
    (void)history;
    // Multilateral-only policy; a bilateral bargaining session has no
    // competing floors to exploit.
    return Decision::quit();
}

AgreementsDecision ReverseAuctionStrategy::check_agreements(
    const std::vector<AgreementDocument>& agreements, int round) {
    if (agreements.empty()) {
        best_price_.reset();
        return round < config_.iteration_limit ? AgreementsDecision::counter()
                                               : AgreementsDecision::quit();
    }
    std::size_t best = 0;
    std::optional<Decimal> best_price;
    for (std::size_t i = 0; i < agreements.size(); ++i) {
        const TermValue* p = agreements[i].find_binding(config_.price_term);
        if (!p || p->kind() != ValueKind::Decimal) {
            continue;
        }
        if (!best_price || p->as_decimal() < *best_price) {
            best = i;
            best_price = p->as_decimal();
        }
    }
    if (!best_price) {
        return AgreementsDecision::quit();
    }
    best_price_ = best_price;

    // Confirm when no provider can undercut the held agreement, or when
    // iterations are about to run out.
    bool floor_reached =
        min_floor_ &&
        std::max(Decimal::from_raw(best_price->raw() - config_.step.raw()),
                 *min_floor_) >= *best_price;
    if (floor_reached || round >= config_.iteration_limit) {
        return AgreementsDecision::confirm({agreements[best].context.agreement_id});
    }
    return AgreementsDecision::counter();
}

std::map<std::string, Bindings> ReverseAuctionStrategy::filter_and_counter(
    const std::vector<std::pair<std::string, AgreementDocument>>& templates,
    int round) {
    (void)round;
    limits_.clear();
    min_floor_.reset();
    for (const auto& [pid, tmpl] : templates) {
        auto allowed = tmpl.permissible(config_.price_term);
        if (!allowed || allowed->kind() != DomainKind::DecRange) {
            continue;  // price not negotiable with this provider
        }
        limits_.emplace(pid, std::make_pair(allowed->dec_lo(), allowed->dec_hi()));
        if (!min_floor_ || allowed->dec_lo() < *min_floor_) {
            min_floor_ = allowed->dec_lo();
        }
    }

    std::map<std::string, Bindings> out;
    for (const auto& [pid, tmpl] : templates) {
        auto it = limits_.find(pid);
        if (it == limits_.end()) {
            continue;
        }
        const auto& [floor, hi] = it->second;
        Decimal target;
        if (best_price_) {
            target = std::max(
                Decimal::from_raw(best_price_->raw() - config_.step.raw()), floor);
        } else {
            // No agreement yet: open at the provider's asking price.
            target = hi;
        }
        target = std::min(target, hi);
        Bindings b = config_.base_bindings;
        b.insert_or_assign(config_.price_term, TermValue::decimal(target));
        out.emplace(pid, complete_bindings(tmpl, b));
    }
    return out;
}

}  // namespace agora::strategy
