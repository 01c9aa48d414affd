// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/strategy/tactic.hpp"

#include <algorithm>
#include <cmath>

#include "agora/errors.hpp"

namespace agora::strategy {

using contract::DomainKind;
using contract::TermDefinition;
using contract::ValueDomain;
using contract::ValueKind;
using protocol::Sender;

namespace {

Decimal time_dependent_value(const Tactic& t, int round) {
    int clamped = std::clamp(round, 0, t.deadline_round);
    double frac = t.deadline_round == 0
                      ? 1.0
                      : std::pow(static_cast<double>(clamped) / t.deadline_round,
                                 t.beta);
    std::int64_t span = t.reserve.raw() - t.start.raw();
    return Decimal::from_raw(
        t.start.raw() + static_cast<std::int64_t>(std::llround(frac * span)));
}

// The opponent's concession is read off the movement of the permissible
// lower bound between its last two counter templates.
std::optional<Decimal> floor_of(const AgreementDocument& tmpl,
                                const std::string& term_id) {
    auto allowed = tmpl.permissible(term_id);
    if (!allowed || allowed->kind() != DomainKind::DecRange) {
        return std::nullopt;
    }
    return allowed->dec_lo();
}

Decimal behavior_dependent_value(const Tactic& t, const OfferHistory& history) {
    std::optional<Decimal> own;
    if (const AgreementDocument* offer = history.last_own_offer()) {
        if (const TermValue* v = offer->find_binding(t.term_id)) {
            if (v->kind() == ValueKind::Decimal) {
                own = v->as_decimal();
            }
        }
    }
    if (!own) {
        return t.start;
    }
    std::vector<Decimal> floors;
    for (const auto& entry : history.entries) {
        if (entry.sender != Sender::Provider) {
            continue;
        }
        if (auto f = floor_of(entry.document, t.term_id)) {
            floors.push_back(*f);
        }
    }
    if (floors.size() < 2) {
        return *own;
    }
    Decimal delta = floors[floors.size() - 2] - floors.back();
    std::int64_t magnitude = std::abs(delta.raw());
    std::int64_t direction = t.reserve.raw() >= t.start.raw() ? 1 : -1;
    return Decimal::from_raw(own->raw() + direction * magnitude);
}

}  // namespace

TermValue Tactic::value_at(int round, const OfferHistory& history) const {
    switch (kind) {
        case Kind::TimeDependent:
            return TermValue::decimal(time_dependent_value(*this, round));
        case Kind::BehaviorDependent:
            return TermValue::decimal(behavior_dependent_value(*this, history));
        case Kind::FixedTarget:
            return target;
    }
    return target;
}

WeightSchedule WeightSchedule::constant(std::vector<Decimal> weights) {
    WeightSchedule s;
    s.start_ = weights;
    s.end_ = std::move(weights);
    s.deadline_round_ = 0;
    return s;
}

WeightSchedule WeightSchedule::crossfade(std::vector<Decimal> start,
                                         std::vector<Decimal> end,
                                         int deadline_round) {
    if (start.size() != end.size()) {
        throw Error(Errc::InvalidRange, "weight vectors differ in length");
    }
    WeightSchedule s;
    s.start_ = std::move(start);
    s.end_ = std::move(end);
    s.deadline_round_ = std::max(deadline_round, 1);
    return s;
}

WeightSchedule WeightSchedule::behavior_then_criteria(int deadline_round) {
    return crossfade({Decimal::parse("0.8").value(), Decimal::parse("0.2").value()},
                     {Decimal::parse("0.2").value(), Decimal::parse("0.8").value()},
                     deadline_round);
}

std::vector<Decimal> WeightSchedule::weights_at(int round) const {
    std::vector<Decimal> raw(start_.size());
    if (deadline_round_ == 0) {
        raw = start_;
    } else {
        int t = std::clamp(round, 0, deadline_round_);
        for (std::size_t i = 0; i < start_.size(); ++i) {
            std::int64_t span = end_[i].raw() - start_[i].raw();
            raw[i] = Decimal::from_raw(start_[i].raw() +
                                       span * t / deadline_round_);
        }
    }
    return normalize_weights(raw);
}

std::vector<Decimal> normalize_weights(const std::vector<Decimal>& weights) {
    if (weights.empty()) {
        return {};
    }
    std::int64_t total = 0;
    for (Decimal w : weights) {
        if (w.raw() < 0) {
            throw Error(Errc::InvalidRange, "negative weight");
        }
        total += w.raw();
    }
    std::vector<Decimal> out(weights.size());
    if (total == 0) {
        // Even split with the remainder on the leading entries.
        std::int64_t base = Decimal::kScale / static_cast<std::int64_t>(weights.size());
        std::int64_t rem = Decimal::kScale % static_cast<std::int64_t>(weights.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = Decimal::from_raw(base + (static_cast<std::int64_t>(i) < rem));
        }
        return out;
    }
    // Largest remainder keeps the sum at exactly 1.0000.
    std::vector<std::pair<std::int64_t, std::size_t>> remainders;
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        __int128 scaled = static_cast<__int128>(weights[i].raw()) * Decimal::kScale;
        std::int64_t quot = static_cast<std::int64_t>(scaled / total);
        std::int64_t rem = static_cast<std::int64_t>(scaled % total);
        out[i] = Decimal::from_raw(quot);
        assigned += quot;
        remainders.emplace_back(rem, i);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; assigned < Decimal::kScale; ++k, ++assigned) {
        out[remainders[k % remainders.size()].second] += Decimal::from_raw(1);
    }
    return out;
}

namespace {

TermValue clamp_into(const ValueDomain& allowed, const TermValue& value,
                     const std::string& term_id) {
    if (allowed.contains(value)) {
        return value;
    }
    switch (allowed.kind()) {
        case DomainKind::DecRange:
            if (value.kind() == ValueKind::Decimal) {
                return TermValue::decimal(
                    std::clamp(value.as_decimal(), allowed.dec_lo(), allowed.dec_hi()));
            }
            break;
        case DomainKind::IntRange:
            if (value.kind() == ValueKind::Integer) {
                return TermValue::integer(
                    std::clamp(value.as_integer(), allowed.int_lo(), allowed.int_hi()));
            }
            break;
        case DomainKind::Enumeration:
            if (!allowed.members().empty()) {
                return TermValue::enum_member(allowed.members().front());
            }
            break;
        case DomainKind::Boolean:
            if (allowed.bool_only()) {
                return TermValue::boolean(*allowed.bool_only());
            }
            break;
        default:
            break;
    }
    throw Error(Errc::EmptyPermissibleRange, term_id);
}

TermValue default_for(const ValueDomain& allowed, const std::string& term_id) {
    switch (allowed.kind()) {
        case DomainKind::DecRange: return TermValue::decimal(allowed.dec_lo());
        case DomainKind::IntRange: return TermValue::integer(allowed.int_lo());
        case DomainKind::Enumeration:
            if (allowed.members().empty()) {
                throw Error(Errc::EmptyPermissibleRange, term_id);
            }
            return TermValue::enum_member(allowed.members().front());
        case DomainKind::Boolean:
            return TermValue::boolean(allowed.bool_only().value_or(false));
        case DomainKind::FreeText: return TermValue::text("");
    }
    throw Error(Errc::EmptyPermissibleRange, term_id);
}

}  // namespace

Bindings generate_counteroffer(const std::vector<Tactic>& tactics,
                               const WeightSchedule& schedule,
                               const AgreementDocument& counter_template,
                               int round, const OfferHistory& history) {
    if (counter_template.stage != contract::Stage::Template) {
        throw Error(Errc::InvalidDocument, "counteroffer needs a template");
    }
    std::vector<Decimal> weights = schedule.size() == tactics.size()
                                       ? schedule.weights_at(round)
                                       : normalize_weights(std::vector<Decimal>(
                                             tactics.size(), Decimal::from_int(1)));

    Bindings out;
    for (const TermDefinition& term : counter_template.terms) {
        if (term.kind == contract::TermKind::Output) {
            continue;
        }
        auto allowed = counter_template.permissible(term.id);
        bool needed = term.required;
        for (auto* c : counter_template.constraints_for(term.id)) {
            needed = needed || c->mandatory;
        }

        // Weighted combination of this term's tactic outputs.
        std::vector<std::pair<Decimal, TermValue>> contributions;
        for (std::size_t i = 0; i < tactics.size(); ++i) {
            if (tactics[i].term_id == term.id) {
                contributions.emplace_back(weights[i],
                                           tactics[i].value_at(round, history));
            }
        }
        std::optional<TermValue> combined;
        if (!contributions.empty()) {
            bool all_decimal = std::all_of(
                contributions.begin(), contributions.end(), [](const auto& c) {
                    return c.second.kind() == ValueKind::Decimal;
                });
            if (all_decimal) {
                std::int64_t weight_total = 0;
                __int128 acc = 0;
                for (const auto& [w, v] : contributions) {
                    weight_total += w.raw();
                    acc += static_cast<__int128>(w.raw()) * v.as_decimal().raw();
                }
                if (weight_total == 0) {
                    combined = contributions.front().second;
                } else {
                    __int128 half = weight_total / 2;
                    combined = TermValue::decimal(Decimal::from_raw(
                        static_cast<std::int64_t>((acc + half) / weight_total)));
                }
            } else {
                // Mixed kinds cannot be averaged: highest weight wins.
                auto best = std::max_element(
                    contributions.begin(), contributions.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
                combined = best->second;
            }
        } else if (const AgreementDocument* prev = history.last_own_offer()) {
            if (const TermValue* v = prev->find_binding(term.id)) {
                combined = *v;
            }
        }

        if (!combined && !needed) {
            continue;
        }
        if (!allowed || allowed->empty()) {
            throw Error(Errc::EmptyPermissibleRange, term.id);
        }
        out.emplace(term.id, combined ? clamp_into(*allowed, *combined, term.id)
                                      : default_for(*allowed, term.id));
    }
    return out;
}

}  // namespace agora::strategy
