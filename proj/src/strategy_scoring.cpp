// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/strategy/scoring.hpp"

#include <algorithm>

#include "agora/errors.hpp"

namespace agora::strategy {

using contract::ValueKind;

ScoreFn ScoreFn::linear(Decimal lo, Decimal hi, bool ascending) {
    if (lo >= hi) {
        throw Error(Errc::InvalidRange, "linear score needs lo < hi");
    }
    ScoreFn fn;
    fn.kind = Kind::Linear;
    fn.lo = lo;
    fn.hi = hi;
    fn.ascending = ascending;
    return fn;
}

ScoreFn ScoreFn::table_of(std::map<std::string, Decimal> entries, Decimal fallback) {
    ScoreFn fn;
    fn.kind = Kind::Table;
    fn.table = std::move(entries);
    fn.fallback = fallback;
    for (const auto& [k, v] : fn.table) {
        if (v < Decimal{} || v > Decimal::from_int(1)) {
            throw Error(Errc::InvalidRange, "table score for " + k + " outside [0,1]");
        }
    }
    if (fallback < Decimal{} || fallback > Decimal::from_int(1)) {
        throw Error(Errc::InvalidRange, "table fallback outside [0,1]");
    }
    return fn;
}

ScoreFn ScoreFn::constant_of(Decimal value) {
    if (value < Decimal{} || value > Decimal::from_int(1)) {
        throw Error(Errc::InvalidRange, "constant score outside [0,1]");
    }
    ScoreFn fn;
    fn.kind = Kind::Constant;
    fn.constant = value;
    return fn;
}

Decimal ScoreFn::eval(const TermValue& value) const {
    switch (kind) {
        case Kind::Linear: {
            std::int64_t raw;
            if (value.kind() == ValueKind::Decimal) {
                raw = value.as_decimal().raw();
            } else if (value.kind() == ValueKind::Integer) {
                raw = value.as_integer() * Decimal::kScale;
            } else {
                return Decimal{};
            }
            std::int64_t clamped = std::clamp(raw, lo.raw(), hi.raw());
            __int128 num = static_cast<__int128>(clamped - lo.raw()) * Decimal::kScale;
            std::int64_t den = hi.raw() - lo.raw();
            __int128 half = den / 2;
            Decimal frac = Decimal::from_raw(static_cast<std::int64_t>((num + half) / den));
            return ascending ? frac : Decimal::from_int(1) - frac;
        }
        case Kind::Table: {
            auto it = table.find(value.str());
            return it == table.end() ? fallback : it->second;
        }
        case Kind::Constant:
            return constant;
    }
    return Decimal{};
}

Decimal Score::rounded() const {
    if (den == 0) {
        return Decimal{};
    }
    __int128 half = den / 2;
    return Decimal::from_raw(static_cast<std::int64_t>((num + half) / den));
}

bool Score::operator<(const Score& o) const {
    return num * o.den < o.num * den;
}

bool Score::operator==(const Score& o) const {
    return num * o.den == o.num * den;
}

bool Score::at_least(Decimal t) const {
    return num * Decimal::kScale >= static_cast<__int128>(t.raw()) * den;
}

Score score_offer_exact(const ScoringModel& model, const AgreementDocument& offer) {
    __int128 num = 0;
    std::int64_t den = 0;
    for (const auto& [term_id, term_score] : model.terms) {
        const TermValue* bound = offer.find_binding(term_id);
        if (!bound) {
            throw Error(Errc::UnboundTerm, term_id);
        }
        if (term_score.weight < Decimal{}) {
            throw Error(Errc::InvalidRange, "negative weight for " + term_id);
        }
        Decimal v = term_score.fn.eval(*bound);
        num += static_cast<__int128>(term_score.weight.raw()) * v.raw();
        den += term_score.weight.raw();
    }
    for (const auto& [id, value] : offer.bindings) {
        if (!model.terms.count(id)) {
            throw Error(Errc::UnscoredTerm, id);
        }
        (void)value;
    }
    if (den == 0) {
        return Score{0, 1};
    }
    return Score{num, den};
}

Decimal score_offer(const ScoringModel& model, const AgreementDocument& offer) {
    return score_offer_exact(model, offer).rounded();
}

Decimal ThresholdSchedule::at(int round) const {
    Decimal t = base - Decimal::from_raw(decay_per_round.raw() * round);
    return std::max(t, floor);
}

DecisionKind decide(const ScoringModel& model, const ThresholdSchedule& schedule,
                    const AgreementDocument& incoming, int round) {
    Score score = score_offer_exact(model, incoming);
    if (score.at_least(schedule.at(round))) {
        return DecisionKind::Accept;
    }
    if (round < schedule.deadline_round) {
        return DecisionKind::Counter;
    }
    return DecisionKind::Quit;
}

CheckResult check_agreements(const ScoringModel& model,
                             const std::vector<AgreementDocument>& agreements,
                             int round, Decimal confirm_threshold,
                             int iteration_limit) {
    if (agreements.empty()) {
        return round < iteration_limit
                   ? CheckResult{CheckResult::Kind::Counter, {}}
                   : CheckResult{CheckResult::Kind::Quit, {}};
    }
    std::size_t best = 0;
    Score best_score = score_offer_exact(model, agreements[0]);
    for (std::size_t i = 1; i < agreements.size(); ++i) {
        Score s = score_offer_exact(model, agreements[i]);
        if (best_score < s) {  // ties keep the earliest (registration order)
            best = i;
            best_score = s;
        }
    }
    if (best_score.at_least(confirm_threshold)) {
        return CheckResult{CheckResult::Kind::Confirm,
                           {agreements[best].context.agreement_id}};
    }
    if (round < iteration_limit) {
        return CheckResult{CheckResult::Kind::Counter, {}};
    }
    return CheckResult{CheckResult::Kind::Quit, {}};
}

}  // namespace agora::strategy
