// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "agora/contract/operations.hpp"

namespace agora::strategy {

using contract::AgreementDocument;
using contract::Decimal;
using contract::TermValue;

/// Per-term value function v_i mapping a binding into [0,1].
struct ScoreFn {
    enum class Kind { Linear, Table, Constant };

    Kind kind = Kind::Constant;

    // Linear over a numeric range, clamped; descending when !ascending.
    Decimal lo;
    Decimal hi;
    bool ascending = true;

    // Table over enum/bool/text/int display values; misses score as
    // `fallback`.
    std::map<std::string, Decimal> table;
    Decimal fallback;

    Decimal constant = Decimal::from_int(1);

    static ScoreFn linear(Decimal lo, Decimal hi, bool ascending);
    static ScoreFn table_of(std::map<std::string, Decimal> entries,
                            Decimal fallback = Decimal{});
    static ScoreFn constant_of(Decimal value);

    /// Always within [0,1].
    Decimal eval(const TermValue& value) const;
};

/// Weighted additive scoring: score = sum_i w_i * v_i(binding_i) with the
/// weights normalized over the model's terms. Exact-rational comparisons
/// make the argmax invariant under positive weight rescaling.
struct ScoringModel {
    struct TermScore {
        Decimal weight;  // >= 0, need not be pre-normalized
        ScoreFn fn;
    };

    std::map<std::string, TermScore> terms;
};

/// Exact score as a rational (numerator/denominator) for comparisons.
struct Score {
    __int128 num = 0;
    std::int64_t den = 1;

    Decimal rounded() const;
    bool operator<(const Score& o) const;
    bool operator==(const Score& o) const;
    /// score >= t
    bool at_least(Decimal t) const;
};

/// Scores a fully bound offer. Throws Error{UnboundTerm} when a model
/// term has no binding and Error{UnscoredTerm} when a binding has no
/// score function.
Decimal score_offer(const ScoringModel& model, const AgreementDocument& offer);

Score score_offer_exact(const ScoringModel& model, const AgreementDocument& offer);

/// Acceptance thresholds as a schedule over rounds (a constant is the
/// degenerate case).
struct ThresholdSchedule {
    Decimal base;                  // threshold at round 0
    Decimal decay_per_round;       // subtracted per round
    Decimal floor;                 // never below this
    int deadline_round = 10;

    Decimal at(int round) const;
};

enum class DecisionKind { Accept, Counter, Quit };

/// Accept when the offer scores at or above the schedule, counter while
/// rounds remain, quit otherwise.
DecisionKind decide(const ScoringModel& model, const ThresholdSchedule& schedule,
                    const AgreementDocument& incoming, int round);

struct CheckResult {
    enum class Kind { Confirm, Counter, Quit };

    Kind kind = Kind::Quit;
    std::vector<std::string> confirm_ids;
};

/// Confirms the single highest-scoring agreement when it clears the
/// threshold (ties resolve to the earliest, i.e. registration order),
/// counters while iterations remain, quits otherwise.
CheckResult check_agreements(const ScoringModel& model,
                             const std::vector<AgreementDocument>& agreements,
                             int round, Decimal confirm_threshold,
                             int iteration_limit);

}  // namespace agora::strategy
