// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agora/contract/operations.hpp"
#include "agora/protocol/ports.hpp"

namespace agora::strategy {

using contract::AgreementDocument;
using contract::Bindings;
using contract::Decimal;
using contract::TermValue;
using protocol::OfferHistory;

/// One per-criterion value function. Time-dependent tactics follow the
/// polynomial concession value(t) = start + (t/deadline)^beta * (reserve
/// - start); behavior-dependent tactics mirror the opponent's last
/// concession; fixed-target tactics hold a constant.
struct Tactic {
    enum class Kind { TimeDependent, BehaviorDependent, FixedTarget };

    std::string term_id;
    Kind kind = Kind::FixedTarget;

    // time-dependent / behavior-dependent
    Decimal start;
    Decimal reserve;
    double beta = 1.0;        // > 0
    int deadline_round = 10;  // round at which the reserve is reached

    // fixed-target
    TermValue target;

    TermValue value_at(int round, const OfferHistory& history) const;
};

/// Per-tactic weight trajectories. The paper's example strategy (mirror
/// the market early, press the own criteria late) ships as the crossfade
/// preset from 0.8/0.2 to 0.2/0.8.
class WeightSchedule {
  public:
    /// Same weights at every round.
    static WeightSchedule constant(std::vector<Decimal> weights);

    /// Linear interpolation from `start` to `end` over deadline rounds.
    static WeightSchedule crossfade(std::vector<Decimal> start,
                                    std::vector<Decimal> end, int deadline_round);

    /// Built-in preset for two tactics ordered (behavior, criteria).
    static WeightSchedule behavior_then_criteria(int deadline_round);

    /// Normalized weights at `round`; sums to exactly 1.
    std::vector<Decimal> weights_at(int round) const;

    std::size_t size() const { return start_.size(); }

  private:
    WeightSchedule() = default;

    std::vector<Decimal> start_;
    std::vector<Decimal> end_;
    int deadline_round_ = 0;  // 0 = constant
};

/// Largest-remainder normalization: results are >= 0 and sum to exactly
/// 1.0000. All-zero input splits evenly.
std::vector<Decimal> normalize_weights(const std::vector<Decimal>& weights);

/// Combines the tactics of each term at `round`, weighted by the
/// schedule, and clamps the result into the counter template's
/// permissible values. Every term the template requires gets a value.
/// Throws Error{EmptyPermissibleRange} when a needed term has no
/// satisfiable value (the caller should quit).
Bindings generate_counteroffer(const std::vector<Tactic>& tactics,
                               const WeightSchedule& schedule,
                               const AgreementDocument& counter_template,
                               int round, const OfferHistory& history);

}  // namespace agora::strategy
