// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agora/strategy/scoring.hpp"
#include "agora/strategy/tactic.hpp"

namespace agora::strategy {

using protocol::AgreementsDecision;
using protocol::Decision;
using protocol::StrategyPort;

/// Clamps `partial` into the template's permissible values and fills any
/// remaining required term with a deterministic default (range minimum,
/// first enumeration member, pinned boolean, empty string). The result
/// always passes fill_template. Throws Error{EmptyPermissibleRange}.
Bindings complete_bindings(const AgreementDocument& tmpl, const Bindings& partial);

/// Tactic-and-scoring consumer: counteroffers come from the weighted
/// tactic combination, multilateral selection from the scoring model.
class TacticStrategy : public StrategyPort {
  public:
    struct Config {
        std::vector<Tactic> tactics;
        WeightSchedule schedule = WeightSchedule::constant({});
        ScoringModel model;
        Decimal confirm_threshold;
        int deadline_round = 10;
        int iteration_limit = 10;
        Bindings base_bindings;  // non-negotiated terms (title, seats, ...)
    };

    explicit TacticStrategy(Config config) : config_(std::move(config)) {}

    Decision decide(int round, const protocol::OfferHistory& history) override;

    AgreementsDecision check_agreements(
        const std::vector<AgreementDocument>& agreements, int round) override;

    std::map<std::string, Bindings> filter_and_counter(
        const std::vector<std::pair<std::string, AgreementDocument>>& templates,
        int round) override;

  private:
    Config config_;
};

/// Test policy: concede a fixed amount per round on one term, never quit,
/// never accept; the provider (or the deadline) ends the session.
class FixedConcessionStrategy : public StrategyPort {
  public:
    FixedConcessionStrategy(std::string term_id, Decimal start, Decimal step)
        : term_id_(std::move(term_id)), start_(start), step_(step) {}

    Decision decide(int round, const protocol::OfferHistory& history) override;

    AgreementsDecision check_agreements(
        const std::vector<AgreementDocument>& agreements, int round) override;

    std::map<std::string, Bindings> filter_and_counter(
        const std::vector<std::pair<std::string, AgreementDocument>>& templates,
        int round) override;

  private:
    std::string term_id_;
    Decimal start_;
    Decimal step_;
};

/// Reverse-auction consumer for the iterated contract net: walk the
/// price down from the best collected agreement in fixed steps, clamp
/// into each provider's permissible range, confirm once no provider can
/// undercut the best agreement.
class ReverseAuctionStrategy : public StrategyPort {
  public:
    struct Config {
        std::string price_term = "price";
        Decimal step;                 // concession per iteration
        Bindings base_bindings;       // non-price terms of every offer
        ScoringModel model;           // used for final selection among ties
        int iteration_limit = 10;
    };

    explicit ReverseAuctionStrategy(Config config) : config_(std::move(config)) {}

    Decision decide(int round, const protocol::OfferHistory& history) override;

    AgreementsDecision check_agreements(
        const std::vector<AgreementDocument>& agreements, int round) override;

    std::map<std::string, Bindings> filter_and_counter(
        const std::vector<std::pair<std::string, AgreementDocument>>& templates,
        int round) override;

  private:
    Config config_;
    std::optional<Decimal> best_price_;
    std::optional<Decimal> min_floor_;
    std::map<std::string, std::pair<Decimal, Decimal>> limits_;  // pid -> (floor, hi)
};

}  // namespace agora::strategy
