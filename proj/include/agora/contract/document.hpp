// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agora/contract/value.hpp"

namespace agora::contract {

using Tick = std::int64_t;

enum class Stage { Template, Offer, Agreement };
enum class Level { Domain, Service };
enum class TermKind { ServiceProperty, Input, Output };

std::string_view stage_name(Stage s);
std::string_view level_name(Level l);
std::string_view term_kind_name(TermKind k);

struct TermDefinition {
    std::string id;
    TermKind kind = TermKind::Input;
    std::string unit;  // free-form, e.g. "EUR", "seats"
    ValueDomain domain;
    bool required = false;

    bool operator==(const TermDefinition&) const = default;

    /// Structural identity used by aggregation's duplicate detection.
    bool same_structure(const TermDefinition& o) const {
        return id == o.id && kind == o.kind && unit == o.unit &&
               domain == o.domain && required == o.required;
    }
};

struct Predicate {
    enum class Kind { Equals, AtLeast, AtMost, Within };

    Kind kind = Kind::Equals;
    TermValue value;           // Equals / AtLeast / AtMost / Within lower bound
    TermValue upper;           // Within upper bound only

    static Predicate equals(TermValue v);
    static Predicate at_least(TermValue v);
    static Predicate at_most(TermValue v);
    static Predicate within(TermValue lo, TermValue hi);

    bool holds(const TermValue& observed) const;
    std::string str() const;

    bool operator==(const Predicate&) const = default;
};

struct GuaranteeTerm {
    std::string term_id;
    Predicate predicate;
    Decimal business_value;  // penalty/reward weight, unitless

    bool operator==(const GuaranteeTerm&) const = default;
};

struct CreationConstraint {
    std::string term_id;
    ValueDomain allowed;
    bool mandatory = false;

    bool operator==(const CreationConstraint&) const = default;
};

struct AgreementContext {
    std::string consumer_id;
    std::string provider_id;  // empty on domain-level templates
    std::string domain_id;
    Tick created_tick = 0;
    Tick expiry = 0;            // logical simulation ticks
    std::string agreement_id;   // empty until Agreement stage

    bool operator==(const AgreementContext&) const = default;
};

/// The contract artifact exchanged at every pipeline stage. Documents are
/// immutable values after construction; every operation returns a new one.
///
/// Term, constraint and guarantee lists are kept sorted by term id
/// (construction normalizes), which makes the canonical serialization a
/// bijection on the model.
struct AgreementDocument {
    Stage stage = Stage::Template;
    Level level = Level::Service;
    AgreementContext context;
    std::vector<TermDefinition> terms;
    std::vector<CreationConstraint> constraints;
    std::vector<GuaranteeTerm> guarantees;
    std::map<std::string, TermValue> bindings;

    bool operator==(const AgreementDocument&) const = default;

    const TermDefinition* find_term(const std::string& id) const;
    const TermValue* find_binding(const std::string& id) const;

    /// Constraints whose term_id matches `id` exactly.
    std::vector<const CreationConstraint*> constraints_for(const std::string& id) const;

    /// Intersection of the term's own domain with every matching
    /// constraint; nullopt when a constraint's kind is incompatible.
    std::optional<ValueDomain> permissible(const std::string& term_id) const;

    /// Sorts term/constraint/guarantee lists by term id (stable).
    void normalize();

    /// Structural checks shared by all stages plus the stage-specific
    /// rules (bindings totality for offers, ids for agreements).
    /// Throws Error{InvalidDocument, InvalidRange, UnknownTerm, ...}.
    void check() const;
};

/// Convenience builder for tests and the simulator.
class DocumentBuilder {
  public:
    explicit DocumentBuilder(Stage stage, Level level = Level::Service) {
        doc_.stage = stage;
        doc_.level = level;
    }

    DocumentBuilder& context(AgreementContext ctx) {
        doc_.context = std::move(ctx);
        return *this;
    }
    DocumentBuilder& term(TermDefinition def) {
        doc_.terms.push_back(std::move(def));
        return *this;
    }
    DocumentBuilder& constraint(CreationConstraint c) {
        doc_.constraints.push_back(std::move(c));
        return *this;
    }
    DocumentBuilder& guarantee(GuaranteeTerm g) {
        doc_.guarantees.push_back(std::move(g));
        return *this;
    }
    DocumentBuilder& bind(std::string id, TermValue v) {
        doc_.bindings.insert_or_assign(std::move(id), std::move(v));
        return *this;
    }

    /// Normalizes and validates before handing the document out.
    AgreementDocument build() const;

  private:
    AgreementDocument doc_;
};

}  // namespace agora::contract
