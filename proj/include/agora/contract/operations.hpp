// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "agora/contract/document.hpp"

namespace agora::contract {

using Bindings = std::map<std::string, TermValue>;

/// What a provider declares when joining a domain: the domain's property
/// schema, its own static values, and permissible ranges for negotiable
/// terms (which become creation constraints in the generated template).
struct ProviderProperties {
    std::string provider_id;
    std::string domain_id;
    std::vector<TermDefinition> property_schema;
    Bindings values;                              // static property values
    std::map<std::string, ValueDomain> ranges;    // declared permissible ranges
    Tick expiry = 0;                              // template lifetime; 0 = unbounded
};

/// Builds the provider's service-level template: one term per property,
/// input and output; creation constraints from static values and declared
/// ranges; guarantee terms for observable outputs. Deterministic — equal
/// inputs yield byte-identical canonical serializations.
AgreementDocument generate_service_template(
    const ProviderProperties& props,
    const std::vector<TermDefinition>& input_schema,
    const std::vector<TermDefinition>& output_schema);

/// Binds a template into an offer. The template is unchanged; all
/// required terms must be bound and every binding must satisfy the
/// template's constraints for that exact term id.
AgreementDocument fill_template(const AgreementDocument& tmpl, const Bindings& bindings);

struct Violation {
    enum class Kind { UnknownTerm, MissingBinding, ConstraintBreach };

    Kind kind;
    std::string term_id;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool admissible() const { return violations.empty(); }
};

/// Checks an offer against the template it answers. An empty report means
/// the offer is admissible. Violations are listed in template term order
/// (unknown-binding entries last, in binding order).
ValidationReport validate_offer(const AgreementDocument& tmpl,
                                const AgreementDocument& offer);

struct GuaranteeOutcome {
    std::string term_id;
    bool fulfilled = false;
    Decimal business_value;
};

/// Evaluates every guarantee term of an agreement against observed
/// values. Requires an observation for each guaranteed term.
std::vector<GuaranteeOutcome> evaluate_guarantees(const AgreementDocument& agr,
                                                  const Bindings& observed);

}  // namespace agora::contract
