// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/contract/operations.hpp"

#include <algorithm>

#include "agora/errors.hpp"

namespace agora::contract {

AgreementDocument generate_service_template(
    const ProviderProperties& props,
    const std::vector<TermDefinition>& input_schema,
    const std::vector<TermDefinition>& output_schema) {
    AgreementDocument doc;
    doc.stage = Stage::Template;
    doc.level = Level::Service;
    doc.context.provider_id = props.provider_id;
    doc.context.domain_id = props.domain_id;
    doc.context.expiry = props.expiry;

    for (const TermDefinition& schema_term : props.property_schema) {
        if (schema_term.domain.empty()) {
            throw Error(Errc::InvalidRange, "empty domain for " + schema_term.id);
        }
        auto it = props.values.find(schema_term.id);
        if (it == props.values.end()) {
            if (schema_term.required) {
                throw Error(Errc::MissingProperty, schema_term.id);
            }
            continue;  // optional property the provider does not declare
        }
        if (!schema_term.domain.contains(it->second)) {
            throw Error(Errc::ConstraintViolation,
                        schema_term.id + "=" + it->second.str() +
                            " outside property domain " + schema_term.domain.str());
        }
        TermDefinition term = schema_term;
        term.kind = TermKind::ServiceProperty;
        // The schema's required flag governs registration, not offers:
        // nobody re-binds a static property when filling the template.
        term.required = false;
        doc.terms.push_back(std::move(term));
        // Static value pinned as a creation constraint.
        doc.constraints.push_back(CreationConstraint{
            schema_term.id, ValueDomain::exactly(it->second), false});
    }

    auto add_schema_terms = [&](const std::vector<TermDefinition>& schema,
                                TermKind kind) {
        for (const TermDefinition& schema_term : schema) {
            TermDefinition term = schema_term;
            term.kind = kind;
            if (kind == TermKind::Output) {
                term.required = false;  // outputs are produced, never offered
            }
            doc.terms.push_back(term);
            auto range = props.ranges.find(schema_term.id);
            if (range != props.ranges.end()) {
                if (range->second.empty()) {
                    throw Error(Errc::InvalidRange, "empty range for " + schema_term.id);
                }
                if (!range->second.subset_of(schema_term.domain)) {
                    throw Error(Errc::InvalidRange,
                                "declared range for " + schema_term.id +
                                    " exceeds schema domain");
                }
                doc.constraints.push_back(CreationConstraint{
                    schema_term.id, range->second, schema_term.required});
                if (kind == TermKind::Output) {
                    // Observable output: range becomes a quality guarantee.
                    Predicate pred =
                        range->second.kind() == DomainKind::IntRange
                            ? Predicate::within(
                                  TermValue::integer(range->second.int_lo()),
                                  TermValue::integer(range->second.int_hi()))
                        : range->second.kind() == DomainKind::DecRange
                            ? Predicate::within(
                                  TermValue::decimal(range->second.dec_lo()),
                                  TermValue::decimal(range->second.dec_hi()))
                            : Predicate::equals(TermValue::text(""));
                    if (range->second.kind() == DomainKind::IntRange ||
                        range->second.kind() == DomainKind::DecRange) {
                        doc.guarantees.push_back(
                            GuaranteeTerm{schema_term.id, pred, Decimal::from_int(1)});
                    }
                }
            }
        }
    };
    add_schema_terms(input_schema, TermKind::Input);
    add_schema_terms(output_schema, TermKind::Output);

    doc.normalize();
    doc.check();
    return doc;
}

namespace {

// One breach per violated explicit constraint; the term's own domain
// acts as the implicit constraint when no explicit one matches the id.
void collect_breaches(const AgreementDocument& tmpl, const std::string& id,
                      const TermValue& value, std::vector<Violation>* out) {
    auto matching = tmpl.constraints_for(id);
    if (matching.empty()) {
        const TermDefinition* term = tmpl.find_term(id);
        if (term && !term->domain.contains(value)) {
            out->push_back({Violation::Kind::ConstraintBreach, id,
                            value.str() + " outside " + term->domain.str()});
        }
        return;
    }
    for (const CreationConstraint* c : matching) {
        if (!c->allowed.contains(value)) {
            out->push_back({Violation::Kind::ConstraintBreach, id,
                            value.str() + " outside " + c->allowed.str()});
        }
    }
}

bool must_bind(const AgreementDocument& tmpl, const TermDefinition& term) {
    if (term.kind == TermKind::Output) {
        return false;
    }
    if (term.required) {
        return true;
    }
    for (const CreationConstraint* c : tmpl.constraints_for(term.id)) {
        if (c->mandatory) {
            return true;
        }
    }
    return false;
}

}  // namespace

AgreementDocument fill_template(const AgreementDocument& tmpl,
                                const Bindings& bindings) {
    if (tmpl.stage != Stage::Template) {
        throw Error(Errc::InvalidDocument, "fill_template needs a template");
    }
    for (const auto& [id, value] : bindings) {
        if (!tmpl.find_term(id)) {
            throw Error(Errc::UnknownTerm, id);
        }
        std::vector<Violation> breaches;
        collect_breaches(tmpl, id, value, &breaches);
        if (!breaches.empty()) {
            throw Error(Errc::ConstraintViolation, breaches.front().term_id);
        }
    }
    for (const TermDefinition& term : tmpl.terms) {
        if (must_bind(tmpl, term) && !bindings.count(term.id)) {
            throw Error(Errc::MissingBinding, term.id);
        }
    }
    AgreementDocument offer = tmpl;
    offer.stage = Stage::Offer;
    offer.bindings = bindings;
    offer.check();
    return offer;
}

ValidationReport validate_offer(const AgreementDocument& tmpl,
                                const AgreementDocument& offer) {
    if (tmpl.stage != Stage::Template || offer.stage != Stage::Offer) {
        throw Error(Errc::InvalidDocument, "validate_offer needs template + offer");
    }
    if (tmpl.context.domain_id != offer.context.domain_id) {
        throw Error(Errc::DomainMismatch,
                    tmpl.context.domain_id + " vs " + offer.context.domain_id);
    }
    ValidationReport report;
    for (const TermDefinition& term : tmpl.terms) {
        const TermValue* bound = offer.find_binding(term.id);
        if (!bound) {
            if (must_bind(tmpl, term)) {
                report.violations.push_back(
                    {Violation::Kind::MissingBinding, term.id, "required term unbound"});
            }
            continue;
        }
        collect_breaches(tmpl, term.id, *bound, &report.violations);
    }
    for (const auto& [id, value] : offer.bindings) {
        if (!tmpl.find_term(id)) {
            report.violations.push_back(
                {Violation::Kind::UnknownTerm, id, "not a template term"});
        }
        (void)value;
    }
    return report;
}

std::vector<GuaranteeOutcome> evaluate_guarantees(const AgreementDocument& agr,
                                                  const Bindings& observed) {
    if (agr.stage != Stage::Agreement) {
        throw Error(Errc::InvalidDocument, "evaluate_guarantees needs an agreement");
    }
    std::vector<GuaranteeOutcome> outcomes;
    for (const GuaranteeTerm& g : agr.guarantees) {
        auto it = observed.find(g.term_id);
        if (it == observed.end()) {
            throw Error(Errc::MissingObservation, g.term_id);
        }
        outcomes.push_back(
            {g.term_id, g.predicate.holds(it->second), g.business_value});
    }
    return outcomes;
}

}  // namespace agora::contract
