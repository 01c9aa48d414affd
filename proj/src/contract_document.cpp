// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/contract/document.hpp"

#include <algorithm>

#include "agora/errors.hpp"

namespace agora::contract {

std::string_view stage_name(Stage s) {
    switch (s) {
        case Stage::Template: return "template";
        case Stage::Offer: return "offer";
        case Stage::Agreement: return "agreement";
    }
    return "?";
}

std::string_view level_name(Level l) {
    return l == Level::Domain ? "domain" : "service";
}

std::string_view term_kind_name(TermKind k) {
    switch (k) {
        case TermKind::ServiceProperty: return "service-property";
        case TermKind::Input: return "input";
        case TermKind::Output: return "output";
    }
    return "?";
}

Predicate Predicate::equals(TermValue v) {
    return Predicate{Kind::Equals, std::move(v), TermValue{}};
}

Predicate Predicate::at_least(TermValue v) {
    return Predicate{Kind::AtLeast, std::move(v), TermValue{}};
}

Predicate Predicate::at_most(TermValue v) {
    return Predicate{Kind::AtMost, std::move(v), TermValue{}};
}

Predicate Predicate::within(TermValue lo, TermValue hi) {
    auto cmp = lo.compare(hi);
    if (!cmp || *cmp == std::weak_ordering::greater) {
        throw Error(Errc::InvalidRange, "within(" + lo.str() + "," + hi.str() + ")");
    }
    return Predicate{Kind::Within, std::move(lo), std::move(hi)};
}

bool Predicate::holds(const TermValue& observed) const {
    switch (kind) {
        case Kind::Equals:
            return observed == value;
        case Kind::AtLeast: {
            auto c = observed.compare(value);
            return c && *c != std::weak_ordering::less;
        }
        case Kind::AtMost: {
            auto c = observed.compare(value);
            return c && *c != std::weak_ordering::greater;
        }
        case Kind::Within: {
            auto lo = observed.compare(value);
            auto hi = observed.compare(upper);
            return lo && hi && *lo != std::weak_ordering::less &&
                   *hi != std::weak_ordering::greater;
        }
    }
    return false;
}

std::string Predicate::str() const {
    switch (kind) {
        case Kind::Equals: return "equals(" + value.str() + ")";
        case Kind::AtLeast: return "at_least(" + value.str() + ")";
        case Kind::AtMost: return "at_most(" + value.str() + ")";
        case Kind::Within: return "within(" + value.str() + "," + upper.str() + ")";
    }
    return "?";
}

const TermDefinition* AgreementDocument::find_term(const std::string& id) const {
    for (const auto& t : terms) {
        if (t.id == id) {
            return &t;
        }
    }
    return nullptr;
}

const TermValue* AgreementDocument::find_binding(const std::string& id) const {
    auto it = bindings.find(id);
    return it == bindings.end() ? nullptr : &it->second;
}

std::vector<const CreationConstraint*> AgreementDocument::constraints_for(
    const std::string& id) const {
    std::vector<const CreationConstraint*> out;
    for (const auto& c : constraints) {
        if (c.term_id == id) {
            out.push_back(&c);
        }
    }
    return out;
}

std::optional<ValueDomain> AgreementDocument::permissible(
    const std::string& term_id) const {
    const TermDefinition* term = find_term(term_id);
    if (!term) {
        return std::nullopt;
    }
    ValueDomain acc = term->domain;
    for (const CreationConstraint* c : constraints_for(term_id)) {
        auto next = acc.intersect(c->allowed);
        if (!next) {
            return std::nullopt;
        }
        acc = *next;
    }
    return acc;
}

void AgreementDocument::normalize() {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.id < b.id; });
    std::stable_sort(constraints.begin(), constraints.end(),
                     [](const auto& a, const auto& b) { return a.term_id < b.term_id; });
    std::stable_sort(guarantees.begin(), guarantees.end(),
                     [](const auto& a, const auto& b) { return a.term_id < b.term_id; });
}

namespace {

// Resolves a reference possibly carrying a provider prefix against a
// domain-level document: "alpha.price" falls back to the merged "price".
const TermDefinition* resolve_reference(const AgreementDocument& doc,
                                        const std::string& ref) {
    if (const TermDefinition* t = doc.find_term(ref)) {
        return t;
    }
    if (doc.level == Level::Domain) {
        auto dot = ref.find('.');
        if (dot != std::string::npos) {
            return doc.find_term(ref.substr(dot + 1));
        }
    }
    return nullptr;
}

}  // namespace

void AgreementDocument::check() const {
    // unique term ids
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i - 1].id == terms[i].id) {
            throw Error(Errc::InvalidDocument, "duplicate term id " + terms[i].id);
        }
    }
    for (const auto& c : constraints) {
        const TermDefinition* t = resolve_reference(*this, c.term_id);
        if (!t) {
            throw Error(Errc::UnknownTerm, "constraint on " + c.term_id);
        }
        // Subset invariant only binds exact references; a prefixed
        // provider constraint on a merged domain term may be narrower
        // than the merged domain in ways the provider declared.
        if (t->id == c.term_id && !c.allowed.subset_of(t->domain)) {
            throw Error(Errc::InvalidDocument,
                        "constraint on " + c.term_id + " not within term domain " +
                            t->domain.str());
        }
    }
    for (const auto& g : guarantees) {
        if (!resolve_reference(*this, g.term_id)) {
            throw Error(Errc::UnknownTerm, "guarantee on " + g.term_id);
        }
    }
    if (context.expiry != 0 && context.expiry <= context.created_tick) {
        throw Error(Errc::InvalidDocument, "expiry not after creation tick");
    }

    if (stage == Stage::Template) {
        if (!bindings.empty()) {
            throw Error(Errc::InvalidDocument, "template carries bindings");
        }
        if (!context.agreement_id.empty()) {
            throw Error(Errc::InvalidDocument, "template carries agreement id");
        }
        return;
    }

    for (const auto& [id, value] : bindings) {
        if (!resolve_reference(*this, id)) {
            throw Error(Errc::UnknownTerm, "binding for " + id);
        }
        (void)value;
    }
    for (const auto& t : terms) {
        bool must_bind = t.required;
        for (const CreationConstraint* c : constraints_for(t.id)) {
            must_bind = must_bind || c->mandatory;
        }
        if (must_bind && t.kind != TermKind::Output && !find_binding(t.id)) {
            throw Error(Errc::MissingBinding, t.id);
        }
    }
    if (stage == Stage::Agreement) {
        if (context.agreement_id.empty()) {
            throw Error(Errc::InvalidDocument, "agreement without agreement_id");
        }
        if (context.provider_id.empty()) {
            throw Error(Errc::InvalidDocument, "agreement without provider_id");
        }
    } else if (!context.agreement_id.empty()) {
        throw Error(Errc::InvalidDocument, "offer carries agreement id");
    }
}

AgreementDocument DocumentBuilder::build() const {
    AgreementDocument doc = doc_;
    doc.normalize();
    doc.check();
    return doc;
}

}  // namespace agora::contract
