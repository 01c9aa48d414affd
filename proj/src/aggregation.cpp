// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/aggregation/aggregate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "agora/errors.hpp"

namespace agora::aggregation {

using contract::AgreementDocument;
using contract::CreationConstraint;
using contract::GuaranteeTerm;
using contract::Level;
using contract::Stage;
using contract::TermDefinition;
using contract::TermValue;

namespace {

struct Occurrence {
    std::size_t template_index;
    std::string provider_id;
    const TermDefinition* term;
};

bool mergeable_group(const std::vector<Occurrence>& occurrences) {
    for (std::size_t i = 1; i < occurrences.size(); ++i) {
        if (!occurrences[i].term->same_structure(*occurrences[0].term)) {
            return false;
        }
    }
    return true;
}

// Kind, unit or domain *kind* disagreement cannot be namespaced away:
// the domain designer published contradictory vocabulary.
void check_no_vocabulary_conflict(const std::vector<Occurrence>& occurrences) {
    const TermDefinition* first = occurrences[0].term;
    for (std::size_t i = 1; i < occurrences.size(); ++i) {
        const TermDefinition* t = occurrences[i].term;
        if (t->kind != first->kind || t->unit != first->unit ||
            t->domain.kind() != first->domain.kind()) {
            throw Error(Errc::ConflictingDuplicate,
                        first->id + ": " + occurrences[0].provider_id + " vs " +
                            occurrences[i].provider_id);
        }
    }
}

}  // namespace

AgreementDocument aggregate_templates(
    const std::vector<AgreementDocument>& templates) {
    if (templates.empty()) {
        throw Error(Errc::InvalidDocument, "no templates to aggregate");
    }
    const std::string domain_id = templates[0].context.domain_id;
    for (const AgreementDocument& t : templates) {
        if (t.stage != Stage::Template || t.level != Level::Service) {
            throw Error(Errc::InvalidDocument, "aggregation needs service templates");
        }
        if (t.context.domain_id != domain_id) {
            throw Error(Errc::DomainMismatch,
                        domain_id + " vs " + t.context.domain_id);
        }
        if (t.context.provider_id.empty() ||
            t.context.provider_id.find('.') != std::string::npos) {
            throw Error(Errc::InvalidIdentifier,
                        "provider id '" + t.context.provider_id + "'");
        }
    }

    // Group occurrences by original id, first-appearance order.
    std::vector<std::string> group_order;
    std::map<std::string, std::vector<Occurrence>> groups;
    for (std::size_t i = 0; i < templates.size(); ++i) {
        for (const TermDefinition& term : templates[i].terms) {
            auto [it, inserted] = groups.try_emplace(term.id);
            if (inserted) {
                group_order.push_back(term.id);
            }
            it->second.push_back({i, templates[i].context.provider_id, &term});
        }
    }

    AgreementDocument out;
    out.stage = Stage::Template;
    out.level = Level::Domain;
    out.context.domain_id = domain_id;
    for (const AgreementDocument& t : templates) {
        if (t.context.expiry != 0 &&
            (out.context.expiry == 0 || t.context.expiry < out.context.expiry)) {
            out.context.expiry = t.context.expiry;
        }
    }

    // (template index, original id) -> output id
    std::map<std::pair<std::size_t, std::string>, std::string> rewrite;
    std::set<std::string> used_ids;
    std::map<std::string, bool> merged;  // original id -> merged?

    auto claim_id = [&](const std::string& id, const std::string& original) {
        if (!used_ids.insert(id).second) {
            throw Error(Errc::ConflictingDuplicate,
                        "output id collision on '" + id + "' (from " + original + ")");
        }
    };

    for (const std::string& id : group_order) {
        const auto& occurrences = groups[id];
        if (mergeable_group(occurrences)) {
            merged[id] = true;
            claim_id(id, id);
            out.terms.push_back(*occurrences[0].term);
            for (const Occurrence& o : occurrences) {
                rewrite[{o.template_index, id}] = id;
            }
        } else {
            check_no_vocabulary_conflict(occurrences);
            merged[id] = false;
            for (const Occurrence& o : occurrences) {
                PrefixRule rule{o.provider_id};
                std::string prefixed = rule.apply(id);
                claim_id(prefixed, id);
                TermDefinition term = *o.term;
                term.id = prefixed;
                out.terms.push_back(std::move(term));
                rewrite[{o.template_index, id}] = prefixed;
            }
        }
    }

    // Constraints and guarantees. For merged terms: one unprefixed copy
    // when every defining provider states the same list, otherwise each
    // provider's entries keep provenance via a prefixed reference.
    for (const std::string& id : group_order) {
        const auto& occurrences = groups[id];
        if (!merged[id]) {
            for (const Occurrence& o : occurrences) {
                const AgreementDocument& src = templates[o.template_index];
                std::string out_id = rewrite[{o.template_index, id}];
                for (const CreationConstraint* c : src.constraints_for(id)) {
                    CreationConstraint copy = *c;
                    copy.term_id = out_id;
                    out.constraints.push_back(std::move(copy));
                }
                for (const GuaranteeTerm& g : src.guarantees) {
                    if (g.term_id == id) {
                        GuaranteeTerm copy = g;
                        copy.term_id = out_id;
                        out.guarantees.push_back(std::move(copy));
                    }
                }
            }
            continue;
        }

        auto constraint_list = [&](const Occurrence& o) {
            std::vector<CreationConstraint> list;
            for (const CreationConstraint* c :
                 templates[o.template_index].constraints_for(id)) {
                list.push_back(*c);
            }
            return list;
        };
        auto guarantee_list = [&](const Occurrence& o) {
            std::vector<GuaranteeTerm> list;
            for (const GuaranteeTerm& g : templates[o.template_index].guarantees) {
                if (g.term_id == id) {
                    list.push_back(g);
                }
            }
            return list;
        };

        std::vector<CreationConstraint> first_constraints = constraint_list(occurrences[0]);
        bool constraints_identical = true;
        for (std::size_t i = 1; i < occurrences.size(); ++i) {
            if (constraint_list(occurrences[i]) != first_constraints) {
                constraints_identical = false;
                break;
            }
        }
        if (constraints_identical) {
            for (CreationConstraint& c : first_constraints) {
                out.constraints.push_back(std::move(c));
            }
        } else {
            for (const Occurrence& o : occurrences) {
                PrefixRule rule{o.provider_id};
                for (CreationConstraint c : constraint_list(o)) {
                    c.term_id = rule.apply(id);
                    out.constraints.push_back(std::move(c));
                }
            }
        }

        std::vector<GuaranteeTerm> first_guarantees = guarantee_list(occurrences[0]);
        bool guarantees_identical = true;
        for (std::size_t i = 1; i < occurrences.size(); ++i) {
            if (guarantee_list(occurrences[i]) != first_guarantees) {
                guarantees_identical = false;
                break;
            }
        }
        if (guarantees_identical) {
            for (GuaranteeTerm& g : first_guarantees) {
                out.guarantees.push_back(std::move(g));
            }
        } else {
            for (const Occurrence& o : occurrences) {
                PrefixRule rule{o.provider_id};
                for (GuaranteeTerm g : guarantee_list(o)) {
                    g.term_id = rule.apply(id);
                    out.guarantees.push_back(std::move(g));
                }
            }
        }
    }

    out.normalize();
    out.check();
    return out;
}

bool binding_admissible(const AgreementDocument& doc, const std::string& term_id,
                        const TermValue& value) {
    auto matching = doc.constraints_for(term_id);
    if (matching.empty()) {
        const TermDefinition* term = doc.find_term(term_id);
        return term && term->domain.contains(value);
    }
    return std::all_of(matching.begin(), matching.end(),
                       [&](const CreationConstraint* c) {
                           return c->allowed.contains(value);
                       });
}

std::vector<AgreementDocument> filter_templates(
    const std::vector<AgreementDocument>& templates,
    const AgreementDocument& domain_offer) {
    if (domain_offer.stage != Stage::Offer || domain_offer.level != Level::Domain) {
        throw Error(Errc::InvalidDocument, "filter needs a domain-level offer");
    }
    std::vector<AgreementDocument> survivors;
    for (const AgreementDocument& tmpl : templates) {
        const std::string prefix = tmpl.context.provider_id + ".";
        bool ok = true;
        for (const auto& [id, value] : domain_offer.bindings) {
            std::string target = id;
            if (id.rfind(prefix, 0) == 0) {
                target = id.substr(prefix.size());
            } else if (id.find('.') != std::string::npos) {
                continue;  // prefixed binding for a different provider
            }
            if (!tmpl.find_term(target)) {
                continue;  // binding does not map onto this template
            }
            if (!binding_admissible(tmpl, target, value)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            survivors.push_back(tmpl);
        }
    }
    return survivors;
}

}  // namespace agora::aggregation
