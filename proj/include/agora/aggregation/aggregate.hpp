// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <string>
#include <vector>

#include "agora/contract/document.hpp"

namespace agora::aggregation {

/// Namespacing rule applied when per-provider terms are concatenated
/// into a class-level template.
struct PrefixRule {
    std::string provider_id;
    std::string separator = ".";

    std::string apply(const std::string& term_id) const {
        return provider_id + separator + term_id;
    }
};

/// Concatenates service templates into one domain-level template.
///
/// Terms that are structurally identical across every provider defining
/// them are merged into a single unprefixed term; terms that share id,
/// kind, unit and domain kind but differ in provider-specific content
/// (range bounds, enum members, required flag) coexist under prefixed
/// ids. Disagreement on kind, unit or domain kind is a domain-designer
/// error (ConflictingDuplicate). Constraints and guarantees are carried
/// over with rewritten references; identical constraint sets on a merged
/// term collapse to one unprefixed copy, differing sets stay prefixed
/// per provider.
contract::AgreementDocument aggregate_templates(
    const std::vector<contract::AgreementDocument>& templates);

/// Keeps the service templates compatible with the domain offer: a
/// template survives when every offer binding that maps onto one of its
/// terms (directly, or via the template provider's prefix) satisfies
/// that template's permissible values. Order is preserved.
std::vector<contract::AgreementDocument> filter_templates(
    const std::vector<contract::AgreementDocument>& templates,
    const contract::AgreementDocument& domain_offer);

/// True when `value` is allowed for `term_id` by the document's explicit
/// constraints (or by the term's own domain when unconstrained).
bool binding_admissible(const contract::AgreementDocument& doc,
                        const std::string& term_id,
                        const contract::TermValue& value);

}  // namespace agora::aggregation
