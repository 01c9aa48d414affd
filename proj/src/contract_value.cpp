// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/contract/value.hpp"

#include <algorithm>

#include "agora/errors.hpp"

namespace agora::contract {

std::string_view value_kind_name(ValueKind kind) {
    switch (kind) {
        case ValueKind::Integer: return "int";
        case ValueKind::Decimal: return "dec";
        case ValueKind::Text: return "str";
        case ValueKind::Boolean: return "bool";
        case ValueKind::Enum: return "enum";
    }
    return "?";
}

ValueKind TermValue::kind() const {
    switch (data_.index()) {
        case 0: return ValueKind::Integer;
        case 1: return ValueKind::Decimal;
        case 2: return ValueKind::Text;
        case 3: return ValueKind::Boolean;
        default: return ValueKind::Enum;
    }
}

std::string TermValue::str() const {
    switch (kind()) {
        case ValueKind::Integer: return std::to_string(as_integer());
        case ValueKind::Decimal: return as_decimal().str();
        case ValueKind::Text: return as_text();
        case ValueKind::Boolean: return as_boolean() ? "true" : "false";
        case ValueKind::Enum: return as_enum();
    }
    return "";
}

std::optional<std::weak_ordering> TermValue::compare(const TermValue& o) const {
    if (kind() != o.kind()) {
        return std::nullopt;
    }
    if (kind() == ValueKind::Integer) {
        return as_integer() <=> o.as_integer();
    }
    if (kind() == ValueKind::Decimal) {
        return as_decimal().raw() <=> o.as_decimal().raw();
    }
    return std::nullopt;
}

std::string_view domain_kind_name(DomainKind kind) {
    switch (kind) {
        case DomainKind::IntRange: return "int-range";
        case DomainKind::DecRange: return "dec-range";
        case DomainKind::Enumeration: return "enumeration";
        case DomainKind::FreeText: return "string";
        case DomainKind::Boolean: return "boolean";
    }
    return "?";
}

ValueDomain ValueDomain::int_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw Error(Errc::InvalidRange,
                    std::to_string(lo) + " > " + std::to_string(hi));
    }
    return ValueDomain(IntRange{lo, hi});
}

ValueDomain ValueDomain::dec_range(Decimal lo, Decimal hi) {
    if (lo > hi) {
        throw Error(Errc::InvalidRange, lo.str() + " > " + hi.str());
    }
    return ValueDomain(DecRange{lo, hi});
}

ValueDomain ValueDomain::enumeration(std::vector<std::string> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return ValueDomain(Enumeration{std::move(members)});
}

ValueDomain ValueDomain::exactly(const TermValue& v) {
    switch (v.kind()) {
        case ValueKind::Integer: return int_range(v.as_integer(), v.as_integer());
        case ValueKind::Decimal: return dec_range(v.as_decimal(), v.as_decimal());
        case ValueKind::Text: return enumeration({v.as_text()});
        case ValueKind::Boolean: return boolean_only(v.as_boolean());
        case ValueKind::Enum: return enumeration({v.as_enum()});
    }
    return free_text();
}

DomainKind ValueDomain::kind() const {
    switch (data_.index()) {
        case 0: return DomainKind::IntRange;
        case 1: return DomainKind::DecRange;
        case 2: return DomainKind::Enumeration;
        case 3: return DomainKind::FreeText;
        default: return DomainKind::Boolean;
    }
}

bool ValueDomain::contains(const TermValue& v) const {
    switch (kind()) {
        case DomainKind::IntRange:
            return v.kind() == ValueKind::Integer && v.as_integer() >= int_lo() &&
                   v.as_integer() <= int_hi();
        case DomainKind::DecRange:
            return v.kind() == ValueKind::Decimal && v.as_decimal() >= dec_lo() &&
                   v.as_decimal() <= dec_hi();
        case DomainKind::Enumeration: {
            if (v.kind() != ValueKind::Enum && v.kind() != ValueKind::Text) {
                return false;
            }
            const std::string& m =
                v.kind() == ValueKind::Enum ? v.as_enum() : v.as_text();
            return std::binary_search(members().begin(), members().end(), m);
        }
        case DomainKind::FreeText:
            return v.kind() == ValueKind::Text || v.kind() == ValueKind::Enum;
        case DomainKind::Boolean:
            return v.kind() == ValueKind::Boolean &&
                   (!bool_only() || v.as_boolean() == *bool_only());
    }
    return false;
}

bool ValueDomain::subset_of(const ValueDomain& other) const {
    if (other.kind() == DomainKind::FreeText) {
        // A string term may be narrowed to an enumeration of literals.
        return kind() == DomainKind::FreeText || kind() == DomainKind::Enumeration;
    }
    if (kind() != other.kind()) {
        return false;
    }
    switch (kind()) {
        case DomainKind::IntRange:
            return int_lo() >= other.int_lo() && int_hi() <= other.int_hi();
        case DomainKind::DecRange:
            return dec_lo() >= other.dec_lo() && dec_hi() <= other.dec_hi();
        case DomainKind::Enumeration:
            return std::includes(other.members().begin(), other.members().end(),
                                 members().begin(), members().end());
        case DomainKind::FreeText:
            return true;
        case DomainKind::Boolean:
            return !other.bool_only() || bool_only() == other.bool_only();
    }
    return false;
}

bool ValueDomain::empty() const {
    return kind() == DomainKind::Enumeration && members().empty();
}

std::optional<ValueDomain> ValueDomain::intersect(const ValueDomain& other) const {
    if (kind() == DomainKind::FreeText) {
        return other;
    }
    if (other.kind() == DomainKind::FreeText) {
        return *this;
    }
    if (kind() != other.kind()) {
        return std::nullopt;
    }
    switch (kind()) {
        case DomainKind::IntRange: {
            std::int64_t lo = std::max(int_lo(), other.int_lo());
            std::int64_t hi = std::min(int_hi(), other.int_hi());
            if (lo > hi) {
                return enumeration({});  // empty
            }
            return int_range(lo, hi);
        }
        case DomainKind::DecRange: {
            Decimal lo = std::max(dec_lo(), other.dec_lo());
            Decimal hi = std::min(dec_hi(), other.dec_hi());
            if (lo > hi) {
                return enumeration({});
            }
            return dec_range(lo, hi);
        }
        case DomainKind::Enumeration: {
            std::vector<std::string> common;
            std::set_intersection(members().begin(), members().end(),
                                  other.members().begin(), other.members().end(),
                                  std::back_inserter(common));
            return enumeration(std::move(common));
        }
        case DomainKind::FreeText:
            return *this;
        case DomainKind::Boolean: {
            if (!bool_only()) return other;
            if (!other.bool_only() || other.bool_only() == bool_only()) return *this;
            return enumeration({});
        }
    }
    return std::nullopt;
}

std::string ValueDomain::str() const {
    switch (kind()) {
        case DomainKind::IntRange:
            return "[" + std::to_string(int_lo()) + "," + std::to_string(int_hi()) + "]";
        case DomainKind::DecRange:
            return "[" + dec_lo().str() + "," + dec_hi().str() + "]";
        case DomainKind::Enumeration: {
            std::string out = "{";
            for (std::size_t i = 0; i < members().size(); ++i) {
                if (i) out += ",";
                out += members()[i];
            }
            return out + "}";
        }
        case DomainKind::FreeText: return "string";
        case DomainKind::Boolean:
            return bool_only() ? (*bool_only() ? "boolean=true" : "boolean=false")
                               : "boolean";
    }
    return "?";
}

}  // namespace agora::contract
