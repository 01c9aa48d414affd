// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agora/decimal.hpp"

namespace agora::contract {

enum class ValueKind { Integer, Decimal, Text, Boolean, Enum };

std::string_view value_kind_name(ValueKind kind);

/// A single concrete term value. Enum members carry the member name;
/// membership in the declaring definition's set is checked where the
/// value meets its TermDefinition, not here.
class TermValue {
  public:
    TermValue() : data_(std::int64_t{0}) {}

    static TermValue integer(std::int64_t v) { return TermValue(v); }
    static TermValue decimal(Decimal v) { return TermValue(v); }
    static TermValue text(std::string v) { return TermValue(Text{std::move(v)}); }
    static TermValue boolean(bool v) { return TermValue(v); }
    static TermValue enum_member(std::string member) {
        return TermValue(EnumMember{std::move(member)});
    }

    ValueKind kind() const;

    std::int64_t as_integer() const { return std::get<std::int64_t>(data_); }
    Decimal as_decimal() const { return std::get<Decimal>(data_); }
    const std::string& as_text() const { return std::get<Text>(data_).value; }
    bool as_boolean() const { return std::get<bool>(data_); }
    const std::string& as_enum() const { return std::get<EnumMember>(data_).member; }

    /// Display form used in diagnostics and transcripts.
    std::string str() const;

    bool operator==(const TermValue& o) const { return data_ == o.data_; }

    // Defined for Integer/Decimal pairs of the same kind only.
    std::optional<std::weak_ordering> compare(const TermValue& o) const;

  private:
    struct Text {
        std::string value;
        bool operator==(const Text&) const = default;
    };
    struct EnumMember {
        std::string member;
        bool operator==(const EnumMember&) const = default;
    };

    using Data = std::variant<std::int64_t, Decimal, Text, bool, EnumMember>;

    explicit TermValue(Data d) : data_(std::move(d)) {}

    Data data_;
};

enum class DomainKind { IntRange, DecRange, Enumeration, FreeText, Boolean };

std::string_view domain_kind_name(DomainKind kind);

/// The set of values a term may take: a closed numeric range, an
/// enumeration, free text, or the booleans. Enumeration members are kept
/// sorted and deduplicated so structural equality is set equality.
class ValueDomain {
  public:
    ValueDomain() : data_(FreeText{}) {}

    static ValueDomain int_range(std::int64_t lo, std::int64_t hi);
    static ValueDomain dec_range(Decimal lo, Decimal hi);
    static ValueDomain enumeration(std::vector<std::string> members);
    static ValueDomain free_text() { return ValueDomain(FreeText{}); }
    static ValueDomain boolean() { return ValueDomain(Boolean{}); }
    static ValueDomain boolean_only(bool v) { return ValueDomain(Boolean{v}); }

    /// Singleton domain holding exactly `v`.
    static ValueDomain exactly(const TermValue& v);

    DomainKind kind() const;

    bool contains(const TermValue& v) const;
    bool subset_of(const ValueDomain& other) const;
    bool empty() const;

    /// Largest domain contained in both, when the kinds are compatible.
    std::optional<ValueDomain> intersect(const ValueDomain& other) const;

    std::int64_t int_lo() const { return std::get<IntRange>(data_).lo; }
    std::int64_t int_hi() const { return std::get<IntRange>(data_).hi; }
    Decimal dec_lo() const { return std::get<DecRange>(data_).lo; }
    Decimal dec_hi() const { return std::get<DecRange>(data_).hi; }
    const std::vector<std::string>& members() const {
        return std::get<Enumeration>(data_).members;
    }
    std::optional<bool> bool_only() const { return std::get<Boolean>(data_).only; }

    std::string str() const;

    bool operator==(const ValueDomain& o) const { return data_ == o.data_; }

  private:
    struct IntRange {
        std::int64_t lo, hi;
        bool operator==(const IntRange&) const = default;
    };
    struct DecRange {
        Decimal lo, hi;
        bool operator==(const DecRange&) const = default;
    };
    struct Enumeration {
        std::vector<std::string> members;
        bool operator==(const Enumeration&) const = default;
    };
    struct FreeText {
        bool operator==(const FreeText&) const = default;
    };
    struct Boolean {
        std::optional<bool> only;  // engaged when the domain is a singleton
        bool operator==(const Boolean&) const = default;
    };

    using Data = std::variant<IntRange, DecRange, Enumeration, FreeText, Boolean>;

    explicit ValueDomain(Data d) : data_(std::move(d)) {}

    Data data_;
};

}  // namespace agora::contract
