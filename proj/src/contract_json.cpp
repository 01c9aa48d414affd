// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/contract/json.hpp"

#include <json.hpp>

#include "agora/errors.hpp"

namespace agora::contract {

using Json = nlohmann::ordered_json;

namespace {

Json value_to_json(const TermValue& v) {
    Json j;
    j["t"] = value_kind_name(v.kind());
    switch (v.kind()) {
        case ValueKind::Integer: j["v"] = v.as_integer(); break;
        case ValueKind::Decimal: j["v"] = v.as_decimal().str(); break;
        case ValueKind::Text: j["v"] = v.as_text(); break;
        case ValueKind::Boolean: j["v"] = v.as_boolean(); break;
        case ValueKind::Enum: j["v"] = v.as_enum(); break;
    }
    return j;
}

Decimal parse_decimal(const Json& j, const std::string& where) {
    if (!j.is_string()) {
        throw Error(Errc::ParseError, where + ": decimal must be a string");
    }
    auto d = Decimal::parse(j.get<std::string>());
    if (!d) {
        throw Error(Errc::ParseError, where + ": bad decimal " + j.get<std::string>());
    }
    return *d;
}

TermValue value_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("t") || !j.contains("v")) {
        throw Error(Errc::ParseError, where + ": malformed value");
    }
    const std::string t = j["t"].get<std::string>();
    if (t == "int") return TermValue::integer(j["v"].get<std::int64_t>());
    if (t == "dec") return TermValue::decimal(parse_decimal(j["v"], where));
    if (t == "str") return TermValue::text(j["v"].get<std::string>());
    if (t == "bool") return TermValue::boolean(j["v"].get<bool>());
    if (t == "enum") return TermValue::enum_member(j["v"].get<std::string>());
    throw Error(Errc::ParseError, where + ": unknown value kind " + t);
}

Json domain_to_json(const ValueDomain& d) {
    Json j;
    j["kind"] = domain_kind_name(d.kind());
    switch (d.kind()) {
        case DomainKind::IntRange:
            j["lo"] = d.int_lo();
            j["hi"] = d.int_hi();
            break;
        case DomainKind::DecRange:
            j["lo"] = d.dec_lo().str();
            j["hi"] = d.dec_hi().str();
            break;
        case DomainKind::Enumeration:
            j["members"] = d.members();
            break;
        case DomainKind::FreeText:
            break;
        case DomainKind::Boolean:
            if (d.bool_only()) {
                j["only"] = *d.bool_only();
            }
            break;
    }
    return j;
}

ValueDomain domain_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind")) {
        throw Error(Errc::ParseError, where + ": malformed domain");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "int-range") {
        return ValueDomain::int_range(j.at("lo").get<std::int64_t>(),
                                      j.at("hi").get<std::int64_t>());
    }
    if (kind == "dec-range") {
        return ValueDomain::dec_range(parse_decimal(j.at("lo"), where),
                                      parse_decimal(j.at("hi"), where));
    }
    if (kind == "enumeration") {
        return ValueDomain::enumeration(j.at("members").get<std::vector<std::string>>());
    }
    if (kind == "string") {
        return ValueDomain::free_text();
    }
    if (kind == "boolean") {
        if (j.contains("only")) {
            return ValueDomain::boolean_only(j["only"].get<bool>());
        }
        return ValueDomain::boolean();
    }
    throw Error(Errc::ParseError, where + ": unknown domain kind " + kind);
}

Json predicate_to_json(const Predicate& p) {
    Json j;
    switch (p.kind) {
        case Predicate::Kind::Equals:
            j["kind"] = "equals";
            j["value"] = value_to_json(p.value);
            break;
        case Predicate::Kind::AtLeast:
            j["kind"] = "at_least";
            j["value"] = value_to_json(p.value);
            break;
        case Predicate::Kind::AtMost:
            j["kind"] = "at_most";
            j["value"] = value_to_json(p.value);
            break;
        case Predicate::Kind::Within:
            j["kind"] = "within";
            j["lo"] = value_to_json(p.value);
            j["hi"] = value_to_json(p.upper);
            break;
    }
    return j;
}

Predicate predicate_from_json(const Json& j, const std::string& where) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "equals") return Predicate::equals(value_from_json(j.at("value"), where));
    if (kind == "at_least") return Predicate::at_least(value_from_json(j.at("value"), where));
    if (kind == "at_most") return Predicate::at_most(value_from_json(j.at("value"), where));
    if (kind == "within") {
        return Predicate::within(value_from_json(j.at("lo"), where),
                                 value_from_json(j.at("hi"), where));
    }
    throw Error(Errc::ParseError, where + ": unknown predicate " + kind);
}

Stage stage_from_string(const std::string& s) {
    if (s == "template") return Stage::Template;
    if (s == "offer") return Stage::Offer;
    if (s == "agreement") return Stage::Agreement;
    throw Error(Errc::ParseError, "unknown stage " + s);
}

Level level_from_string(const std::string& s) {
    if (s == "domain") return Level::Domain;
    if (s == "service") return Level::Service;
    throw Error(Errc::ParseError, "unknown level " + s);
}

TermKind term_kind_from_string(const std::string& s) {
    if (s == "service-property") return TermKind::ServiceProperty;
    if (s == "input") return TermKind::Input;
    if (s == "output") return TermKind::Output;
    throw Error(Errc::ParseError, "unknown term kind " + s);
}

}  // namespace

std::string to_canonical_json(const AgreementDocument& doc) {
    Json j;
    j["stage"] = stage_name(doc.stage);
    j["level"] = level_name(doc.level);
    Json ctx;
    ctx["consumer_id"] = doc.context.consumer_id;
    ctx["provider_id"] = doc.context.provider_id;
    ctx["domain_id"] = doc.context.domain_id;
    ctx["created_tick"] = doc.context.created_tick;
    ctx["expiry"] = doc.context.expiry;
    ctx["agreement_id"] = doc.context.agreement_id;
    j["context"] = std::move(ctx);

    Json terms = Json::array();
    for (const auto& t : doc.terms) {
        Json jt;
        jt["id"] = t.id;
        jt["kind"] = term_kind_name(t.kind);
        jt["unit"] = t.unit;
        jt["domain"] = domain_to_json(t.domain);
        jt["required"] = t.required;
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);

    Json constraints = Json::array();
    for (const auto& c : doc.constraints) {
        Json jc;
        jc["term_id"] = c.term_id;
        jc["allowed"] = domain_to_json(c.allowed);
        jc["mandatory"] = c.mandatory;
        constraints.push_back(std::move(jc));
    }
    j["constraints"] = std::move(constraints);

    Json guarantees = Json::array();
    for (const auto& g : doc.guarantees) {
        Json jg;
        jg["term_id"] = g.term_id;
        jg["predicate"] = predicate_to_json(g.predicate);
        jg["business_value"] = g.business_value.str();
        guarantees.push_back(std::move(jg));
    }
    j["guarantees"] = std::move(guarantees);

    Json bindings = Json::object();
    for (const auto& [id, v] : doc.bindings) {  // std::map iterates sorted
        bindings[id] = value_to_json(v);
    }
    j["bindings"] = std::move(bindings);

    return j.dump();
}

AgreementDocument from_canonical_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    try {
        AgreementDocument doc;
        doc.stage = stage_from_string(j.at("stage").get<std::string>());
        doc.level = level_from_string(j.at("level").get<std::string>());
        const Json& ctx = j.at("context");
        doc.context.consumer_id = ctx.at("consumer_id").get<std::string>();
        doc.context.provider_id = ctx.at("provider_id").get<std::string>();
        doc.context.domain_id = ctx.at("domain_id").get<std::string>();
        doc.context.created_tick = ctx.at("created_tick").get<Tick>();
        doc.context.expiry = ctx.at("expiry").get<Tick>();
        doc.context.agreement_id = ctx.at("agreement_id").get<std::string>();
        for (const Json& jt : j.at("terms")) {
            TermDefinition t;
            t.id = jt.at("id").get<std::string>();
            t.kind = term_kind_from_string(jt.at("kind").get<std::string>());
            t.unit = jt.at("unit").get<std::string>();
            t.domain = domain_from_json(jt.at("domain"), "term " + t.id);
            t.required = jt.at("required").get<bool>();
            doc.terms.push_back(std::move(t));
        }
        for (const Json& jc : j.at("constraints")) {
            CreationConstraint c;
            c.term_id = jc.at("term_id").get<std::string>();
            c.allowed = domain_from_json(jc.at("allowed"), "constraint " + c.term_id);
            c.mandatory = jc.at("mandatory").get<bool>();
            doc.constraints.push_back(std::move(c));
        }
        for (const Json& jg : j.at("guarantees")) {
            GuaranteeTerm g;
            g.term_id = jg.at("term_id").get<std::string>();
            g.predicate = predicate_from_json(jg.at("predicate"), "guarantee " + g.term_id);
            g.business_value = parse_decimal(jg.at("business_value"), "guarantee " + g.term_id);
            doc.guarantees.push_back(std::move(g));
        }
        for (const auto& [id, jv] : j.at("bindings").items()) {
            doc.bindings.insert_or_assign(id, value_from_json(jv, "binding " + id));
        }
        doc.normalize();
        doc.check();
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string document_digest(const AgreementDocument& doc) {
    return fnv1a64_hex(to_canonical_json(doc));
}

}  // namespace agora::contract
