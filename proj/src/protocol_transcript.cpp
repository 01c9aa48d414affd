// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#include "agora/protocol/transcript.hpp"

#include <fstream>
#include <json.hpp>

#include "agora/contract/json.hpp"
#include "agora/errors.hpp"

namespace agora::protocol {

using Json = nlohmann::ordered_json;

std::string TranscriptRecord::to_json_line() const {
    Json j;
    j["tick"] = tick;
    j["session_id"] = session_id;
    j["round"] = round;
    j["sender"] = sender_name(sender);
    j["msg_type"] = msg_type_name(msg_type);
    j["primitive"] = primitive_name(primitive);
    j["payload_digest"] = payload_digest;
    return j.dump();
}

TranscriptRecord TranscriptRecord::from_json_line(const std::string& line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    TranscriptRecord r;
    r.tick = j.at("tick").get<Tick>();
    r.session_id = j.at("session_id").get<std::string>();
    r.round = j.at("round").get<int>();
    auto sender = sender_from_string(j.at("sender").get<std::string>());
    auto msg_type = msg_type_from_string(j.at("msg_type").get<std::string>());
    auto primitive = primitive_from_string(j.at("primitive").get<std::string>());
    if (!sender || !msg_type || !primitive) {
        throw Error(Errc::ParseError, "bad transcript enum in: " + line);
    }
    r.sender = *sender;
    r.msg_type = *msg_type;
    r.primitive = *primitive;
    r.payload_digest = j.at("payload_digest").get<std::string>();
    return r;
}

Tick Transcript::append(const NegotiationMessage& msg) {
    TranscriptRecord r;
    // Honors the sender's tick when it is ahead of the clock (delayed
    // replies); otherwise the message costs one tick.
    r.tick = msg.tick > now_ ? msg.tick : now_ + 1;
    now_ = r.tick;
    r.session_id = msg.session_id;
    r.round = msg.round;
    r.sender = msg.sender;
    r.msg_type = msg.msg_type;
    r.primitive = msg.primitive;
    r.payload_digest = msg.payload ? contract::document_digest(*msg.payload) : "";
    records_.push_back(std::move(r));
    return now_;
}

std::size_t Transcript::count_msg_type(MsgType t) const {
    std::size_t n = 0;
    for (const auto& r : records_) {
        n += r.msg_type == t;
    }
    return n;
}

std::size_t Transcript::count_primitive(Primitive p) const {
    std::size_t n = 0;
    for (const auto& r : records_) {
        n += r.primitive == p;
    }
    return n;
}

std::string Transcript::serialize() const {
    std::string out;
    for (const auto& r : records_) {
        out += r.to_json_line();
        out += '\n';
    }
    return out;
}

void Transcript::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error(Errc::IoError, "cannot write " + path);
    }
    f << serialize();
}

std::vector<TranscriptRecord> Transcript::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error(Errc::IoError, "cannot read " + path);
    }
    std::vector<TranscriptRecord> out;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty()) {
            out.push_back(TranscriptRecord::from_json_line(line));
        }
    }
    return out;
}

}  // namespace agora::protocol
