// Copyright 2026 the Agora authors. Licensed under the Apache License,
// Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>.
#pragma once

#include <string>
#include <vector>

#include "agora/protocol/message.hpp"

namespace agora::protocol {

/// One transcript line. `payload_digest` is the FNV-1a 64 hex digest of
/// the payload's canonical serialization, empty when no payload.
struct TranscriptRecord {
    Tick tick = 0;
    std::string session_id;
    int round = 0;
    Sender sender = Sender::Consumer;
    MsgType msg_type = MsgType::Offer;
    Primitive primitive = Primitive::Propose;
    std::string payload_digest;

    std::string to_json_line() const;
    static TranscriptRecord from_json_line(const std::string& line);

    bool operator==(const TranscriptRecord&) const = default;
};

/// Append-only negotiation log and the logical clock: every recorded
/// message costs one tick, delayed replies move the clock forward to
/// their send tick. Ticks are strictly increasing across records.
class Transcript {
  public:
    /// Appends and returns the tick the record was stamped with.
    Tick append(const NegotiationMessage& msg);

    Tick now() const { return now_; }

    const std::vector<TranscriptRecord>& records() const { return records_; }

    std::size_t count_msg_type(MsgType t) const;
    std::size_t count_primitive(Primitive p) const;

    /// JSONL, one record per line, trailing newline after each.
    std::string serialize() const;

    void save(const std::string& path) const;
    static std::vector<TranscriptRecord> load(const std::string& path);

  private:
    std::vector<TranscriptRecord> records_;
    Tick now_ = 0;
};

}  // namespace agora::protocol
