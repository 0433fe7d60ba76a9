#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gamelab/lts.hpp"
#include "gamelab/ocn_sim.hpp"
#include "gamelab/rgame.hpp"
#include "gamelab/seqdesc.hpp"
#include "gamelab/socn.hpp"

namespace gamelab {

/// Malformed document; the message starts with the path of the bad field.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses JSON text, reporting syntax errors with their byte offset.
nlohmann::json parse_json(const std::string& text);
nlohmann::json read_json_file(const std::string& path);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical(const nlohmann::json& doc);

// Each document may carry a "kind" tag; when present it must match.

Socn parse_socn(const nlohmann::json& doc);
nlohmann::json socn_to_json(const Socn& net);

/// socn-rgame documents; kind "countdown" is accepted as well.
SocnRGame parse_socn_rgame(const nlohmann::json& doc);
nlohmann::json socn_rgame_to_json(const SocnRGame& game, const std::string& kind = "socn-rgame");

RGame parse_rgame(const nlohmann::json& doc);
nlohmann::json rgame_to_json(const RGame& game);

SeqDescription parse_seqdesc(const nlohmann::json& doc);
nlohmann::json seqdesc_to_json(const SeqDescription& d);

TuringMachine parse_tm(const nlohmann::json& doc);
nlohmann::json tm_to_json(const TuringMachine& tm);

Lts parse_lts(const nlohmann::json& doc);
nlohmann::json lts_to_json(const Lts& lts);

/// Certificates name states of `net`; frontier entries are integers or "inf".
BeltCertificate parse_certificate(const nlohmann::json& doc, const Socn& net);
nlohmann::json certificate_to_json(const BeltCertificate& cert, const Socn& net);

}  // namespace gamelab
