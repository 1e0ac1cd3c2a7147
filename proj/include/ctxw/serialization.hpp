#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ctxw/game.hpp"
#include "ctxw/independence.hpp"
#include "ctxw/representation.hpp"
#include "ctxw/theta.hpp"
#include "ctxw/witness.hpp"

// JSON and CSV forms of the result types. Doubles go through nlohmann's
// shortest round-trip formatting, so reading a file back gives the same bits.
// Timing fields are left out so identical runs produce identical files.
namespace ctxw {

using Json = nlohmann::json;

Json to_json(const WitnessReport& r);
Json to_json(const IndependenceResult& r);
Json to_json(const ThetaResult& r);
Json to_json(const OrthonormalRepresentation& rep);
Json to_json(const GameResult& r);
Json to_json(const BoundCheck& c);
Json to_json(const ScanResult& r);

/// Throws InputError on a missing field or inconsistent sizes.
OrthonormalRepresentation representation_from_json(const Json& j);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string scan_csv_header();
std::string scan_csv_line(const ScanRow& row);

std::string table_csv_header();
std::string table_csv_line(const TableRow& row);

}  // namespace ctxw
