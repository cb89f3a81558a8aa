#ifndef CHARSLICE_JSON_IO_HPP
#define CHARSLICE_JSON_IO_HPP

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

#include "charslice/presentation.hpp"
#include "charslice/reps.hpp"

namespace charslice::io {

using Json = nlohmann::ordered_json;

/// Parsed knot-data document: {"type":"lin",...}, {"type":"twobridge",...}
/// or {"type":"pretzel",...}.
struct KnotData {
    enum class Kind { lin, twobridge, pretzel };
    Kind kind;
    std::string name;

    presentation::LinPresentation lin;  // kind == lin
    sl2::Word tb_word;                  // kind == twobridge
    std::optional<int> tb_determinant;
    int p = 0, q = 0, r = 0;            // kind == pretzel
};

KnotData parse_knot_data(const Json& j);
KnotData load_knot_data(const std::string& path);
Json knot_data_to_json(const KnotData& data);

/// Group named by a presentation descriptor: inline knot data (the knot
/// group / two-bridge group / Brieskorn group of the cover) or
/// {"type":"lift","base":<lin data>,"n":N,"cover":"branched"|"cyclic"}.
/// A JSON string is treated as a path to a knot-data file.
std::shared_ptr<const presentation::Presentation> presentation_from_json(const Json& j);

/// {"presentation": <descriptor>, "assignment": {label: [[re,im] x4], ...}}
reps::Representation parse_representation(const Json& j);
reps::Representation load_representation(const std::string& path);
Json representation_to_json(const reps::Representation& rep, const Json& presentation_descriptor);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// 12 significant digits, complex as "re+imi" / "re-imi".
std::string format_real(double x);
std::string format_complex(sl2::Complex z);

}  // namespace charslice::io

#endif
