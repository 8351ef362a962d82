#pragma once

#include <json.hpp>

#include "wallkit/discriminant.hpp"
#include "wallkit/isometry.hpp"
#include "wallkit/monodromy.hpp"
#include "wallkit/wall.hpp"

namespace wallkit {

using Json = nlohmann::json;

// Integers serialize as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; both forms parse back.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& v);  // "p/q" (or "p" for integers)

Json vec_to_json(const IntVec& v);
IntVec vec_from_json(const Json& j);
Json mat_to_json(const IntMat& m);
IntMat mat_from_json(const Json& j);

// File helpers; throw ParseError with the offending path in the message.
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// {"label": ..., "gram": [[...]]} from the fixture directory.
IntMat load_gram_fixture(const std::string& filename);

// A lattice is either a builtin name ("kummer(5)"), a path to a lattice
// JSON file, or an inline {"label", "gram"} object.
LatticePtr lattice_from_json(const Json& spec);
Json lattice_to_json(const LatticePtr& l);

// {"lattice": <spec>, "coords": [...]}
LatticeVector vector_from_json(const Json& j);
Json vector_to_json(const LatticeVector& v);

// {"lattice": <spec>, "matrix": [[...]]}
Isometry isometry_from_json(const Json& j);
Json isometry_to_json(const Isometry& g);

// Report bodies.
Json lattice_report(const LatticePtr& l);
Json disc_report(const DiscriminantGroup& g);
Json wall_report(const std::string& criterion, const WallVerdict& v);
Json mon_report(const MonVerdict& v);
Json trace_report(const KummerProofTrace& t);
Json og10_report(const OG10Certificate& c);

// Envelope: {"tool", "command", "inputs": {name: "fnv1a64:<hex>"}, "report"}.
// Input hashes are over the raw bytes of each input file.
Json report_envelope(const std::string& command,
                     const std::vector<std::pair<std::string, std::string>>& input_files,
                     Json body);

// Canonical serialization used everywhere: 2-space indent, sorted keys
// (nlohmann objects are ordered maps), trailing newline.
std::string dump_report(const Json& j);

}  // namespace wallkit
