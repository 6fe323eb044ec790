#ifndef OLIVER_REPORT_HPP
#define OLIVER_REPORT_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "oliver/chartable.hpp"
#include "oliver/engine.hpp"
#include "oliver/fixeddim.hpp"

namespace oliver {

/// FNV-1a over a canonical string rendering; stable across platforms.
std::string digest(const std::string& text);

std::string table_digest(const CharacterTable& t);
std::string values_digest(const std::vector<Cyc>& values);

/// Byte-deterministic report document (fixed key order, no timing data).
nlohmann::ordered_json report_to_json(const ExclusionReport& report);
std::string report_to_string(const ExclusionReport& report);

/// CSV with rows = character labels and columns = subgroup class ids.
std::string fixdim_csv(const FixedDimTable& table);

/// Character table interchange format:
///   conductor: <e>
///   classes: <k>
///   class: <size> <representative cycle notation>   (one per class)
///   <k comma-separated values per character line, integer polynomials in z>
void write_chartab(std::ostream& out, const CharacterTable& t, const Group& G);
std::string chartab_to_string(const CharacterTable& t, const Group& G);

/// Reads the interchange format and aligns columns to the group's internal
/// class order by matching representatives. The file conductor must divide
/// the group exponent. The result always passes verify_orthogonality.
CharacterTable read_chartab(std::istream& in, const Group& G);
CharacterTable read_chartab_file(const std::string& path, const Group& G);

}  // namespace oliver

#endif
