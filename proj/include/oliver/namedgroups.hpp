#ifndef OLIVER_NAMEDGROUPS_HPP
#define OLIVER_NAMEDGROUPS_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "oliver/group.hpp"

namespace oliver {

/// Generators for a named group: C<n>, S<n>, A<n>, D<2n> (dihedral of order
/// 2n), SL(2,3), SL(2,5), GL(2,3), GL(3,2), and products joined with 'x'
/// acting on disjoint point sets. "@path" reads a generator file.
std::vector<Perm> group_spec_generators(std::string_view spec);

/// Builds the group for a spec string; throws std::invalid_argument for
/// unknown names and GroupTooLarge past the cap.
Group parse_group_spec(std::string_view spec, long long cap = kDefaultElementCap);

/// Generator file: a "degree: <d>" line, then one "gen: <cycles>" line per
/// generator. Blank lines and '#' comments are ignored.
std::vector<Perm> read_generator_file(std::istream& in);
std::vector<Perm> read_generator_file(const std::string& path);

}  // namespace oliver

#endif
