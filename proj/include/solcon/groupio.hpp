#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "solcon/group_table.hpp"
#include "solcon/perm_group.hpp"

namespace solcon {

struct FactorizedGroup;

/// Contents of a generator file. Points are 1-based in the text and
/// 0-based in memory.
struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::string label;
};

/// Parses the text format: first line `degree N`, then one cycle product
/// per line, `#` starting a comment. Throws ParseError with line/column.
GeneratorFile parse_generator_file(std::string_view text, std::string label = {});

/// Permutations of a generator file; `()` is the identity.
std::vector<Permutation> parse_generators(std::string_view text);

/// Group generated by the file's permutations (trivial if there are none).
PermGroup group_from_text(std::string_view text, const Budget& budget = {});

/// Inverse of parse_generators.
std::string render_generators(const PermGroup& g);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n acting on n points.
PermGroup dihedral_group(std::size_t n);
/// PSL(2, q) on the projective line GF(q) u {inf}, degree q + 1.
PermGroup psl2(std::uint64_t q);
/// PGL(2, q) on the projective line.
PermGroup pgl2(std::uint64_t q);

/// Named groups: An, Sn (n <= 12), Cn, D2n, V4, psl2_q, pgl2_q, products
/// such as S4xA5, and embedded subgroup fixtures such as A4_in_A5.
PermGroup builtin(const std::string& name, const Budget& budget = {});
std::vector<std::string> builtin_fixture_names();

/// `builtin:NAME` or a path to a generator file.
PermGroup load_group(const std::string& source, const Budget& budget = {});

/// Action on the disjoint union of the point sets, G on the first block.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

/// Every subgroup of a small group, as element sets over one shared table.
/// Sorted by order, then by element set.
struct SubgroupCatalog {
  std::shared_ptr<const GroupTable> table;
  std::vector<ElementSet> sets;
  std::vector<PermGroup> subgroups;
  bool complete = true;

  std::size_t size() const { return sets.size(); }
};

/// Join saturation from cyclic subgroups, one conjugacy class at a time.
/// Throws ResourceError above budget.max_subgroup_order.
SubgroupCatalog enumerate_subgroups(const PermGroup& g, const Budget& budget = {});

/// All ordered pairs (A, B) of catalog subgroups with |A||B|/|A n B| = |G|.
std::vector<FactorizedGroup> enumerate_factorizations(const PermGroup& g,
                                                      const Budget& budget = {});

/// Same, reusing a catalog.
std::vector<FactorizedGroup> enumerate_factorizations(const SubgroupCatalog& catalog);

/// A n B, from the elements of the smaller group that lie in the other.
PermGroup subgroup_intersection(const PermGroup& a, const PermGroup& b,
                                const Budget& budget = {});

/// JSON list of {order, generators} for each catalog entry.
std::string catalog_json(const SubgroupCatalog& catalog);

}  // namespace solcon
