#pragma once

#include "coprod/io/json_io.hpp"
#include "coprod/separation/pipeline.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace coprod {

struct NamedGroup {
    std::string name;
    GroupPtr group;
};

/// z2, z3, s3, klein, d4. Throws ValidationError for any other name.
GroupPtr fixture_group(const std::string& name);

/// (z2,z2), (z2,z3), (z3,z3), (s3,z2).
std::vector<std::pair<std::string, std::string>> fixture_pairs();

/// One representative of each isomorphism class of groups of order ≤ 8.
std::vector<NamedGroup> small_groups();

/// Relative path → file contents, in generation order.
using FixtureSet = std::vector<std::pair<std::filesystem::path, Json>>;

struct FixtureOptions {
    std::uint64_t max_m = 8;
    std::size_t separate_max_len = 3;
};

/// Group files, quotient certificates for every fixture pair and m ≤ max_m,
/// separations of short words, and refutations of one candidate per
/// (fixture pair, small group).
FixtureSet generate_fixtures(const RunConfig& config, const FixtureOptions& options = {});

void write_fixtures(const std::filesystem::path& dir, const FixtureSet& files);

}  // namespace coprod
