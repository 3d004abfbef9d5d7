#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ppa/ideal.hpp"

namespace ppa {

struct PatternEntry {
    long value = 0;
    bool circled = false;
    bool boxed = false;
};

// Entries keyed by (column, vertex); column 1 is the rightmost.
struct Pattern {
    std::map<std::pair<int, int>, PatternEntry> entries;

    int columns() const;
    const PatternEntry* at(int column, int vertex) const;
};

struct KnitResult {
    ExtDynkinType type;
    std::set<int> S;
    int target = 0;
    int kernel = -1;
    int last_column = 0;
    std::map<int, long> multiplicities;  // every j in S
    Pattern pattern;

    std::map<int, long> middle() const;  // positive multiplicities only
};

// Bipartition colour (0 or 1) of each vertex of a tree quiver.
std::map<int, int> bipartition(const LabelledDoubleQuiver& q);

KnitResult knit(const ExtDynkinType& t, const std::set<int>& S, int target);

std::string render_pattern(const Pattern& p);

enum class MapStatus { SignSearch, Kernel, Unresolved };

std::string map_status_name(MapStatus s);

struct MapComponent {
    int vertex = 0;
    int column = 0;
    std::vector<int> pattern_path;  // vertices from the circled occurrence to the box
};

struct ExtractedMaps {
    MapStatus status = MapStatus::Unresolved;
    std::vector<MapComponent> components;
    PathMatrix psi;  // 1 x m, entries in e_target Pi e_j
    PathMatrix phi;  // m x 1, entries in e_j Pi e_kernel
    std::vector<int> signs;
    long sign_vectors_tried = 0;
    int kernel_dimension = -1;
    ZeroProductResult verification;
    std::string note;
};

// Path maps for the sequence of a knit result, certified with psi.phi = 0 at lambda = 0.
ExtractedMaps extract_maps(const KnitResult& r, long max_sign_vectors = 4096);

}  // namespace ppa
