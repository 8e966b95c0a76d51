#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mttp/errors.hpp"

namespace mttp {

// A tournament instance: an even number of teams n, a symmetric distance
// matrix between home venues, and the bound k on consecutive home or away
// games. Immutable after construction; safe to share across threads.
class Instance {
public:
    Instance(int n, std::vector<long long> dist, int k, std::string name);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::string& name() const { return name_; }

    // Teams are 1-based, matching the schedule convention.
    long long dist(int i, int j) const { return dist_[(i - 1) * n_ + (j - 1)]; }

private:
    int n_;
    int k_;
    std::string name_;
    std::vector<long long> dist_;  // n*n, row-major
};

// Text format: whitespace-separated integers, first n, then n^2 matrix
// entries row-major.
Instance parse_instance(std::istream& in, const std::string& name, int k = 3);
Instance parse_instance_file(const std::string& path, int k = 3);

// Inverse of parse_instance.
std::string render_instance(const Instance& inst);

// CIRC family: teams on a cycle with unit edges,
// dist[i][j] = min(|i-j|, n-|i-j|).
Instance make_circular_instance(int n, int k = 3);

}  // namespace mttp
