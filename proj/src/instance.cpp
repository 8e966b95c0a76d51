#include "mttp/instance.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mttp {

Instance::Instance(int n, std::vector<long long> dist, int k, std::string name)
    : n_(n), k_(k), name_(std::move(name)), dist_(std::move(dist)) {
    if (n_ < 4 || n_ % 2 != 0)
        throw DomainError("team count must be even and >= 4, got " + std::to_string(n_));
    if (k_ < 1)
        throw DomainError("k must be >= 1, got " + std::to_string(k_));
    if (dist_.size() != static_cast<size_t>(n_) * n_)
        throw ValidationError("distance matrix has " + std::to_string(dist_.size()) +
                              " entries, expected " + std::to_string(n_ * n_));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            long long d = dist_[i * n_ + j];
            if (d < 0)
                throw ValidationError("negative distance at cell (" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + ")");
            if (i == j && d != 0)
                throw ValidationError("nonzero diagonal at cell (" + std::to_string(i + 1) +
                                      "," + std::to_string(i + 1) + ")");
            if (d != dist_[j * n_ + i])
                throw ValidationError("asymmetric matrix at cell (" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + ")");
        }
    }
}

namespace {

long long next_token(std::istream& in, size_t position) {
    std::string tok;
    if (!(in >> tok))
        throw ParseError("expected integer token at position " + std::to_string(position) +
                         ", found end of input");
    char* end = nullptr;
    long long v = std::strtoll(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0')
        throw ParseError("malformed token '" + tok + "' at position " + std::to_string(position));
    return v;
}

}  // namespace

Instance parse_instance(std::istream& in, const std::string& name, int k) {
    long long n_raw = next_token(in, 0);
    if (n_raw < 4 || n_raw % 2 != 0)
        throw DomainError("team count must be even and >= 4, got " + std::to_string(n_raw));
    int n = static_cast<int>(n_raw);

    std::vector<long long> dist;
    dist.reserve(static_cast<size_t>(n) * n);
    for (size_t p = 1; p <= static_cast<size_t>(n) * n; ++p)
        dist.push_back(next_token(in, p));

    std::string extra;
    if (in >> extra)
        throw ParseError("trailing token '" + extra + "' after " + std::to_string(n * n) +
                         " matrix entries");
    return Instance(n, std::move(dist), k, name);
}

Instance parse_instance_file(const std::string& path, int k) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open instance file: " + path);
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos)
        name = name.substr(0, dot);
    return parse_instance(in, name, k);
}

std::string render_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.n() << '\n';
    for (int i = 1; i <= inst.n(); ++i) {
        for (int j = 1; j <= inst.n(); ++j)
            out << inst.dist(i, j) << (j == inst.n() ? '\n' : ' ');
    }
    return out.str();
}

Instance make_circular_instance(int n, int k) {
    if (n < 4 || n % 2 != 0)
        throw DomainError("circular instance needs even n >= 4, got " + std::to_string(n));
    std::vector<long long> dist(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int d = std::abs(i - j);
            dist[i * n + j] = std::min(d, n - d);
        }
    }
    std::string name = "CIRC" + std::string(n < 10 ? "0" : "") + std::to_string(n);
    return Instance(n, std::move(dist), k, name);
}

}  // namespace mttp
