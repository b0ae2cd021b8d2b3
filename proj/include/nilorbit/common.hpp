#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorbit {

// Exact arithmetic used everywhere a wrong denominator would silently
// corrupt a pairing: root coordinates, weights, sl2 completions.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using QVec = std::vector<Rat>;

// A failed mathematical check (an invariant or certificate that must hold).
// Distinct from usage errors so the CLI can map exit codes 1 vs 2.
struct CheckFailure : std::runtime_error {
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw CheckFailure(msg);
}

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    SimpleType(Family f, int r) : family(f), rank(r) { validate(); }

    void validate() const {
        bool ok = false;
        switch (family) {
            case Family::A: ok = rank >= 1; break;
            case Family::B: ok = rank >= 2; break;
            case Family::C: ok = rank >= 2; break;
            case Family::D: ok = rank >= 3; break;
            case Family::E: ok = rank >= 6 && rank <= 8; break;
            case Family::F: ok = rank == 4; break;
            case Family::G: ok = rank == 2; break;
        }
        if (!ok)
            throw std::invalid_argument("illegal simple type " + name());
    }

    std::string name() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }

    // Parses "E8", "a3", ... Throws std::invalid_argument on anything else.
    static SimpleType parse(const std::string& s);

    friend bool operator==(const SimpleType& a, const SimpleType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

// Genericity policy shared by all randomized computations: one prime, a seed,
// a fixed number of redraws, and the number of conjugation rounds used by the
// Borel-orbit test.
struct GenericityConfig {
    std::uint64_t prime = 2147483629ull;  // 2^31 - 19
    std::uint64_t seed = 0;
    int trials = 3;
    int conj_rounds = 8;
};

// splitmix64; used to derive independent sub-seeds from (seed, tag) so that
// unrelated computations never share a stream.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace nilorbit
