#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "twinkit/gcm.hpp"

namespace twinkit {

/// A Weyl group element stored as its ShortLex-minimal reduced word (0-based generators).
struct CoxeterElement {
    std::vector<int> word;

    int length() const { return static_cast<int>(word.size()); }
    bool is_identity() const { return word.empty(); }

    friend auto operator<=>(const CoxeterElement&, const CoxeterElement&) = default;
    friend bool operator==(const CoxeterElement&, const CoxeterElement&) = default;
};

/// Small bit set of generators.
class GeneratorSet {
public:
    GeneratorSet() = default;
    GeneratorSet(std::initializer_list<int> gens) {
        for (int s : gens) insert(s);
    }
    static GeneratorSet all(int rank) {
        GeneratorSet g;
        g.bits_ = rank >= 32 ? ~0u : ((1u << rank) - 1u);
        return g;
    }
    static GeneratorSet from_bits(std::uint32_t bits) {
        GeneratorSet g;
        g.bits_ = bits;
        return g;
    }

    bool contains(int s) const { return (bits_ >> s) & 1u; }
    void insert(int s) { bits_ |= (1u << s); }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    std::uint32_t bits() const { return bits_; }
    std::vector<int> elements() const {
        std::vector<int> out;
        for (int s = 0; s < 32; ++s)
            if (contains(s)) out.push_back(s);
        return out;
    }

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::uint32_t bits_ = 0;
};

enum class Side { Left, Right };

struct ParabolicInfo {
    bool finite = false;
    std::optional<CoxeterElement> longest;
    std::optional<std::uint64_t> order;
    /// Cartan-Killing names of the irreducible components, e.g. "A2", "B3", "~" for infinite ones.
    std::vector<std::string> components;
};

/// Coxeter system realized by the reflection action of a GCM on its root lattice.
///
/// Simple reflection s_i acts on the root lattice by s_i(x) = x - <x, alpha_i^v> alpha_i
/// with <alpha_j, alpha_i^v> = a_ij. An element w lengthens under right multiplication by s
/// iff w(alpha_s) is a positive root; normal forms are computed from the action of w^-1.
class CoxeterSystem {
public:
    explicit CoxeterSystem(Gcm cartan);
    static CoxeterSystem from_matrix(const CoxeterMatrix& m);

    int rank() const { return cartan_.rank(); }
    const Gcm& cartan() const { return cartan_; }
    const CoxeterMatrix& matrix() const { return matrix_; }

    CoxeterElement identity() const { return {}; }
    CoxeterElement generator(int s) const;

    /// ShortLex-minimal reduced word of the element represented by `word`.
    CoxeterElement normal_form(std::span<const int> word) const;
    CoxeterElement multiply(const CoxeterElement& x, const CoxeterElement& y) const;
    CoxeterElement inverse(const CoxeterElement& w) const;
    CoxeterElement mul_right(const CoxeterElement& w, int s) const;
    CoxeterElement mul_left(int s, const CoxeterElement& w) const;

    bool is_right_descent(const CoxeterElement& w, int s) const;
    bool is_left_descent(const CoxeterElement& w, int s) const;
    GeneratorSet descents(const CoxeterElement& w, Side side) const;

    bool bruhat_leq(const CoxeterElement& v, const CoxeterElement& w) const;

    ParabolicInfo parabolic_info(GeneratorSet j) const;

    /// Elements of W_J of length <= max_length, grouped by length.
    std::vector<std::vector<CoxeterElement>> enumerate_upto(int max_length, GeneratorSet j) const;
    std::vector<std::vector<CoxeterElement>> enumerate_upto(int max_length) const {
        return enumerate_upto(max_length, GeneratorSet::all(rank()));
    }
    /// All elements of a finite W_J. Throws NotSpherical for infinite W_J.
    std::vector<CoxeterElement> enumerate_finite(GeneratorSet j) const;

    /// Every reduced expression of w, sorted lexicographically.
    std::vector<std::vector<int>> reduced_words(const CoxeterElement& w) const;

    /// w(root) for a root-lattice vector in simple-root coordinates.
    std::vector<std::int64_t> act(const CoxeterElement& w, std::vector<std::int64_t> root) const;
    std::vector<std::int64_t> reflect(int s, std::vector<std::int64_t> root) const;

    /// Subgroup membership: w in W_J iff every letter of its normal form lies in J.
    bool in_parabolic(const CoxeterElement& w, GeneratorSet j) const;

private:
    void check_index(int s) const;

    Gcm cartan_;
    CoxeterMatrix matrix_;
};

/// Positive/negative sign of a nonzero sign-coherent root vector.
bool is_negative_root(std::span<const std::int64_t> v);

/// 1-based generator array, as used in every JSON document.
nlohmann::json element_to_json(const CoxeterElement& w);
CoxeterElement element_from_json(const CoxeterSystem& sys, const nlohmann::json& j);
std::string to_string(const CoxeterElement& w);

} // namespace twinkit
