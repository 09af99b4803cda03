#pragma once

// Schottky groups in the upper half-plane: 2r disjoint closed disks centred on
// the real line, generator j mapping the exterior of D_{-j} onto the interior
// of D_j.  Letters are ±1..±r; letter -j stands for the inverse generator.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/moebius.hpp"

namespace zetalab {

struct Disk {
    double center = 0.0;
    double radius = 1.0;

    bool contains(cplx z, double slack = 0.0) const {
        return std::abs(z - cplx(center, 0.0)) <= radius + slack;
    }
};

/// Image of a real-centred disk under a real Möbius map whose pole lies
/// outside the closed disk. Throws BadInput otherwise.
Disk image_disk(const MoebiusMap& g, const Disk& d);

/// Circle orthogonal to the real line through the boundary arc centred at
/// angle `phi` with half-width `half_angle` (disk model), in half-plane form.
Disk disk_from_arc(double phi, double half_angle);

using Letter = int;

struct Word {
    std::vector<Letter> letters;

    std::size_t size() const { return letters.size(); }
    bool operator==(const Word&) const = default;
    Word inverse() const;
    bool is_reduced() const;
    bool is_cyclically_reduced() const;
    /// Letters rendered as a, A, b, B, ... (capital = inverse).
    std::string to_string() const;
};

/// Total order on letters used for canonical representatives: 1 < -1 < 2 < -2 ...
int letter_rank(Letter a);
/// Lexicographic comparison under letter_rank.
bool word_less(const Word& x, const Word& y);

enum class Convention { Oriented, Unoriented };

const char* to_string(Convention c);
Convention convention_from_string(const std::string& s);

/// Canonical class representative: least cyclic rotation (and, if
/// Unoriented, least among the rotations of the inverse as well).
Word canonical_representative(const Word& w, Convention c);
/// Whether w is not a proper power.
bool is_primitive(const Word& w);

struct PrimitiveGeodesic {
    Word class_word;
    double length = 0.0;
    double trace = 0.0;
};

class SchottkyGroup {
public:
    SchottkyGroup() = default;
    /// disks[j] = (D_{-(j+1)}, D_{j+1}).
    SchottkyGroup(std::vector<MoebiusMap> generators, std::vector<std::pair<Disk, Disk>> disks,
                  std::string name = "custom");

    int rank() const { return static_cast<int>(generators_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<MoebiusMap>& generators() const { return generators_; }
    const std::vector<std::pair<Disk, Disk>>& disk_pairs() const { return disks_; }

    /// Letters in the order 1, -1, 2, -2, ...
    std::vector<Letter> letters() const;
    /// Index of a letter in letters().
    int letter_index(Letter a) const;

    const MoebiusMap& element(Letter a) const;
    /// Unnormalized SL(2) matrix of a letter; inverses are exact adjugates.
    /// Products are not associative in floating point, so use class_trace
    /// when trace(w) and trace(w^-1) must agree bitwise.
    const Mat2& matrix(Letter a) const;
    const Disk& disk(Letter a) const;

    Mat2 word_matrix(const Word& w) const;
    MoebiusMap word_element(const Word& w) const;

private:
    std::string name_;
    std::vector<MoebiusMap> generators_;
    std::vector<MoebiusMap> inverses_;
    std::vector<Mat2> mats_;
    std::vector<Mat2> inv_mats_;
    std::vector<std::pair<Disk, Disk>> disks_;
};

struct Diagnostics {
    bool ok = true;
    std::string error_kind;  // DiskOverlap | NonHyperbolicGenerator | PairingMismatch
    std::string message;
    std::optional<std::pair<Letter, Letter>> pair;  // offending disks or generator
};

Diagnostics validate(const SchottkyGroup& group);
/// Throws the error named by validate() when the group is not valid.
void require_valid(const SchottkyGroup& group);

int euler_characteristic(const SchottkyGroup& group);

constexpr std::uint64_t kDefaultWordCap = 10'000'000;

/// Primitive classes whose cyclically reduced length is at most max_word_len,
/// in order of word length then canonical word. Throws BudgetExceeded.
std::vector<PrimitiveGeodesic> conjugacy_classes(const SchottkyGroup& group, int max_word_len,
                                                 Convention convention,
                                                 std::uint64_t word_cap = kDefaultWordCap);

/// Trace of the class of w computed from its unoriented canonical
/// representative (identical for w, its rotations and its inverse).
double class_trace(const SchottkyGroup& group, const Word& w);

struct LengthSpectrum {
    std::vector<PrimitiveGeodesic> geodesics;  // ascending length, length ≤ cutoff
    double cutoff = 0.0;
    Convention convention = Convention::Oriented;
    /// Classes enumerated beyond the cutoff (all word lengths ≤ max_word_length).
    std::vector<PrimitiveGeodesic> tail;
    int max_word_length = 0;
    /// Minimal class length per word length (index W-1); +inf for empty shells.
    std::vector<double> shell_min_length;
    /// Total number of classes per word length.
    std::vector<std::uint64_t> shell_count;
};

struct SpectrumOptions {
    Convention convention = Convention::Oriented;
    std::uint64_t word_cap = kDefaultWordCap;
    double margin = 1.0;
};

/// Every primitive class of length ≤ cutoff. Shells of increasing word
/// length are enumerated until two consecutive shells lie entirely beyond
/// cutoff + margin; a later shell dipping back under the cutoff raises
/// MonotonicityViolation.
LengthSpectrum length_spectrum(const SchottkyGroup& group, double cutoff,
                               const SpectrumOptions& opts = {});

/// Attracting fixed points of every reduced word of the given length.
std::vector<BoundaryPoint> limit_set_sample(const SchottkyGroup& group, int depth);

/// All reduced words of a given length, in canonical letter order.
std::vector<Word> reduced_words(int rank, int length);

/// h Γ h^{-1} with disks moved by h (its pole must avoid every disk).
SchottkyGroup conjugate(const SchottkyGroup& group, const MoebiusMap& h);

// ---------------------------------------------------------------------------
// Presets.

/// Orientation subgroup of the group generated by reflections in disjoint
/// geodesic circles C_0..C_r: generator j = R_j R_0 (or R_0 R_j when
/// flip[j-1]), each of translation length twice the distance of the circles.
SchottkyGroup reflection_subgroup(const std::vector<Disk>& circles,
                                  const std::vector<bool>& flip = {},
                                  std::string name = "reflection");

/// Pair of pants with boundary lengths l1, l2, l3:
/// tr X1 = 2cosh(l1/2), tr X2 = 2cosh(l2/2), tr X1X2 = -2cosh(l3/2).
SchottkyGroup pair_of_pants(double l1, double l2, double l3);

/// Sphere with n ≥ 2 funnels, all boundary lengths l, rank n - 1.
SchottkyGroup symmetric_funnels(int n, double l);

/// One-holed torus: pairing axes at angle π/2 + twist, translation lengths l1, l2.
SchottkyGroup funneled_torus(double l1, double l2, double twist);

/// Hyperbolic cylinder of core length l (rank 1).
SchottkyGroup cylinder(double l);

/// Cylinder whose generator has the given trace (> 2).
SchottkyGroup cylinder_from_trace(double trace);

}  // namespace zetalab
