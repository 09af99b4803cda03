#include "zetalab/schottky.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPairingTol = 1e-10;

Disk disk_from_endpoints(double x1, double x2) {
    return {0.5 * (x1 + x2), 0.5 * std::abs(x2 - x1)};
}

Mat2 adjugate(const Mat2& m) {
    return {m.d, -m.b, -m.c, m.a};
}

Word rotate(const Word& w, std::size_t k) {
    Word r;
    r.letters.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r.letters.push_back(w.letters[(i + k) % w.size()]);
    return r;
}

Mat2 reflection_matrix(const Disk& c) {
    // z -> c + r^2 / (conj(z) - c), as a matrix acting on conj(z).
    return {c.center, c.radius * c.radius - c.center * c.center, 1.0, -c.center};
}

Disk reflect_disk(const Disk& mirror, const Disk& d) {
    auto reflect = [&](double x) {
        return mirror.center + mirror.radius * mirror.radius / (x - mirror.center);
    };
    return disk_from_endpoints(reflect(d.center - d.radius), reflect(d.center + d.radius));
}

MoebiusMap to_map(const Mat2& m) {
    return MoebiusMap::from_entries(m.a, m.b, m.c, m.d);
}

template <typename F>
double bisect(F&& f, double lo, double hi, int iterations = 200) {
    double flo = f(lo);
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Disk image_disk(const MoebiusMap& g, const Disk& d) {
    if (g.c() != 0.0) {
        const double pole = -g.d() / g.c();
        if (std::abs(pole - d.center) <= d.radius) {
            throw BadInput("map has its pole inside the disk");
        }
    }
    const double y1 = g.apply(cplx(d.center - d.radius, 0.0)).real();
    const double y2 = g.apply(cplx(d.center + d.radius, 0.0)).real();
    return disk_from_endpoints(y1, y2);
}

Disk disk_from_arc(double phi, double half_angle) {
    const double lo = phi - half_angle, hi = phi + half_angle;
    if (!(half_angle > 0.0) || lo <= 0.0 || hi >= 2.0 * kPi) {
        throw BadInput("arc must be nonempty and avoid angle 0");
    }
    return disk_from_endpoints(-1.0 / std::tan(0.5 * lo), -1.0 / std::tan(0.5 * hi));
}

// ---------------------------------------------------------------------------
// Words.

Word Word::inverse() const {
    Word r;
    r.letters.reserve(size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

bool Word::is_reduced() const {
    for (std::size_t i = 1; i < size(); ++i) {
        if (letters[i] == -letters[i - 1]) return false;
    }
    return true;
}

bool Word::is_cyclically_reduced() const {
    return is_reduced() && (size() < 2 || letters.front() != -letters.back());
}

std::string Word::to_string() const {
    std::string s;
    for (Letter a : letters) {
        const char base = static_cast<char>('a' + (std::abs(a) - 1));
        s.push_back(a > 0 ? base : static_cast<char>(base - 'a' + 'A'));
    }
    return s;
}

int letter_rank(Letter a) {
    return 2 * (std::abs(a) - 1) + (a < 0 ? 1 : 0);
}

bool word_less(const Word& x, const Word& y) {
    return std::lexicographical_compare(
        x.letters.begin(), x.letters.end(), y.letters.begin(), y.letters.end(),
        [](Letter a, Letter b) { return letter_rank(a) < letter_rank(b); });
}

const char* to_string(Convention c) {
    return c == Convention::Oriented ? "oriented" : "unoriented";
}

Convention convention_from_string(const std::string& s) {
    std::string t;
    for (char ch : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (t == "oriented") return Convention::Oriented;
    if (t == "unoriented") return Convention::Unoriented;
    throw BadInput("convention must be 'oriented' or 'unoriented', got '" + s + "'");
}

Word canonical_representative(const Word& w, Convention c) {
    Word best = w;
    auto consider = [&](const Word& base) {
        for (std::size_t k = 0; k < base.size(); ++k) {
            Word r = rotate(base, k);
            if (word_less(r, best)) best = std::move(r);
        }
    };
    consider(w);
    if (c == Convention::Unoriented) consider(w.inverse());
    return best;
}

bool is_primitive(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0 && rotate(w, d) == w) return false;
    }
    return n > 0;
}

// ---------------------------------------------------------------------------
// Groups.

SchottkyGroup::SchottkyGroup(std::vector<MoebiusMap> generators,
                             std::vector<std::pair<Disk, Disk>> disks, std::string name)
    : name_(std::move(name)), generators_(std::move(generators)), disks_(std::move(disks)) {
    if (generators_.empty()) throw BadInput("a Schottky group needs at least one generator");
    if (disks_.size() != generators_.size()) {
        throw BadInput("need exactly one disk pair per generator");
    }
    for (const auto& g : generators_) {
        inverses_.push_back(g.inverse());
        mats_.push_back(g.matrix());
        inv_mats_.push_back(adjugate(g.matrix()));
    }
}

std::vector<Letter> SchottkyGroup::letters() const {
    std::vector<Letter> out;
    for (int j = 1; j <= rank(); ++j) {
        out.push_back(j);
        out.push_back(-j);
    }
    return out;
}

int SchottkyGroup::letter_index(Letter a) const {
    return letter_rank(a);
}

const MoebiusMap& SchottkyGroup::element(Letter a) const {
    return a > 0 ? generators_.at(a - 1) : inverses_.at(-a - 1);
}

const Mat2& SchottkyGroup::matrix(Letter a) const {
    return a > 0 ? mats_.at(a - 1) : inv_mats_.at(-a - 1);
}

const Disk& SchottkyGroup::disk(Letter a) const {
    return a > 0 ? disks_.at(a - 1).second : disks_.at(-a - 1).first;
}

Mat2 SchottkyGroup::word_matrix(const Word& w) const {
    Mat2 m{1.0, 0.0, 0.0, 1.0};
    for (Letter a : w.letters) m = m * matrix(a);
    return m;
}

MoebiusMap SchottkyGroup::word_element(const Word& w) const {
    MoebiusMap m;
    for (Letter a : w.letters) m = m * element(a);
    return m;
}

Diagnostics validate(const SchottkyGroup& group) {
    Diagnostics d;
    auto fail = [&](const char* kind, std::string msg, Letter a, Letter b) {
        d.ok = false;
        d.error_kind = kind;
        d.message = std::move(msg);
        d.pair = std::make_pair(a, b);
        return d;
    };
    for (int j = 1; j <= group.rank(); ++j) {
        if (classify(group.element(j)) != MoebiusClass::Hyperbolic) {
            return fail(
                "NonHyperbolicGenerator",
                "generator " + std::to_string(j) + " is " + to_string(classify(group.element(j))),
                j, j);
        }
    }
    const auto letters = group.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const Disk& a = group.disk(letters[i]);
        if (!(a.radius > 0.0)) {
            return fail("DiskOverlap", "disk has nonpositive radius", letters[i], letters[i]);
        }
        for (std::size_t k = i + 1; k < letters.size(); ++k) {
            const Disk& b = group.disk(letters[k]);
            if (std::abs(a.center - b.center) <= a.radius + b.radius) {
                std::ostringstream os;
                os << "closed disks D(" << letters[i] << ") and D(" << letters[k] << ") intersect";
                return fail("DiskOverlap", os.str(), letters[i], letters[k]);
            }
        }
    }
    for (int j = 1; j <= group.rank(); ++j) {
        const MoebiusMap& g = group.element(j);
        const Disk& from = group.disk(-j);
        const Disk& to = group.disk(j);
        const std::string label = "generator " + std::to_string(j);
        if (g.c() == 0.0) {
            return fail("PairingMismatch", label + " fixes infinity", -j, j);
        }
        if (!from.contains(cplx(-g.d() / g.c(), 0.0), -1e-12 * from.radius)) {
            return fail("PairingMismatch", label + " has its pole outside D(-j)", -j, j);
        }
        if (!to.contains(cplx(g.a() / g.c(), 0.0), -1e-12 * to.radius)) {
            return fail("PairingMismatch", label + " does not map infinity into D(j)", -j, j);
        }
        const double scale = std::max(1.0, to.radius);
        for (int q = 0; q < 16; ++q) {
            const cplx z =
                cplx(from.center, 0.0) + std::polar(from.radius, 2.0 * kPi * (q + 0.5) / 16);
            const double err = std::abs(std::abs(g.apply(z) - cplx(to.center, 0.0)) - to.radius);
            if (err > kPairingTol * scale) {
                return fail("PairingMismatch", label + " does not map circle D(-j) onto D(j)", -j,
                            j);
            }
        }
    }
    return d;
}

void require_valid(const SchottkyGroup& group) {
    const Diagnostics d = validate(group);
    if (d.ok) return;
    if (d.error_kind == "DiskOverlap") throw DiskOverlap(d.message);
    if (d.error_kind == "NonHyperbolicGenerator") throw NonHyperbolicGenerator(d.message);
    throw PairingMismatch(d.message);
}

int euler_characteristic(const SchottkyGroup& group) {
    return 1 - group.rank();
}

// ---------------------------------------------------------------------------
// Enumeration.

double class_trace(const SchottkyGroup& group, const Word& w) {
    const Mat2 m = group.word_matrix(canonical_representative(w, Convention::Unoriented));
    return m.a + m.d;
}

namespace {

// Canonical primitive classes of exactly `len` letters. A canonical word
// starts with its least letter, which prunes most of the search.
std::vector<Word> canonical_shell(int rank, int len, Convention conv, std::uint64_t& counter,
                                  std::uint64_t cap) {
    std::vector<Letter> order;
    for (int j = 1; j <= rank; ++j) {
        order.push_back(j);
        order.push_back(-j);
    }
    std::vector<Word> out;
    Word w;
    w.letters.reserve(len);
    auto visit = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == len) {
            if (len > 1 && w.letters.front() == -w.letters.back()) return;
            if (++counter > cap) {
                throw BudgetExceeded("word enumeration passed the cap of " + std::to_string(cap) +
                                     " words");
            }
            if (is_primitive(w) && canonical_representative(w, conv) == w) out.push_back(w);
            return;
        }
        for (Letter a : order) {
            if (!w.letters.empty()) {
                if (a == -w.letters.back()) continue;
                if (letter_rank(a) < letter_rank(w.letters.front())) continue;
            }
            w.letters.push_back(a);
            self(self);
            w.letters.pop_back();
        }
    };
    visit(visit);
    return out;
}

PrimitiveGeodesic make_geodesic(const SchottkyGroup& group, Word w) {
    PrimitiveGeodesic g;
    g.trace = class_trace(group, w);
    g.length = 2.0 * std::acosh(0.5 * std::abs(g.trace));
    g.class_word = std::move(w);
    return g;
}

bool geodesic_less(const PrimitiveGeodesic& x, const PrimitiveGeodesic& y) {
    if (x.length != y.length) return x.length < y.length;
    if (x.class_word.size() != y.class_word.size()) {
        return x.class_word.size() < y.class_word.size();
    }
    return word_less(x.class_word, y.class_word);
}

}  // namespace

std::vector<PrimitiveGeodesic> conjugacy_classes(const SchottkyGroup& group, int max_word_len,
                                                 Convention convention, std::uint64_t word_cap) {
    std::vector<PrimitiveGeodesic> out;
    std::uint64_t counter = 0;
    for (int len = 1; len <= max_word_len; ++len) {
        for (Word& w : canonical_shell(group.rank(), len, convention, counter, word_cap)) {
            out.push_back(make_geodesic(group, std::move(w)));
        }
    }
    return out;
}

LengthSpectrum length_spectrum(const SchottkyGroup& group, double cutoff,
                               const SpectrumOptions& opts) {
    LengthSpectrum spec;
    spec.cutoff = cutoff;
    spec.convention = opts.convention;
    std::uint64_t counter = 0;
    const double beyond = cutoff + opts.margin;
    int consecutive_beyond = 0;
    bool passed = false;
    for (int len = 1;; ++len) {
        double shell_min = std::numeric_limits<double>::infinity();
        std::uint64_t count = 0;
        for (Word& w :
             canonical_shell(group.rank(), len, opts.convention, counter, opts.word_cap)) {
            PrimitiveGeodesic g = make_geodesic(group, std::move(w));
            shell_min = std::min(shell_min, g.length);
            ++count;
            (g.length <= cutoff ? spec.geodesics : spec.tail).push_back(std::move(g));
        }
        spec.shell_min_length.push_back(shell_min);
        spec.shell_count.push_back(count);
        spec.max_word_length = len;
        if (passed && shell_min <= cutoff) {
            throw MonotonicityViolation("word length " + std::to_string(len) +
                                        " produced a class of length " + std::to_string(shell_min) +
                                        " after earlier shells passed the cutoff");
        }
        if (shell_min > beyond) {
            passed = true;
            if (++consecutive_beyond >= 2) break;
        } else {
            consecutive_beyond = 0;
        }
    }
    std::sort(spec.geodesics.begin(), spec.geodesics.end(), geodesic_less);
    std::sort(spec.tail.begin(), spec.tail.end(), geodesic_less);
    return spec;
}

std::vector<Word> reduced_words(int rank, int length) {
    std::vector<Word> out;
    Word w;
    auto visit = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == length) {
            out.push_back(w);
            return;
        }
        for (int j = 1; j <= rank; ++j) {
            for (Letter a : {j, -j}) {
                if (!w.letters.empty() && a == -w.letters.back()) continue;
                w.letters.push_back(a);
                self(self);
                w.letters.pop_back();
            }
        }
    };
    visit(visit);
    return out;
}

std::vector<BoundaryPoint> limit_set_sample(const SchottkyGroup& group, int depth) {
    if (depth < 1) throw BadInput("limit set sample needs depth >= 1");
    std::vector<BoundaryPoint> out;
    for (const Word& w : reduced_words(group.rank(), depth)) {
        out.push_back(fixed_points(group.word_element(w)).second);
    }
    return out;
}

SchottkyGroup conjugate(const SchottkyGroup& group, const MoebiusMap& h) {
    const MoebiusMap hinv = h.inverse();
    std::vector<MoebiusMap> gens;
    std::vector<std::pair<Disk, Disk>> disks;
    for (int j = 1; j <= group.rank(); ++j) {
        gens.push_back(h * group.element(j) * hinv);
        disks.emplace_back(image_disk(h, group.disk(-j)), image_disk(h, group.disk(j)));
    }
    return SchottkyGroup(std::move(gens), std::move(disks), group.name() + "-conjugated");
}

// ---------------------------------------------------------------------------
// Presets.

SchottkyGroup reflection_subgroup(const std::vector<Disk>& circles, const std::vector<bool>& flip,
                                  std::string name) {
    if (circles.size() < 2) throw BadInput("need at least two reflection circles");
    const Disk& c0 = circles.front();
    const Mat2 m0 = reflection_matrix(c0);
    std::vector<MoebiusMap> gens;
    std::vector<std::pair<Disk, Disk>> disks;
    for (std::size_t j = 1; j < circles.size(); ++j) {
        const Mat2 mj = reflection_matrix(circles[j]);
        const Disk mirrored = reflect_disk(c0, circles[j]);
        const bool f = j - 1 < flip.size() && flip[j - 1];
        if (f) {
            gens.push_back(to_map(m0 * mj));
            disks.emplace_back(circles[j], mirrored);
        } else {
            gens.push_back(to_map(mj * m0));
            disks.emplace_back(mirrored, circles[j]);
        }
    }
    return SchottkyGroup(std::move(gens), std::move(disks), std::move(name));
}

SchottkyGroup pair_of_pants(double l1, double l2, double l3) {
    if (!(l1 > 0.0 && l2 > 0.0 && l3 > 0.0)) throw BadInput("pants lengths must be positive");
    const double h1 = std::cosh(0.5 * l1), h2 = std::cosh(0.5 * l2), h3 = std::cosh(0.5 * l3);
    // C0 = unit circle, C1 = (-a, rho), C2 = (b, rho).
    auto offsets = [&](double rho) {
        return std::make_pair(std::sqrt(1.0 + rho * rho + 2.0 * rho * h1),
                              std::sqrt(1.0 + rho * rho + 2.0 * rho * h2));
    };
    auto mismatch = [&](double log_rho) {
        const double rho = std::exp(log_rho);
        const auto [a, b] = offsets(rho);
        return ((a + b) * (a + b) - 2.0 * rho * rho) / (2.0 * rho * rho) - h3;
    };
    const double rho = std::exp(bisect(mismatch, std::log(1e-12), std::log(1e12)));
    const auto [a, b] = offsets(rho);
    std::ostringstream name;
    name << "pair-of-pants(" << l1 << "," << l2 << "," << l3 << ")";
    return reflection_subgroup({{0.0, 1.0}, {-a, rho}, {b, rho}}, {false, true}, name.str());
}

SchottkyGroup symmetric_funnels(int n, double l) {
    if (n < 2 || !(l > 0.0)) throw BadInput("symmetric funnels need n >= 2 and l > 0");
    // Adjacent geodesics at angular spacing θ = 2π/n and half-width β satisfy
    // cosh d = (1 − cos θ)/sin²β − 1; we want d = l/2.
    const double theta = 2.0 * kPi / n;
    const double beta = std::asin(std::sqrt((1.0 - std::cos(theta)) / (1.0 + std::cosh(0.5 * l))));
    std::vector<Disk> circles;
    for (int k = 0; k < n; ++k) circles.push_back(disk_from_arc(kPi / n + theta * k, beta));
    std::ostringstream name;
    name << "symmetric-funnels(" << n << "," << l << ")";
    return reflection_subgroup(circles, {}, name.str());
}

SchottkyGroup funneled_torus(double l1, double l2, double twist) {
    if (!(l1 > 0.0 && l2 > 0.0)) throw BadInput("torus lengths must be positive");
    // Opposite geodesics at distance l from each other sit at distance l/2 from
    // the origin: Euclidean gap sec β − tan β = tanh(l/4).
    auto half_width = [](double l) { return 0.5 * kPi - 2.0 * std::atan(std::tanh(0.25 * l)); };
    const double off = 0.25 * kPi - 0.5 * twist;
    const double phi_a = off, phi_b = off + 0.5 * kPi + twist;
    std::vector<MoebiusMap> gens;
    std::vector<std::pair<Disk, Disk>> disks;
    for (auto [phi, l] : {std::pair{phi_a, l1}, std::pair{phi_b, l2}}) {
        const double beta = half_width(l);
        const MoebiusMap rot = MoebiusMap::disk_rotation(phi);
        // Translation by l along the diameter, towards -e^{i phi}.
        gens.push_back(rot * MoebiusMap::dilation(-l) * rot.inverse());
        disks.emplace_back(disk_from_arc(phi, beta), disk_from_arc(phi + kPi, beta));
    }
    std::ostringstream name;
    name << "funneled-torus(" << l1 << "," << l2 << "," << twist << ")";
    return SchottkyGroup(std::move(gens), std::move(disks), name.str());
}

SchottkyGroup cylinder(double l) {
    if (!(l > 0.0)) throw BadInput("cylinder length must be positive");
    // z -> 1 - rho^2 / (z + 1) pairs the circles |z + 1| = rho and |z - 1| = rho.
    const double rho = 1.0 / std::cosh(0.5 * l);
    std::ostringstream name;
    name << "cylinder(" << l << ")";
    return SchottkyGroup({MoebiusMap::from_entries(1.0, 1.0 - rho * rho, 1.0, 1.0)},
                         {{{-1.0, rho}, {1.0, rho}}}, name.str());
}

SchottkyGroup cylinder_from_trace(double trace) {
    if (!(trace > 2.0)) throw BadInput("cylinder trace must exceed 2");
    return cylinder(2.0 * std::acosh(0.5 * trace));
}

}  // namespace zetalab
