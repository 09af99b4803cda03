#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Independent oracle: odometer over all letter strings, keep the reduced and
// cyclically reduced primitive ones, canonicalize by brute-force minimum over
// rotations, deduplicate with a std::set.
using Letters = std::vector<int>;

inline int key(int a) {
    return 2 * (std::abs(a) - 1) + (a < 0 ? 1 : 0);
}

inline bool less_word(const Letters& x, const Letters& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](int a, int b) { return key(a) < key(b); });
}

inline Letters rotate_by(const Letters& w, std::size_t k) {
    Letters r(w.begin() + static_cast<long>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
    return r;
}

inline Letters invert(const Letters& w) {
    Letters r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
}

inline Letters least_rotation(const Letters& w) {
    Letters best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        const Letters r = rotate_by(w, k);
        if (less_word(r, best)) best = r;
    }
    return best;
}

inline bool proper_power(const Letters& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p == 0 && rotate_by(w, p) == w) return true;
    }
    return false;
}

inline std::string render(const Letters& w) {
    std::string s;
    for (int a : w) s += static_cast<char>((a > 0 ? 'a' : 'A') + std::abs(a) - 1);
    return s;
}

inline std::set<std::string> conjugacy_classes(int rank, int max_len, bool oriented) {
    std::set<std::string> out;
    std::vector<int> alphabet;
    for (int j = 1; j <= rank; ++j) {
        alphabet.push_back(j);
        alphabet.push_back(-j);
    }
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
        while (true) {
            Letters w;
            for (std::size_t d : digits) w.push_back(alphabet[d]);
            bool cyclically_reduced = true;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] == -w[(i + 1) % w.size()]) cyclically_reduced = false;
            }
            if (cyclically_reduced && !proper_power(w)) {
                Letters c = least_rotation(w);
                if (!oriented) {
                    const Letters ci = least_rotation(invert(w));
                    if (less_word(ci, c)) c = ci;
                }
                out.insert(render(c));
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == alphabet.size()) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    }
    return out;
}

}  // namespace oracle
