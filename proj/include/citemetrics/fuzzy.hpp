#pragma once
// Title similarity for catalog resolution: normalized Levenshtein distance
// over lowercased, punctuation-stripped, whitespace-collapsed titles.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace citemetrics {

// Lowercase, strip punctuation, collapse runs of whitespace to one space.
inline std::string normalize_title(const std::string& title) {
    std::string out;
    out.reserve(title.size());
    bool pending_space = false;
    for (unsigned char c : title) {
        if (std::isalnum(c)) {
            if (pending_space && !out.empty()) out += ' ';
            pending_space = false;
            out += static_cast<char>(std::tolower(c));
        } else if (std::isspace(c)) {
            pending_space = true;
        }
        // punctuation and other bytes are dropped
    }
    return out;
}

inline std::size_t levenshtein(const std::string& a, const std::string& b) {
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1), curr(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + cost});
        }
        std::swap(prev, curr);
    }
    return prev[m];
}

// Similarity in [0, 1]: 1 - distance / max_length, computed on normalized
// titles. Two empty titles are identical.
inline double title_similarity(const std::string& a, const std::string& b) {
    std::string na = normalize_title(a), nb = normalize_title(b);
    std::size_t longest = std::max(na.size(), nb.size());
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(levenshtein(na, nb)) /
                     static_cast<double>(longest);
}

}  // namespace citemetrics
