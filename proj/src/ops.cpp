#include "tangles/ops.hpp"

namespace tangles {

std::vector<BraidLetter> rotation_word(int arcs, int m) {
    if (arcs < 1) throw domain_error("rotation_word needs n >= 1");
    const int pts = 2 * arcs;
    std::vector<BraidLetter> out;
    if (m > 0) {
        // composition (s1 s2 ... s_{2n-1})^m, rightmost letter first
        out.reserve(static_cast<size_t>(m) * static_cast<size_t>(pts - 1));
        for (int rep = 0; rep < m; ++rep)
            for (int j = pts - 1; j >= 1; --j) out.push_back({j, CrossSign::positive});
    } else if (m < 0) {
        out.reserve(static_cast<size_t>(-m) * static_cast<size_t>(pts - 1));
        for (int rep = 0; rep < -m; ++rep)
            for (int j = 1; j <= pts - 1; ++j) out.push_back({j, CrossSign::negative});
    }
    return out;
}

Checked<OpSequence> connect_sequence(int arcs, int k1, int kr) {
    if (arcs < 1) return Rejection{"connect_sequence needs n >= 1"};
    const int pts = 2 * arcs;
    if (k1 < 1 || k1 > pts || kr < 1 || kr > pts)
        return Rejection{"run endpoints out of 1..2n"};
    OpSequence seq;
    int k = k1;
    while (k != kr) {
        seq.push_back(BraidLetter{k, CrossSign::negative});
        k = k % pts + 1;
    }
    seq.push_back(Connect{kr});
    return seq;
}

std::vector<BraidLetter> inverse_word(const std::vector<BraidLetter>& word) {
    std::vector<BraidLetter> out;
    out.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out.push_back({it->index, flipped(it->sign)});
    return out;
}

std::string to_string(const BraidLetter& l) {
    return (l.sign == CrossSign::positive ? "s" : "s'") + std::to_string(l.index);
}

std::string to_string(const OpItem& item) {
    if (const auto* b = std::get_if<BraidLetter>(&item)) return to_string(*b);
    return "con" + std::to_string(std::get<Connect>(item).index);
}

std::string to_string(const OpSequence& seq) {
    std::string s;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) s += " ";
        s += to_string(seq[i]);
    }
    return s;
}

} // namespace tangles
