#include "tangles/io.hpp"

#include <algorithm>
#include <sstream>

namespace tangles {

using nlohmann::json;

namespace {

Checked<std::vector<LabelPair>> read_pairs(const json& j, const std::string& field) {
    if (!j.contains(field)) return Rejection{"missing field \"" + field + "\""};
    const auto& arr = j.at(field);
    if (!arr.is_array()) return Rejection{"field \"" + field + "\" must be an array of pairs"};
    std::vector<LabelPair> out;
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& p = arr[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer())
            return Rejection{field + "[" + std::to_string(i) + "] must be a pair [a,b]"};
        out.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return out;
}

Checked<std::vector<BraidLetter>> read_word(const json& arr, int pts) {
    std::vector<BraidLetter> out;
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& it = arr[i];
        if (!it.is_object() || !it.contains("index") || !it.at("index").is_number_integer())
            return Rejection{"word[" + std::to_string(i) + "] needs an integer \"index\""};
        const int idx = it.at("index").get<int>();
        if (idx < 1 || idx > pts)
            return Rejection{"word[" + std::to_string(i) + "].index " + std::to_string(idx) +
                             " exceeds 2n = " + std::to_string(pts)};
        int sign = 1;
        if (it.contains("sign")) {
            if (!it.at("sign").is_number_integer() ||
                (it.at("sign").get<int>() != 1 && it.at("sign").get<int>() != -1))
                return Rejection{"word[" + std::to_string(i) + "].sign must be 1 or -1"};
            sign = it.at("sign").get<int>();
        }
        out.push_back({idx, sign > 0 ? CrossSign::positive : CrossSign::negative});
    }
    return out;
}

Checked<OpSequence> read_sequence(const json& arr) {
    OpSequence out;
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& it = arr[i];
        const std::string at = "sequence[" + std::to_string(i) + "]";
        if (!it.is_object() || !it.contains("op") || !it.at("op").is_string())
            return Rejection{at + " needs a string \"op\""};
        if (!it.contains("index") || !it.at("index").is_number_integer())
            return Rejection{at + " needs an integer \"index\""};
        const int idx = it.at("index").get<int>();
        if (idx < 1) return Rejection{at + ".index must be positive"};
        const std::string op = it.at("op").get<std::string>();
        if (op == "braid") {
            int sign = 1;
            if (it.contains("sign")) {
                if (!it.at("sign").is_number_integer() ||
                    (it.at("sign").get<int>() != 1 && it.at("sign").get<int>() != -1))
                    return Rejection{at + ".sign must be 1 or -1"};
                sign = it.at("sign").get<int>();
            }
            out.push_back(BraidLetter{idx, sign > 0 ? CrossSign::positive : CrossSign::negative});
        } else if (op == "con") {
            out.push_back(Connect{idx});
        } else {
            return Rejection{at + ".op must be \"braid\" or \"con\""};
        }
    }
    return out;
}

} // namespace

Checked<ParsedDocument> parse_move_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        return Rejection{std::string("syntax error: ") + e.what()};
    }
    if (!j.is_object()) return Rejection{"document must be a JSON object"};
    if (!j.contains("n") || !j.at("n").is_number_integer())
        return Rejection{"missing field \"n\" (positive integer)"};
    const int n = j.at("n").get<int>();
    if (n < 1) return Rejection{"field \"n\" must be >= 1"};

    auto top = read_pairs(j, "top");
    if (!top.ok()) return Rejection{top.reason()};
    auto bottom = read_pairs(j, "bottom");
    if (!bottom.ok()) return Rejection{bottom.reason()};
    if (!j.contains("initial")) return Rejection{"missing field \"initial\""};
    if (!j.at("initial").is_array()) return Rejection{"field \"initial\" must be an array"};
    std::vector<Label> starts;
    for (const auto& v : j.at("initial")) {
        if (!v.is_number_integer()) return Rejection{"field \"initial\" must hold integers"};
        starts.push_back(v.get<int>());
    }

    auto mv = LocalMove::validate(n, top.value(), bottom.value(), starts);
    if (!mv.ok()) return Rejection{mv.reason()};
    ParsedDocument doc(std::move(mv.value()));

    if (j.contains("word")) {
        if (!j.at("word").is_array()) return Rejection{"field \"word\" must be an array"};
        auto w = read_word(j.at("word"), 2 * n);
        if (!w.ok()) return Rejection{w.reason()};
        doc.word = std::move(w.value());
    }
    if (j.contains("sequence")) {
        if (!j.at("sequence").is_array()) return Rejection{"field \"sequence\" must be an array"};
        auto s = read_sequence(j.at("sequence"));
        if (!s.ok()) return Rejection{s.reason()};
        doc.sequence = std::move(s.value());
    }
    return doc;
}

json move_to_json(const LocalMove& move) {
    json j;
    j["n"] = move.arcs();
    auto dump_pairs = [](const OrientedMatching& m) {
        json arr = json::array();
        for (auto [a, b] : m.pairs()) arr.push_back(json::array({a, b}));
        return arr;
    };
    j["top"] = dump_pairs(move.top());
    j["bottom"] = dump_pairs(move.bottom());
    j["initial"] = move.top().start_labels();
    return j;
}

json word_to_json(const std::vector<BraidLetter>& word) {
    json arr = json::array();
    for (const auto& l : word)
        arr.push_back({{"index", l.index}, {"sign", l.sign == CrossSign::positive ? 1 : -1}});
    return arr;
}

json ops_to_json(const OpSequence& seq) {
    json arr = json::array();
    for (const auto& item : seq) {
        if (const auto* b = std::get_if<BraidLetter>(&item))
            arr.push_back({{"op", "braid"},
                           {"index", b->index},
                           {"sign", b->sign == CrossSign::positive ? 1 : -1}});
        else
            arr.push_back({{"op", "con"}, {"index", std::get<Connect>(item).index}});
    }
    return arr;
}

Checked<ArcDecomposition> parse_partition(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '<') body = body.substr(1);
    if (!body.empty() && body.back() == '>') body.pop_back();
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) return Rejection{"bad partition part: \"" + tok + "\""};
            parts.push_back(v);
        } catch (const std::exception&) {
            return Rejection{"bad partition part: \"" + tok + "\""};
        }
    }
    if (parts.empty()) return Rejection{"empty partition"};
    for (int p : parts)
        if (p < 1) return Rejection{"partition parts must be positive"};
    return ArcDecomposition::of_parts(std::move(parts));
}

namespace {

std::vector<std::string> arc_rows(const OrientedMatching& m, int col_w, bool above) {
    const int pts = m.points();
    auto pairs = m.pairs();
    // nesting depth of each pair
    std::vector<int> depth(pairs.size(), 0);
    int max_depth = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t k = 0; k < pairs.size(); ++k)
            if (k != i && pairs[k].first < pairs[i].first && pairs[i].second < pairs[k].second)
                ++depth[i];
        max_depth = std::max(max_depth, depth[i]);
    }
    const int width = (pts - 1) * col_w + 1;
    std::vector<std::string> rows;
    for (int dist = 1; dist <= max_depth + 1; ++dist) {
        std::string row(static_cast<size_t>(width), ' ');
        for (size_t i = 0; i < pairs.size(); ++i) {
            const int a = (pairs[i].first - 1) * col_w;
            const int b = (pairs[i].second - 1) * col_w;
            const int d = max_depth - depth[i] + 1;
            if (d == dist) {
                row[static_cast<size_t>(a)] = '+';
                row[static_cast<size_t>(b)] = '+';
                for (int x = a + 1; x < b; ++x) row[static_cast<size_t>(x)] = '-';
            } else if (d > dist) {
                row[static_cast<size_t>(a)] = '|';
                row[static_cast<size_t>(b)] = '|';
            }
        }
        rows.push_back(std::move(row));
    }
    if (above) std::reverse(rows.begin(), rows.end());
    return rows;
}

} // namespace

std::string render_standard(const ArcDecomposition& shape) {
    const auto move = standard_move(shape);
    const int pts = move.points();
    const int col_w = pts >= 10 ? 3 : 2;

    std::string labels;
    for (Label j = 1; j <= pts; ++j) {
        std::string t = std::to_string(j);
        labels += t;
        if (j < pts) labels += std::string(static_cast<size_t>(col_w - t.size()), ' ');
    }
    std::string marks;
    for (Label j = 1; j <= pts; ++j) {
        marks += move.top().is_start(j) ? '*' : '.';
        if (j < pts) marks += std::string(static_cast<size_t>(col_w - 1), ' ');
    }

    std::ostringstream out;
    out << "class " << shape.to_string() << "   arcs " << shape.total() << "   kind "
        << move_kind_letter(shape) << "\n";
    out << "initial marked *\n\n";
    for (const auto& r : arc_rows(move.top(), col_w, true)) out << r << "\n";
    out << labels << "\n" << marks << "\n";
    for (const auto& r : arc_rows(move.bottom(), col_w, false)) out << r << "\n";
    return out.str();
}

} // namespace tangles
