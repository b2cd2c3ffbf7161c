#ifndef TANGLES_IO_HPP
#define TANGLES_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "tangles/local_move.hpp"
#include "tangles/ops.hpp"

namespace tangles {

// One input record: a move plus an optional braid word and an optional mixed
// op sequence. JSON object per line:
//   {"n":2, "top":[[1,2],[3,4]], "bottom":[[2,3],[4,1]], "initial":[1,3],
//    "word":[{"index":1,"sign":1}], "sequence":[{"op":"con","index":2}]}
struct ParsedDocument {
    LocalMove move;
    std::optional<std::vector<BraidLetter>> word;
    std::optional<OpSequence> sequence;

    explicit ParsedDocument(LocalMove m) : move(std::move(m)) {}
};

Checked<ParsedDocument> parse_move_document(const std::string& text);

nlohmann::json move_to_json(const LocalMove& move);
nlohmann::json word_to_json(const std::vector<BraidLetter>& word);
nlohmann::json ops_to_json(const OpSequence& seq);

// Parse a partition argument like "2,2" or "<2,2>".
Checked<ArcDecomposition> parse_partition(const std::string& text);

// Layered cup picture of the standard move of a class.
std::string render_standard(const ArcDecomposition& shape);

} // namespace tangles

#endif
