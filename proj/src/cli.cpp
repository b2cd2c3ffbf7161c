#include "tangles/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "tangles/enumerate.hpp"
#include "tangles/io.hpp"
#include "tangles/normalize.hpp"
#include "tangles/partitions.hpp"
#include "tangles/poset.hpp"
#include "tangles/realize.hpp"
#include "tangles/unknotting.hpp"
#include "tangles/verify.hpp"

namespace tangles {

namespace {

struct CliError {
    std::string message;
};

struct DocLine {
    std::string where; // "file:line"
    ParsedDocument doc;
};

std::vector<DocLine> read_documents(const std::vector<std::string>& paths, std::istream& in) {
    std::vector<DocLine> out;
    auto scan = [&](std::istream& s, const std::string& name) {
        std::string line;
        int no = 0;
        while (std::getline(s, line)) {
            ++no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto doc = parse_move_document(line);
            const std::string where = name + ":" + std::to_string(no);
            if (!doc.ok()) throw CliError{where + ": " + doc.reason()};
            out.push_back({where, std::move(doc.value())});
        }
    };
    if (paths.empty()) {
        scan(in, "stdin");
    } else {
        for (const auto& p : paths) {
            if (p == "-") {
                scan(in, "stdin");
                continue;
            }
            std::ifstream f(p);
            if (!f) throw CliError{"cannot open " + p};
            scan(f, p);
        }
    }
    if (out.empty()) throw CliError{"no move documents supplied"};
    return out;
}

// Replay a document's optional word/sequence onto its move; connectivity only.
MoveState document_state(const ParsedDocument& doc) {
    MoveState st = MoveState::of(doc.move);
    if (doc.word)
        for (const auto& l : *doc.word) st.apply(l);
    if (doc.sequence) {
        auto ok = st.apply_all(*doc.sequence);
        if (!ok.ok()) throw CliError{"sequence invalid: " + ok.reason()};
    }
    return st;
}

int examples_suite(std::ostream& out) {
    int failed = 0;
    auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "[ ok ] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failed;
    };
    auto S = [](std::vector<int> p) { return ArcDecomposition::of_parts(std::move(p)); };

    check("class count on 3 arcs is 2", class_count(3) == 2);
    {
        std::set<std::vector<int>> classes;
        for (const auto& m : enumerate_switch_moves(3)) classes.insert(arc_decomposition(m).parts());
        check("exhaustive 3-arc moves fall into 2 classes", classes.size() == 2);
    }
    {
        auto w = rotation_word(3, 1);
        MoveState st = MoveState::of(standard_move(S({3})));
        for (const auto& l : w) st.apply(l);
        const bool shifted = st.top[2] == 3 && st.top[4] == 5 && st.top[6] == 1 && st.start[2] == 1;
        check("one rotation step relabels by +1", w.size() == 5 && shifted);
    }
    {
        auto w = rotation_word(2, -1);
        const bool shape = w.size() == 3 && w[0] == BraidLetter{1, CrossSign::negative} &&
                           w[2] == BraidLetter{3, CrossSign::negative};
        check("negative rotation word lists s'1 s'2 s'3 in application order", shape);
    }
    {
        auto v = class_leq(S({2, 2}), S({3}));
        const bool ok = v.yes() && v.witness.has_value() &&
                        verify_sequence(standard_move(S({2, 2})), *v.witness,
                                        standard_move(S({3})), true)
                            .ok;
        check("<2,2> precedes <3> with a verified witness", ok);
    }
    {
        auto seq = realize_from_single_cycle(5, S({2, 2}));
        const bool ok =
            verify_sequence(standard_move(S({5})), seq, standard_move(S({2, 2}))).ok;
        check("<5> descends onto <2,2> with a verified witness", ok);
    }
    check("join at 2 carries <1,2> exactly onto <2>",
          verify_sequence(standard_move(S({1, 2})), {Connect{2}}, standard_move(S({2}))).ok);
    {
        auto red = reduce_to_primitive(S({3}));
        bool tail = red.seq.size() >= 3;
        if (tail) {
            const auto k = red.seq.size();
            tail = red.seq[k - 3] == OpItem{BraidLetter{2, CrossSign::negative}} &&
                   red.seq[k - 2] == OpItem{BraidLetter{3, CrossSign::negative}} &&
                   red.seq[k - 1] == OpItem{Connect{4}};
        }
        check("<3> realizes the crossing change, ending with the negative-run tail",
              red.target == PrimitiveTarget::crossing_change && tail);
    }
    check("single-cycle order: <5> before <3>, <4> not before <3>",
          single_cycle_leq(5, 3) && !single_cycle_leq(4, 3) && single_cycle_leq(3, 3));
    check("uniform family order instances",
          uniform_shift_leq(3, 3, 2) && uniform_shift_leq(2, 3, 1) && !uniform_shift_leq(2, 2, 1));
    check("uniform family bounds at (2,2) and (3,2)",
          uniform_shift_bounds(2, 2) == std::make_pair(5, 3) &&
              uniform_shift_bounds(3, 2) == std::make_pair(7, 5));
    check("equal untying fiber at index 3",
          u_index(S({3})).value == 3 && u_index(S({2, 2})).value == 3 &&
              u_index(S({1, 3})).value == 3);
    check("uniform untying equality: (3,2) and (2,4) share index 5",
          uniform_shift_u_equal(3, 2, 2, 4) &&
              u_index(uniform_shift_partition(3, 2)).value == 5);
    out << (failed == 0 ? "all examples passed\n"
                        : std::to_string(failed) + " example(s) failed\n");
    return failed == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"tanglemoves: classify, normalize, and order switch moves on tangle boundaries"};
    app.require_subcommand(1);

    int budget = -1;
    if (const char* env = std::getenv("TANGLEMOVES_BUDGET")) budget = std::atoi(env);
    app.add_option("--budget", budget,
                   "move budget per simplification (default 10*crossings+100)");
    int search_budget = 20000;
    app.add_option("--search-budget", search_budget, "node budget for order witness search");
    int n_max = 4;
    app.add_option("--n-max", n_max, "arc bound for hasse/enumerate");
    std::string format;
    app.add_option("--format", format, "output format: json, dot, or ascii")
        ->check(CLI::IsMember({"json", "dot", "ascii"}));
    bool up_to_equiv = false;
    app.add_flag("--up-to-equivalence", up_to_equiv, "compare targets by class only");

    std::vector<std::string> paths, two_files, partitions_arg;
    int count_n = 0, enum_n = 0;
    std::string partition_one;

    auto* classify = app.add_subcommand("classify", "decompositions and canonical forms");
    classify->add_option("files", paths, "move documents (JSON lines; - for stdin)");
    auto* normalize = app.add_subcommand("normalize", "canonical form plus letters-only witness");
    normalize->add_option("files", paths, "move documents (JSON lines; - for stdin)");
    auto* equiv = app.add_subcommand("equiv", "class equality of two moves");
    equiv->add_option("files", two_files, "two move documents")->expected(2);
    auto* order = app.add_subcommand("order", "order verdict between two classes");
    order->add_option("classes", partitions_arg, "two partitions, e.g. 2,2 3")->expected(2);
    auto* hasse = app.add_subcommand("hasse", "reduced order diagram as DOT");
    auto* count = app.add_subcommand("count", "number of classes on n arcs");
    count->add_option("n", count_n, "arc count")->required();
    auto* enumerate = app.add_subcommand("enumerate", "all switch moves on n arcs");
    enumerate->add_option("n", enum_n, "arc count")->required();
    auto* uindex = app.add_subcommand("u-index", "untying index of a crossing-like class");
    uindex->add_option("class", partition_one, "partition, e.g. 2,2")->required();
    auto* examples = app.add_subcommand("examples", "run the built-in instance suite");
    auto* render = app.add_subcommand("render", "picture of a standard move");
    render->add_option("class", partition_one, "partition, e.g. 1,2")->required();
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> argv(args);
    try {
        app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) {
            for (auto& d : read_documents(paths, in)) {
                MoveState st = document_state(d.doc);
                auto shape = st.decomposition();
                nlohmann::json j;
                j["arc_decomposition"] = shape.parts();
                j["switch"] = shape.switch_valid();
                if (shape.switch_valid()) {
                    j["kind"] = std::string(1, move_kind_letter(shape));
                    j["standard"] = move_to_json(standard_move(shape));
                }
                out << j.dump() << "\n";
            }
        } else if (normalize->parsed()) {
            for (auto& d : read_documents(paths, in)) {
                if (d.doc.sequence)
                    throw CliError{d.where + ": normalize expects braiding only (no joins)"};
                Checked<NormalOutcome> res = [&]() -> Checked<NormalOutcome> {
                    if (!d.doc.word) return normalize_move(d.doc.move);
                    auto pair = DiagramPair::from_move(d.doc.move);
                    for (const auto& l : *d.doc.word) pair.braid(l);
                    return normalize_pair(pair, budget);
                }();
                if (!res.ok()) throw CliError{d.where + ": " + res.reason()};
                // the witness must replay on the input at the diagram level
                auto pair = DiagramPair::from_move(d.doc.move);
                if (d.doc.word)
                    for (const auto& l : *d.doc.word) pair.braid(l);
                auto rep = verify_sequence(pair, to_ops(res.value().word), res.value().standard,
                                           up_to_equiv, budget);
                if (!rep.ok) throw CliError{d.where + ": witness verification failed: " + rep.diagnostic};
                nlohmann::json j;
                j["standard"] = move_to_json(res.value().standard);
                j["witness"] = word_to_json(res.value().word);
                out << j.dump() << "\n";
            }
        } else if (equiv->parsed()) {
            auto docs_a = read_documents({two_files[0]}, in);
            auto docs_b = read_documents({two_files[1]}, in);
            auto sa = document_state(docs_a.front().doc).decomposition();
            auto sb = document_state(docs_b.front().doc).decomposition();
            if (!sa.switch_valid() || !sb.switch_valid())
                throw CliError{"class equality is defined on proper switch moves"};
            out << (sa == sb ? "true" : "false") << "\n";
        } else if (order->parsed()) {
            auto a = parse_partition(partitions_arg[0]);
            if (!a.ok()) throw CliError{a.reason()};
            auto b = parse_partition(partitions_arg[1]);
            if (!b.ok()) throw CliError{b.reason()};
            auto v = class_leq(a.value(), b.value(), search_budget);
            if (format == "json") {
                nlohmann::json j;
                j["verdict"] = v.yes() ? "yes" : v.no() ? "no" : "unknown";
                j["criterion"] = v.criterion;
                if (v.witness) j["witness"] = ops_to_json(*v.witness);
                out << j.dump() << "\n";
            } else {
                if (v.value == VerdictValue::unknown)
                    out << "unknown\n";
                else
                    out << (v.yes() ? "yes" : "no") << " (" << v.criterion << ")\n";
                if (v.witness && !v.witness->empty())
                    out << "witness: " << to_string(*v.witness) << "\n";
            }
        } else if (hasse->parsed()) {
            out << hasse_export(n_max, search_budget).to_dot();
        } else if (count->parsed()) {
            out << class_count(count_n) << "\n";
        } else if (enumerate->parsed()) {
            for (const auto& m : enumerate_switch_moves(enum_n, std::max(n_max, 6)))
                out << move_to_json(m).dump() << "\n";
        } else if (uindex->parsed()) {
            auto p = parse_partition(partition_one);
            if (!p.ok()) throw CliError{p.reason()};
            out << u_index(p.value()).value << "\n";
        } else if (examples->parsed()) {
            return examples_suite(out);
        } else if (render->parsed()) {
            auto p = parse_partition(partition_one);
            if (!p.ok()) throw CliError{p.reason()};
            out << render_standard(p.value());
        }
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n";
        return 1;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace tangles
