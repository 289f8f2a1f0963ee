// Command-line front end for the thompson library.
//
// Exit status: 0 on success, 1 when a verification or bound check fails,
// 2 on malformed input.

#include "thompson/thompson.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

using namespace thompson;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

bool looks_like_diagram(const std::string& s) { return s.find(':') != std::string::npos && s.find('[') == std::string::npos; }
bool looks_like_plmap(const std::string& s) { return s.find(',') != std::string::npos && s.find('[') == std::string::npos; }
bool looks_like_ppmap(const std::string& s) { return s.find("..") != std::string::npos; }

// A diagram from either a diagram literal or a word; the result is reduced.
TreePairDiagram element_from_text(const std::string& s) {
    if (looks_like_diagram(s)) return reduce(parse_diagram(s));
    if (looks_like_plmap(s)) return diagram_from_plmap(parse_plmap(s));
    return word_to_diagram(parse_word(s));
}

std::string yes_no(bool m) { return m ? "member" : "not a member"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thompson's group T and the modular group inside it"};
    app.require_subcommand(1);
    int status = kOk;

    std::string arg1, arg2, out_file;
    std::size_t max_k = 6, radius = 5, max_len = 5;

    auto* normalize = app.add_subcommand("normalize", "normal form of a word over a, b, B");
    normalize->add_option("word", arg1)->required();
    normalize->callback([&] { std::cout << parse_word(arg1).str() << "\n"; });

    auto* to_diagram = app.add_subcommand("to-diagram", "reduced tree pair diagram of a word");
    to_diagram->add_option("word", arg1)->required();
    to_diagram->callback([&] { std::cout << word_to_diagram(parse_word(arg1)).str() << "\n"; });

    auto* to_word = app.add_subcommand("to-word", "read a word off a reduced diagram");
    to_word->add_option("diagram", arg1)->required();
    to_word->callback([&] {
        auto d = parse_diagram(arg1);
        if (!is_reduced(d)) throw NotReducedError();
        auto w = diagram_to_word(d);
        std::cout << (w ? w->str() : "none: not in PSL2(Z)") << "\n";
    });

    auto* member = app.add_subcommand("member", "membership in PSL2(Z) of a diagram, word or PL map");
    member->add_option("element", arg1)->required();
    member->callback([&] {
        TreePairDiagram d = element_from_text(arg1);
        bool by_trees = is_member(d);
        bool by_slopes = is_member_seq(plmap_from_diagram(d));
        std::cout << d.str() << ": " << yes_no(by_trees) << " (tree pairs), " << yes_no(by_slopes) << " (slope sequence)\n";
        if (by_trees != by_slopes) status = kVerifyFailed;
    });

    auto* compose = app.add_subcommand("compose", "product, left factor applied first");
    compose->add_option("first", arg1)->required();
    compose->add_option("second", arg2)->required();
    compose->callback([&] {
        if (!looks_like_diagram(arg1) && !looks_like_diagram(arg2) && !looks_like_plmap(arg1) && !looks_like_plmap(arg2)) {
            NormalWord w = concat(parse_word(arg1), parse_word(arg2));
            std::cout << w.str() << "\n" << word_to_diagram(w).str() << "\n";
            return;
        }
        std::cout << multiply(element_from_text(arg1), element_from_text(arg2)).str() << "\n";
    });

    auto* minkowski = app.add_subcommand("minkowski", "question mark function of p/q");
    minkowski->add_option("x", arg1)->required();
    minkowski->callback([&] { std::cout << minkowski_q(parse_ext_rational(arg1)).str() << "\n"; });

    auto* minkowski_inverse = app.add_subcommand("minkowski-inv", "inverse question mark of a dyadic in [0, 1)");
    minkowski_inverse->add_option("d", arg1)->required();
    minkowski_inverse->callback([&] {
        try {
            std::cout << minkowski_inv(parse_dyadic(arg1)).str() << "\n";
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    });

    auto* conjugate = app.add_subcommand("conjugate", "conjugate a projective map (or word) by ?");
    conjugate->add_option("map", arg1)->required();
    conjugate->callback([&] {
        PPMap f = looks_like_ppmap(arg1) ? parse_ppmap(arg1) : ppmap_from_word(parse_word(arg1));
        PLMap g = inn_question(f);
        std::cout << g.str() << "\n" << diagram_from_plmap(g).str() << "\n";
    });

    auto* seq = app.add_subcommand("seq", "slope sequence of a word, diagram or PL map");
    seq->add_option("element", arg1)->required();
    seq->callback([&] {
        SeqS s = seq_from_plmap(plmap_from_diagram(element_from_text(arg1)));
        std::cout << seq_str(s) << "\n" << seq_slope_str(s) << "\n" << (is_k_good(s) ? "good" : "not good") << "\n";
    });

    auto* lengths = app.add_subcommand("lengths", "length bounds against caret counts");
    lengths->add_option("--max-k", max_k, "largest exponent count")->check(CLI::Range(0, 12));
    lengths->callback([&] {
        auto rep = length_bounds_report(max_k);
        std::cout << "word\tk\t|w|\tcarets\tleaves\n";
        for (const auto& r : rep.rows)
            std::cout << r.word.str() << "\t" << r.word.k() << "\t" << r.len_ab << "\t" << r.carets << "\t" << r.leaves << "\n";
        std::cout << "ratio |w|/N from " << rep.min_ratio.str() << " to " << rep.max_ratio.str() << "\n";
        std::cout << (rep.ok ? "bounds hold" : "FAILED: " + rep.failure) << "\n";
        if (!rep.ok) status = kVerifyFailed;
    });

    auto* free_sub = app.add_subcommand("free-subgroup", "words in abab and aBaB");
    free_sub->add_option("--max-len", max_len, "largest word length")->check(CLI::Range(1, 6));
    free_sub->callback([&] {
        auto rep = free_subgroup_report(max_len);
        for (const auto& [w, img] : rep.samples) std::cout << w << " -> " << img << "\n";
        std::cout << rep.words_checked << " reduced words, min |image|/length " << rep.min_growth.str() << "\n";
        std::cout << "abelian image of abab: (" << rep.abel_g.first << "," << rep.abel_g.second << "), of aBaB: ("
                  << rep.abel_h.first << "," << rep.abel_h.second << ") in Z/2 x Z/3\n";
        std::cout << (rep.ok ? "no relations found" : "FAILED: " + rep.failure) << "\n";
        if (!rep.ok) status = kVerifyFailed;
    });

    auto* bfs = app.add_subcommand("bfs", "word length in A, B, C by breadth-first search");
    bfs->add_option("--radius", radius, "ball radius")->check(CLI::Range(0, 6));
    bfs->add_option("element", arg1)->required();
    bfs->callback([&] {
        auto len = bfs_length_ABC(element_from_text(arg1), radius);
        if (len) {
            std::cout << *len << "\n";
        } else {
            std::cout << "outside the ball of radius " << radius << "\n";
        }
    });

    auto* render = app.add_subcommand("render", "DOT drawing of a diagram");
    render->add_option("element", arg1)->required();
    render->add_option("-o,--output", out_file, "output file (default: stdout)");
    render->callback([&] {
        std::string dot = render_tree(element_from_text(arg1));
        if (out_file.empty()) {
            std::cout << dot;
            return;
        }
        std::ofstream os(out_file);
        if (!os) throw ParseError("cannot open " + out_file);
        os << dot;
    });

    auto* verify = app.add_subcommand("verify", "run every acceptance criterion at the given scale");
    verify->add_option("--max-k", max_k, "largest exponent count")->check(CLI::Range(2, 10));
    verify->add_option("--radius", radius, "{A, B, C} ball radius, 0 to skip")->check(CLI::Range(0, 6));
    verify->callback([&] {
        auto summary = verify_all(max_k, radius);
        std::cout << summary.str();
        if (!summary.all_passed()) status = kVerifyFailed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return status;
}
