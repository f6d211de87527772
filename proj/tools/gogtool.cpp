#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"gogtool: graphs of groups, their boundary actions and C*-algebra reports"};
    app.require_subcommand(1);

    gogtool::Options opt;
    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"validate", "Parse and check a .gog document"},
        {"tree", "Valence trace of the Bass-Serre tree"},
        {"act", "Image of a cylinder under a word"},
        {"analyze", "Minimality, local contractivity, freeness and effectiveness"},
        {"classify", "C*-algebra classification report"},
        {"gfamily-verify", "Check the G-family and Cuntz-Krieger relations on a truncated representation"},
        {"export-dot", "DOT rendering of the Bass-Serre tree"},
    };
    for (const Spec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("file", opt.file, ".gog document")->required();
        sub->add_option("--format", opt.format, "text | machine | dot")->check(CLI::IsMember({"text", "machine", "dot"}));
        sub->add_option("--depth", opt.depth, "Tree, refinement or truncation depth");
        const std::string name = s.name;
        if (name == "analyze") {
            sub->add_option("--wordlen", opt.wordlen, "Word length for the orbit simulation");
            sub->add_flag("--orbit", opt.orbit, "Run the orbit simulation as well");
            sub->add_option("--property", opt.property,
                            "Exit with the verdict of minimal | locally-contractive | topologically-free | effective");
        }
        if (name == "act") {
            sub->add_option("--element", opt.element, "Word literal, e.g. \"(1) e (0) e~\"")->required();
            sub->add_option("--cylinder", opt.cylinder, "Path literal naming the cylinder");
        }
        if (name == "gfamily-verify") sub->add_option("--xi", opt.xi, "Tail point \"stem ; cycle\" or \"stem (cycle)^inf\"");
        sub->callback([&opt, name] { opt.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : gogtool::ParseFailure;
    }
    return gogtool::run(opt, std::cout, std::cerr);
}
