// polyo: command line front end for the polyomino ideal toolkit.
//
//   polyo ideal '{{{1,1},{2,2}},{{2,1},{3,2}}}' --format text
//   polyo compare --input path.txt --holes '{{2,3}}'
//   polyo serve --port 8080

#include "polyo/jobs.hpp"
#include "polyo/service.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct Args {
    std::string cells;
    std::string input;
    std::string field = "qq";
    int ring_choice = 1;
    std::string term_order = "lex";
    std::string holes = "auto";
    std::string format = "text";
    double timeout = 0;
    bool dedupe = false;
    bool all_minors = false;
};

int run(const std::string& command, const Args& a) {
    polyo::JobRequest req;
    req.command = command;
    try {
        if (!a.cells.empty() && !a.input.empty()) throw polyo::ParseError("give the cells or --input, not both");
        if (!a.cells.empty() && a.cells != "-") {
            req.cells = a.cells;
        } else if (!a.input.empty() && a.input != "-") {
            std::ifstream f(a.input);
            if (!f) throw polyo::ParseError("cannot read " + a.input);
            req.cells = read_all(f);
        } else {
            req.cells = read_all(std::cin);
        }
        auto& o = req.options;
        o.field = polyo::FieldSpec::parse(a.field);
        o.ring_choice = polyo::parse_ring_choice(a.ring_choice);
        o.term_order = polyo::parse_term_order(a.term_order);
        o.holes = polyo::parse_holes(a.holes);
        o.format = polyo::parse_format(a.format);
        o.timeout_seconds = a.timeout;
        o.dedupe = a.dedupe;
        o.all_minors = a.all_minors;
    } catch (const polyo::Error& e) {
        std::cerr << "error: " << polyo::to_string(e.code()) << ": " << e.what() << "\n";
        return 2;
    }
    auto resp = polyo::run_command(req);
    if (resp.error && resp.format == polyo::OutputFormat::text) std::cerr << resp.payload();
    else std::cout << resp.payload();
    return resp.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inner 2-minor ideals, toric ideals and Hilbert series of collections of cells"};
    app.require_subcommand(1);
    Args args;

    const std::map<std::string, std::string> help = {
        {"classify", "polyomino, weak connectivity, convexity and holes"},
        {"ideal", "the inner 2-minors generating I_P"},
        {"matrix", "the matrix M(P), top row first"},
        {"toric", "minimal generators of the toric ideal J_P"},
        {"compare", "whether I_P = J_P, with the extra generators of J_P"},
        {"groebner", "reduced Groebner basis of I_P"},
        {"initial", "minimal generators of the initial ideal of I_P"},
        {"hilbert", "reduced Hilbert series of S/I_P"},
    };
    std::string chosen;
    for (auto cmd : polyo::kCommands) {
        std::string name(cmd);
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("cells", args.cells, "cell list, e.g. {{{1,1},{2,2}}} or [[[1,1],[2,2]]]; '-' reads stdin");
        sub->add_option("-i,--input", args.input, "read the cell list from a file ('-' for stdin)");
        sub->add_option("--field", args.field, "qq or fp:<prime>")->capture_default_str();
        sub->add_option("--ring-choice", args.ring_choice, "1: vertex-ranked ring, 2: convex-collection order")
            ->check(CLI::IsMember({1, 2}))
            ->capture_default_str();
        sub->add_option("--term-order", args.term_order, "lex or grevlex")
            ->check(CLI::IsMember({"lex", "grevlex"}))
            ->capture_default_str();
        sub->add_option("--holes", args.holes, "hole corners such as {{2,3}}, or auto")->capture_default_str();
        sub->add_option("--format", args.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--timeout", args.timeout, "seconds; 0 means no limit")->check(CLI::NonNegativeNumber);
        sub->add_flag("--dedupe", args.dedupe, "drop repeated cells instead of failing");
        if (name == "ideal") sub->add_flag("--all-minors", args.all_minors, "also list every nonzero 2-minor of M(P)");
        sub->callback([&chosen, name] { chosen = name; });
    }

    polyo::ServiceConfig service;
    auto* serve = app.add_subcommand("serve", "run the local JSON service");
    serve->add_option("--host", service.host, "bind address")->capture_default_str();
    serve->add_option("--port", service.port, "port")->capture_default_str();
    serve->add_option("--timeout", service.default_timeout_seconds, "default per-request timeout in seconds")
        ->capture_default_str();
    serve->callback([&chosen] { chosen = "serve"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (chosen == "serve") {
        std::cerr << "listening on http://" << service.host << ":" << service.port << "/api/v1\n";
        if (!polyo::serve_api(service)) {
            std::cerr << "error: cannot bind " << service.host << ":" << service.port << "\n";
            return 1;
        }
        return 0;
    }
    return run(chosen, args);
}
