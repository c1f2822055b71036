// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock budget. Exits nonzero if any line fails.

#include "collections.hpp"
#include "oracles.hpp"
#include "polyo/service.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace polyo;
using namespace testdata;

namespace {

using QQ = RationalField;
using PQ = Polynomial<QQ>;

// Budgets in seconds.
constexpr double kIdealLimit = 1.0;
constexpr double kMatrixLimit = 0.1;
constexpr double kFigure3aLimit = 60.0;
constexpr double kClosedPathLimit = 600.0;
constexpr double kInitialLimit = 60.0;  // each of the two computations
constexpr double kHilbertLimit = 300.0;
constexpr double kPropertyLimit = 900.0;
constexpr double kRegressionLimit = 900.0;

struct Outcome {
    bool ok = true;
    std::string detail;
    double budget_used = -1;  // overrides elapsed/limit when a line has several timed parts
};

int failures = 0;

void report(const std::string& name, double limit, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = out.budget_used >= 0 ? out.budget_used <= 1.0 : elapsed < limit;
    bool pass = out.ok && in_time;
    if (!pass) ++failures;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", elapsed, limit);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "  (" << timing << ")";
    if (!in_time) std::cout << "  over budget";
    if (!out.detail.empty()) std::cout << "  " << out.detail;
    std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

JobRequest request(const std::string& cells, const std::string& command) {
    JobRequest r;
    r.cells = cells;
    r.command = command;
    return r;
}

const char* kFigure2Input =
    "Q={{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}, {{3, 1}, {4, 2}}, {{2, 2}, {3, 3}}, \n{{3, 2}, {4, 3}}, {{2, 3}, {3, 4}}};";

const std::set<std::string> kFigure2Binomials = {
    "x_(4,3)x_(3,2)-x_(4,2)x_(3,3)", "x_(2,2)x_(1,1)-x_(2,1)x_(1,2)", "x_(4,3)x_(2,1)-x_(4,1)x_(2,3)",
    "x_(3,2)x_(2,1)-x_(3,1)x_(2,2)", "x_(4,3)x_(2,2)-x_(4,2)x_(2,3)", "x_(3,3)x_(2,1)-x_(3,1)x_(2,3)",
    "x_(4,2)x_(1,1)-x_(4,1)x_(1,2)", "x_(3,4)x_(2,1)-x_(3,1)x_(2,4)", "x_(3,3)x_(2,2)-x_(3,2)x_(2,3)",
    "x_(4,2)x_(3,1)-x_(4,1)x_(3,2)", "x_(3,4)x_(2,2)-x_(3,2)x_(2,4)", "x_(3,2)x_(1,1)-x_(3,1)x_(1,2)",
    "x_(4,3)x_(3,1)-x_(4,1)x_(3,3)", "x_(3,4)x_(2,3)-x_(3,3)x_(2,4)", "x_(4,2)x_(2,1)-x_(4,1)x_(2,2)",
};

// Expected leading monomials of the six-cell ideal under the default ring.
const std::vector<std::pair<GridPoint, GridPoint>> kFigure2Leads = {
    {{2, 4}, {3, 3}}, {{3, 3}, {4, 2}}, {{2, 3}, {4, 2}}, {{2, 4}, {3, 2}}, {{2, 3}, {3, 2}},
    {{4, 2}, {1, 1}}, {{3, 2}, {1, 1}}, {{2, 2}, {1, 1}}, {{3, 3}, {4, 1}}, {{2, 3}, {4, 1}},
    {{3, 2}, {4, 1}}, {{2, 2}, {4, 1}}, {{2, 4}, {3, 1}}, {{2, 3}, {3, 1}}, {{2, 2}, {3, 1}},
};

Monomial product(const RingPtr<QQ>& R, GridPoint a, GridPoint b) {
    return R->monomial_of(Variable::x(a)) * R->monomial_of(Variable::x(b));
}

bool is_reduced_basis(const std::vector<PQ>& G) {
    for (std::size_t a = 0; a < G.size(); ++a)
        for (std::size_t b = a + 1; b < G.size(); ++b)
            if (!normal_form(spair(G[a], G[b]), G).is_zero()) return false;
    // no term of any element is divisible by the lead of another
    for (std::size_t a = 0; a < G.size(); ++a)
        for (std::size_t b = 0; b < G.size(); ++b) {
            if (a == b) continue;
            for (const auto& t : G[a].terms())
                if (G[b].lead_monomial().divides(t.mono)) return false;
        }
    return true;
}

Outcome figure2_ideal() {
    auto r = run_command(request(kFigure2Input, "ideal"));
    if (r.error) return {false, r.body.dump()};
    std::set<std::string> got;
    for (const auto& g : r.body.at("result").at("generators")) got.insert(g.get<std::string>());
    std::size_t common = 0;
    for (const auto& s : got) common += kFigure2Binomials.count(s);
    return {got == kFigure2Binomials, std::to_string(common) + "/15 binomials match, " + std::to_string(got.size()) + " returned"};
}

Outcome figure2_matrix() {
    auto req = request(kFigure2Input, "matrix");
    req.options.format = OutputFormat::text;
    auto r = run_command(req);
    const std::string expect =
        "| 0       x_(2,4) x_(3,4) 0       |\n"
        "| 0       x_(2,3) x_(3,3) x_(4,3) |\n"
        "| x_(1,2) x_(2,2) x_(3,2) x_(4,2) |\n"
        "| x_(1,1) x_(2,1) x_(3,1) x_(4,1) |\n";
    return {!r.error && r.payload() == expect, r.error ? r.payload() : "4x4, top row j=4"};
}

Outcome figure3a_compare() {
    auto r = run_command(request(render_encoding(figure3a()), "compare"));
    if (r.error) return {false, r.body.dump()};
    const auto& c = r.body.at("result");
    return {c.at("equal").get<bool>(), "equal = " + c.at("equal").dump()};
}

Outcome closed_path_compare() {
    auto P = closed_path();
    auto cmp = toric_compare(P, QQ{}, std::vector<GridPoint>{{2, 3}});
    const auto& R = cmp.toric.ring();
    auto x = [&](std::int64_t i, std::int64_t j) { return R->monomial_of(Variable::x({i, j})); };
    auto quartic = PQ::binomial(R, x(6, 5) * x(5, 1) * x(2, 6) * x(1, 2), x(6, 2) * x(5, 6) * x(2, 1) * x(1, 5));
    std::vector<PQ> high;
    for (const auto& g : minimal_generators(cmp.toric))
        if (g.total_degree() >= 3) high.push_back(g);
    bool in_j = member(quartic, cmp.toric);
    bool listed = high.size() == 1 && high[0].monic() == quartic.monic();
    std::ostringstream d;
    d << "equal = " << (cmp.equal ? "true" : "false") << ", quartic in J_P: " << (in_j ? "yes" : "no")
      << ", generators of degree >= 3: " << high.size();
    return {!cmp.equal && in_j && listed, d.str()};
}

Outcome initial_ideals() {
    Outcome out;
    std::ostringstream d;
    double worst = 0;

    auto t0 = std::chrono::steady_clock::now();
    auto I = polyo_ideal(figure2(), QQ{});
    auto in2 = initial_ideal(I);
    worst = std::max(worst, seconds_since(t0) / kInitialLimit);
    std::set<std::string> got, expect;
    for (const auto& m : in2) got.insert(I.ring()->render(m));
    for (auto [a, b] : kFigure2Leads) expect.insert(I.ring()->render(product(I.ring(), a, b)));
    std::size_t common = 0;
    for (const auto& m : got) common += expect.count(m);
    bool first = got == expect;
    d << "figure 2 (" << to_string(I.ring()->order().kind) << "): " << common << "/15 leads match the reference";
    if (!first) {
        d << " [got";
        for (const auto& m : in2) d << " " << I.ring()->render(m);
        d << "]";
    }

    t0 = std::chrono::steady_clock::now();
    auto C = polyo_ideal(convex12(), QQ{}, {RingChoice::convex, OrderKind::ranked_lex});
    auto inC = initial_ideal(C);
    bool squarefree_quadrics = std::all_of(inC.begin(), inC.end(), [](const Monomial& m) {
        return m.degree() == 2 && m.squarefree();
    });
    bool reduced = is_reduced_basis(C.generators());
    worst = std::max(worst, seconds_since(t0) / kInitialLimit);
    bool second = inC.size() == 45 && squarefree_quadrics && reduced;
    d << "; convex 12-cell: " << inC.size() << " monomials (45 required), squarefree quadrics: "
      << (squarefree_quadrics ? "yes" : "no") << ", generators reduced GB: " << (reduced ? "yes" : "no")
      << ", inner intervals: " << inner_intervals(convex12()).size();

    out.ok = first && second;
    out.detail = d.str();
    out.budget_used = worst;
    return out;
}

Outcome figure5_hilbert() {
    auto H = reduced_hilbert_series(polyo_ideal(figure5(), QQ{}));
    bool ok = H.numerator == IntPoly({1, 12, 50, 92, 76, 24, 2}) && H.denominator_exponent == 12 &&
              H.numerator.at_one() == 257;
    return {ok, H.to_string() + ", N(1) = " + std::to_string(H.numerator.at_one())};
}

Outcome property_suites() {
    std::ostringstream d;
    bool ok = true;
    std::mt19937_64 rng(20240611);

    // geometry against brute force inside an 8x8 box
    int geometry_cases = 0, with_holes = 0;
    for (; geometry_cases < 600; ++geometry_cases) {
        std::uniform_real_distribution<double> density(0.2, 0.85);
        auto P = random_subset(rng, 8, density(rng));
        if (inner_intervals(P) != brute_inner_intervals(P)) ok = false;
        auto holes = detect_holes(P);
        if (holes != brute_holes(P)) ok = false;
        with_holes += holes.empty() ? 0 : 1;
    }
    d << "geometry " << geometry_cases << " cases (" << with_holes << " with holes)";
    if (!ok) return {false, d.str() + ": mismatch"};

    // edge-ring vanishing of every inner 2-minor
    int edge_cases = 0;
    for (; edge_cases < 100; ++edge_cases) {
        auto P = random_subset(rng, 6, 0.6);
        auto I = polyo_ideal(P, QQ{});
        auto E = edge_ring(P);
        auto img = edge_images(I.ring(), E);
        for (const auto& g : I.generators())
            if (!substitute(g, std::span<const PQ>(img), E).is_zero()) ok = false;
    }
    d << "; edge ring " << edge_cases << " cases";
    if (!ok) return {false, d.str() + ": nonzero image"};

    // I_P inside J_P by alpha-substitution
    std::vector<CellCollection> toric_cases = {figure3a(), closed_path(), figure5(), figure2()};
    for (int k = 0; k < 40; ++k) toric_cases.push_back(random_weakly_connected(rng, 2 + k % 7));
    for (const auto& P : toric_cases) {
        auto A = alpha(P, hole_corners(P));
        auto I = polyo_ideal(P, QQ{});
        for (const auto& g : I.generators())
            if (!alpha_image(g, A).is_zero()) ok = false;
    }
    d << "; alpha containment " << toric_cases.size() << " cases";
    if (!ok) return {false, d.str() + ": generator outside J_P"};

    // reduced basis is independent of the generator order
    int perm_cases = 0;
    for (; perm_cases < 40; ++perm_cases) {
        auto P = random_weakly_connected(rng, 3 + perm_cases % 6);
        auto I = polyo_ideal(P, QQ{}, {RingChoice::ranked, perm_cases % 2 ? OrderKind::ranked_grevlex : OrderKind::ranked_lex});
        auto gens = I.generators();
        auto G = buchberger_reduced(gens);
        for (int s = 0; s < 3; ++s) {
            std::shuffle(gens.begin(), gens.end(), rng);
            if (buchberger_reduced(gens) != G) ok = false;
        }
    }
    d << "; permutation uniqueness " << perm_cases << " cases";
    if (!ok) return {false, d.str() + ": bases differ"};

    // Hilbert series expansion against standard monomial counts
    std::vector<CellCollection> hilbert_cases = {single_cell(), block2x2(), figure2(), staircase3(), figure3a()};
    for (int k = 0; k < 10; ++k) hilbert_cases.push_back(random_weakly_connected(rng, 2 + k % 4));
    for (const auto& P : hilbert_cases) {
        auto I = polyo_ideal(P, QQ{}, {RingChoice::ranked, OrderKind::ranked_grevlex});
        auto series = reduced_hilbert_series(I).expand(6);
        auto lead = initial_ideal(I);
        for (std::uint32_t deg = 0; deg <= 6; ++deg)
            if (series[deg] != standard_monomials(lead, I.ring()->nvars(), deg)) ok = false;
    }
    d << "; Hilbert expansion " << hilbert_cases.size() << " cases to degree 6";
    return {ok, d.str()};
}

Outcome theorem_regression() {
    std::mt19937_64 rng(31337);
    int checked = 0, equal = 0, tries = 0;
    std::string first_bad;
    while (checked < 60 && tries < 100000) {
        ++tries;
        std::uniform_int_distribution<std::size_t> size(1, 8);
        auto P = random_weakly_connected(rng, size(rng));
        if (!classify(P).simple) continue;
        ++checked;
        if (toric_compare(P, QQ{}).equal) ++equal;
        else if (first_bad.empty()) first_bad = render_encoding(P);
    }
    std::string detail = std::to_string(equal) + "/" + std::to_string(checked) + " collections with I_P = J_P";
    if (!first_bad.empty()) detail += ", first counterexample " + first_bad;
    return {checked >= 50 && equal == checked, detail};
}

}  // namespace

int main() {
    report("figure 2 ideal: 15 inner 2-minors", kIdealLimit, figure2_ideal);
    report("figure 2 matrix layout", kMatrixLimit, figure2_matrix);
    report("figure 3(A) compare: I_P = J_P", kFigure3aLimit, figure3a_compare);
    report("closed path compare: one extra quartic", kClosedPathLimit, closed_path_compare);
    report("initial ideals", kInitialLimit, initial_ideals);
    report("figure 5 Hilbert series", kHilbertLimit, figure5_hilbert);
    report("property suites", kPropertyLimit, property_suites);
    report("simple collections regression", kRegressionLimit, theorem_regression);
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failures ? 1 : 0;
}
