#ifndef BIGENIC_FAMILIES_HPP
#define BIGENIC_FAMILIES_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bigenic/graph.hpp"

namespace bigenic {

/// Symbolic description of a parameterized graph. The expression language:
///
///   Expr := Term ('+' Term)*
///   Term := [int] Atom
///   Atom := 'P'r | 'C'r | 'K'r | 'K'r','s | 'S'h','i','j | 'T'h','i','j
///         | name | 'co(' Expr ')'
///
/// Whitespace is ignored. Named atoms (claw, fork, paw, bull, net, hammer)
/// are resolved to their S/T form at parse time. Arity bounds: r >= 1 for
/// P and K; r >= 3 for C; r,s >= 1 for K_{r,s}; 1 <= h <= i <= j for S;
/// 0 <= h <= i <= j for T; multiplicities >= 1.
struct FamilyExpr {
    enum class Kind {
        Path,              // P r           params[0] = r
        Cycle,             // C r
        Complete,          // K r
        CompleteBipartite, // K r,s         params[0..1]
        SubdividedClaw,    // S h,i,j       params[0..2]
        TrianglePaths,     // T h,i,j       params[0..2]
        Union,             // terms with multiplicities
        Complement,        // inner[0]
    };

    Kind kind = Kind::Path;
    std::array<int, 3> params{0, 0, 0};
    std::vector<std::pair<int, FamilyExpr>> terms;
    std::vector<FamilyExpr> inner;

    bool operator==(const FamilyExpr&) const = default;
};

/// Parses an expression; throws validation_error with the offending
/// position on syntax errors and with the violated bound on arity errors.
FamilyExpr parse_family(std::string_view text);

/// Printer; to_string and parse_family round-trip to equal expressions.
std::string to_string(const FamilyExpr& e);

/// Concrete graph for a valid expression. S_{h,i,j} is laid out as the
/// degree-3 centre first, then the three arms; T_{h,i,j} as a0..ah,
/// b0..bi, c0..cj with the triangle a0 b0 c0.
Graph realize(const FamilyExpr& e);

/// Shorthand for realize(parse_family(text)).
Graph make_graph(std::string_view text);

/// All fixture graphs used across the test suites and the catalog
/// subcommand, keyed by their expression string.
const std::map<std::string, Graph>& catalog_fixtures();

} // namespace bigenic

#endif
