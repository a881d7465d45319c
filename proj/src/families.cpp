#include "bigenic/families.hpp"

#include <cctype>

#include "bigenic/errors.hpp"

namespace bigenic {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw validation_error("family expression error at position " +
                               std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos == text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int parse_int() {
        skip_ws();
        if (pos == text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long value = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000)
                fail("integer too large");
            ++pos;
        }
        return static_cast<int>(value);
    }

    std::string parse_word() {
        skip_ws();
        std::string w;
        while (pos < text.size() &&
               std::isalpha(static_cast<unsigned char>(text[pos])))
            w.push_back(text[pos++]);
        return w;
    }

    FamilyExpr parse_expr() {
        std::vector<std::pair<int, FamilyExpr>> terms;
        terms.push_back(parse_term());
        while (consume('+'))
            terms.push_back(parse_term());
        if (terms.size() == 1 && terms.front().first == 1)
            return std::move(terms.front().second);
        FamilyExpr e;
        e.kind = FamilyExpr::Kind::Union;
        e.terms = std::move(terms);
        return e;
    }

    std::pair<int, FamilyExpr> parse_term() {
        skip_ws();
        int mult = 1;
        if (pos < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos]))) {
            mult = parse_int();
            if (mult < 1)
                fail("multiplicity must be >= 1");
        }
        return {mult, parse_atom()};
    }

    FamilyExpr parse_atom() {
        skip_ws();
        if (pos == text.size())
            fail("expected an atom");
        // 'co(' opens a complement; other words are named atoms.
        if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
            const std::size_t word_pos = pos;
            const char head = text[pos];
            if (head == 'P' || head == 'C' || head == 'K' || head == 'S' ||
                head == 'T') {
                ++pos;
                return parse_letter_atom(head);
            }
            const std::string word = parse_word();
            if (word == "co") {
                if (!consume('('))
                    fail("expected '(' after co");
                FamilyExpr e;
                e.kind = FamilyExpr::Kind::Complement;
                e.inner.push_back(parse_expr());
                if (!consume(')'))
                    fail("expected ')'");
                return e;
            }
            const FamilyExpr* named = lookup_named(word);
            if (!named) {
                pos = word_pos;
                fail("unknown name '" + word + "'");
            }
            return *named;
        }
        fail(std::string("unexpected character '") + text[pos] + "'");
    }

    FamilyExpr parse_letter_atom(char head) {
        FamilyExpr e;
        if (head == 'S' || head == 'T') {
            e.kind = head == 'S' ? FamilyExpr::Kind::SubdividedClaw
                                 : FamilyExpr::Kind::TrianglePaths;
            e.params[0] = parse_int();
            if (!consume(','))
                fail("expected ','");
            e.params[1] = parse_int();
            if (!consume(','))
                fail("expected ','");
            e.params[2] = parse_int();
        } else {
            const int r = parse_int();
            if (head == 'K' && consume(',')) {
                e.kind = FamilyExpr::Kind::CompleteBipartite;
                e.params[0] = r;
                e.params[1] = parse_int();
            } else {
                e.kind = head == 'P'   ? FamilyExpr::Kind::Path
                         : head == 'C' ? FamilyExpr::Kind::Cycle
                                       : FamilyExpr::Kind::Complete;
                e.params[0] = r;
            }
        }
        validate_atom(e);
        return e;
    }

    static const FamilyExpr* lookup_named(const std::string& word) {
        static const std::map<std::string, FamilyExpr> named = [] {
            std::map<std::string, FamilyExpr> m;
            auto s = [](int h, int i, int j) {
                FamilyExpr e;
                e.kind = FamilyExpr::Kind::SubdividedClaw;
                e.params = {h, i, j};
                return e;
            };
            auto t = [](int h, int i, int j) {
                FamilyExpr e;
                e.kind = FamilyExpr::Kind::TrianglePaths;
                e.params = {h, i, j};
                return e;
            };
            m.emplace("claw", s(1, 1, 1));
            m.emplace("fork", s(1, 1, 2));
            m.emplace("chair", s(1, 1, 2));
            m.emplace("paw", t(0, 0, 1));
            m.emplace("bull", t(0, 1, 1));
            m.emplace("net", t(1, 1, 1));
            m.emplace("hammer", t(0, 0, 2));
            return m;
        }();
        auto it = named.find(word);
        return it == named.end() ? nullptr : &it->second;
    }

    void validate_atom(const FamilyExpr& e) const {
        const auto& p = e.params;
        switch (e.kind) {
        case FamilyExpr::Kind::Path:
            if (p[0] < 1)
                throw validation_error("P requires r >= 1, got r = " +
                                       std::to_string(p[0]));
            break;
        case FamilyExpr::Kind::Cycle:
            if (p[0] < 3)
                throw validation_error("C requires r >= 3, got r = " +
                                       std::to_string(p[0]));
            break;
        case FamilyExpr::Kind::Complete:
            if (p[0] < 1)
                throw validation_error("K requires r >= 1, got r = " +
                                       std::to_string(p[0]));
            break;
        case FamilyExpr::Kind::CompleteBipartite:
            if (p[0] < 1 || p[1] < 1)
                throw validation_error(
                    "K_{r,s} requires r,s >= 1, got r = " +
                    std::to_string(p[0]) + ", s = " + std::to_string(p[1]));
            break;
        case FamilyExpr::Kind::SubdividedClaw:
            if (!(1 <= p[0] && p[0] <= p[1] && p[1] <= p[2]))
                throw validation_error(
                    "S requires 1 <= h <= i <= j, got (" +
                    std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                    std::to_string(p[2]) + ")");
            break;
        case FamilyExpr::Kind::TrianglePaths:
            if (!(0 <= p[0] && p[0] <= p[1] && p[1] <= p[2]))
                throw validation_error(
                    "T requires 0 <= h <= i <= j, got (" +
                    std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                    std::to_string(p[2]) + ")");
            break;
        default:
            break;
        }
    }
};

void print_expr(const FamilyExpr& e, std::string& out) {
    switch (e.kind) {
    case FamilyExpr::Kind::Path:
        out += "P" + std::to_string(e.params[0]);
        break;
    case FamilyExpr::Kind::Cycle:
        out += "C" + std::to_string(e.params[0]);
        break;
    case FamilyExpr::Kind::Complete:
        out += "K" + std::to_string(e.params[0]);
        break;
    case FamilyExpr::Kind::CompleteBipartite:
        out += "K" + std::to_string(e.params[0]) + "," +
               std::to_string(e.params[1]);
        break;
    case FamilyExpr::Kind::SubdividedClaw:
        out += "S" + std::to_string(e.params[0]) + "," +
               std::to_string(e.params[1]) + "," +
               std::to_string(e.params[2]);
        break;
    case FamilyExpr::Kind::TrianglePaths:
        out += "T" + std::to_string(e.params[0]) + "," +
               std::to_string(e.params[1]) + "," +
               std::to_string(e.params[2]);
        break;
    case FamilyExpr::Kind::Union: {
        bool first = true;
        for (const auto& [mult, sub] : e.terms) {
            if (!first)
                out += "+";
            first = false;
            if (mult > 1)
                out += std::to_string(mult);
            print_expr(sub, out);
        }
        break;
    }
    case FamilyExpr::Kind::Complement:
        out += "co(";
        print_expr(e.inner.front(), out);
        out += ")";
        break;
    }
}

Graph path_graph(int r) {
    Graph g(r);
    for (int v = 0; v + 1 < r; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph realize_atom(const FamilyExpr& e) {
    const auto& p = e.params;
    switch (e.kind) {
    case FamilyExpr::Kind::Path:
        return path_graph(p[0]);
    case FamilyExpr::Kind::Cycle: {
        Graph g = path_graph(p[0]);
        g.add_edge(p[0] - 1, 0);
        return g;
    }
    case FamilyExpr::Kind::Complete: {
        Graph g(p[0]);
        for (int u = 0; u < p[0]; ++u)
            for (int v = u + 1; v < p[0]; ++v)
                g.add_edge(u, v);
        return g;
    }
    case FamilyExpr::Kind::CompleteBipartite: {
        Graph g(p[0] + p[1]);
        for (int u = 0; u < p[0]; ++u)
            for (int v = 0; v < p[1]; ++v)
                g.add_edge(u, p[0] + v);
        return g;
    }
    case FamilyExpr::Kind::SubdividedClaw: {
        // Vertex 0 is the centre; arms follow consecutively.
        Graph g(1 + p[0] + p[1] + p[2]);
        int next = 1;
        for (int arm = 0; arm < 3; ++arm) {
            int prev = 0;
            for (int step = 0; step < p[static_cast<std::size_t>(arm)];
                 ++step) {
                g.add_edge(prev, next);
                prev = next++;
            }
        }
        return g;
    }
    case FamilyExpr::Kind::TrianglePaths: {
        // a0..ah, b0..bi, c0..cj; triangle on a0, b0, c0.
        const int a0 = 0;
        const int b0 = p[0] + 1;
        const int c0 = p[0] + p[1] + 2;
        Graph g(p[0] + p[1] + p[2] + 3);
        g.add_edge(a0, b0);
        g.add_edge(b0, c0);
        g.add_edge(c0, a0);
        for (int arm = 0; arm < 3; ++arm) {
            const int base = arm == 0 ? a0 : arm == 1 ? b0 : c0;
            for (int step = 0; step < p[static_cast<std::size_t>(arm)];
                 ++step)
                g.add_edge(base + step, base + step + 1);
        }
        return g;
    }
    default:
        throw validation_error("realize_atom on a non-atom expression");
    }
}

} // namespace

FamilyExpr parse_family(std::string_view text) {
    Parser parser{text};
    FamilyExpr e = parser.parse_expr();
    if (!parser.eof())
        parser.fail("trailing input");
    return e;
}

std::string to_string(const FamilyExpr& e) {
    std::string out;
    print_expr(e, out);
    return out;
}

Graph realize(const FamilyExpr& e) {
    switch (e.kind) {
    case FamilyExpr::Kind::Union: {
        Graph g(0);
        for (const auto& [mult, sub] : e.terms) {
            const Graph part = realize(sub);
            for (int copy = 0; copy < mult; ++copy)
                g = disjoint_union(g, part);
        }
        return g;
    }
    case FamilyExpr::Kind::Complement:
        return complement(realize(e.inner.front()));
    default:
        return realize_atom(e);
    }
}

Graph make_graph(std::string_view text) {
    return realize(parse_family(text));
}

const std::map<std::string, Graph>& catalog_fixtures() {
    static const std::map<std::string, Graph> fixtures = [] {
        std::map<std::string, Graph> m;
        for (const char* name :
             {"K1,3", "C4", "4P1", "2P1+P2", "co(C4+P1)", "P5",
              "co(C3+2P1)", "co(C3+P2)", "co(P1+2P2)", "paw", "bull", "net",
              "hammer", "2P2", "3P2", "T0,2,2", "2C3", "C3+P4", "2P4",
              "T0,0,4"})
            m.emplace(name, make_graph(name));
        return m;
    }();
    return fixtures;
}

} // namespace bigenic
