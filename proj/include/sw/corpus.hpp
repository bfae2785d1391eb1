#pragma once

#include "sw/perm.hpp"
#include "sw/weight_sets.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sw {

using Env = std::map<std::string, std::int64_t>;

// Integer expressions over named variables: + - * ^, parentheses, unary
// minus, and juxtaposition ("2p", "p(b+1)") for products.
class Expr {
public:
    struct Node;
    Expr() = default;
    static Expr parse(const std::string& text);
    std::int64_t eval(const Env& env) const;
    const std::string& text() const { return text_; }

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
    friend class ExprParser;
};

// Conjunction of comparisons "lhs op rhs", op in = == != < <= > >=.
class Condition {
public:
    static Condition parse(const std::string& text);
    bool holds(const Env& env) const;
    const std::string& text() const { return text_; }

private:
    struct Atom {
        Expr lhs, rhs;
        std::string op;
    };
    std::vector<Atom> atoms_;
    std::string text_;
};

// "(e, e, e), (e, e, e)"
std::vector<std::vector<Expr>> parse_tuples(const std::string& text);

struct ShapeRecord {
    std::string tag;
    Perm w;
    Condition constraints;
    std::string dual_of;  // non-empty for dual shapes
    int line = 0;
};

struct TableRow {
    std::string tag;
    Condition condition;
    std::vector<std::vector<Expr>> mu;
    int line = 0;
};

struct IrregularTables {
    std::vector<ShapeRecord> shapes;
    std::vector<TableRow> rows;
};

IrregularTables parse_irregular_tables(std::istream& in);

struct Mismatch {
    std::string where;   // record or instance
    std::string detail;  // offending weight and direction
};

struct CorpusReport {
    std::size_t checked = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Replays the tables at p against w_expl minus regular weights, one parameter
// per (shape, a, b, c) in the normal-form ranges; also reports GL3 types at p
// that no shape reaches.
CorpusReport verify_irregular_tables(int p, const IrregularTables& tables);
CorpusReport verify_irregular_tables(int p);

// Fixtures: worked examples as parametrised checks.
//   fixture | name | ctx | vars | type | check
struct Fixture {
    std::string name;
    std::vector<int> ps, fs, es;
    int n = 3;
    std::string vars;
    std::string type;
    std::string check;
    int line = 0;
};

std::vector<Fixture> parse_fixtures(std::istream& in);
CorpusReport verify_fixture(const Fixture& fx);
CorpusReport verify_examples(const std::vector<Fixture>& fixtures);
CorpusReport verify_examples();

// Directory holding the corpus files; SW_CORPUS overrides the built-in path.
std::string corpus_dir();

std::string weight_str(const SerreWeight& a);

}  // namespace sw
