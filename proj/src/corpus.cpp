#include "sw/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#ifndef SW_CORPUS_DIR_PATH
#define SW_CORPUS_DIR_PATH "corpus"
#endif

namespace sw {

// ---------------------------------------------------------------- expressions

struct Expr::Node {
    char kind;  // 'n' number, 'v' variable, '+', '-', '*', '^', '~' negation
    std::int64_t value = 0;
    std::string name;
    std::shared_ptr<const Node> l, r;
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Splits at separators outside parentheses and braces.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '{') ++depth;
        if (ch == ')' || ch == '}') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::int64_t checked_pow(std::int64_t b, std::int64_t k) {
    if (k < 0) throw InputError("negative exponent in corpus expression");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(r, b, &r)) throw InputError("overflow in corpus expression");
    }
    return r;
}

std::int64_t eval_node(const Expr::Node& nd, const Env& env) {
    switch (nd.kind) {
        case 'n':
            return nd.value;
        case 'v': {
            auto it = env.find(nd.name);
            if (it == env.end()) throw InputError("unbound variable '" + nd.name + "'");
            return it->second;
        }
        case '~':
            return -eval_node(*nd.l, env);
        case '+':
            return eval_node(*nd.l, env) + eval_node(*nd.r, env);
        case '-':
            return eval_node(*nd.l, env) - eval_node(*nd.r, env);
        case '*':
            return eval_node(*nd.l, env) * eval_node(*nd.r, env);
        case '^':
            return checked_pow(eval_node(*nd.l, env), eval_node(*nd.r, env));
    }
    throw std::logic_error("bad expression node");
}

}  // namespace

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    Expr whole() {
        Expr e;
        e.root_ = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        e.text_ = trim(s_);
        return e;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse expression '" + s_ + "': " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    static NodeP make(char k, NodeP l, NodeP r) {
        auto n = std::make_shared<Expr::Node>();
        n->kind = k;
        n->l = std::move(l);
        n->r = std::move(r);
        return n;
    }

    NodeP expr() {
        NodeP l = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++i_;
            l = make(c, l, term());
        }
        return l;
    }
    NodeP term() {
        NodeP l = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++i_;
                l = make('*', l, unary());
            } else if ((l->kind == 'n' && std::isalpha(static_cast<unsigned char>(c))) ||
                       ((l->kind == 'n' || l->kind == 'v') && c == '(')) {
                l = make('*', l, power());  // 2p, 3(a+1), p(b+1)
            } else {
                return l;
            }
        }
    }
    NodeP unary() {
        if (peek() == '-') {
            ++i_;
            return make('~', unary(), nullptr);
        }
        return power();
    }
    NodeP power() {
        NodeP b = primary();
        if (peek() == '^') {
            ++i_;
            return make('^', b, unary());
        }
        return b;
    }
    NodeP primary() {
        const char c = peek();
        if (c == '(') {
            ++i_;
            NodeP e = expr();
            if (peek() != ')') fail("missing ')'");
            ++i_;
            return e;
        }
        auto n = std::make_shared<Expr::Node>();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            n->kind = 'n';
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                if (__builtin_mul_overflow(n->value, 10, &n->value)) fail("literal too large");
                n->value += s_[i_++] - '0';
            }
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            n->kind = 'v';
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                n->name += s_[i_++];
            return n;
        }
        fail(c ? std::string("unexpected '") + c + "'" : "unexpected end");
    }
};

Expr Expr::parse(const std::string& text) { return ExprParser(text).whole(); }

std::int64_t Expr::eval(const Env& env) const {
    if (!root_) throw InputError("empty expression");
    return eval_node(*root_, env);
}

Condition Condition::parse(const std::string& text) {
    Condition c;
    c.text_ = trim(text);
    if (c.text_.empty()) return c;
    static const char* ops[] = {"<=", ">=", "!=", "==", "<", ">", "="};
    for (const auto& part : split_top(text, ',')) {
        std::size_t at = std::string::npos;
        std::string op;
        for (const char* o : ops) {
            const auto k = part.find(o);
            if (k != std::string::npos) {
                at = k;
                op = o;
                break;
            }
        }
        if (at == std::string::npos) throw InputError("no comparison in '" + part + "'");
        c.atoms_.push_back({Expr::parse(part.substr(0, at)), Expr::parse(part.substr(at + op.size())), op == "==" ? "=" : op});
    }
    return c;
}

bool Condition::holds(const Env& env) const {
    for (const auto& a : atoms_) {
        const auto l = a.lhs.eval(env), r = a.rhs.eval(env);
        bool ok = false;
        if (a.op == "=") ok = l == r;
        else if (a.op == "!=") ok = l != r;
        else if (a.op == "<") ok = l < r;
        else if (a.op == "<=") ok = l <= r;
        else if (a.op == ">") ok = l > r;
        else ok = l >= r;
        if (!ok) return false;
    }
    return true;
}

std::vector<std::vector<Expr>> parse_tuples(const std::string& text) {
    std::vector<std::vector<Expr>> out;
    for (const auto& item : split_top(text, ',')) {
        if (item.size() < 2 || item.front() != '(' || item.back() != ')')
            throw InputError("expected a parenthesised tuple, got '" + item + "'");
        std::vector<Expr> tup;
        for (const auto& e : split_top(item.substr(1, item.size() - 2), ',')) tup.push_back(Expr::parse(e));
        out.push_back(std::move(tup));
    }
    return out;
}

// ---------------------------------------------------------------- file format

namespace {

std::vector<std::vector<std::string>> records(std::istream& in, std::vector<int>& lines) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string f;
        while (std::getline(ss, f, '|')) fields.push_back(trim(f));
        out.push_back(std::move(fields));
        lines.push_back(no);
    }
    return out;
}

Perm parse_cycle(const std::string& s, int n) {
    Perm w = identity_perm(n);
    const auto t = trim(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw InputError("bad cycle '" + s + "'");
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::vector<int> cyc;
    int x;
    while (ss >> x) {
        if (x < 1 || x > n) throw InputError("cycle entry out of range in '" + s + "'");
        cyc.push_back(x - 1);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) w[cyc[k]] = cyc[(k + 1) % cyc.size()];
    return w;
}

std::string at_line(int line) { return "line " + std::to_string(line); }

}  // namespace

IrregularTables parse_irregular_tables(std::istream& in) {
    IrregularTables t;
    std::vector<int> lines;
    const auto recs = records(in, lines);
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const auto& r = recs[k];
        const int line = lines[k];
        if (r[0] == "shape" && r.size() == 4) {
            t.shapes.push_back({r[1], parse_cycle(r[2], 3), Condition::parse(r[3]), "", line});
        } else if (r[0] == "dual" && r.size() == 3) {
            t.shapes.push_back({r[1], {}, Condition{}, r[2], line});
        } else if (r[0] == "row" && r.size() == 4) {
            t.rows.push_back({r[1], Condition::parse(r[2]), parse_tuples(r[3]), line});
        } else {
            throw InputError("malformed table record at " + at_line(line));
        }
    }
    for (const auto& s : t.shapes)
        if (!s.dual_of.empty() &&
            std::none_of(t.shapes.begin(), t.shapes.end(), [&](const ShapeRecord& o) { return o.tag == s.dual_of && o.dual_of.empty(); }))
            throw InputError("dual shape " + s.tag + " refers to unknown shape " + s.dual_of);
    return t;
}

std::string weight_str(const SerreWeight& a) {
    std::string s = "F(";
    for (std::size_t j = 0; j < a.rows.size(); ++j) {
        if (j) s += "; ";
        for (std::size_t i = 0; i < a.rows[j].size(); ++i) s += (i ? "," : "") + std::to_string(a.rows[j][i]);
    }
    return s + ")";
}

namespace {

std::string type_str(const TameType& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.pieces.size(); ++i)
        s += (i ? ", " : "") + std::string("(") + std::to_string(t.pieces[i].niveau) + ", " + t.pieces[i].exponent.str() + ")";
    return s + "]";
}

WeightSet minus(const WeightSet& a, const WeightSet& b) {
    WeightSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

WeightSet irregular(const WeightSet& w) {
    WeightSet out;
    for (const auto& a : w)
        if (!is_regular(a)) out.insert(a);
    return out;
}

void compare_sets(const WeightSet& want, const WeightSet& got, const std::string& where, CorpusReport& rep) {
    for (const auto& a : minus(want, got)) rep.mismatches.push_back({where, "missing " + weight_str(a)});
    for (const auto& a : minus(got, want)) rep.mismatches.push_back({where, "unexpected " + weight_str(a)});
}

}  // namespace

CorpusReport verify_irregular_tables(int p, const IrregularTables& tables) {
    if (p < 3 || !is_prime(p)) throw InputError("the irregular tables need an odd prime");
    const Context ctx{p, 1, 1, 3};
    CorpusReport rep;
    std::set<TameType> covered;

    auto expected = [&](const std::string& tag, const Env& env, const std::string& where) {
        WeightSet out;
        for (const auto& row : tables.rows) {
            if (row.tag != tag || !row.condition.holds(env)) continue;
            for (const auto& mu : row.mu) {
                if (mu.size() != 3) throw InputError("table row at " + at_line(row.line) + " needs triples");
                Matrix m{{mu[0].eval(env) - 2, mu[1].eval(env) - 1, mu[2].eval(env)}};
                if (!is_restricted(m, ctx)) {
                    rep.mismatches.push_back({where, "row at " + at_line(row.line) + " gives a non-restricted weight"});
                    continue;
                }
                out.insert(canonicalize(m, ctx));
            }
        }
        return out;
    };

    for (const auto& shape : tables.shapes) {
        const bool is_dual = !shape.dual_of.empty();
        const ShapeRecord& src =
            is_dual ? *std::find_if(tables.shapes.begin(), tables.shapes.end(),
                                    [&](const ShapeRecord& o) { return o.tag == shape.dual_of && o.dual_of.empty(); })
                    : shape;
        // a - c <= p and a >= b >= c cover every shape; c is only defined mod p - 1
        for (std::int64_t c = 0; c <= p - 2; ++c)
            for (std::int64_t b = c; b <= c + p; ++b)
                for (std::int64_t a = b; a <= c + p; ++a) {
                    const Env env{{"a", a}, {"b", b}, {"c", c}, {"p", p}};
                    if (!src.constraints.holds(env)) continue;
                    const std::string where = shape.tag + " (a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                              std::to_string(c) + ")";
                    TameType t = tau_from_pair({src.w}, {{a, b, c}}, ctx);
                    WeightSet want = expected(src.tag, env, where);
                    if (is_dual) {
                        t = dual(t);
                        want = dual_set(want);
                    }
                    covered.insert(t);
                    compare_sets(want, irregular(w_expl(t)), where, rep);
                    ++rep.checked;
                }
    }
    for (const auto& t : enumerate_types(ctx))
        if (!covered.count(t)) rep.mismatches.push_back({"type " + type_str(t), "not reached by any shape"});
    return rep;
}

std::string corpus_dir() {
    if (const char* env = std::getenv("SW_CORPUS")) return env;
    return SW_CORPUS_DIR_PATH;
}

namespace {

std::ifstream open_corpus(const std::string& name) {
    std::ifstream in(corpus_dir() + "/" + name);
    if (!in) throw InputError("cannot open corpus file " + corpus_dir() + "/" + name);
    return in;
}

}  // namespace

CorpusReport verify_irregular_tables(int p) {
    auto in = open_corpus("gl3_irregular.txt");
    return verify_irregular_tables(p, parse_irregular_tables(in));
}

// ---------------------------------------------------------------- fixtures

namespace {

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& x : split_top(s, ',')) out.push_back(std::stoi(x));
    return out;
}

struct VarItem {
    std::string name;  // empty for a condition
    Expr lo, hi;
    Condition cond;
};

std::vector<VarItem> parse_vars(const std::string& s) {
    std::vector<VarItem> out;
    if (trim(s) == "-" || trim(s).empty()) return out;
    for (const auto& item : split_top(s, ';')) {
        if (item.rfind("if ", 0) == 0) {
            out.push_back({"", {}, {}, Condition::parse(item.substr(3))});
            continue;
        }
        const auto in = item.find(" in ");
        const auto dots = item.find("..");
        if (in == std::string::npos || dots == std::string::npos) throw InputError("bad variable item '" + item + "'");
        out.push_back({trim(item.substr(0, in)), Expr::parse(item.substr(in + 4, dots - in - 4)), Expr::parse(item.substr(dots + 2)), {}});
    }
    return out;
}

void for_each_binding(const std::vector<VarItem>& items, Env env, const std::function<void(const Env&)>& fn,
                      std::size_t k = 0) {
    if (k == items.size()) return fn(env);
    const auto& it = items[k];
    if (it.name.empty()) {
        if (it.cond.holds(env)) for_each_binding(items, env, fn, k + 1);
        return;
    }
    const auto lo = it.lo.eval(env), hi = it.hi.eval(env);
    for (auto v = lo; v <= hi; ++v) {
        env[it.name] = v;
        for_each_binding(items, env, fn, k + 1);
    }
}

// F(x, y, z) or F(x, y; u, v) with one row per residue embedding.
SerreWeight eval_weight(const std::string& s, const Env& env, const Context& ctx) {
    const auto t = trim(s);
    if (t.size() < 3 || t.rfind("F(", 0) != 0 || t.back() != ')') throw InputError("bad weight '" + s + "'");
    Matrix m;
    for (const auto& row : split_top(t.substr(2, t.size() - 3), ';')) {
        Row r;
        for (const auto& e : split_top(row, ',')) r.push_back(Expr::parse(e).eval(env));
        m.push_back(std::move(r));
    }
    return canonicalize(m, ctx);
}

WeightSet eval_set(const std::string& s, const Env& env, const Context& ctx) {
    const auto t = trim(s);
    if (t == "all") {
        const auto all = enumerate_all(ctx);
        return {all.begin(), all.end()};
    }
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw InputError("bad weight set '" + s + "'");
    WeightSet out;
    const auto body = trim(t.substr(1, t.size() - 2));
    if (body.empty()) return out;
    for (const auto& w : split_top(body, ',')) out.insert(eval_weight(w, env, ctx));
    return out;
}

std::vector<TameType> eval_types(const std::string& s, const Env& env, const Context& ctx) {
    const auto t = trim(s);
    if (t == "all" || t == "reducible" || t == "irreducible") {
        std::vector<TameType> out;
        for (auto& x : enumerate_types(ctx)) {
            const bool red = x.pieces.size() > 1;
            if (t == "all" || (t == "reducible") == red) out.push_back(std::move(x));
        }
        return out;
    }
    std::vector<std::pair<int, BigInt>> raw;
    for (const auto& part : split_top(t, '&')) {
        const auto open = part.find('(');
        if (open == std::string::npos || part.back() != ')') throw InputError("bad type '" + part + "'");
        const auto head = trim(part.substr(0, open));
        const auto body = part.substr(open + 1, part.size() - open - 2);
        if (head == "chars") {
            for (const auto& e : split_top(body, ',')) raw.emplace_back(1, BigInt(Expr::parse(e).eval(env)));
        } else if (head == "piece") {
            const auto colon = body.find(':');
            if (colon == std::string::npos) throw InputError("piece needs 'd: digits'");
            const int d = static_cast<int>(Expr::parse(body.substr(0, colon)).eval(env));
            const auto digits = split_top(body.substr(colon + 1), ',');
            if (static_cast<int>(digits.size()) != d * ctx.f) throw InputError("piece needs d*f digits");
            BigInt N = 0;
            for (auto it = digits.rbegin(); it != digits.rend(); ++it) N = N * ctx.p + Expr::parse(*it).eval(env);
            raw.emplace_back(d, N);
        } else {
            throw InputError("unknown type constructor '" + head + "'");
        }
    }
    TameType out = make_type(ctx, raw);
    if (out.ctx.n != ctx.n) throw InputError("type dimension does not match n");
    return {out};
}

WeightSet named_set(const std::string& name, const TameType& t) {
    const Context& c = t.ctx;
    if (name == "obv") return w_obv(t);
    if (name == "expl") return w_expl(t);
    if (name == "wq") return w_q_gl3(t);
    if (name == "closure") return closure_C(w_obv(t), c);
    if (name == "obscure") return minus(w_expl(t), closure_C(w_obv(t), c));
    if (name == "shadow") return minus(closure_C(w_obv(t), c), w_obv(t));
    throw InputError("unknown predictor '" + name + "'");
}

bool apply_op(const std::string& op, const WeightSet& lhs, const WeightSet& rhs) {
    if (op == "==") return lhs == rhs;
    if (op == "has") return std::includes(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
    if (op == "lacks")
        return std::none_of(rhs.begin(), rhs.end(), [&](const SerreWeight& a) { return lhs.count(a) > 0; });
    throw InputError("unknown set relation '" + op + "'");
}

std::string env_str(const Env& env) {
    std::string s;
    for (const auto& [k, v] : env)
        if (k != "f" && k != "e" && k != "n") s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
}

}  // namespace

std::vector<Fixture> parse_fixtures(std::istream& in) {
    std::vector<Fixture> out;
    std::vector<int> lines;
    const auto recs = records(in, lines);
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const auto& r = recs[k];
        if (r[0] != "fixture" || r.size() != 6) throw InputError("malformed fixture at " + at_line(lines[k]));
        Fixture fx;
        fx.name = r[1];
        fx.line = lines[k];
        fx.fs = {1};
        fx.es = {1};
        std::stringstream ss(r[2]);
        std::string kv;
        while (ss >> kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw InputError("bad context item '" + kv + "' at " + at_line(lines[k]));
            const auto key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "p") fx.ps = int_list(val);
            else if (key == "f") fx.fs = int_list(val);
            else if (key == "e") fx.es = int_list(val);
            else if (key == "n") fx.n = std::stoi(val);
            else throw InputError("unknown context key '" + key + "' at " + at_line(lines[k]));
        }
        if (fx.ps.empty()) throw InputError("fixture without primes at " + at_line(lines[k]));
        fx.vars = r[3];
        fx.type = r[4];
        fx.check = r[5];
        parse_vars(fx.vars);  // fail early on syntax errors
        out.push_back(std::move(fx));
    }
    return out;
}

CorpusReport verify_fixture(const Fixture& fx) {
    CorpusReport rep;
    const auto items = parse_vars(fx.vars);
    const auto check = trim(fx.check);
    for (int p : fx.ps)
        for (int f : fx.fs)
            for (int e : fx.es) {
                const Context ctx{p, f, e, fx.n};
                ctx.validate();
                const Env base{{"p", p}, {"f", f}, {"e", e}, {"n", fx.n}};
                for_each_binding(items, base, [&](const Env& env) {
                    const std::string where = fx.name + " (" + at_line(fx.line) + ") " + env_str(env);
                    const bool typeless = trim(fx.type) == "-";
                    if (typeless && check.rfind("closure_of ", 0) != 0)
                        throw InputError("fixture at " + at_line(fx.line) + " needs a type");
                    const auto types = typeless ? std::vector<TameType>{TameType{ctx, {}}} : eval_types(fx.type, env, ctx);
                    for (const auto& t : types) {
                        ++rep.checked;
                        bool ok = true;
                        if (check.rfind("shift-closed ", 0) == 0) {
                            ok = is_shift_closed(named_set(trim(check.substr(13)), t)).closed();
                        } else if (check.rfind("closure_of ", 0) == 0) {
                            const auto close = check.find('}');
                            if (close == std::string::npos) throw InputError("closure_of needs a set");
                            const auto seed = eval_set(check.substr(11, close - 10), env, ctx);
                            std::stringstream rest(check.substr(close + 1));
                            std::string op, rhs;
                            rest >> op;
                            std::getline(rest, rhs);
                            ok = apply_op(op, closure_C(seed, ctx), eval_set(rhs, env, ctx));
                        } else {
                            std::stringstream ss(check);
                            std::string lhs, op, rhs;
                            ss >> lhs >> op;
                            std::getline(ss, rhs);
                            rhs = trim(rhs);
                            const bool named = rhs == "obv" || rhs == "expl" || rhs == "wq" || rhs == "closure";
                            ok = apply_op(op, named_set(lhs, t), named ? named_set(rhs, t) : eval_set(rhs, env, ctx));
                        }
                        if (!ok) rep.mismatches.push_back({typeless ? where : where + " type " + type_str(t), "fails: " + check});
                    }
                });
            }
    return rep;
}

CorpusReport verify_examples(const std::vector<Fixture>& fixtures) {
    CorpusReport rep;
    for (const auto& fx : fixtures) {
        auto r = verify_fixture(fx);
        rep.checked += r.checked;
        rep.mismatches.insert(rep.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    }
    return rep;
}

CorpusReport verify_examples() {
    auto in = open_corpus("examples.txt");
    return verify_examples(parse_fixtures(in));
}

}  // namespace sw
