#include "matgerm/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mg {

namespace {

struct Token {
    enum class Type { Num, Ident, Op, End } type;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& text, int line_offset) : s_(text), line_(line_offset) {}

    Token next() {
        skip_ws();
        if (pos_ >= s_.size()) return {Token::Type::End, "", line_, col_};
        char c = s_[pos_];
        int line = line_, col = col_;
        if (std::isdigit((unsigned char)c)) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) num += get();
            return {Token::Type::Num, num, line, col};
        }
        if (std::isalpha((unsigned char)c)) {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
                id += get();
            return {Token::Type::Ident, id, line, col};
        }
        if (std::string("+-*^()/,").find(c) != std::string::npos) {
            get();
            return {Token::Type::Op, std::string(1, c), line, col};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    char get() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) get();
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_, col_ = 1;
};

// Recursive descent over a generic value type: Poly for entries, long for
// catalog formulas. Ops must provide constants, variables, arithmetic.
template <typename V, typename Ops>
class ExprParser {
public:
    ExprParser(const std::string& text, Ops ops, int line_offset)
        : lex_(text, line_offset), ops_(std::move(ops)) {
        advance();
    }

    V parse_all() {
        V v = expr();
        expect_end();
        return v;
    }

private:
    void advance() { tok_ = lex_.next(); }
    bool is_op(const char* t) const {
        return tok_.type == Token::Type::Op && tok_.text == t;
    }
    void expect_end() {
        if (tok_.type != Token::Type::End)
            throw parse_error("unexpected trailing input '" + tok_.text + "'", tok_.line,
                              tok_.col);
    }

    V expr() {
        bool neg = false;
        while (is_op("+") || is_op("-")) {
            if (is_op("-")) neg = !neg;
            advance();
        }
        V v = term();
        if (neg) v = ops_.negate(v);
        while (is_op("+") || is_op("-")) {
            bool minus = is_op("-");
            advance();
            V t = term();
            v = minus ? ops_.sub(v, t) : ops_.add(v, t);
        }
        return v;
    }

    V term() {
        V v = factor();
        while (is_op("*")) {
            advance();
            v = ops_.mul(v, factor());
        }
        return v;
    }

    V factor() {
        if (is_op("-")) {
            advance();
            return ops_.negate(factor());
        }
        V v = base();
        while (is_op("^")) {
            advance();
            long e = exponent();
            v = ops_.pow(v, e, tok_.line, tok_.col);
        }
        return v;
    }

    long exponent() {
        if (tok_.type == Token::Type::Num) {
            long e = std::stol(tok_.text);
            advance();
            return e;
        }
        if (tok_.type == Token::Type::Ident) {
            long e = ops_.param_value(tok_.text, tok_.line, tok_.col);
            advance();
            return e;
        }
        if (is_op("(")) {
            advance();
            long e = ops_.int_subexpr(*this);
            if (!is_op(")")) throw parse_error("expected ')'", tok_.line, tok_.col);
            advance();
            return e;
        }
        throw parse_error("exponent must be a non-negative integer", tok_.line, tok_.col);
    }

    V base() {
        if (tok_.type == Token::Type::Num) {
            std::string num = tok_.text;
            int line = tok_.line, col = tok_.col;
            advance();
            if (is_op("/")) {
                advance();
                if (tok_.type != Token::Type::Num)
                    throw parse_error("expected integer after '/'", tok_.line, tok_.col);
                std::string den = tok_.text;
                advance();
                return ops_.rational(num, den, line, col);
            }
            return ops_.rational(num, "1", line, col);
        }
        if (tok_.type == Token::Type::Ident) {
            std::string name = tok_.text;
            int line = tok_.line, col = tok_.col;
            advance();
            if (is_op("(")) { // function call (catalog formulas: min)
                advance();
                std::vector<V> args;
                if (!is_op(")")) {
                    args.push_back(expr());
                    while (is_op(",")) {
                        advance();
                        args.push_back(expr());
                    }
                }
                if (!is_op(")")) throw parse_error("expected ')'", tok_.line, tok_.col);
                advance();
                return ops_.call(name, args, line, col);
            }
            return ops_.ident(name, line, col);
        }
        if (is_op("(")) {
            advance();
            V v = expr();
            if (!is_op(")")) throw parse_error("expected ')'", tok_.line, tok_.col);
            advance();
            return v;
        }
        throw parse_error("expected a value, found '" + tok_.text + "'", tok_.line, tok_.col);
    }

    Lexer lex_;
    Token tok_;
    Ops ops_;

public:
    V subexpr_for_ops() { return expr(); }
};

struct PolyOps {
    const VarList* vars;
    const ParamEnv* params;

    Poly negate(const Poly& p) const { return -p; }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly mul(const Poly& a, const Poly& b) const { return a * b; }
    Poly pow(const Poly& p, long e, int line, int col) const {
        if (e < 0) throw parse_error("negative exponent", line, col);
        return p.pow((int)e);
    }
    Poly rational(const std::string& num, const std::string& den, int line, int col) const {
        Rat q;
        try {
            q = Rat(mpz_class(num), mpz_class(den));
        } catch (...) {
            throw parse_error("bad rational literal", line, col);
        }
        if (q.get_den() == 0) throw parse_error("zero denominator", line, col);
        q.canonicalize();
        return Poly::constant(*vars, q);
    }
    Poly ident(const std::string& name, int line, int col) const {
        for (size_t i = 0; i < vars->size(); ++i)
            if ((*vars)[i] == name) return Poly::variable(*vars, (int)i);
        if (params) {
            auto it = params->find(name);
            if (it != params->end()) return Poly::constant(*vars, Rat(it->second));
        }
        throw parse_error("unknown variable '" + name + "'", line, col);
    }
    Poly call(const std::string& name, const std::vector<Poly>&, int line, int col) const {
        throw parse_error("unknown function '" + name + "'", line, col);
    }
    long param_value(const std::string& name, int line, int col) const {
        if (params) {
            auto it = params->find(name);
            if (it != params->end()) return it->second;
        }
        throw parse_error("exponent parameter '" + name + "' is not defined", line, col);
    }
    long int_subexpr(ExprParser<Poly, PolyOps>& p) const {
        Poly v = p.subexpr_for_ops();
        if (v.terms().size() > 1 || (!v.is_zero() && v.min_total_degree() > 0))
            throw parse_error("exponent must be an integer expression", 0, 0);
        return v.is_zero() ? 0 : to_long(v.constant_term());
    }
};

struct IntOps {
    const ParamEnv* params;

    long negate(long v) const { return -v; }
    long add(long a, long b) const { return a + b; }
    long sub(long a, long b) const { return a - b; }
    long mul(long a, long b) const { return a * b; }
    long pow(long v, long e, int line, int col) const {
        if (e < 0) throw parse_error("negative exponent", line, col);
        long r = 1;
        for (long i = 0; i < e; ++i) r *= v;
        return r;
    }
    long rational(const std::string& num, const std::string& den, int line, int col) const {
        if (den != "1") throw parse_error("integer expected", line, col);
        return std::stol(num);
    }
    long ident(const std::string& name, int line, int col) const {
        auto it = params->find(name);
        if (it == params->end())
            throw parse_error("unknown parameter '" + name + "'", line, col);
        return it->second;
    }
    long call(const std::string& name, const std::vector<long>& args, int line, int col) const {
        if (name == "min" && args.size() == 2) return std::min(args[0], args[1]);
        if (name == "max" && args.size() == 2) return std::max(args[0], args[1]);
        throw parse_error("unknown function '" + name + "'", line, col);
    }
    long param_value(const std::string& name, int line, int col) const {
        return ident(name, line, col);
    }
    long int_subexpr(ExprParser<long, IntOps>& p) const { return p.subexpr_for_ops(); }
};

std::vector<std::string> split_ws_or_comma(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace((unsigned char)c) || c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct Line {
    std::string text;
    int number;
};

std::vector<Line> logical_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int num = 0;
    while (std::getline(in, line)) {
        ++num;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.push_back({line.substr(a, b - a + 1), num});
    }
    return out;
}

std::vector<Poly> parse_bracket_row(const std::string& text, int line_no, const VarList& vars,
                                    const ParamEnv* params) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw parse_error("matrix row must be bracketed", line_no, 1);
    std::string inner = text.substr(1, text.size() - 2);
    // split on commas at paren depth 0
    std::vector<std::string> cells;
    std::string cur;
    int depth = 0;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    std::vector<Poly> row;
    for (auto& cell : cells) row.push_back(parse_poly(cell, vars, params, line_no));
    return row;
}

} // namespace

Poly parse_poly(const std::string& text, const VarList& vars, const ParamEnv* params,
                int line_offset) {
    ExprParser<Poly, PolyOps> p(text, PolyOps{&vars, params}, line_offset);
    return p.parse_all();
}

long eval_int_expr(const std::string& text, const ParamEnv& params) {
    ExprParser<long, IntOps> p(text, IntOps{&params}, 1);
    return p.parse_all();
}

MatrixFamily parse_family(const std::string& text) {
    auto lines = logical_lines(text);
    std::optional<Kind> kind;
    std::optional<VarList> vars;
    PolyMatrix rows;
    bool in_matrix = false;
    for (auto& [line, no] : lines) {
        if (line.rfind("kind:", 0) == 0) {
            auto v = split_ws_or_comma(line.substr(5));
            if (v.size() != 1) throw parse_error("kind needs one value", no, 1);
            if (v[0] == "sq") kind = Kind::Sq;
            else if (v[0] == "sym") kind = Kind::Sym;
            else if (v[0] == "sk") kind = Kind::Sk;
            else throw parse_error("kind must be sq, sym or sk", no, 1);
        } else if (line.rfind("vars:", 0) == 0) {
            vars = split_ws_or_comma(line.substr(5));
        } else if (line.rfind("matrix:", 0) == 0) {
            in_matrix = true;
        } else if (in_matrix && line.front() == '[') {
            if (!vars) throw parse_error("vars: must precede matrix rows", no, 1);
            rows.push_back(parse_bracket_row(line, no, *vars, nullptr));
        } else {
            throw parse_error("unexpected line '" + line + "'", no, 1);
        }
    }
    if (!kind) throw parse_error("missing kind:", 1, 1);
    if (!vars) throw parse_error("missing vars:", 1, 1);
    if (rows.empty()) throw parse_error("missing matrix rows", 1, 1);
    size_t n = rows.size();
    for (auto& r : rows)
        if (r.size() != n) throw parse_error("matrix rows have inconsistent length", 1, 1);
    return MatrixFamily(*kind, std::move(rows), *vars);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

MatrixFamily parse_family_file(const std::string& path) {
    return parse_family(read_file(path));
}

std::string family_to_text(const MatrixFamily& m) {
    std::ostringstream out;
    out << "kind: " << kind_name(m.kind()) << "\n";
    out << "vars:";
    for (auto& v : m.vars()) out << " " << v;
    out << "\nmatrix:\n";
    for (int i = 0; i < m.size(); ++i) {
        out << "[";
        for (int j = 0; j < m.size(); ++j) out << (j ? ", " : "") << m.at(i, j).str();
        out << "]\n";
    }
    return out.str();
}

EquivalenceCertificate parse_certificate(const std::string& text) {
    auto lines = logical_lines(text);
    std::optional<VarList> vars;
    std::vector<std::pair<std::string, std::string>> phi_images;
    PolyMatrix a, b;
    int section = 0; // 1 phi, 2 A, 3 B
    for (auto& [line, no] : lines) {
        if (line.rfind("vars:", 0) == 0) {
            vars = split_ws_or_comma(line.substr(5));
        } else if (line == "phi:") {
            section = 1;
        } else if (line == "A:") {
            section = 2;
        } else if (line == "B:") {
            section = 3;
        } else if (section == 1) {
            auto arrow = line.find("->");
            if (arrow == std::string::npos)
                throw parse_error("phi lines look like 'x -> image'", no, 1);
            std::string lhs = line.substr(0, arrow);
            auto names = split_ws_or_comma(lhs);
            if (names.size() != 1) throw parse_error("phi line needs one source variable", no, 1);
            phi_images.emplace_back(names[0], line.substr(arrow + 2));
        } else if ((section == 2 || section == 3) && line.front() == '[') {
            if (!vars) throw parse_error("vars: must precede matrices", no, 1);
            auto row = parse_bracket_row(line, no, *vars, nullptr);
            (section == 2 ? a : b).push_back(std::move(row));
        } else {
            throw parse_error("unexpected line '" + line + "'", no, 1);
        }
    }
    if (!vars) throw parse_error("missing vars:", 1, 1);
    EquivalenceCertificate cert;
    if (phi_images.empty()) {
        cert.phi = PolyMap::identity(*vars);
    } else {
        std::vector<Poly> images(vars->size(), Poly(*vars));
        std::vector<bool> seen(vars->size(), false);
        for (auto& [name, expr] : phi_images) {
            auto it = std::find(vars->begin(), vars->end(), name);
            if (it == vars->end()) throw parse_error("phi maps unknown variable " + name, 1, 1);
            size_t idx = it - vars->begin();
            images[idx] = parse_poly(expr, *vars);
            seen[idx] = true;
        }
        for (size_t i = 0; i < vars->size(); ++i)
            if (!seen[i]) images[i] = Poly::variable(*vars, (int)i);
        cert.phi = PolyMap(*vars, std::move(images));
    }
    if (a.empty()) throw parse_error("certificate needs an A matrix", 1, 1);
    cert.a = std::move(a);
    if (!b.empty()) cert.b = std::move(b);
    return cert;
}

EquivalenceCertificate parse_certificate_file(const std::string& path) {
    return parse_certificate(read_file(path));
}

std::vector<std::vector<std::vector<Rat>>> parse_const_sk_list(const std::string& text) {
    auto lines = logical_lines(text);
    int size = -1;
    std::vector<std::vector<std::vector<Rat>>> mats;
    VarList novars;
    for (auto& [line, no] : lines) {
        if (line.rfind("size:", 0) == 0) {
            size = std::stoi(line.substr(5));
        } else if (line.rfind("matrix:", 0) == 0) {
            mats.emplace_back();
        } else if (!mats.empty() && line.front() == '[') {
            auto row = parse_bracket_row(line, no, novars, nullptr);
            std::vector<Rat> vals;
            for (auto& p : row) vals.push_back(p.constant_term());
            mats.back().push_back(std::move(vals));
        } else {
            throw parse_error("unexpected line '" + line + "'", no, 1);
        }
    }
    if (size < 0) throw parse_error("missing size:", 1, 1);
    for (auto& m : mats) {
        if ((int)m.size() != size) throw parse_error("matrix does not match size:", 1, 1);
        for (auto& r : m)
            if ((int)r.size() != size) throw parse_error("row does not match size:", 1, 1);
    }
    return mats;
}

} // namespace mg
