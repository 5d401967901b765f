#include "hh/relations.hpp"

#include "hh/formulas.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef HH_DEFAULT_DATA_DIR
#define HH_DEFAULT_DATA_DIR "data"
#endif

namespace hh {

namespace {

struct Token {
    enum Kind { Num, Ident, Sym, End } kind;
    std::string text;
    long value = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        const char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t e = k;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            out.push_back({Token::Num, s.substr(k, e - k), std::stol(s.substr(k, e - k))});
            k = e;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t e = k;
            while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
            out.push_back({Token::Ident, s.substr(k, e - k)});
            k = e;
        } else {
            static const char* two[] = {"..", "!=", "==", "<=", ">=", "!|"};
            bool done = false;
            for (const char* t : two)
                if (s.compare(k, 2, t) == 0) {
                    out.push_back({Token::Sym, t});
                    k += 2;
                    done = true;
                    break;
                }
            if (done) continue;
            if (std::string("[](),+-*/^=|<>:").find(c) == std::string::npos)
                throw BadRelation(std::string("unexpected character '") + c + "'");
            out.push_back({Token::Sym, std::string(1, c)});
            ++k;
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

Poly scalar(long v) {
    Poly p;
    if (v != 0) p[{}] = v;
    return p;
}

void add_into(Poly& a, const Poly& b, long sign) {
    for (const auto& [w, c] : b) {
        long& x = a[w];
        x += sign * c;
        if (x == 0) a.erase(w);
    }
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [u, c] : a)
        for (const auto& [v, d] : b) {
            std::vector<Atom> w = u;
            w.insert(w.end(), v.begin(), v.end());
            long& x = out[w];
            x += c * d;
            if (x == 0) out.erase(w);
        }
    return out;
}

bool is_scalar(const Poly& p) { return p.empty() || (p.size() == 1 && p.begin()->first.empty()); }
long scalar_value(const Poly& p) {
    if (!is_scalar(p)) throw BadRelation("expected an integer expression");
    return p.empty() ? 0 : p.begin()->second;
}

bool is_cocycle_family(const std::string& s) {
    static const char* f[] = {"chi", "pi", "phi", "psi", "F", "E", "theta", "omega"};
    for (const char* x : f)
        if (s == x) return true;
    return false;
}

class Parser {
public:
    Parser(std::vector<Token> t, const FixtureParams& P, const std::map<std::string, long>& env)
        : t_(std::move(t)), P_(P), env_(env) {}

    const Token& peek(std::size_t ahead = 0) const { return t_[std::min(k_ + ahead, t_.size() - 1)]; }
    bool at(const std::string& sym) const { return peek().kind == Token::Sym && peek().text == sym; }
    bool at_end() const { return peek().kind == Token::End; }
    void expect(const std::string& sym) {
        if (!at(sym)) throw BadRelation("expected '" + sym + "' near '" + peek().text + "'");
        ++k_;
    }
    std::string ident() {
        if (peek().kind != Token::Ident) throw BadRelation("expected a name near '" + peek().text + "'");
        return t_[k_++].text;
    }

    Poly expr() {
        Poly acc;
        long sign = 1;
        if (at("-")) {
            ++k_;
            sign = -1;
        } else if (at("+")) {
            ++k_;
        }
        add_into(acc, term(), sign);
        while (at("+") || at("-")) {
            sign = at("+") ? 1 : -1;
            ++k_;
            add_into(acc, term(), sign);
        }
        return acc;
    }

    long integer() { return scalar_value(expr()); }

    // comparison or characteristic predicate
    bool condition() {
        if (peek().kind == Token::Ident && peek().text == "char") {
            ++k_;
            const unsigned c = P_.characteristic;
            if (at("|") || at("!|")) {
                const bool neg = at("!|");
                ++k_;
                const long v = integer();
                const bool d = (c == 0) ? v == 0 : v % static_cast<long>(c) == 0;
                return neg ? !d : d;
            }
            if (at("=") || at("==")) {
                ++k_;
                return static_cast<long>(c) == integer();
            }
            if (at("!=")) {
                ++k_;
                return static_cast<long>(c) != integer();
            }
            throw BadRelation("bad characteristic condition");
        }
        const long a = integer();
        const std::string op = peek().text;
        ++k_;
        const long b = integer();
        if (op == "=" || op == "==") return a == b;
        if (op == "!=") return a != b;
        if (op == "<") return a < b;
        if (op == "<=") return a <= b;
        if (op == ">") return a > b;
        if (op == ">=") return a >= b;
        throw BadRelation("unknown comparison '" + op + "'");
    }

    std::size_t position() const { return k_; }

private:
    Poly term() {
        Poly acc = power();
        while (at("*") || at("/")) {
            const bool div = at("/");
            ++k_;
            Poly rhs = power();
            if (div) {
                const long a = scalar_value(acc), b = scalar_value(rhs);
                if (b == 0 || a % b != 0) throw BadRelation("inexact division");
                acc = scalar(a / b);
            } else {
                acc = mul(acc, rhs);
            }
        }
        return acc;
    }

    Poly power() {
        Poly base = primary();
        if (!at("^")) return base;
        ++k_;
        const long e = scalar_value(primary());
        if (e < 0) throw BadRelation("negative exponent");
        if (is_scalar(base)) {
            const long b = scalar_value(base);
            long r = 1;
            for (long k = 0; k < e; ++k) r *= b;
            return scalar(r);
        }
        Poly r = scalar(1);
        for (long k = 0; k < e; ++k) r = mul(r, base);
        return r;
    }

    Poly primary() {
        const Token& tok = peek();
        if (tok.kind == Token::Num) {
            ++k_;
            return scalar(tok.value);
        }
        if (at("(")) {
            ++k_;
            Poly p = expr();
            expect(")");
            return p;
        }
        if (at("-")) {
            ++k_;
            Poly p = primary();
            Poly z;
            add_into(z, p, -1);
            return z;
        }
        if (tok.kind != Token::Ident) throw BadRelation("unexpected '" + tok.text + "'");
        const std::string name = ident();
        if (at("[")) return atom(name);
        if (name == "atop" || name == "btop") {
            Atom a;
            a.is_cocycle = false;
            a.centre = name == "atop" ? CentreName::ATop : CentreName::BTop;
            return Poly{{{a}, 1}};
        }
        if (name == "m") return scalar(P_.m);
        if (name == "N") return scalar(P_.N);
        if (name == "S") return scalar(static_cast<long>(P_.N) * (P_.N + 1) / 2);
        if (auto it = env_.find(name); it != env_.end()) return scalar(it->second);
        throw BadRelation("unknown name '" + name + "'");
    }

    Poly atom(const std::string& name) {
        expect("[");
        std::vector<std::string> args;
        while (true) {
            if ((at("+") || at("-")) && (peek(1).text == "," || peek(1).text == "]")) {
                args.push_back(peek().text);
                ++k_;
            } else {
                if (peek().kind == Token::Ident && peek(1).text == "=") k_ += 2;  // "j=" label
                args.push_back(std::to_string(integer()));
            }
            if (at("]")) break;
            expect(",");
        }
        expect("]");
        Atom a;
        if (name == "eps" || name == "f") {
            if (args.size() != 1) throw BadRelation(name + " takes one index");
            a.is_cocycle = false;
            a.centre = name == "eps" ? CentreName::Eps : CentreName::F;
            const long i = std::stol(args[0]);
            a.index = static_cast<int>(((i % P_.m) + P_.m) % P_.m);
            return Poly{{{a}, 1}};
        }
        if (!is_cocycle_family(name)) throw BadRelation("unknown family '" + name + "'");
        std::string text = name + "[";
        for (std::size_t k = 0; k < args.size(); ++k) text += (k ? "," : "") + args[k];
        text += "]";
        try {
            a.id = parse_cocycle_id(text, P_.m);
        } catch (const BadCocycleName& e) {
            throw BadRelation(e.what());
        }
        return Poly{{{a}, 1}};
    }

    std::vector<Token> t_;
    std::size_t k_ = 0;
    const FixtureParams& P_;
    const std::map<std::string, long>& env_;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct Clause {
    bool loop;
    std::string var;
    std::vector<Token> lo, hi, cond;
};

std::vector<Token> slice(const std::vector<Token>& t, std::size_t a, std::size_t b) {
    std::vector<Token> out(t.begin() + a, t.begin() + b);
    out.push_back({Token::End, ""});
    return out;
}

}  // namespace

std::string to_string(const Atom& a, int m) {
    if (a.is_cocycle) return to_string(a.id, m);
    switch (a.centre) {
        case CentreName::Eps: return "eps[" + std::to_string(a.index) + "]";
        case CentreName::F: return "f[" + std::to_string(a.index) + "]";
        case CentreName::ATop: return "atop";
        case CentreName::BTop: return "btop";
    }
    return "?";
}

std::string to_string(const Poly& p, int m) {
    if (p.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : p) {
        long a = c;
        if (!first) s += a < 0 ? " - " : " + ";
        else if (a < 0) s += "-";
        if (a < 0) a = -a;
        first = false;
        if (w.empty()) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a) + "*";
        for (std::size_t k = 0; k < w.size();) {
            std::size_t e = k;
            while (e < w.size() && w[e] == w[k]) ++e;
            s += (k ? "*" : "") + to_string(w[k], m);
            if (e - k > 1) s += "^" + std::to_string(e - k);
            k = e;
        }
    }
    return s;
}

RelationExpr parse_relation(const std::string& text, const FixtureParams& P) {
    auto lines = parse_fixture_line(text, P);
    if (lines.size() != 1 || lines[0].relations.size() != 1) throw BadRelation("expected a single relation");
    return lines[0].relations[0];
}

std::vector<FixtureLine> parse_fixture_line(const std::string& raw, const FixtureParams& P) {
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) return {};
    std::string kind = "rel";
    for (const char* k : {"gen", "quotient", "qrel", "rel"}) {
        const std::size_t n = std::string(k).size();
        if (line.compare(0, n, k) == 0 && (line.size() == n || line[n] == ' ' || line[n] == ':')) {
            kind = k;
            line = trim(line.substr(n));
            break;
        }
    }
    std::string clauses, body = line;
    if (auto c = line.find(':'); c != std::string::npos) {
        clauses = line.substr(0, c);
        body = line.substr(c + 1);
    }
    body = trim(body);

    // split the clause part into for/if pieces
    std::vector<Clause> cl;
    {
        auto t = tokenize(clauses);
        std::size_t k = 0;
        while (t[k].kind != Token::End) {
            if (t[k].kind != Token::Ident || (t[k].text != "for" && t[k].text != "if"))
                throw BadRelation("expected 'for' or 'if' in '" + clauses + "'");
            std::size_t e = k + 1;
            while (t[e].kind != Token::End && !(t[e].kind == Token::Ident && (t[e].text == "for" || t[e].text == "if")))
                ++e;
            Clause c;
            c.loop = t[k].text == "for";
            if (c.loop) {
                if (e < k + 5 || t[k + 1].kind != Token::Ident || t[k + 2].text != "in")
                    throw BadRelation("malformed loop clause");
                c.var = t[k + 1].text;
                std::size_t dots = k + 3;
                while (dots < e && t[dots].text != "..") ++dots;
                if (dots == e) throw BadRelation("loop range needs '..'");
                c.lo = slice(t, k + 3, dots);
                c.hi = slice(t, dots + 1, e);
            } else {
                c.cond = slice(t, k + 1, e);
            }
            cl.push_back(std::move(c));
            k = e;
        }
    }
    auto body_tokens = tokenize(body);

    FixtureLine out;
    out.kind = kind;
    std::map<std::string, long> env;
    auto instantiate = [&](auto&& self, std::size_t c) -> void {
        if (c == cl.size()) {
            Parser p(body_tokens, P, env);
            std::string label = body;
            if (!env.empty()) {
                label += "  [";
                bool first = true;
                for (const auto& [k, v] : env) {
                    label += (first ? "" : ", ") + k + "=" + std::to_string(v);
                    first = false;
                }
                label += "]";
            }
            if (kind == "gen" || kind == "quotient") {
                while (true) {
                    Poly x = p.expr();
                    if (!(is_scalar(x) && scalar_value(x) == 1)) {
                        if (x.size() != 1 || x.begin()->second != 1 || x.begin()->first.size() != 1)
                            throw BadRelation("generator lists take single atoms: " + body);
                        out.atoms.push_back(x.begin()->first[0]);
                    }
                    if (p.at_end()) break;
                    p.expect(",");
                }
                return;
            }
            RelationExpr r;
            r.text = label;
            r.sides.push_back(p.expr());
            while (p.at("=")) {
                p.expect("=");
                r.sides.push_back(p.expr());
            }
            if (!p.at_end()) throw BadRelation("trailing input in '" + body + "'");
            if (r.sides.size() < 2) throw BadRelation("relation needs '=': " + body);
            out.relations.push_back(std::move(r));
            return;
        }
        const Clause& k = cl[c];
        if (!k.loop) {
            Parser p(k.cond, P, env);
            if (p.condition()) self(self, c + 1);
            return;
        }
        const long lo = Parser(k.lo, P, env).integer();
        const long hi = Parser(k.hi, P, env).integer();
        for (long v = lo; v <= hi; ++v) {
            env[k.var] = v;
            self(self, c + 1);
        }
        env.erase(k.var);
    };
    instantiate(instantiate, 0);
    return {out};
}

std::string data_dir() {
    if (const char* e = std::getenv("HH_DATA")) return e;
    return HH_DEFAULT_DATA_DIR;
}

std::string presentation_file(const Algebra& A) {
    const int m = A.m(), N = A.N();
    const unsigned c = A.field().characteristic();
    std::string name;
    if (m == 1) {
        if (N == 1) throw NoClosedForm("no generator fixture for m = 1, N = 1");
        name = c == 2 ? "m1_char2" : "m1";
    } else if (m == 2) {
        name = N == 1 ? "m2_N1" : "m2";
    } else if (m % 2 == 0) {
        name = N == 1 ? "m_even_N1" : "m_even";
    } else if (c == 2) {
        name = N == 1 ? "m_odd_char2_N1" : "m_odd_char2";
    } else {
        name = N == 1 ? "m_odd_N1" : "m_odd";
    }
    return data_dir() + "/presentations/" + name + ".txt";
}

namespace {
std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadRelation("cannot open fixture file " + path);
    std::vector<std::string> out;
    std::string s;
    while (std::getline(in, s)) out.push_back(s);
    return out;
}
}  // namespace

Presentation load_presentation(const std::string& path, const FixtureParams& P) {
    Presentation out;
    out.source = path;
    for (const auto& s : read_lines(path))
        for (auto& l : parse_fixture_line(s, P)) {
            if (l.kind == "gen") out.generators.insert(out.generators.end(), l.atoms.begin(), l.atoms.end());
            if (l.kind == "quotient")
                out.quotient_generators.insert(out.quotient_generators.end(), l.atoms.begin(), l.atoms.end());
            if (l.kind == "qrel")
                out.quotient_relations.insert(out.quotient_relations.end(), l.relations.begin(), l.relations.end());
            if (l.kind == "rel") out.relations.insert(out.relations.end(), l.relations.begin(), l.relations.end());
        }
    return out;
}

std::vector<RelationExpr> load_relations(const std::string& path, const FixtureParams& P) {
    std::vector<RelationExpr> out;
    for (const auto& s : read_lines(path))
        for (auto& l : parse_fixture_line(s, P))
            out.insert(out.end(), l.relations.begin(), l.relations.end());
    return out;
}

Evaluator::Evaluator(const HomComplex& H) : H_(&H), P_(H) {}

AlgebraElement Evaluator::centre_value(const Atom& a) const {
    const Algebra& A = H_->algebra();
    const int N = A.N();
    switch (a.centre) {
        case CentreName::Eps: return A.element(A.socle(a.index));
        case CentreName::F: {
            AlgebraElement z = A.element(A.pow_ab(a.index, 1));
            z += A.element(A.pow_ba(a.index + 1, 1));
            return z;
        }
        case CentreName::ATop:
        case CentreName::BTop:
            if (A.m() != 1) throw BadRelation("atop/btop exist only for m = 1");
            return A.element(a.centre == CentreName::ATop ? A.a_head(0, N - 1) : A.b_head(0, N - 1));
    }
    return {};
}

const Cochain& Evaluator::cocycle(const NamedCocycleId& id) {
    auto it = cocycles_.find(id);
    if (it == cocycles_.end()) it = cocycles_.emplace(id, named_cocycle(*H_, id)).first;
    return it->second;
}

const Lifting& Evaluator::lifting(const NamedCocycleId& id, int q) {
    auto it = liftings_.find(id);
    if (it == liftings_.end()) it = liftings_.emplace(id, P_.lift(cocycle(id), q)).first;
    if (it->second.computed() < q) P_.extend(it->second, q);
    return it->second;
}

Cochain Evaluator::unit() const {
    const Algebra& A = H_->algebra();
    Cochain u = H_->zero(0);
    for (int i = 0; i < A.m(); ++i) u.values[H_->resolution().pos(0, i, 0)] = A.element(A.idem(i));
    return u;
}

Cochain Evaluator::times(const Cochain& x, const Atom& a) {
    if (!a.is_cocycle) return P_.scalar_action(centre_value(a), x);
    return P_.cup(x, lifting(a.id, x.n));
}

Cochain Evaluator::word(const std::vector<Atom>& w) {
    Cochain x = unit();
    for (const Atom& a : w) x = times(x, a);
    return x;
}

std::optional<Cochain> Evaluator::evaluate(const Poly& p) {
    std::optional<Cochain> out;
    for (const auto& [w, c] : p) {
        Cochain x = word(w).scaled(H_->algebra().field().from_int(c));
        if (!out)
            out = std::move(x);
        else if (out->n != x.n)
            throw DegreeMismatch("inhomogeneous expression");
        else
            *out += x;
    }
    return out;
}

}  // namespace hh
