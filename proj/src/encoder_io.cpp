#include "segrec/encoder.hpp"

#include "json.hpp"

#include <cctype>
#include <sstream>

namespace segrec {

namespace {

bool simple_symbol(const std::string& s) {
    static const std::string extra = "~!@$%^&*_-+=<>.?/";
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && extra.find(c) == std::string::npos) return false;
    return true;
}

std::string symbol(const std::string& s) { return simple_symbol(s) ? s : "|" + s + "|"; }

std::string integer(const mpz_class& c) { return c < 0 ? "(- " + mpz_class(-c).get_str() + ")" : c.get_str(); }

std::string term(const Monomial& m, const mpz_class& c, const PolySystem& sys) {
    std::vector<std::string> factors;
    for (const auto& [v, e] : m)
        for (int i = 0; i < e; ++i) factors.push_back(symbol(sys.variables.at(v)));
    if (factors.empty()) return integer(c);
    if (c != 1) factors.insert(factors.begin(), integer(c));
    if (factors.size() == 1) return factors[0];
    std::string out = "(*";
    for (const auto& f : factors) out += " " + f;
    return out + ")";
}

std::string poly_text(const Polynomial& p, const PolySystem& sys) {
    if (p.terms().empty()) return "0";
    std::vector<std::string> ts;
    for (const auto& [m, c] : p.terms()) ts.push_back(term(m, c, sys));
    if (ts.size() == 1) return ts[0];
    std::string out = "(+";
    for (const auto& t : ts) out += " " + t;
    return out + ")";
}

std::string formula_text(const Formula& f, const PolySystem& sys) {
    switch (f.op) {
        case Formula::Op::Atom: {
            static const char* ops[] = {"=", ">", ">=", "distinct"};
            return std::string("(") + ops[static_cast<int>(f.rel)] + " " + poly_text(f.poly, sys) + " 0)";
        }
        case Formula::Op::Not:
            return "(not " + formula_text(f.args.at(0), sys) + ")";
        case Formula::Op::And:
        case Formula::Op::Or: {
            std::string out = f.op == Formula::Op::And ? "(and" : "(or";
            for (const auto& g : f.args) out += " " + formula_text(g, sys);
            return out + ")";
        }
    }
    return "";
}

std::string constraint_text(const Constraint& c, const PolySystem& sys) {
    std::string body = formula_text(c.formula, sys);
    return c.tag.empty() ? body : "(! " + body + " :named " + symbol(c.tag) + ")";
}

// ---- s-expression reader ----

struct Sexp {
    std::string atom;  // empty for lists
    bool quoted = false;
    std::vector<Sexp> list;
    std::size_t at = 0;
    [[nodiscard]] bool is_list() const { return atom.empty() && !quoted; }
};

class Reader {
public:
    explicit Reader(const std::string& t) : text_(t) {}

    std::vector<Sexp> all() {
        std::vector<Sexp> out;
        while (skip(), pos_ < text_.size()) out.push_back(read());
        return out;
    }

private:
    void skip() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            else if (text_[pos_] == ';') while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            else break;
        }
    }

    Sexp read() {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", "byte " + std::to_string(pos_));
        Sexp s;
        s.at = pos_;
        char c = text_[pos_];
        if (c == ')') throw ParseError("unbalanced ')'", "byte " + std::to_string(pos_));
        if (c == '(') {
            ++pos_;
            for (;;) {
                skip();
                if (pos_ >= text_.size()) throw ParseError("unclosed '('", "byte " + std::to_string(s.at));
                if (text_[pos_] == ')') break;
                s.list.push_back(read());
            }
            ++pos_;
            return s;
        }
        if (c == '|') {
            auto end = text_.find('|', pos_ + 1);
            if (end == std::string::npos) throw ParseError("unterminated quoted symbol", "byte " + std::to_string(pos_));
            s.atom = text_.substr(pos_ + 1, end - pos_ - 1);
            s.quoted = true;
            pos_ = end + 1;
            return s;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != ')' && text_[pos_] != ';')
            ++pos_;
        s.atom = text_.substr(start, pos_ - start);
        return s;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail(const std::string& msg, const Sexp& s) { throw ParseError(msg, "byte " + std::to_string(s.at)); }

bool is_head(const Sexp& s, const char* head) {
    return s.is_list() && !s.list.empty() && !s.list[0].quoted && s.list[0].atom == head;
}

class Interpreter {
public:
    explicit Interpreter(PolySystem& sys) : sys_(sys) {}

    Polynomial poly(const Sexp& s) {
        if (!s.is_list()) {
            if (!s.quoted && std::isdigit(static_cast<unsigned char>(s.atom[0]))) {
                mpz_class v;
                if (v.set_str(s.atom, 10) != 0) fail("bad numeral '" + s.atom + "'", s);
                return Polynomial::constant(v);
            }
            int i = sys_.index_of(s.atom);
            if (i < 0) fail("undeclared variable '" + s.atom + "'", s);
            return Polynomial::variable(i);
        }
        if (s.list.size() < 2 || s.list[0].is_list()) fail("bad term", s);
        const std::string& op = s.list[0].atom;
        Polynomial out = poly(s.list[1]);
        if (op == "-" && s.list.size() == 2) return -out;
        for (std::size_t i = 2; i < s.list.size(); ++i) {
            Polynomial p = poly(s.list[i]);
            if (op == "+") out += p;
            else if (op == "-") out -= p;
            else if (op == "*") out = out * p;
            else fail("unknown operator '" + op + "'", s);
        }
        if (s.list.size() == 2 && op != "+" && op != "*") fail("unknown operator '" + op + "'", s);
        return out;
    }

    Formula formula(const Sexp& s) {
        if (!s.is_list() || s.list.empty() || s.list[0].is_list()) fail("expected a formula", s);
        const std::string& op = s.list[0].atom;
        if (op == "and" || op == "or") {
            std::vector<Formula> args;
            for (std::size_t i = 1; i < s.list.size(); ++i) args.push_back(formula(s.list[i]));
            return op == "and" ? Formula::all(std::move(args)) : Formula::any(std::move(args));
        }
        if (op == "not") {
            if (s.list.size() != 2) fail("'not' takes one argument", s);
            return Formula::negate(formula(s.list[1]));
        }
        if (s.list.size() != 3) fail("relation '" + op + "' takes two arguments", s);
        Polynomial a = poly(s.list[1]), b = poly(s.list[2]);
        if (op == "=") return Formula::atom(a - b, Relation::Zero);
        if (op == "distinct") return Formula::atom(a - b, Relation::NonZero);
        if (op == ">") return Formula::atom(a - b, Relation::Positive);
        if (op == ">=") return Formula::atom(a - b, Relation::NonNegative);
        if (op == "<") return Formula::atom(b - a, Relation::Positive);
        if (op == "<=") return Formula::atom(b - a, Relation::NonNegative);
        fail("unknown relation '" + op + "'", s);
    }

    Constraint constraint(const Sexp& s) {
        if (!is_head(s, "!")) return {"", formula(s)};
        if (s.list.size() != 4 || s.list[2].atom != ":named") fail("expected (! formula :named name)", s);
        return {s.list[3].atom, formula(s.list[1])};
    }

private:
    PolySystem& sys_;
};

}  // namespace

std::string emit_smtlib(const PolySystem& sys) {
    std::ostringstream out;
    out << "(set-logic QF_NRA)\n";
    for (const auto& v : sys.variables) out << "(declare-fun " << symbol(v) << " () Real)\n";
    const auto& cs = sys.constraints;
    if (cs.size() == 1 && !(cs[0].tag.empty() && cs[0].formula.op == Formula::Op::And)) {
        out << "(assert " << constraint_text(cs[0], sys) << ")\n";
    } else if (!cs.empty()) {
        out << "(assert (and";
        for (const auto& c : cs) out << "\n  " << constraint_text(c, sys);
        out << "))\n";
    }
    out << "(check-sat)\n(get-model)\n";
    return out.str();
}

PolySystem parse_smtlib(const std::string& text) {
    PolySystem sys;
    Interpreter in(sys);
    for (const auto& cmd : Reader(text).all()) {
        if (!cmd.is_list() || cmd.list.empty() || cmd.list[0].is_list()) fail("expected a command", cmd);
        const std::string& head = cmd.list[0].atom;
        if (head == "set-logic" || head == "check-sat" || head == "get-model" || head == "exit") continue;
        if (head == "declare-fun" || head == "declare-const") {
            const bool fun = head == "declare-fun";
            if (cmd.list.size() != (fun ? 4u : 3u) || cmd.list.back().atom != "Real" ||
                (fun && !(cmd.list[2].is_list() && cmd.list[2].list.empty())))
                fail("only real constants can be declared", cmd);
            if (sys.index_of(cmd.list[1].atom) >= 0) fail("variable declared twice", cmd);
            sys.variables.push_back(cmd.list[1].atom);
            continue;
        }
        if (head == "assert") {
            if (cmd.list.size() != 2) fail("assert takes one formula", cmd);
            const Sexp& body = cmd.list[1];
            if (is_head(body, "and"))
                for (std::size_t i = 1; i < body.list.size(); ++i) sys.constraints.push_back(in.constraint(body.list[i]));
            else
                sys.constraints.push_back(in.constraint(body));
            continue;
        }
        fail("unsupported command '" + head + "'", cmd);
    }
    return sys;
}

// ---- JSON ----

namespace {

using nlohmann::json;

const char* kRelations[] = {"=0", ">0", ">=0", "!=0"};
const char* kOps[] = {"atom", "and", "or", "not"};

json poly_json(const Polynomial& p, const PolySystem& sys) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (const auto& [v, e] : m) mono.push_back(json::array({sys.variables.at(v), e}));
        terms.push_back({{"coef", c.get_str()}, {"monomial", mono}});
    }
    return terms;
}

json formula_json(const Formula& f, const PolySystem& sys) {
    json j{{"op", kOps[static_cast<int>(f.op)]}};
    if (f.op == Formula::Op::Atom) {
        j["rel"] = kRelations[static_cast<int>(f.rel)];
        j["poly"] = poly_json(f.poly, sys);
    } else {
        j["args"] = json::array();
        for (const auto& g : f.args) j["args"].push_back(formula_json(g, sys));
    }
    return j;
}

class JsonReader {
public:
    explicit JsonReader(PolySystem& sys) : sys_(sys) {}

    static const json& field(const json& j, const char* key, const std::string& path) {
        if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", path);
        return j.at(key);
    }

    static std::string string(const json& j, const std::string& path) {
        if (!j.is_string()) throw ParseError("expected a string", path);
        return j.get<std::string>();
    }

    Polynomial poly(const json& j, const std::string& path) {
        if (!j.is_array()) throw ParseError("expected an array of terms", path);
        Polynomial p;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string tp = path + "/" + std::to_string(i);
            mpz_class c;
            if (c.set_str(string(field(j[i], "coef", tp), tp + "/coef"), 10) != 0)
                throw ParseError("bad integer coefficient", tp + "/coef");
            const json& mono = field(j[i], "monomial", tp);
            if (!mono.is_array()) throw ParseError("expected an array", tp + "/monomial");
            Polynomial t = Polynomial::constant(c);
            for (std::size_t f = 0; f < mono.size(); ++f) {
                const std::string fp = tp + "/monomial/" + std::to_string(f);
                const json& pr = mono[f];
                if (!pr.is_array() || pr.size() != 2 || !pr[1].is_number_integer() || pr[1].get<int>() < 1)
                    throw ParseError("expected [variable, positive exponent]", fp);
                int v = sys_.index_of(string(pr[0], fp + "/0"));
                if (v < 0) throw ParseError("undeclared variable", fp + "/0");
                for (int e = pr[1].get<int>(); e > 0; --e) t = t * Polynomial::variable(v);
            }
            p += t;
        }
        return p;
    }

    Formula formula(const json& j, const std::string& path) {
        const std::string op = string(field(j, "op", path), path + "/op");
        if (op == "atom") {
            const std::string rel = string(field(j, "rel", path), path + "/rel");
            for (int r = 0; r < 4; ++r)
                if (rel == kRelations[r]) return Formula::atom(poly(field(j, "poly", path), path + "/poly"),
                                                               static_cast<Relation>(r));
            throw ParseError("unknown relation '" + rel + "'", path + "/rel");
        }
        const json& args = field(j, "args", path);
        if (!args.is_array()) throw ParseError("expected an array", path + "/args");
        std::vector<Formula> fs;
        for (std::size_t i = 0; i < args.size(); ++i)
            fs.push_back(formula(args[i], path + "/args/" + std::to_string(i)));
        if (op == "and") return Formula::all(std::move(fs));
        if (op == "or") return Formula::any(std::move(fs));
        if (op == "not") {
            if (fs.size() != 1) throw ParseError("'not' takes one argument", path + "/args");
            return Formula::negate(std::move(fs[0]));
        }
        throw ParseError("unknown op '" + op + "'", path + "/op");
    }

private:
    PolySystem& sys_;
};

}  // namespace

std::string emit_json(const PolySystem& sys) {
    json cs = json::array();
    for (const auto& c : sys.constraints) cs.push_back({{"tag", c.tag}, {"formula", formula_json(c.formula, sys)}});
    json j{{"variables", sys.variables}, {"constraints", cs}};
    return j.dump(1) + "\n";
}

PolySystem parse_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), "byte " + std::to_string(e.byte));
    }
    PolySystem sys;
    const json& vars = JsonReader::field(j, "variables", "");
    if (!vars.is_array()) throw ParseError("expected an array", "/variables");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        std::string v = JsonReader::string(vars[i], "/variables/" + std::to_string(i));
        if (sys.index_of(v) >= 0) throw ParseError("variable declared twice", "/variables/" + std::to_string(i));
        sys.variables.push_back(v);
    }
    JsonReader r(sys);
    const json& cs = JsonReader::field(j, "constraints", "");
    if (!cs.is_array()) throw ParseError("expected an array", "/constraints");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string p = "/constraints/" + std::to_string(i);
        sys.constraints.push_back({JsonReader::string(JsonReader::field(cs[i], "tag", p), p + "/tag"),
                                   r.formula(JsonReader::field(cs[i], "formula", p), p + "/formula")});
    }
    return sys;
}

}  // namespace segrec
