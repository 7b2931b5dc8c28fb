#include "arckit/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arckit/errors.hpp"

namespace arckit {

namespace {

struct Tok {
    enum Kind { End, Int, Ident, Sym } kind = End;
    std::string text;
    int line = 1, col = 1;
};

struct Lexer {
    std::string s;
    size_t i = 0;
    int line, col;

    Lexer(std::string src, int line0, int col0) : s(std::move(src)), line(line0), col(col0) {}

    void advance() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }

    Tok next() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) advance();
        Tok t;
        t.line = line;
        t.col = col;
        if (i >= s.size()) return t;
        char c = s[i];
        if (std::isdigit((unsigned char)c)) {
            t.kind = Tok::Int;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                t.text += s[i];
                advance();
            }
            return t;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            t.kind = Tok::Ident;
            while (i < s.size() &&
                   (std::isalnum((unsigned char)s[i]) || s[i] == '_')) {
                t.text += s[i];
                advance();
            }
            return t;
        }
        if (std::strchr("+-*^()/", c)) {
            t.kind = Tok::Sym;
            t.text = std::string(1, c);
            advance();
            return t;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }
};

struct PolyParser {
    Lexer lx;
    Tok cur;
    RingPtr ring;

    PolyParser(std::string src, RingPtr r, int line0, int col0)
        : lx(std::move(src), line0, col0), ring(std::move(r)) {
        cur = lx.next();
    }

    void bump() { cur = lx.next(); }
    bool is_sym(const char* s) const { return cur.kind == Tok::Sym && cur.text == s; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, cur.line, cur.col);
    }

    Poly expr() {
        Poly acc = term();
        while (is_sym("+") || is_sym("-")) {
            bool sub = cur.text == "-";
            bump();
            Poly t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (is_sym("*")) {
            bump();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        if (is_sym("-")) {
            bump();
            return -factor();
        }
        Poly p = primary();
        if (is_sym("^")) {
            bump();
            if (cur.kind != Tok::Int) fail("exponent must be a nonnegative integer");
            long e = 0;
            try {
                e = std::stol(cur.text);
            } catch (const std::exception&) {
                e = -1;
            }
            if (e < 0 || e > 100000) fail("exponent out of range");
            bump();
            p = p.pow((int)e);
        }
        return p;
    }

    Poly primary() {
        const Field& F = ring->field();
        if (cur.kind == Tok::Int) {
            FieldElem num = fe_parse(F, cur.text);
            bump();
            if (is_sym("/")) {
                bump();
                if (cur.kind != Tok::Int) fail("denominator must be an integer");
                FieldElem den = fe_parse(F, cur.text);
                if (fe_is_zero(F, den)) fail("division by zero");
                bump();
                return Poly::constant(ring, fe_div(F, num, den));
            }
            return Poly::constant(ring, num);
        }
        if (cur.kind == Tok::Ident) {
            int idx = ring->var_index(cur.text);
            if (idx < 0) fail("unknown variable " + cur.text);
            bump();
            return Poly::var(ring, idx);
        }
        if (is_sym("(")) {
            bump();
            Poly e = expr();
            if (!is_sym(")")) fail("expected ')'");
            bump();
            return e;
        }
        fail("expected a number, variable, or '('");
    }
};

// One noncomment, nonblank document line with its 1-based position.
struct Line {
    int no = 0;
    std::string text;
};

std::vector<Line> doc_lines(const std::string& text) {
    std::vector<Line> out;
    int no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line =
            nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace((unsigned char)line.back())) line.pop_back();
        size_t start = 0;
        while (start < line.size() && std::isspace((unsigned char)line[start])) ++start;
        if (start < line.size()) out.push_back(Line{no, line});
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return out;
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

int parse_int_word(const std::string& w, const Line& ln, const std::string& what) {
    try {
        size_t used = 0;
        long v = std::stol(w, &used);
        if (used != w.size()) throw std::invalid_argument(w);
        if (v < -1000000000L || v > 1000000000L) throw std::out_of_range(w);
        return (int)v;
    } catch (const std::exception&) {
        throw parse_error("bad " + what + " '" + w + "'", ln.no, 1);
    }
}

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_') return false;
    return true;
}

// "field Q" or "field F <p>" following Field::str().
Field parse_field_words(const std::vector<std::string>& w, const Line& ln) {
    if (w.size() == 2 && w[1] == "Q") return Field::rationals();
    if (w.size() == 3 && w[1] == "F") {
        int p = parse_int_word(w[2], ln, "field characteristic");
        if (p < 2) throw parse_error("field characteristic must be >= 2", ln.no, 1);
        return Field::prime((unsigned long)p);
    }
    throw parse_error("bad field line (want 'field Q' or 'field F <p>')", ln.no, 1);
}

// Poly text after the first ':' of a line, with its column offset.
std::pair<std::string, int> after_colon(const Line& ln) {
    size_t c = ln.text.find(':');
    if (c == std::string::npos)
        throw parse_error("expected ':' before the expression", ln.no, 1);
    return {ln.text.substr(c + 1), (int)c + 2};
}

// Regroup a polynomial over a ring whose first variable is t into an exact
// t-polynomial over the ring of the remaining variables.
TPoly split_t(const Poly& p, const RingPtr& target) {
    TPoly out(target);
    for (const auto& [m, c] : p.terms()) {
        int k = m.e[0];
        Mono rest = Mono::of(std::vector<int>(m.e.begin() + 1, m.e.end()));
        Poly cur = out.coeff(k);
        cur.add_term(rest, c);
        out.set_coeff(k, cur);
    }
    return out;
}

} // namespace

Poly parse_poly_at(const std::string& src, const RingPtr& ring, int line0, int col0) {
    PolyParser pp(src, ring, line0, col0);
    Poly p = pp.expr();
    if (pp.cur.kind != Tok::End)
        throw parse_error("unexpected trailing input", pp.cur.line, pp.cur.col);
    return p;
}

Poly parse_poly(const std::string& src, const RingPtr& ring) {
    return parse_poly_at(src, ring, 1, 1);
}

VarietyDoc parse_variety(const std::string& text) {
    auto lines = doc_lines(text);
    if (lines.empty()) throw parse_error("empty variety file");
    VarietyDoc doc;
    size_t li = 0;
    {
        auto w = split_words(lines[li].text);
        if (w.size() != 3 || w[0] != "ci")
            throw parse_error("first line must be 'ci <m> <n>'", lines[li].no, 1);
        doc.m = parse_int_word(w[1], lines[li], "ambient dimension");
        doc.n = parse_int_word(w[2], lines[li], "equation count");
        if (doc.m < 2 || doc.n < 1 || doc.n >= doc.m)
            throw parse_error("need m >= 2 and 1 <= n < m", lines[li].no, 1);
        ++li;
    }
    auto take = [&](const char* key) {
        if (li >= lines.size())
            throw parse_error(std::string("missing '") + key + "' line");
        auto w = split_words(lines[li].text);
        if (w.empty() || w[0] != key)
            throw parse_error(std::string("expected '") + key + "' line", lines[li].no, 1);
        ++li;
        return std::vector<std::string>(w.begin() + 1, w.end());
    };
    doc.vars = take("vars");
    if ((int)doc.vars.size() != doc.m)
        throw parse_error("vars line must list m names", lines[li - 1].no, 1);
    doc.dist = take("dist");
    if ((int)doc.dist.size() != doc.n)
        throw parse_error("dist line must list n names", lines[li - 1].no, 1);
    for (const auto& v : doc.vars)
        if (!is_ident(v)) throw parse_error("bad variable name " + v);
    for (const auto& y : doc.dist)
        if (std::find(doc.vars.begin(), doc.vars.end(), y) == doc.vars.end())
            throw parse_error("distinguished variable " + y + " not among vars");
    for (int k = 0; k < doc.n; ++k) {
        if (li >= lines.size()) throw parse_error("missing 'eq' line");
        const Line& ln = lines[li];
        if (ln.text.rfind("eq", 0) != 0 || ln.text.size() < 4 ||
            !std::isspace((unsigned char)ln.text[2]))
            throw parse_error("expected 'eq <poly>'", ln.no, 1);
        doc.eq_srcs.push_back(ln.text.substr(3));
        doc.eq_lines.push_back(ln.no);
        ++li;
    }
    if (li != lines.size())
        throw parse_error("unexpected trailing line", lines[li].no, 1);
    return doc;
}

std::string serialize_variety(const VarietyDoc& doc) {
    std::ostringstream os;
    os << "ci " << doc.m << " " << doc.n << "\n";
    os << "vars";
    for (const auto& v : doc.vars) os << " " << v;
    os << "\ndist";
    for (const auto& y : doc.dist) os << " " << y;
    os << "\n";
    for (const auto& e : doc.eq_srcs) os << "eq " << e << "\n";
    return os.str();
}

SpecialCI realize_variety(const VarietyDoc& doc, const Field& F) {
    RingPtr ring = PolyRing::make(F, doc.vars);
    std::vector<Poly> eqs;
    for (size_t i = 0; i < doc.eq_srcs.size(); ++i) {
        int ln = i < doc.eq_lines.size() ? doc.eq_lines[i] : 1;
        eqs.push_back(parse_poly_at(doc.eq_srcs[i], ring, ln, 4));
    }
    return make_special_ci(ring, doc.dist, eqs);
}

const TPoly* SeriesDoc::find(const std::string& name) const {
    for (const auto& [n, v] : entries)
        if (n == name) return &v;
    return nullptr;
}

const TPoly& SeriesDoc::get(const std::string& name) const {
    const TPoly* p = find(name);
    if (!p) throw context_error("document has no entry named " + name);
    return *p;
}

Tps SeriesDoc::get_tps(const std::string& name, int N) const {
    const TPoly& p = get(name);
    if (p.degree() >= N)
        throw parameter_error("entry " + name + " has degree " +
                              std::to_string(p.degree()) + ", too high for truncation " +
                              std::to_string(N));
    return p.to_tps(N);
}

SeriesDoc parse_series(const std::string& text, const std::string& kind) {
    auto lines = doc_lines(text);
    if (lines.empty()) throw parse_error("empty document");
    if (lines[0].text != kind)
        throw parse_error("first line must be '" + kind + "'", lines[0].no, 1);
    SeriesDoc doc;
    bool have_field = false;
    size_t li = 1;
    for (; li < lines.size(); ++li) {
        const Line& ln = lines[li];
        if (ln.text.find(':') != std::string::npos || ln.text == "end") break;
        auto w = split_words(ln.text);
        if (w[0] == "field") {
            doc.field = parse_field_words(w, ln);
            have_field = true;
        } else if (w[0] == "params") {
            for (size_t k = 1; k < w.size(); ++k) {
                if (!is_ident(w[k]) || w[k] == "t")
                    throw parse_error("bad parameter name " + w[k], ln.no, 1);
                doc.spec.params.push_back(w[k]);
            }
        } else if (w[0] == "nilpotent") {
            if (w.size() != 2) throw parse_error("bad nilpotent line", ln.no, 1);
            doc.spec.M = parse_int_word(w[1], ln, "nilpotency bound");
            if (doc.spec.M < 1) throw parse_error("nilpotency bound must be >= 1", ln.no, 1);
        } else if (w[0] == "truncation") {
            if (w.size() != 2) throw parse_error("bad truncation line", ln.no, 1);
            doc.truncation = parse_int_word(w[1], ln, "truncation");
        } else if (w[0] == "d") {
            if (w.size() != 2) throw parse_error("bad d line", ln.no, 1);
            doc.d = parse_int_word(w[1], ln, "d");
        } else {
            throw parse_error("unknown header '" + w[0] + "'", ln.no, 1);
        }
    }
    if (!have_field) throw parse_error("missing field line");
    doc.ring = param_ring(doc.field, doc.spec);
    RingPtr ring_t = PolyRing::make(doc.field, {"t"}, doc.spec);
    std::set<std::string> seen;
    for (; li < lines.size(); ++li) {
        const Line& ln = lines[li];
        if (ln.text == "end") {
            if (li + 1 != lines.size())
                throw parse_error("unexpected line after end", lines[li + 1].no, 1);
            return doc;
        }
        size_t c = ln.text.find(':');
        if (c == std::string::npos)
            throw parse_error("expected '<name> : <poly>' or 'end'", ln.no, 1);
        auto namew = split_words(ln.text.substr(0, c));
        if (namew.size() != 1 || !is_ident(namew[0]))
            throw parse_error("bad entry name", ln.no, 1);
        if (!seen.insert(namew[0]).second)
            throw parse_error("duplicate entry " + namew[0], ln.no, 1);
        Poly p = parse_poly_at(ln.text.substr(c + 1), ring_t, ln.no, (int)c + 2);
        doc.entries.emplace_back(namew[0], split_t(p, doc.ring));
    }
    throw parse_error("missing end line");
}

std::string serialize_series(const SeriesDoc& doc, const std::string& kind) {
    std::ostringstream os;
    os << kind << "\n";
    os << "field " << doc.field.str() << "\n";
    if (!doc.spec.params.empty()) {
        os << "params";
        for (const auto& p : doc.spec.params) os << " " << p;
        os << "\nnilpotent " << doc.spec.M << "\n";
    }
    if (doc.truncation >= 0) os << "truncation " << doc.truncation << "\n";
    if (doc.d >= 0) os << "d " << doc.d << "\n";
    for (const auto& [name, val] : doc.entries) os << name << " : " << val.str() << "\n";
    os << "end\n";
    return os.str();
}

std::string serialize_presentation(const SchemePresentation& P) {
    P.validate();
    std::ostringstream os;
    os << "presentation\n";
    os << "field " << P.ring->field().str() << "\n";
    if (P.ring->n_params() > 0) os << "nilpotent " << P.ring->nilpotency() << "\n";
    for (int i = 0; i < P.ring->nvars(); ++i) {
        const PresVar& v = P.vars[(size_t)i];
        os << "var " << v.name;
        if (!v.coord.empty()) os << " coord=" << v.coord;
        if (v.t_exp >= 0) os << " t=" << v.t_exp;
        os << " role=" << (v.role.empty() ? "plain" : v.role);
        if (v.free_tail) os << " tail";
        if (P.ring->is_param(i)) os << " param";
        os << "\n";
    }
    for (const auto& t : P.tails) os << "tail " << t.coord << " from=" << t.from_level << "\n";
    for (const auto& g : P.inverted) os << "inv : " << g.str() << "\n";
    for (const auto& e : P.eqs)
        os << "eq " << e.tag << " r=" << e.row << " k=" << e.level << " : " << e.p.str()
           << "\n";
    os << "end\n";
    return os.str();
}

SchemePresentation parse_presentation(const std::string& text) {
    auto lines = doc_lines(text);
    if (lines.empty() || lines[0].text != "presentation")
        throw parse_error("first line must be 'presentation'");
    SchemePresentation P;
    bool have_field = false;
    Field F = Field::rationals();
    int M = 1;
    std::vector<PresVar> vars;
    std::vector<bool> is_param;
    bool ring_built = false;
    bool ended = false;

    auto build_ring = [&](const Line& ln) {
        if (ring_built) return;
        if (!have_field) throw parse_error("missing field line", ln.no, 1);
        std::vector<std::string> nonparam;
        TestRingSpec spec;
        spec.M = M;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (is_param[i]) {
                spec.params.push_back(vars[i].name);
            } else {
                if (!spec.params.empty())
                    throw parse_error("parameter variables must come last", ln.no, 1);
                nonparam.push_back(vars[i].name);
            }
        }
        P.ring = PolyRing::make(F, nonparam, spec);
        P.vars = vars;
        ring_built = true;
    };

    for (size_t li = 1; li < lines.size(); ++li) {
        const Line& ln = lines[li];
        auto w = split_words(ln.text);
        const std::string& key = w[0];
        if (key == "field") {
            if (ring_built) throw parse_error("field line after variables are fixed", ln.no, 1);
            F = parse_field_words(w, ln);
            have_field = true;
        } else if (key == "nilpotent") {
            if (ring_built)
                throw parse_error("nilpotent line after variables are fixed", ln.no, 1);
            if (w.size() != 2) throw parse_error("bad nilpotent line", ln.no, 1);
            M = parse_int_word(w[1], ln, "nilpotency bound");
            if (M < 1) throw parse_error("nilpotency bound must be >= 1", ln.no, 1);
        } else if (key == "var") {
            if (ring_built)
                throw parse_error("variable lines must precede equations", ln.no, 1);
            if (w.size() < 2 || !is_ident(w[1]))
                throw parse_error("bad variable line", ln.no, 1);
            PresVar v;
            v.name = w[1];
            v.role = "plain";
            bool param = false;
            for (size_t k = 2; k < w.size(); ++k) {
                const std::string& a = w[k];
                if (a == "tail") {
                    v.free_tail = true;
                } else if (a == "param") {
                    param = true;
                } else if (a.rfind("coord=", 0) == 0) {
                    v.coord = a.substr(6);
                } else if (a.rfind("t=", 0) == 0) {
                    v.t_exp = parse_int_word(a.substr(2), ln, "t-exponent");
                } else if (a.rfind("role=", 0) == 0) {
                    v.role = a.substr(5);
                    if (!is_ident(v.role)) throw parse_error("bad role", ln.no, 1);
                } else {
                    throw parse_error("unknown variable attribute '" + a + "'", ln.no, 1);
                }
            }
            vars.push_back(std::move(v));
            is_param.push_back(param);
        } else if (key == "tail") {
            if (w.size() != 3 || w[2].rfind("from=", 0) != 0)
                throw parse_error("bad tail line (want 'tail <coord> from=<level>')", ln.no, 1);
            build_ring(ln);
            P.tails.push_back(TailMark{w[1], parse_int_word(w[2].substr(5), ln, "tail level")});
        } else if (key == "inv") {
            build_ring(ln);
            auto [src, col0] = after_colon(ln);
            P.inverted.push_back(parse_poly_at(src, P.ring, ln.no, col0));
        } else if (key == "eq") {
            build_ring(ln);
            size_t c = ln.text.find(':');
            if (c == std::string::npos)
                throw parse_error("expected ':' in equation line", ln.no, 1);
            auto head = split_words(ln.text.substr(0, c));
            if (head.size() != 4 || head[2].rfind("r=", 0) != 0 || head[3].rfind("k=", 0) != 0)
                throw parse_error("bad equation line (want 'eq <tag> r=<i> k=<j> : <poly>')",
                                  ln.no, 1);
            PresEq e;
            e.tag = head[1];
            e.row = parse_int_word(head[2].substr(2), ln, "equation row");
            e.level = parse_int_word(head[3].substr(2), ln, "equation level");
            e.p = parse_poly_at(ln.text.substr(c + 1), P.ring, ln.no, (int)c + 2);
            P.eqs.push_back(std::move(e));
        } else if (key == "end") {
            if (li + 1 != lines.size())
                throw parse_error("unexpected line after end", lines[li + 1].no, 1);
            build_ring(ln);
            ended = true;
        } else {
            throw parse_error("unknown line '" + key + "'", ln.no, 1);
        }
    }
    if (!ended) throw parse_error("missing end line");
    P.validate();
    return P;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace arckit
