#include "qrep/catalog.hpp"

#include "qrep/errors.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace qrep {

std::string to_string(Group g)
{
    switch (g) {
    case Group::gamma0: return "gamma0";
    case Group::gamma1: return "gamma1";
    case Group::full: return "full";
    }
    return "?";
}

namespace {

// ---- tokenizer ----

enum class Tok { header, ident, string, number, punct, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : src_(s) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        bool statement_start = true;
        while (true) {
            skip_space();
            if (pos_ >= src_.size()) break;
            const char c = src_[pos_];
            if (c == '[' && statement_start) {
                out.push_back(header());
                continue;
            }
            if (c == '"') {
                out.push_back(string());
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
                out.push_back(number());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                out.push_back(ident());
            } else if (std::string_view("=[]{},:").find(c) != std::string_view::npos) {
                out.push_back({Tok::punct, std::string(1, c), line_});
                ++pos_;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            // A header may only start where a new key could start: after a
            // complete value, which is whenever brackets are balanced and the
            // last token is not '='.
            const auto& t = out.back();
            if (t.kind == Tok::punct) {
                if (t.text == "[" || t.text == "{") ++depth_;
                if (t.text == "]" || t.text == "}") --depth_;
            }
            statement_start = depth_ == 0 && !(t.kind == Tok::punct && (t.text == "=" || t.text == ",")) && t.kind != Tok::ident;
        }
        out.push_back({Tok::end, "", line_});
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ConfigError("config line " + std::to_string(line_) + ": " + msg); }

    void skip_space()
    {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    Token header()
    {
        const auto close = src_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated section header");
        std::string body(src_.substr(pos_ + 1, close - pos_ - 1));
        pos_ = close + 1;
        return {Tok::header, body, line_};
    }

    Token string()
    {
        const auto close = src_.find('"', pos_ + 1);
        if (close == std::string_view::npos || src_.substr(pos_, close - pos_).find('\n') != std::string_view::npos)
            fail("unterminated string");
        std::string body(src_.substr(pos_ + 1, close - pos_ - 1));
        pos_ = close + 1;
        return {Tok::string, body, line_};
    }

    Token number()
    {
        const auto start = pos_;
        ++pos_;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '/')) ++pos_;
        return {Tok::number, std::string(src_.substr(start, pos_ - start)), line_};
    }

    Token ident()
    {
        const auto start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
        return {Tok::ident, std::string(src_.substr(start, pos_ - start)), line_};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int depth_ = 0;
};

// ---- values ----

struct Value {
    enum Kind { string, number, array, map } kind;
    std::string text;
    std::vector<Value> items;
    std::vector<std::pair<Value, Value>> entries;
    int line = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::vector<CatalogEntry> run()
    {
        std::vector<CatalogEntry> out;
        std::set<std::string> seen;
        while (peek().kind != Tok::end) {
            const Token h = take();
            if (h.kind != Tok::header) fail(h, "expected a [function.NAME] header, got '" + h.text + "'");
            const std::string prefix = "function.";
            if (h.text.rfind(prefix, 0) != 0 || h.text.size() == prefix.size())
                fail(h, "section must be [function.NAME], got [" + h.text + "]");
            const std::string name = h.text.substr(prefix.size());
            for (char c : name)
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') fail(h, "invalid function name '" + name + "'");
            if (!seen.insert(name).second) fail(h, "duplicate function '" + name + "'");

            std::map<std::string, Value> keys;
            while (peek().kind == Tok::ident) {
                const Token k = take();
                expect("=");
                if (keys.count(k.text)) fail(k, "duplicate key '" + k.text + "' in function " + name);
                keys.emplace(k.text, value());
            }
            if (peek().kind != Tok::header && peek().kind != Tok::end) fail(peek(), "expected a key, got '" + peek().text + "'");
            out.push_back(build(name, h, keys));
        }
        return out;
    }

private:
    [[noreturn]] static void fail(const Token& t, const std::string& msg)
    {
        throw ConfigError("config line " + std::to_string(t.line) + ": " + msg);
    }
    [[noreturn]] static void fail(const Value& v, const std::string& msg)
    {
        throw ConfigError("config line " + std::to_string(v.line) + ": " + msg);
    }

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(const char* p)
    {
        const Token t = take();
        if (t.kind != Tok::punct || t.text != p) fail(t, std::string("expected '") + p + "', got '" + t.text + "'");
    }
    bool accept(const char* p)
    {
        if (peek().kind == Tok::punct && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value value()
    {
        const Token t = take();
        Value v{Value::string, t.text, {}, {}, t.line};
        if (t.kind == Tok::string) return v;
        if (t.kind == Tok::number) {
            v.kind = Value::number;
            return v;
        }
        if (t.kind == Tok::punct && t.text == "[") {
            v.kind = Value::array;
            if (accept("]")) return v;
            do v.items.push_back(value());
            while (accept(","));
            expect("]");
            return v;
        }
        if (t.kind == Tok::punct && t.text == "{") {
            v.kind = Value::map;
            if (accept("}")) return v;
            do {
                Value k = value();
                if (!accept(":")) expect("=");
                v.entries.emplace_back(std::move(k), value());
            } while (accept(","));
            expect("}");
            return v;
        }
        fail(t, "expected a value, got '" + t.text + "'");
    }

    static std::int64_t as_int(const Value& v, const std::string& what)
    {
        if (v.kind != Value::number || v.text.find('/') != std::string::npos) fail(v, what + " must be an integer");
        try {
            std::size_t used = 0;
            const auto x = std::stoll(v.text, &used);
            if (used != v.text.size()) throw std::invalid_argument(v.text);
            return x;
        } catch (const std::exception&) {
            fail(v, what + " must be an integer, got '" + v.text + "'");
        }
    }

    static Rational as_rational(const Value& v, const std::string& what)
    {
        if (v.kind != Value::number && v.kind != Value::string) fail(v, what + " must be an exact rational");
        try {
            return parse_rational(v.text);
        } catch (const std::invalid_argument& e) {
            fail(v, what + ": " + e.what());
        }
    }

    static std::string as_string(const Value& v, const std::string& what)
    {
        if (v.kind != Value::string) fail(v, what + " must be a quoted string");
        return v.text;
    }

    static CatalogEntry build(const std::string& name, const Token& h, const std::map<std::string, Value>& keys)
    {
        static const std::set<std::string> known{"kind", "level", "group", "terms", "modulus", "exponents", "leading_power", "builtin"};
        for (const auto& [k, v] : keys)
            if (!known.count(k)) fail(v, "unknown key '" + k + "' in function " + name);

        const auto get = [&](const std::string& k) -> const Value* {
            const auto it = keys.find(k);
            return it == keys.end() ? nullptr : &it->second;
        };
        const auto forbid = [&](std::initializer_list<const char*> ks, const std::string& kind) {
            for (const char* k : ks)
                if (const Value* v = get(k)) fail(*v, std::string("key '") + k + "' is not valid for kind " + kind);
        };

        CatalogEntry e;
        e.name = name;
        if (const Value* v = get("level")) {
            e.level = as_int(*v, "level");
            if (e.level < 1) fail(*v, "level must be positive");
        }
        if (const Value* v = get("group")) {
            const auto g = as_string(*v, "group");
            if (g == "gamma0") e.group = Group::gamma0;
            else if (g == "gamma1") e.group = Group::gamma1;
            else if (g == "full") e.group = Group::full;
            else fail(*v, "group must be gamma0, gamma1 or full, got '" + g + "'");
        }
        const Value* kind_v = get("kind");
        if (!kind_v) fail(h, "function " + name + " has no kind");
        const auto kind = as_string(*kind_v, "kind");
        Rational lp = 0;
        if (const Value* v = get("leading_power")) lp = as_rational(*v, "leading_power");

        if (kind == "eta_quotient") {
            forbid({"modulus", "exponents", "builtin"}, kind);
            EtaQuotient eta;
            eta.leading_power = lp;
            if (const Value* v = get("terms")) {
                if (v->kind != Value::array) fail(*v, "terms must be a list of [scale, exponent] pairs");
                for (const auto& pair : v->items) {
                    if (pair.kind != Value::array || pair.items.size() != 2) fail(pair, "each term must be [scale, exponent]");
                    const auto d = as_int(pair.items[0], "eta scale");
                    if (d < 1) fail(pair, "eta scale must be positive");
                    eta.terms.emplace_back(d, as_int(pair.items[1], "eta exponent"));
                }
            }
            e.source = ProductFormulaSpec{eta};
        } else if (kind == "residue_product") {
            forbid({"terms", "builtin"}, kind);
            ResidueProduct rp;
            rp.leading_power = lp;
            const Value* m = get("modulus");
            if (!m) fail(h, "residue_product " + name + " needs a modulus");
            rp.modulus = as_int(*m, "modulus");
            if (rp.modulus < 1) fail(*m, "modulus must be positive");
            if (const Value* v = get("exponents")) {
                if (v->kind != Value::map) fail(*v, "exponents must be a map {class: exponent, ...}");
                for (const auto& [k, x] : v->entries) {
                    const auto g = as_int(k, "residue class");
                    if (g < 0 || g >= rp.modulus) fail(k, "residue class " + std::to_string(g) + " is outside [0, modulus)");
                    if (!rp.exponents.emplace(g, as_int(x, "exponent")).second) fail(k, "duplicate residue class " + std::to_string(g));
                }
            }
            e.source = ProductFormulaSpec{rp};
        } else if (kind == "builtin") {
            forbid({"terms", "modulus", "exponents", "leading_power"}, kind);
            const Value* b = get("builtin");
            if (!b) fail(h, "builtin " + name + " needs a builtin key");
            const auto which = as_string(*b, "builtin");
            if (which != "big_j") fail(*b, "unknown builtin '" + which + "'");
            e.source = Builtin::big_j;
        } else {
            fail(*kind_v, "unknown kind '" + kind + "'");
        }

        if (const auto* spec = std::get_if<ProductFormulaSpec>(&e.source)) {
            try {
                leading_exponent(*spec);
            } catch (const DomainError& err) {
                fail(h, "function " + name + ": " + err.what());
            }
        }
        return e;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) { return Parser(Lexer(text).run()).run(); }

Catalog::Catalog(std::vector<CatalogEntry> entries)
{
    for (auto& e : entries) {
        auto name = e.name;
        if (!entries_.emplace(name, std::move(e)).second) throw ConfigError("duplicate function '" + name + "'");
    }
}

Catalog Catalog::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return Catalog(parse_catalog(buf.str()));
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

bool Catalog::contains(const std::string& name) const { return entries_.count(name) != 0; }

const CatalogEntry& Catalog::entry(const std::string& name) const
{
    const auto it = entries_.find(name);
    if (it == entries_.end()) throw DomainError("unknown function '" + name + "'");
    return it->second;
}

std::vector<std::string> Catalog::names() const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

LaurentSeries Catalog::compute(const CatalogEntry& e, std::int64_t order) const
{
    const auto exclusive = order + 1;
    LaurentSeries raw = std::holds_alternative<Builtin>(e.source)
                            ? big_j(exclusive)
                            : expand_product_formula(std::get<ProductFormulaSpec>(e.source), exclusive);
    LaurentSeries f = normalize_hauptmodul(raw);
    if (!f.is_integral()) {
        for (auto x = f.valuation(); x < f.order(); ++x)
            if (!is_integer(f[x]))
                throw DomainError(e.name + ": coefficient of q^" + std::to_string(x) + " is not an integer (" + to_string(f[x]) + ")");
    }
    return f;
}

LaurentSeries Catalog::expand(const std::string& name, std::int64_t order) const
{
    if (order < 0) throw DomainError("expansion order must be >= 0, got " + std::to_string(order));
    const CatalogEntry& e = entry(name);
    {
        std::lock_guard lock(mutex_);
        const auto it = cache_.find(name);
        if (it != cache_.end() && it->second.order() > order) return it->second.truncated(order + 1);
    }
    LaurentSeries f = compute(e, order);
    std::lock_guard lock(mutex_);
    auto it = cache_.find(name);
    if (it == cache_.end()) cache_.emplace(name, f);
    else if (it->second.order() < f.order()) it->second = f;
    return f;
}

std::string hauptmodul_name(std::int64_t level) { return "t1_" + std::to_string(level); }
std::string hauptmodul_name_gamma0(std::int64_t level) { return "t0_" + std::to_string(level); }

} // namespace qrep
