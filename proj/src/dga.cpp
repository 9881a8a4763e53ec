#include "coindet/dga.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace coindet {

namespace {

constexpr std::size_t kMaxExponent = 1u << 20;

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

}  // namespace

Monomial::Monomial(Factors factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [g, e] : factors) {
        if (e == 0) throw ContractError("bad_monomial", "zero exponent");
        if (!factors_.empty() && factors_.back().first == g)
            factors_.back().second += e;
        else
            factors_.emplace_back(g, e);
    }
}

Monomial Monomial::generator(std::size_t index) { return Monomial({{index, 1}}); }

std::size_t Monomial::exponent_of(std::size_t gen) const {
    for (const auto& [g, e] : factors_)
        if (g == gen) return e;
    return 0;
}

std::size_t Monomial::degree(const std::vector<Generator>& gens) const {
    std::size_t total = 0;
    for (const auto& [g, e] : factors_) {
        if (g >= gens.size()) throw ContractError("bad_monomial", "generator index out of range");
        total += e * gens[g].degree;
    }
    return total;
}

Monomial Monomial::times(const Monomial& other) const {
    Factors merged;
    merged.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < other.factors_.size()) {
        if (j == other.factors_.size() ||
            (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
            merged.push_back(factors_[i++]);
        } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
            merged.push_back(other.factors_[j++]);
        } else {
            merged.emplace_back(factors_[i].first, factors_[i].second + other.factors_[j].second);
            ++i, ++j;
        }
    }
    Monomial m;
    m.factors_ = std::move(merged);
    return m;
}

bool Monomial::divisible_by(const Monomial& other) const {
    for (const auto& [g, e] : other.factors_)
        if (exponent_of(g) < e) return false;
    return true;
}

std::vector<std::size_t> Monomial::expanded() const {
    std::vector<std::size_t> out;
    for (const auto& [g, e] : factors_)
        for (std::size_t k = 0; k < e; ++k) out.push_back(g);
    return out;
}

std::string Monomial::to_string(const std::vector<Generator>& gens) const {
    if (is_unit()) return "1";
    std::string out;
    for (const auto& [g, e] : factors_) {
        if (!out.empty()) out += " * ";
        out += gens.at(g).name;
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

Presentation::Presentation(std::string name, std::size_t truncation,
                           std::vector<Generator> generators, std::vector<Monomial> relations,
                           std::vector<std::pair<std::size_t, std::vector<Monomial>>> differentials)
    : name_(std::move(name)),
      truncation_(truncation),
      generators_(std::move(generators)),
      relations_(std::move(relations)) {
    if (!valid_name(name_)) throw ContractError("bad_name", "invalid algebra name");
    if (truncation_ == 0) throw ContractError("bad_truncation", "truncation must be at least 1");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const Generator& g = generators_[i];
        if (!valid_name(g.name)) throw ContractError("bad_name", "invalid generator name");
        if (g.degree == 0)
            throw ContractError("bad_degree", "generator " + g.name + " has degree 0");
        if (g.degree > truncation_)
            throw ContractError("bad_degree", "generator " + g.name + " exceeds the truncation");
        for (std::size_t j = 0; j < i; ++j)
            if (generators_[j].name == g.name)
                throw ContractError("duplicate_generator", "generator " + g.name);
    }
    for (const Monomial& r : relations_) {
        if (r.is_unit())
            throw ContractError("bad_relation", "the unit monomial cannot be a relation");
        r.degree(generators_);  // index range check
    }

    diffs_.resize(generators_.size());
    std::vector<bool> has_diff(generators_.size(), false);
    for (auto& [gen, terms] : differentials) {
        if (gen >= generators_.size())
            throw ContractError("bad_differential", "generator index out of range");
        if (has_diff[gen])
            throw ContractError("duplicate_differential",
                                "two differentials for " + generators_[gen].name);
        has_diff[gen] = true;
        diffs_[gen] = std::move(terms);
    }

    /* Normalize: canonical order, mod-2 cancellation, drop terms the ideal
     * or the truncation window already kills. Terms of a wrong degree are
     * kept so validate() can report them. */
    std::sort(relations_.begin(), relations_.end(),
              [this](const Monomial& a, const Monomial& b) { return monomial_less(a, b); });
    relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
    for (auto& terms : diffs_) {
        for (const Monomial& t : terms) t.degree(generators_);  // index range check
        std::sort(terms.begin(), terms.end(),
                  [this](const Monomial& a, const Monomial& b) { return monomial_less(a, b); });
        std::vector<Monomial> kept;
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i]) ++j;
            if ((j - i) % 2 == 1 && terms[i].degree(generators_) <= truncation_ &&
                !killed_by_ideal(terms[i]))
                kept.push_back(terms[i]);
            i = j;
        }
        terms = std::move(kept);
    }

    build_bases();
    build_d_matrices();
    build_mult_tables();
}

bool Presentation::monomial_less(const Monomial& a, const Monomial& b) const {
    std::size_t da = a.degree(generators_), db = b.degree(generators_);
    if (da != db) return da < db;
    return a.expanded() < b.expanded();
}

bool Presentation::killed_by_ideal(const Monomial& m) const {
    for (const Monomial& r : relations_)
        if (m.divisible_by(r)) return true;
    return false;
}

void Presentation::build_bases() {
    bases_.assign(truncation_ + 1, {});
    basis_index_.assign(truncation_ + 1, {});
    for (std::size_t n = 0; n <= truncation_; ++n) {
        Monomial::Factors current;
        /* DFS over non-decreasing generator sequences; emission order is the
         * canonical graded-lexicographic order. */
        auto rec = [&](auto&& self, std::size_t next_gen, std::size_t remaining) -> void {
            if (remaining == 0) {
                Monomial m(current);
                if (!killed_by_ideal(m)) bases_[n].push_back(std::move(m));
                return;
            }
            for (std::size_t g = next_gen; g < generators_.size(); ++g) {
                std::size_t dg = generators_[g].degree;
                if (dg > remaining) continue;
                if (!current.empty() && current.back().first == g)
                    ++current.back().second;
                else
                    current.emplace_back(g, 1);
                self(self, g, remaining - dg);
                if (current.back().second > 1)
                    --current.back().second;
                else
                    current.pop_back();
            }
        };
        rec(rec, 0, n);
        for (std::size_t i = 0; i < bases_[n].size(); ++i)
            basis_index_[n][bases_[n][i].factors()] = i;
    }
}

void Presentation::build_d_matrices() {
    d_matrices_.clear();
    d_matrices_.reserve(truncation_);
    for (std::size_t n = 0; n < truncation_; ++n) {
        std::vector<Gf2Vector> columns;
        columns.reserve(bases_[n].size());
        for (const Monomial& m : bases_[n]) {
            Gf2Vector col(bases_[n + 1].size());
            for (const auto& [g, e] : m.factors()) {
                if (e % 2 == 0) continue;  // Leibniz coefficient vanishes mod 2
                Monomial::Factors rest_factors;
                for (const auto& [h, k] : m.factors()) {
                    std::size_t keep = (h == g) ? k - 1 : k;
                    if (keep) rest_factors.emplace_back(h, keep);
                }
                Monomial rest(std::move(rest_factors));
                for (const Monomial& t : diffs_[g]) {
                    if (t.degree(generators_) != generators_[g].degree + 1) continue;
                    Monomial prod = rest.times(t);
                    if (killed_by_ideal(prod)) continue;
                    col.flip(basis_index_[n + 1].at(prod.factors()));
                }
            }
            columns.push_back(std::move(col));
        }
        d_matrices_.push_back(Gf2Matrix::from_columns(bases_[n + 1].size(), columns));
    }
}

std::size_t Presentation::table_slot(std::size_t p, std::size_t q) const {
    return p * (truncation_ + 1) + q;
}

void Presentation::build_mult_tables() {
    mult_tables_.assign((truncation_ + 1) * (truncation_ + 1), {});
    for (std::size_t p = 0; p <= truncation_; ++p) {
        for (std::size_t q = p; p + q <= truncation_; ++q) {
            std::vector<std::int32_t>& table = mult_tables_[table_slot(p, q)];
            table.assign(bases_[p].size() * bases_[q].size(), -1);
            for (std::size_t i = 0; i < bases_[p].size(); ++i) {
                for (std::size_t j = 0; j < bases_[q].size(); ++j) {
                    Monomial prod = bases_[p][i].times(bases_[q][j]);
                    if (killed_by_ideal(prod)) continue;
                    table[i * bases_[q].size() + j] =
                        static_cast<std::int32_t>(basis_index_[p + q].at(prod.factors()));
                }
            }
        }
    }
}

const std::vector<std::int32_t>& Presentation::mult_table(std::size_t p, std::size_t q) const {
    return mult_tables_[table_slot(p, q)];
}

const std::vector<Monomial>& Presentation::differential_terms(std::size_t gen) const {
    return diffs_.at(gen);
}

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return i;
    return std::nullopt;
}

const std::vector<Monomial>& Presentation::basis(std::size_t degree) const {
    if (degree > truncation_)
        throw ContractError("degree_out_of_range",
                            "degree " + std::to_string(degree) + " exceeds the truncation");
    return bases_[degree];
}

std::size_t Presentation::basis_index(const Monomial& m) const {
    std::size_t degree = m.degree(generators_);
    if (degree > truncation_) return Gf2Vector::npos;
    auto it = basis_index_[degree].find(m.factors());
    return it == basis_index_[degree].end() ? Gf2Vector::npos : it->second;
}

ChainElement Presentation::zero_chain(std::size_t degree) const {
    return {degree, Gf2Vector(basis(degree).size())};
}

ChainElement Presentation::generator_chain(std::size_t index) const {
    return monomial_chain(Monomial::generator(index));
}

ChainElement Presentation::monomial_chain(const Monomial& m) const {
    std::size_t degree = m.degree(generators_);
    if (degree > truncation_)
        throw Refusal("truncation_overflow", "monomial of degree " + std::to_string(degree) +
                                                 " exceeds truncation " +
                                                 std::to_string(truncation_));
    ChainElement u = zero_chain(degree);
    std::size_t idx = basis_index(m);
    if (idx != Gf2Vector::npos) u.coords.set(idx, true);
    return u;
}

ChainElement Presentation::add(const ChainElement& u, const ChainElement& v) const {
    if (u.degree != v.degree)
        throw ContractError("degree_mismatch", "cannot add chains of degrees " +
                                                   std::to_string(u.degree) + " and " +
                                                   std::to_string(v.degree));
    return {u.degree, u.coords ^ v.coords};
}

ChainElement Presentation::multiply(const ChainElement& u, const ChainElement& v) const {
    std::size_t target = u.degree + v.degree;
    if (target > truncation_)
        throw Refusal("truncation_overflow",
                      "product degree " + std::to_string(target) + " exceeds truncation " +
                          std::to_string(truncation_));
    ChainElement out = zero_chain(target);
    const ChainElement& a = u.degree <= v.degree ? u : v;
    const ChainElement& b = u.degree <= v.degree ? v : u;
    const std::vector<std::int32_t>& table = mult_table(a.degree, b.degree);
    std::size_t bdim = bases_[b.degree].size();
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (!a.coords.get(i)) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (!b.coords.get(j)) continue;
            std::int32_t idx = table[i * bdim + j];
            if (idx >= 0) out.coords.flip(static_cast<std::size_t>(idx));
        }
    }
    return out;
}

ChainElement Presentation::differential(const ChainElement& u) const {
    if (u.degree + 1 > truncation_)
        throw Refusal("truncation_overflow",
                      "differential of a degree-" + std::to_string(u.degree) +
                          " chain leaves the truncated range");
    return {u.degree + 1, d_matrices_[u.degree].apply(u.coords)};
}

const Gf2Matrix& Presentation::d_matrix(std::size_t degree) const {
    if (degree >= truncation_)
        throw ContractError("degree_out_of_range",
                            "no differential matrix out of degree " + std::to_string(degree));
    return d_matrices_[degree];
}

Gf2Matrix Presentation::multiplication_matrix(const ChainElement& u, std::size_t degree) const {
    std::size_t target = u.degree + degree;
    if (target > truncation_)
        throw Refusal("truncation_overflow",
                      "product degree " + std::to_string(target) + " exceeds truncation " +
                          std::to_string(truncation_));
    std::vector<Gf2Vector> columns;
    columns.reserve(bases_[degree].size());
    for (std::size_t j = 0; j < bases_[degree].size(); ++j) {
        ChainElement e{degree, Gf2Vector::unit(bases_[degree].size(), j)};
        columns.push_back(multiply(u, e).coords);
    }
    return Gf2Matrix::from_columns(bases_[target].size(), columns);
}

std::vector<Monomial> Presentation::free_differential(const Monomial& m) const {
    std::vector<Monomial> out;
    for (const auto& [g, e] : m.factors()) {
        if (e % 2 == 0) continue;
        Monomial::Factors rest_factors;
        for (const auto& [h, k] : m.factors()) {
            std::size_t keep = (h == g) ? k - 1 : k;
            if (keep) rest_factors.emplace_back(h, keep);
        }
        Monomial rest(std::move(rest_factors));
        for (const Monomial& t : diffs_[g]) out.push_back(rest.times(t));
    }
    std::sort(out.begin(), out.end(),
              [this](const Monomial& a, const Monomial& b) { return monomial_less(a, b); });
    std::vector<Monomial> reduced;
    for (std::size_t i = 0; i < out.size();) {
        std::size_t j = i;
        while (j < out.size() && out[j] == out[i]) ++j;
        if ((j - i) % 2 == 1) reduced.push_back(out[i]);
        i = j;
    }
    return reduced;
}

ValidationReport Presentation::validate() const {
    ValidationReport rep;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        for (const Monomial& t : diffs_[g]) {
            std::size_t got = t.degree(generators_), want = generators_[g].degree + 1;
            if (got != want)
                rep.issues.push_back(
                    {"degree_mismatch", "d(" + generators_[g].name + "): term " +
                                            t.to_string(generators_) + " has degree " +
                                            std::to_string(got) + ", expected " +
                                            std::to_string(want)});
        }
    }
    if (rep.ok()) {
        for (std::size_t n = 0; n + 2 <= truncation_; ++n) {
            for (std::size_t j = 0; j < bases_[n].size(); ++j) {
                Gf2Vector dd = d_matrices_[n + 1].apply(d_matrices_[n].column(j));
                if (!dd.is_zero())
                    rep.issues.push_back(
                        {"d_squared_nonzero",
                         "d(d(" + bases_[n][j].to_string(generators_) +
                             ")) = " + chain_to_string({n + 2, dd}) + ", expected 0"});
            }
        }
    }
    for (const Monomial& r : relations_) {
        std::size_t dr = r.degree(generators_);
        if (dr > truncation_) {
            rep.issues.push_back({"relation_exceeds_truncation",
                                  "relation " + r.to_string(generators_) + " has degree " +
                                      std::to_string(dr) + " > " + std::to_string(truncation_)});
            continue;
        }
        auto check_closure = [&](const Monomial& m) {
            if (m.degree(generators_) + 1 > truncation_) return;
            for (const Monomial& t : free_differential(m)) {
                if (t.degree(generators_) <= truncation_ && !killed_by_ideal(t))
                    rep.issues.push_back(
                        {"ideal_not_closed", "d(" + m.to_string(generators_) + ") contains " +
                                                 t.to_string(generators_) +
                                                 ", which is outside the relation ideal"});
            }
        };
        check_closure(r);
        for (std::size_t g = 0; g < generators_.size(); ++g)
            check_closure(r.times(Monomial::generator(g)));
    }
    return rep;
}

bool Presentation::operator==(const Presentation& other) const {
    return name_ == other.name_ && truncation_ == other.truncation_ &&
           generators_ == other.generators_ && relations_ == other.relations_ &&
           diffs_ == other.diffs_;
}

/* ---------- text format ---------- */

namespace {

struct Token {
    enum Kind { Name, Number, Star, Plus, Caret, Equals } kind;
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        char ch = line[i];
        if (ch == ' ' || ch == '\t') {
            ++i;
            continue;
        }
        std::size_t col = i + 1;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) ||
                                       line[j] == '_'))
                ++j;
            tokens.push_back({Token::Name, std::string(line.substr(i, j - i)), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            tokens.push_back({Token::Number, std::string(line.substr(i, j - i)), col});
            i = j;
        } else if (ch == '*' || ch == '+' || ch == '^' || ch == '=') {
            Token::Kind kind = ch == '*'   ? Token::Star
                               : ch == '+' ? Token::Plus
                               : ch == '^' ? Token::Caret
                                           : Token::Equals;
            tokens.push_back({kind, std::string(1, ch), col});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, ch) + "'", line_no, col);
        }
    }
    return tokens;
}

std::size_t parse_count(const Token& tok, std::size_t line_no, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        throw ParseError(std::string(what) + " out of range", line_no, tok.column);
    return value;
}

/* Cursor over one line's tokens. */
struct TokenStream {
    const std::vector<Token>& tokens;
    std::size_t line_no;
    std::size_t pos = 0;

    bool done() const { return pos >= tokens.size(); }
    const Token& peek() const {
        if (done())
            throw ParseError("unexpected end of line", line_no,
                             tokens.empty() ? 1 : tokens.back().column + tokens.back().text.size());
        return tokens[pos];
    }
    const Token& take(Token::Kind kind, const char* what) {
        const Token& tok = peek();
        if (tok.kind != kind) throw ParseError(std::string("expected ") + what, line_no, tok.column);
        ++pos;
        return tok;
    }
    void expect_end() const {
        if (!done())
            throw ParseError("unexpected token '" + tokens[pos].text + "'", line_no,
                             tokens[pos].column);
    }
};

template <typename Lookup>
Monomial parse_monomial(TokenStream& ts, Lookup&& gen_index, std::size_t* column_out = nullptr) {
    Monomial::Factors factors;
    if (column_out) *column_out = ts.peek().column;
    while (true) {
        const Token& name = ts.take(Token::Name, "a generator name");
        std::optional<std::size_t> idx = gen_index(name.text);
        if (!idx) throw ParseError("unknown name '" + name.text + "'", ts.line_no, name.column);
        std::size_t exponent = 1;
        if (!ts.done() && ts.peek().kind == Token::Caret) {
            ++ts.pos;
            const Token& num = ts.take(Token::Number, "an exponent");
            exponent = parse_count(num, ts.line_no, "exponent");
            if (exponent == 0)
                throw ParseError("exponent must be at least 1", ts.line_no, num.column);
            if (exponent > kMaxExponent)
                throw ParseError("exponent too large", ts.line_no, num.column);
        }
        factors.emplace_back(*idx, exponent);
        if (!ts.done() && ts.peek().kind == Token::Star)
            ++ts.pos;
        else
            break;
    }
    return Monomial(std::move(factors));
}

/* `0` or a sum of monomials; returns term list with source columns. */
template <typename Lookup>
std::vector<std::pair<Monomial, std::size_t>> parse_polynomial(TokenStream& ts,
                                                               Lookup&& gen_index) {
    if (ts.peek().kind == Token::Number) {
        const Token& tok = ts.peek();
        if (tok.text != "0")
            throw ParseError("expected a monomial or 0", ts.line_no, tok.column);
        ++ts.pos;
        ts.expect_end();
        return {};
    }
    std::vector<std::pair<Monomial, std::size_t>> terms;
    while (true) {
        std::size_t col = 0;
        Monomial m = parse_monomial(ts, gen_index, &col);
        terms.emplace_back(std::move(m), col);
        if (!ts.done() && ts.peek().kind == Token::Plus)
            ++ts.pos;
        else
            break;
    }
    ts.expect_end();
    return terms;
}

}  // namespace

Presentation Presentation::parse(std::string_view text) {
    std::string name;
    std::optional<std::size_t> truncation;
    std::vector<Generator> gens;
    std::vector<Monomial> relations;
    std::vector<std::pair<std::size_t, std::vector<Monomial>>> differentials;
    std::vector<bool> has_diff;

    auto gen_index = [&](const std::string& n) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == n) return i;
        return std::nullopt;
    };
    auto monomial_degree = [&](const Monomial& m) { return m.degree(gens); };

    std::size_t line_no = 0;
    std::size_t offset = 0;
    bool saw_header = false;
    while (offset <= text.size()) {
        std::size_t eol = text.find('\n', offset);
        std::string_view line = text.substr(
            offset, eol == std::string_view::npos ? text.size() - offset : eol - offset);
        offset = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<Token> tokens = lex_line(line, line_no);
        if (tokens.empty()) continue;
        TokenStream ts{tokens, line_no};
        const Token& directive = ts.take(Token::Name, "a directive");

        if (!saw_header && directive.text != "dga")
            throw ParseError("first line must be 'dga <name>'", line_no, directive.column);

        if (directive.text == "dga") {
            if (saw_header) throw ParseError("duplicate dga header", line_no, directive.column);
            saw_header = true;
            name = ts.take(Token::Name, "an algebra name").text;
            ts.expect_end();
        } else if (directive.text == "truncate") {
            if (truncation)
                throw ParseError("duplicate truncate line", line_no, directive.column);
            const Token& num = ts.take(Token::Number, "a positive integer");
            std::size_t value = parse_count(num, line_no, "truncation");
            if (value == 0)
                throw ParseError("truncation must be at least 1", line_no, num.column);
            truncation = value;
            ts.expect_end();
        } else if (directive.text == "gen") {
            if (!truncation)
                throw ParseError("truncate must precede generator declarations", line_no,
                                 directive.column);
            const Token& gname = ts.take(Token::Name, "a generator name");
            if (gen_index(gname.text))
                throw ParseError("duplicate generator '" + gname.text + "'", line_no,
                                 gname.column);
            const Token& num = ts.take(Token::Number, "a degree");
            std::size_t degree = parse_count(num, line_no, "degree");
            if (degree == 0)
                throw ParseError("generator degree must be at least 1", line_no, num.column);
            if (degree > *truncation)
                throw ParseError("generator degree exceeds the truncation", line_no, num.column);
            ts.expect_end();
            gens.push_back({gname.text, degree});
            has_diff.push_back(false);
        } else if (directive.text == "rel") {
            relations.push_back(parse_monomial(ts, gen_index));
            ts.expect_end();
        } else if (directive.text == "d") {
            const Token& gname = ts.take(Token::Name, "a generator name");
            std::optional<std::size_t> idx = gen_index(gname.text);
            if (!idx)
                throw ParseError("unknown name '" + gname.text + "'", line_no, gname.column);
            if (has_diff[*idx])
                throw ParseError("duplicate differential for '" + gname.text + "'", line_no,
                                 gname.column);
            has_diff[*idx] = true;
            ts.take(Token::Equals, "'='");
            std::vector<Monomial> terms;
            for (auto& [m, col] : parse_polynomial(ts, gen_index)) {
                std::size_t got = monomial_degree(m), want = gens[*idx].degree + 1;
                if (got != want)
                    throw ParseError("degree mismatch: term of d(" + gname.text +
                                         ") has degree " + std::to_string(got) + ", expected " +
                                         std::to_string(want),
                                     line_no, col);
                terms.push_back(std::move(m));
            }
            differentials.emplace_back(*idx, std::move(terms));
        } else {
            throw ParseError("unknown directive '" + directive.text + "'", line_no,
                             directive.column);
        }
    }
    if (!saw_header) throw ParseError("missing 'dga <name>' header", 1, 1);
    if (!truncation) throw ParseError("missing truncate line", line_no, 1);
    return Presentation(std::move(name), *truncation, std::move(gens), std::move(relations),
                        std::move(differentials));
}

std::string Presentation::serialize() const {
    std::string out = "dga " + name_ + "\n";
    out += "truncate " + std::to_string(truncation_) + "\n";
    for (const Generator& g : generators_)
        out += "gen " + g.name + " " + std::to_string(g.degree) + "\n";
    for (const Monomial& r : relations_) out += "rel " + r.to_string(generators_) + "\n";
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (diffs_[g].empty()) continue;
        out += "d " + generators_[g].name + " =";
        for (std::size_t i = 0; i < diffs_[g].size(); ++i) {
            out += i ? " + " : " ";
            out += diffs_[g][i].to_string(generators_);
        }
        out += "\n";
    }
    return out;
}

ChainElement Presentation::chain(std::string_view polynomial_text) const {
    std::vector<Token> tokens = lex_line(polynomial_text, 1);
    TokenStream ts{tokens, 1};
    auto lookup = [this](const std::string& n) { return generator_index(n); };
    auto terms = parse_polynomial(ts, lookup);
    if (terms.empty())
        throw ParseError("the zero polynomial has no degree; write a homogeneous polynomial", 1,
                         tokens.empty() ? 1 : tokens[0].column);
    std::size_t degree = terms[0].first.degree(generators_);
    for (const auto& [m, col] : terms) {
        std::size_t d = m.degree(generators_);
        if (d != degree)
            throw ParseError("inhomogeneous polynomial: degrees " + std::to_string(degree) +
                                 " and " + std::to_string(d),
                             1, col);
    }
    if (degree > truncation_)
        throw ParseError("degree " + std::to_string(degree) + " exceeds truncation " +
                             std::to_string(truncation_),
                         1, terms[0].second);
    ChainElement u = zero_chain(degree);
    for (const auto& [m, col] : terms) {
        std::size_t idx = basis_index(m);
        if (idx != Gf2Vector::npos) u.coords.flip(idx);
    }
    return u;
}

std::string Presentation::chain_to_string(const ChainElement& u) const {
    const std::vector<Monomial>& b = basis(u.degree);
    std::string out;
    for (std::size_t i = 0; i < u.coords.size(); ++i) {
        if (!u.coords.get(i)) continue;
        if (!out.empty()) out += " + ";
        out += b[i].to_string(generators_);
    }
    return out.empty() ? "0" : out;
}

}  // namespace coindet
