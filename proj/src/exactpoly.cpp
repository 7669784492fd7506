#include "k3atlas/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k3atlas::xp {

VarContextPtr make_context(std::initializer_list<std::string> names) {
    return make_context(std::vector<std::string>(names));
}

VarContextPtr make_context(const std::vector<std::string>& names) {
    if (names.size() > Exp::kMaxVars)
        throw ArityError("variable context exceeds supported arity");
    return std::make_shared<const VarContext>(names);
}

MPoly MPoly::constant(VarContextPtr ctx, Rat c) {
    MPoly p(std::move(ctx));
    if (c != 0) p.terms_.emplace(Exp{}, std::move(c));
    return p;
}

MPoly MPoly::variable(VarContextPtr ctx, std::size_t index, unsigned power) {
    if (index >= ctx->size()) throw ArityError("variable index out of range");
    MPoly p(std::move(ctx));
    if (power == 0) return MPoly::constant(p.ctx_, 1);
    Exp e;
    e.e[index] = static_cast<std::uint16_t>(power);
    p.terms_.emplace(e, Rat(1));
    return p;
}

MPoly MPoly::variable(VarContextPtr ctx, const std::string& name, unsigned power) {
    auto it = std::find(ctx->begin(), ctx->end(), name);
    if (it == ctx->end()) throw ArityError("unknown variable " + name);
    return variable(ctx, static_cast<std::size_t>(it - ctx->begin()), power);
}

void MPoly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total()); // leading term has max grade
}

bool MPoly::is_homogeneous(int* deg_out) const {
    if (terms_.empty()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    const unsigned d = terms_.begin()->first.total();
    for (const auto& [e, c] : terms_)
        if (e.total() != d) return false;
    if (deg_out) *deg_out = static_cast<int>(d);
    return true;
}

bool MPoly::is_weighted_homogeneous(const std::vector<int>& weights, long* deg_out) const {
    if (weights.size() != arity()) throw ArityError("weight vector arity mismatch");
    bool first = true;
    long d = 0;
    for (const auto& [e, c] : terms_) {
        long w = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) w += static_cast<long>(e.e[i]) * weights[i];
        if (first) {
            d = w;
            first = false;
        } else if (w != d) {
            return false;
        }
    }
    if (deg_out) *deg_out = d;
    return true;
}

std::optional<Rat> MPoly::as_constant() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_.begin()->first.total() == 0) return terms_.begin()->second;
    return std::nullopt;
}

void MPoly::require_same_context(const MPoly& o) const {
    if (ctx_ == o.ctx_) return;
    if (ctx_ && o.ctx_ && *ctx_ == *o.ctx_) return;
    throw ArityError("operands built over different variable contexts");
}

MPoly MPoly::operator-() const {
    MPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    require_same_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    require_same_context(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.require_same_context(b);
    MPoly r(a.ctx_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    const MPoly& outer = (a.terms_.size() <= b.terms_.size()) ? a : b;
    const MPoly& inner = (&outer == &a) ? b : a;
    Rat prod;
    for (const auto& [ea, ca] : outer.terms_) {
        for (const auto& [eb, cb] : inner.terms_) {
            Exp e;
            for (std::size_t i = 0; i < Exp::kMaxVars; ++i)
                e.e[i] = static_cast<std::uint16_t>(ea.e[i] + eb.e[i]);
            prod = ca * cb;
            r.add_term(e, prod);
        }
    }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(ctx_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MPoly MPoly::pow(unsigned n) const {
    MPoly result = MPoly::constant(ctx_, 1);
    MPoly base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

MPoly MPoly::derivative(std::size_t var) const {
    if (var >= arity()) throw ArityError("derivative variable out of range");
    MPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e.e[var] == 0) continue;
        Exp d = e;
        d.e[var] -= 1;
        r.add_term(d, c * Rat(static_cast<long>(e.e[var])));
    }
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
    require_same_context(divisor);
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    MPoly rem = *this;
    MPoly quot(ctx_);
    const auto& dlead = *divisor.terms_.begin();
    while (!rem.terms_.empty()) {
        const auto& rlead = *rem.terms_.begin();
        Exp q;
        for (std::size_t i = 0; i < Exp::kMaxVars; ++i) {
            if (rlead.first.e[i] < dlead.first.e[i]) return std::nullopt;
            q.e[i] = static_cast<std::uint16_t>(rlead.first.e[i] - dlead.first.e[i]);
        }
        const Rat coef = rlead.second / dlead.second;
        quot.add_term(q, coef);
        MPoly mono(ctx_);
        mono.terms_.emplace(q, coef);
        rem -= mono * divisor;
    }
    return quot;
}

MPoly MPoly::substitute(const std::vector<std::optional<MPoly>>& bindings,
                        const VarContextPtr& target) const {
    if (bindings.size() != arity()) throw ArityError("binding vector arity mismatch");
    // Map unbound variables into the target context by name.
    std::vector<int> unbound_slot(arity(), -1);
    for (std::size_t i = 0; i < arity(); ++i) {
        if (bindings[i]) {
            if (*bindings[i]->context() != *target)
                throw ArityError("binding not built over the target context");
            continue;
        }
        auto it = std::find(target->begin(), target->end(), (*ctx_)[i]);
        if (it == target->end())
            throw ArityError("unbound variable " + (*ctx_)[i] + " missing from target context");
        unbound_slot[i] = static_cast<int>(it - target->begin());
    }

    // Cache powers of each bound polynomial.
    std::vector<std::vector<MPoly>> powers(arity());
    MPoly result(target);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(target, c);
        for (std::size_t i = 0; i < arity(); ++i) {
            const unsigned k = e.e[i];
            if (k == 0) continue;
            if (bindings[i]) {
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(*bindings[i]);
                while (cache.size() < k) cache.push_back(cache.back() * *bindings[i]);
                term = term * cache[k - 1];
            } else {
                term = term * MPoly::variable(target, static_cast<std::size_t>(unbound_slot[i]), k);
            }
        }
        result += term;
    }
    return result;
}

namespace {

// Recursive sparse Horner over lexicographically sorted terms.
struct LexTerm {
    Exp e;
    const Rat* c;
};

Complex horner(const std::vector<LexTerm>& terms, std::size_t lo, std::size_t hi,
               std::size_t var, std::size_t arity, const std::vector<Complex>& vals) {
    if (var == arity) {
        // all exponents exhausted: a single constant term remains
        Complex acc(0.0, 0.0);
        for (std::size_t i = lo; i < hi; ++i) acc += Complex(terms[i].c->get_d(), 0.0);
        return acc;
    }
    // group by descending exponent of `var`
    Complex acc(0.0, 0.0);
    std::size_t i = lo;
    int prev_exp = -1;
    while (i < hi) {
        const int k = terms[i].e.e[var];
        std::size_t j = i;
        while (j < hi && terms[j].e.e[var] == k) ++j;
        if (prev_exp >= 0) {
            for (int step = 0; step < prev_exp - k; ++step) acc *= vals[var];
        }
        acc += horner(terms, i, j, var + 1, arity, vals);
        prev_exp = k;
        i = j;
    }
    for (int step = 0; step < prev_exp; ++step) acc *= vals[var];
    return acc;
}

} // namespace

Complex MPoly::eval(const std::vector<std::optional<Complex>>& bindings) const {
    if (bindings.size() != arity()) throw ArityError("binding vector arity mismatch");
    std::vector<Complex> vals(arity(), Complex(0.0, 0.0));
    std::vector<bool> bound(arity(), false);
    for (std::size_t i = 0; i < arity(); ++i) {
        if (bindings[i]) {
            vals[i] = *bindings[i];
            bound[i] = true;
        }
    }
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < arity(); ++i)
            if (e.e[i] > 0 && !bound[i])
                throw MissingBinding("unbound variable " + (*ctx_)[i] + " in numeric evaluation");

    std::vector<LexTerm> terms;
    terms.reserve(terms_.size());
    for (const auto& [e, c] : terms_) terms.push_back({e, &c});
    std::sort(terms.begin(), terms.end(),
              [](const LexTerm& a, const LexTerm& b) { return a.e.e > b.e.e; });
    return horner(terms, 0, terms.size(), 0, arity(), vals);
}

Rat MPoly::eval_exact(const std::vector<Rat>& values) const {
    if (values.size() != arity()) throw ArityError("value vector arity mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < arity(); ++i) {
            for (unsigned k = 0; k < e.e[i]; ++k) t *= values[i];
        }
        acc += t;
    }
    return acc;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            if (a < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        const bool has_vars = e.total() > 0;
        if (!has_vars || a != 1) {
            os << a.get_str();
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < arity(); ++i) {
            if (e.e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << (*ctx_)[i];
            if (e.e[i] > 1) os << "^" << e.e[i];
        }
    }
    return os.str();
}

bool MPoly::operator==(const MPoly& o) const {
    require_same_context(o);
    return terms_ == o.terms_;
}

RationalFunction::RationalFunction(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
}

Complex RationalFunction::eval(const std::vector<std::optional<Complex>>& bindings) const {
    const Complex d = den.eval(bindings);
    if (d == Complex(0.0, 0.0)) throw DomainError("rational function denominator vanishes");
    return num.eval(bindings) / d;
}

IdentityReport identity_check(const std::string& name, const MPoly& lhs, const MPoly& rhs) {
    MPoly diff = lhs - rhs;
    IdentityReport rep;
    rep.name = name;
    rep.pass = diff.is_zero();
    rep.offending_terms = diff.term_count();
    if (!rep.pass) {
        MPoly head(diff.context());
        std::size_t n = 0;
        for (const auto& [e, c] : diff.terms()) {
            if (n++ == 10) break;
            head.add_term(e, c);
        }
        rep.witness = head.str();
    }
    return rep;
}

namespace {

struct Tok {
    enum Kind { Int, Var, Plus, Minus, Times, Caret, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Tok next() {
        skip_ws();
        Tok t{Tok::End, "", line_, col_};
        if (pos_ >= s_.size()) return t;
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Int;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                t.text += advance();
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::Var;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                t.text += advance();
            return t;
        }
        switch (c) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '*': t.kind = Tok::Times; break;
            case '^': t.kind = Tok::Caret; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        advance();
        return t;
    }

private:
    char advance() {
        const char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

} // namespace

MPoly parse_poly(const std::string& src, const VarContextPtr& ctx) {
    Lexer lex(src);
    MPoly result(ctx);
    Tok t = lex.next();
    if (t.kind == Tok::End) throw ParseError("empty polynomial source", t.line, t.col);

    bool expect_term = true;
    bool dangling_op = false;
    int sign = 1;
    while (t.kind != Tok::End) {
        if (expect_term) {
            if (t.kind == Tok::Minus) {
                sign = -sign;
                t = lex.next();
                continue;
            }
            if (t.kind == Tok::Plus) {
                t = lex.next();
                continue;
            }
            // parse one term: factors separated by optional '*'
            Int coef = 1;
            Exp e;
            bool any_factor = false;
            while (true) {
                if (t.kind == Tok::Int) {
                    coef *= Int(t.text);
                    any_factor = true;
                    t = lex.next();
                } else if (t.kind == Tok::Var) {
                    auto it = std::find(ctx->begin(), ctx->end(), t.text);
                    if (it == ctx->end())
                        throw ParseError("unknown variable " + t.text, t.line, t.col);
                    const auto idx = static_cast<std::size_t>(it - ctx->begin());
                    unsigned power = 1;
                    t = lex.next();
                    if (t.kind == Tok::Caret) {
                        t = lex.next();
                        if (t.kind != Tok::Int)
                            throw ParseError("exponent must be an integer", t.line, t.col);
                        power = static_cast<unsigned>(std::stoul(t.text));
                        t = lex.next();
                    }
                    e.e[idx] = static_cast<std::uint16_t>(e.e[idx] + power);
                    any_factor = true;
                } else {
                    break;
                }
                if (t.kind == Tok::Times) {
                    t = lex.next();
                    if (t.kind != Tok::Int && t.kind != Tok::Var)
                        throw ParseError("factor expected after '*'", t.line, t.col);
                }
            }
            if (!any_factor) throw ParseError("term expected", t.line, t.col);
            result.add_term(e, Rat(sign * coef));
            sign = 1;
            expect_term = false;
            dangling_op = false;
        } else {
            if (t.kind == Tok::Plus) {
                sign = 1;
            } else if (t.kind == Tok::Minus) {
                sign = -1;
            } else {
                throw ParseError("'+' or '-' expected between terms", t.line, t.col);
            }
            expect_term = true;
            dangling_op = true;
            t = lex.next();
        }
    }
    if (expect_term && (sign != 1 || dangling_op))
        throw ParseError("dangling operator at end of input", 0, 0);
    return result;
}

} // namespace k3atlas::xp
