#ifndef K3ATLAS_EXACTPOLY_HPP
#define K3ATLAS_EXACTPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "k3atlas/errors.hpp"
#include "k3atlas/numerics.hpp"

namespace k3atlas::xp {

using Rat = mpq_class;
using Int = mpz_class;

/// Ordered variable context shared by the polynomials built over it.
using VarContext = std::vector<std::string>;
using VarContextPtr = std::shared_ptr<const VarContext>;

VarContextPtr make_context(std::initializer_list<std::string> names);
VarContextPtr make_context(const std::vector<std::string>& names);

/// Exponent tuple. Arity is carried by the owning polynomial's context.
struct Exp {
    static constexpr std::size_t kMaxVars = 10;
    std::array<std::uint16_t, kMaxVars> e{};

    unsigned total() const {
        unsigned s = 0;
        for (auto x : e) s += x;
        return s;
    }
    bool operator==(const Exp& o) const { return e == o.e; }
};

/// Graded lexicographic order, descending, so map iteration starts at the
/// leading term and printing is deterministic.
struct GrlexGreater {
    bool operator()(const Exp& a, const Exp& b) const {
        const unsigned ta = a.total(), tb = b.total();
        if (ta != tb) return ta > tb;
        return a.e > b.e;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficients are stored.
class MPoly {
public:
    using TermMap = std::map<Exp, Rat, GrlexGreater>;

    MPoly() = default;
    explicit MPoly(VarContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MPoly zero(VarContextPtr ctx) { return MPoly(std::move(ctx)); }
    static MPoly constant(VarContextPtr ctx, Rat c);
    static MPoly variable(VarContextPtr ctx, std::size_t index, unsigned power = 1);
    static MPoly variable(VarContextPtr ctx, const std::string& name, unsigned power = 1);

    const VarContextPtr& context() const { return ctx_; }
    std::size_t arity() const { return ctx_ ? ctx_->size() : 0; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c * x^e, erasing the slot if the sum cancels.
    void add_term(const Exp& e, const Rat& c);

    int degree() const; // -1 for the zero polynomial
    bool is_homogeneous(int* deg_out = nullptr) const;
    bool is_weighted_homogeneous(const std::vector<int>& weights, long* deg_out = nullptr) const;

    /// Constant value if the polynomial has degree <= 0.
    std::optional<Rat> as_constant() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly operator*(const Rat& c) const;
    friend MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

    /// Power by repeated squaring; pow(0) is the constant 1.
    MPoly pow(unsigned n) const;

    MPoly derivative(std::size_t var) const;

    /// Exact quotient; std::nullopt when the divisor does not divide exactly.
    std::optional<MPoly> divide_exact(const MPoly& divisor) const;

    /// Polynomial composition. bindings[i] (when set) replaces variable i and
    /// must live over the target context; unbound variables must appear in
    /// the target context under the same name.
    MPoly substitute(const std::vector<std::optional<MPoly>>& bindings,
                     const VarContextPtr& target) const;

    /// Numeric evaluation (recursive Horner). Every variable with nonzero
    /// exponent must be bound or MissingBinding is thrown.
    Complex eval(const std::vector<std::optional<Complex>>& bindings) const;
    Rat eval_exact(const std::vector<Rat>& values) const;

    std::string str() const;

    bool operator==(const MPoly& o) const;

private:
    void require_same_context(const MPoly& o) const;

    VarContextPtr ctx_;
    TermMap terms_;
};

/// Quotient of two polynomials over one context; denominator not identically
/// zero. No reduction is attempted.
struct RationalFunction {
    MPoly num;
    MPoly den;

    RationalFunction(MPoly n, MPoly d);
    Complex eval(const std::vector<std::optional<Complex>>& bindings) const;
};

/// Outcome of an exact identity check. On failure, `witness` carries up to
/// the first ten offending terms of lhs - rhs in graded-lex order.
struct IdentityReport {
    bool pass = false;
    std::string name;
    std::size_t offending_terms = 0;
    std::string witness;
};

IdentityReport identity_check(const std::string& name, const MPoly& lhs, const MPoly& rhs);

/// Parses the canonical grammar: terms joined by +/-, each a signed integer
/// coefficient and a power product such as 3*a^2*b*c. Whitespace-insensitive;
/// newlines allowed anywhere between tokens.
MPoly parse_poly(const std::string& src, const VarContextPtr& ctx);

} // namespace k3atlas::xp

#endif
