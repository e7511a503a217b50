#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "satlen/errors.hpp"

namespace satlen {

inline constexpr std::size_t kMaxVariables = 24;

/// Exponent vector with inline storage. Entries beyond the ring's variable
/// count are always zero, so comparisons never need the count.
class Monomial {
public:
    using exponent_type = std::uint16_t;

    Monomial() = default;

    static Monomial from_exponents(std::span<const int> exps) {
        if (exps.size() > kMaxVariables)
            throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
        return m;
    }

    static Monomial variable(std::size_t index, int power = 1) {
        Monomial m;
        m.set(index, power);
        return m;
    }

    int operator[](std::size_t i) const noexcept { return exps_[i]; }
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, int e) {
        if (i >= kMaxVariables) throw InputError("variable index out of range");
        if (e < 0 || e > std::numeric_limits<exponent_type>::max())
            throw ComputationLimit("exponent overflow");
        degree_ += e - exps_[i];
        exps_[i] = static_cast<exponent_type>(e);
    }

    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Precondition: divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const noexcept {
        Monomial q;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            q.exps_[i] = static_cast<exponent_type>(exps_[i] - divisor.exps_[i]);
        q.degree_ = degree_ - divisor.degree_;
        return q;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial p;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            int e = int(a.exps_[i]) + int(b.exps_[i]);
            if (e > std::numeric_limits<exponent_type>::max()) throw ComputationLimit("exponent overflow");
            p.exps_[i] = static_cast<exponent_type>(e);
        }
        p.degree_ = a.degree_ + b.degree_;
        return p;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial l;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            l.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            l.degree_ += l.exps_[i];
        }
        return l;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
        return true;
    }

    /// Structural order used for canonical containers; not a term order.
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
        return h;
    }

    /// Moves every exponent `shift` slots to the right, freeing front slots.
    Monomial shifted(std::size_t shift) const {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (exps_[i] == 0) continue;
            if (i + shift >= kMaxVariables) throw InputError("too many variables after shift");
            m.exps_[i + shift] = exps_[i];
        }
        m.degree_ = degree_;
        return m;
    }

    Monomial unshifted(std::size_t shift) const noexcept {
        Monomial m;
        for (std::size_t i = shift; i < kMaxVariables; ++i) m.exps_[i - shift] = exps_[i];
        for (std::size_t i = 0; i < kMaxVariables; ++i) m.degree_ += m.exps_[i];
        return m;
    }

    Monomial swapped(std::size_t a, std::size_t b) const noexcept {
        Monomial m = *this;
        std::swap(m.exps_[a], m.exps_[b]);
        return m;
    }

private:
    std::array<exponent_type, kMaxVariables> exps_{};
    int degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { GRevLex, Lex, BlockElimination };

/// A term order. Block elimination compares the front block by graded
/// reverse lex first and breaks ties with graded reverse lex on the rest.
class MonomialOrder {
public:
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GRevLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
    static MonomialOrder elimination(int front_block) {
        if (front_block < 1) throw InputError("elimination block size must be positive");
        return MonomialOrder(OrderKind::BlockElimination, front_block);
    }

    OrderKind kind() const noexcept { return kind_; }
    int front_block() const noexcept { return block_; }

    void validate(std::size_t nvars) const {
        if (kind_ == OrderKind::BlockElimination && (block_ < 1 || std::size_t(block_) > nvars - 1))
            throw InputError("elimination block size " + std::to_string(block_) + " out of range [1, " +
                             std::to_string(nvars - 1) + "]");
    }

    /// Negative, zero or positive as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
        switch (kind_) {
        case OrderKind::Lex:
            for (std::size_t i = 0; i < nvars; ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case OrderKind::GRevLex:
            return grevlex_range(a, b, 0, nvars, a.degree(), b.degree());
        case OrderKind::BlockElimination: {
            std::size_t k = static_cast<std::size_t>(block_);
            int da = 0, db = 0;
            for (std::size_t i = 0; i < k; ++i) da += a[i], db += b[i];
            if (int c = grevlex_range(a, b, 0, k, da, db); c != 0) return c;
            return grevlex_range(a, b, k, nvars, a.degree() - da, b.degree() - db);
        }
        }
        return 0;
    }

    std::string name() const {
        switch (kind_) {
        case OrderKind::GRevLex: return "grevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::BlockElimination: return "elim" + std::to_string(block_);
        }
        return "?";
    }

    static MonomialOrder from_name(const std::string& name) {
        if (name == "grevlex") return grevlex();
        if (name == "lex") return lex();
        if (name.rfind("elim", 0) == 0) return elimination(std::stoi(name.substr(4)));
        throw InputError("unknown monomial order '" + name + "'");
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
    friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(OrderKind k, int block) : kind_(k), block_(block) {}

    static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, int da, int db) {
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }

    OrderKind kind_;
    int block_;
};

/// All exponent vectors of total degree `degree` in `nvars` variables,
/// in descending lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<int> e(nvars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, degree);
    return out;
}

} // namespace satlen
