#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/numeric.hpp"
#include "twistlab/prng.hpp"

namespace twistlab {
namespace grp {

// A group presented operationally: total multiplication, inversion, identity,
// and a canonical form making equality decidable. Elements must be regular
// value types ordered by <, so they can live in std::set.
template <typename G>
concept GroupOracle = requires(const G g, const typename G::Elem a, const typename G::Elem b) {
    typename G::Elem;
    { g.mul(a, b) } -> std::same_as<typename G::Elem>;
    { g.inv(a) } -> std::same_as<typename G::Elem>;
    { g.id() } -> std::same_as<typename G::Elem>;
    { g.canon(a) } -> std::same_as<typename G::Elem>;
    { g.name() } -> std::convertible_to<std::string>;
    { g.str(a) } -> std::convertible_to<std::string>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
};

template <typename G>
concept FiniteGroupOracle = GroupOracle<G> && requires(const G g) {
    { g.enumerate() } -> std::same_as<std::vector<typename G::Elem>>;
};

template <GroupOracle G>
typename G::Elem power(const G& g, typename G::Elem x, std::int64_t n) {
    if (n < 0) {
        x = g.inv(x);
        n = -n;
    }
    auto acc = g.id();
    while (n > 0) {
        if (n & 1) acc = g.mul(acc, x);
        x = g.mul(x, x);
        n >>= 1;
    }
    return g.canon(acc);
}

// --- Zoo -------------------------------------------------------------------

class ZdGroup {
public:
    using Elem = std::vector<std::int64_t>;

    explicit ZdGroup(std::size_t d) : d_(d) {
        if (d == 0) throw std::invalid_argument("Z^d needs d >= 1");
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem r(d_);
        for (std::size_t i = 0; i < d_; ++i) r[i] = a[i] + b[i];
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r(d_);
        for (std::size_t i = 0; i < d_; ++i) r[i] = -a[i];
        return r;
    }
    Elem id() const { return Elem(d_, 0); }
    Elem canon(const Elem& a) const { return a; }
    std::string name() const { return "Z^" + std::to_string(d_); }
    std::string str(const Elem& a) const {
        std::string s = "(";
        for (std::size_t i = 0; i < d_; ++i) s += (i ? "," : "") + std::to_string(a[i]);
        return s + ")";
    }
    std::size_t dim() const { return d_; }
    Elem basis(std::size_t i) const {
        Elem e(d_, 0);
        e.at(i) = 1;
        return e;
    }
    Elem random_element(Prng& rng, std::int64_t magnitude) const {
        Elem e(d_);
        for (auto& c : e) c = rng.range(-magnitude, magnitude);
        return e;
    }

private:
    std::size_t d_;
};

class ZnGroup {
public:
    using Elem = std::int64_t;

    explicit ZnGroup(std::int64_t n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Z/n needs n >= 1");
    }

    Elem mul(Elem a, Elem b) const { return canon(a + b); }
    Elem inv(Elem a) const { return canon(-a); }
    Elem id() const { return 0; }
    Elem canon(Elem a) const {
        Elem r = a % n_;
        return r < 0 ? r + n_ : r;
    }
    std::string name() const { return "Z/" + std::to_string(n_); }
    std::string str(Elem a) const { return std::to_string(a); }
    std::vector<Elem> enumerate() const {
        std::vector<Elem> all(static_cast<std::size_t>(n_));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::int64_t modulus() const { return n_; }
    Elem random_element(Prng& rng, std::int64_t) const { return rng.range(0, n_ - 1); }

private:
    std::int64_t n_;
};

// Symmetries of the regular n-gon as pairs (rotation, flip).
class DihedralGroup {
public:
    using Elem = std::pair<std::int64_t, int>;

    explicit DihedralGroup(std::int64_t n) : n_(n) {
        if (n < 1) throw std::invalid_argument("D_n needs n >= 1");
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::int64_t rot = a.first + (a.second ? -b.first : b.first);
        return canon({rot, a.second ^ b.second});
    }
    Elem inv(const Elem& a) const { return a.second ? a : canon({-a.first, 0}); }
    Elem id() const { return {0, 0}; }
    Elem canon(const Elem& a) const {
        std::int64_t r = a.first % n_;
        if (r < 0) r += n_;
        return {r, a.second & 1};
    }
    std::string name() const { return "D_" + std::to_string(n_); }
    std::string str(const Elem& a) const {
        return (a.second ? "sr^" : "r^") + std::to_string(a.first);
    }
    std::vector<Elem> enumerate() const {
        std::vector<Elem> all;
        for (int s = 0; s < 2; ++s)
            for (std::int64_t r = 0; r < n_; ++r) all.push_back({r, s});
        return all;
    }
    std::int64_t sides() const { return n_; }
    Elem random_element(Prng& rng, std::int64_t) const {
        return {rng.range(0, n_ - 1), static_cast<int>(rng.range(0, 1))};
    }

private:
    std::int64_t n_;
};

// Permutations of {0,..,m-1} stored as image vectors; composition acts left.
class SymmetricGroup {
public:
    using Elem = std::vector<std::uint8_t>;

    explicit SymmetricGroup(std::size_t m) : m_(m) {
        if (m < 1 || m > 8) throw std::invalid_argument("S_m supported for 1 <= m <= 8");
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = a[b[i]];
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[a[i]] = static_cast<std::uint8_t>(i);
        return r;
    }
    Elem id() const {
        Elem e(m_);
        std::iota(e.begin(), e.end(), 0);
        return e;
    }
    Elem canon(const Elem& a) const { return a; }
    std::string name() const { return "S_" + std::to_string(m_); }
    std::string str(const Elem& a) const {
        std::string s = "[";
        for (std::size_t i = 0; i < m_; ++i) s += (i ? " " : "") + std::to_string(a[i]);
        return s + "]";
    }
    std::vector<Elem> enumerate() const {
        std::vector<Elem> all;
        Elem e = id();
        do all.push_back(e);
        while (std::next_permutation(e.begin(), e.end()));
        return all;
    }
    std::size_t degree() const { return m_; }
    Elem transposition(std::size_t i, std::size_t j) const {
        Elem e = id();
        std::swap(e.at(i), e.at(j));
        return e;
    }
    Elem cycle() const {
        Elem e(m_);
        for (std::size_t i = 0; i < m_; ++i) e[i] = static_cast<std::uint8_t>((i + 1) % m_);
        return e;
    }
    Elem random_element(Prng& rng, std::int64_t) const {
        Elem e = id();
        for (std::size_t i = m_; i > 1; --i)
            std::swap(e[i - 1], e[rng.below(i)]);
        return e;
    }

private:
    std::size_t m_;
};

// Free group on a, b. Elements are reduced words over letters +-1 (a) and
// +-2 (b); canonical form is the free reduction.
class FreeF2 {
public:
    using Elem = std::vector<std::int8_t>;

    Elem mul(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (std::int8_t l : b) {
            if (!r.empty() && r.back() == -l)
                r.pop_back();
            else
                r.push_back(l);
        }
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r(a.rbegin(), a.rend());
        for (auto& l : r) l = static_cast<std::int8_t>(-l);
        return r;
    }
    Elem id() const { return {}; }
    Elem canon(const Elem& a) const {
        Elem r;
        for (std::int8_t l : a) {
            if (l == 0 || l > 2 || l < -2) throw std::invalid_argument("bad letter in F2 word");
            if (!r.empty() && r.back() == -l)
                r.pop_back();
            else
                r.push_back(l);
        }
        return r;
    }
    std::string name() const { return "F_2"; }
    std::string str(const Elem& a) const {
        if (a.empty()) return "1";
        std::string s;
        for (std::int8_t l : a) s += (l == 1 ? "a" : l == -1 ? "A" : l == 2 ? "b" : "B");
        return s;
    }
    Elem letter(std::int8_t l) const { return {l}; }
    Elem random_element(Prng& rng, std::int64_t magnitude) const {
        static constexpr std::int8_t alphabet[4] = {1, -1, 2, -2};
        Elem w;
        std::int64_t len = rng.range(0, magnitude);
        for (std::int64_t i = 0; i < len; ++i) {
            std::int8_t l = alphabet[rng.below(4)];
            if (!w.empty() && w.back() == -l)
                w.pop_back();
            else
                w.push_back(l);
        }
        return w;
    }
};

// Integer Heisenberg group: triples (a, b, c) standing for the unitriangular
// matrix with a, b above the diagonal and c in the corner.
class HeisenbergGroup {
public:
    using Elem = std::array<std::int64_t, 3>;

    Elem mul(const Elem& x, const Elem& y) const {
        return {x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]};
    }
    Elem inv(const Elem& x) const { return {-x[0], -x[1], x[0] * x[1] - x[2]}; }
    Elem id() const { return {0, 0, 0}; }
    Elem canon(const Elem& x) const { return x; }
    std::string name() const { return "Heisenberg"; }
    std::string str(const Elem& x) const {
        return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
               std::to_string(x[2]) + ")";
    }
    Elem random_element(Prng& rng, std::int64_t magnitude) const {
        return {rng.range(-magnitude, magnitude), rng.range(-magnitude, magnitude),
                rng.range(-magnitude, magnitude)};
    }
};

// --- Generating sets and subsets --------------------------------------------

template <GroupOracle G>
struct Generator {
    typename G::Elem elem;
    std::optional<std::int64_t> order;  // empty = infinite
    std::string label;
};

// S of the probe machinery. in_closure is the membership predicate for the
// conjugation closure of the set; it is only consulted when
// conjugation_closed is asserted.
template <GroupOracle G>
struct GeneratingSet {
    std::vector<Generator<G>> gens;
    bool conjugation_closed = false;
    std::function<bool(const G&, const typename G::Elem&)> in_closure;

    // Declared orders are promises; check them by brute iteration.
    void validate(const G& g) const {
        for (const auto& gen : gens) {
            if (!gen.order) continue;
            const std::int64_t d = *gen.order;
            if (d < 1) throw std::invalid_argument("declared order must be >= 1");
            auto acc = g.id();
            for (std::int64_t k = 1; k <= d; ++k) {
                acc = g.canon(g.mul(acc, gen.elem));
                const bool is_id = acc == g.id();
                if (k < d && is_id)
                    throw std::invalid_argument("generator " + gen.label + " has order < declared");
                if (k == d && !is_id)
                    throw std::invalid_argument("generator " + gen.label + " order mismatch");
            }
        }
    }

    bool all_orders_finite() const {
        return std::all_of(gens.begin(), gens.end(), [](const Generator<G>& x) {
            return x.order.has_value();
        });
    }
};

template <GroupOracle G>
struct Subset {
    std::string label;
    std::function<bool(const typename G::Elem&)> contains;
};

// Left translate h^-1 U = {a : h a in U}; used to probe translation
// invariance of the openness verdict.
template <GroupOracle G>
Subset<G> translate(const G& g, const Subset<G>& u, const typename G::Elem& h) {
    auto pred = u.contains;
    auto hh = h;
    const G* gp = &g;
    return Subset<G>{"translate(" + u.label + ")", [gp, pred, hh](const typename G::Elem& a) {
                         return pred(gp->canon(gp->mul(hh, a)));
                     }};
}

template <GroupOracle G>
Subset<G> intersect(const Subset<G>& u, const Subset<G>& v) {
    auto cu = u.contains;
    auto cv = v.contains;
    return Subset<G>{u.label + " & " + v.label,
                     [cu, cv](const typename G::Elem& a) { return cu(a) && cv(a); }};
}

// --- Standard generating sets ------------------------------------------------

inline GeneratingSet<ZdGroup> standard_generators(const ZdGroup& g) {
    GeneratingSet<ZdGroup> s;
    for (std::size_t i = 0; i < g.dim(); ++i)
        s.gens.push_back({g.basis(i), std::nullopt, "e" + std::to_string(i + 1)});
    s.conjugation_closed = true;  // abelian: conjugation is trivial
    s.in_closure = [](const ZdGroup&, const ZdGroup::Elem&) { return true; };
    return s;
}

inline GeneratingSet<ZnGroup> standard_generators(const ZnGroup& g) {
    GeneratingSet<ZnGroup> s;
    s.gens.push_back({1, g.modulus(), "1"});
    s.conjugation_closed = true;
    s.in_closure = [](const ZnGroup&, const ZnGroup::Elem&) { return true; };
    return s;
}

// Two adjacent reflections; their product is the basic rotation.
inline GeneratingSet<DihedralGroup> reflection_generators(const DihedralGroup& g) {
    GeneratingSet<DihedralGroup> s;
    s.gens.push_back({{0, 1}, 2, "s"});
    if (g.sides() > 1) s.gens.push_back({{1, 1}, 2, "sr"});
    return s;
}

inline GeneratingSet<SymmetricGroup> coxeter_generators(const SymmetricGroup& g) {
    GeneratingSet<SymmetricGroup> s;
    for (std::size_t i = 0; i + 1 < g.degree(); ++i)
        s.gens.push_back({g.transposition(i, i + 1), 2,
                          "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")"});
    return s;
}

inline GeneratingSet<FreeF2> free_generators(const FreeF2& g) {
    GeneratingSet<FreeF2> s;
    s.gens.push_back({g.letter(1), std::nullopt, "a"});
    s.gens.push_back({g.letter(2), std::nullopt, "b"});
    return s;
}

// All conjugates of {a, a^-1, b, b^-1}: closure membership is "cyclically
// reduces to a single letter".
inline GeneratingSet<FreeF2> conjugate_closed_free_generators(const FreeF2& g) {
    GeneratingSet<FreeF2> s = free_generators(g);
    s.conjugation_closed = true;
    s.in_closure = [](const FreeF2& gg, const FreeF2::Elem& w) {
        FreeF2::Elem r = gg.canon(w);
        std::size_t lo = 0, hi = r.size();
        while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
            ++lo;
            --hi;
        }
        return hi - lo == 1;
    };
    return s;
}

inline GeneratingSet<HeisenbergGroup> standard_generators(const HeisenbergGroup&) {
    GeneratingSet<HeisenbergGroup> s;
    s.gens.push_back({{1, 0, 0}, std::nullopt, "x"});
    s.gens.push_back({{0, 1, 0}, std::nullopt, "y"});
    return s;
}

}  // namespace grp
}  // namespace twistlab
