#include "refsev/fock.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

namespace refsev {

std::string BasisVector::str() const {
    return "v_{" + a_part.str() + "," + b_part.str() + "}";
}

std::string GeneratorSymbol::str() const {
    std::ostringstream os;
    os << (kind == Kind::A ? "a" : "b") << "_{" << index << "}";
    return os.str();
}

FockState FockState::vacuum() { return basis(BasisVector{}); }

FockState FockState::basis(BasisVector v) {
    FockState s;
    s.terms_.emplace(std::move(v), RationalLaurentY(1));
    return s;
}

void FockState::add(const BasisVector& v, const RationalLaurentY& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(v, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalLaurentY FockState::coeff(const BasisVector& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? RationalLaurentY() : it->second;
}

FockState& FockState::operator+=(const FockState& rhs) {
    for (const auto& [v, c] : rhs.terms_) add(v, c);
    return *this;
}

FockState FockState::operator+(const FockState& rhs) const {
    FockState r = *this;
    r += rhs;
    return r;
}

FockState FockState::scaled(const RationalLaurentY& c) const {
    FockState r;
    if (c.is_zero()) return r;
    for (const auto& [v, coeff] : terms_) r.add(v, coeff * c);
    return r;
}

std::string FockState::dump() const {
    if (terms_.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [v, c] : terms_) os << c.str() << " * " << v.str() << "\n";
    return os.str();
}

FockState apply_generator(const FockState& s, GeneratorSymbol g) {
    if (g.index == 0) throw DomainError("generator index must be non-zero");
    FockState out;
    const int k = g.index < 0 ? -g.index : g.index;
    const bool creation = g.index < 0;
    for (const auto& [v, c] : s.terms()) {
        if (creation) {
            // Creation raises the multiplicity; the normalized basis absorbs
            // a factor (count+1).
            if (g.kind == GeneratorSymbol::Kind::A) {
                BasisVector w{v.a_part.with_part(k, +1), v.b_part};
                out.add(w, c * BigInt(v.a_part.count(k) + 1));
            } else {
                BasisVector w{v.a_part, v.b_part.with_part(k, +1)};
                out.add(w, c * BigInt(v.b_part.count(k) + 1));
            }
        } else {
            // An a-annihilator only pairs against b-type creators and vice
            // versa, producing the quantum integer [k].
            if (g.kind == GeneratorSymbol::Kind::A) {
                if (v.b_part.count(k) == 0) continue;
                BasisVector w{v.a_part, v.b_part.with_part(k, -1)};
                out.add(w, c * quantum_integer(k));
            } else {
                if (v.a_part.count(k) == 0) continue;
                BasisVector w{v.a_part.with_part(k, -1), v.b_part};
                out.add(w, c * quantum_integer(k));
            }
        }
    }
    return out;
}

RationalLaurentY inner_product(const FockState& s1, const FockState& s2) {
    RationalLaurentY total;
    for (const auto& [v, c1] : s1.terms()) {
        // <v_{mu,nu}|.> pairs only with v_{nu,mu}.
        BasisVector partner{v.b_part, v.a_part};
        auto it = s2.terms().find(partner);
        if (it == s2.terms().end()) continue;
        RationalLaurentY w(1);
        for (const Partition* part : {&v.a_part, &v.b_part}) {
            for (int i = 1; i <= part->max_part(); ++i) {
                long m = part->count(i);
                if (m == 0) continue;
                LaurentY qp(1);
                const LaurentY qi = quantum_integer(i);
                for (long t = 0; t < m; ++t) qp *= qi;
                w = w * RationalLaurentY(qp, factorial(m));
            }
        }
        total += c1 * it->second * w;
    }
    return total;
}

FockState b_diagonal_on_basis(const BasisVector& v) {
    FockState out;
    // b_{-k} b_k moves one part of size k from the a-side to the b-side.
    for (int k = 1; k <= v.a_part.max_part(); ++k) {
        if (v.a_part.count(k) == 0) continue;
        BasisVector w{v.a_part.with_part(k, -1), v.b_part.with_part(k, +1)};
        RationalLaurentY c =
            RationalLaurentY(quantum_integer(k)) * BigInt(v.b_part.count(k) + 1);
        out.add(w, c);
    }
    return out;
}

FockState apply_b_diagonal(const FockState& s) {
    FockState out;
    for (const auto& [v, c] : s.terms())
        out += b_diagonal_on_basis(v).scaled(c);
    return out;
}

namespace {

/// Enumerate sub-partitions nu <= bound (componentwise multiplicities),
/// invoking f(nu, annihilation coefficient prod_j [j]^nu_j / nu_j!).
void for_each_subpartition(const Partition& bound,
                           const std::function<void(const Partition&,
                                                    const RationalLaurentY&)>& f) {
    std::vector<long> counts(static_cast<size_t>(bound.max_part()), 0);
    std::function<void(int, RationalLaurentY)> rec =
        [&](int part, RationalLaurentY coeff) {
            if (part > bound.max_part()) {
                f(Partition::from_counts(counts), coeff);
                return;
            }
            RationalLaurentY c = coeff;
            const LaurentY qi = quantum_integer(part);
            for (long take = 0; take <= bound.count(part); ++take) {
                counts[static_cast<size_t>(part) - 1] = take;
                if (take > 0) c = c * qi * RationalLaurentY(LaurentY(1), BigInt(take));
                rec(part + 1, c);
            }
            counts[static_cast<size_t>(part) - 1] = 0;
        };
    rec(1, RationalLaurentY(1));
}

} // namespace

FockState divergence_on_basis(const BasisVector& v, int divergence,
                              long grading_cap) {
    FockState out;
    if (v.grading() - divergence > grading_cap) return out;
    // Sum of normalized a_{-mu} a_nu over weight(nu) - weight(mu) =
    // divergence: nu must annihilate into the b-part, mu lands in the a-part
    // with binomial renormalization.
    for_each_subpartition(
        v.b_part, [&](const Partition& nu, const RationalLaurentY& nu_coeff) {
            long mu_weight = nu.weight() - divergence;
            if (mu_weight < 0) return;
            Partition new_b = v.b_part;
            for (int j = 1; j <= nu.max_part(); ++j)
                if (nu.count(j)) new_b = new_b.with_part(j, -nu.count(j));
            for (const Partition& mu : partitions_of(mu_weight)) {
                BigInt binoms = 1;
                Partition new_a = v.a_part;
                for (int j = 1; j <= mu.max_part(); ++j) {
                    long mj = mu.count(j);
                    if (mj == 0) continue;
                    binoms *= binomial(v.a_part.count(j) + mj, mj);
                    new_a = new_a.with_part(j, mj);
                }
                out.add(BasisVector{new_a, new_b}, nu_coeff * binoms);
            }
        });
    return out;
}

FockState apply_divergence(const FockState& s, int divergence,
                           long grading_cap) {
    FockState out;
    for (const auto& [v, c] : s.terms())
        out += divergence_on_basis(v, divergence, grading_cap).scaled(c);
    return out;
}

FockOps::FockOps(long grading_cap, std::size_t max_states)
    : grading_cap_(grading_cap),
      max_states_(max_states ? max_states : default_max_states()) {}

std::size_t FockOps::default_max_states() {
    if (const char* env = std::getenv("REFSEV_GUARD_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

void FockOps::check_guard(const FockState& s) const {
    if (s.size() > max_states_)
        throw GuardError("state count guard exceeded (" +
                         std::to_string(s.size()) + " > " +
                         std::to_string(max_states_) + " basis vectors)");
}

FockState FockOps::apply_b_diagonal(const FockState& s) {
    FockState out;
    for (const auto& [v, c] : s.terms()) {
        auto it = b_cache_.find(v);
        if (it == b_cache_.end())
            it = b_cache_.emplace(v, b_diagonal_on_basis(v)).first;
        out += it->second.scaled(c);
    }
    check_guard(out);
    return out;
}

FockState FockOps::apply_divergence(const FockState& s, int divergence) {
    FockState out;
    for (const auto& [v, c] : s.terms()) {
        auto key = std::make_pair(v, divergence);
        auto it = div_cache_.find(key);
        if (it == div_cache_.end())
            it = div_cache_
                     .emplace(key,
                              divergence_on_basis(v, divergence, grading_cap_))
                     .first;
        out += it->second.scaled(c);
    }
    check_guard(out);
    return out;
}

} // namespace refsev
