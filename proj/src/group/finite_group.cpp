#include "coprod/group/finite_group.hpp"

#include "coprod/errors.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace coprod {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<ElemIndex>> table) {
    const std::size_t n = labels.size();
    if (n == 0) throw ValidationError("group must have at least one element");
    if (table.size() != n) throw ValidationError("Cayley table row count differs from label count");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != n) throw ValidationError("duplicate element labels");
    }
    std::vector<ElemIndex> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n)
            throw ValidationError("Cayley table row " + std::to_string(i) + " has the wrong length");
        for (ElemIndex v : table[i]) {
            if (v >= n) throw ValidationError("Cayley table entry out of range: " + std::to_string(v));
            flat.push_back(v);
        }
    }
    // Latin square.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> row(n), col(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (row[flat[i * n + j]] || col[flat[j * n + i]])
                throw ValidationError("Cayley table is not a Latin square (line " + std::to_string(i) + ")");
            row[flat[i * n + j]] = true;
            col[flat[j * n + i]] = true;
        }
    }
    // Identity.
    std::optional<ElemIndex> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = flat[e * n + x] == x && flat[x * n + e] == x;
        if (ok) id = static_cast<ElemIndex>(e);
    }
    if (!id) throw ValidationError("Cayley table has no identity element");
    // Associativity.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t ab = flat[a * n + b];
            for (std::size_t c = 0; c < n; ++c) {
                if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
                    throw ValidationError("Cayley table is not associative at (" + labels[a] + ", " +
                                          labels[b] + ", " + labels[c] + ")");
                }
            }
        }
    FiniteGroup g;
    g.labels_ = std::move(labels);
    g.table_ = std::move(flat);
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::trusted(std::vector<std::string> labels, std::vector<ElemIndex> flat) {
    FiniteGroup g;
    g.labels_ = std::move(labels);
    g.table_ = std::move(flat);
    g.finish();
    return g;
}

void FiniteGroup::finish() {
    const std::size_t n = order();
    for (std::size_t e = 0; e < n; ++e) {
        if (table_[e * n + e] == e) {
            identity_ = static_cast<ElemIndex>(e);
            break;
        }
    }
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a * n + b] == identity_) {
                inverse_[a] = static_cast<ElemIndex>(b);
                break;
            }
}

ElemIndex FiniteGroup::pow(ElemIndex a, std::uint64_t k) const {
    ElemIndex r = identity_;
    ElemIndex base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

std::uint64_t FiniteGroup::element_order(ElemIndex a) const {
    std::uint64_t k = 1;
    for (ElemIndex x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<ElemIndex> FiniteGroup::find(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<ElemIndex>(i);
    return std::nullopt;
}

ElemIndex FiniteGroup::index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw ValidationError("unknown element label '" + label + "'");
    return *i;
}

std::vector<std::vector<ElemIndex>> FiniteGroup::table() const {
    const std::size_t n = order();
    std::vector<std::vector<ElemIndex>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i].assign(table_.begin() + i * n, table_.begin() + (i + 1) * n);
    return rows;
}

ElemIndex FiniteGroup::first_nonidentity() const {
    for (std::size_t i = 0; i < order(); ++i)
        if (i != identity_) return static_cast<ElemIndex>(i);
    throw ValidationError("trivial group has no non-identity element");
}

std::uint64_t element_order(const GroupElement& x) { return x.group->element_order(x.index); }

std::string cycle_label(const Permutation& perm) {
    std::ostringstream os;
    std::vector<bool> seen(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i + 1) continue;
        os << "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : " ") << j + 1;
            first = false;
            j = perm[j] - 1;
        }
        os << ")";
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

FiniteGroup group_from_permutations(const std::vector<Permutation>& generators, std::size_t cap) {
    std::size_t degree = 0;
    for (const auto& g : generators) degree = std::max(degree, g.size());
    auto extend = [degree](const Permutation& p) {
        Permutation q = p;
        for (std::size_t i = q.size(); i < degree; ++i) q.push_back(static_cast<std::uint32_t>(i + 1));
        return q;
    };
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
        std::vector<bool> hit(g.size());
        for (auto v : g) {
            if (v < 1 || v > g.size() || hit[v - 1])
                throw ValidationError("generator is not a permutation of {1.." + std::to_string(g.size()) + "}");
            hit[v - 1] = true;
        }
        gens.push_back(extend(g));
    }
    auto compose = [degree](const Permutation& x, const Permutation& y) {
        Permutation r(degree);
        for (std::size_t i = 0; i < degree; ++i) r[i] = x[y[i] - 1];
        return r;
    };

    Permutation id(degree);
    std::iota(id.begin(), id.end(), 1u);
    std::vector<Permutation> elems{id};
    std::map<Permutation, ElemIndex> index{{id, 0}};
    std::deque<ElemIndex> queue{0};
    while (!queue.empty()) {
        ElemIndex x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Permutation y = compose(g, elems[x]);
            if (index.count(y)) continue;
            if (elems.size() >= cap)
                throw ValidationError("permutation closure exceeds cap of " + std::to_string(cap));
            index.emplace(y, static_cast<ElemIndex>(elems.size()));
            queue.push_back(static_cast<ElemIndex>(elems.size()));
            elems.push_back(std::move(y));
        }
    }
    const std::size_t n = elems.size();
    std::vector<ElemIndex> flat(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elems[a], elems[b]));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elems) labels.push_back(cycle_label(p));
    return FiniteGroup::trusted(std::move(labels), std::move(flat));
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
    const std::size_t g = G.order(), h = H.order(), n = g * h;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < h; ++b) labels.push_back("(" + G.label(a) + "," + H.label(b) + ")");
    std::vector<ElemIndex> flat(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto a = G.mul(x / h, y / h);
            auto b = H.mul(x % h, y % h);
            flat[x * n + y] = static_cast<ElemIndex>(a * h + b);
        }
    return FiniteGroup::trusted(std::move(labels), std::move(flat));
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw ValidationError("cyclic group of order 0");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k)
        labels.push_back(k == 0 ? "e" : (k == 1 ? "a" : "a^" + std::to_string(k)));
    std::vector<ElemIndex> flat(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) flat[x * n + y] = static_cast<ElemIndex>((x + y) % n);
    return FiniteGroup::trusted(std::move(labels), std::move(flat));
}

}  // namespace coprod
