// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gcodelab/ffield.hpp"

namespace gcodelab {

namespace {

[[noreturn]] void bad_table(const std::string& why) { throw std::invalid_argument("invalid group table: " + why); }

std::vector<Elem> closure_from(const std::vector<Elem>& table, std::size_t n, const std::vector<Elem>& seeds) {
    std::vector<bool> seen(n, false);
    std::vector<Elem> members{0};
    seen[0] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
        const Elem x = members[head];
        for (Elem s : seeds) {
            const Elem y = table[x * n + s];
            if (!seen[y]) {
                seen[y] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

Group Group::from_table(std::string name, std::vector<std::vector<Elem>> rows, std::vector<std::string> labels) {
    const std::size_t n = rows.size();
    if (n == 0) bad_table("empty");
    if (n > kMaxOrder) bad_table("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    for (const auto& r : rows) {
        if (r.size() != n) bad_table("table is not square");
        for (Elem x : r)
            if (x >= n) bad_table("entry " + std::to_string(x) + " out of range");
    }
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    }
    if (labels.size() != n) bad_table("label count does not match order");

    std::optional<Elem> identity;
    for (Elem e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (Elem j = 0; j < n && ok; ++j) ok = rows[e][j] == j && rows[j][e] == j;
        if (ok) identity = e;
    }
    if (!identity) bad_table("no identity element");

    // Relabel so that the identity has index 0.
    if (*identity != 0) {
        const Elem e = *identity;
        auto swap_index = [e](Elem x) { return x == e ? 0 : (x == 0 ? e : x); };
        std::vector<std::vector<Elem>> relabeled(n, std::vector<Elem>(n));
        for (Elem i = 0; i < n; ++i)
            for (Elem j = 0; j < n; ++j) relabeled[swap_index(i)][swap_index(j)] = swap_index(rows[i][j]);
        rows = std::move(relabeled);
        std::swap(labels[0], labels[e]);
    }

    Group g;
    g.name_ = std::move(name);
    g.order_ = n;
    g.labels_ = std::move(labels);
    g.table_.resize(n * n);
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) g.table_[i * n + j] = rows[i][j];

    std::vector<char> seen(n);
    for (Elem i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem j = 0; j < n; ++j) {
            if (seen[g.mul(i, j)]++) bad_table("row " + std::to_string(i) + " is not a permutation");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem j = 0; j < n; ++j) {
            if (seen[g.mul(j, i)]++) bad_table("column " + std::to_string(i) + " is not a permutation");
        }
    }

    g.inverse_.assign(n, 0);
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j)
            if (g.mul(i, j) == 0) g.inverse_[i] = j;

    // Greedy generating set of the Latin square.
    std::vector<bool> covered(n, false);
    covered[0] = true;
    for (Elem i = 1; i < n; ++i) {
        if (covered[i]) continue;
        g.generators_.push_back(i);
        for (Elem x : closure_from(g.table_, n, g.generators_)) covered[x] = true;
    }

    if (n <= 64) {
        for (Elem i = 0; i < n; ++i)
            for (Elem j = 0; j < n; ++j)
                for (Elem k = 0; k < n; ++k)
                    if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) bad_table("multiplication is not associative");
    } else {
        // Light's test: associativity on a generating set suffices.
        for (Elem a : g.generators_)
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y)
                    if (g.mul(g.mul(x, a), y) != g.mul(x, g.mul(a, y))) bad_table("multiplication is not associative");
    }
    for (Elem i = 0; i < n; ++i)
        if (g.mul(i, g.inverse_[i]) != 0 || g.mul(g.inverse_[i], i) != 0) bad_table("missing two-sided inverse");

    g.element_orders_.assign(n, 0);
    for (Elem i = 0; i < n; ++i) {
        std::size_t k = 1;
        for (Elem x = i; x != 0; x = g.mul(x, i)) ++k;
        g.element_orders_[i] = k;
    }
    return g;
}

std::vector<std::vector<Elem>> Group::table() const {
    std::vector<std::vector<Elem>> out(order_, std::vector<Elem>(order_));
    for (Elem i = 0; i < order_; ++i)
        for (Elem j = 0; j < order_; ++j) out[i][j] = mul(i, j);
    return out;
}

namespace {

void require_order(std::size_t n) {
    if (n == 0 || n > Group::kMaxOrder)
        throw std::invalid_argument("group order " + std::to_string(n) + " outside 1.." + std::to_string(Group::kMaxOrder));
}

std::string power_label(const std::string& base, std::size_t e) {
    if (e == 0) return "1";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

}  // namespace

GroupPtr make_cyclic(std::size_t n) {
    require_order(n);
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> labels(n);
    for (Elem i = 0; i < n; ++i) {
        labels[i] = power_label("r", i);
        for (Elem j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return std::make_shared<const Group>(Group::from_table("cyclic:" + std::to_string(n), std::move(t), std::move(labels)));
}

GroupPtr make_dihedral(std::size_t m) {
    if (m == 0) throw std::invalid_argument("dihedral group needs m >= 1");
    require_order(2 * m);
    const std::size_t n = 2 * m;
    // index i < m is r^i, index m + i is s r^i.
    auto decode = [m](Elem x) { return std::pair<std::size_t, std::size_t>{x / m, x % m}; };
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> labels(n);
    for (Elem x = 0; x < n; ++x) {
        auto [e1, a1] = decode(x);
        labels[x] = e1 ? (a1 ? "s" + power_label("r", a1) : "s") : power_label("r", a1);
        for (Elem y = 0; y < n; ++y) {
            auto [e2, a2] = decode(y);
            // s^e1 r^a1 s^e2 r^a2 = s^(e1+e2) r^(+-a1 + a2)
            const std::size_t a = ((e2 ? m - a1 : a1) + a2) % m;
            t[x][y] = ((e1 + e2) % 2) * m + a;
        }
    }
    return std::make_shared<const Group>(Group::from_table("dihedral:" + std::to_string(m), std::move(t), std::move(labels)));
}

GroupPtr make_symmetric(std::size_t k) {
    if (k == 0 || k > 5) throw std::invalid_argument("symmetric group supported for 1 <= k <= 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    const std::size_t n = perms.size();
    auto index_of = [&perms](const std::vector<std::size_t>& q) {
        return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> labels(n);
    std::vector<std::size_t> q(k);
    for (Elem a = 0; a < n; ++a) {
        labels[a] = "[";
        for (std::size_t i = 0; i < k; ++i) labels[a] += std::to_string(perms[a][i] + 1);
        labels[a] += "]";
        for (Elem b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < k; ++i) q[i] = perms[b][perms[a][i]];
            t[a][b] = index_of(q);
        }
    }
    return std::make_shared<const Group>(Group::from_table("symmetric:" + std::to_string(k), std::move(t), std::move(labels)));
}

GroupPtr make_quaternion8() {
    // Units 1, i, j, k as 0..3; index = 4 * sign + unit.
    static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign_product[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
    for (Elem x = 0; x < 8; ++x)
        for (Elem y = 0; y < 8; ++y) {
            const int ux = x % 4, uy = y % 4;
            const int sign = (static_cast<int>(x / 4) + static_cast<int>(y / 4) + sign_product[ux][uy]) % 2;
            t[x][y] = static_cast<Elem>(4 * sign + unit_product[ux][uy]);
        }
    std::vector<std::string> labels{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    return std::make_shared<const Group>(Group::from_table("quaternion8", std::move(t), std::move(labels)));
}

GroupPtr make_elementary_abelian(std::uint32_t p, std::size_t m) {
    if (!is_prime(p)) throw std::invalid_argument("elementary abelian group needs a prime p");
    std::size_t n = 1;
    for (std::size_t i = 0; i < m; ++i) {
        n *= p;
        require_order(n);
    }
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> labels(n);
    for (Elem x = 0; x < n; ++x) {
        std::string l = "(";
        std::size_t scale = n;
        for (std::size_t i = 0; i < m; ++i) {
            scale /= p;
            l += std::to_string((x / scale) % p);
            if (i + 1 < m) l += ",";
        }
        labels[x] = l + ")";
        for (Elem y = 0; y < n; ++y) {
            Elem z = 0;
            for (std::size_t s = 1; s < n; s *= p) z += ((x / s % p + y / s % p) % p) * s;
            t[x][y] = z;
        }
    }
    return std::make_shared<const Group>(Group::from_table(
        "elemabelian:" + std::to_string(p) + "," + std::to_string(m), std::move(t), std::move(labels)));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    const std::size_t na = a->order(), nb = b->order();
    if (na * nb > Group::kMaxOrder) throw std::invalid_argument("direct product order exceeds " + std::to_string(Group::kMaxOrder));
    const std::size_t n = na * nb;
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> labels(n);
    for (Elem x = 0; x < n; ++x) {
        labels[x] = "(" + a->label(x / nb) + "," + b->label(x % nb) + ")";
        for (Elem y = 0; y < n; ++y) t[x][y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
    }
    return std::make_shared<const Group>(Group::from_table(a->name() + "*" + b->name(), std::move(t), std::move(labels)));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members) : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Elem m : members_)
        if (m >= parent_->order()) throw std::invalid_argument("subgroup member out of range");
    if (!is_subgroup(*parent_, members_)) throw std::invalid_argument("element set is not a subgroup");
    if (parent_->order() % members_.size() != 0) throw std::logic_error("subgroup order does not divide group order");
    mask_.assign(parent_->order(), false);
    for (Elem m : members_) mask_[m] = true;
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::whole(GroupPtr parent) {
    std::vector<Elem> all(parent->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(parent), std::move(all));
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& seeds) {
    std::vector<bool> seen(g->order(), false);
    std::vector<Elem> members{0};
    seen[0] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (Elem s : seeds) {
            if (s >= g->order()) throw std::invalid_argument("generator index out of range");
            const Elem y = g->mul(members[head], s);
            if (!seen[y]) {
                seen[y] = true;
                members.push_back(y);
            }
        }
    }
    return Subgroup(g, std::move(members));
}

bool is_subgroup(const Group& g, const std::vector<Elem>& members) {
    std::vector<bool> in(g.order(), false);
    for (Elem m : members) {
        if (m >= g.order()) return false;
        in[m] = true;
    }
    if (!in[0]) return false;
    for (Elem a : members) {
        if (!in[g.inv(a)]) return false;
        for (Elem b : members)
            if (!in[g.mul(a, b)]) return false;
    }
    return true;
}

bool is_normal(const Group& g, const std::vector<Elem>& members) {
    std::vector<bool> in(g.order(), false);
    for (Elem m : members) in[m] = true;
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem h : members)
            if (!in[g.mul(g.mul(g.inv(x), h), x)]) return false;
    return true;
}

std::vector<std::vector<Elem>> right_cosets(const Subgroup& h) {
    const Group& g = *h.parent();
    std::vector<bool> covered(g.order(), false);
    std::vector<std::vector<Elem>> blocks;
    for (Elem rep = 0; rep < g.order(); ++rep) {
        if (covered[rep]) continue;
        std::vector<Elem> block;
        block.reserve(h.order());
        for (Elem x : h.members()) {
            const Elem y = g.mul(x, rep);
            covered[y] = true;
            block.push_back(y);
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::uint64_t p_part(std::uint64_t n, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p_part needs a prime");
    std::uint64_t part = 1;
    while (n != 0 && n % p == 0) {
        n /= p;
        part *= p;
    }
    return part;
}

std::uint64_t p_part(const Group& g, std::uint32_t p) { return p_part(g.order(), p); }

bool is_p_power(std::uint64_t n, std::uint32_t p) { return n != 0 && p_part(n, p) == n; }

bool is_p_group(const Group& g, std::uint32_t p) { return is_p_power(g.order(), p); }

std::optional<Subgroup> normal_p_complement(const GroupPtr& g, std::uint32_t p) {
    std::vector<Elem> members;
    for (Elem x = 0; x < g->order(); ++x)
        if (g->element_order(x) % p != 0) members.push_back(x);
    if (members.size() * p_part(*g, p) != g->order()) return std::nullopt;
    if (!is_subgroup(*g, members) || !is_normal(*g, members)) return std::nullopt;
    return Subgroup(g, std::move(members));
}

}  // namespace gcodelab
