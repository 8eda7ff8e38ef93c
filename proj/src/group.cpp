#include "parhox/group.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace parhox {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::string name, std::vector<std::string> labels)
    : n_(static_cast<int>(cayley.size())), name_(std::move(name)), labels_(std::move(labels)) {
    if (n_ == 0) fail(ErrorKind::InvalidInput, "group of order 0");
    if (n_ > 63) fail(ErrorKind::SizeLimit, "group order above 63 is not supported");
    table_.resize(static_cast<std::size_t>(n_ * n_));
    for (int a = 0; a < n_; ++a) {
        const auto& row = cayley[static_cast<std::size_t>(a)];
        if (static_cast<int>(row.size()) != n_) fail(ErrorKind::InvalidInput, "Cayley table is not square");
        for (int b = 0; b < n_; ++b) {
            int c = row[static_cast<std::size_t>(b)];
            if (c < 0 || c >= n_) fail(ErrorKind::InvalidInput, "Cayley entry out of range");
            table_[static_cast<std::size_t>(a * n_ + b)] = c;
        }
    }
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a) fail(ErrorKind::InvalidInput, "element 0 is not the identity");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    fail(ErrorKind::InvalidInput, "Cayley table is not associative");
    inverse_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) inverse_[static_cast<std::size_t>(a)] = b;
        if (inverse_[static_cast<std::size_t>(a)] < 0) fail(ErrorKind::InvalidInput, "element without inverse");
    }
    if (labels_.empty()) {
        for (int g = 0; g < n_; ++g) labels_.push_back(g == 0 ? "1" : "g" + std::to_string(g));
    }
    if (static_cast<int>(labels_.size()) != n_) fail(ErrorKind::InvalidInput, "label count differs from order");
}

std::vector<std::vector<int>> FiniteGroup::cayley() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = mul(a, b);
    return t;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
        labels.push_back(a == 0 ? "1" : a == 1 ? "t" : "t^" + std::to_string(a));
    }
    return FiniteGroup(t, "Z" + std::to_string(n), labels);
}

FiniteGroup FiniteGroup::klein_four() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
    return FiniteGroup(t, "Z2xZ2", {"1", "a", "b", "ab"});
}

FiniteGroup FiniteGroup::symmetric3() { return from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3"); }

namespace {

std::string cycle_label(const std::vector<int>& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ")";
    }
    return out.empty() ? "1" : out;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens, std::string name) {
    if (gens.empty()) return FiniteGroup({{0}}, std::move(name));
    const std::size_t k = gens.front().size();
    for (const auto& g : gens) {
        if (g.size() != k) fail(ErrorKind::InvalidInput, "permutations of different degrees");
        std::vector<int> s = g;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < k; ++i)
            if (s[i] != static_cast<int>(i)) fail(ErrorKind::InvalidInput, "generator is not a permutation");
    }
    auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(k);
        for (std::size_t x = 0; x < k; ++x) r[x] = p[static_cast<std::size_t>(q[x])];
        return r;
    };
    std::vector<int> id(k);
    for (std::size_t i = 0; i < k; ++i) id[i] = static_cast<int>(i);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    std::queue<std::size_t> todo;
    todo.push(0);
    while (!todo.empty()) {
        std::size_t i = todo.front();
        todo.pop();
        for (const auto& g : gens) {
            auto p = compose(g, elems[i]);
            if (index.count(p)) continue;
            if (elems.size() >= 63) fail(ErrorKind::SizeLimit, "permutation group order above 63");
            index[p] = static_cast<int>(elems.size());
            elems.push_back(p);
            todo.push(elems.size() - 1);
        }
    }
    const std::size_t n = elems.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(cycle_label(elems[a]));
        for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
    }
    return FiniteGroup(t, std::move(name), labels);
}

Subset translate(const FiniteGroup& G, int g, Subset s) {
    Subset out = 0;
    for (int x = 0; x < G.order(); ++x)
        if (contains(s, x)) out |= singleton(G.mul(g, x));
    return out;
}

std::vector<int> elements_of(Subset s) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (contains(s, i)) out.push_back(i);
    return out;
}

ExelElement exel_product(const FiniteGroup& G, const ExelElement& x, const ExelElement& y) {
    return {x.set | translate(G, x.g, y.set), G.mul(x.g, y.g)};
}

ExelElement exel_star(const FiniteGroup& G, const ExelElement& x) {
    int gi = G.inv(x.g);
    return {translate(G, gi, x.set), gi};
}

ExelElement word_to_exel(const FiniteGroup& G, const std::vector<ExelSymbol>& word) {
    ExelElement acc;
    for (const auto& s : word) {
        if (s.g < 0 || s.g >= G.order()) fail(ErrorKind::InvalidInput, "symbol outside the group");
        ExelElement x = s.kind == ExelSymbol::Generator ? ExelElement{singleton(0) | singleton(s.g), s.g}
                                                        : ExelElement{singleton(0) | singleton(s.g), 0};
        acc = exel_product(G, acc, x);
    }
    return acc;
}

std::size_t exel_size_formula(int n) {
    if (n <= 1) return 1;
    return static_cast<std::size_t>(n - 1) * (std::size_t{1} << (n - 2)) + (std::size_t{1} << (n - 1));
}

ExelMonoid::ExelMonoid(GroupPtr G, std::size_t limit) : group_(std::move(G)) {
    const FiniteGroup& grp = *group_;
    const int n = grp.order();
    if (exel_size_formula(n) > limit)
        fail(ErrorKind::SizeLimit, "S(G) has " + std::to_string(exel_size_formula(n)) + " elements, cap is " +
                                       std::to_string(limit));
    for (int g = 0; g < n; ++g) {
        Subset fixed = singleton(0) | singleton(g);
        std::vector<int> free;
        for (int x = 1; x < n; ++x)
            if (x != g) free.push_back(x);
        std::vector<Subset> sets;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
            Subset s = fixed;
            for (std::size_t b = 0; b < free.size(); ++b)
                if ((m >> b) & 1u) s |= singleton(free[b]);
            sets.push_back(s);
        }
        std::sort(sets.begin(), sets.end());
        for (auto s : sets) elems_.push_back({s, g});
    }
    const std::size_t N = elems_.size();
    table_.resize(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            long k = index_of(exel_product(grp, elems_[i], elems_[j]));
            table_[i * N + j] = static_cast<std::size_t>(k);
        }
    star_.resize(N);
    for (std::size_t i = 0; i < N; ++i) star_[i] = static_cast<std::size_t>(index_of(exel_star(grp, elems_[i])));
}

long ExelMonoid::index_of(const ExelElement& x) const {
    auto key = [](const ExelElement& e) { return std::make_pair(e.g, e.set); };
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x,
                               [&](const ExelElement& a, const ExelElement& b) { return key(a) < key(b); });
    if (it == elems_.end() || *it != x) return -1;
    return it - elems_.begin();
}

std::size_t ExelMonoid::generator(int g) const {
    return static_cast<std::size_t>(index_of({singleton(0) | singleton(g), g}));
}

std::size_t ExelMonoid::idempotent(int h) const {
    return static_cast<std::size_t>(index_of({singleton(0) | singleton(h), 0}));
}

std::string ExelMonoid::label(std::size_t i) const {
    const auto& e = elems_[i];
    std::string s = "({";
    bool first = true;
    for (int x : elements_of(e.set)) {
        if (!first) s += ",";
        s += group_->label(x);
        first = false;
    }
    return s + "}," + group_->label(e.g) + ")";
}

ExelMonoid enumerate_exel(GroupPtr G, std::size_t limit) { return ExelMonoid(std::move(G), limit); }

}  // namespace parhox
