#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "parhox/error.hpp"

namespace parhox {

// Finite group by Cayley table; the identity is element 0.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<int>> cayley, std::string name = {},
                std::vector<std::string> labels = {});

    static FiniteGroup cyclic(int n);
    static FiniteGroup klein_four();
    static FiniteGroup symmetric3();
    static FiniteGroup trivial() { return cyclic(1); }
    // Closure of the given permutations (images of 0..k-1) under composition.
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens, std::string name = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    bool squares_to_one(int g) const { return mul(g, g) == 0; }
    const std::string& name() const { return name_; }
    const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<std::vector<int>> cayley() const;

private:
    int n_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::string name_;
    std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

using Subset = std::uint64_t;  // bit i set iff element i belongs to the subset

inline bool contains(Subset s, int g) { return (s >> g) & 1u; }
inline Subset singleton(int g) { return Subset{1} << g; }
Subset translate(const FiniteGroup& G, int g, Subset s);  // gS
std::vector<int> elements_of(Subset s);

// Normal form (A, g) of Exel's monoid: {1, g} in A.
struct ExelElement {
    Subset set = 1;
    int g = 0;
    bool operator==(const ExelElement& o) const { return set == o.set && g == o.g; }
    bool operator!=(const ExelElement& o) const { return !(*this == o); }
};

ExelElement exel_product(const FiniteGroup& G, const ExelElement& x, const ExelElement& y);
ExelElement exel_star(const FiniteGroup& G, const ExelElement& x);

struct ExelSymbol {
    enum Kind { Generator, Idempotent } kind;
    int g;
};

// [g] -> ({1,g},g), e_h -> ({1,h},1); the empty word gives the identity.
ExelElement word_to_exel(const FiniteGroup& G, const std::vector<ExelSymbol>& word);

std::size_t exel_size_formula(int n);

class ExelMonoid {
public:
    ExelMonoid(GroupPtr G, std::size_t limit);

    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    std::size_t size() const { return elems_.size(); }
    const ExelElement& element(std::size_t i) const { return elems_[i]; }
    const std::vector<ExelElement>& elements() const { return elems_; }
    long index_of(const ExelElement& x) const;
    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * elems_.size() + j]; }
    std::size_t star(std::size_t i) const { return star_[i]; }
    std::size_t identity() const { return 0; }
    std::size_t generator(int g) const;   // [g]
    std::size_t idempotent(int h) const;  // e_h
    bool is_idempotent(std::size_t i) const { return elems_[i].g == 0; }
    std::string label(std::size_t i) const;

private:
    GroupPtr group_;
    std::vector<ExelElement> elems_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> star_;
};

// Throws SizeLimit when |S(G)| would exceed limit.
ExelMonoid enumerate_exel(GroupPtr G, std::size_t limit = 512);

}  // namespace parhox
