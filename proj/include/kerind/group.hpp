#ifndef KERIND_GROUP_HPP
#define KERIND_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace kerind {

using GElem = std::uint32_t;

// Subgroups are sorted element lists containing the identity 0.
using Subgroup = std::vector<GElem>;

struct GroupQuotient;
struct SubgroupEmbedding;

class Group {
public:
    Group() = default;

    static Group cyclic(std::uint32_t m);
    static Group product(const std::vector<std::uint32_t>& orders);
    static Group symmetric(std::uint32_t k);  // k <= 5
    // Table is row-major n x n with element 0 the identity; group axioms are
    // verified and violations throw std::invalid_argument.
    static Group from_table(std::uint32_t n, std::vector<GElem> table,
                            std::uint32_t order_bound = 512);

    bool valid() const { return impl_ != nullptr; }
    std::uint32_t size() const;
    GElem op(GElem a, GElem b) const;
    GElem inv(GElem a) const;
    std::uint32_t order(GElem a) const;
    GElem pow(GElem a, std::uint64_t k) const;

    // Canonical minimal generating list (greedy over element labels).
    const std::vector<GElem>& generators() const;
    const std::vector<Subgroup>& subgroups() const;         // cached, all of them
    const std::vector<Subgroup>& cyclic_subgroups() const;  // cached
    Subgroup closure(std::vector<GElem> gens) const;
    bool is_normal(const Subgroup& h) const;
    bool is_cyclic() const { return order(canonical_generator()) == size(); }
    GElem canonical_generator() const;  // element of maximal order, least label

    GroupQuotient quotient(const Subgroup& n) const;
    SubgroupEmbedding as_group(const Subgroup& h) const;

    bool same_as(const Group& o) const { return impl_ == o.impl_; }

    struct Impl;

private:
    std::shared_ptr<const Impl> impl_;
    explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

struct GroupQuotient {
    Group group;
    std::vector<GElem> proj;  // parent elem -> quotient elem
};

struct SubgroupEmbedding {
    Group group;
    std::vector<GElem> embed;  // subgroup label -> parent label
};

}  // namespace kerind

#endif
