#ifndef KERIND_GVIEW_HPP
#define KERIND_GVIEW_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kerind/action.hpp"
#include "kerind/group.hpp"
#include "kerind/matrix.hpp"
#include "kerind/ring.hpp"

namespace kerind {

// Coefficient element: row-major matrix entries for GL/SL, a single unit
// for U, a single group label for abstract coefficient groups.
using XElem = std::vector<Elem>;

enum class CoeffKind { GL, SL, U, Abstract };

// A G-group of coefficients: GL_n(S), SL_n(S) or U(S) carrying the action
// of G on S entrywise, or an explicit finite group with a G-action table.
class CoeffGroup {
public:
    CoeffGroup() = default;

    static CoeffGroup gl(Action act, std::uint32_t n);
    static CoeffGroup sl(Action act, std::uint32_t n);
    static CoeffGroup units(Action act);
    // gen_tables[i]: automorphism of x effected by g.generators()[i];
    // verified and extended to all of G.
    static CoeffGroup abstract(Group g, Group x, std::vector<std::vector<GElem>> gen_tables);

    bool valid() const { return impl_ != nullptr; }
    CoeffKind kind() const;
    bool matrix_kind() const { return kind() != CoeffKind::Abstract; }
    std::uint32_t level() const;  // n for GL/SL, 1 for U, 0 for abstract
    const Group& acting_group() const;
    const Action& action() const;  // matrix kinds only
    const Ring& ring() const;      // matrix kinds only

    XElem identity() const;
    XElem mul(const XElem& a, const XElem& b) const;
    XElem inv(const XElem& a) const;
    XElem act(GElem g, const XElem& a) const;
    bool is_member(const XElem& a) const;
    bool action_is_trivial() const;

    // Complete deterministic enumeration; std::nullopt when the cap or the
    // scan budget is exceeded.  Cached after the first successful call.
    const std::vector<XElem>* enumerate(std::uint64_t cap) const;

    Matrix to_matrix(const XElem& a) const;
    XElem from_matrix(const Matrix& m) const;
    std::string x_str(const XElem& a) const;

    // Same coefficient designation over the same action at another level.
    CoeffGroup at_level(std::uint32_t n) const;

    // Same coefficients viewed along a subgroup of the acting group.
    CoeffGroup restricted(const SubgroupEmbedding& sub) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit CoeffGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

}  // namespace kerind

#endif
