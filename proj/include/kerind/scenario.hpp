#ifndef KERIND_SCENARIO_HPP
#define KERIND_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kerind/action.hpp"
#include "kerind/gview.hpp"
#include "kerind/lattice.hpp"

namespace kerind {

class ScenarioError : public std::runtime_error {
public:
    ScenarioError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line, column;
};

struct TaskSpec {
    std::string command;
    std::vector<std::uint32_t> levels{1};
    std::string coeff = "gl";  // gl | sl | u | abstract
    std::optional<std::uint64_t> cap;
    std::optional<std::uint32_t> bound;
};

// A parsed, validated and fully constructed scenario: the ring, group and
// action (or lattice action / abstract coefficient group) are already built
// and verified by the time parsing returns.
struct Scenario {
    std::string name;
    int schema = 1;

    bool has_ring = false;
    Ring ring;
    Group group;
    Action action;
    bool allow_no_star = false;

    bool has_coeff = false;
    CoeffGroup abstract_view;

    bool has_lattice = false;
    LatticeAction lattice;

    std::vector<TaskSpec> tasks;
};

Scenario parse_scenario_text(const std::string& text, const std::string& source = "<text>");
Scenario parse_scenario_file(const std::string& path);

}  // namespace kerind

#endif
