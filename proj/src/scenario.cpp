#include "kerind/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kerind {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> words;
    std::vector<int> columns;  // 1-based start column per word
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream is(text);
    std::string raw;
    int number = 0;
    while (std::getline(is, raw)) {
        ++number;
        Line line;
        line.number = number;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace((unsigned char)raw[i])) ++i;
            if (i >= raw.size() || raw[i] == '#') break;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace((unsigned char)raw[i])) ++i;
            line.words.push_back(raw.substr(start, i - start));
            line.columns.push_back(int(start) + 1);
        }
        if (!line.words.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

long parse_int(const Line& l, std::size_t idx) {
    if (idx >= l.words.size()) throw ScenarioError("integer expected", l.number, 1);
    try {
        std::size_t pos = 0;
        long v = std::stol(l.words[idx], &pos);
        if (pos != l.words[idx].size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ScenarioError("bad integer '" + l.words[idx] + "'", l.number, l.columns[idx]);
    }
}

Group parse_group(const Line& l, std::size_t idx) {
    if (idx >= l.words.size()) throw ScenarioError("group kind expected", l.number, 1);
    const std::string& kind = l.words[idx];
    if (kind == "cyclic") return Group::cyclic(std::uint32_t(parse_int(l, idx + 1)));
    if (kind == "product") {
        std::vector<std::uint32_t> orders;
        for (std::size_t i = idx + 1; i < l.words.size(); ++i)
            orders.push_back(std::uint32_t(parse_int(l, i)));
        if (orders.empty()) throw ScenarioError("product needs factors", l.number, l.columns[idx]);
        return Group::product(orders);
    }
    if (kind == "sym") return Group::symmetric(std::uint32_t(parse_int(l, idx + 1)));
    if (kind == "table") {
        std::uint32_t n = std::uint32_t(parse_int(l, idx + 1));
        std::vector<GElem> table;
        for (std::size_t i = idx + 2; i < l.words.size(); ++i)
            table.push_back(GElem(parse_int(l, i)));
        if (table.size() != std::size_t(n) * n)
            throw ScenarioError("group table needs n*n entries", l.number, l.columns[idx]);
        return Group::from_table(n, std::move(table));
    }
    throw ScenarioError("unknown group kind '" + kind + "'", l.number, l.columns[idx]);
}

// --- ring action rules -----------------------------------------------------

std::vector<Elem> identity_table(const Ring& s) {
    std::vector<Elem> t(s.size());
    for (Elem e = 0; e < s.size(); ++e) t[e] = e;
    return t;
}

std::vector<Elem> neg_x_table(const Ring& s) {
    // substitute x := -x on every atom: coefficient j picks up (-1)^j
    std::vector<Elem> t(s.size());
    for (Elem e = 0; e < s.size(); ++e) {
        auto c = s.coeffs(e);
        for (std::size_t a = 0; a < c.size(); ++a) {
            const std::uint32_t m = s.atoms()[a].modulus;
            for (std::size_t j = 1; j < c[a].size(); j += 2) c[a][j] = (m - c[a][j]) % m;
        }
        t[e] = s.from_coeffs(c);
    }
    return t;
}

std::vector<Elem> frobenius_table(const Ring& s) {
    // componentwise a |-> a^p with p the atom modulus
    std::vector<Elem> t(s.size());
    const auto& atoms = s.atoms();
    for (Elem e = 0; e < s.size(); ++e) {
        auto c = s.coeffs(e);
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            // embed the component alone, power it, read the component back
            std::vector<std::vector<std::uint32_t>> iso(atoms.size());
            for (std::size_t b = 0; b < atoms.size(); ++b)
                iso[b].assign(atoms[b].degree(), 0);
            iso[a] = c[a];
            Elem powed = s.pow(s.from_coeffs(iso), atoms[a].modulus);
            c[a] = s.coeffs(powed)[a];
        }
        t[e] = s.from_coeffs(c);
    }
    return t;
}

std::vector<Elem> atom_permute_table(const Ring& s, const std::vector<std::size_t>& where) {
    // where[i] = source atom index feeding target slot i
    const auto& atoms = s.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& a = atoms[i];
        const auto& b = atoms[where[i]];
        if (a.modulus != b.modulus || a.poly != b.poly)
            throw std::invalid_argument("atom permutation needs identical atoms");
    }
    std::vector<Elem> t(s.size());
    for (Elem e = 0; e < s.size(); ++e) {
        auto c = s.coeffs(e);
        std::vector<std::vector<std::uint32_t>> out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[where[i]];
        t[e] = s.from_coeffs(out);
    }
    return t;
}

std::vector<Elem> ring_rule_table(const Ring& s, const Line& l, std::size_t idx) {
    const std::string& rule = l.words[idx];
    if (rule == "identity") return identity_table(s);
    if (rule == "x->-x") return neg_x_table(s);
    if (rule == "frobenius") return frobenius_table(s);
    if (rule == "rot") {
        std::vector<std::size_t> where(s.atoms().size());
        for (std::size_t i = 0; i < where.size(); ++i) where[i] = (i + 1) % where.size();
        return atom_permute_table(s, where);
    }
    if (rule == "swap") {
        std::size_t i = std::size_t(parse_int(l, idx + 1)), j = std::size_t(parse_int(l, idx + 2));
        if (i >= s.atoms().size() || j >= s.atoms().size())
            throw ScenarioError("swap index out of range", l.number, l.columns[idx]);
        std::vector<std::size_t> where(s.atoms().size());
        for (std::size_t k = 0; k < where.size(); ++k) where[k] = k;
        std::swap(where[i], where[j]);
        return atom_permute_table(s, where);
    }
    if (rule == "perm") {
        std::vector<Elem> t;
        for (std::size_t i = idx + 1; i < l.words.size(); ++i) t.push_back(Elem(parse_int(l, i)));
        if (t.size() != s.size())
            throw ScenarioError("perm needs |S| entries", l.number, l.columns[idx]);
        return t;
    }
    throw ScenarioError("unknown action rule '" + rule + "'", l.number, l.columns[idx]);
}

std::vector<GElem> coeff_rule_table(const Group& x, const Line& l, std::size_t idx) {
    const std::string& rule = l.words[idx];
    if (rule == "identity") {
        std::vector<GElem> t(x.size());
        for (GElem e = 0; e < x.size(); ++e) t[e] = e;
        return t;
    }
    if (rule == "inv") {
        std::vector<GElem> t(x.size());
        for (GElem e = 0; e < x.size(); ++e) t[e] = x.inv(e);
        return t;
    }
    if (rule == "pow") {
        const long k = parse_int(l, idx + 1);
        std::vector<GElem> t(x.size());
        for (GElem e = 0; e < x.size(); ++e) t[e] = x.pow(e, std::uint64_t(k));
        return t;
    }
    if (rule == "perm") {
        std::vector<GElem> t;
        for (std::size_t i = idx + 1; i < l.words.size(); ++i) t.push_back(GElem(parse_int(l, i)));
        if (t.size() != x.size())
            throw ScenarioError("perm needs |X| entries", l.number, l.columns[idx]);
        return t;
    }
    throw ScenarioError("unknown coefficient rule '" + rule + "'", l.number, l.columns[idx]);
}

TaskSpec parse_task(const Line& l) {
    static const std::vector<std::string> commands = {"h1", "kernel", "oracle",
                                                      "pic", "coinvariants", "verify-theorem"};
    if (l.words.size() < 2) throw ScenarioError("task command expected", l.number, 1);
    TaskSpec t;
    t.command = l.words[1];
    if (std::find(commands.begin(), commands.end(), t.command) == commands.end())
        throw ScenarioError("unknown command '" + t.command + "'", l.number, l.columns[1]);
    for (std::size_t i = 2; i < l.words.size(); ++i) {
        const std::string& w = l.words[i];
        auto eq = w.find('=');
        if (eq == std::string::npos)
            throw ScenarioError("task parameter must be key=value", l.number, l.columns[i]);
        const std::string key = w.substr(0, eq), val = w.substr(eq + 1);
        auto bad = [&](const std::string& m) {
            return ScenarioError(m + " in '" + w + "'", l.number, l.columns[i]);
        };
        if (key == "n") {
            t.levels.clear();
            std::istringstream vs(val);
            std::string part;
            while (std::getline(vs, part, ','))
                t.levels.push_back(std::uint32_t(std::stoul(part)));
            if (t.levels.empty()) throw bad("empty level list");
        } else if (key == "x") {
            if (val != "gl" && val != "sl" && val != "u" && val != "abstract")
                throw bad("bad coefficient designation");
            t.coeff = val;
        } else if (key == "cap") {
            t.cap = std::stoull(val);
            if (*t.cap == 0) throw bad("cap must be positive");
        } else if (key == "bound") {
            t.bound = std::uint32_t(std::stoul(val));
            if (*t.bound == 0) throw bad("bound must be positive");
        } else {
            throw bad("unknown task parameter");
        }
    }
    return t;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& source) {
    auto lines = tokenize(text);
    Scenario sc;
    std::optional<std::string> ring_desc;
    std::optional<Line> group_line;
    std::vector<Line> action_lines, coeff_action_lines, lgen_lines;
    std::optional<Line> coeff_group_line;
    std::optional<std::uint32_t> lattice_rank;

    for (const auto& l : lines) {
        const std::string& key = l.words[0];
        if (key == "name") {
            if (l.words.size() != 2) throw ScenarioError("name takes one token", l.number, 1);
            sc.name = l.words[1];
        } else if (key == "schema") {
            if (parse_int(l, 1) != 1) throw ScenarioError("unsupported schema", l.number, 1);
        } else if (key == "ring") {
            std::string d;
            for (std::size_t i = 1; i < l.words.size(); ++i) {
                if (i > 1) d += " ";
                d += l.words[i];
            }
            ring_desc = d;
        } else if (key == "group") {
            group_line = l;
        } else if (key == "action") {
            action_lines.push_back(l);
        } else if (key == "allow-no-star") {
            sc.allow_no_star = true;
        } else if (key == "coeff") {
            if (l.words.size() < 2) throw ScenarioError("coeff section expected", l.number, 1);
            if (l.words[1] == "group") coeff_group_line = l;
            else if (l.words[1] == "action") coeff_action_lines.push_back(l);
            else throw ScenarioError("coeff expects 'group' or 'action'", l.number, l.columns[1]);
        } else if (key == "lattice") {
            if (l.words.size() >= 3 && l.words[1] == "rank")
                lattice_rank = std::uint32_t(parse_int(l, 2));
            else
                throw ScenarioError("lattice expects 'rank <r>'", l.number, 1);
        } else if (key == "lgen") {
            lgen_lines.push_back(l);
        } else if (key == "task") {
            sc.tasks.push_back(parse_task(l));
        } else {
            throw ScenarioError("unknown key '" + key + "' in " + source, l.number, l.columns[0]);
        }
    }

    if (sc.name.empty()) throw ScenarioError("scenario needs a name", 1, 1);
    if (!group_line) throw ScenarioError("scenario needs a group", 1, 1);
    sc.group = parse_group(*group_line, 1);

    if (ring_desc) {
        try {
            sc.ring = Ring::parse(*ring_desc);
        } catch (const std::exception& e) {
            throw ScenarioError(std::string("ring: ") + e.what(), 1, 1);
        }
        const auto& gens = sc.group.generators();
        if (action_lines.size() != gens.size())
            throw ScenarioError("need one action line per group generator (" +
                                    std::to_string(gens.size()) + ")",
                                1, 1);
        std::vector<std::vector<Elem>> tables;
        for (const auto& l : action_lines) {
            try {
                tables.push_back(ring_rule_table(sc.ring, l, 1));
            } catch (const ScenarioError&) {
                throw;
            } catch (const std::exception& e) {
                throw ScenarioError(e.what(), l.number, l.columns[1]);
            }
        }
        try {
            sc.action = Action::make(sc.group, sc.ring, std::move(tables), !sc.allow_no_star);
        } catch (const std::exception& e) {
            throw ScenarioError(std::string("action: ") + e.what(),
                                action_lines.empty() ? 1 : action_lines[0].number, 1);
        }
        sc.has_ring = true;
    }

    if (coeff_group_line) {
        Group x = parse_group(*coeff_group_line, 2);
        const auto& gens = sc.group.generators();
        if (coeff_action_lines.size() != gens.size())
            throw ScenarioError("need one coeff action line per group generator", 1, 1);
        std::vector<std::vector<GElem>> tabs;
        for (const auto& l : coeff_action_lines) tabs.push_back(coeff_rule_table(x, l, 2));
        try {
            sc.abstract_view = CoeffGroup::abstract(sc.group, x, std::move(tabs));
        } catch (const std::exception& e) {
            throw ScenarioError(std::string("coeff action: ") + e.what(),
                                coeff_group_line->number, 1);
        }
        sc.has_coeff = true;
    }

    if (lattice_rank) {
        const std::uint32_t r = *lattice_rank;
        const auto& gens = sc.group.generators();
        if (lgen_lines.size() != gens.size())
            throw ScenarioError("need one lgen line per group generator", 1, 1);
        std::vector<ZMat> mats;
        for (const auto& l : lgen_lines) {
            if (l.words.size() != 1 + std::size_t(r) * r)
                throw ScenarioError("lgen needs r*r integers", l.number, 1);
            ZMat m(r, r);
            for (std::uint32_t i = 0; i < r; ++i)
                for (std::uint32_t j = 0; j < r; ++j)
                    m.at(i, j) = parse_int(l, 1 + std::size_t(i) * r + j);
            mats.push_back(std::move(m));
        }
        try {
            sc.lattice = LatticeAction::make(sc.group, r, std::move(mats));
        } catch (const std::exception& e) {
            throw ScenarioError(std::string("lattice: ") + e.what(), lgen_lines[0].number, 1);
        }
        sc.has_lattice = true;
    }

    if (!sc.has_ring && !sc.has_lattice && !sc.has_coeff)
        throw ScenarioError("scenario needs a ring, a lattice, or abstract coefficients", 1, 1);
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario_text(ss.str(), path);
}

}  // namespace kerind
