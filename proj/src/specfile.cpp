#include "equidiff/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace equidiff {

namespace {

struct RawSection {
    int line = 0;
    std::string kind;   // group | quotient | components | branch | node | intersection
    std::string label;  // for branch/node/intersection
    std::map<std::string, std::pair<int, std::string>> entries;  // key -> (line, value)
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-' || c == '.';
    });
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ParseResult run() {
        split_sections();
        if (!diags_.empty()) return finish();
        assemble();
        return finish();
    }

private:
    void error(int line, std::string message, int column = 1) {
        diags_.push_back({line, column, std::move(message)});
    }

    void split_sections() {
        std::istringstream in(text_);
        std::string raw;
        int lineno = 0;
        RawSection* current = nullptr;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = raw;
            if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            line = trim(line);
            if (line.empty()) continue;

            if (line.front() == '[') {
                if (line.back() != ']') {
                    error(lineno, "unterminated section header");
                    continue;
                }
                std::string inner = trim(line.substr(1, line.size() - 2));
                std::istringstream hs(inner);
                std::string kind, label, extra;
                hs >> kind >> label >> extra;
                if (!extra.empty()) {
                    error(lineno, "unexpected text in section header");
                    continue;
                }
                bool labelled = kind == "branch" || kind == "node" || kind == "intersection";
                bool bare = kind == "group" || kind == "quotient" || kind == "components";
                if (!labelled && !bare) {
                    error(lineno, "unknown section [" + kind + "]");
                    continue;
                }
                if (labelled && !valid_label(label)) {
                    error(lineno, "section [" + kind + "] requires a label of [A-Za-z0-9_.-]");
                    continue;
                }
                if (!labelled && !label.empty()) {
                    error(lineno, "section [" + kind + "] takes no label");
                    continue;
                }
                sections_.push_back(RawSection{lineno, kind, label, {}});
                current = &sections_.back();
                continue;
            }

            size_t eq = line.find('=');
            if (eq == std::string::npos) {
                error(lineno, "expected `key = value` or a section header");
                continue;
            }
            if (!current) {
                error(lineno, "entry before any section header");
                continue;
            }
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key.empty()) {
                error(lineno, "empty key");
                continue;
            }
            if (!current->entries.emplace(key, std::make_pair(lineno, value)).second)
                error(lineno, "duplicate key '" + key + "' in section");
        }
    }

    std::optional<long long> parse_int(int line, const std::string& value, const char* what) {
        std::string v = trim(value);
        if (v.empty() || (!std::isdigit(static_cast<unsigned char>(v[0])) && v[0] != '-')) {
            error(line, std::string("expected an integer for ") + what);
            return std::nullopt;
        }
        try {
            size_t used = 0;
            long long out = std::stoll(v, &used);
            if (used != v.size()) {
                error(line, std::string("trailing characters after integer for ") + what);
                return std::nullopt;
            }
            return out;
        } catch (const std::exception&) {
            error(line, std::string("integer out of range for ") + what);
            return std::nullopt;
        }
    }

    std::optional<std::vector<long long>> parse_int_list(int line, const std::string& value,
                                                         const char* what) {
        std::vector<long long> out;
        std::string v = trim(value);
        if (v.empty()) return out;
        std::istringstream in(v);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto n = parse_int(line, item, what);
            if (!n) return std::nullopt;
            out.push_back(*n);
        }
        return out;
    }

    // `(1,0), (0,1)` -> list of coordinate tuples; empty value -> empty list.
    std::optional<std::vector<std::vector<long long>>> parse_tuple_list(int line,
                                                                        const std::string& value) {
        std::vector<std::vector<long long>> out;
        std::string v = trim(value);
        size_t pos = 0;
        while (pos < v.size()) {
            if (v[pos] == ',' || std::isspace(static_cast<unsigned char>(v[pos]))) {
                ++pos;
                continue;
            }
            if (v[pos] != '(') {
                error(line, "expected '(' starting a coordinate tuple", static_cast<int>(pos) + 1);
                return std::nullopt;
            }
            size_t close = v.find(')', pos);
            if (close == std::string::npos) {
                error(line, "unterminated coordinate tuple", static_cast<int>(pos) + 1);
                return std::nullopt;
            }
            auto coords = parse_int_list(line, v.substr(pos + 1, close - pos - 1), "coordinate");
            if (!coords) return std::nullopt;
            out.push_back(std::move(*coords));
            pos = close + 1;
        }
        return out;
    }

    std::optional<GroupElement> to_element(int line, const std::vector<long long>& coords) {
        if (!group_ || coords.size() != group_->rank()) {
            error(line, "coordinate tuple arity differs from the number of group invariants");
            return std::nullopt;
        }
        return group_->element(coords);
    }

    const std::pair<int, std::string>* entry(const RawSection& s, const std::string& key) {
        auto it = s.entries.find(key);
        return it == s.entries.end() ? nullptr : &it->second;
    }

    void check_keys(const RawSection& s, std::initializer_list<const char*> allowed) {
        for (const auto& [key, lv] : s.entries) {
            bool known = std::any_of(allowed.begin(), allowed.end(),
                                     [&](const char* k) { return key == k; });
            if (!known) error(lv.first, "unknown key '" + key + "' in [" + s.kind + "]");
        }
    }

    void assemble() {
        const RawSection* group_sec = nullptr;
        const RawSection* quotient_sec = nullptr;
        const RawSection* components_sec = nullptr;
        for (const auto& s : sections_) {
            if (s.kind == "group") {
                if (group_sec) error(s.line, "duplicate [group] section");
                group_sec = &s;
            } else if (s.kind == "quotient") {
                if (quotient_sec) error(s.line, "duplicate [quotient] section");
                quotient_sec = &s;
            } else if (s.kind == "components") {
                if (components_sec) error(s.line, "duplicate [components] section");
                components_sec = &s;
            }
        }
        if (!group_sec) {
            error(0, "missing [group] section");
            return;
        }
        if (!quotient_sec) {
            error(0, "missing [quotient] section");
            return;
        }

        check_keys(*group_sec, {"invariants"});
        const auto* inv = entry(*group_sec, "invariants");
        if (!inv) {
            error(group_sec->line, "[group] requires `invariants = m1, m2, ...`");
            return;
        }
        auto invariants = parse_int_list(inv->first, inv->second, "invariant factor");
        if (!invariants) return;
        try {
            group_.emplace(*invariants);
        } catch (const std::exception& ex) {
            error(inv->first, ex.what());
            return;
        }

        check_keys(*quotient_sec, {"genus"});
        const auto* genus_entry = entry(*quotient_sec, "genus");
        if (!genus_entry) {
            error(quotient_sec->line, "[quotient] requires `genus = g`");
            return;
        }
        auto genus = parse_int(genus_entry->first, genus_entry->second, "genus");
        if (!genus) return;
        if (*genus < 0) {
            error(genus_entry->first, "quotient genus must be >= 0");
            return;
        }

        long long count = 1;
        std::vector<GroupElement> stab_gens;
        bool stab_given = false;
        if (components_sec) {
            check_keys(*components_sec, {"count", "stabilizer_generators"});
            if (const auto* c = entry(*components_sec, "count")) {
                auto v = parse_int(c->first, c->second, "component count");
                if (!v) return;
                if (*v < 1) {
                    error(c->first, "component count must be >= 1");
                    return;
                }
                count = *v;
            }
            if (const auto* sg = entry(*components_sec, "stabilizer_generators")) {
                auto tuples = parse_tuple_list(sg->first, sg->second);
                if (!tuples) return;
                stab_given = true;
                for (const auto& t : *tuples) {
                    auto el = to_element(sg->first, t);
                    if (!el) return;
                    stab_gens.push_back(std::move(*el));
                }
            }
        }
        if (!stab_given && count == 1) {
            // default: the whole group stabilizes the single component
            for (size_t i = 0; i < group_->rank(); ++i) {
                std::vector<long long> coords(group_->rank(), 0);
                coords[i] = 1;
                stab_gens.push_back(group_->element(coords));
            }
        } else if (!stab_given && count > 1) {
            error(components_sec ? components_sec->line : 0,
                  "[components] with count > 1 requires stabilizer_generators");
            return;
        }

        CoverSpec spec{*group_, *genus, count, std::move(stab_gens), {}, {}, {}};

        std::set<std::string> seen_labels;
        for (const auto& s : sections_) {
            if (s.kind != "branch" && s.kind != "node" && s.kind != "intersection") continue;
            if (!seen_labels.insert(s.label).second)
                error(s.line, "duplicate label '" + s.label + "'");

            if (s.kind == "branch") {
                check_keys(s, {"generator", "theta"});
                const auto* gen = entry(s, "generator");
                const auto* theta = entry(s, "theta");
                if (!gen || !theta) {
                    error(s.line, "[branch] requires `generator` and `theta`");
                    continue;
                }
                auto tuples = parse_tuple_list(gen->first, gen->second);
                if (!tuples) continue;
                if (tuples->size() != 1) {
                    error(gen->first, "`generator` takes exactly one tuple");
                    continue;
                }
                auto el = to_element(gen->first, tuples->front());
                auto t = parse_int(theta->first, theta->second, "theta exponent");
                if (!el || !t) continue;
                spec.branches.push_back(
                    BranchPoint{s.label, *el, element_order(*group_, *el), *t});
            } else {
                check_keys(s, {"quotient", "branch_stabilizer", "swap"});
                const auto* quotient = entry(s, "quotient");
                const auto* stab = entry(s, "branch_stabilizer");
                const auto* swap = entry(s, "swap");
                if (!quotient || !stab || !swap) {
                    error(s.line,
                          "[" + s.kind + "] requires `quotient`, `branch_stabilizer` and `swap`");
                    continue;
                }
                std::optional<std::string> quotient_branch;
                std::string q = trim(quotient->second);
                if (q != "smooth") {
                    if (!valid_label(q)) {
                        error(quotient->first, "`quotient` must be `smooth` or a branch label");
                        continue;
                    }
                    quotient_branch = q;
                }
                auto stab_tuples = parse_tuple_list(stab->first, stab->second);
                auto swap_tuples = parse_tuple_list(swap->first, swap->second);
                if (!stab_tuples || !swap_tuples) continue;
                if (swap_tuples->size() != 1) {
                    error(swap->first, "`swap` takes exactly one tuple");
                    continue;
                }
                std::vector<GroupElement> gens;
                bool gens_ok = true;
                for (const auto& t : *stab_tuples) {
                    auto el = to_element(stab->first, t);
                    if (!el) { gens_ok = false; break; }
                    gens.push_back(std::move(*el));
                }
                auto swap_el = to_element(swap->first, swap_tuples->front());
                if (!gens_ok || !swap_el) continue;
                if (s.kind == "node")
                    spec.nodes.push_back(
                        NodeOrbit{s.label, std::move(quotient_branch), std::move(gens), *swap_el});
                else
                    spec.intersections.push_back(IntersectionOrbit{
                        s.label, std::move(quotient_branch), std::move(gens), *swap_el});
            }
        }

        if (diags_.empty()) result_ = std::move(spec);
    }

    ParseResult finish() {
        ParseResult r;
        r.diagnostics = std::move(diags_);
        if (r.diagnostics.empty() && result_) r.spec = std::move(result_);
        std::sort(r.diagnostics.begin(), r.diagnostics.end(),
                  [](const Diagnostic& a, const Diagnostic& b) {
                      return std::tie(a.line, a.column, a.message) <
                             std::tie(b.line, b.column, b.message);
                  });
        return r;
    }

    const std::string& text_;
    std::vector<RawSection> sections_;
    std::vector<Diagnostic> diags_;
    std::optional<AbelianGroup> group_;
    std::optional<CoverSpec> result_;
};

std::string tuple_str(const GroupElement& el) {
    std::string out = "(";
    for (size_t i = 0; i < el.coords.size(); ++i)
        out += (i ? "," : "") + std::to_string(el.coords[i]);
    return out + ")";
}

// Rendered with the leading space of `key =`, so empty lists leave no
// trailing blank.
std::string tuple_list_str(const std::vector<GroupElement>& els) {
    std::string out;
    for (size_t i = 0; i < els.size(); ++i) out += (i ? ", " : " ") + tuple_str(els[i]);
    return out;
}

}  // namespace

ParseResult parse_spec(const std::string& text) { return Parser(text).run(); }

std::string serialize_spec(const CoverSpec& spec) {
    std::ostringstream out;
    out << "[group]\ninvariants = ";
    for (size_t i = 0; i < spec.group.invariants().size(); ++i)
        out << (i ? ", " : "") << spec.group.invariants()[i];
    out << "\n\n[quotient]\ngenus = " << spec.quotient_genus << "\n";
    out << "\n[components]\ncount = " << spec.component_count << "\n"
        << "stabilizer_generators =" << tuple_list_str(spec.stab_gens) << "\n";
    for (const auto& b : spec.branches)
        out << "\n[branch " << b.label << "]\ngenerator = " << tuple_str(b.stab_gen)
            << "\ntheta = " << b.theta_exp << "\n";
    for (const auto& o : spec.nodes)
        out << "\n[node " << o.label << "]\nquotient = "
            << (o.quotient_branch ? *o.quotient_branch : "smooth")
            << "\nbranch_stabilizer =" << tuple_list_str(o.h0_gens)
            << "\nswap = " << tuple_str(o.swap) << "\n";
    for (const auto& o : spec.intersections)
        out << "\n[intersection " << o.label << "]\nquotient = "
            << (o.quotient_branch ? *o.quotient_branch : "smooth")
            << "\nbranch_stabilizer =" << tuple_list_str(o.h1_gens)
            << "\nswap = " << tuple_str(o.swap) << "\n";
    return out.str();
}

}  // namespace equidiff
