#include "equidiff/commands.hpp"

#include <ostream>
#include <sstream>

#include "equidiff/eigendim.hpp"
#include "equidiff/oracle.hpp"
#include "equidiff/specfile.hpp"

namespace equidiff {

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kParseError = 2;

std::string chi_str(const Character& chi) {
    std::string out;
    for (size_t i = 0; i < chi.coords.size(); ++i)
        out += (i ? "," : "") + std::to_string(chi.coords[i]);
    return out;
}

void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& err) {
    for (const auto& d : diags) {
        if (d.line > 0) err << "error: line " << d.line << ": " << d.message << "\n";
        else err << "error: " << d.message << "\n";
    }
}

void print_violations(const std::vector<Violation>& violations, std::ostream& out) {
    for (const auto& v : violations) {
        out << "VIOLATION " << v.code;
        if (!v.label.empty()) out << " " << v.label;
        out << ": " << v.message << "\n";
    }
}

// Parses and validates; on failure prints and reports the exit code.
std::optional<CoverSpec> load_valid(const std::string& text, std::ostream& out, std::ostream& err,
                                    int& code) {
    ParseResult parsed = parse_spec(text);
    if (!parsed.ok()) {
        print_diagnostics(parsed.diagnostics, err);
        code = kParseError;
        return std::nullopt;
    }
    std::vector<Violation> violations = validate(*parsed.spec);
    if (!violations.empty()) {
        print_violations(violations, out);
        code = kInvalid;
        return std::nullopt;
    }
    return std::move(parsed.spec);
}

}  // namespace

int cmd_validate(const std::string& text, std::ostream& out, std::ostream& err) {
    int code = kOk;
    if (!load_valid(text, out, err, code)) return code;
    out << "OK\n";
    return kOk;
}

int cmd_dims(const std::string& text, const std::optional<std::string>& chi_filter,
             std::ostream& out, std::ostream& err) {
    int code = kOk;
    auto spec = load_valid(text, out, err, code);
    if (!spec) return code;

    std::optional<Character> filter;
    if (chi_filter) {
        std::vector<long long> coords;
        std::istringstream in(*chi_filter);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                coords.push_back(std::stoll(item));
            } catch (const std::exception&) {
                err << "error: --char expects a comma-separated integer tuple\n";
                return kParseError;
            }
        }
        if (coords.size() != spec->group.rank()) {
            err << "error: --char tuple has arity " << coords.size() << " but the group has rank "
                << spec->group.rank() << "\n";
            return kParseError;
        }
        filter = spec->group.character(coords);
    }

    CoverContext ctx(*spec);
    out << "# equidiff dims v1\n";
    for (const Character& chi : characters_all(spec->group)) {
        if (filter && !(chi == *filter)) continue;
        out << chi_str(chi) << "\t" << dim_connected(ctx, chi) << "\n";
    }
    return kOk;
}

int cmd_genus(const std::string& text, std::ostream& out, std::ostream& err) {
    int code = kOk;
    auto spec = load_valid(text, out, err, code);
    if (!spec) return code;
    out << "# equidiff genus v1\n";
    out << "quotient_genus\t" << spec->quotient_genus << "\n";
    out << "normalization_genus\t" << genus_normalization(*spec) << "\n";
    out << "node_count\t" << node_count_total(*spec) << "\n";
    out << "arithmetic_genus\t" << arithmetic_genus(*spec) << "\n";
    return kOk;
}

int cmd_selfcheck(const std::string& text, std::ostream& out, std::ostream& err) {
    int code = kOk;
    auto spec = load_valid(text, out, err, code);
    if (!spec) return code;

    CoverContext ctx(*spec);
    std::vector<Character> chars = characters_all(spec->group);

    bool two_path = true;
    bool nonneg = true;
    long long total = 0;
    for (const Character& chi : chars) {
        ChiSetResult s = chi_sets(ctx, chi);
        if (m_chi_closed(ctx, chi, s) != m_chi_divisor(ctx, chi, s)) two_path = false;
        long long dim = dim_connected(ctx, chi);
        if (dim < 0) nonneg = false;
        total += dim;
    }
    bool trivial_ok = dim_connected(ctx, chars.front()) == spec->quotient_genus;
    bool sum_ok = total == arithmetic_genus(*spec);

    auto report = [&](bool ok, const char* what) {
        out << (ok ? "PASS " : "FAIL ") << what << "\n";
        return ok;
    };
    bool all = true;
    all &= report(two_path, "two-path-m-chi");
    all &= report(trivial_ok, "trivial-character-dim");
    all &= report(sum_ok, "character-sum-rule");
    all &= report(nonneg, "nonnegative-dims");
    return all ? kOk : kInvalid;
}

int cmd_oracle(long long e, const std::string& exponents_csv, std::ostream& out,
               std::ostream& err) {
    SuperellipticData data;
    data.e = e;
    std::istringstream in(exponents_csv);
    std::string item;
    int index = 1;
    while (std::getline(in, item, ',')) {
        try {
            data.branch_exponents.push_back({"L" + std::to_string(index++), std::stoll(item)});
        } catch (const std::exception&) {
            err << "error: --exponents expects a comma-separated integer list\n";
            return kParseError;
        }
    }
    try {
        check_superelliptic(data);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kParseError;
    }
    std::vector<long long> dims = oracle_dims(data);
    out << "# equidiff oracle v1\n";
    for (size_t j = 0; j < dims.size(); ++j) out << j << "\t" << dims[j] << "\n";
    return kOk;
}

}  // namespace equidiff
