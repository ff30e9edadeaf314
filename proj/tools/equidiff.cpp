// equidiff: exact multiplicities of abelian-group characters in the
// holomorphic differentials of nodal curves, from combinatorial cover data.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "equidiff/commands.hpp"

namespace {

int read_file(const std::string& path, std::string& text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character multiplicities in holomorphic differentials of nodal curves"};
    app.require_subcommand(1);

    std::string file;
    std::string chi_filter;
    long long oracle_e = 0;
    std::string oracle_exponents;

    CLI::App* validate = app.add_subcommand("validate", "check a cover description file");
    validate->add_option("file", file, "cover description")->required();

    CLI::App* dims = app.add_subcommand("dims", "per-character dimension table");
    dims->add_option("file", file, "cover description")->required();
    dims->add_option("--char", chi_filter, "restrict to one character, e.g. 1,0");

    CLI::App* genus = app.add_subcommand("genus", "genus and node accounting");
    genus->add_option("file", file, "cover description")->required();

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "re-prove the shipped identities");
    selfcheck->add_option("file", file, "cover description")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "superelliptic eigenspace dimensions");
    oracle->add_option("--e", oracle_e, "cyclic group order")->required();
    oracle->add_option("--exponents", oracle_exponents, "branch exponents d1,d2,...")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (oracle->parsed())
        return equidiff::cmd_oracle(oracle_e, oracle_exponents, std::cout, std::cerr);

    std::string text;
    if (int code = read_file(file, text); code != 0) return code;
    if (validate->parsed()) return equidiff::cmd_validate(text, std::cout, std::cerr);
    if (dims->parsed()) {
        std::optional<std::string> filter;
        if (!chi_filter.empty()) filter = chi_filter;
        return equidiff::cmd_dims(text, filter, std::cout, std::cerr);
    }
    if (genus->parsed()) return equidiff::cmd_genus(text, std::cout, std::cerr);
    if (selfcheck->parsed()) return equidiff::cmd_selfcheck(text, std::cout, std::cerr);
    return 2;
}
