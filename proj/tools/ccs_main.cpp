#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

#include "ccs/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact state-sum invariants of cut cellular surfaces over finite groups"};
    app.require_subcommand(1);

    std::string surface_path, builtin_name, group_spec, in_list, out_list, output_path;
    std::string path_a, path_b, name;
    std::uint64_t seed = 1;
    int steps = 50;
    bool names = false;

    auto* validate = app.add_subcommand("validate", "parse and validate a surface file");
    validate->add_option("file", surface_path, "surface file")->required();

    auto* invariant = app.add_subcommand("invariant", "invariant of one boundary colouring");
    invariant->add_option("--surface", surface_path, "surface file");
    invariant->add_option("--builtin", builtin_name, "builtin surface name");
    invariant->add_option("--group", group_spec, "group spec")->required();
    invariant->add_option("--in", in_list, "comma-separated in-boundary elements");
    invariant->add_option("--out", out_list, "comma-separated out-boundary elements");
    invariant->add_flag("--names", names, "print element names");

    auto* matrix = app.add_subcommand("matrix", "full invariant matrix dump");
    matrix->add_option("--surface", surface_path, "surface file");
    matrix->add_option("--builtin", builtin_name, "builtin surface name");
    matrix->add_option("--group", group_spec, "group spec")->required();
    matrix->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* check_moves = app.add_subcommand("check-moves", "random move invariance fuzzing");
    check_moves->add_option("--builtin", builtin_name, "builtin surface name")->required();
    check_moves->add_option("--group", group_spec, "group spec")->required();
    check_moves->add_option("--seed", seed, "random seed");
    check_moves->add_option("--steps", steps, "number of moves");

    auto* identities = app.add_subcommand("identities", "run the identity check suite");
    identities->add_option("--group", group_spec, "group spec")->required();
    identities->add_flag("--names", names, "print element names");

    auto* glue = app.add_subcommand("glue", "glue two surface files");
    glue->add_option("a", path_a, "first surface file")->required();
    glue->add_option("b", path_b, "second surface file")->required();
    glue->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* builtin_cmd = app.add_subcommand("builtin", "dump a builtin surface");
    builtin_cmd->add_option("name", name, "builtin surface name")->required();
    builtin_cmd->add_option("-o,--output", output_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ccs::cli::kExitParse;
    }

    if (validate->parsed()) return ccs::cli::cmd_validate(surface_path, std::cout, std::cerr);
    if (invariant->parsed())
        return ccs::cli::cmd_invariant(
            {surface_path, builtin_name, group_spec, in_list, out_list, names}, std::cout,
            std::cerr);
    if (matrix->parsed())
        return ccs::cli::cmd_matrix(surface_path, builtin_name, group_spec, output_path, std::cout,
                                    std::cerr);
    if (check_moves->parsed())
        return ccs::cli::cmd_check_moves(builtin_name, group_spec, seed, steps, std::cout,
                                         std::cerr);
    if (identities->parsed())
        return ccs::cli::cmd_identities(group_spec, names, std::cout, std::cerr);
    if (glue->parsed())
        return ccs::cli::cmd_glue(path_a, path_b, output_path, std::cout, std::cerr);
    if (builtin_cmd->parsed()) return ccs::cli::cmd_builtin(name, output_path, std::cout, std::cerr);
    return ccs::cli::kExitInvalid;
}
