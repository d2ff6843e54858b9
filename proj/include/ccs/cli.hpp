#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/canonical.hpp"
#include "ccs/dcp.hpp"
#include "ccs/group.hpp"
#include "ccs/moves.hpp"
#include "ccs/surface_io.hpp"
#include "ccs/tqft.hpp"

namespace ccs::cli {

// Exit code contract, stable across commands:
//   0 success, 1 validation/arity failure, 2 parse error,
//   3 property or identity failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitProperty = 3;

/// Group spec grammar: cyclic:N | dihedral:N | symmetric:N | quaternion8 |
/// product:<spec>x<spec> | file:<path>. Product operands are split at the
/// first 'x' where both sides parse, which handles nesting.
inline Group group_from_spec(const std::string& spec) {
    auto int_arg = [&](const std::string& prefix) -> std::optional<int> {
        if (spec.rfind(prefix, 0) != 0) return std::nullopt;
        std::string rest = spec.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("group spec '" + spec + "': expected a number after " + prefix);
        return std::stoi(rest);
    };
    try {
        if (auto n = int_arg("cyclic:")) return make_cyclic(*n);
        if (auto n = int_arg("dihedral:")) return make_dihedral(*n);
        if (auto n = int_arg("symmetric:")) return make_symmetric(*n);
        if (spec == "quaternion8") return make_quaternion8();
        if (spec.rfind("file:", 0) == 0) {
            std::string path = spec.substr(5);
            std::ifstream in(path);
            if (!in) throw parse_error("group spec: cannot open file '" + path + "'");
            std::ostringstream text;
            text << in.rdbuf();
            return from_cayley_table(text.str());
        }
        if (spec.rfind("product:", 0) == 0) {
            std::string rest = spec.substr(8);
            for (std::size_t p = rest.find('x'); p != std::string::npos;
                 p = rest.find('x', p + 1)) {
                try {
                    Group a = group_from_spec(rest.substr(0, p));
                    Group b = group_from_spec(rest.substr(p + 1));
                    return direct_product(a, b);
                } catch (const parse_error&) {
                    continue;  // try the next split point
                }
            }
            throw parse_error("group spec: cannot split product operands in '" + spec + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("group spec '") + spec + "': " + e.what());
    }
    throw parse_error("unknown group spec '" + spec + "'");
}

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

inline CellComplex load_surface(const std::string& surface_path, const std::string& builtin_name) {
    if (surface_path.empty() == builtin_name.empty())
        throw std::invalid_argument("give exactly one of --surface and --builtin");
    if (!builtin_name.empty()) return builtin(builtin_name);
    return parse_surface(read_file(surface_path)).complex;
}

inline std::vector<int> parse_element_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad element list entry '" + tok + "'");
        out.push_back(std::stoi(tok));
    }
    return out;
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write to '" + path + "'");
    f << text;
}

inline int map_exception(std::ostream& err) {
    try {
        throw;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const budget_error& e) {
        err << "budget error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const validation_error& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

inline void print_name_legend(const Group& g, std::ostream& out) {
    out << "elements:";
    for (int a = 0; a < g.order; ++a) out << " " << a << "=" << g.name_of(a);
    out << "\n";
}

}  // namespace detail

inline int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        auto parsed = parse_surface(detail::read_file(path));
        auto violations = validate(parsed.complex);
        if (violations.empty()) {
            out << "ok\n";
            return kExitOk;
        }
        for (const auto& v : violations) out << "violation: " << v << "\n";
        return kExitInvalid;
    } catch (...) {
        return detail::map_exception(err);
    }
}

struct InvariantOptions {
    std::string surface_path;
    std::string builtin_name;
    std::string group_spec;
    std::string in_list;
    std::string out_list;
    bool names = false;
};

inline int cmd_invariant(const InvariantOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        Group g = group_from_spec(opt.group_spec);
        CellComplex m = detail::load_surface(opt.surface_path, opt.builtin_name);
        require_valid(m, "surface");
        BoundaryColouring bc{detail::parse_element_list(opt.in_list),
                             detail::parse_element_list(opt.out_list)};
        InvariantValue v = invariant_scalar(g, m, bc);
        if (opt.names) {
            auto render = [&](const std::vector<int>& elems) {
                std::string s;
                for (std::size_t i = 0; i < elems.size(); ++i)
                    s += (i ? "," : "") + g.name_of(elems[i]);
                return s.empty() ? std::string("-") : s;
            };
            out << "in=" << render(bc.in_elems) << " out=" << render(bc.out_elems) << "\n";
        }
        out << "count=" << v.count.str() << " half_exponent=" << v.half_exponent << " value≈"
            << approx_decimal(v.count, v.group_order, v.half_exponent) << "\n";
        return kExitOk;
    } catch (...) {
        return detail::map_exception(err);
    }
}

inline int cmd_matrix(const std::string& surface_path, const std::string& builtin_name,
                      const std::string& group_spec, const std::string& output_path,
                      std::ostream& out, std::ostream& err) {
    try {
        Group g = group_from_spec(group_spec);
        CellComplex m = detail::load_surface(surface_path, builtin_name);
        detail::write_output(output_path, dump_matrix(invariant_matrix(g, m)), out);
        return kExitOk;
    } catch (...) {
        return detail::map_exception(err);
    }
}

inline int cmd_check_moves(const std::string& builtin_name, const std::string& group_spec,
                           std::uint64_t seed, int steps, std::ostream& out, std::ostream& err) {
    try {
        Group g = group_from_spec(group_spec);
        CellComplex m = builtin(builtin_name);
        TqftMatrix baseline = invariant_matrix(g, m);
        std::mt19937_64 engine(seed);
        for (int step = 1; step <= steps; ++step) {
            auto moves = legal_moves(m);
            if (moves.empty()) break;
            const Move& mv = moves[static_cast<std::size_t>(engine() % moves.size())];
            m = apply_move(m, mv);
            TqftMatrix now = invariant_matrix(g, m);
            // Move I rescales raw counts by |G| and shifts the half-exponent;
            // the normalized invariant is what the moves preserve, compared
            // here by exact integer cross-multiplication.
            bool same = matrices_values_equal(now, baseline);
            out << "step " << step << ": " << to_string(mv) << (same ? " ok" : " MISMATCH")
                << "\n";
            if (!same) {
                err << "invariant matrix changed after step " << step << "\n";
                return kExitProperty;
            }
        }
        out << "invariant preserved over " << steps << " moves (seed " << seed << ")\n";
        return kExitOk;
    } catch (...) {
        return detail::map_exception(err);
    }
}

/// One row per identity check: name, ok|fail|skip, wall time, counterexample.
struct RunReport {
    std::string name;
    std::string status;
    std::string counterexample;
    double seconds = 0.0;
};

inline int cmd_identities(const std::string& group_spec, bool names, std::ostream& out,
                          std::ostream& err) {
    try {
        Group g = group_from_spec(group_spec);
        if (names) detail::print_name_legend(g, out);
        std::vector<RunReport> reports;
        bool any_fail = false;
        for (const auto& check : identity_checks()) {
            RunReport r;
            r.name = check.name;
            if (check.order_cap && g.order > check.order_cap) {
                r.status = "skip";
                r.counterexample = "order " + std::to_string(g.order) + " exceeds cap " +
                                   std::to_string(check.order_cap);
            } else {
                auto start = std::chrono::steady_clock::now();
                CheckResult res = check.run(g);
                r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                                .count();
                r.status = res.ok ? "ok" : "fail";
                r.counterexample = res.counterexample;
                any_fail = any_fail || !res.ok;
            }
            reports.push_back(std::move(r));
        }
        out << std::left << std::setw(24) << "check" << std::setw(8) << "status"
            << "time\n";
        for (const auto& r : reports) {
            out << std::left << std::setw(24) << r.name << std::setw(8) << r.status << std::fixed
                << std::setprecision(3) << r.seconds << "s";
            if (!r.counterexample.empty()) out << "  " << r.counterexample;
            out << "\n";
        }
        return any_fail ? kExitProperty : kExitOk;
    } catch (...) {
        return detail::map_exception(err);
    }
}

inline int cmd_glue(const std::string& path_a, const std::string& path_b,
                    const std::string& output_path, std::ostream& out, std::ostream& err) {
    try {
        auto a = parse_surface(detail::read_file(path_a));
        auto b = parse_surface(detail::read_file(path_b));
        CellComplex glued = glue(a.complex, b.complex);
        std::string name = (a.name.empty() ? "a" : a.name) + "_" + (b.name.empty() ? "b" : b.name);
        detail::write_output(output_path, dump_surface(glued, name), out);
        return kExitOk;
    } catch (...) {
        return detail::map_exception(err);
    }
}

inline int cmd_builtin(const std::string& name, const std::string& output_path, std::ostream& out,
                       std::ostream& err) {
    try {
        detail::write_output(output_path, dump_surface(builtin(name), name), out);
        return kExitOk;
    } catch (...) {
        return detail::map_exception(err);
    }
}

}  // namespace ccs::cli
