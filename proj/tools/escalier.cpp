// Command-line front end: every operation reads and writes JSON with
// deterministic bytes. Exit codes: 0 success, 1 domain error, 2 parse/IO
// error; `unique --status-exit` additionally exits 3 on a negative verdict.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "escalier/error.hpp"
#include "escalier/json_io.hpp"

namespace {

using escalier::Error;
using escalier::Json;

struct OutputOptions {
    std::string path;  // empty = stdout
    bool pretty = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("-o,--output", out.path, "Write the JSON result to a file");
    cmd->add_flag("--pretty", out.pretty, "Indented output");
}

void emit(const Json& j, const OutputOptions& out) {
    std::string text = (out.pretty ? j.dump(2) : j.dump()) + "\n";
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out.path);
    if (!file) throw Error(escalier::errc::io_error, "cannot write " + out.path);
    file << text;
}

// Interpolation conditions come either as a functional-set file ("sites")
// or as a plain point-set file ("points", Lagrange conditions).
escalier::FunctionalSet load_conditions(const std::string& path) {
    Json j = escalier::load_json_file(path);
    if (j.is_object() && j.contains("sites")) return escalier::functional_set_from_json(j);
    if (j.is_object() && j.contains("points"))
        return escalier::FunctionalSet::from_points(escalier::point_set_from_json(j));
    throw Error(escalier::errc::parse_error,
                path + " holds neither a functional set nor a point set");
}

escalier::OracleGuard guard_from_env() {
    escalier::OracleGuard guard;
    if (const char* env = std::getenv("QB_ORACLE_LIMIT")) {
        try {
            guard.max_conditions = std::stoul(env);
        } catch (const std::exception&) {
            throw Error(escalier::errc::parse_error, "QB_ORACLE_LIMIT must be an integer");
        }
    }
    return guard;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Groebner escaliers, reduced Groebner bases and quotient-basis uniqueness\n"
        "for zero-dimensional ideals given by interpolation conditions."};
    app.require_subcommand(1);

    int status = 0;

    // escalier / gbasis ---------------------------------------------------
    struct {
        std::string input, order;
        OutputOptions out;
        bool basis_only = false;
    } esc[2];
    const char* esc_names[2] = {"escalier", "gbasis"};
    const char* esc_help[2] = {
        "Escalier, corners and reduced Groebner basis for one monomial order",
        "Reduced Groebner basis for one monomial order"};
    for (int k = 0; k < 2; ++k) {
        auto* cmd = app.add_subcommand(esc_names[k], esc_help[k]);
        cmd->add_option("-i,--input", esc[k].input, "Functional-set or point-set JSON file")
            ->required();
        cmd->add_option("--order", esc[k].order,
                        "lex:s1,..,sd | grlex:s1,..,sd | grevlex | elim:i | matrix:[[..],..]")
            ->required();
        add_output_options(cmd, esc[k].out);
        esc[k].basis_only = (k == 1);
        auto* slot = &esc[k];
        cmd->callback([slot] {
            auto theta = load_conditions(slot->input);
            auto order = escalier::parse_order_spec(slot->order, theta.dimension());
            auto result = escalier::escalier(theta, order);
            if (slot->basis_only) {
                Json j;
                j["order"] = escalier::to_json(result.order);
                Json gb = Json::array();
                for (const auto& g : result.groebner) gb.push_back(escalier::to_json(g));
                j["groebner"] = std::move(gb);
                emit(j, slot->out);
            } else {
                emit(escalier::to_json(result), slot->out);
            }
        });
    }

    // unique ---------------------------------------------------------------
    struct {
        std::string input;
        OutputOptions out;
        bool status_exit = false;
    } unique_opts;
    {
        auto* cmd = app.add_subcommand(
            "unique", "Decide whether the quotient basis is unique (elimination criterion)");
        cmd->add_option("-i,--input", unique_opts.input, "Functional-set or point-set JSON file")
            ->required();
        cmd->add_flag("--status-exit", unique_opts.status_exit,
                      "Exit 3 when the basis is not unique");
        add_output_options(cmd, unique_opts.out);
        cmd->callback([&unique_opts, &status] {
            auto verdict = escalier::unique_quotient_basis(load_conditions(unique_opts.input));
            emit(escalier::to_json(verdict), unique_opts.out);
            if (unique_opts.status_exit && !verdict.unique) status = 3;
        });
    }

    // cartesian ------------------------------------------------------------
    struct {
        std::string input;
        OutputOptions out;
    } cart_opts;
    {
        auto* cmd = app.add_subcommand("cartesian",
                                       "Recognize a Cartesian point set (slice criterion)");
        cmd->add_option("-i,--input", cart_opts.input, "Point-set JSON file")->required();
        add_output_options(cmd, cart_opts.out);
        cmd->callback([&cart_opts] {
            auto points = escalier::point_set_from_json(escalier::load_json_file(cart_opts.input));
            emit(escalier::to_json(escalier::check_cartesian(points)), cart_opts.out);
        });
    }

    // slices ---------------------------------------------------------------
    struct {
        std::string input;
        int axis = 1;
        OutputOptions out;
    } slice_opts;
    {
        auto* cmd = app.add_subcommand("slices", "Hyperplane slices perpendicular to one axis");
        cmd->add_option("-i,--input", slice_opts.input, "Point-set JSON file")->required();
        cmd->add_option("--axis", slice_opts.axis, "Axis, 1-based")->required();
        add_output_options(cmd, slice_opts.out);
        cmd->callback([&slice_opts] {
            auto points =
                escalier::point_set_from_json(escalier::load_json_file(slice_opts.input));
            emit(escalier::to_json(escalier::slices(points, slice_opts.axis)), slice_opts.out);
        });
    }

    // make-cartesian ---------------------------------------------------------
    struct {
        std::string input;
        OutputOptions out;
    } make_opts;
    {
        auto* cmd = app.add_subcommand("make-cartesian",
                                       "Build the point set of a Cartesian description");
        cmd->add_option("-i,--input", make_opts.input, "Cartesian-description JSON file")
            ->required();
        add_output_options(cmd, make_opts.out);
        cmd->callback([&make_opts] {
            auto desc = escalier::cartesian_description_from_json(
                escalier::load_json_file(make_opts.input));
            emit(escalier::to_json(escalier::build_cartesian(desc)), make_opts.out);
        });
    }

    // enumerate-bases ---------------------------------------------------------
    struct {
        std::string input;
        std::size_t max = std::numeric_limits<std::size_t>::max();
        OutputOptions out;
    } enum_opts;
    {
        auto* cmd = app.add_subcommand("enumerate-bases",
                                       "Brute-force oracle: all monomial order quotient bases");
        cmd->add_option("-i,--input", enum_opts.input, "Functional-set or point-set JSON file")
            ->required();
        cmd->add_option("--max", enum_opts.max, "Stop after this many bases");
        add_output_options(cmd, enum_opts.out);
        cmd->callback([&enum_opts] {
            auto theta = load_conditions(enum_opts.input);
            auto bases =
                escalier::enumerate_quotient_bases(theta, enum_opts.max, guard_from_env());
            Json j;
            j["dimension"] = theta.dimension();
            Json list = Json::array();
            for (const auto& basis : bases)
                list.push_back(escalier::to_json(
                    std::span<const escalier::Exponent>(basis.exponents())));
            j["bases"] = std::move(list);
            emit(j, enum_opts.out);
        });
    }

    // corners -----------------------------------------------------------------
    struct {
        std::string input;
        OutputOptions out;
    } corner_opts;
    {
        auto* cmd = app.add_subcommand("corners", "Corner set of an order ideal");
        cmd->add_option("-i,--input", corner_opts.input,
                        "Order-ideal JSON file (or any output carrying an exponent list)")
            ->required();
        add_output_options(cmd, corner_opts.out);
        cmd->callback([&corner_opts] {
            auto ideal =
                escalier::order_ideal_from_json(escalier::load_json_file(corner_opts.input));
            auto corners = escalier::corner(ideal);
            Json j;
            j["dimension"] = ideal.dimension();
            j["corners"] =
                escalier::to_json(std::span<const escalier::Exponent>(corners));
            emit(j, corner_opts.out);
        });
    }

    // normal-form ----------------------------------------------------------------
    struct {
        std::string input, order, poly;
        OutputOptions out;
    } nf_opts;
    {
        auto* cmd = app.add_subcommand("normal-form",
                                       "Canonical representative supported on the escalier");
        cmd->add_option("-i,--input", nf_opts.input, "Functional-set or point-set JSON file")
            ->required();
        cmd->add_option("--order", nf_opts.order, "Monomial order spec")->required();
        cmd->add_option("--poly", nf_opts.poly, "Polynomial JSON file")->required();
        add_output_options(cmd, nf_opts.out);
        cmd->callback([&nf_opts] {
            auto theta = load_conditions(nf_opts.input);
            auto order = escalier::parse_order_spec(nf_opts.order, theta.dimension());
            auto f = escalier::polynomial_from_json(escalier::load_json_file(nf_opts.poly),
                                                    theta.dimension());
            auto result = escalier::escalier(theta, order);
            emit(escalier::to_json(escalier::normal_form(result, f)), nf_opts.out);
        });
    }

    // xi-family ---------------------------------------------------------------
    struct {
        int dimension = 3;
        OutputOptions out;
    } xi_opts;
    {
        auto* cmd = app.add_subcommand(
            "xi-family", "The non-Cartesian 4-point family with a unique quotient basis");
        cmd->add_option("-d,--dimension", xi_opts.dimension, "Ambient dimension, >= 3")
            ->required();
        add_output_options(cmd, xi_opts.out);
        cmd->callback([&xi_opts] {
            emit(escalier::to_json(escalier::xi_family(xi_opts.dimension)), xi_opts.out);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        Json err;
        err["error"] = "usage";
        err["detail"] = e.what();
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        Json err;
        err["error"] = e.code();
        err["detail"] = e.what();
        std::cout << err.dump() << "\n";
        const bool io = e.code() == escalier::errc::parse_error ||
                        e.code() == escalier::errc::io_error;
        return io ? 2 : 1;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "internal";
        err["detail"] = e.what();
        std::cout << err.dump() << "\n";
        return 1;
    }
    return status;
}
