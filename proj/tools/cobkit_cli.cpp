#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "cobkit/cob1.hpp"
#include "cobkit/cob2.hpp"
#include "cobkit/gen.hpp"
#include "cobkit/io.hpp"

namespace {

// Exit codes: 0 success / affirmative, 1 negative answer, 2 invalid input
// or precondition failure.
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;

void emit(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw std::invalid_argument("cannot write file: " + output);
        out << text;
    }
}

cobkit::SignedSet signs_from_string(const std::string& s) {
    cobkit::SignedSet set;
    for (char ch : s) {
        if (ch == '+')
            set.signs.push_back(cobkit::Sign::plus);
        else if (ch == '-')
            set.signs.push_back(cobkit::Sign::minus);
        else
            throw std::invalid_argument(std::string("invalid sign character '") + ch + "'");
    }
    return set;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cobkit: composition, factorization and lifting for combinatorial cobordisms"};
    app.require_subcommand(1);

    std::string output;
    std::uint64_t seed = 0;
    app.add_option("-o,--output", output, "write the result to this path instead of stdout");
    app.add_option("--seed", seed, "seed for generator-backed subcommands")
        ->envname("COBKIT_SEED");

    int rc = kYes;

    auto* validate_cmd =
        app.add_subcommand("validate", "parse a cobordism file and check its invariants");
    std::string validate_path;
    validate_cmd->add_option("file", validate_path, "cobordism file")->required();
    validate_cmd->fallthrough();
    validate_cmd->callback([&] {
        auto c = cobkit::parse_cobordism_file(validate_path);
        std::cout << (std::holds_alternative<cobkit::Cobordism2>(c) ? "ok cob2" : "ok cob1")
                  << "\n";
    });

    auto* compose_cmd = app.add_subcommand("compose", "glue two cobordism files");
    std::string compose_f, compose_g;
    compose_cmd->add_option("first", compose_f)->required();
    compose_cmd->add_option("second", compose_g)->required();
    compose_cmd->fallthrough();
    compose_cmd->callback([&] {
        auto a = cobkit::parse_cobordism_file(compose_f);
        auto b = cobkit::parse_cobordism_file(compose_g);
        if (a.index() != b.index())
            throw std::invalid_argument("cannot compose different cobordism kinds");
        if (auto* a2 = std::get_if<cobkit::Cobordism2>(&a)) {
            emit(output, cobkit::serialize(cobkit::compose(*a2, std::get<cobkit::Cobordism2>(b))));
        } else {
            emit(output, cobkit::serialize(cobkit::compose_pushout(
                             std::get<cobkit::Cobordism1>(a), std::get<cobkit::Cobordism1>(b))));
        }
    });

    auto* factor_cmd =
        app.add_subcommand("factor", "write the cofibration-fibration factorization");
    std::string factor_in, factor_cofib, factor_fib;
    factor_cmd->add_option("file", factor_in)->required();
    factor_cmd->add_option("cofib_out", factor_cofib, "output path for the cofibration")
        ->required();
    factor_cmd->add_option("fib_out", factor_fib, "output path for the fibration")->required();
    factor_cmd->fallthrough();
    factor_cmd->callback([&] {
        auto c = cobkit::parse_cobordism_file(factor_in);
        if (auto* c2 = std::get_if<cobkit::Cobordism2>(&c)) {
            auto f = cobkit::factorize(*c2);
            cobkit::write_cobordism_file(factor_cofib, f.cofib);
            cobkit::write_cobordism_file(factor_fib, f.fib);
            std::cout << "middle " << f.middle << "\n";
        } else {
            auto f = cobkit::factorize1(std::get<cobkit::Cobordism1>(c));
            cobkit::write_cobordism_file(factor_cofib, f.cofib);
            cobkit::write_cobordism_file(factor_fib, f.fib);
            std::cout << "middle " << f.middle.size() << "\n";
        }
    });

    auto* lift_cmd = app.add_subcommand(
        "lift", "solve the lifting problem of a commuting square (e, m, u, v)");
    std::string lift_e, lift_m, lift_u, lift_v;
    lift_cmd->add_option("e", lift_e, "cofibration file")->required();
    lift_cmd->add_option("m", lift_m, "fibration file")->required();
    lift_cmd->add_option("u", lift_u, "top file")->required();
    lift_cmd->add_option("v", lift_v, "bottom file")->required();
    lift_cmd->fallthrough();
    lift_cmd->callback([&] {
        auto e = cobkit::parse_cobordism_file(lift_e);
        auto m = cobkit::parse_cobordism_file(lift_m);
        auto u = cobkit::parse_cobordism_file(lift_u);
        auto v = cobkit::parse_cobordism_file(lift_v);
        if (e.index() != m.index() || e.index() != u.index() || e.index() != v.index())
            throw std::invalid_argument("lift inputs mix cobordism kinds");
        if (std::holds_alternative<cobkit::Cobordism2>(e)) {
            emit(output, cobkit::serialize(cobkit::lift(
                             std::get<cobkit::Cobordism2>(e), std::get<cobkit::Cobordism2>(m),
                             std::get<cobkit::Cobordism2>(u), std::get<cobkit::Cobordism2>(v))));
        } else {
            emit(output, cobkit::serialize(cobkit::lift1(
                             std::get<cobkit::Cobordism1>(e), std::get<cobkit::Cobordism1>(m),
                             std::get<cobkit::Cobordism1>(u), std::get<cobkit::Cobordism1>(v))));
        }
    });

    auto* eq_cmd = app.add_subcommand("eq", "compare two cobordism files");
    std::string eq_a, eq_b;
    bool eq_lax = false;
    eq_cmd->add_option("first", eq_a)->required();
    eq_cmd->add_option("second", eq_b)->required();
    eq_cmd->add_flag("--lax", eq_lax, "allow boundary permutations (sign-preserving for cob1)");
    eq_cmd->fallthrough();
    eq_cmd->callback([&] {
        auto a = cobkit::parse_cobordism_file(eq_a);
        auto b = cobkit::parse_cobordism_file(eq_b);
        if (a.index() != b.index())
            throw std::invalid_argument("cannot compare different cobordism kinds");
        bool equal = false;
        if (auto* a2 = std::get_if<cobkit::Cobordism2>(&a)) {
            const auto& b2 = std::get<cobkit::Cobordism2>(b);
            equal = eq_lax ? cobkit::lax_equivalent(*a2, b2).has_value()
                           : cobkit::strict_equals(*a2, b2);
        } else {
            const auto& a1 = std::get<cobkit::Cobordism1>(a);
            const auto& b1 = std::get<cobkit::Cobordism1>(b);
            equal = eq_lax ? cobkit::lax_equivalent1(a1, b1).has_value()
                           : cobkit::strict_equals1(a1, b1);
        }
        std::cout << (equal ? "equal" : "not equal") << "\n";
        rc = equal ? kYes : kNo;
    });

    auto* check_cmd = app.add_subcommand("check", "test class membership of a cobordism file");
    std::string check_path, check_class;
    check_cmd->add_option("file", check_path)->required();
    check_cmd->add_option("--class", check_class, "cofibration or fibration")
        ->required()
        ->check(CLI::IsMember({"cofibration", "fibration"}));
    check_cmd->fallthrough();
    check_cmd->callback([&] {
        auto c = cobkit::parse_cobordism_file(check_path);
        bool answer = false;
        if (auto* c2 = std::get_if<cobkit::Cobordism2>(&c))
            answer = check_class == "cofibration" ? cobkit::is_cofibration(*c2)
                                                  : cobkit::is_fibration(*c2);
        else {
            const auto& c1 = std::get<cobkit::Cobordism1>(c);
            answer = check_class == "cofibration" ? cobkit::is_cofibration1(c1)
                                                  : cobkit::is_fibration1(c1);
        }
        std::cout << (answer ? "true" : "false") << "\n";
        rc = answer ? kYes : kNo;
    });

    auto* map_cmd =
        app.add_subcommand("map", "send an oriented 1-cobordism to its 2-cobordism image");
    std::string map_path;
    map_cmd->add_option("file", map_path)->required();
    map_cmd->fallthrough();
    map_cmd->callback([&] {
        auto c = cobkit::parse_cobordism_file(map_path);
        auto* c1 = std::get_if<cobkit::Cobordism1>(&c);
        if (!c1) throw std::invalid_argument("map expects an oriented 1-cobordism file");
        emit(output, cobkit::serialize(cobkit::phi_to_2cob(*c1)));
    });

    auto* dot_cmd = app.add_subcommand("dot", "emit a graph description of a cobordism file");
    std::string dot_path;
    dot_cmd->add_option("file", dot_path)->required();
    dot_cmd->fallthrough();
    dot_cmd->callback([&] {
        emit(output, cobkit::to_dot(cobkit::parse_cobordism_file(dot_path)));
    });

    auto* gen_cmd = app.add_subcommand("gen", "generate a random cobordism file (seed-driven)");
    std::string gen_kind = "cob2";
    std::string gen_in = "0", gen_out = "0";
    cobkit::GenParams params;
    gen_cmd->add_option("--kind", gen_kind)->check(CLI::IsMember({"cob2", "cob1"}));
    gen_cmd->add_option("--in", gen_in, "circle count (cob2) or sign string like ++- (cob1)");
    gen_cmd->add_option("--out", gen_out, "circle count (cob2) or sign string (cob1)");
    gen_cmd->add_option("--max-components", params.max_components);
    gen_cmd->add_option("--max-genus", params.max_genus);
    gen_cmd->add_option("--loop-rate", params.loop_rate);
    gen_cmd->fallthrough();
    gen_cmd->callback([&] {
        params.seed = seed;
        if (gen_kind == "cob2") {
            int m = std::stoi(gen_in);
            int n = std::stoi(gen_out);
            if (m < 0 || n < 0) throw std::invalid_argument("boundary sizes must be >= 0");
            emit(output, cobkit::serialize(cobkit::gen_cobordism2(m, n, params)));
        } else {
            emit(output, cobkit::serialize(cobkit::gen_cobordism1(
                             signs_from_string(gen_in), signs_from_string(gen_out), params)));
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return rc;
}
