// Command line front end. Reports are JSON on stdout: an envelope with the
// command, input digests, and a "report" body. Timing goes to stderr so the
// stdout bytes depend only on the inputs. Exit codes: 0 for a completed
// analysis (including in-body outcomes like "infeasible" or "not
// applicable"), 1 for domain failures, 2 for unreadable or malformed input.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlcp/analysis.hpp"
#include "tlcp/config.hpp"
#include "tlcp/errors.hpp"
#include "tlcp/io.hpp"

namespace {

using tlcp::Json;

void emit(std::string_view command, const std::vector<std::filesystem::path>& inputs,
          Json body) {
    Json env = tlcp::report_envelope(command, inputs);
    env["report"] = std::move(body);
    std::cout << env.dump(2) << '\n';
}

tlcp::Solution first_enumerated_solution(const tlcp::TLCPInstance& inst,
                                         const tlcp::SolutionSet& sols) {
    const tlcp::DenseTensor& z = sols.pieces.front().vertices.front();
    return {z, add(contract(inst.m, z), inst.q)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification, solving, and solution-set analysis for linear "
                 "complementarity problems over tensor spaces"};
    app.require_subcommand(1);

    int cap = tlcp::enumeration_cap();
    app.add_option("--cap", cap, "flat dimension ceiling for enumerative procedures")
        ->capture_default_str();
    std::string scan_choice;
    app.add_option("--scan", scan_choice, "scan kernels: serial or parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));

    std::string m_file, q_file, z_file, out_file;
    std::string method = "lemke";

    CLI::App* classify_cmd = app.add_subcommand("classify", "class membership of a tensor");
    classify_cmd->add_option("tensor", m_file, "tensor file")->required();

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve one instance");
    solve_cmd->add_option("tensor", m_file, "tensor file")->required();
    solve_cmd->add_option("q", q_file, "constant tensor file")->required();
    solve_cmd->add_option("--method", method, "lemke or enumerate")
        ->check(CLI::IsMember({"lemke", "enumerate"}))
        ->capture_default_str();

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "full solution set by pieces");
    enum_cmd->add_option("tensor", m_file, "tensor file")->required();
    enum_cmd->add_option("q", q_file, "constant tensor file")->required();

    CLI::App* conv_cmd = app.add_subcommand("convexity", "convexity of the solution set");
    conv_cmd->add_option("tensor", m_file, "tensor file")->required();
    conv_cmd->add_option("q", q_file, "constant tensor file")->required();

    CLI::App* wit_cmd =
        app.add_subcommand("witness", "construct a nonconvex solution set, when possible");
    wit_cmd->add_option("tensor", m_file, "tensor file")->required();

    CLI::App* contract_cmd = app.add_subcommand("contract", "apply a tensor to an operand");
    contract_cmd->add_option("tensor", m_file, "tensor file")->required();
    contract_cmd->add_option("operand", z_file, "operand tensor file")->required();
    contract_cmd->add_option("-o,--output", out_file, "also write the result as a tensor file");

    CLI::App* flatten_cmd = app.add_subcommand("flatten", "matrix form of an even-order tensor");
    flatten_cmd->add_option("tensor", m_file, "tensor file")->required();

    tlcp::HarnessOptions hopt;
    CLI::App* harness_cmd =
        app.add_subcommand("harness", "randomized cross-validation of the structural claims");
    harness_cmd->add_option("--seed", hopt.seed, "generator seed")->capture_default_str();
    harness_cmd->add_option("--count", hopt.count, "number of tensors")->capture_default_str();
    harness_cmd->add_option("--blocks", hopt.m, "half order of the generated tensors")
        ->capture_default_str();
    harness_cmd->add_option("--side", hopt.n, "side of the generated tensors")
        ->capture_default_str();
    harness_cmd->add_option("--lo", hopt.entry_lo, "smallest entry")->capture_default_str();
    harness_cmd->add_option("--hi", hopt.entry_hi, "largest entry")->capture_default_str();
    harness_cmd->add_option("--q-trials", hopt.q_trials, "constant tensors per generated tensor")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (!scan_choice.empty())
        tlcp::scan::set_default_mode(scan_choice == "serial" ? tlcp::scan::Mode::Serial
                                                             : tlcp::scan::Mode::Parallel);
    const tlcp::ClassifyOptions copt{cap, tlcp::scan::default_mode()};
    const tlcp::EnumerateOptions eopt{cap, tlcp::scan::default_mode()};
    hopt.cap = cap;
    hopt.mode = tlcp::scan::default_mode();

    const CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const auto started = std::chrono::steady_clock::now();
    int code = 0;

    try {
        if (sub == classify_cmd) {
            tlcp::DenseTensor m = tlcp::parse_tensor(m_file);
            emit(command, {m_file}, tlcp::classification_to_json(tlcp::classify(m, copt)));
        } else if (sub == solve_cmd) {
            tlcp::TLCPInstance inst(tlcp::parse_tensor(m_file), tlcp::parse_tensor(q_file));
            Json body;
            if (method == "lemke") {
                body = tlcp::lemke_to_json(tlcp::lemke_solve(inst, cap));
            } else {
                tlcp::SolutionSet sols = tlcp::enumerate_solution_set(inst, eopt);
                body = Json::object();
                if (sols.empty()) {
                    body["kind"] = "empty";
                    body["solution"] = nullptr;
                } else {
                    body["kind"] = "solution";
                    body["solution"] =
                        tlcp::solution_to_json(first_enumerated_solution(inst, sols));
                }
            }
            emit(command, {m_file, q_file}, std::move(body));
        } else if (sub == enum_cmd) {
            tlcp::TLCPInstance inst(tlcp::parse_tensor(m_file), tlcp::parse_tensor(q_file));
            emit(command, {m_file, q_file},
                 tlcp::solution_set_to_json(tlcp::enumerate_solution_set(inst, eopt)));
        } else if (sub == conv_cmd) {
            tlcp::TLCPInstance inst(tlcp::parse_tensor(m_file), tlcp::parse_tensor(q_file));
            emit(command, {m_file, q_file},
                 tlcp::convexity_to_json(tlcp::check_convexity(inst, eopt)));
        } else if (sub == wit_cmd) {
            tlcp::DenseTensor m = tlcp::parse_tensor(m_file);
            Json body = Json::object();
            try {
                Json w = tlcp::witness_to_json(tlcp::construct_nonconvex_witness(m, copt));
                body["applicable"] = true;
                for (auto& item : w.items()) body[item.key()] = item.value();
            } catch (const tlcp::NotApplicableError& e) {
                body["applicable"] = false;
                body["reason"] = e.what();
            }
            emit(command, {m_file}, std::move(body));
        } else if (sub == contract_cmd) {
            tlcp::DenseTensor m = tlcp::parse_tensor(m_file);
            tlcp::DenseTensor z = tlcp::parse_tensor(z_file);
            tlcp::DenseTensor r = tlcp::contract(m, z);
            if (!out_file.empty()) tlcp::write_tensor(r, out_file);
            Json body = Json::object();
            body["result"] = tlcp::tensor_to_json(r);
            emit(command, {m_file, z_file}, std::move(body));
        } else if (sub == flatten_cmd) {
            tlcp::DenseTensor m = tlcp::parse_tensor(m_file);
            Json body = Json::object();
            body["matrix"] = tlcp::matrix_to_json(tlcp::flatten(m));
            emit(command, {m_file}, std::move(body));
        } else {
            tlcp::HarnessReport rep = tlcp::theorem_harness(hopt);
            emit(command, {}, tlcp::harness_to_json(rep));
            code = rep.ok() ? 0 : 1;
        }
    } catch (const tlcp::ParseError& e) {
        std::cerr << "tlcp: error: " << e.what() << '\n';
        code = 2;
    } catch (const tlcp::SchemaViolationError& e) {
        std::cerr << "tlcp: error: " << e.what() << '\n';
        code = 2;
    } catch (const tlcp::Error& e) {
        std::cerr << "tlcp: error: " << e.what() << '\n';
        code = 1;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::fprintf(stderr, "tlcp: %s finished in %lld ms\n", command.c_str(),
                 static_cast<long long>(elapsed.count()));
    return code;
}
