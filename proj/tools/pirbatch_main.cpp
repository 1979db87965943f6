/* Copyright 2026 The pirbatch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "pirbatch/commands.hpp"
#include "pirbatch/errors.hpp"

namespace cmd = pirbatch::commands;
namespace desc = pirbatch::descriptor;

namespace {

int emit_descriptor(const desc::Descriptor& d, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << desc::to_json(d);
    } else {
        desc::write_file(output, d);
        std::cout << "wrote " << output << '\n';
    }
    cmd::print_profile(output.empty() || output == "-" ? std::cerr : std::cout, cmd::profile(d));
    return cmd::kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Batch and PIR code constructions with exhaustive certification"};
    app.require_subcommand(1);
    int status = cmd::kPass;

    // build
    auto* build = app.add_subcommand("build", "Build a code and write its JSON descriptor");
    build->require_subcommand(1);
    std::string build_out;
    build->add_option("-o,--output", build_out, "Descriptor path (stdout when omitted)");

    auto* build_mult = build->add_subcommand("multiplicity", "Multiplicity code C(m,d,s,q)");
    std::uint32_t m = 0, d = 0, q = 0;
    std::size_t s = 0;
    build_mult->add_option("--m", m, "Derivative order")->required();
    build_mult->add_option("--d", d, "Degree bound")->required();
    build_mult->add_option("--s", s, "Number of variables")->required();
    build_mult->add_option("--q", q, "Field order")->required();
    build_mult->add_option("-o,--output", build_out, "Descriptor path");

    auto* build_array = build->add_subcommand("array", "Diagonal-parity array code");
    cmd::ArrayBuildOptions array_opts;
    std::string slopes_text;
    build_array->add_option("--r", array_opts.r, "Rows");
    build_array->add_option("--p", array_opts.p, "Columns (prime)");
    build_array->add_option("--k", array_opts.k, "Number of slopes");
    build_array->add_option("--slopes", slopes_text, "Comma separated slopes");
    build_array->add_flag("--five-batch", array_opts.five_batch, "r = p, slopes 0..4 and a global parity bit");
    build_array->add_flag("--global-parity", array_opts.global_parity, "Append the XOR of all data bits");
    build_array->add_option("-o,--output", build_out, "Descriptor path");

    // certify
    auto* certify = app.add_subcommand("certify", "Certify the PIR or batch property of a descriptor");
    std::string descriptor_path;
    cmd::CertifyOptions cert;
    std::size_t cert_k = 0;
    certify->add_option("descriptor", descriptor_path, "Descriptor JSON")->required();
    certify->add_option("--mode", cert.mode, "pir or batch")->check(CLI::IsMember({"pir", "batch"}));
    certify->add_option("--k", cert_k, "Sets per request (defaults to the construction's k)");
    certify->add_option("--jobs", cert.jobs, "Worker threads")->check(CLI::PositiveNumber);
    certify->add_option("--seed", cert.seed, "Sampling seed");
    certify->add_option("--threshold", cert.threshold, "Sample requests above this many");
    certify->add_option("--report", cert.report_path, "CSV report path");
    certify->add_option("--summary", cert.summary_path, "JSON summary path");
    certify->add_flag("--all-rows", cert.all_rows, "Report passing requests too");

    // curves
    auto* curves = app.add_subcommand("curves", "Emit redundancy exponent curves as CSV");
    std::string which, step_text = "0.1", max_text = "2", curves_out;
    cmd::CurveOptions curve_opts;
    curves->add_option("which", which, "pir-binary, pir-qary or batch")->required();
    curves->add_option("--step", step_text, "Epsilon step, decimal or fraction");
    curves->add_option("--max", max_text, "Largest epsilon");
    curves->add_option("--s-show", curve_opts.s_show, "Print per-s series up to this s");
    curves->add_option("-o,--output", curves_out, "CSV path (stdout when omitted)");

    // roundtrip
    auto* roundtrip = app.add_subcommand("roundtrip", "Encode a random message and recover every symbol");
    std::uint64_t seed = 20160701;
    bool zero = false;
    roundtrip->add_option("descriptor", descriptor_path, "Descriptor JSON")->required();
    roundtrip->add_option("--seed", seed, "Message seed");
    roundtrip->add_flag("--zero", zero, "Use the all-zero message");

    // encode
    auto* encode = app.add_subcommand("encode", "Print the flattened codeword of a message");
    std::string message;
    encode->add_option("descriptor", descriptor_path, "Descriptor JSON")->required();
    encode->add_option("--message", message, "Comma separated base-field entries");
    encode->add_option("--seed", seed, "Seed for a random message");

    // recover
    auto* recover = app.add_subcommand("recover", "Recover one symbol through each of its recovering sets");
    std::string codeword;
    std::size_t index = 0;
    recover->add_option("descriptor", descriptor_path, "Descriptor JSON")->required();
    recover->add_option("--codeword", codeword, "Comma separated flattened codeword")->required();
    recover->add_option("--index", index, "Data bit (array) or point (multiplicity)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cmd::kPass : cmd::kUsage;
    }

    try {
        if (*build_mult) {
            status = emit_descriptor(cmd::build_multiplicity(m, d, s, q), build_out);
        } else if (*build_array) {
            if (!slopes_text.empty()) array_opts.slopes = cmd::parse_list(slopes_text);
            status = emit_descriptor(cmd::build_array(array_opts), build_out);
        } else if (*certify) {
            if (certify->count("--k")) cert.k = cert_k;
            status = cmd::cmd_certify(desc::read_file(descriptor_path), cert, std::cout);
        } else if (*curves) {
            curve_opts.step = pirbatch::parse_rational(step_text);
            curve_opts.max = pirbatch::parse_rational(max_text);
            const auto kind = cmd::parse_curve_kind(which);
            const auto rows = cmd::curve_rows(kind, curve_opts);
            if (curves_out.empty()) {
                cmd::write_curves_csv(std::cout, rows);
            } else {
                std::ofstream os(curves_out);
                if (!os) throw std::runtime_error("cannot write " + curves_out);
                cmd::write_curves_csv(os, rows);
                std::cout << "wrote " << rows.size() << " rows to " << curves_out << '\n';
            }
            if (kind == cmd::CurveKind::Batch) {
                (curves_out.empty() ? std::cerr : std::cout)
                    << "array code beats multiplicity batch for epsilon < " << pirbatch::to_string(cmd::batch_crossover())
                    << " by the closed forms; the published threshold is " << cmd::kStatedCrossover << '\n';
            }
        } else if (*roundtrip) {
            status = cmd::cmd_roundtrip(desc::read_file(descriptor_path), seed, zero, std::cout);
        } else if (*encode) {
            std::optional<std::string> msg;
            if (encode->count("--message")) msg = message;
            status = cmd::cmd_encode(desc::read_file(descriptor_path), msg, seed, std::cout);
        } else if (*recover) {
            status = cmd::cmd_recover(desc::read_file(descriptor_path), codeword, index, std::cout);
        }
    } catch (const pirbatch::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cmd::kUsage;
    } catch (const pirbatch::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cmd::kUsage;
    } catch (const pirbatch::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cmd::kUsage;
    } catch (const pirbatch::CertificationError& e) {
        std::cerr << "certification failed: " << e.what() << '\n';
        return cmd::kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cmd::kFailure;
    }
    return status;
}
