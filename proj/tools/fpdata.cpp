// Command line front end: validate, reduce, verify, generate, connect and
// fuzz fixed point data of circle actions on oriented 6-manifolds.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fpd/fuzz.hpp"
#include "fpd/generators.hpp"
#include "fpd/reducer.hpp"
#include "fpd/textio.hpp"
#include "fpd/validator.hpp"

namespace {

// Exit codes, one per outcome category.
constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kParseFailure = 2;
constexpr int kNotRealizable = 3;
constexpr int kUsage = 64;
constexpr int kIoFailure = 66;
constexpr int kInternal = 70;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path + "'");
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("error while writing '" + path + "'");
}

fpd::Int arg_int(const std::string& text) {
    try {
        return fpd::parse_int(text);
    } catch (const fpd::ParseError& e) {
        throw CLI::ValidationError(e.what());
    }
}

std::string step_kinds(const fpd::CobordismCertificate& cert) {
    std::string out;
    for (const fpd::ReductionStep& s : cert.steps) {
        if (!out.empty()) out += ' ';
        out += fpd::kind_name(s.kind);
    }
    return out;
}

std::pair<fpd::FixedPoint, fpd::FixedPoint> parse_pair(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw fpd::ParseError("pair must look like '+ W1 W2 W3=- W1 W2 W3', got '" + text + "'");
    auto side = [&](std::string s) {
        // Allow the sign to sit directly against the first weight.
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.insert(1, " ");
        return fpd::parse_point(s);
    };
    return {side(text.substr(0, eq)), side(text.substr(eq + 1))};
}

int dispatch(int argc, char** argv) {
    CLI::App app{"fixed point data of circle actions on oriented 6-manifolds: "
                 "validate, reduce to connected-sum certificates, replay, generate"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "run all necessary-condition checks");
    std::string validate_file;
    bool validate_json = false;
    validate->add_option("FILE", validate_file, "data file ('-' for stdin)")->required();
    validate->add_flag("--json", validate_json, "emit the report as JSON");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "reduce data to the empty set, emit a certificate");
    std::string reduce_file, reduce_cert;
    bool reduce_quiet = false;
    reduce->add_option("FILE", reduce_file, "data file ('-' for stdin)")->required();
    reduce->add_option("--cert", reduce_cert, "write the certificate to this file");
    reduce->add_flag("--quiet", reduce_quiet, "suppress stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "replay a certificate");
    std::string verify_file;
    verify->add_option("CERTFILE", verify_file, "certificate file ('-' for stdin)")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "emit generator fixed point data");
    gen->require_subcommand(1);
    std::vector<std::string> gen_params;
    bool gen_reverse = false;
    std::string gen_out;
    auto add_gen = [&](const char* name, const char* desc, int nparams) {
        auto* sub = gen->add_subcommand(name, desc);
        sub->add_option("PARAMS", gen_params, "integer parameters")
            ->required()
            ->expected(nparams);
        return sub;
    };
    auto* gen_s6 = add_gen("s6", "rotation of the 6-sphere: A B C", 3);
    auto* gen_cp3 = add_gen("cp3", "projective space action: A B C with A < B < C", 3);
    auto* gen_zn = add_gen("zn", "Hirzebruch analogue: N A B C", 4);
    auto* gen_z2sum = add_gen("z2sum", "Z2 glued to reversed Z2: A E with 2E < A", 2);
    for (auto* sub : {gen_s6, gen_cp3, gen_zn, gen_z2sum}) {
        sub->add_flag("--reverse", gen_reverse, "reverse the orientation");
        sub->add_option("-o,--output", gen_out, "output file (default stdout)");
    }

    // connect
    auto* connect = app.add_subcommand("connect", "equivariant connected sum of two data files");
    std::string connect_a, connect_b;
    std::vector<std::string> connect_pairs;
    connect->add_option("FILE1", connect_a, "first data file")->required();
    connect->add_option("FILE2", connect_b, "second data file")->required();
    connect->add_option("--pair", connect_pairs,
                        "glue pair '+ W1 W2 W3=- W1 W2 W3' (repeatable)")
        ->required();

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "randomized reduce-and-replay closure testing");
    fpd::FuzzOptions fuzz_options;
    fuzz->add_option("--seed", fuzz_options.seed, "base seed")->capture_default_str();
    fuzz->add_option("--iterations", fuzz_options.iterations, "iteration count")
        ->capture_default_str();
    fuzz->add_option("--max-summands", fuzz_options.max_summands,
                     "summands per connected sum")
        ->capture_default_str();
    fuzz->add_option("--max-param", fuzz_options.max_param, "largest generator parameter")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (validate->parsed()) {
        const fpd::FixedPointData data = fpd::parse_data(read_input(validate_file));
        const fpd::ValidationReport report = fpd::validate_all(data);
        std::cout << (validate_json ? fpd::report_to_json(report) : fpd::report_to_text(report));
        return report.overall ? kOk : kValidationFailure;
    }

    if (reduce->parsed()) {
        const fpd::FixedPointData data = fpd::parse_data(read_input(reduce_file));
        const fpd::CobordismCertificate cert = fpd::reduce_to_empty(data);
        const std::string json = fpd::certificate_to_json(cert);
        if (!reduce_cert.empty()) {
            write_output(reduce_cert, json);
            if (!reduce_quiet)
                std::cout << "reduced " << cert.initial.size() << " points in "
                          << cert.steps.size() << " steps: " << step_kinds(cert) << "\n";
        } else if (!reduce_quiet) {
            std::cout << json;
        }
        return kOk;
    }

    if (verify->parsed()) {
        const fpd::CobordismCertificate cert =
            fpd::certificate_from_json(read_input(verify_file));
        std::string diag;
        if (fpd::verify_certificate(cert, &diag)) {
            std::cout << "certificate verifies: " << cert.steps.size()
                      << " steps reach the empty set\n";
            return kOk;
        }
        std::cout << "certificate verification failed: " << diag << "\n";
        return kValidationFailure;
    }

    if (gen->parsed()) {
        fpd::FixedPointData data;
        if (gen_s6->parsed()) {
            data = fpd::gen_s6(arg_int(gen_params[0]), arg_int(gen_params[1]),
                               arg_int(gen_params[2]));
        } else if (gen_cp3->parsed()) {
            data = fpd::gen_cp3(arg_int(gen_params[0]), arg_int(gen_params[1]),
                                arg_int(gen_params[2]));
        } else if (gen_zn->parsed()) {
            data = fpd::gen_zn(arg_int(gen_params[0]), arg_int(gen_params[1]),
                               arg_int(gen_params[2]), arg_int(gen_params[3]));
        } else {
            data = fpd::gen_z2sum(arg_int(gen_params[0]), arg_int(gen_params[1]));
        }
        if (gen_reverse) data = fpd::reverse_orientation(data);
        write_output(gen_out, fpd::print_data(data));
        return kOk;
    }

    if (connect->parsed()) {
        const fpd::FixedPointData left = fpd::parse_data(read_input(connect_a));
        const fpd::FixedPointData right = fpd::parse_data(read_input(connect_b));
        std::vector<std::pair<fpd::FixedPoint, fpd::FixedPoint>> pairs;
        for (const std::string& text : connect_pairs) pairs.push_back(parse_pair(text));
        std::cout << fpd::print_data(fpd::connected_sum(left, right, pairs));
        return kOk;
    }

    if (fuzz->parsed()) {
        const fpd::FuzzOutcome outcome = fpd::run_fuzz(fuzz_options, &std::cerr);
        std::cout << "fuzz: " << (outcome.total - outcome.failures) << "/" << outcome.total
                  << " iterations reduced and replayed\n";
        return outcome.ok() ? kOk : kValidationFailure;
    }

    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const fpd::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const fpd::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const fpd::NotRealizable& e) {
        std::cerr << "not realizable: " << e.what() << "\n";
        return kNotRealizable;
    } catch (const fpd::PairNotPresent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const fpd::WeightMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const fpd::SignMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const fpd::NonPositiveWeight& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const fpd::ParameterOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const fpd::DegenerateParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const fpd::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
