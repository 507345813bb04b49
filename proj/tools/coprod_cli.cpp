// coprod: certificates for finite quotients of free products of finite groups.

#include "coprod/errors.hpp"
#include "coprod/fixtures.hpp"
#include "coprod/io/json_io.hpp"
#include "coprod/refute/refutation.hpp"
#include "coprod/separation/certificate.hpp"
#include "coprod/separation/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace coprod;

namespace {

struct Common {
    std::size_t verify_len = kDefaultVerifyLen;
    std::string conjugator = "all-ones";
    std::uint64_t seed = 1;
    std::size_t closure_cap = 10000;
    std::size_t retry_limit = 5;
    std::string out;

    RunConfig config() const {
        if (verify_len < 2) throw ValidationError("--verify-len must be at least 2");
        if (retry_limit < 1) throw ValidationError("--retry-limit must be at least 1");
        if (closure_cap < 1) throw ValidationError("--closure-cap must be positive");
        RunConfig c;
        c.verify_len = verify_len;
        c.conjugator = ConjugatorSpec::parse(conjugator);
        c.seed = seed;
        c.closure_cap = closure_cap;
        c.retry_limit = retry_limit;
        return c;
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--verify-len", c.verify_len, "Faithfulness check word length")->capture_default_str();
    cmd->add_option("--conjugator", c.conjugator, "all-ones | random:<seed>")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Seed of the conjugator retry sequence")->capture_default_str();
    cmd->add_option("--closure-cap", c.closure_cap, "Largest image group to enumerate")->capture_default_str();
    cmd->add_option("--retry-limit", c.retry_limit, "Conjugators tried before giving up")->capture_default_str();
    cmd->add_option("--out", c.out, "Output file (stdout when omitted)");
}

void emit(const Json& j, const std::string& out) {
    if (out.empty()) std::cout << j.dump(2) << "\n";
    else write_json_file(out, j);
}

GroupPtr load_group(const std::string& path) {
    return std::make_shared<const FiniteGroup>(group_from_json(read_json_file(path)));
}

// Inline JSON when it looks like an array, otherwise a file.
Json load_word(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '[') return parse_json(arg, "--word");
    return read_json_file(arg);
}

ElemIndex pick(const FiniteGroup& f, const std::string& label, const char* flag) {
    if (label.empty()) {
        if (f.is_trivial()) throw ValidationError(std::string("no non-identity element for ") + flag);
        return f.first_nonidentity();
    }
    ElemIndex e = f.index_of(label);
    if (e == f.identity()) throw ValidationError(std::string(flag) + " must not be the identity");
    return e;
}

int report(const VerifyReport& r) {
    for (const auto& c : r.checks)
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
    if (const auto* f = r.first_failure()) {
        std::cerr << "verification failed at check \"" << f->name << "\"\n";
        return VerificationError("").exit_code();
    }
    std::cout << "certificate verified\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificates for finite quotients of free products of finite groups"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    Common common;
    std::string g_path, h_path, word, g_label, h_label, input, oracle;
    std::uint64_t m = 0;

    auto* sep = app.add_subcommand("separate", "Separate a word of G*H from the identity in a finite quotient");
    sep->add_option("--G", g_path, "Group file for G")->required();
    sep->add_option("--H", h_path, "Group file for H")->required();
    sep->add_option("--word", word, "Word as JSON (or a file holding it)")->required();
    add_common(sep, common);

    auto* quo = app.add_subcommand("quotient", "Finite quotient in which gh has order > m");
    quo->add_option("--G", g_path, "Group file for G")->required();
    quo->add_option("--H", h_path, "Group file for H")->required();
    quo->add_option("-m", m, "Order bound")->required()->check(CLI::PositiveNumber);
    quo->add_option("--g", g_label, "Element of G (default: first non-identity)");
    quo->add_option("--h", h_label, "Element of H (default: first non-identity)");
    add_common(quo, common);

    auto* ref = app.add_subcommand("refute", "Show a candidate (F, iota_G, iota_H) is not a coproduct");
    ref->add_option("candidate", input, "Candidate file")->required();
    ref->add_option("--g", g_label, "Element of G (default: first non-identity)");
    ref->add_option("--h", h_label, "Element of H (default: first non-identity)");
    ref->add_option("--oracle", oracle, "Extra cross-check")->check(CLI::IsMember({"dihedral"}));
    add_common(ref, common);

    auto* ver = app.add_subcommand("verify", "Replay a certificate with modular arithmetic");
    ver->add_option("certificate", input, "Certificate or refutation file")->required();

    auto* fix = app.add_subcommand("fixtures", "Regenerate the fixture set");
    add_common(fix, common);
    fix->get_option("--out")->required()->description("Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : ValidationError("").exit_code();
    }

    try {
        if (*sep) {
            FreeProduct fp(load_group(g_path), load_group(h_path));
            Word w = word_from_json(fp, load_word(word));
            emit(certificate_to_json(separate_word(fp, w, common.config())), common.out);
        } else if (*quo) {
            FreeProduct fp(load_group(g_path), load_group(h_path));
            ElemIndex g = pick(fp.G(), g_label, "--g"), h = pick(fp.H(), h_label, "--h");
            emit(certificate_to_json(build_quotient(fp, g, h, m, common.config())), common.out);
        } else if (*ref) {
            CoproductCandidate c = candidate_from_json(read_json_file(input));
            ElemIndex g = pick(*c.G, g_label, "--g"), h = pick(*c.H, h_label, "--h");
            RefuteOptions opts;
            opts.dihedral = oracle == "dihedral";
            RefutationCertificate r = refute(c, g, h, common.config(), opts);
            for (const auto& check : r.oracle_checks)
                if (!check.passed) throw PipelineError("oracle check " + check.name + " failed: " + check.detail);
            emit(refutation_to_json(r), common.out);
        } else if (*ver) {
            Json j = read_json_file(input);
            return report(j.is_object() && j.contains("candidate") ? verify_refutation(j) : verify_certificate(j));
        } else if (*fix) {
            FixtureSet files = generate_fixtures(common.config());
            write_fixtures(common.out, files);
            std::cout << "wrote " << files.size() << " files to " << common.out << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return ValidationError("").exit_code();
    }
    return 0;
}
