#include "fuzzystar/cli.hpp"

#include "fuzzystar/family.hpp"
#include "fuzzystar/io.hpp"
#include "fuzzystar/metric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fuzzystar {

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io::ParseError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<LevelFuzzySet> values(const std::vector<io::NamedMember>& members)
{
    std::vector<LevelFuzzySet> out;
    out.reserve(members.size());
    for (const auto& m : members) {
        out.push_back(m.value);
    }
    return out;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fuzzy star-shaped numbers under the d_p metric"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Progress messages on stderr");

    double p = 1.0;
    double spacing = kDefaultSpacing;

    auto* distance = app.add_subcommand("distance", "d_p distance between two fuzzy sets");
    std::vector<std::string> pair;
    distance->add_option("-p,--p", p, "Exponent p >= 1");
    distance->add_option("--spacing", spacing, "Polygon boundary sampling pitch");
    distance->add_option("files", pair, "Two fuzzy set documents")->required()->expected(2);

    auto* validate = app.add_subcommand("validate", "Check the defining conditions and classify");
    std::string validate_file;
    validate->add_option("-p,--p", p, "Exponent p >= 1");
    validate->add_option("file", validate_file, "Fuzzy set document")->required();

    auto* kernel = app.add_subcommand("kernel", "Kernel of an alpha-cut");
    std::string kernel_file;
    double alpha = 1.0;
    kernel->add_option("file", kernel_file, "Fuzzy set document")->required();
    kernel->add_option("-a,--alpha", alpha, "Cut level in [0, 1]");

    auto* diagnose = app.add_subcommand("diagnose", "Precompactness criteria over a directory of members");
    std::string config_file;
    std::string diagnose_dir;
    diagnose->add_option("-c,--config", config_file, "Diagnose configuration (JSON)")->required();
    diagnose->add_option("dir", diagnose_dir, "Directory of *.json members")->required();

    auto* net = app.add_subcommand("net", "Greedy epsilon-net over a directory of members");
    double eps = 0.0;
    std::string net_dir;
    net->add_option("-e,--eps", eps, "Cover radius")->required();
    net->add_option("-p,--p", p, "Exponent p >= 1");
    net->add_option("--spacing", spacing, "Polygon boundary sampling pitch");
    net->add_option("dir", net_dir, "Directory of *.json members")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*distance) {
            const LevelFuzzySet u = io::load_fuzzy(pair[0]);
            const LevelFuzzySet v = io::load_fuzzy(pair[1]);
            out << io::distance_json(dp_distance(u, v, PExponent(p), spacing));
            return 0;
        }
        if (*validate) {
            const ClassificationReport r = classify(io::load_fuzzy(validate_file), PExponent(p));
            out << io::classification_json(r);
            return r.label == FuzzyClass::neither ? 1 : 0;
        }
        if (*kernel) {
            const LevelFuzzySet u = io::load_fuzzy(kernel_file);
            out << io::kernel_json(u.alpha_cut(alpha));
            return 0;
        }
        if (*diagnose) {
            const io::DiagnoseConfig config = io::parse_config(slurp(config_file));
            const auto members = io::load_family(diagnose_dir);
            if (verbose) {
                err << "loaded " << members.size() << " members from " << diagnose_dir << "\n";
            }
            const std::vector<LevelFuzzySet> family = values(members);
            const FamilyReport r = precompactness_report(family, PExponent(config.p), config.h_grid,
                                                         config.bound_threshold, config.eps, config.spacing);
            out << io::report_json(r);
            return r.verdict.kind == VerdictKind::consistent_with_precompact ? 0 : 1;
        }
        if (*net) {
            const auto members = io::load_family(net_dir);
            if (verbose) {
                err << "loaded " << members.size() << " members from " << net_dir << "\n";
            }
            std::vector<std::string> names;
            for (const auto& m : members) {
                names.push_back(m.name);
            }
            const std::vector<LevelFuzzySet> family = values(members);
            out << io::net_json(greedy_epsilon_net(family, eps, PExponent(p), spacing), names, p);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace fuzzystar
