#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pscvote/apportionment.hpp"
#include "pscvote/coalitions.hpp"
#include "pscvote/generate.hpp"
#include "pscvote/monotonicity.hpp"
#include "pscvote/phragmen.hpp"
#include "pscvote/rounding.hpp"
#include "pscvote/stats.hpp"

namespace {

using nlohmann::json;
using namespace pscvote;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InstanceError("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json violation_json(const PscViolation& v) {
    json candidates = json::array();
    for (int c : v.coalition.candidates) {
        candidates.push_back(c + 1);
    }
    return {{"coalition_candidates", candidates},
            {"coalition_size", v.coalition.voter_count},
            {"demand", v.demand},
            {"achieved", v.achieved}};
}

json report_json(const AuditReport& report) {
    json violations = json::array();
    for (const AuditViolation& v : report.violations) {
        violations.push_back({{"line", v.line + 1},
                              {"candidate", v.candidate + 1},
                              {"before", v.before},
                              {"after", v.after}});
    }
    return {{"perturbations_tested", report.perturbations_tested},
            {"violations", violations}};
}

std::string probabilities_text(const FractionalCommittee& fractional, bool decimal) {
    std::ostringstream out;
    for (size_t c = 0; c < fractional.probabilities.size(); ++c) {
        if (c > 0) {
            out << ", ";
        }
        out << 'c' << c + 1 << '=' << to_fraction_string(fractional.probabilities[c]);
        if (decimal) {
            out << " (" << fractional.probabilities[c].convert_to<double>() << ')';
        }
    }
    return out.str();
}

int cmd_run(const std::string& rule, const std::string& path, const std::string& format,
            bool decimal) {
    const Instance inst = parse_instance(read_file(path));
    if (rule == "pfr") {
        const FractionalCommittee fractional = pfr(inst).first;
        if (format == "json") {
            json probs;
            for (size_t c = 0; c < fractional.probabilities.size(); ++c) {
                probs["c" + std::to_string(c + 1)] =
                    to_fraction_string(fractional.probabilities[c]);
            }
            std::cout << json{{"rule", "pfr"}, {"probabilities", probs}}.dump() << '\n';
        } else {
            std::cout << probabilities_text(fractional, decimal) << '\n';
        }
        return kExitOk;
    }
    const Committee committee =
        rule == "ordered" ? ordered_rule(inst).first : minimal_demand_single(inst);
    if (format == "json") {
        json members = json::array();
        for (int c : committee.members) {
            members.push_back(c + 1);
        }
        std::cout << json{{"rule", rule}, {"committee", members}}.dump() << '\n';
    } else {
        std::cout << format_committee(committee) << '\n';
    }
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& committee_text) {
    const Instance inst = parse_instance(read_file(path));
    const Committee committee = parse_committee(committee_text, inst);
    if (auto violation = check_psc(inst, committee)) {
        std::cout << violation_json(*violation).dump() << '\n';
        return kExitViolation;
    }
    std::cout << "PSC: yes\n";
    return kExitOk;
}

int cmd_sample(const std::string& path, long count, std::uint64_t seed,
               const std::string& hist_path) {
    const Instance inst = parse_instance(read_file(path));
    std::map<Committee, long> histogram;
    for (const Committee& w : sample_committees(inst, count, seed)) {
        if (check_psc(inst, w)) {
            // Contract of the rounding pipeline; never emit a bad committee.
            throw InstanceError("sampled committee fails PSC");
        }
        json members = json::array();
        for (int c : w.members) {
            members.push_back(c + 1);
        }
        std::cout << members.dump() << '\n';
        ++histogram[w];
    }
    if (!hist_path.empty()) {
        std::ofstream out(hist_path);
        out << "committee,count\n";
        for (const auto& [w, n] : histogram) {
            out << '"' << format_committee(w) << "\"," << n << '\n';
        }
    }
    return kExitOk;
}

int cmd_stats(const std::string& dir, long count, std::uint64_t seed, long cap,
              const std::string& aggregate_path) {
    std::vector<std::string> warnings;
    const auto rows = stats_for_directory(dir, count, seed, &warnings, cap);
    for (const std::string& w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    std::cout << stats_csv(rows);
    if (!aggregate_path.empty()) {
        std::ofstream out(aggregate_path);
        out << aggregate_csv(aggregate_stats(rows));
    }
    return kExitOk;
}

int cmd_audit(const std::string& mode, const std::string& path,
              const std::vector<long>& random_spec, long cap) {
    std::vector<Instance> instances;
    if (!path.empty()) {
        instances.push_back(parse_instance(read_file(path)));
    } else {
        const long n = random_spec[0];
        const int m = static_cast<int>(random_spec[1]);
        const int k = static_cast<int>(random_spec[2]);
        const long count = random_spec[3];
        RngStream rng(static_cast<std::uint64_t>(random_spec[4]));
        for (long i = 0; i < count; ++i) {
            instances.push_back(random_instance(rng, n, m, k));
        }
    }
    long tested = 0;
    json all_violations = json::array();
    for (const Instance& inst : instances) {
        const AuditReport report =
            mode == "pfr" ? audit_pfr(inst) : audit_psc_set(inst, cap);
        tested += report.perturbations_tested;
        for (const json& v : report_json(report)["violations"]) {
            json tagged = v;
            tagged["instance"] = serialize_instance(inst);
            all_violations.push_back(tagged);
        }
    }
    std::cout << json{{"mode", mode},
                      {"instances", instances.size()},
                      {"perturbations_tested", tested},
                      {"violations", all_violations}}
                     .dump()
              << '\n';
    return all_violations.empty() ? kExitOk : kExitViolation;
}

PartyProfile profile_from_votes(const std::string& votes_text, int seats,
                                std::vector<std::string>& party_names) {
    std::vector<long> votes;
    std::stringstream in(votes_text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw InstanceError("malformed --votes entry: " + item);
        }
        party_names.push_back(item.substr(0, eq));
        votes.push_back(std::stol(item.substr(eq + 1)));
        if (votes.back() < 1) {
            throw InstanceError("vote counts must be positive");
        }
    }
    if (votes.empty()) {
        throw InstanceError("--votes must name at least one party");
    }
    PartyProfile profile;
    profile.party_count = static_cast<int>(votes.size());
    profile.house_size = seats;
    for (int party = 0; party < profile.party_count; ++party) {
        Ballot b;
        b.multiplicity = votes[static_cast<size_t>(party)];
        b.ranking.push_back(party);
        for (int other = 0; other < profile.party_count; ++other) {
            if (other != party) {
                b.ranking.push_back(other);
            }
        }
        profile.ballots.push_back(std::move(b));
    }
    return profile;
}

int cmd_apportion(const std::string& votes_text, const std::string& path, int seats,
                  std::uint64_t seed) {
    PartyProfile profile;
    std::vector<std::string> names;
    if (!votes_text.empty()) {
        profile = profile_from_votes(votes_text, seats, names);
    } else {
        const Instance as_instance = parse_instance(read_file(path));
        profile.party_count = as_instance.num_candidates();
        profile.house_size = as_instance.committee_size();
        profile.ballots = as_instance.ballots();
    }
    if (names.empty()) {
        for (int party = 0; party < profile.party_count; ++party) {
            names.push_back("party" + std::to_string(party + 1));
        }
    }
    auto [alloc, expected] = apportion(profile, seed);
    if (!check_quota(profile, alloc)) {
        throw InstanceError("apportionment result violates quota");
    }
    json seats_json;
    json expected_json;
    for (int party = 0; party < profile.party_count; ++party) {
        seats_json[names[static_cast<size_t>(party)]] =
            alloc.seats[static_cast<size_t>(party)];
        expected_json[names[static_cast<size_t>(party)]] =
            to_fraction_string(expected[static_cast<size_t>(party)]);
    }
    std::cout << json{{"seats", seats_json}, {"expected_seats", expected_json}}.dump()
              << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proportional multiwinner voting under ranked preferences: PSC "
                 "verification, Phragmen's ordered rule and its fractional variant, "
                 "dependent rounding into PSC lotteries, monotonicity audits, and "
                 "randomized apportionment"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string format = "text";
    long cap = kDefaultEnumerationCap;
    app.add_option("--seed", seed, "Random seed for all sampling commands");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cap", cap, "Enumeration cap for brute-force committee searches");

    auto* run = app.add_subcommand("run", "Run a rule on a ballot file");
    std::string rule;
    std::string file;
    bool decimal = false;
    run->add_option("rule", rule, "Rule to run")
        ->required()
        ->check(CLI::IsMember({"ordered", "pfr", "minimal-demand"}));
    run->add_option("file", file, "Ballot file")->required();
    run->add_flag("--decimal", decimal, "Also print probabilities as decimals");

    auto* check = app.add_subcommand("check", "Check a committee for PSC");
    std::string committee_text;
    check->add_option("file", file, "Ballot file")->required();
    check->add_option("committee", committee_text, "Comma-separated 1-based indices")
        ->required();

    auto* sample = app.add_subcommand("sample", "Sample committees from the PFR lottery");
    long count = 1000;
    std::string hist_path;
    sample->add_option("file", file, "Ballot file")->required();
    sample->add_option("--count", count, "Number of committees to sample");
    sample->add_option("--hist", hist_path, "Write a committee,count histogram CSV here");

    auto* stats = app.add_subcommand("stats", "Summarize a directory of ballot files");
    std::string dir;
    std::string aggregate_path;
    stats->add_option("dir", dir, "Directory of ballot files")->required();
    stats->add_option("--count", count, "Samples per instance");
    stats->add_option("--aggregate", aggregate_path, "Write per-(m,k) averages CSV here");

    auto* audit = app.add_subcommand("audit", "Candidate monotonicity audit");
    std::string mode;
    std::vector<long> random_spec;
    audit->add_option("mode", mode, "Audit mode")
        ->required()
        ->check(CLI::IsMember({"psc-set", "pfr"}));
    audit->add_option("file", file, "Ballot file to audit");
    audit
        ->add_option("--random", random_spec,
                     "Sweep random instances: N M K COUNT SEED")
        ->expected(5);

    auto* apportion_cmd = app.add_subcommand("apportion", "Randomized apportionment");
    std::string votes_text;
    int seats = 0;
    apportion_cmd->add_option("--votes", votes_text, "Vote counts, e.g. A=2,B=1");
    apportion_cmd->add_option("--seats", seats, "House size");
    apportion_cmd->add_option("--file", file, "Party ballot file (indices = parties)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    file.clear();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run) {
            return cmd_run(rule, file, format, decimal);
        }
        if (*check) {
            return cmd_check(file, committee_text);
        }
        if (*sample) {
            return cmd_sample(file, count, seed, hist_path);
        }
        if (*stats) {
            return cmd_stats(dir, count, seed, cap, aggregate_path);
        }
        if (*audit) {
            if (file.empty() && random_spec.size() != 5) {
                std::cerr << "audit requires a ballot file or --random\n";
                return kExitUsage;
            }
            return cmd_audit(mode, file, random_spec, cap);
        }
        if (*apportion_cmd) {
            if (votes_text.empty() == file.empty()) {
                std::cerr << "apportion requires exactly one of --votes or --file\n";
                return kExitUsage;
            }
            if (!votes_text.empty() && seats < 1) {
                std::cerr << "--votes requires --seats >= 1\n";
                return kExitUsage;
            }
            return cmd_apportion(votes_text, file, seats, seed);
        }
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const InstanceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
