#include "parking/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "parking/circular.hpp"
#include "parking/core.hpp"
#include "parking/count.hpp"
#include "parking/oracle.hpp"
#include "parking/pollak.hpp"

namespace parking::cli {

namespace {

using nlohmann::json;

struct Config {
    std::vector<Spot> sizes;
    std::vector<Spot> prefs;
    bool circular = false;
    bool as_json = false;
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    std::size_t max_cars = 0;
    Spot max_total = 0;
    std::uint64_t budget = default_budget;
    std::size_t partitions = 0;

    [[nodiscard]] Flavor flavor() const { return circular ? Flavor::circular : Flavor::linear; }
};

std::string join(std::span<const Spot> v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

json header(const std::string& command, const std::optional<SizeVector>& sizes, Flavor flavor) {
    json doc;
    doc["command"] = command;
    if (sizes) {
        const auto v = sizes->values();
        doc["sizes"] = std::vector<Spot>(v.begin(), v.end());
    } else {
        doc["sizes"] = nullptr;
    }
    doc["flavor"] = to_string(flavor);
    return doc;
}

json report_json(const EnumerationReport& r) {
    const auto v = r.sizes.values();
    return {{"sizes", std::vector<Spot>(v.begin(), v.end())},
            {"total_tuples", to_decimal(r.total_tuples)},
            {"parked", to_decimal(r.parked)},
            {"collisions", to_decimal(r.collisions)},
            {"past_end", to_decimal(r.past_end)},
            {"formula", to_decimal(r.formula_value)},
            {"match", r.match}};
}

std::string report_line(const EnumerationReport& r) {
    return "sizes=" + join(r.sizes.values()) + " flavor=" + to_string(r.flavor) + ": " +
           to_decimal(r.total_tuples) + " tuples, " + to_decimal(r.parked) + " parked, " +
           to_decimal(r.collisions) + " collisions, " + to_decimal(r.past_end) +
           " past-end, formula " + to_decimal(r.formula_value) + ", " +
           (r.match ? "MATCH" : "MISMATCH");
}

std::string block_text(const Layout& layout, CarIndex car) {
    const Spot start = layout.start(car);
    const Spot end = layout.end(car);
    std::string s = "C" + std::to_string(car) + "@" + std::to_string(start);
    if (end != start) s += "-" + std::to_string(end);
    return s;
}

int cmd_simulate(const Config& cfg, std::ostream& out) {
    const SizeVector sizes(cfg.sizes);
    const PrefSequence prefs{cfg.prefs, cfg.flavor()};
    const ParkResult result =
        cfg.circular ? simulate_circular(sizes, prefs) : simulate_linear(sizes, prefs);

    json doc = header("simulate", sizes, cfg.flavor());
    doc["prefs"] = cfg.prefs;
    int code = ok;
    if (const auto* p = std::get_if<Parked>(&result)) {
        const Layout& layout = p->layout;
        doc["result"] = "parked";
        json cars = json::array();
        for (CarIndex car = 1; car <= layout.cars(); ++car) {
            cars.push_back({{"car", car}, {"start", layout.start(car)}, {"end", layout.end(car)}});
        }
        doc["layout"] = cars;
        if (cfg.circular) doc["empty_spot"] = empty_spot(layout);
        if (!cfg.as_json) {
            std::vector<CarIndex> order(layout.cars());
            for (CarIndex car = 1; car <= layout.cars(); ++car) order[car - 1] = car;
            std::sort(order.begin(), order.end(), [&](CarIndex a, CarIndex b) {
                return layout.start(a) < layout.start(b);
            });
            out << "parked:";
            for (CarIndex car : order) out << ' ' << block_text(layout, car);
            out << '\n';
            if (cfg.circular) out << "empty spot: " << empty_spot(layout) << '\n';
        }
    } else if (const auto* c = std::get_if<Collision>(&result)) {
        code = negative;
        doc["result"] = "collision";
        doc["car"] = c->car;
        doc["first_empty"] = c->first_empty;
        doc["blocked"] = c->blocked;
        if (!cfg.as_json) {
            out << "collision: car " << c->car << " blocked at spot " << c->blocked
                << " (first empty spot " << c->first_empty << ")\n";
        }
    } else {
        code = negative;
        const auto& e = std::get<PastEnd>(result);
        doc["result"] = "past_end";
        doc["car"] = e.car;
        if (!cfg.as_json) out << "past-end: car " << e.car << " passes the end of the lot\n";
    }
    if (cfg.as_json) out << doc.dump() << '\n';
    return code;
}

int cmd_count(const Config& cfg, std::ostream& out) {
    const SizeVector sizes(cfg.sizes);
    const CountValue value = cfg.circular ? count_circular(sizes) : count_linear(sizes);
    if (cfg.as_json) {
        json doc = header("count", sizes, cfg.flavor());
        doc["count"] = to_decimal(value);
        out << doc.dump() << '\n';
    } else {
        out << to_decimal(value) << '\n';
    }
    return ok;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    const bool sweep = cfg.sizes.empty();
    if (sweep && (cfg.max_cars == 0 || cfg.max_total == 0)) {
        err << "verify: give --sizes or both --max-cars and --max-total\n";
        return usage;
    }
    std::optional<SizeVector> sizes;
    if (!sweep) sizes.emplace(cfg.sizes);
    json doc = header("verify", sizes, cfg.flavor());
    if (sweep) {
        doc["max_cars"] = cfg.max_cars;
        doc["max_total"] = cfg.max_total;
    }

    const OracleOptions options{cfg.budget, cfg.partitions};
    std::vector<EnumerationReport> reports;
    try {
        if (sweep) {
            reports = verify_sweep(cfg.max_cars, cfg.max_total, cfg.flavor(), options);
        } else {
            reports.push_back(verify(*sizes, cfg.flavor(), options));
        }
    } catch (const BudgetExceeded& e) {
        err << e.what() << '\n';
        if (cfg.as_json) {
            doc["error"] = "budget_exceeded";
            doc["offending_sizes"] = e.sizes();
            doc["required"] = to_decimal(e.required());
            doc["budget"] = e.budget();
            out << doc.dump() << '\n';
        }
        return over_budget;
    }

    const bool all_match =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.match; });
    if (cfg.as_json) {
        json list = json::array();
        for (const auto& r : reports) list.push_back(report_json(r));
        doc["reports"] = list;
        doc["all_match"] = all_match;
        out << doc.dump() << '\n';
    } else {
        for (const auto& r : reports) out << report_line(r) << '\n';
        out << (all_match ? "all MATCH" : "MISMATCH found") << " (" << reports.size()
            << " reports)\n";
    }
    return all_match ? ok : negative;
}

int cmd_bijection(const Config& cfg, std::ostream& out, std::ostream& err) {
    const SizeVector sizes(cfg.sizes);
    json doc = header("bijection", sizes, Flavor::circular);
    BijectionReport r(sizes);
    try {
        r = check_bijection(sizes, cfg.budget);
    } catch (const BudgetExceeded& e) {
        err << e.what() << '\n';
        if (cfg.as_json) {
            doc["error"] = "budget_exceeded";
            doc["required"] = to_decimal(e.required());
            doc["budget"] = e.budget();
            out << doc.dump() << '\n';
        }
        return over_budget;
    }

    json restricted = json::array();
    for (const auto& p : r.restricted) restricted.push_back(p.prefs);
    if (cfg.as_json) {
        doc["option_sequences"] = std::to_string(r.option_sequences);
        doc["distinct_decodes"] = std::to_string(r.distinct_decodes);
        doc["circular_parking"] = std::to_string(r.circular_parking);
        doc["circular_formula"] = to_decimal(r.circular_formula);
        doc["linear_parking"] = std::to_string(r.linear_parking);
        doc["restricted"] = restricted;
        doc["checks"] = {{"decode_valid", r.decode_valid},
                         {"injective", r.injective()},
                         {"cardinality", r.cardinality_matches()},
                         {"image_is_circular_set", r.image_is_circular_set},
                         {"restriction", r.restriction_matches},
                         {"rotation_closed", r.rotation_closed},
                         {"empty_spot_equivariant", r.empty_spot_equivariant}};
        doc["pass"] = r.all_pass();
        out << doc.dump() << '\n';
    } else {
        auto verdict = [](bool b) { return b ? "pass" : "FAIL"; };
        out << "option sequences: " << r.option_sequences << '\n'
            << "distinct decodes: " << r.distinct_decodes << '\n'
            << "circular parking (brute force): " << r.circular_parking << '\n'
            << "circular formula: " << to_decimal(r.circular_formula) << '\n'
            << "linear parking (brute force): " << r.linear_parking << '\n'
            << "restricted:";
        for (const auto& p : r.restricted) out << " (" << join(p.prefs) << ')';
        out << '\n'
            << "decode valid: " << verdict(r.decode_valid) << '\n'
            << "injective: " << verdict(r.injective()) << '\n'
            << "cardinality: " << verdict(r.cardinality_matches()) << '\n'
            << "image is circular set: " << verdict(r.image_is_circular_set) << '\n'
            << "restriction: " << verdict(r.restriction_matches) << '\n'
            << "rotation closed: " << verdict(r.rotation_closed) << '\n'
            << "empty spot equivariant: " << verdict(r.empty_spot_equivariant) << '\n'
            << "result: " << (r.all_pass() ? "PASS" : "FAIL") << '\n';
    }
    return r.all_pass() ? ok : negative;
}

int cmd_sample(const Config& cfg, std::ostream& out) {
    const SizeVector sizes(cfg.sizes);
    Rng rng(cfg.seed);
    json samples = json::array();
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        const PrefSequence p = cfg.circular ? sample_circular(sizes, rng) : sample_linear(sizes, rng);
        if (cfg.as_json) {
            samples.push_back(p.prefs);
        } else {
            out << join(p.prefs) << '\n';
        }
    }
    if (cfg.as_json) {
        json doc = header("sample", sizes, cfg.flavor());
        doc["seed"] = cfg.seed;
        doc["count"] = cfg.count;
        doc["samples"] = samples;
        out << doc.dump() << '\n';
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Parking sequences for cars of different sizes", "parking"};
    app.require_subcommand(1);

    auto sizes_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--sizes", cfg.sizes, "car sizes, e.g. 2,2,1")->delimiter(',');
        if (required) o->required();
    };
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.as_json, "machine-readable output");
    };

    auto* simulate = app.add_subcommand("simulate", "run the parking rule on one preference tuple");
    sizes_opt(simulate, true);
    simulate->add_option("--prefs", cfg.prefs, "preferred spots, e.g. 2,3,1")
        ->delimiter(',')
        ->required();
    simulate->add_flag("--circular", cfg.circular, "park on the circle of T+1 spots");
    common(simulate);

    auto* count = app.add_subcommand("count", "exact number of parking sequences");
    sizes_opt(count, true);
    count->add_flag("--circular", cfg.circular, "count circular parking sequences");
    common(count);

    auto* verify_cmd = app.add_subcommand("verify", "brute-force check of the product formula");
    sizes_opt(verify_cmd, false);
    auto* max_cars = verify_cmd->add_option("--max-cars", cfg.max_cars, "sweep: most cars");
    auto* max_total = verify_cmd->add_option("--max-total", cfg.max_total, "sweep: largest lot");
    max_cars->needs(max_total);
    max_total->needs(max_cars);
    max_cars->excludes("--sizes");
    verify_cmd->add_flag("--circular", cfg.circular, "verify the circular count");
    verify_cmd->add_option("--budget", cfg.budget, "most tuples simulated per instance");
    verify_cmd->add_option("--partitions", cfg.partitions, "parallel blocks (0 = one per thread)");
    common(verify_cmd);

    auto* bijection = app.add_subcommand("bijection", "check the divider construction exhaustively");
    sizes_opt(bijection, true);
    bijection->add_option("--budget", cfg.budget, "most tuples enumerated");
    common(bijection);

    auto* sample = app.add_subcommand("sample", "draw uniform parking sequences");
    sizes_opt(sample, true);
    sample->add_option("--seed", cfg.seed, "random seed")->required();
    sample->add_option("--count", cfg.count, "number of samples")->required();
    sample->add_flag("--circular", cfg.circular, "sample circular parking sequences");
    common(sample);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return ok;
        }
        app.exit(e, err, err);
        return usage;
    }

    try {
        if (*simulate) return cmd_simulate(cfg, out);
        if (*count) return cmd_count(cfg, out);
        if (*verify_cmd) return cmd_verify(cfg, out, err);
        if (*bijection) return cmd_bijection(cfg, out, err);
        if (*sample) return cmd_sample(cfg, out);
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return usage;
    }
    return usage;
}

}  // namespace parking::cli
