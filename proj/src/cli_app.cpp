#include "pxp/cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "pxp/cohomology.hpp"
#include "pxp/construction.hpp"
#include "pxp/equivalence.hpp"
#include "pxp/json_io.hpp"
#include "pxp/restrictions.hpp"

namespace pxp {

namespace {

Json record(const std::string& command, std::uint32_t p) {
    Json j;
    j["command"] = command;
    j["p"] = p;
    return j;
}

std::string realizability_failure_reason(const FormPair& pair) {
    if (pair.q1().is_zero()) return "first form is zero";
    if (pair.q2().is_zero()) return "second form is zero";
    if (linearly_dependent(pair.q1(), pair.q2()))
        return "forms are linearly dependent";
    if (auto root = common_rational_root(pair.q1(), pair.q2()))
        return "common rational root at " + root->to_string();
    return "realizable";
}

Json orbit_entries(const OrbitSummary& summary, bool with_class) {
    Json orbits = Json::array();
    for (std::size_t i = 0; i < summary.representatives.size(); ++i) {
        Json entry;
        entry["representative"] = pair_to_json(summary.representatives[i]);
        entry["size"] = summary.sizes[i];
        if (with_class) {
            CanonicalForm cf = canonical_form(summary.representatives[i]);
            entry["class_w"] = cf.normal.w->value();
            entry["class_index"] = fourth_power_class(*cf.normal.w);
        }
        orbits.push_back(std::move(entry));
    }
    return orbits;
}

std::string orbit_csv(const OrbitSummary& summary, bool with_class) {
    std::ostringstream out;
    out << "orbit,size,class_w,q1,q2\n";
    for (std::size_t i = 0; i < summary.representatives.size(); ++i) {
        const FormPair& rep = summary.representatives[i];
        std::string w;
        if (with_class) {
            CanonicalForm cf = canonical_form(rep);
            w = std::to_string(cf.normal.w->value());
        }
        auto coeffs = [](const BinaryForm& f) {
            std::string s;
            for (const auto& c : f.coefficients()) {
                if (!s.empty()) s += ' ';
                s += std::to_string(c.value());
            }
            return s;
        };
        out << i << ',' << summary.sizes[i] << ',' << w << ',' << coeffs(rep.q1())
            << ',' << coeffs(rep.q2()) << '\n';
    }
    return out.str();
}

struct CommonFlags {
    std::uint32_t prime = 0;
    std::string mode = "full";
    std::string format = "json";
    std::uint32_t limit_pairs = 13;
    std::uint64_t seed = 1;
};

void add_prime_flag(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("-p,--prime", flags.prime, "odd prime modulus")->required();
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"classification of free (Z/p)^2 actions on products of spheres "
                 "through pairs of binary forms"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string pair_json, rot_json;
    std::int64_t lens_x = 0, lens_y = 0;
    std::uint32_t qd_n = 0, coh_k = 0;

    CLI::App* classify = app.add_subcommand(
        "classify", "canonical class and witness of a degree-2 form pair");
    add_prime_flag(classify, flags);
    classify->add_option("--pair", pair_json, "pair as JSON [[q0,q1,q2],[q0,q1,q2]]")
        ->required();
    classify->add_option("--mode", flags.mode, "equivalence mode (full only)");

    CLI::App* orbits = app.add_subcommand(
        "orbits", "enumerate realizable pairs and their orbits");
    add_prime_flag(orbits, flags);
    orbits->add_option("--mode", flags.mode, "full | fixed-pi1 | oriented");
    orbits->add_option("--format", flags.format, "json | csv");
    orbits->add_option("--limit-pairs", flags.limit_pairs,
                       "largest prime admitted for enumeration (default 13)");

    CLI::App* kinv = app.add_subcommand("kinv", "k-invariant of rotation data");
    add_prime_flag(kinv, flags);
    kinv->add_option("--rot", rot_json, R"(rotation JSON {"n":..,"R":[..],"Q":[..]})")
        ->required();

    CLI::App* free_cmd = app.add_subcommand("free", "freeness of rotation data");
    add_prime_flag(free_cmd, flags);
    free_cmd->add_option("--rot", rot_json, "rotation JSON")->required();

    CLI::App* lens = app.add_subcommand("lens", "classify a product of two lens spaces");
    add_prime_flag(lens, flags);
    lens->add_option("-x", lens_x, "first rotation number")->required();
    lens->add_option("-y", lens_y, "second rotation number")->required();

    CLI::App* qd = app.add_subcommand("qd", "transgression-coefficient obstruction");
    add_prime_flag(qd, flags);
    qd->add_option("-n", qd_n, "ambient sphere dimension (odd)")->required();

    CLI::App* coh = app.add_subcommand("cohomology", "graded ranks and monomial basis");
    add_prime_flag(coh, flags);
    coh->add_option("-k", coh_k, "degree")->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "agreement sweep: orbit partition vs canonical classes");
    add_prime_flag(oracle, flags);
    oracle->add_option("--seed", flags.seed, "seed for the random duo cross-check");
    oracle->add_option("--limit-pairs", flags.limit_pairs,
                       "largest prime admitted for enumeration (default 13)");
    oracle->add_option("--mode", flags.mode, "equivalence mode (full only)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {2, std::string("usage error: ") + e.what() + "\n"};
    }

    try {
        if (flags.format != "json" && flags.format != "csv")
            throw InvalidParameter("unknown format '" + flags.format + "'");
        FieldContext ctx(flags.prime);
        SearchLimits limits;
        limits.max_prime_enumeration = flags.limit_pairs;
        Json out;
        int code = 0;

        if (*classify) {
            if (flags.mode != "full")
                throw InvalidParameter(
                    "classify supports --mode full only; other modes have no "
                    "canonical form");
            FormPair pair = pair_from_json(ctx, Json::parse(pair_json, nullptr, true));
            out = record("classify", flags.prime);
            out["mode"] = flags.mode;
            out["inputs"] = Json{{"pair", pair_to_json(pair)}};
            CanonicalForm cf = canonical_form(pair);
            Json results;
            results["realizable"] = cf.normal.realizable();
            if (!cf.normal.realizable()) {
                results["reason"] = realizability_failure_reason(pair);
                code = 3;
            } else {
                FormPair rep = cf.normal.representative(ctx);
                results["normal_form"] =
                    Json{{"kind", "standard-class"},
                         {"w", cf.normal.w->value()},
                         {"representative", pair_to_json(rep)},
                         {"pretty", rep.to_string()}};
                results["class_index"] = fourth_power_class(*cf.normal.w);
                Json reps = Json::array();
                for (const auto& r : class_representatives(ctx)) reps.push_back(r.value());
                results["class_representatives"] = reps;
                results["witness"] = Json{{"S", matrix_to_json(cf.witness.S)},
                                          {"R", matrix_to_json(cf.witness.R)}};
                results["witness_verified"] = apply_witness(cf.witness, pair) == rep;
            }
            out["results"] = std::move(results);
        } else if (*orbits) {
            EquivalenceMode mode = EquivalenceMode::parse(flags.mode);
            OrbitSummary summary = orbit_enumeration(ctx, mode, 2, limits);
            bool with_class = mode == EquivalenceMode::full() && flags.prime > 3;
            if (flags.format == "csv")
                return {0, orbit_csv(summary, with_class)};
            out = record("orbits", flags.prime);
            out["mode"] = flags.mode;
            Json results;
            results["realizable_pairs"] = summary.realizable_count;
            results["orbit_count"] = summary.orbit_count();
            results["orbits"] = orbit_entries(summary, with_class);
            std::uint64_t total = 0;
            for (auto s : summary.sizes) total += s;
            results["sizes_sum_matches"] = (total == summary.realizable_count);
            out["results"] = std::move(results);
        } else if (*kinv || *free_cmd) {
            RotationData rot = rotation_from_json(ctx, Json::parse(rot_json, nullptr, true));
            bool free_action = is_free(rot);
            if (*kinv) {
                FormPair pair = k_invariant(rot);
                out = record("kinv", flags.prime);
                out["inputs"] = Json{{"rotation", rotation_to_json(rot)}};
                Json results;
                results["pair"] = pair_to_json(pair);
                results["pretty"] = pair.to_string();
                results["free"] = free_action;
                out["results"] = std::move(results);
            } else {
                out = record("free", flags.prime);
                out["inputs"] = Json{{"rotation", rotation_to_json(rot)}};
                Json results;
                results["free"] = free_action;
                if (!free_action) {
                    auto w = fixed_point_witness(rot);
                    results["fixed_point_element"] =
                        Json::array({w->first.value(), w->second.value()});
                }
                out["results"] = std::move(results);
            }
        } else if (*lens) {
            FieldElement x = ctx.element(lens_x), y = ctx.element(lens_y);
            out = record("lens", flags.prime);
            out["inputs"] = Json{{"x", x.value()}, {"y", y.value()}};
            RotationData rot = lens_product(x, y);
            FormPair pair = k_invariant(rot);
            std::size_t cls = lens_product_class(x, y);
            FieldElement w = class_representatives(ctx)[cls];
            Json results;
            results["pair"] = pair_to_json(pair);
            results["pretty"] = pair.to_string();
            results["free"] = is_free(rot);
            results["class_index"] = cls;
            results["class_w"] = w.value();
            out["results"] = std::move(results);
        } else if (*qd) {
            QdVerdict verdict = qd_obstruction(ctx, qd_n);
            out = record("qd", flags.prime);
            out["inputs"] = Json{{"n", qd_n}};
            Json results;
            results["status"] =
                verdict.obstructed() ? "obstructed" : "not_applicable";
            results["k"] = verdict.power_k;
            if (verdict.obstructed()) {
                results["evidence"] = Json{{"half_degree", verdict.half_degree},
                                           {"pure_x_coeff", verdict.pure_x_coeff},
                                           {"pure_y_coeff", verdict.pure_y_coeff}};
            } else {
                results["evidence"] =
                    Json{{"divisor", 2 * (flags.prime + 1)}, {"n_plus_1", qd_n + 1}};
            }
            out["results"] = std::move(results);
        } else if (*coh) {
            out = record("cohomology", flags.prime);
            out["inputs"] = Json{{"k", coh_k}};
            GradedRank hc = dim_cohomology(coh_k);
            GradedRank hh = dim_homology(coh_k);
            Json basis = Json::array();
            for (const auto& m : basis_of_degree(ctx, coh_k))
                basis.push_back(m.to_string());
            Json results;
            results["cohomology"] =
                Json{{"free_rank", hc.free_rank}, {"p_rank", hc.p_rank}};
            results["homology"] =
                Json{{"free_rank", hh.free_rank}, {"p_rank", hh.p_rank}};
            results["basis"] = std::move(basis);
            out["results"] = std::move(results);
        } else if (*oracle) {
            if (flags.mode != "full")
                throw InvalidParameter("oracle supports --mode full only");
            std::uint64_t duos = flags.prime <= 5 ? 200 : (flags.prime <= 7 ? 50 : 0);
            OracleReport report = run_oracle_sweep(ctx, flags.seed, duos, limits);
            out = record("oracle", flags.prime);
            out["mode"] = flags.mode;
            out["inputs"] = Json{{"seed", flags.seed}};
            Json results;
            results["realizable_pairs"] = report.realizable_count;
            results["orbit_count"] = report.orbit_count;
            results["canonical_classes"] = report.canonical_class_count;
            results["within_orbit_mismatches"] = report.within_orbit_mismatches;
            results["cross_orbit_collisions"] = report.cross_orbit_collisions;
            results["random_duos_checked"] = report.duos_checked;
            results["duo_disagreements"] = report.duo_disagreements;
            results["clean"] = report.clean();
            out["results"] = std::move(results);
        }
        return {code, out.dump(2) + "\n"};
    } catch (const Json::parse_error& e) {
        return {2, Json{{"error", std::string("invalid JSON input: ") + e.what()}}.dump(2) + "\n"};
    } catch (const ResourceLimit& e) {
        return {4, Json{{"error", e.what()}}.dump(2) + "\n"};
    } catch (const DomainRejection& e) {
        return {3, Json{{"error", e.what()}}.dump(2) + "\n"};
    } catch (const InvalidArgument& e) {
        return {2, Json{{"error", e.what()}}.dump(2) + "\n"};
    } catch (const Error& e) {
        return {1, Json{{"error", e.what()}}.dump(2) + "\n"};
    }
}

} // namespace pxp
