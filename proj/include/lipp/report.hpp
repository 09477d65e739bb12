// One solver run as a machine-readable record: JSON object (round-trip
// safe) and CSV line with a fixed column order.
#ifndef LIPP_REPORT_HPP
#define LIPP_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "instance_io.hpp"
#include "solver.hpp"

namespace lipp {

struct RunRecord {
    std::string instance;
    int n = 0;
    int m = 0;
    Formulation formulation = Formulation::cec;
    CliqueMode clique_mode = CliqueMode::Apriori;
    SolveStatus status = SolveStatus::Optimal;
    double objective = 0.0;
    double best_bound = 0.0;
    double gap_percent = 0.0;
    long nodes = 0;
    CutCounts cuts;
    double root_bound = 0.0;
    std::optional<int> warm_start_value;
    double time_seconds = 0.0;

    static RunRecord from(const InstanceMeta& meta, const SolverConfig& cfg,
                          const SolveReport& rep) {
        RunRecord r;
        r.instance = meta.name;
        r.n = meta.n;
        r.m = meta.m;
        r.formulation = cfg.formulation;
        r.clique_mode = cfg.clique_mode;
        r.status = rep.status;
        r.objective = rep.objective;
        r.best_bound = rep.best_bound;
        r.gap_percent = rep.gap_percent;
        r.nodes = rep.nodes;
        r.cuts = rep.cuts_added;
        r.root_bound = rep.root_bound;
        if (cfg.warm_start) r.warm_start_value = cfg.warm_start->cardinality();
        r.time_seconds = rep.timings.total;
        return r;
    }
};

inline Formulation formulation_from_name(const std::string& s) {
    if (s == "cec") return Formulation::cec;
    if (s == "cut") return Formulation::cut;
    if (s == "bcwwy") return Formulation::bcwwy;
    throw std::invalid_argument("unknown formulation '" + s + "'");
}

inline CliqueMode clique_mode_from_name(const std::string& s) {
    if (s == "apriori") return CliqueMode::Apriori;
    if (s == "separate") return CliqueMode::Separate;
    if (s == "off") return CliqueMode::Off;
    throw std::invalid_argument("unknown clique mode '" + s + "'");
}

inline SolveStatus solve_status_from_name(const std::string& s) {
    if (s == "Optimal") return SolveStatus::Optimal;
    if (s == "TimeLimit") return SolveStatus::TimeLimit;
    if (s == "Infeasible") return SolveStatus::Infeasible;
    throw std::invalid_argument("unknown status '" + s + "'");
}

// infinite gaps serialize as JSON null
inline nlohmann::json to_json(const RunRecord& r) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["formulation"] = formulation_name(r.formulation);
    j["cliqueMode"] = clique_mode_name(r.clique_mode);
    j["status"] = solve_status_name(r.status);
    j["objective"] = r.objective;
    j["bestBound"] = r.best_bound;
    if (std::isfinite(r.gap_percent))
        j["gapPercent"] = r.gap_percent;
    else
        j["gapPercent"] = nullptr;
    j["nodes"] = r.nodes;
    j["cuts"] = {{"cycle", r.cuts.cycle}, {"cutset", r.cuts.cutset}, {"clique", r.cuts.clique}};
    j["rootBound"] = r.root_bound;
    if (r.warm_start_value)
        j["warmStartValue"] = *r.warm_start_value;
    else
        j["warmStartValue"] = nullptr;
    j["timeSeconds"] = r.time_seconds;
    return j;
}

inline RunRecord run_record_from_json(const nlohmann::json& j) {
    RunRecord r;
    r.instance = j.at("instance").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.formulation = formulation_from_name(j.at("formulation").get<std::string>());
    r.clique_mode = clique_mode_from_name(j.at("cliqueMode").get<std::string>());
    r.status = solve_status_from_name(j.at("status").get<std::string>());
    r.objective = j.at("objective").get<double>();
    r.best_bound = j.at("bestBound").get<double>();
    r.gap_percent = j.at("gapPercent").is_null()
                        ? std::numeric_limits<double>::infinity()
                        : j.at("gapPercent").get<double>();
    r.nodes = j.at("nodes").get<long>();
    r.cuts.cycle = j.at("cuts").at("cycle").get<long>();
    r.cuts.cutset = j.at("cuts").at("cutset").get<long>();
    r.cuts.clique = j.at("cuts").at("clique").get<long>();
    r.root_bound = j.at("rootBound").get<double>();
    if (!j.at("warmStartValue").is_null())
        r.warm_start_value = j.at("warmStartValue").get<int>();
    r.time_seconds = j.at("timeSeconds").get<double>();
    return r;
}

inline std::string run_record_csv_header() {
    return "instance,n,m,formulation,cliqueMode,status,objective,bestBound,gapPercent,nodes,"
           "cutsCycle,cutsCutset,cutsClique,rootBound,warmStartValue,timeSeconds";
}

inline std::string to_csv_row(const RunRecord& r) {
    std::ostringstream out;
    out << r.instance << ',' << r.n << ',' << r.m << ',' << formulation_name(r.formulation)
        << ',' << clique_mode_name(r.clique_mode) << ',' << solve_status_name(r.status) << ','
        << r.objective << ',' << r.best_bound << ',';
    if (std::isfinite(r.gap_percent))
        out << r.gap_percent;
    else
        out << "inf";
    out << ',' << r.nodes << ',' << r.cuts.cycle << ',' << r.cuts.cutset << ','
        << r.cuts.clique << ',' << r.root_bound << ',';
    if (r.warm_start_value)
        out << *r.warm_start_value;
    else
        out << "";
    out << ',' << r.time_seconds;
    return out.str();
}

} // namespace lipp

#endif
