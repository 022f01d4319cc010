#include "ems/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ems/error.hpp"

namespace ems {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split(std::string_view line, char sep = ',') {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

double parse_number(const std::string& text, const std::string& where) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw FormatError(where + ": cannot parse number '" + text + "'");
    return value;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Factor that converts a value in `tag` into the internal unit of `kind`.
double unit_factor(ProfileKind kind, const std::string& raw_tag, const std::string& where) {
    std::string tag = lower(raw_tag);
    const auto replace = [&](const std::string& from, const std::string& to) {
        for (auto pos = tag.find(from); pos != std::string::npos; pos = tag.find(from, pos + to.size()))
            tag.replace(pos, from.size(), to);
    };
    replace("\xe2\x82\xac", "eur"); // euro sign
    replace("\xc2\xb2", "2");       // superscript two
    replace("^2", "2");
    tag.erase(std::remove(tag.begin(), tag.end(), ' '), tag.end());

    static const std::map<std::string, double> power = {{"kw", 1.0}, {"w", 1e-3}, {"mw", 1e3}};
    static const std::map<std::string, double> radiation = {{"w/m2", 1.0}, {"kw/m2", 1e3}};
    static const std::map<std::string, double> price = {{"eur/kwh", 1.0}, {"eur/mwh", 1e-3}};
    const auto& table = kind == ProfileKind::Price ? price : kind == ProfileKind::Radiation ? radiation : power;
    const auto it = table.find(tag);
    if (it == table.end())
        throw FormatError(where + ": unit '" + raw_tag + "' is not recognized for a " +
                          std::string(to_string(kind)) + " profile");
    return it->second;
}

std::string describe_range(Timestamp from, Timestamp to) {
    return "[" + format_timestamp(from) + ", " + format_timestamp(to) + ")";
}

} // namespace

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Profile parse_profile_csv(const std::string& text, ProfileKind kind, const TimeGrid& grid, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    double factor = 1.0;
    bool header_seen = false;
    std::vector<std::pair<Timestamp, double>> rows;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        const std::string where = source + ":" + std::to_string(line_no);
        if (t.empty())
            continue;
        if (t.front() == '#') {
            const std::string body = trim(std::string_view(t).substr(1));
            if (lower(body).rfind("unit", 0) == 0) {
                const auto colon = body.find_first_of(":=");
                if (colon == std::string::npos)
                    throw FormatError(where + ": malformed unit line");
                factor = unit_factor(kind, trim(std::string_view(body).substr(colon + 1)), where);
            }
            continue;
        }
        if (!header_seen) {
            const auto cols = split(t);
            if (cols.size() != 2 || lower(cols[0]) != "timestamp" || lower(cols[1]) != "value")
                throw FormatError(where + ": expected header 'timestamp,value'");
            header_seen = true;
            continue;
        }
        const auto cols = split(t);
        if (cols.size() != 2)
            throw FormatError(where + ": expected 2 columns, got " + std::to_string(cols.size()));
        Timestamp ts;
        try {
            ts = parse_timestamp(cols[0]);
        } catch (const FormatError& e) {
            throw FormatError(where + ": " + e.what());
        }
        const double v = parse_number(cols[1], where);
        if (!std::isfinite(v))
            throw ValidationError(where + ": non-finite value");
        if (is_non_negative(kind) && v < 0.0)
            throw ValidationError(where + ": negative value " + cols[1] + " in a " + std::string(to_string(kind)) +
                                  " profile");
        rows.emplace_back(ts, v * factor);
    }
    if (!header_seen)
        throw FormatError(source + ": missing header 'timestamp,value'");

    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first == rows[i - 1].first)
            throw FormatError(source + ": duplicate timestamp " + format_timestamp(rows[i].first));

    const Timestamp begin = grid.start();
    const Timestamp end = grid.time_at(grid.steps());
    std::erase_if(rows, [&](const auto& r) { return r.first < begin || r.first >= end; });
    if (rows.empty())
        throw GapError(source + ": no data in " + describe_range(begin, end));

    const std::int64_t grid_step = grid.step_seconds();
    std::int64_t src_step = grid_step;
    if (rows.size() > 1) {
        src_step = std::numeric_limits<std::int64_t>::max();
        for (std::size_t i = 1; i < rows.size(); ++i)
            src_step = std::min<std::int64_t>(src_step, (rows[i].first - rows[i - 1].first).count());
    }
    const std::int64_t horizon = grid_step * grid.steps();
    if (grid_step % src_step != 0 && src_step % grid_step != 0)
        throw FormatError(source + ": source resolution of " + std::to_string(src_step) +
                          " s is neither a multiple nor a divisor of the " + std::to_string(grid_step) + " s grid step");
    if (horizon % src_step != 0)
        throw FormatError(source + ": source resolution does not tile the horizon");

    const std::size_t lattice = static_cast<std::size_t>(horizon / src_step);
    std::vector<double> values(lattice, 0.0);
    std::vector<char> present(lattice, 0);
    for (const auto& [ts, v] : rows) {
        const std::int64_t offset = (ts - begin).count();
        if (offset % src_step != 0)
            throw FormatError(source + ": timestamp " + format_timestamp(ts) + " is off the " +
                              std::to_string(src_step) + " s lattice");
        const auto k = static_cast<std::size_t>(offset / src_step);
        values[k] = v;
        present[k] = 1;
    }

    std::string gaps;
    for (std::size_t k = 0; k < lattice;) {
        if (present[k]) {
            ++k;
            continue;
        }
        std::size_t j = k;
        while (j < lattice && !present[j])
            ++j;
        if (!gaps.empty())
            gaps += ", ";
        gaps += describe_range(begin + std::chrono::seconds(static_cast<std::int64_t>(k) * src_step),
                               begin + std::chrono::seconds(static_cast<std::int64_t>(j) * src_step));
        k = j;
    }
    if (!gaps.empty())
        throw GapError(source + ": missing data in " + gaps);

    std::vector<double> out(static_cast<std::size_t>(grid.steps()));
    if (src_step <= grid_step) {
        const auto per = static_cast<std::size_t>(grid_step / src_step);
        for (std::size_t t = 0; t < out.size(); ++t) {
            if (is_power_like(kind)) {
                double acc = 0.0;
                for (std::size_t i = 0; i < per; ++i)
                    acc += values[t * per + i];
                out[t] = acc / static_cast<double>(per);
            } else {
                out[t] = values[t * per];
            }
        }
    } else {
        const auto per = static_cast<std::size_t>(src_step / grid_step);
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] = values[t / per];
    }
    return Profile(grid, kind, std::move(out));
}

Profile ingest_profile(const fs::path& path, ProfileKind kind, const TimeGrid& grid) {
    return parse_profile_csv(read_text_file(path), kind, grid, path.string());
}

Timestamp first_timestamp(const fs::path& path) {
    std::istringstream in(read_text_file(path));
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        if (!header) {
            header = true;
            continue;
        }
        return parse_timestamp(split(t).front());
    }
    throw GapError(path.string() + ": no data rows");
}

FleetSchedule parse_fleet_csv(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    std::map<std::string, std::size_t> column;
    FleetSchedule fleet;
    std::map<std::string, std::size_t> index_of;
    int line_no = 0;
    static const char* required[] = {"vehicle_id", "capacity_kwh", "charge_kw", "consumption_kwh_per_min",
                                     "arrival",    "departure"};
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        const std::string where = source + ":" + std::to_string(line_no);
        if (t.empty() || t.front() == '#')
            continue;
        if (header.empty()) {
            header = split(t);
            for (std::size_t i = 0; i < header.size(); ++i)
                column[lower(header[i])] = i;
            for (const char* name : required)
                if (!column.count(name))
                    throw FormatError(where + ": fleet header lacks column '" + name + "'");
            continue;
        }
        const auto cols = split(t);
        if (cols.size() != header.size())
            throw FormatError(where + ": expected " + std::to_string(header.size()) + " columns, got " +
                              std::to_string(cols.size()));
        const auto get = [&](const char* name) -> const std::string& { return cols[column.at(name)]; };

        Vehicle row;
        row.id = get("vehicle_id");
        row.battery_capacity_kwh = parse_number(get("capacity_kwh"), where);
        row.nominal_charge_kw = parse_number(get("charge_kw"), where);
        row.route_consumption_kwh_per_min = parse_number(get("consumption_kwh_per_min"), where);
        if (column.count("eta_charge") && !get("eta_charge").empty())
            row.eta_charge = parse_number(get("eta_charge"), where);
        if (column.count("eta_discharge") && !get("eta_discharge").empty())
            row.eta_discharge = parse_number(get("eta_discharge"), where);
        if (column.count("initial_soc_kwh") && !get("initial_soc_kwh").empty())
            row.initial_soc_kwh = parse_number(get("initial_soc_kwh"), where);
        Dwell dwell;
        try {
            dwell.arrival_s = parse_time_of_day(get("arrival"));
            dwell.departure_s = parse_time_of_day(get("departure"));
        } catch (const FormatError& e) {
            throw FormatError(where + ": " + e.what());
        }

        const auto it = index_of.find(row.id);
        if (it == index_of.end()) {
            row.dwells.push_back(dwell);
            index_of[row.id] = fleet.vehicles.size();
            fleet.vehicles.push_back(std::move(row));
            continue;
        }
        Vehicle& v = fleet.vehicles[it->second];
        if (v.battery_capacity_kwh != row.battery_capacity_kwh || v.nominal_charge_kw != row.nominal_charge_kw ||
            v.route_consumption_kwh_per_min != row.route_consumption_kwh_per_min || v.eta_charge != row.eta_charge ||
            v.eta_discharge != row.eta_discharge || v.initial_soc_kwh != row.initial_soc_kwh)
            throw ValidationError(where + ": vehicle '" + row.id + "' changes its parameters between rows");
        v.dwells.push_back(dwell);
    }
    if (header.empty())
        throw FormatError(source + ": missing fleet header");
    return fleet;
}

FleetSchedule ingest_fleet(const fs::path& path) { return parse_fleet_csv(read_text_file(path), path.string()); }

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& where) {
    if (!obj.is_object())
        throw ConfigError(where + " must be an object");
    for (const auto& [key, _] : obj.items()) {
        if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; }))
            throw ConfigError("unknown config key '" + where + "." + key + "'");
    }
}

template <class T>
void read(const json& obj, const char* key, T& target, const std::string& where) {
    if (!obj.contains(key))
        return;
    try {
        target = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config key '" + where + "." + key + "' has the wrong type");
    }
}

} // namespace

StationConfig parse_config(const std::string& json_text, const std::string& source) {
    json root;
    try {
        root = json::parse(json_text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ": " + e.what());
    }
    StationConfig cfg;
    reject_unknown(root, {"dt_minutes", "ess", "grid", "pv", "ev", "model"}, "config");
    read(root, "dt_minutes", cfg.dt_minutes, "config");
    if (root.contains("ess")) {
        const auto& e = root["ess"];
        reject_unknown(e,
                       {"capacity_kwh", "p_charge_max_kw", "p_discharge_max_kw", "eta_charge", "eta_discharge",
                        "self_discharge", "soc0_fraction", "soc_min_fraction", "soc_max_fraction"},
                       "ess");
        read(e, "capacity_kwh", cfg.ess.capacity_kwh, "ess");
        read(e, "p_charge_max_kw", cfg.ess.p_charge_max_kw, "ess");
        read(e, "p_discharge_max_kw", cfg.ess.p_discharge_max_kw, "ess");
        read(e, "eta_charge", cfg.ess.eta_charge, "ess");
        read(e, "eta_discharge", cfg.ess.eta_discharge, "ess");
        read(e, "self_discharge", cfg.ess.self_discharge, "ess");
        read(e, "soc0_fraction", cfg.ess.soc0_fraction, "ess");
        read(e, "soc_min_fraction", cfg.ess.soc_min_fraction, "ess");
        read(e, "soc_max_fraction", cfg.ess.soc_max_fraction, "ess");
    }
    if (root.contains("grid")) {
        const auto& g = root["grid"];
        reject_unknown(g, {"p_buy_max_kw", "p_sell_max_kw"}, "grid");
        read(g, "p_buy_max_kw", cfg.grid.p_buy_max_kw, "grid");
        read(g, "p_sell_max_kw", cfg.grid.p_sell_max_kw, "grid");
    }
    if (root.contains("pv")) {
        const auto& p = root["pv"];
        reject_unknown(p, {"rated_kw", "penetration", "r_c_wm2", "r_std_wm2"}, "pv");
        if (p.contains("rated_kw") && p.contains("penetration"))
            throw ConfigError("pv.rated_kw and pv.penetration are mutually exclusive");
        read(p, "rated_kw", cfg.pv.rated_kw, "pv");
        double penetration = 0.0;
        if (p.contains("penetration")) {
            read(p, "penetration", penetration, "pv");
            cfg.pv_penetration = penetration;
        }
        read(p, "r_c_wm2", cfg.pv.r_c_wm2, "pv");
        read(p, "r_std_wm2", cfg.pv.r_std_wm2, "pv");
    }
    if (root.contains("ev")) {
        const auto& e = root["ev"];
        reject_unknown(e, {"partial_step"}, "ev");
        std::string mode = "prorated";
        read(e, "partial_step", mode, "ev");
        if (mode == "prorated")
            cfg.ev_partial_step = PartialStepDemand::Prorated;
        else if (mode == "nominal")
            cfg.ev_partial_step = PartialStepDemand::Nominal;
        else
            throw ConfigError("ev.partial_step must be 'prorated' or 'nominal'");
    }
    if (root.contains("model")) {
        const auto& m = root["model"];
        reject_unknown(m, {"discharge_convention", "enforce_terminal_soc", "rbe_gating_cut", "soc_headroom_cuts",
                          "grid_gate_reduction"},
                      "model");
        std::string conv = "multiply";
        read(m, "discharge_convention", conv, "model");
        if (conv == "multiply")
            cfg.model.discharge_convention = DischargeConvention::Multiply;
        else if (conv == "divide")
            cfg.model.discharge_convention = DischargeConvention::Divide;
        else
            throw ConfigError("model.discharge_convention must be 'multiply' or 'divide'");
        read(m, "enforce_terminal_soc", cfg.model.enforce_terminal_soc, "model");
        read(m, "rbe_gating_cut", cfg.model.rbe_gating_cut, "model");
        read(m, "soc_headroom_cuts", cfg.model.soc_headroom_cuts, "model");
        read(m, "grid_gate_reduction", cfg.model.grid_gate_reduction, "model");
    }
    cfg.validate();
    return cfg;
}

StationConfig load_config(const fs::path& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const DataError& e) {
        throw ConfigError(e.what());
    }
    return parse_config(text, path.string());
}

ScenarioSet load_scenarios(const fs::path& dir, int dt_minutes) {
    if (!fs::is_directory(dir))
        throw DataError("scenario directory " + dir.string() + " does not exist");
    std::vector<fs::path> subdirs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_directory())
            subdirs.push_back(entry.path());
    std::sort(subdirs.begin(), subdirs.end());
    if (subdirs.empty())
        throw DataError("scenario directory " + dir.string() + " has no scenario subdirectories");

    ScenarioSet set;
    std::vector<bool> has_probability;
    for (const auto& sub : subdirs) {
        std::map<std::string, std::string> meta;
        const fs::path meta_path = sub / "scenario.meta";
        if (fs::exists(meta_path)) {
            std::istringstream in(read_text_file(meta_path));
            std::string line;
            while (std::getline(in, line)) {
                const std::string t = trim(line);
                if (t.empty() || t.front() == '#')
                    continue;
                const auto eq = t.find('=');
                if (eq == std::string::npos)
                    throw FormatError(meta_path.string() + ": expected key=value, got '" + t + "'");
                meta[trim(std::string_view(t).substr(0, eq))] = trim(std::string_view(t).substr(eq + 1));
            }
        }
        const auto file = [&](const char* name) {
            const fs::path p = sub / name;
            if (!fs::exists(p))
                throw DataError("missing profile file " + p.string());
            return p;
        };
        const fs::path demand_path = file("train_demand.csv");
        const Timestamp start =
            meta.count("start") ? parse_timestamp(meta.at("start")) : first_timestamp(demand_path);
        const TimeGrid grid = TimeGrid::daily(start, dt_minutes);

        const Profile buy = ingest_profile(file("price.csv"), ProfileKind::Price, grid);
        const fs::path sell_path = sub / "sell_price.csv";
        Scenario s{
            meta.count("id") ? meta.at("id") : sub.filename().string(),
            0.0,
            ingest_profile(demand_path, ProfileKind::TrainDemand, grid),
            ingest_profile(file("rb_available.csv"), ProfileKind::RbAvailable, grid),
            ingest_profile(file("radiation.csv"), ProfileKind::Radiation, grid),
            buy,
            fs::exists(sell_path) ? ingest_profile(sell_path, ProfileKind::Price, grid) : buy,
        };
        if (meta.count("probability")) {
            s.probability = parse_number(meta.at("probability"), meta_path.string());
            has_probability.push_back(true);
        } else {
            has_probability.push_back(false);
        }
        set.push_back(std::move(s));
    }

    double given = 0.0;
    std::size_t missing = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (has_probability[i])
            given += set[i].probability;
        else
            ++missing;
    }
    if (missing > 0) {
        const double share = (1.0 - given) / static_cast<double>(missing);
        for (std::size_t i = 0; i < set.size(); ++i)
            if (!has_probability[i])
                set[i].probability = share;
    }
    return set;
}

} // namespace ems
