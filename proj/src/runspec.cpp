#include "rasm/runspec.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rasm/analysis.hpp"

namespace rasm {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

[[noreturn]] void fail(int line, const std::string& message) {
    std::ostringstream oss;
    oss << "config error (line " << line << "): " << message;
    throw std::runtime_error(oss.str());
}

long long parse_int(const std::string& value, int line, const std::string& key) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        fail(line, "value for '" + key + "' is not an integer: " + value);
    }
    if (pos != value.size()) fail(line, "value for '" + key + "' is not an integer: " + value);
    return v;
}

double parse_real(const std::string& value, int line, const std::string& key) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        fail(line, "value for '" + key + "' is not a number: " + value);
    }
    if (pos != value.size()) fail(line, "value for '" + key + "' is not a number: " + value);
    return v;
}

bool parse_bool(const std::string& value, int line, const std::string& key) {
    const std::string v = lower(value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(line, "value for '" + key + "' is not a boolean: " + value);
}

SchemeKind parse_scheme(const std::string& value, int line) {
    const std::string v = lower(value);
    if (v == "rasm") return SchemeKind::Rasm;
    if (v == "rsm") return SchemeKind::Rsm;
    if (v == "rgsm") return SchemeKind::Rgsm;
    if (v == "rgssk") return SchemeKind::Rgssk;
    fail(line, "unknown scheme '" + value + "' (expected RASM, RSM, RGSM, or RGSSK)");
}

std::string format_snr(double snr) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", snr);
    return buf;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10e", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    return out;
}

} // namespace

std::vector<double> RunSpec::snr_grid() const {
    std::vector<double> grid;
    for (double snr = snr_start; snr <= snr_stop + 1e-9; snr += snr_step)
        grid.push_back(snr);
    return grid;
}

RunSpec parse_run_spec(const std::string& text) {
    RunSpec spec;
    bool saw_mode = false, saw_start = false, saw_stop = false;

    struct Pending {
        std::string label;
        int line = 0;
        bool saw_scheme = false, saw_n = false, saw_nrx = false, saw_m = false,
             saw_ns = false;
        SystemConfig config;
    };
    std::vector<Pending> sections;
    Pending* current = nullptr;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t comment = raw.find_first_of("#;");
        std::string s = trim(comment == std::string::npos ? raw : raw.substr(0, comment));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header");
            const std::string label = trim(s.substr(1, s.size() - 2));
            if (label.empty()) fail(line, "empty section name");
            for (const auto& p : sections)
                if (p.label == label) fail(line, "duplicate section '" + label + "'");
            sections.push_back({});
            sections.back().label = label;
            sections.back().line = line;
            current = &sections.back();
            continue;
        }
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value', got: " + s);
        const std::string key = lower(trim(s.substr(0, eq)));
        const std::string value = trim(s.substr(eq + 1));
        if (value.empty()) fail(line, "missing value for '" + key + "'");

        if (current == nullptr) {
            if (key == "mode") {
                const std::string v = lower(value);
                if (v == "simulate") spec.mode = RunSpec::Mode::Simulate;
                else if (v == "analyze") spec.mode = RunSpec::Mode::Analyze;
                else if (v == "compare") spec.mode = RunSpec::Mode::Compare;
                else fail(line, "unknown mode '" + value + "'");
                saw_mode = true;
            } else if (key == "snr_start") {
                spec.snr_start = parse_real(value, line, key);
                saw_start = true;
            } else if (key == "snr_stop") {
                spec.snr_stop = parse_real(value, line, key);
                saw_stop = true;
            } else if (key == "snr_step") {
                spec.snr_step = parse_real(value, line, key);
            } else if (key == "trials") {
                const long long v = parse_int(value, line, key);
                if (v < 1) fail(line, "trials must be at least 1");
                spec.trials = static_cast<std::uint64_t>(v);
            } else if (key == "seed") {
                spec.seed = static_cast<std::uint64_t>(parse_int(value, line, key));
            } else if (key == "quadrature_nodes") {
                const long long v = parse_int(value, line, key);
                if (v < 1) fail(line, "quadrature_nodes must be at least 1");
                spec.quadrature_nodes = static_cast<int>(v);
            } else if (key == "out") {
                spec.out_dir = value;
            } else {
                fail(line, "unknown key '" + key + "'");
            }
        } else {
            if (key == "scheme") {
                current->config.scheme = parse_scheme(value, line);
                current->saw_scheme = true;
            } else if (key == "n" || key == "n_res") {
                current->config.n_res = static_cast<int>(parse_int(value, line, key));
                current->saw_n = true;
            } else if (key == "n_rx" || key == "n_d") {
                current->config.n_rx = static_cast<int>(parse_int(value, line, key));
                current->saw_nrx = true;
            } else if (key == "n_s") {
                current->config.n_selected = static_cast<int>(parse_int(value, line, key));
                current->saw_ns = true;
            } else if (key == "m") {
                current->config.order = static_cast<int>(parse_int(value, line, key));
                current->saw_m = true;
            } else if (key == "modulation") {
                const std::string v = lower(value);
                if (v == "psk") current->config.modulation = ModulationKind::Psk;
                else if (v == "qam") current->config.modulation = ModulationKind::Qam;
                else fail(line, "unknown modulation '" + value + "' (expected psk or qam)");
            } else if (key == "gray") {
                current->config.gray = parse_bool(value, line, key);
            } else {
                fail(line, "unknown key '" + key + "' in section [" + current->label + "]");
            }
        }
    }

    if (!saw_mode) fail(line, "missing required key 'mode'");
    if (!saw_start || !saw_stop) fail(line, "missing required keys 'snr_start'/'snr_stop'");
    if (sections.empty()) fail(line, "no scheme sections defined");
    if (!(spec.snr_step > 0.0)) fail(line, "snr_step must be positive");
    if (spec.snr_start > spec.snr_stop) fail(line, "snr_start must not exceed snr_stop");

    for (auto& p : sections) {
        if (!p.saw_scheme) fail(p.line, "section [" + p.label + "] is missing 'scheme'");
        if (!p.saw_n) fail(p.line, "section [" + p.label + "] is missing 'n'");
        if (!p.saw_nrx) fail(p.line, "section [" + p.label + "] is missing 'n_rx'");
        const bool ssk = p.config.scheme == SchemeKind::Rgssk;
        if (!p.saw_m && !ssk)
            fail(p.line, "section [" + p.label + "] is missing 'm'");
        if (ssk) {
            if (p.saw_m && p.config.order != 1)
                fail(p.line, "RGSSK carries no symbol bits; omit 'm' or set it to 1");
            p.config.order = 1;
        }
        if ((p.config.scheme == SchemeKind::Rgsm || ssk) && !p.saw_ns)
            fail(p.line, "section [" + p.label + "] uses a fixed-size scheme and requires 'n_s'");
        p.config.master_seed = spec.seed;
        try {
            p.config.validate();
            bpcu(p.config);   // also checks scheme-specific feasibility
        } catch (const std::exception& e) {
            fail(p.line, std::string(e.what()) + " in section [" + p.label + "]");
        }
        spec.entries.push_back({p.label, p.config});
    }
    return spec;
}

std::vector<std::string> run_spec(const RunSpec& spec) {
    std::vector<std::string> written;
    const auto grid = spec.snr_grid();
    const std::filesystem::path dir(spec.out_dir);
    if (!dir.empty()) std::filesystem::create_directories(dir);

    if (spec.mode == RunSpec::Mode::Analyze) {
        AnalysisOptions options;
        options.quadrature_nodes = spec.quadrature_nodes;
        for (const auto& entry : spec.entries) {
            const auto setup = make_setup(entry.config);
            const auto path = dir / (entry.label + "_aber.csv");
            auto out = open_output(path);
            out << "snr_db,aber_bound\n";
            for (double snr : grid) {
                const double n0 = std::pow(10.0, -snr / 10.0);
                const auto result = union_bound_aber(entry.config, setup.table,
                                                     setup.symbols, setup.constellation,
                                                     n0, options);
                out << format_snr(snr) << "," << format_value(result.aber) << "\n";
            }
            written.push_back(path.string());
        }
        return written;
    }

    // simulate and compare both need BER curves
    std::vector<BerCurve> curves;
    curves.reserve(spec.entries.size());
    for (const auto& entry : spec.entries)
        curves.push_back(run_ber(entry.config, grid, spec.trials));

    if (spec.mode == RunSpec::Mode::Simulate) {
        for (std::size_t c = 0; c < spec.entries.size(); ++c) {
            const auto path = dir / (spec.entries[c].label + "_ber.csv");
            auto out = open_output(path);
            out << "snr_db,ber,ci95,trials\n";
            for (const auto& point : curves[c].points)
                out << format_snr(point.snr_db) << "," << format_value(point.ber) << ","
                    << format_value(point.ci95) << "," << point.trials << "\n";
            written.push_back(path.string());
        }
        return written;
    }

    const auto path = dir / "compare.csv";
    auto out = open_output(path);
    out << "snr_db";
    for (const auto& entry : spec.entries) out << "," << entry.label;
    out << "\n";
    out << "bpcu";
    for (const auto& entry : spec.entries) out << "," << bpcu(entry.config);
    out << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << format_snr(grid[i]);
        for (const auto& curve : curves) out << "," << format_value(curve.points[i].ber);
        out << "\n";
    }
    written.push_back(path.string());
    return written;
}

} // namespace rasm
