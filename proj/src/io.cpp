#include "thermo/io.hpp"

#include "thermo/error.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace thermo::io {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& cell, std::size_t line) {
    try {
        std::size_t used = 0;
        const std::string t = trim(cell);
        const double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw DomainError("csv: bad number '" + cell + "' on line " + std::to_string(line));
    }
}

std::string header(bool extended, Eigen::Index n) {
    std::string h = extended ? "t,z,S,T" : "t,z";
    for (Eigen::Index j = 1; j <= n; ++j) h += ",p_" + std::to_string(j);
    for (Eigen::Index j = 1; j <= n; ++j) h += ",q_" + std::to_string(j);
    return h;
}

// Returns n after checking the header against the expected layout.
Eigen::Index parse_header(const std::string& line, bool extended) {
    const auto cells = split(trim(line));
    const std::size_t fixed = extended ? 4 : 2;
    require(cells.size() > fixed && (cells.size() - fixed) % 2 == 0,
            "csv: header must be " + header(extended, 1) + " style");
    const auto n = static_cast<Eigen::Index>((cells.size() - fixed) / 2);
    require(trim(line) == header(extended, n), "csv: expected header '" + header(extended, n) + "'");
    return n;
}

template <class Point, class Fill>
SampledPath<Point> read_path(std::istream& is, bool extended, Fill fill) {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), "csv: empty input");
    const auto n = parse_header(line, extended);
    const std::size_t fixed = extended ? 4 : 2;
    SampledPath<Point> path;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto cells = split(trim(line));
        require(cells.size() == fixed + 2 * static_cast<std::size_t>(n),
                "csv: wrong number of columns on line " + std::to_string(lineno));
        std::vector<double> v;
        for (const auto& c : cells) v.push_back(parse_double(c, lineno));
        path.times.push_back(v[0]);
        path.points.push_back(fill(v, n));
    }
    validate_path(path);
    return path;
}

}  // namespace

void write_path_csv(std::ostream& os, const ExtendedPath& path) {
    validate_path(path);
    const auto n = path.points.front().dim();
    os << header(true, n) << '\n';
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& pt = path.points[i];
        os << fmt(path.times[i]) << ',' << fmt(pt.z) << ',' << fmt(pt.S) << ',' << fmt(pt.T);
        for (Eigen::Index j = 0; j < n; ++j) os << ',' << fmt(pt.p[j]);
        for (Eigen::Index j = 0; j < n; ++j) os << ',' << fmt(pt.q[j]);
        os << '\n';
    }
}

void write_path_csv(std::ostream& os, const ReducedPath& path) {
    validate_path(path);
    const auto n = path.points.front().dim();
    os << header(false, n) << '\n';
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& pt = path.points[i];
        os << fmt(path.times[i]) << ',' << fmt(pt.z);
        for (Eigen::Index j = 0; j < n; ++j) os << ',' << fmt(pt.p[j]);
        for (Eigen::Index j = 0; j < n; ++j) os << ',' << fmt(pt.q[j]);
        os << '\n';
    }
}

ExtendedPath read_extended_path_csv(std::istream& is) {
    return read_path<ExtendedPoint>(is, true, [](const std::vector<double>& v, Eigen::Index n) {
        ExtendedPoint pt;
        pt.z = v[1];
        pt.S = v[2];
        pt.T = v[3];
        pt.p = Eigen::Map<const Vec>(v.data() + 4, n);
        pt.q = Eigen::Map<const Vec>(v.data() + 4 + n, n);
        validate(pt);
        return pt;
    });
}

ReducedPath read_reduced_path_csv(std::istream& is) {
    return read_path<ReducedPoint>(is, false, [](const std::vector<double>& v, Eigen::Index n) {
        ReducedPoint pt;
        pt.z = v[1];
        pt.p = Eigen::Map<const Vec>(v.data() + 2, n);
        pt.q = Eigen::Map<const Vec>(v.data() + 2 + n, n);
        return pt;
    });
}

json to_json(const NonnegReport& r) {
    return {{"min_form_value", r.min_form_value},
            {"violations", r.violating_indices},
            {"verdict", r.verdict == Verdict::nonnegative ? "nonnegative" : "violated"},
            {"slack", r.slack}};
}

json to_json(const Chord& c) {
    return {{"q", c.q},           {"p", c.p},           {"z_start", c.z_start},
            {"z_end", c.z_end},   {"length", c.length}, {"direction", c.direction}};
}

json to_json(const std::vector<Chord>& chords) {
    json arr = json::array();
    for (const auto& c : chords) arr.push_back(to_json(c));
    return arr;
}

json to_json(const ReducedPoint& pt) {
    return {{"z", pt.z},
            {"p", std::vector<double>(pt.p.data(), pt.p.data() + pt.p.size())},
            {"q", std::vector<double>(pt.q.data(), pt.q.data() + pt.q.size())}};
}

void write_chords_csv(std::ostream& os, const std::vector<Chord>& chords) {
    os << "q,p,z_start,z_end,length,direction,tangential\n";
    for (const auto& c : chords) {
        os << fmt(c.q) << ',' << fmt(c.p) << ',' << fmt(c.z_start) << ',' << fmt(c.z_end) << ','
           << fmt(c.length) << ',' << c.direction << ',' << (c.tangential ? 1 : 0) << '\n';
    }
}

System system_from_json(const json& j) {
    require(j.is_object(), "system: JSON object expected");
    static const std::set<std::string> known{"labels", "weights", "v_int", "v_bar"};
    for (const auto& [key, val] : j.items()) {
        require(known.count(key) == 1, "system: unknown key '" + key + "'");
    }
    require(j.contains("weights") && j.contains("v_int") && j.contains("v_bar"),
            "system: weights, v_int and v_bar are required");
    try {
        System s;
        const auto w = j.at("weights").get<std::vector<double>>();
        s.space.weights = Eigen::Map<const Vec>(w.data(), static_cast<Eigen::Index>(w.size()));
        if (j.contains("labels")) {
            s.space.labels = j.at("labels").get<std::vector<std::string>>();
        } else {
            s.space = MicrostateSpace::uniform(s.space.weights.size());
            s.space.weights = Eigen::Map<const Vec>(w.data(), static_cast<Eigen::Index>(w.size()));
        }
        const auto vi = j.at("v_int").get<std::vector<double>>();
        s.hamiltonian.v_int = Eigen::Map<const Vec>(vi.data(), static_cast<Eigen::Index>(vi.size()));
        const auto vb = j.at("v_bar").get<std::vector<std::vector<double>>>();
        require(!vb.empty(), "system: v_bar needs at least one row");
        s.hamiltonian.v_bar.resize(static_cast<Eigen::Index>(vb.size()), static_cast<Eigen::Index>(vb.front().size()));
        for (std::size_t r = 0; r < vb.size(); ++r) {
            require(vb[r].size() == vb.front().size(), "system: ragged v_bar");
            for (std::size_t c = 0; c < vb[r].size(); ++c) {
                s.hamiltonian.v_bar(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vb[r][c];
            }
        }
        s.space.validate();
        s.hamiltonian.validate(s.space);
        return s;
    } catch (const json::exception& e) {
        throw DomainError(std::string("system: ") + e.what());
    }
}

System load_system(const std::string& file) {
    try {
        return system_from_json(json::parse(read_text_file(file)));
    } catch (const json::parse_error& e) {
        throw DomainError("system: cannot parse " + file + ": " + e.what());
    }
}

std::vector<Density> read_densities_csv(std::istream& is) {
    std::vector<Density> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        std::vector<double> v;
        for (const auto& c : split(trim(line))) v.push_back(parse_double(c, lineno));
        out.push_back(Density{Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()))});
    }
    return out;
}

void write_densities_csv(std::ostream& os, const std::vector<Density>& ds) {
    for (const auto& d : ds) {
        for (Eigen::Index i = 0; i < d.rho.size(); ++i) os << (i ? "," : "") << fmt(d.rho[i]);
        os << '\n';
    }
}

void write_text_file(const std::string& file, const std::string& content) {
    std::ofstream os(file, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + file + " for writing");
    os << content;
    if (!os) throw std::runtime_error("failed writing " + file);
}

std::string read_text_file(const std::string& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw DomainError("cannot open " + file);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace thermo::io
