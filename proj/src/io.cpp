#include "zenolab/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zenolab::io {

std::string format_number(double x) {
    if (x == 0.0) x = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", x);
    return buf;
}

void CsvTable::add_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_number(v));
    rows.push_back(std::move(cells));
}

void CsvTable::add_row_cells(std::vector<std::string> cells) {
    rows.push_back(std::move(cells));
}

std::string CsvTable::to_string() const {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << "\n";
    for (size_t i = 0; i < columns.size(); ++i)
        os << columns[i] << (i + 1 < columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
    for (const auto& c : trailer_comments) os << "# " << c << "\n";
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        if (!out.good()) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void check_writable(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const fs::path probe = fs::path(dir) / ".zeno-lab-write-check";
    std::ofstream out(probe);
    if (!out) throw std::runtime_error("output directory is not writable: " + dir);
    out.close();
    fs::remove(probe);
}

namespace {

struct Range { double lo, hi; };

Range nice_range(double lo, double hi) {
    if (!(hi > lo)) { hi = lo + 1.0; }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

} // namespace

std::string render_svg(const PlotSpec& spec) {
    const int w = 720, h = 480, ml = 70, mr = 20, mt = 40, mb = 55;
    const double px0 = ml, px1 = w - mr, py0 = h - mb, py1 = mt;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : spec.series)
        for (size_t i = 0; i < s.x.size(); ++i) {
            double y = s.y[i];
            if (spec.log_y) {
                if (!(y > 0.0)) continue;
                y = std::log10(y);
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmin > xmax) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
    const Range xr = nice_range(xmin, xmax), yr = nice_range(ymin, ymax);
    auto sx = [&](double x) { return px0 + (x - xr.lo) / (xr.hi - xr.lo) * (px1 - px0); };
    auto sy = [&](double y) { return py0 + (y - yr.lo) / (yr.hi - yr.lo) * (py1 - py0); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << spec.title << "</text>\n";

    // axes + ticks
    os << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px1 << "\" y2=\"" << py0
       << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px0 << "\" y2=\"" << py1
       << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
        char xbuf[32], ybuf[32];
        std::snprintf(xbuf, sizeof(xbuf), "%.3g", fx);
        if (spec.log_y) std::snprintf(ybuf, sizeof(ybuf), "1e%.2g", fy);
        else std::snprintf(ybuf, sizeof(ybuf), "%.3g", fy);
        os << "<line x1=\"" << sx(fx) << "\" y1=\"" << py0 << "\" x2=\"" << sx(fx) << "\" y2=\""
           << py0 + 5 << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << sx(fx) << "\" y=\"" << py0 + 20
           << "\" text-anchor=\"middle\" font-size=\"11\">" << xbuf << "</text>\n";
        os << "<line x1=\"" << px0 - 5 << "\" y1=\"" << sy(fy) << "\" x2=\"" << px0 << "\" y2=\""
           << sy(fy) << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << px0 - 8 << "\" y=\"" << sy(fy) + 4
           << "\" text-anchor=\"end\" font-size=\"11\">" << ybuf << "</text>\n";
    }
    os << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"" << h - 12
       << "\" text-anchor=\"middle\" font-size=\"13\">" << spec.x_label << "</text>\n";
    os << "<text x=\"18\" y=\"" << (py0 + py1) / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
       << (py0 + py1) / 2 << ")\">" << spec.y_label << "</text>\n";

    int legend_y = mt + 8;
    for (const auto& s : spec.series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < s.x.size(); ++i) {
            double y = s.y[i];
            if (spec.log_y) {
                if (!(y > 0.0)) continue;
                y = std::log10(y);
            }
            os << sx(s.x[i]) << "," << sy(y) << " ";
        }
        os << "\"/>\n";
        os << "<line x1=\"" << px1 - 150 << "\" y1=\"" << legend_y << "\" x2=\"" << px1 - 120
           << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n"
           << "<text x=\"" << px1 - 114 << "\" y=\"" << legend_y + 4 << "\" font-size=\"12\">"
           << s.label << "</text>\n";
        legend_y += 18;
    }
    os << "</svg>\n";
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_string(os.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            std::ostringstream err;
            err << origin << ":" << lineno << ": expected key=value, got '" << t << "'";
            throw std::runtime_error(err.str());
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            std::ostringstream err;
            err << origin << ":" << lineno << ": empty key";
            throw std::runtime_error(err.str());
        }
        cfg.entries_[section.empty() ? key : section + "." + key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string Config::get(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw std::runtime_error("config: missing key '" + key + "'");
    return it->second;
}

std::string Config::get_or(const std::string& key, std::string def) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? std::move(def) : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string v = get(key);
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("config: key '" + key + "' is not a number: '" + v + "'");
    }
}

double Config::get_double_or(const std::string& key, double def) const {
    return has(key) ? get_double(key) : def;
}

long Config::get_long_or(const std::string& key, long def) const {
    if (!has(key)) return def;
    return static_cast<long>(get_double(key));
}

bool Config::get_bool_or(const std::string& key, bool def) const {
    if (!has(key)) return def;
    std::string v = get(key);
    std::transform(v.begin(), v.end(), v.begin(), ::tolower);
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw std::runtime_error("config: key '" + key + "' is not a boolean: '" + v + "'");
}

void Config::set(const std::string& key, const std::string& value) { entries_[key] = value; }

} // namespace zenolab::io
