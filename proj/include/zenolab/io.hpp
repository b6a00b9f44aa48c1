// io.hpp -- CSV / SVG emission and the flat key=value config format
#pragma once

#include <map>
#include <string>
#include <vector>

namespace zenolab::io {

// 12 significant digits, '.' decimal separator; identical input bytes out.
std::string format_number(double x);

/// A CSV table with leading '#' comment lines (the resolved config echo).
struct CsvTable {
    std::vector<std::string> comments;           // written as "# <line>"
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // pre-formatted cells
    std::vector<std::string> trailer_comments;   // summary lines after the data

    void add_row(const std::vector<double>& values);
    void add_row_cells(std::vector<std::string> cells);
    std::string to_string() const; // LF line endings
};

// Writes content via temp file + rename (atomic on the same filesystem).
void write_file_atomic(const std::string& path, const std::string& content);

// Throws if the directory cannot be written to.
void check_writable(const std::string& dir);

/// Minimal static SVG line plot.
struct PlotSeries {
    std::string label;
    std::vector<double> x, y;
    std::string color = "#1f6fb4";
};

struct PlotSpec {
    std::string title, x_label, y_label;
    bool log_y = false;
    std::vector<PlotSeries> series;
};

std::string render_svg(const PlotSpec& spec);

/// Parsed flat key=value config with [section] headers; keys stored as
/// "section.key" (or bare key before any section header).
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;                  // throws if missing
    std::string get_or(const std::string& key, std::string def) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double def) const;
    long get_long_or(const std::string& key, long def) const;
    bool get_bool_or(const std::string& key, bool def) const;

    void set(const std::string& key, const std::string& value);
    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

} // namespace zenolab::io
