#include "evodp/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace evodp {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

class CsvReader {
  public:
    CsvReader(const std::string& path, const std::vector<std::string>& columns)
        : path_(path), in_(open_in(path)) {
        std::string header;
        if (!std::getline(in_, header)) {
            throw std::runtime_error(path + ": missing header row");
        }
        if (!header.empty() && header.back() == '\r') header.pop_back();
        const auto names = split_fields(header);
        for (const auto& want : columns) {
            bool found = false;
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (names[i] == want) {
                    index_.push_back(i);
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw std::runtime_error(path + ": missing column '" + want + "'");
            }
        }
        width_ = names.size();
    }

    // Returns the requested columns of the next row, or false at EOF.
    bool next(std::vector<std::string>& out) {
        std::string line;
        for (;;) {
            if (!std::getline(in_, line)) return false;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) break;
        }
        const auto fields = split_fields(line);
        if (fields.size() != width_) {
            throw std::runtime_error(path_ + ": row has wrong field count");
        }
        out.clear();
        for (std::size_t i : index_) out.push_back(fields[i]);
        return true;
    }

  private:
    std::string path_;
    std::ifstream in_;
    std::vector<std::size_t> index_;
    std::size_t width_ = 0;
};

long long parse_int(const std::string& field, const std::string& column) {
    long long value = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw std::runtime_error("column '" + column + "': not an integer: " + field);
    }
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buffer[64];
    const auto res = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return std::string(buffer, res.ptr);
}

std::string format_time(ExtendedTime t) {
    return t.finite() ? format_double(t.value()) : std::string("inf");
}

double parse_double(const std::string& field, const std::string& column) {
    double value = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw std::runtime_error("column '" + column + "': not a number: " + field);
    }
    return value;
}

ExtendedTime parse_time(const std::string& field, const std::string& column) {
    if (field == "inf") return ExtendedTime::infinity();
    return ExtendedTime(parse_double(field, column));
}

void write_tables_csv(const std::string& path, const DpTables& tables) {
    auto out = open_out(path);
    out << "fitness,rate,T_iterations\n";
    for (int f = tables.f_min; f < tables.f_max; ++f) {
        const auto& rates = tables.grid.rates(f);
        const auto& row = tables.T[tables.t_index(f)];
        for (std::size_t j = 0; j < rates.size(); ++j) {
            out << f << ',' << format_double(rates[j]) << ','
                << format_time(row[j]) << '\n';
        }
    }
}

DpTables read_tables_csv(const std::string& path) {
    CsvReader reader(path, {"fitness", "rate", "T_iterations"});
    std::map<int, std::vector<std::pair<double, ExtendedTime>>> rows;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        const int fitness = static_cast<int>(parse_int(fields[0], "fitness"));
        const double rate = parse_double(fields[1], "rate");
        rows[fitness].emplace_back(rate, parse_time(fields[2], "T_iterations"));
    }
    if (rows.empty()) throw std::runtime_error(path + ": no data rows");
    const int f_min = rows.begin()->first;
    const int f_max = rows.rbegin()->first + 1;
    if (static_cast<int>(rows.size()) != f_max - f_min) {
        throw std::runtime_error(path + ": fitness levels are not contiguous");
    }

    std::vector<std::vector<double>> grid_rows;
    DpTables tables;
    tables.T.reserve(rows.size());
    for (auto& [fitness, cells] : rows) {
        std::vector<double> rates;
        std::vector<ExtendedTime> times;
        for (auto& [rate, t] : cells) {
            rates.push_back(rate);
            times.push_back(t);
        }
        grid_rows.push_back(std::move(rates));
        tables.T.push_back(std::move(times));
    }
    tables.f_min = f_min;
    tables.f_max = f_max;
    tables.grid = RateGrid(f_min, f_max, std::move(grid_rows));
    tables.meta.provider = "csv";
    finalize_tables(tables);
    return tables;
}

void write_optimal_csv(const std::string& path, const DpTables& tables) {
    auto out = open_out(path);
    out << "fitness,T_star_iterations,p_opt\n";
    for (int f = tables.f_min; f <= tables.f_max; ++f) {
        out << f << ',' << format_time(tables.T_star[tables.t_index(f)]) << ','
            << format_double(tables.P_opt[tables.t_index(f)]) << '\n';
    }
}

void write_trace_csv(const std::string& path, const std::vector<RunTrace>& runs) {
    auto out = open_out(path);
    out << "run_id,iteration,fitness,rate,best_offspring_fitness,success\n";
    for (std::size_t run = 0; run < runs.size(); ++run) {
        for (const TraceRecord& rec : runs[run].records) {
            out << run << ',' << rec.iteration << ',' << rec.parent_fitness << ','
                << format_double(rec.rate) << ',' << rec.best_offspring_fitness
                << ',' << (rec.success ? 1 : 0) << '\n';
        }
    }
}

std::vector<RunTrace> read_trace_csv(const std::string& path) {
    CsvReader reader(path, {"run_id", "iteration", "fitness", "rate",
                            "best_offspring_fitness", "success"});
    std::vector<RunTrace> runs;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        const auto run_id = parse_int(fields[0], "run_id");
        if (run_id < 0 || run_id > static_cast<long long>(runs.size())) {
            throw std::runtime_error(path + ": run_id values must be contiguous from 0");
        }
        if (run_id == static_cast<long long>(runs.size())) runs.emplace_back();
        TraceRecord rec;
        rec.iteration = parse_int(fields[1], "iteration");
        rec.parent_fitness = static_cast<int>(parse_int(fields[2], "fitness"));
        rec.rate = parse_double(fields[3], "rate");
        rec.best_offspring_fitness =
            static_cast<int>(parse_int(fields[4], "best_offspring_fitness"));
        rec.success = parse_int(fields[5], "success") != 0;
        auto& run = runs[static_cast<std::size_t>(run_id)];
        run.records.push_back(rec);
        run.iterations = rec.iteration;
    }
    return runs;
}

void write_runs_csv(const std::string& path, const std::vector<RunTrace>& runs) {
    auto out = open_out(path);
    out << "run_id,iterations_to_optimum\n";
    for (std::size_t run = 0; run < runs.size(); ++run) {
        out << run << ',';
        if (runs[run].reached_optimum) {
            out << runs[run].iterations;
        } else {
            out << "budget_exhausted";
        }
        out << '\n';
    }
}

void write_heatmap_csv(const std::string& path,
                       const std::vector<HeatmapCell>& cells) {
    auto out = open_out(path);
    out << "fitness,rate,C,alpha_f,T\n";
    for (const HeatmapCell& cell : cells) {
        out << cell.fitness << ',' << format_double(cell.rate) << ','
            << format_double(cell.C) << ',' << format_double(cell.alpha_f) << ','
            << format_time(cell.T) << '\n';
    }
}

void write_regret_csv(const std::string& path,
                      const std::vector<std::vector<RegretPoint>>& per_run) {
    auto out = open_out(path);
    out << "run_id,iteration,fitness,rate,mapped_rate,regret,infinite\n";
    for (std::size_t run = 0; run < per_run.size(); ++run) {
        for (const RegretPoint& point : per_run[run]) {
            out << run << ',' << point.iteration << ',' << point.fitness << ','
                << format_double(point.rate) << ','
                << format_double(point.mapped_rate) << ','
                << format_time(point.regret) << ','
                << (point.regret.finite() ? 0 : 1) << '\n';
        }
    }
}

void write_lowerbound_csv(const std::string& path, const std::string& problem,
                          int n, int lambda, ExtendedTime iterations) {
    auto out = open_out(path);
    out << "problem,n,lambda,T_iterations,T_evaluations\n";
    out << problem << ',' << n << ',' << lambda << ','
        << format_time(iterations) << ','
        << format_time(iterations.scaled_by(static_cast<double>(lambda))) << '\n';
}

}  // namespace evodp
