#include "netcomp/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace netcomp {

namespace {

// One fixed numeric format everywhere keeps every emitted file byte-stable.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r' && c != ' ') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value '" + s + "' in " + context);
    }
}

} // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "step,frac_a,frac_b,frac_u\n";
    for (std::size_t t = 0; t < traj.steps(); ++t)
        out << t << ',' << fmt(traj.frac_a(t)) << ',' << fmt(traj.frac_b(t)) << ','
            << fmt(traj.frac_u(t)) << '\n';
}

void write_ensemble_csv(std::ostream& out, const EnsembleResult& res) {
    out << "step,mean_a,std_a,mean_b,std_b,mean_u,std_u\n";
    for (std::size_t t = 0; t < res.steps.size(); ++t) {
        const StepStats& s = res.steps[t];
        out << t << ',' << fmt(s.mean_a) << ',' << fmt(s.std_a) << ',' << fmt(s.mean_b) << ','
            << fmt(s.std_b) << ',' << fmt(s.mean_u) << ',' << fmt(s.std_u) << '\n';
    }
}

namespace {

std::string group_column(GroupLabel g) {
    switch (g) {
        case GroupLabel::GroupA: return "frac_a";
        case GroupLabel::GroupB: return "frac_b";
        case GroupLabel::Unassigned: return "frac_u";
    }
    return "?";
}

} // namespace

void write_empirical_csv(std::ostream& out, const EmpiricalSeries& series) {
    series.validate();
    out << "year";
    for (GroupLabel g : series.groups) out << ',' << group_column(g);
    out << '\n';
    for (std::size_t i = 0; i < series.years.size(); ++i) {
        out << fmt(series.years[i]);
        for (double v : series.values[i]) out << ',' << fmt(v);
        out << '\n';
    }
}

EmpiricalSeries read_empirical_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empirical CSV is empty");
    const auto header = split_csv_line(line);
    if (header.empty() || header[0] != "year")
        throw std::invalid_argument("empirical CSV must start with a 'year' column");
    EmpiricalSeries series;
    for (std::size_t j = 1; j < header.size(); ++j) {
        if (header[j] == "frac_a")
            series.groups.push_back(GroupLabel::GroupA);
        else if (header[j] == "frac_b")
            series.groups.push_back(GroupLabel::GroupB);
        else if (header[j] == "frac_u")
            series.groups.push_back(GroupLabel::Unassigned);
        else
            throw std::invalid_argument("unknown empirical CSV column '" + header[j] + "'");
    }
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw std::invalid_argument("row " + std::to_string(row) + " has " +
                                        std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(header.size()));
        const std::string ctx = "row " + std::to_string(row);
        series.years.push_back(parse_double(fields[0], ctx));
        std::vector<double> vals;
        for (std::size_t j = 1; j < fields.size(); ++j) vals.push_back(parse_double(fields[j], ctx));
        series.values.push_back(std::move(vals));
    }
    series.validate();
    return series;
}

EmpiricalSeries read_empirical_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open empirical CSV '" + path + "'");
    return read_empirical_csv(in);
}

void write_loss_surface_csv(std::ostream& out, const FitResult& fit) {
    out << "alpha,gamma,s_a,s_b,init_frac_a,init_frac_b,steps_per_year,loss\n";
    for (const FitSample& s : fit.samples) {
        const CandidatePoint& p = s.point;
        out << fmt(p.alpha) << ',' << fmt(p.gamma) << ',' << fmt(p.s_a) << ',' << fmt(p.s_b) << ','
            << fmt(p.init_frac_a) << ',' << fmt(p.init_frac_b) << ',' << fmt(p.steps_per_year)
            << ',' << fmt(s.loss) << '\n';
    }
}

void write_fit_report(std::ostream& out, const FitResult& fit) {
    auto point = [&](const std::string& prefix, const CandidatePoint& p, double loss_value) {
        out << prefix << "alpha=" << fmt(p.alpha) << '\n';
        out << prefix << "gamma=" << fmt(p.gamma) << '\n';
        out << prefix << "s_a=" << fmt(p.s_a) << '\n';
        out << prefix << "s_b=" << fmt(p.s_b) << '\n';
        out << prefix << "init_frac_a=" << fmt(p.init_frac_a) << '\n';
        out << prefix << "init_frac_b=" << fmt(p.init_frac_b) << '\n';
        out << prefix << "steps_per_year=" << fmt(p.steps_per_year) << '\n';
        out << prefix << "loss=" << fmt(loss_value) << '\n';
    };
    point("best_", fit.best, fit.best_loss);
    point("grid_best_", fit.grid_best, fit.grid_best_loss);
    out << "ensemble_size=" << fit.ensemble_size << '\n';
    out << "samples=" << fit.samples.size() << '\n';
    if (!fit.seeds.empty())
        out << "seed_base=" << fit.seeds.front() << '\n';
}

} // namespace netcomp
