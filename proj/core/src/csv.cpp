#include "edlab/csv.hpp"

#include <cstdio>
#include <fstream>

namespace edlab {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out =
      "theta,epsilon_a,eta_b,c_ab,ozawa_lhs,branciard_tight_lhs,thm1_rhs,l_new2,"
      "new_beats_branciard\n";
  for (const SweepRecord& r : records) {
    out += format_number(r.theta);
    out += ',';
    out += format_number(r.epsilon_a);
    out += ',';
    out += format_number(r.eta_b);
    out += ',';
    out += format_number(r.c_ab);
    out += ',';
    out += format_number(r.ozawa_lhs);
    out += ',';
    out += format_number(r.branciard_tight_lhs);
    out += ',';
    out += format_number(r.thm1_rhs);
    out += ',';
    out += r.l_new2 ? format_number(*r.l_new2) : "nan";
    out += ',';
    out += r.new_beats_branciard ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string frontier_csv(const std::vector<FrontierCurve>& curves) {
  std::string out = "name,epsilon,eta\n";
  for (const FrontierCurve& c : curves) {
    for (const FrontierPoint& p : c.points) {
      out += c.name;
      out += ',';
      out += format_number(p.epsilon);
      out += ',';
      out += format_number(p.eta);
      out += '\n';
    }
  }
  return out;
}

namespace {

void write_file(const std::string& content, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  write_file(sweep_csv(records), path);
}

void emit_csv(const std::vector<FrontierCurve>& curves, const std::string& path) {
  write_file(frontier_csv(curves), path);
}

}  // namespace edlab
