#include "revmatch/report.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace revmatch {

std::string csv_header() {
  return "trial,equiv,n,mode,algorithm,o1_classical,o1_inverse,o1_quantum,o2_classical,o2_inverse,o2_quantum,"
         "success,wall_ms\n";
}

std::string to_csv(const std::vector<BenchRecord>& records, ReportOptions options) {
  std::ostringstream os;
  os << csv_header();
  os << std::fixed << std::setprecision(3);
  for (const BenchRecord& r : records) {
    os << r.trial << ',' << r.equiv.to_string() << ',' << r.n << ',' << to_string(r.mode) << ','
       << to_string(r.algorithm) << ',' << r.o1.classical << ',' << r.o1.inverse << ',' << r.o1.quantum << ','
       << r.o2.classical << ',' << r.o2.inverse << ',' << r.o2.quantum << ',' << (r.success ? 1 : 0) << ','
       << (options.deterministic_timing ? 0.0 : r.wall_ms) << '\n';
  }
  return os.str();
}

std::string summary(const std::vector<BenchRecord>& records) {
  struct Group {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double classical = 0;
    double inverse = 0;
    double quantum = 0;
  };
  using Key = std::tuple<std::string, std::size_t, std::string, std::string>;
  std::map<Key, Group> groups;
  for (const BenchRecord& r : records) {
    Group& g = groups[{r.equiv.to_string(), r.n, std::string(to_string(r.mode)), std::string(to_string(r.algorithm))}];
    ++g.trials;
    g.successes += r.success ? 1 : 0;
    g.classical += static_cast<double>(r.o1.classical + r.o2.classical);
    g.inverse += static_cast<double>(r.o1.inverse + r.o2.inverse);
    g.quantum += static_cast<double>(r.o1.quantum + r.o2.quantum);
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  if (groups.empty()) os << "no records\n";
  for (const auto& [key, g] : groups) {
    const double t = static_cast<double>(g.trials);
    os << std::get<0>(key) << " n=" << std::get<1>(key) << " mode=" << std::get<2>(key)
       << " algorithm=" << std::get<3>(key) << ": " << g.successes << '/' << g.trials << " succeeded"
       << ", mean queries classical=" << g.classical / t << " inverse=" << g.inverse / t
       << " quantum=" << g.quantum / t << '\n';
  }
  return os.str();
}

void write_csv_file(const std::string& path, const std::vector<BenchRecord>& records, ReportOptions options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_csv(records, options);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace revmatch
