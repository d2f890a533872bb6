// Prints the behavioral statistics behind the trigon letter table as TSV and
// checks them against the table compiled into the library.

#include <cstdlib>
#include <iostream>

#include "sphcurve/calibration.hpp"

int main(int argc, char** argv) {
  using namespace sphcurve;
  const int n_max = argc > 1 ? std::atoi(argv[1]) : 8;
  if (n_max < 3 || n_max > kMaxEnumerationCrossings) {
    std::cerr << "usage: calibrate_trigons [n_max in 3.." << kMaxEnumerationCrossings << "]\n";
    return 2;
  }
  const auto report = derive_trigon_calibration(n_max, default_jobs());
  std::cout << "# trigon calibration n<=" << n_max << "\n";
  std::cout << "signature\tletter\tinterlaced_pairs\tcoherent\toccurrences\tcurves\tmax_reductivity"
               "\tI_to_incoherent_bigon\tI_to_coherent_bigon\tI_to_type_B\ton_trefoil\tcompiled_letter\n";
  bool agrees = report.consistent;
  for (const auto& s : report.classes) {
    const auto compiled = lookup_trigon_letter(s.signature);
    if (s.signature != "degenerate" && compiled != s.derived) agrees = false;
    std::cout << s.signature << "\t" << to_char(s.derived) << "\t" << s.interlace_count << "\t" << s.coherent << "\t"
              << s.occurrences << "\t" << s.curves << "\t" << s.max_reductivity << "\t" << s.to_incoherent_bigon
              << "\t" << s.to_coherent_bigon << "\t" << s.to_type_b << "\t" << s.on_trefoil << "\t"
              << to_char(compiled) << "\n";
  }
  if (!report.consistent) std::cerr << "inconsistent: " << report.problem << "\n";
  std::cerr << (agrees ? "derived table matches the compiled table\n" : "derived table DIFFERS from the compiled table\n");
  return agrees ? 0 : 3;
}
