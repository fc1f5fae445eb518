// Builds the 7x7, k=6 tableau and lists the labels it skips.

#include <iostream>
#include <set>

#include "kgonal/io.hpp"
#include "kgonal/kgonal.hpp"

int main() {
  const auto t = kgonal::construct_minimal(7, 7, 6);
  const auto v = kgonal::validate(t);
  std::cout << kgonal::io::to_text(t);
  std::cout << "distinct labels: " << v.distinct_labels << " (delta = " << kgonal::delta(7, 7, 6) << ")\n";

  const std::set<kgonal::integer> used(t.labels().begin(), t.labels().end());
  std::cout << "skipped:";
  for (kgonal::integer i = 1; i <= t.max_label(); ++i)
    if (!used.count(i)) std::cout << ' ' << i;
  std::cout << '\n';

  std::cout << "\nblocking set (" << kgonal::to_string(kgonal::blocking_set(7, 7, 6).case_tag) << "):\n"
            << kgonal::io::to_text(kgonal::blocking_set(7, 7, 6));
}
