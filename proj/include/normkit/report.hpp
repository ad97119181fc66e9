// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_REPORT_HPP
#define NORMKIT_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "normkit/vector.hpp"

namespace normkit {

/// Uniform result record: named scalars, named witness vectors, free-form
/// notes. A failing report always carries a witness or a note saying why.
struct Report {
  std::string kind;
  bool pass = true;
  std::map<std::string, double> values;
  std::map<std::string, Vec> witnesses;
  std::vector<std::string> notes;

  void fail(const std::string& note) {
    pass = false;
    notes.push_back(note);
  }

  void merge(const Report& sub) {
    if (!sub.pass) {
      pass = false;
      for (const auto& n : sub.notes) notes.push_back(sub.kind + ": " + n);
      if (sub.notes.empty()) notes.push_back(sub.kind + ": failed");
    }
    for (const auto& [k, v] : sub.values) values[sub.kind + "." + k] = v;
  }
};

}  // namespace normkit

#endif
