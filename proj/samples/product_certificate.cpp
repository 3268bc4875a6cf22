// Copyright 2026 The chipfire Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Certify gonality of a few Cartesian products and print each checklist.

#include <iostream>
#include <string>

#include "chipfire.hpp"

namespace cf = chipfire;

namespace {

bool show(const std::string& name, const cf::Multigraph& g, const cf::Multigraph& h) {
  const auto cert = cf::certify_product(g, h);
  std::cout << name << ": gon(G)=" << cert.g.gon << " gon(H)=" << cert.h.gon
            << ", bounds " << cert.bounds.lower << ".." << cert.bounds.upper << "\n";
  if (cert.applied) {
    std::cout << "  " << cert.applied->id << (cert.applied->swapped ? " (as H x G)" : "") << "\n";
    for (const auto& hyp : cert.applied->checklist)
      std::cout << "    [" << (hyp.pass ? "pass" : "FAIL") << "] " << hyp.name << "  ("
                << hyp.computed << ")\n";
  }
  if (cert.value) {
    std::cout << "  gon = " << *cert.value << "\n";
  } else {
    std::cout << "  open\n";
  }
  return cert.value.has_value();
}

}  // namespace

int main() {
  namespace gen = cf::gen;
  bool ok = true;
  ok &= show("P3 x K4", gen::path(3), gen::complete(4));
  ok &= show("C4 x C5", gen::cycle(4), gen::cycle(5));
  ok &= show("C2 x K4", gen::cycle(2), gen::complete(4));
  ok &= show("(K3 x K2) x K4", cf::cartesian_product(gen::complete(3), gen::complete(2)),
             gen::complete(4));

  const auto lower = cf::product_sn_lower(gen::cycle(4), gen::cycle(6));
  std::cout << "sn(C4 x C6) >= " << lower.first << " from " << lower.second << "\n";
  return ok ? 0 : 1;
}
