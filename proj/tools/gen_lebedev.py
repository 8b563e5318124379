#!/usr/bin/env python3
"""Regenerate src/lebedev_data.cpp from scipy.integrate.lebedev_rule.

Each embedded grid is stored as rows {x, y, z, w} on the full sphere, with the
weights normalized to sum to one.
"""
import sys

import numpy as np
from scipy.integrate import lebedev_rule

ORDERS = [5, 7, 9, 11, 17, 35, 65]


def main(path):
    out = []
    out.append("// Generated by tools/gen_lebedev.py from scipy.integrate.lebedev_rule.")
    out.append("// Rows are {x, y, z, w} on the unit sphere; weights sum to 1.")
    out.append("// Do not edit by hand.")
    out.append("")
    out.append('#include "boltz/lebedev_data.hpp"')
    out.append("")
    out.append("namespace boltz::detail {")
    out.append("namespace {")
    for order in ORDERS:
        x, w = lebedev_rule(order)
        w = w / w.sum()
        out.append(f"constexpr LebedevPoint kOrder{order}[] = {{")
        for i in range(x.shape[1]):
            out.append("    {%.17g, %.17g, %.17g, %.17g}," % (x[0, i], x[1, i], x[2, i], w[i]))
        out.append("};")
    out.append("}  // namespace")
    out.append("")
    out.append("std::span<const LebedevGrid> lebedev_grids() {")
    out.append("  static constexpr LebedevGrid grids[] = {")
    for order in ORDERS:
        out.append(f"      {{{order}, kOrder{order}}},")
    out.append("  };")
    out.append("  return grids;")
    out.append("}")
    out.append("")
    out.append("}  // namespace boltz::detail")
    with open(path, "w") as fh:
        fh.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/lebedev_data.cpp")
