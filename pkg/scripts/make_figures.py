#!/usr/bin/env python3
"""Regenerate all figure data sets (CSV) into a target directory.

Usage: python scripts/make_figures.py [out_dir]
"""

import sys
import time
from pathlib import Path

from trapgas import figures


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    for figure_id in range(1, 8):
        started = time.perf_counter()
        table = figures.make_figure(figure_id)
        path = table.write_csv(out_dir / f"fig{figure_id}.csv")
        print(f"fig{figure_id}: {len(table.rows)} rows -> {path} "
              f"({time.perf_counter() - started:.2f} s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
