#!/usr/bin/env python3
"""Run the desk-scale sampler x schedule comparison grid.

Drives the `compare` command with configs/desk_grid.cfg (or a config of
your own), then reprints the per-cell medians from the emitted CSV.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from srslab.cli import main as cli_main
from srslab.csvio import read_csv

DEFAULT_CONFIG = Path(__file__).resolve().parent.parent / "configs" / "desk_grid.cfg"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--config", default=str(DEFAULT_CONFIG))
    parser.add_argument("--out", default="results/desk_grid.csv")
    args = parser.parse_args()

    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    code = cli_main(["compare", args.config, "--out", args.out])
    if code != 0:
        return code
    elapsed = time.perf_counter() - start

    table = read_csv(args.out)
    medians = {(r[0], r[1]): float(r[4])
               for r in table.rows if r[3] == "median"}
    best = min(medians.values())
    print(f"\n{len(table.rows) - len(medians)} runs in {elapsed:.0f}s; "
          f"best median final error {best:.4f}")
    for (sampler, milestones), value in sorted(medians.items()):
        marker = "  <- best" if value == best else ""
        print(f"  {sampler:12s} ({milestones}): {value:.4f}{marker}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
