"""Write the CSV data behind the three figures into an output directory.

    python3 scripts/make_figures.py --out figures --b-values=-0.1,-0.05,-0.02
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from qutrit_ent import matrixio
from qutrit_ent.cli import figure_rows


@dataclass
class FigureConfig:
    out: Path = Path("figures")
    b_values: list = field(default_factory=lambda: [-0.1, -0.05, -0.02])


def run(cfg):
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name in ("fig1", "fig2", "fig3"):
        rows = figure_rows(name, cfg.b_values)
        path = cfg.out / f"{name}.csv"
        path.write_text(matrixio.format_csv(matrixio.sweep_rows_to_dicts(rows)), encoding="utf-8")
        kept = sum(not r.skipped for r in rows)
        print(f"{path}: {kept} points ({len(rows) - kept} skipped)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=FigureConfig.out)
    ap.add_argument("--b-values", type=lambda s: [float(x) for x in s.split(",")])
    args = ap.parse_args()
    cfg = FigureConfig(out=args.out)
    if args.b_values:
        cfg.b_values = args.b_values
    run(cfg)


if __name__ == "__main__":
    main()
