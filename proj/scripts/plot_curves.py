#!/usr/bin/env python3
"""Plot ratio curves and the fineness summary written by the CLI."""

import argparse
import csv
import glob
import os
from collections import defaultdict


def read_csv(path):
    header, rows = {}, []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                header[key] = value
            else:
                rows.append(line)
    return header, list(csv.DictReader(rows))


def plot_ratios(results, out):
    import matplotlib.pyplot as plt

    by_target = defaultdict(list)
    for path in sorted(glob.glob(os.path.join(results, "ratio_*.csv"))):
        header, rows = read_csv(path)
        by_target[header.get("target", "?")].append((header.get("network", path), rows))
    written = []
    for target, curves in by_target.items():
        fig, ax = plt.subplots(figsize=(6, 4))
        for name, rows in curves:
            ax.plot([float(r["epsilon"]) for r in rows], [float(r["ratio"]) for r in rows], label=name)
        ax.set_xlabel("epsilon")
        ax.set_ylabel("ratio of desired parameters")
        ax.set_title(target)
        ax.legend()
        fig.tight_layout()
        path = os.path.join(out, f"ratio_{target}.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written


def print_fineness(results):
    path = os.path.join(results, "fineness_summary.csv")
    if not os.path.exists(path):
        return
    _, rows = read_csv(path)
    for r in rows:
        print(f"{r['network']}: min fineness {r['min_fineness']} (bound {r['theorem1_bound'] or '-'})")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("results", nargs="?", default="results")
    parser.add_argument("--out", default=None, help="directory for PNG files (default: results dir)")
    args = parser.parse_args()
    out = args.out or args.results
    os.makedirs(out, exist_ok=True)
    for path in plot_ratios(args.results, out):
        print("wrote", path)
    print_fineness(args.results)


if __name__ == "__main__":
    main()
