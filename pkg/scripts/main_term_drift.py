#!/usr/bin/env python3
"""How fast does the twisted-divisor main term track the core count?

For each modulus the script tabulates the exact ratio
count_cores(n, ell) / core_main_term(n, ell) on a grid and then reports the
mean absolute deviation from 1 per block, which shrinks as n grows.  At
ell = 5 the ratio is identically 1, so the interesting rows start at 7.
"""

import argparse
from dataclasses import dataclass

from corz.abacus import count_cores
from corz.numtheory import core_main_term


@dataclass
class GridConfig:
    ells: tuple[int, ...] = (5, 7, 11)
    n_max: int = 2000
    blocks: int = 4
    show_rows: int = 6


def block_deviations(ell: int, config: GridConfig) -> list[float]:
    width = config.n_max // config.blocks
    out = []
    for b in range(config.blocks):
        lo = max(1, b * width)
        hi = (b + 1) * width
        devs = [
            abs(float(count_cores(n, ell) / core_main_term(n, ell)) - 1)
            for n in range(lo, hi)
            if core_main_term(n, ell) != 0
        ]
        out.append(sum(devs) / len(devs))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ell", default="5,7,11", help="comma-separated primes >= 5")
    ap.add_argument("--n-max", type=int, default=2000)
    ap.add_argument("--blocks", type=int, default=4)
    args = ap.parse_args()
    config = GridConfig(
        ells=tuple(int(t) for t in args.ell.split(",")),
        n_max=args.n_max,
        blocks=args.blocks,
    )

    for ell in config.ells:
        print(f"ell = {ell}")
        step = max(1, config.n_max // config.show_rows)
        for n in range(step, config.n_max + 1, step):
            main = core_main_term(n, ell)
            exact = count_cores(n, ell)
            ratio = float(exact / main) if main else float("nan")
            print(f"  n = {n:6d}  c = {exact:16d}  main = {float(main):18.2f}  ratio = {ratio:.6f}")
        devs = block_deviations(ell, config)
        rendered = ", ".join(f"{d:.2e}" for d in devs)
        print(f"  mean |ratio - 1| per block: {rendered}")
        print()


if __name__ == "__main__":
    main()
