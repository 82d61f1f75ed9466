#!/usr/bin/env python3
"""Regenerates the bundled zero and Stieltjes tables with mpmath.

The C++ library never computes zeta zeros or Stieltjes constants from
scratch in the default configuration; it ingests these files.  Every zero is
checked by the residual |zeta(1/2 + i t)| at the output precision.

    python3 tools/data/generate_data.py --out data
"""
import argparse
import pathlib

import mpmath


def write_zeros(path, count, digits):
    mpmath.mp.dps = digits + 20
    lines = [
        f"# precision_digits={digits}",
        "# source=mpmath.zetazero, residual-checked at output precision",
    ]
    for n in range(1, count + 1):
        t = mpmath.zetazero(n).imag
        resid = abs(mpmath.zeta(mpmath.mpc(0.5, t)))
        if resid > mpmath.mpf(10) ** (-(digits - 5)):
            raise RuntimeError(f"zero {n}: residual {resid}")
        lines.append(f"{n} {mpmath.nstr(t, digits + 3, strip_zeros=False)}")
    path.write_text("\n".join(lines) + "\n")


def write_stieltjes(path, count, digits):
    mpmath.mp.dps = digits + 20
    lines = [
        "# kind=stieltjes",
        f"# precision_digits={digits}",
        "# source=mpmath.stieltjes",
    ]
    for n in range(count):
        g = mpmath.stieltjes(n)
        lines.append(f"{n} {mpmath.nstr(g, digits, strip_zeros=False)}")
    path.write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data")
    ap.add_argument("--what", default="all", choices=["all", "zeros", "hp", "stieltjes"])
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.what in ("all", "zeros"):
        write_zeros(out / "zeros.txt", 150, 130)
    if args.what in ("all", "hp"):
        write_zeros(out / "zeros_1000.txt", 10, 1050)
    if args.what in ("all", "stieltjes"):
        write_stieltjes(out / "stieltjes.txt", 241, 130)


if __name__ == "__main__":
    main()
