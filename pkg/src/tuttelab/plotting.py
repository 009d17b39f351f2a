"""Figures written next to the CSV output.  Floats appear only here, for drawing."""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .reports import CheckReport  # noqa: E402
from .upoly import RationalPoly  # noqa: E402


def segment_samples(f: RationalPoly, p, samples: int) -> list[tuple[Fraction, Fraction]]:
    """(t, f(t)) at samples equally spaced points of [0, p], ends included."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    p = Fraction(p)
    pts = [p * i / (samples - 1) for i in range(samples)]
    return [(t, f(t)) for t in pts]


def decimal_string(x: Fraction, digits: int) -> str:
    """x rounded to ``digits`` places after the point; integers print bare."""
    if x.denominator == 1:
        return str(x.numerator)
    with localcontext() as ctx:
        ctx.prec = digits + len(str(abs(x.numerator // x.denominator))) + 2
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal(1).scaleb(-digits)))


def plot_segment(rows: Sequence[tuple[Fraction, Fraction]], p, path: str | Path,
                 title: str = "") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ts = [float(t) for t, _ in rows]
    ax.plot(ts, [float(v) for _, v in rows], marker="o", ms=3, lw=1.2)
    ax.set_xlabel("t")
    ax.set_ylabel(f"T(t, {p} - t)")
    if title:
        ax.set_title(title, fontsize=9)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_conjecture(reports: Sequence[CheckReport], path: str | Path) -> Path:
    """T(1,1) against max{T(2,0), T(0,2)}; points under the diagonal are counterexamples."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    colors = {"pass": "tab:blue", "fail": "tab:red", "skip": "0.7"}
    top = 1.0
    for verdict in ("skip", "pass", "fail"):
        xs, ys = [], []
        for r in reports:
            if r.verdict != verdict or "T(1,1)" not in r.values:
                continue
            x = float(Fraction(r.values["T(1,1)"]))
            y = float(max(Fraction(r.values["T(2,0)"]), Fraction(r.values["T(0,2)"])))
            xs.append(x)
            ys.append(y)
            top = max(top, x, y)
        if xs:
            ax.scatter(xs, ys, s=6, c=colors[verdict], label=f"{verdict} ({len(xs)})")
    ax.plot([1, top], [1, top], "k--", lw=0.8)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("T(1,1)")
    ax.set_ylabel("max{T(2,0), T(0,2)}")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
