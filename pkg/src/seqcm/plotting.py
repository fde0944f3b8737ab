"""Figures drawn from a finished report dict (never from live computations)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

_METADATA = {"Software": None}  # keeps PNG bytes independent of the matplotlib build
_ON, _OFF = "#2b6cb0", "#edf2f7"


def _save(fig, path: Path) -> Path:
    fig.savefig(path, dpi=110, bbox_inches="tight", metadata=_METADATA)
    plt.close(fig)
    return path


def _title(report: dict) -> str:
    inp = report.get("input") or {}
    return inp.get("name") or "ideal"


def profile_figure(report: dict, path: Path) -> Path:
    """Grid of nonvanishing local cohomology: one row per (torsion set, char)."""
    profs = report["profiles"]
    width = max(max(p["nonvanishing"], default=0) for p in profs) + 1
    if "input" in report:
        ring = report["input"]["ring"]
        width = max(width, ring["m"] + ring["n"] + 1)
    grid = [[1 if i in p["nonvanishing"] else 0 for i in range(width)] for p in profs]
    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * width, 0.8 + 0.45 * len(profs)))
    ax.imshow(grid, cmap=ListedColormap([_OFF, _ON]), vmin=0, vmax=1, aspect="auto")
    ax.set_xticks(range(width))
    ax.set_yticks(range(len(profs)))
    ax.set_yticklabels([f"{p['wrt']}, char {p['char']}" for p in profs])
    ax.set_xlabel("cohomological index i")
    ax.set_title(f"{_title(report)}: H^i nonzero")
    ax.set_xticks([x - 0.5 for x in range(1, width)], minor=True)
    ax.set_yticks([y - 0.5 for y in range(1, len(profs))], minor=True)
    ax.grid(which="minor", color="white", linewidth=2)
    ax.tick_params(which="minor", length=0)
    return _save(fig, path)


def filtration_figure(report: dict, path: Path) -> Path:
    """Number of minimal primes at each cd value, one panel per torsion set."""
    filts = report["filtrations"]
    fig, axes = plt.subplots(1, len(filts), figsize=(3.2 * len(filts), 2.8), squeeze=False)
    for ax, f in zip(axes[0], filts):
        qs = [s["q"] for s in f["steps"]]
        counts = [len(s["primes"]) for s in f["steps"]]
        ax.bar([str(q) for q in qs], counts, color=_ON)
        ax.set_xlabel(f"cd({f['wrt']}, S/p)")
        ax.set_ylabel("minimal primes")
        ax.set_title(f"wrt {f['wrt']}: r = {f['r']}")
    fig.suptitle(f"{_title(report)}: dimension filtration")
    fig.tight_layout()
    return _save(fig, path)


def certificate_figure(report: dict, path: Path) -> Path:
    """Sequential grades against cd values; the verdict holds where they coincide."""
    cls = report["classifications"]
    fig, axes = plt.subplots(1, len(cls), figsize=(3.2 * len(cls), 2.8), squeeze=False)
    for ax, c in zip(axes[0], cls):
        cert = c["relative"]["certificates"]
        steps = range(1, len(cert["cd_values"]) + 1)
        ax.plot(steps, cert["cd_values"], "o-", color=_ON, label="q_i")
        ax.plot(steps, cert["seq_grades"], "s--", color="#c05621", label="grade S/J_(i-1)")
        ax.set_xticks(list(steps))
        ax.set_xlabel("filtration step i")
        ax.set_title(f"wrt {c['wrt']}, char {c['char']}")
        ax.legend(fontsize=7, frameon=False)
    fig.suptitle(f"{_title(report)}: sequential certificates")
    fig.tight_layout()
    return _save(fig, path)


def search_figure(report: dict, path: Path) -> Path:
    """Qualifying ideals by number of nonvanishing y-block indices."""
    searches = report["searches"]
    fig, axes = plt.subplots(1, len(searches), figsize=(3.4 * len(searches), 2.8), squeeze=False)
    for ax, s in zip(axes[0], searches):
        hist = s["q_width_histogram"]
        ax.bar(list(hist), list(hist.values()), color=_ON)
        ax.set_xlabel("nonvanishing y-block indices")
        ax.set_ylabel("qualifying ideals")
        ax.set_title(f"char {s['char']}: {s['counterexamples']} counterexamples")
    fig.tight_layout()
    return _save(fig, path)


_FIGURES = (
    ("profiles", "profile", profile_figure),
    ("filtrations", "filtration", filtration_figure),
    ("classifications", "certificates", certificate_figure),
    ("searches", "search", search_figure),
)


def render_figures(report: dict, outdir: str | Path) -> list[Path]:
    """Write every figure the report supports into ``outdir``; return the paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = _title(report) if "input" in report else None
    written = []
    for key, suffix, draw in _FIGURES:
        if report.get(key):
            name = f"{stem}_{suffix}" if stem else suffix
            written.append(draw(report, outdir / f"{name}.png"))
    return written
