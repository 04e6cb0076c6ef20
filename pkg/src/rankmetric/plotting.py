"""Figure rendering for the CLI report paths.

Each helper takes the rows already computed for the delimited output and
writes a PNG next to it.  Rendering is headless (Agg); nothing here feeds
back into any computation.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def _finish(fig, ax, path: str, title: str):
    ax.grid(True, alpha=0.3)
    ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def save_volumes_plot(config: dict, rows: list[dict], path: str) -> None:
    """Sphere/ball volumes against radius, on a log_q axis, with the
    exponential sandwich."""
    ts = [r["t"] for r in rows]
    fig, ax = plt.subplots()
    ax.plot(ts, [r["log_q_sphere"] for r in rows], "o-", label="sphere")
    ax.plot(ts, [r["log_q_ball"] for r in rows], "s-", label="ball")
    ax.plot(ts, [r["lo_exponent"] for r in rows], "--", color="gray",
            label="lower exponent")
    ax.plot(ts, [r["hi_exponent"] for r in rows], ":", color="gray",
            label="upper exponent")
    ax.set_xlabel("radius t")
    ax.set_ylabel(f"log_{config['q']} volume")
    ax.legend()
    _finish(fig, ax, path,
            f"volumes in F_{{{config['q']}^{config['m']}}}^{config['n']}")


def save_spectrum_plot(config: dict, rows: list[dict], path: str) -> None:
    """Rank spectrum of the MRD code as log2 proportions of the code."""
    pts = [(r["s"], r["log2_proportion"]) for r in rows
           if r["log2_proportion"] is not None]
    fig, ax = plt.subplots()
    ax.plot([p[0] for p in pts], [p[1] for p in pts], "o-")
    ax.set_xlabel("rank s")
    ax.set_ylabel("log2(A_s / M)")
    _finish(fig, ax, path,
            f"MRD rank spectrum q={config['q']} m={config['m']} "
            f"n={config['n']} d={config['d']}")


def save_density_plot(config: dict, rows: list[dict], path: str) -> None:
    """Covering density of the rank-1-correcting family against length."""
    ns = [r["n"] for r in rows]
    ds = [r["density_float"] for r in rows]
    q = config["q"]
    fig, ax = plt.subplots()
    ax.plot(ns, ds, "o-", label="density")
    limit = 1.0 / (q - 1) if q > 2 else 1.0
    ax.axhline(limit, linestyle="--", color="gray", label=f"limit {limit:g}")
    ax.set_xlabel("n")
    ax.set_ylabel("covering density")
    ax.set_ylim(0, 1.05)
    ax.legend()
    _finish(fig, ax, path, f"rank-1 MRD covering density, q={q}")


def save_distribution_plot(config: dict, rows: list[dict], path: str) -> None:
    """Exact vs empirical minimum-distance distribution with the pointwise
    upper bound."""
    xs = [r["i"] for r in rows]
    fig, ax = plt.subplots()
    ax.plot(xs, [r["p_exact"] for r in rows], "o-", label="exact formula")
    ax.plot(xs, [r["p_empirical"] for r in rows], "x", markersize=9,
            label="empirical")
    ax.plot(xs, [r["upper_bound"] for r in rows], "--", color="gray",
            label="upper bound")
    ax.set_xlabel("minimum rank distance i")
    ax.set_ylabel("probability")
    ax.legend()
    kind = f"K={config['K']}" if config.get("K") is not None else f"M={config['M']}"
    _finish(fig, ax, path,
            f"minimum-distance distribution q={config['q']} "
            f"m={config['m']} n={config['n']} {kind}")


def save_rank_census_plot(config: dict, rows: list[dict], path: str) -> None:
    """Rank proportions: closed-form MRD curve next to the sampled mean."""
    fig, ax = plt.subplots()
    mrd = [(r["s"], r["log2_mrd_proportion"]) for r in rows
           if r["log2_mrd_proportion"] is not None]
    emp = [(r["s"], r["log2_empirical_proportion"]) for r in rows
           if r["log2_empirical_proportion"] is not None]
    if mrd:
        ax.plot([p[0] for p in mrd], [p[1] for p in mrd], "o-", label="MRD")
    if emp:
        ax.plot([p[0] for p in emp], [p[1] for p in emp], "s--",
                label="random linear (mean)")
    ax.set_xlabel("rank s")
    ax.set_ylabel("log2 proportion of codewords")
    ax.legend()
    _finish(fig, ax, path,
            f"rank census q={config['q']} m={config['m']} n={config['n']}")
