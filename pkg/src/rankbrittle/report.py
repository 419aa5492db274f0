"""Report path: CSV tables plus rendered figures.

Sweeps the exact solvers over families and seeded random graphs, writes
delimited summaries, and renders matplotlib figures next to them.
"""

from __future__ import annotations

import csv
import random
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .caps import Caps  # noqa: E402
from .catalog import random_graph_uniform  # noqa: E402
from .cutrank import CutRankTable  # noqa: E402
from .graphs import make_family  # noqa: E402
from .solvers import lrw_exact, rank_depth_exact, rbrit_exact  # noqa: E402
from .verify import LEMMA_CHECKS, run_lemma  # noqa: E402


def _family_rows(max_n: int, caps: Caps) -> list[dict]:
    rows = []
    specs = [("path", range(2, max_n + 1)),
             ("complete", range(2, max_n + 1)),
             ("star", range(1, max_n))]
    for family, sizes in specs:
        for k in sizes:
            g = make_family(family, k)
            if g.n > caps.rankdepth:
                continue
            rb1, _ = rbrit_exact(g, 1, caps)
            rb2, _ = rbrit_exact(g, 2, caps)
            rd, _ = rank_depth_exact(g, caps)
            lrw, _ = lrw_exact(g, caps)
            rows.append({"graph": f"{family}:{k}", "n": g.n,
                         "edges": g.edge_count(), "rbrit1": rb1,
                         "rbrit2": rb2, "rank_depth": rd, "lrw": lrw})
    return rows


def _random_rows(samples: int, max_n: int, seed: int, caps: Caps) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for i in range(samples):
        n = rng.randint(2, min(max_n, caps.rankdepth))
        g = random_graph_uniform(n, rng)
        rb1, _ = rbrit_exact(g, 1, caps)
        rb2, _ = rbrit_exact(g, 2, caps)
        rd, _ = rank_depth_exact(g, caps)
        lrw, _ = lrw_exact(g, caps)
        rows.append({"graph": f"random:{i}", "n": n, "edges": g.edge_count(),
                     "rbrit1": rb1, "rbrit2": rb2, "rank_depth": rd,
                     "lrw": lrw})
    return rows


def _write_csv(path: Path, rows: list[dict]) -> None:
    if not rows:
        path.write_text("")
        return
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)


def _figure_parameter_growth(path: Path, rows: list[dict]) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    by_n: dict[int, list[dict]] = {}
    for row in rows:
        by_n.setdefault(row["n"], []).append(row)
    ns = sorted(by_n)
    for key, style in (("rbrit1", "o-"), ("rbrit2", "s-"),
                       ("rank_depth", "^-"), ("lrw", "d-")):
        means = [sum(r[key] for r in by_n[n]) / len(by_n[n]) for n in ns]
        ax.plot(ns, means, style, label=key)
    ax.set_xlabel("vertices")
    ax.set_ylabel("mean parameter value")
    ax.set_title("Width parameters on random graphs")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _figure_layout_bound(path: Path, rows: list[dict]) -> None:
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    xs = [r["rank_depth"] for r in rows]
    ys = [r["lrw"] for r in rows]
    ax.scatter(xs, ys, alpha=0.5, label="samples")
    if xs:
        ks = sorted(set(xs))
        ax.plot(ks, [k * k for k in ks], "r--", label="depth squared")
    ax.set_xlabel("rank-depth")
    ax.set_ylabel("linear rank-width")
    ax.set_title("Linear width stays under depth squared")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _figure_layout_profiles(path: Path, caps: Caps) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for spec in ("path:8", "complete:8", "star:7", "subdivided_star:3"):
        family, _, k = spec.partition(":")
        g = make_family(family, int(k))
        _, layout = lrw_exact(g, caps)
        table = CutRankTable(g)
        mask = 0
        profile = []
        for v in layout.order[:-1]:
            mask |= 1 << v
            profile.append(table(mask))
        ax.plot(range(1, len(profile) + 1), profile, "o-", label=spec)
    ax.set_xlabel("prefix length")
    ax.set_ylabel("prefix cut-rank")
    ax.set_title("Optimal layout cut profiles")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def run_report(outdir: Path, seed: int = 0, samples: int = 40,
               max_n: int = 7) -> dict:
    caps = Caps.from_env()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    family_rows = _family_rows(max_n, caps)
    random_rows = _random_rows(samples, max_n, seed, caps)
    _write_csv(outdir / "parameters.csv", family_rows + random_rows)

    lemma_rows = []
    for lemma in sorted(LEMMA_CHECKS):
        report = run_lemma(lemma, seed=seed, caps=caps)
        lemma_rows.append({
            "lemma": lemma,
            "description": report["lemma"],
            "checks": len(report["checks"]),
            "pass": report["pass"],
        })
    _write_csv(outdir / "lemmas.csv", lemma_rows)

    _figure_parameter_growth(outdir / "parameter_growth.png", random_rows)
    _figure_layout_bound(outdir / "layout_bound.png", random_rows)
    _figure_layout_profiles(outdir / "layout_profiles.png", caps)

    return {
        "out": str(outdir),
        "files": sorted(p.name for p in outdir.iterdir()),
        "parameters_rows": len(family_rows) + len(random_rows),
        "lemmas_pass": all(r["pass"] for r in lemma_rows),
        "seed": seed,
    }
