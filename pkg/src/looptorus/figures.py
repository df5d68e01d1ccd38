"""Figure rendering for verification reports.

Writes PNG files next to the delimited output: a pass/fail bar per
suite, the rad f lattice for rank-2 contexts, and the span growth curve
when the probe ran.  Everything goes through the Agg backend so no
display is needed.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_figures(outdir, env, report) -> list:
    os.makedirs(outdir, exist_ok=True)
    written = []
    written.append(_suite_summary(outdir, report))
    if env.ctx.n == 2:
        written.append(_radf_lattice(outdir, env))
    detail = next(
        (e.get("detail") for e in report["suites"] if e["name"] == "probe" and e.get("detail")),
        None,
    )
    if detail:
        written.append(_probe_growth(outdir, detail))
    return written


def _suite_summary(outdir, report):
    names = [e["name"] for e in report["suites"]]
    fails = [len(e["failures"]) for e in report["suites"]]
    colors = ["#2a9d2a" if f == 0 else "#c03030" for f in fails]
    fig, ax = plt.subplots(figsize=(max(4, 1.1 * len(names)), 3))
    ax.bar(names, [max(f, 0.08) for f in fails], color=colors)
    ax.set_ylabel("failures")
    ax.set_title("suite residual counts (green bars are stubs at zero)")
    ax.tick_params(axis="x", rotation=30)
    fig.tight_layout()
    path = os.path.join(outdir, "suite_summary.png")
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def _radf_lattice(outdir, env, span=6):
    ctx = env.ctx
    xs_in, ys_in, xs_out, ys_out = [], [], [], []
    for x in range(-span, span + 1):
        for y in range(-span, span + 1):
            if ctx.in_radf((x, y)):
                xs_in.append(x)
                ys_in.append(y)
            else:
                xs_out.append(x)
                ys_out.append(y)
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    ax.scatter(xs_out, ys_out, s=12, c="#999999", label="outside rad f")
    ax.scatter(xs_in, ys_in, s=34, c="#1f5fbf", label="rad f")
    ax.set_title("central degrees (rad f) in the degree lattice")
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=7)
    fig.tight_layout()
    path = os.path.join(outdir, "radf_lattice.png")
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def _probe_growth(outdir, detail):
    hist = detail["history"]
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ax.plot(range(len(hist)), hist, marker="o")
    ax.axhline(detail["target_dim"], linestyle="--", color="#c03030", label="window dim")
    ax.set_xlabel("sweep")
    ax.set_ylabel("span rank")
    ax.set_title(f"windowed span growth (saturated={detail['saturated']})")
    ax.legend(fontsize=7)
    fig.tight_layout()
    path = os.path.join(outdir, "probe_growth.png")
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path
