"""Component-group tables in the style of the adjoint-group tabulations.

:func:`table_rows` is deterministic; :func:`render_text` and
:func:`render_csv` are byte-stable for a fixed version, and
:func:`plot_table` draws the same rows as a heatmap.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .engine import pi0, pi1_alg
from .real_form import catalog, real_rank

FORMS = ("split", "compact", "all", "all-catalog")
COLUMNS = ("entry", "group", "rank", "form", "pi0", "pi0_rank", "real_rank", "pi1")


@dataclass(frozen=True)
class TableRow:
    entry: str
    group: str
    rank: int
    form: str
    pi0: str
    pi0_rank: int
    real_rank: int
    pi1: str

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, c) for c in COLUMNS)


def simple_types(max_rank: int) -> list[tuple[str, int]]:
    out = []
    for kind, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        out += [(kind, n) for n in range(lo, max_rank + 1)]
    out += [(k, n) for k, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)) if n <= max_rank]
    return out


def table_refs(max_rank: int, forms: str) -> list[tuple[str, tuple, str, str]]:
    """(catalog name, params, group label, form label) in table order."""
    if forms not in FORMS:
        raise ValueError(f"forms must be one of {FORMS}")
    which = ("split", "compact") if forms in ("all", "all-catalog") else (forms,)
    refs = []
    for kind, n in simple_types(max_rank):
        for isogeny in ("sc", "adjoint"):
            for form in which:
                refs.append((form, (kind, n, isogeny), f"{kind}{n} {isogeny}", form))
    if forms == "all-catalog":
        for n in range(1, max_rank + 1):
            refs.append(("gl_r", (n,), f"GL({n})", "gl_r"))
        for n in range(1, max_rank + 1):
            refs.append(("sp2n_r", (n,), f"Sp({2 * n})", "sp2n_r"))
        for total in range(2, max_rank + 1):
            for q in range(0, total // 2 + 1):
                refs.append(("u", (total - q, q), f"U({total})", f"u({total - q},{q})"))
        for total in range(2, max_rank + 2):
            for q in range(0, total // 2 + 1):
                refs.append(("su", (total - q, q), f"SU({total})", f"su({total - q},{q})"))
        for total in range(2, 2 * max_rank + 2):
            for q in range(0, total // 2 + 1):
                refs.append(("so", (total - q, q), f"SO({total})", f"so({total - q},{q})"))
    return refs


def table_rows(max_rank: int = 8, forms: str = "all") -> list[TableRow]:
    rows = []
    for name, params, group, form in table_refs(max_rank, forms):
        d, f = catalog(name, *params)
        g = pi0(d, f).group
        rows.append(TableRow("/".join([name, *map(str, params)]), group, d.rank, form,
                             g.render(), g.two_rank, real_rank(f), pi1_alg(d, f).group.render()))
    return rows


def render_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow(r.as_tuple())
    return buf.getvalue()


def render_text(rows: list[TableRow]) -> str:
    cells = [COLUMNS] + [tuple(str(x) for x in r.as_tuple()) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(COLUMNS))]
    lines = ["  ".join(c[i].ljust(widths[i]) for i in range(len(COLUMNS))).rstrip() for c in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def plot_table(rows: list[TableRow], path) -> None:
    """Heatmap of the number of Z/2 factors: simple type x rank, one panel per form."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    simple = [r for r in rows if r.form in ("split", "compact")]
    kinds = sorted({r.group[0] for r in simple}) or ["A"]
    max_rank = max((r.rank for r in simple), default=1)
    panels = sorted({(r.form, r.group.split()[1]) for r in simple}, key=lambda p: (p[0] != "split", p)) \
        or [("split", "sc")]
    fig, axes = plt.subplots(1, len(panels), figsize=(2.6 * len(panels) + 0.6, 2.8), squeeze=False)
    for ax, (form, iso) in zip(axes[0], panels):
        grid = [[float("nan")] * max_rank for _ in kinds]
        for r in simple:
            if r.form == form and r.group.split()[1] == iso:
                grid[kinds.index(r.group[0])][r.rank - 1] = r.pi0_rank
                ax.text(r.rank - 1, kinds.index(r.group[0]), str(r.pi0_rank),
                        ha="center", va="center", fontsize=7)
        ax.imshow(grid, cmap="Blues", vmin=0, vmax=3, aspect="auto")
        ax.set_xticks(range(max_rank))
        ax.set_xticklabels([str(n) for n in range(1, max_rank + 1)], fontsize=7)
        ax.set_yticks(range(len(kinds)))
        ax.set_yticklabels(kinds, fontsize=7)
        ax.set_xlabel("rank", fontsize=8)
        ax.set_title(f"{form}, {iso}", fontsize=8)
    fig.suptitle("number of Z/2 factors in the real component group", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
