"""Figure of the rescaled density bounds against k."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bounds import BoundRecord  # noqa: E402


def plot_table9(rows: Sequence[BoundRecord], path: str | Path) -> Path:
    """Write a PNG of t_* upper bounds; external rows are drawn hollow."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=100)
    ours = [r for r in rows if r.provenance.reproduced]
    ext = [r for r in rows if not r.provenance.reproduced]
    ax.plot([r.k for r in ours], [float(r.t_star) for r in ours], "o-", color="tab:blue", label="reproduced")
    if ext:
        ax.plot([r.k for r in ext], [float(r.t_star) for r in ext], "o", mfc="none",
                color="tab:gray", label="external constant")
    ax.set_xlabel("k")
    ax.set_ylabel("upper bound on t_*(k,4)")
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="png", metadata={"Software": None})
    plt.close(fig)
    return path
