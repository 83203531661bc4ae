"""Regenerate ``src/stablerisk/_table_data.py``.

Tabulates the 5/25/50/75/95% quantiles of the standard S1 stable law on an
(alpha, beta) grid, using the package's own numerical quantile function.
Run from the repository root::

    python scripts/build_quantile_table.py
"""

from pathlib import Path

import numpy as np

from stablerisk.stable import StableParams, quantile

ALPHAS = np.round(np.arange(1.05, 2.0001, 0.05), 2)
BETAS = np.round(np.arange(0.0, 1.0001, 0.1), 2)
LEVELS = (0.05, 0.25, 0.5, 0.75, 0.95)


def main():
    table = np.empty((ALPHAS.size, BETAS.size, len(LEVELS)))
    for i, a in enumerate(ALPHAS):
        for j, b in enumerate(BETAS):
            table[i, j] = quantile(StableParams(a, 1.0, b, 0.0), LEVELS)
        print(f"alpha={a:.2f} done")
    out = Path(__file__).resolve().parents[1] / "src" / "stablerisk" / "_table_data.py"
    lines = [
        '"""Quantiles of the standard S1 stable law (generated, do not edit)."""',
        "",
        "# generated by scripts/build_quantile_table.py",
        f"ALPHAS = {ALPHAS.tolist()!r}",
        f"BETAS = {BETAS.tolist()!r}",
        f"LEVELS = {list(LEVELS)!r}",
        "# QUANTILES[i][j][k]: alpha ALPHAS[i], beta BETAS[j], level LEVELS[k]",
        "QUANTILES = [",
    ]
    for i in range(ALPHAS.size):
        lines.append("    [")
        for j in range(BETAS.size):
            row = ", ".join(f"{v:.12g}" for v in table[i, j])
            lines.append(f"        [{row}],")
        lines.append("    ],")
    lines.append("]")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
