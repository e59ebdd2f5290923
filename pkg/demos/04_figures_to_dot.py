"""
Figures as Graphviz files
=========================

Writes a DOT file for each labeled example graph into ./figures. Render with
``dot -Tpng figures/spltg_star_8.dot -o star.png`` if Graphviz is installed.
"""

from pathlib import Path

from spclab import (corona_scheme, path_square_scheme, search_spc, spltg_bull_scheme,
                    spltg_star_scheme)
from spclab import families as fam
from spclab.interchange import to_dot

out_dir = Path("figures")
out_dir.mkdir(exist_ok=True)

figures = {
    "spltg_star_8": spltg_star_scheme(8),
    "spltg_bull": spltg_bull_scheme(),
    "psquare_8": path_square_scheme(8),
    "corona_c4_3k1": corona_scheme(4),
}
for name, out in figures.items():
    (out_dir / f"{name}.dot").write_text(to_dot(out.graph, out.labeling, name=name))

# the dumbbell is drawn with an oracle witness
g = fam.helm_dumbbell(5)
(out_dir / "helm_dumbbell_5.dot").write_text(to_dot(g, search_spc(g).witness, name="helm_dumbbell_5"))
print("wrote", sorted(p.name for p in out_dir.iterdir()))
