"""Recompute the trefoil splices and write their box complexes as DOT files.

    python scripts/reproduce_trefoil_splices.py [--out figures]
"""

import argparse
from pathlib import Path

from hfsplice.knot_library import get
from hfsplice.pairing import splice
from hfsplice.type_a import ImplicitTypeA, multiplication_graph


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    lay = {k: get(k).layout() for k in ("trefoil_r", "trefoil_l")}
    for k, l in lay.items():
        (out / f"cfd_{k}.dot").write_text(l.structure.to_dot(k) + "\n")
    graph = multiplication_graph(ImplicitTypeA(lay["trefoil_r"].structure), 6)
    (out / "cfa_trefoil_r.dot").write_text(graph.to_dot("CFA trefoil_r") + "\n")

    print(f"{'pair':<22}{'rank':>5}{'gens':>6}{'arrows':>8}  bold")
    for k1, k2 in (("trefoil_r", "trefoil_l"), ("trefoil_r", "trefoil_r"), ("trefoil_l", "trefoil_l"), ("trefoil_l", "trefoil_r")):
        rep = splice(lay[k1], lay[k2])
        arrows = rep.box.arrows()
        print(f"{k1 + ' x ' + k2:<22}{rep.total_rank:>5}{rep.box.dim:>6}{len(arrows):>8}  {', '.join(rep.bold_generators)}")
        dot = rep.box.to_dot(f"{k1} x {k2}", frozenset(rep.bold_generators))
        (out / f"box_{k1}_{k2}.dot").write_text(dot + "\n")
    print(f"DOT files written to {out}/")


if __name__ == "__main__":
    main()
