"""Regenerate the shipped catalog data and its checksum manifest.

Diagrams are stored from planar-diagram codes of the standard Rolfsen /
Thistlethwaite table entries (as distributed with SnapPy's spherogram),
with one explicit sign per crossing, converted to the native semi-arc
format.  Run from the repository root:

    python3 tools/make_catalog_data.py
"""

import json

from ybq import catalog
from ybq import diagram as dg

TABLE = "Rolfsen table PD code (SnapPy/spherogram distribution), signs read off the diagram"

PD = {
    "3_1": ([(5, 2, 0, 3), (3, 0, 4, 1), (1, 4, 2, 5)], [-1, -1, -1],
            "left-handed trefoil, writhe -3; " + TABLE),
    "3_1_r2": ([(1, 6, 2, 7), (5, 0, 6, 1), (9, 4, 0, 5), (7, 2, 8, 3), (8, 4, 9, 3)],
               [-1, -1, -1, -1, 1],
               "left-handed trefoil with an extra Reidemeister-II pair (5 crossings); "
               "hand-built, reduces to the 3_1 entry"),
    "4_1": ([(7, 4, 0, 5), (3, 0, 4, 1), (1, 7, 2, 6), (5, 3, 6, 2)], [-1, -1, 1, 1],
            "figure-eight knot; " + TABLE),
    "5_1": ([(9, 4, 0, 5), (5, 0, 6, 1), (1, 6, 2, 7), (7, 2, 8, 3), (3, 8, 4, 9)], [-1] * 5,
            "cinquefoil; " + TABLE),
    "5_2": ([(4, 0, 5, 9), (0, 6, 1, 5), (8, 2, 9, 1), (2, 8, 3, 7), (6, 4, 7, 3)], [1] * 5,
            "three-twist knot; " + TABLE),
    "6_1": ([(6, 11, 7, 0), (0, 5, 1, 6), (10, 2, 11, 1), (2, 10, 3, 9), (8, 4, 9, 3),
             (4, 8, 5, 7)], [-1, -1, 1, 1, 1, 1], "stevedore knot; " + TABLE),
    "6_2": ([(11, 7, 0, 6), (7, 1, 8, 0), (1, 9, 2, 8), (5, 3, 6, 2), (3, 10, 4, 11),
             (9, 4, 10, 5)], [1, 1, 1, 1, -1, -1], TABLE),
    "6_3": ([(8, 11, 9, 0), (0, 4, 1, 3), (6, 2, 7, 1), (2, 8, 3, 7), (4, 9, 5, 10),
             (10, 5, 11, 6)], [-1, 1, 1, 1, -1, -1], TABLE),
    "7_4": ([(13, 7, 0, 6), (5, 1, 6, 0), (1, 11, 2, 10), (9, 3, 10, 2), (3, 9, 4, 8),
             (11, 5, 12, 4), (7, 13, 8, 12)], [1] * 7, TABLE),
    "whitehead": ([(4, 0, 5, 3), (0, 4, 1, 9), (6, 1, 7, 2), (2, 7, 3, 8), (8, 5, 9, 6)],
                  [1, 1, -1, -1, -1], "Whitehead link L5a1, linking number 0; "
                  "Thistlethwaite table PD code (spherogram), signs read off the diagram"),
    "borromean": ([(4, 0, 5, 3), (0, 8, 1, 11), (6, 1, 7, 2), (2, 9, 3, 10), (8, 4, 9, 7),
                   (10, 5, 11, 6)], [1, 1, -1, -1, 1, -1],
                  "Borromean rings L6a4, all pairwise linking numbers 0; "
                  "Thistlethwaite table PD code (spherogram), signs read off the diagram"),
}


def build():
    out = {}
    for name, (pd, signs, prov) in PD.items():
        out[name] = dg.from_pd(pd, signs, name, prov)
    # positive Hopf link: mirror of the negative table diagram L2a1
    neg = dg.from_pd([(2, 1, 3, 0), (0, 3, 1, 2)], [-1, -1])
    pos = dg.mirror(neg)
    out["hopf"] = dg.LinkDiagram(pos.crossings, pos.components, "hopf",
                                 "Hopf link with two positive crossings, linking number +1; "
                                 "mirror of the L2a1 PD code (spherogram)")
    u = dg.unlink(1)
    out["unknot"] = dg.LinkDiagram((), u.components, "unknot", "zero-crossing circle")
    u2 = dg.unlink(2)
    out["unlink2"] = dg.LinkDiagram((), u2.components, "unlink2", "two disjoint zero-crossing circles")
    return out


def main():
    target = catalog.PACKAGE_DATA / "diagrams"
    target.mkdir(parents=True, exist_ok=True)
    for name, D in build().items():
        (target / f"{name}.json").write_text(json.dumps(D.to_json(), indent=1) + "\n")
    catalog.write_biquandle_tables()
    manifest = catalog.write_manifest()
    print(f"wrote {len(manifest)} files")


if __name__ == "__main__":
    main()
