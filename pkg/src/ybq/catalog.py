"""Named biquandles and link diagrams.

Biquandles with a closed-form construction are built on demand; the
fixed-name ones are also shipped as JSON tables under ``data/biquandles``
and every load checks the file against the construction and against the
checksum manifest.  Diagrams live under ``data/diagrams``.

Set ``YBQ_CATALOG`` to a directory laid out the same way (``biquandles/``,
``diagrams/``) to add or override entries -- that is also how tables that
are not shipped (``BQ3_3``, ``BQ3_9`` and their inverses) are supplied.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path
from typing import Optional

from . import diagram as dg
from .biquandle import (FiniteBiquandle, alexander, conjugation_quandle, cyclic_group_table,
                        dihedral_quandle, flip, from_bijection, from_quandle, inverse_solution,
                        verify, wada)

PACKAGE_DATA = Path(__file__).parent / "data"
MANIFEST = "MANIFEST.json"
EXTERNAL = ("BQ3_3", "BQ3_3*", "BQ3_9", "BQ3_9*")


class CatalogError(LookupError):
    pass


class UnknownEntryError(CatalogError):
    pass


class ExternalDataRequired(CatalogError):
    pass


class IntegrityError(CatalogError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    kind: str          # "biquandle" or "diagram"
    name: str
    path: Optional[Path]
    provenance: str


# ---------------------------------------------------------------------------
# constructions

def _q3():
    # 0 acts on {1, 2} by the transposition, 1 and 2 act trivially
    return [[x if y else (0, 2, 1)[x] for y in range(3)] for x in range(3)]


def s4_four_cycles() -> FiniteBiquandle:
    """Conjugation quandle on the six 4-cycles of S4 (GAP element order)."""
    cycles = sorted(p for p in permutations(range(4))
                    if len({0, p[0], p[p[0]], p[p[p[0]]]}) == 4)
    return from_quandle(conjugation_quandle(cycles), "direct", "S4_4cycles")


def _bq3_5():
    s1 = ((0, 1, 2), (0, 1, 2), (1, 0, 2))
    s2 = ((0, 0, 1), (1, 1, 0), (2, 2, 2))
    return FiniteBiquandle(3, s1, s2, "BQ3_5")


_BUILDERS = {
    "trivial": lambda: FiniteBiquandle(1, ((0,),), ((0,),), "trivial"),
    "flip2": lambda: flip(2, "flip2"),
    "antiflip": lambda: from_bijection([1, 0], "antiflip"),
    "BQ3_1": lambda: flip(3, "BQ3_1"),
    "BQ3_2": lambda: FiniteBiquandle.from_function(
        3, lambda x, y: ((y + x * x * y) % 3, (x + y * y * x) % 3), "BQ3_2"),
    "BQ3_4": lambda: wada(cyclic_group_table(3), "BQ3_4"),
    "BQ3_5": _bq3_5,
    "BQ3_6": lambda: from_quandle(_q3(), "direct", "BQ3_6"),
    "BQ3_7": lambda: from_bijection([0, 2, 1], "BQ3_7"),
    "BQ3_8": lambda: from_quandle(dihedral_quandle(3), "direct", "BQ3_8"),
    "BQ3_10": lambda: from_bijection([1, 2, 0], "BQ3_10"),
    "S4_4cycles": s4_four_cycles,
}

PROVENANCE = {
    "trivial": "one-element solution",
    "flip2": "flip sigma(x,y)=(y,x) on two elements",
    "antiflip": "bijection solution for mu(x)=x+1 on Z2",
    "BQ3_1": "flip on three elements (trivial quandle)",
    "BQ3_2": "antiflip on {1,2} extended by a point 0: sigma(x,y)=(y+x^2 y, x+y^2 x) on Z3",
    "BQ3_4": "Wada solution of Z3: sigma(x,y)=(-y, x-y)",
    "BQ3_5": "size-3 biquandle of sigma-order 2 with all diagonal pairs fixed and "
             "s of order 2; fixed by exhaustive enumeration",
    "BQ3_6": "quandle Q3: -<|0 = (1 2), -<|1 = -<|2 = Id; sigma(x,y)=(y, -x-xy^2)",
    "BQ3_7": "bijection solution for mu(x)=-x: sigma(x,y)=(-y,-x)",
    "BQ3_8": "dihedral quandle D3: sigma(x,y)=(y, 2y-x)",
    "BQ3_10": "bijection solution for mu(x)=x+1: sigma(x,y)=(y+1, x-1)",
    "S4_4cycles": "conjugation quandle x<|y = y^-1 x y on the 4-cycles of S4",
}

SHIPPED_BIQUANDLES = tuple(_BUILDERS)

_PATTERNS = [
    (re.compile(r"^flip(\d+)$"), lambda m: flip(int(m[1]))),
    (re.compile(r"^wada\(Z(\d+)\)$"), lambda m: wada(cyclic_group_table(int(m[1])), m[0])),
    (re.compile(r"^alex\((\d+),\s*(-?\d+),\s*(-?\d+)\)$"),
     lambda m: alexander(int(m[1]), int(m[2]), int(m[3]))),
    (re.compile(r"^D_?(\d+)$"),
     lambda m: from_quandle(dihedral_quandle(int(m[1])), "direct", f"D{m[1]}")),
    (re.compile(r"^Q3$"), lambda m: from_quandle(_q3(), "direct", "Q3")),
]


def data_dirs() -> list[Path]:
    dirs = []
    override = os.environ.get("YBQ_CATALOG")
    if override:
        dirs.append(Path(override))
    dirs.append(PACKAGE_DATA)
    return dirs


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _manifest() -> dict:
    path = PACKAGE_DATA / MANIFEST
    if not path.exists():
        return {}
    return json.loads(path.read_text())


def check_integrity(path: Path) -> None:
    """Compare a shipped file against its recorded checksum."""
    try:
        rel = path.relative_to(PACKAGE_DATA).as_posix()
    except ValueError:
        return  # user-supplied data is not checksummed
    expected = _manifest().get(rel)
    if expected is None:
        raise IntegrityError(f"{rel} is not listed in the catalog manifest")
    if _sha256(path) != expected:
        raise IntegrityError(f"{rel} does not match its recorded checksum")


def _file_name(name: str) -> str:
    return name.replace("*", "_inv") + ".json"


def _find_file(kind: str, name: str) -> Optional[Path]:
    for d in data_dirs():
        path = d / kind / _file_name(name)
        if path.exists():
            return path
    return None


def _load_table(path: Path, name: str) -> FiniteBiquandle:
    check_integrity(path)
    data = json.loads(path.read_text())
    B = FiniteBiquandle.from_json(data)
    B = FiniteBiquandle(B.n, B.sigma1, B.sigma2, name)
    report = verify(B)
    if not report.is_biquandle:
        raise IntegrityError(f"catalog table {path} is not a biquandle: {report.summary()}")
    return B


def biquandle(name: str) -> FiniteBiquandle:
    """Look up a biquandle by name; a trailing ``*`` asks for the inverse solution."""
    name = name.strip()
    base, star = (name[:-1], True) if name.endswith("*") else (name, False)
    path = _find_file("biquandles", name)
    if path is not None and (path.parent.parent != PACKAGE_DATA or name in SHIPPED_BIQUANDLES):
        B = _load_table(path, name)
        if path.parent.parent == PACKAGE_DATA and B != _BUILDERS[name]():
            raise IntegrityError(f"shipped table for {name} disagrees with its construction")
        return B
    if star:
        path = _find_file("biquandles", base)
        if path is not None and path.parent.parent != PACKAGE_DATA:
            return inverse_solution(_load_table(path, base))
    if base in EXTERNAL:
        files = _file_name(name) + (f" or {_file_name(base)}" if star else "")
        raise ExternalDataRequired(
            f"no table for {name} is shipped; supply {files} under $YBQ_CATALOG/biquandles/")
    if base in _BUILDERS:
        B = _BUILDERS[base]()
    else:
        B = None
        for pattern, build in _PATTERNS:
            m = pattern.match(base)
            if m:
                B = build(m)
                break
        if B is None:
            raise UnknownEntryError(f"unknown biquandle {name!r}")
    if star:
        B = inverse_solution(B)
    return B


def biquandle_names() -> list[str]:
    names = []
    for base in ("flip2", "antiflip", "BQ3_1", "BQ3_2", "BQ3_3", "BQ3_4", "BQ3_5", "BQ3_6",
                 "BQ3_7", "BQ3_8", "BQ3_9", "BQ3_10"):
        names.append(base)
        if base.startswith("BQ3_"):
            names.append(base + "*")
    return names + ["S4_4cycles", "trivial"]


def available(name: str) -> bool:
    try:
        biquandle(name)
    except ExternalDataRequired:
        return False
    return True


def load_biquandle_file(path) -> FiniteBiquandle:
    """Read a biquandle JSON file (1-based tables), or a catalog name."""
    p = Path(path)
    if p.exists():
        data = json.loads(p.read_text())
        return FiniteBiquandle.from_json(data)
    return biquandle(str(path))


# ---------------------------------------------------------------------------
# diagrams

DIAGRAMS = ("unknot", "unlink2", "3_1", "3_1_r2", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3",
            "7_4", "hopf", "whitehead", "borromean")
KNOT_TABLE = ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3")
COMPONENTS = {"unknot": 1, "unlink2": 2, "3_1": 1, "3_1_r2": 1, "4_1": 1, "5_1": 1, "5_2": 1,
              "6_1": 1, "6_2": 1, "6_3": 1, "7_4": 1, "hopf": 2, "whitehead": 2, "borromean": 3}


def diagram(name: str) -> dg.LinkDiagram:
    """Look up a diagram by name; a trailing ``*`` gives the mirror image."""
    name = name.strip()
    if name.endswith("*"):
        return dg.mirror(diagram(name[:-1]))
    path = _find_file("diagrams", name)
    if path is None:
        raise UnknownEntryError(f"unknown diagram {name!r}")
    check_integrity(path)
    return dg.load(path)


def load_diagram_file(path) -> dg.LinkDiagram:
    p = Path(path)
    if p.exists():
        return dg.load(p)
    return diagram(str(path))


def entries() -> list[CatalogEntry]:
    out = []
    for name in SHIPPED_BIQUANDLES:
        out.append(CatalogEntry("biquandle", name, PACKAGE_DATA / "biquandles" / _file_name(name),
                                PROVENANCE[name]))
    for name in DIAGRAMS:
        path = PACKAGE_DATA / "diagrams" / _file_name(name)
        prov = json.loads(path.read_text()).get("provenance", "") if path.exists() else ""
        out.append(CatalogEntry("diagram", name, path, prov))
    return out


def write_biquandle_tables(directory: Path = PACKAGE_DATA) -> list[Path]:
    """Regenerate the shipped JSON tables from their constructions."""
    target = Path(directory) / "biquandles"
    target.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in SHIPPED_BIQUANDLES:
        data = _BUILDERS[name]().to_json()
        data["provenance"] = PROVENANCE[name]
        path = target / _file_name(name)
        path.write_text(json.dumps(data, indent=1) + "\n")
        paths.append(path)
    return paths


def write_manifest(directory: Path = PACKAGE_DATA) -> dict:
    directory = Path(directory)
    manifest = {}
    for path in sorted(directory.glob("*/*.json")):
        manifest[path.relative_to(directory).as_posix()] = _sha256(path)
    (directory / MANIFEST).write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    return manifest
