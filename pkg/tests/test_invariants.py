import itertools

import pytest
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from ybq import catalog
from ybq import diagram as dg
from ybq.biquandle import alexander, flip
from ybq.cocycles import ConcreteCocycle, FiniteGroup, brute_force_cocycles
from ybq.invariants import (ConjugacyContext, boltzmann_word, enumerate_colorings, invariant,
                            is_coloring)
from ybq.presentation import compute_unc, compute_unc_reduced


def brute_colorings(D, B):
    arcs = D.arcs()
    found = []
    for values in itertools.product(range(B.n), repeat=len(arcs)):
        col = dict(zip(arcs, values))
        if is_coloring(D, B, col):
            found.append(col)
    return found


def linear_count(D, m, a, b, c, d):
    """Colorings by sigma(x,y) = (a x + b y, c x + d y) over Z/m, m prime, via rank."""
    arcs = D.arcs()
    if not D.crossings:
        return m ** len(arcs)
    index = {arc: i for i, arc in enumerate(arcs)}
    rows = []
    for cr in D.crossings:
        x, y, z, t = cr.quadruple()
        for p, q, out in ((a, b, z), (c, d, t)):
            row = [0] * len(arcs)
            row[index[x]] += p
            row[index[y]] += q
            row[index[out]] -= 1
            rows.append([v % m for v in row])
    M = DomainMatrix([[GF(m)(v) for v in r] for r in rows], (len(rows), len(arcs)), GF(m))
    return m ** (len(arcs) - M.rank())


SMALL = ["unknot", "unlink2", "3_1", "4_1", "5_1", "5_2", "hopf"]
BIQ = ["BQ3_1", "BQ3_2", "BQ3_4", "BQ3_4*", "BQ3_5", "BQ3_6", "BQ3_6*", "BQ3_7", "BQ3_8",
       "BQ3_10", "antiflip"]


@pytest.mark.slow
@pytest.mark.parametrize("dname", SMALL)
def test_colorings_match_brute_force(dname):
    D = catalog.diagram(dname)
    if 3 ** len(D.arcs()) > 200000:
        pytest.skip("too many arcs for exhaustive search")
    for name in BIQ:
        B = catalog.biquandle(name)
        fast = enumerate_colorings(D, B)
        slow = brute_colorings(D, B)
        key = lambda col: tuple(sorted(col.items()))
        assert sorted(map(key, fast)) == sorted(map(key, slow)), (dname, name)


# (a, b, c, d) with sigma(x,y) = (a x + b y, c x + d y) mod 3
LINEAR = {"BQ3_4": (0, -1, 1, -1), "BQ3_8": (0, 1, -1, 2)}


@pytest.mark.parametrize("dname", catalog.DIAGRAMS)
@pytest.mark.parametrize("name", sorted(LINEAR))
def test_linear_coloring_counts(dname, name):
    B = catalog.biquandle(name)
    coeffs = LINEAR[name]
    for x in range(3):
        for y in range(3):
            assert B(x, y) == ((coeffs[0] * x + coeffs[1] * y) % 3, (coeffs[2] * x + coeffs[3] * y) % 3)
    D = catalog.diagram(dname)
    assert len(enumerate_colorings(D, B)) == linear_count(D, 3, *coeffs)


def test_wada_colorings_of_unlink_and_whitehead():
    B = catalog.biquandle("wada(Z3)")
    assert len(enumerate_colorings(catalog.diagram("unlink2"), B)) == 9
    assert len(enumerate_colorings(catalog.diagram("whitehead"), B)) == 3


def test_is_coloring_rejects_bad_assignment():
    D = catalog.diagram("3_1")
    B = catalog.biquandle("BQ3_8")
    colorings = enumerate_colorings(D, B)
    assert all(is_coloring(D, B, c) for c in colorings)
    bad = dict(next(c for c in colorings if len(set(c.values())) > 1))
    arc = D.arcs()[0]
    bad[arc] = (bad[arc] + 1) % 3
    assert not is_coloring(D, B, bad)


def test_trivial_presentation_gives_trivial_values():
    B = catalog.biquandle("BQ3_8*")
    P = compute_unc(B)
    inv = invariant(catalog.diagram("3_1"), B, P)
    assert inv.trivial_count() == inv.colorings
    assert inv.nontrivial() == {}


def test_boltzmann_word_of_unknot_is_empty():
    B = flip(2)
    P = compute_unc(B)
    U = catalog.diagram("unknot")
    for col in enumerate_colorings(U, B):
        assert boltzmann_word(U, col, P, 0) == ()


def _values(D, B, ctx):
    P = ctx.presentation
    return [tuple(ctx.representative(boltzmann_word(D, col, P, i)) for i in range(len(D.components)))
            for col in enumerate_colorings(D, B)]


@pytest.mark.parametrize("dname", ["3_1", "4_1", "5_2", "hopf", "whitehead"])
def test_cyclic_refines_abelian_and_hom(dname):
    """Equal conjugacy classes must give equal abelian images and equal cocycle values."""
    B = alexander(4, -1, 1)
    P = compute_unc_reduced(B, [(0, 1), (0, 2)])
    D = catalog.diagram(dname)
    cyc = _values(D, B, ConjugacyContext(P, "cyclic"))
    ab = _values(D, B, ConjugacyContext(P, "abelian"))
    G = FiniteGroup.cyclic(4)
    cocycles = [f for f in brute_force_cocycles(B, G, limit=200)
                if f(0, 1) == 0 and f(0, 2) == 0]
    homs = [_values(D, B, ConjugacyContext(P, "hom", f)) for f in cocycles[:5]]
    for other in [ab] + homs:
        mapping = {}
        for v, w in zip(cyc, other):
            assert mapping.setdefault(v, w) == w


def test_hom_mode_with_trivial_cocycle():
    B = catalog.biquandle("BQ3_4")
    P = compute_unc(B)
    G = FiniteGroup.cyclic(3)
    inv = invariant(catalog.diagram("3_1"), B, P, "hom", ConcreteCocycle.trivial(B, G))
    assert inv.colorings == 9
    assert inv.trivial_count() == 9


def test_modes_agree_on_counts():
    B = catalog.biquandle("S4_4cycles")
    P = compute_unc_reduced(B, [(0, 1), (0, 2), (0, 3), (0, 5), (1, 5)])
    D = catalog.diagram("3_1")
    a = invariant(D, B, P, "cyclic")
    b = invariant(D, B, P, "abelian")
    assert a.colorings == b.colorings == 30
    assert sorted(a.counts.values()) == sorted(b.counts.values()) == [6, 24]


def test_trefoil_and_mirror_under_s4():
    B = catalog.biquandle("S4_4cycles")
    P = compute_unc_reduced(B, [(0, 1), (0, 2), (0, 3), (0, 5), (1, 5)])
    D = catalog.diagram("3_1")
    ctx = ConjugacyContext(P, "cyclic")
    left = invariant(D, B, P, context=ctx)
    right = invariant(dg.mirror(D), B, P, context=ctx)
    fmt = lambda inv: {tuple(inv.format_value(v)): k for v, k in inv.items()}
    assert fmt(left) == {("1",): 6, ("f1^3",): 24}
    assert fmt(right) == {("1",): 6, ("f1",): 24}


def test_invalid_mode():
    with pytest.raises(ValueError):
        ConjugacyContext(compute_unc(flip(2)), "bogus")
    with pytest.raises(ValueError):
        ConjugacyContext(compute_unc(flip(2)), "hom")


def test_json_and_format():
    B = catalog.biquandle("BQ3_4")
    inv = invariant(catalog.diagram("hopf"), B, compute_unc(B))
    data = inv.to_json()
    assert data["colorings"] == inv.colorings
    assert sum(e["count"] for e in data["multiset"]) == inv.colorings
    assert inv.format().startswith(f"colorings: {inv.colorings}")
