"""The shipped fixture corpus.

Small categories used throughout the test and check suites: One, Arrow,
Chain2, Span, WalkingIso, FS2 (skeleton of sets of size <= 2), G1 (the
one-object group Z/2), plus relative-category and adjunction fixtures built
on them.  Builders are cached; treat the returned objects as shared and
immutable.
"""

from functools import lru_cache
from itertools import product as iproduct

from .adjunction import verify_adjunction
from .core import Functor, NatTrans, validate_category
from .localization import RelCat


def poset_category(name, elements, leq):
    """The category of a finite preorder: one morphism a->b when leq(a, b)."""
    elements = list(elements)
    mors, dom, cod, identity = [], {}, {}, {}
    mid = {}
    for a in elements:
        for b in elements:
            if not leq(a, b):
                continue
            m = f"id_{a}" if a == b else f"le_{a}_{b}"
            mid[(a, b)] = m
            mors.append(m)
            dom[m], cod[m] = a, b
            if a == b:
                identity[a] = m
    compose = {}
    for (b, c), g in mid.items():
        for (a, b2), f in mid.items():
            if b2 == b:
                compose[(g, f)] = mid[(a, c)]
    return validate_category(name, elements, mors, dom, cod, identity, compose)


@lru_cache(maxsize=None)
def one():
    return validate_category("One", ["*"], ["id_*"], {"id_*": "*"},
                             {"id_*": "*"}, {"*": "id_*"},
                             {("id_*", "id_*"): "id_*"})


@lru_cache(maxsize=None)
def arrow():
    """The interval category [1]: objects 0, 1 and one arrow i: 0 -> 1."""
    return validate_category(
        "Arrow", ["0", "1"], ["id_0", "i", "id_1"],
        {"id_0": "0", "i": "0", "id_1": "1"},
        {"id_0": "0", "i": "1", "id_1": "1"},
        {"0": "id_0", "1": "id_1"},
        {("id_0", "id_0"): "id_0", ("i", "id_0"): "i",
         ("id_1", "i"): "i", ("id_1", "id_1"): "id_1"})


@lru_cache(maxsize=None)
def chain2():
    """The 3-chain poset 0 <= 1 <= 2."""
    return poset_category("Chain2", ["0", "1", "2"],
                          lambda a, b: int(a) <= int(b))


@lru_cache(maxsize=None)
def span():
    """The span shape: p: b -> a and q: b -> c."""
    mors = ["id_a", "id_b", "id_c", "p", "q"]
    dom = {"id_a": "a", "id_b": "b", "id_c": "c", "p": "b", "q": "b"}
    cod = {"id_a": "a", "id_b": "b", "id_c": "c", "p": "a", "q": "c"}
    identity = {"a": "id_a", "b": "id_b", "c": "id_c"}
    compose = {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
               ("id_c", "id_c"): "id_c", ("p", "id_b"): "p",
               ("q", "id_b"): "q", ("id_a", "p"): "p", ("id_c", "q"): "q"}
    return validate_category("Span", ["a", "b", "c"], mors, dom, cod,
                             identity, compose)


@lru_cache(maxsize=None)
def walking_iso():
    """The free-living isomorphism u: 0 ~ 1 with inverse v."""
    mors = ["id_0", "u", "v", "id_1"]
    dom = {"id_0": "0", "u": "0", "v": "1", "id_1": "1"}
    cod = {"id_0": "0", "u": "1", "v": "0", "id_1": "1"}
    identity = {"0": "id_0", "1": "id_1"}
    compose = {("id_0", "id_0"): "id_0", ("id_1", "id_1"): "id_1",
               ("u", "id_0"): "u", ("id_1", "u"): "u",
               ("v", "id_1"): "v", ("id_0", "v"): "v",
               ("v", "u"): "id_0", ("u", "v"): "id_1"}
    return validate_category("WalkingIso", ["0", "1"], mors, dom, cod,
                             identity, compose)


@lru_cache(maxsize=None)
def g1():
    """The one-object group Z/2."""
    return validate_category(
        "G1", ["x"], ["id_x", "s"], {"id_x": "x", "s": "x"},
        {"id_x": "x", "s": "x"}, {"x": "id_x"},
        {("id_x", "id_x"): "id_x", ("s", "id_x"): "s",
         ("id_x", "s"): "s", ("s", "s"): "id_x"})


_SETS = {"S0": 0, "S1": 1, "S2": 2}


def _fs2_mor_name(a, b, graph):
    if a == b and graph == tuple(range(_SETS[a])):
        return f"id_{a}"
    return f"s{_SETS[a]}{_SETS[b]}_" + "".join(map(str, graph))


@lru_cache(maxsize=None)
def fs2():
    """A skeleton of the category of sets of size <= 2.

    Morphism ids carry their graph: s21_00 is the surjection S2 -> S1,
    s22_10 the swap, s12_1 the second point inclusion, and so on.
    """
    objs = ["S0", "S1", "S2"]
    mors, dom, cod, identity = [], {}, {}, {}
    graph_of = {}
    for a in objs:
        for b in objs:
            for graph in iproduct(range(_SETS[b]), repeat=_SETS[a]):
                m = _fs2_mor_name(a, b, graph)
                mors.append(m)
                dom[m], cod[m] = a, b
                graph_of[m] = graph
                if a == b and graph == tuple(range(_SETS[a])):
                    identity[a] = m
    identity["S0"] = _fs2_mor_name("S0", "S0", ())
    compose = {}
    for g in mors:
        for f in mors:
            if dom[g] != cod[f]:
                continue
            gr = tuple(graph_of[g][v] for v in graph_of[f])
            compose[(g, f)] = _fs2_mor_name(dom[f], cod[g], gr)
    return validate_category("FS2", objs, mors, dom, cod, identity, compose)


@lru_cache(maxsize=None)
def fs2_pair():
    """Full subcategory of FS2 on the sets of size 1 and 2."""
    sub, _ = fs2().full_subcategory(["S1", "S2"], name="FS2Pair")
    return sub


# -- relative categories ------------------------------------------------------


@lru_cache(maxsize=None)
def rel_arrow():
    """Arrow with its only non-identity arrow inverted."""
    return RelCat(arrow(), ["i"], name="RelArrow")


@lru_cache(maxsize=None)
def rel_arrow_iso():
    return RelCat(arrow(), [], name="ArrowIso")


@lru_cache(maxsize=None)
def rel_chain2_iso():
    return RelCat(chain2(), [], name="Chain2Iso")


@lru_cache(maxsize=None)
def rel_chain2_all():
    return RelCat(chain2(), chain2().morphisms, name="Chain2All")


@lru_cache(maxsize=None)
def rel_g1_all():
    return RelCat(g1(), g1().morphisms, name="G1All")


@lru_cache(maxsize=None)
def rel_fs2_iso():
    return RelCat(fs2(), [], name="FS2Iso")


@lru_cache(maxsize=None)
def rel_fs2_pair_collapse():
    """FS2Pair with the collapse maps inverted.

    The localization is equivalent to the point; this is the fixture whose
    deformation replacement is functorial only in the homotopy category.
    """
    return RelCat(fs2_pair(), ["s21_00", "s22_00", "s22_11"],
                  name="FS2PairCollapse")


# -- functors and adjunctions -------------------------------------------------


@lru_cache(maxsize=None)
def galois_f():
    """Lower adjoint Arrow -> Chain2 of the Galois connection fixture."""
    return Functor(arrow(), chain2(), {"0": "0", "1": "2"},
                   {"id_0": "id_0", "i": "le_0_2", "id_1": "id_2"})


@lru_cache(maxsize=None)
def galois_g():
    """Upper adjoint Chain2 -> Arrow: 0, 1 |-> 0 and 2 |-> 1."""
    return Functor(chain2(), arrow(), {"0": "0", "1": "0", "2": "1"},
                   {"id_0": "id_0", "id_1": "id_0", "id_2": "id_1",
                    "le_0_1": "id_0", "le_0_2": "i", "le_1_2": "i"})


@lru_cache(maxsize=None)
def galois_u():
    """Right adjoint Arrow -> Chain2 of galois_g: 0 |-> 1, 1 |-> 2."""
    return Functor(arrow(), chain2(), {"0": "1", "1": "2"},
                   {"id_0": "id_1", "i": "le_1_2", "id_1": "id_2"})


@lru_cache(maxsize=None)
def galois_adjunction():
    """The verified adjunction galois_f -| galois_g."""
    f, g = galois_f(), galois_g()
    unit = NatTrans(Functor.identity(arrow()), f.then(g),
                    {"0": "id_0", "1": "id_1"})
    counit = NatTrans(g.then(f), Functor.identity(chain2()),
                      {"0": "id_0", "1": "le_0_1", "2": "id_2"})
    return verify_adjunction(f, g, unit, counit)


@lru_cache(maxsize=None)
def galois_adjunction_gu():
    """The verified adjunction galois_g -| galois_u."""
    g, u = galois_g(), galois_u()
    unit = NatTrans(Functor.identity(chain2()), g.then(u),
                    {"0": "le_0_1", "1": "id_1", "2": "id_2"})
    counit = NatTrans(u.then(g), Functor.identity(arrow()),
                      {"0": "id_0", "1": "id_1"})
    return verify_adjunction(g, u, unit, counit)


def all_categories():
    """Named corpus categories, in a stable order."""
    return {
        "One": one(), "Arrow": arrow(), "Chain2": chain2(), "Span": span(),
        "WalkingIso": walking_iso(), "FS2": fs2(), "FS2Pair": fs2_pair(),
        "G1": g1(),
    }


def all_relcats():
    return {
        "RelArrow": rel_arrow(), "ArrowIso": rel_arrow_iso(),
        "Chain2Iso": rel_chain2_iso(), "Chain2All": rel_chain2_all(),
        "G1All": rel_g1_all(), "FS2Iso": rel_fs2_iso(),
        "FS2PairCollapse": rel_fs2_pair_collapse(),
    }
