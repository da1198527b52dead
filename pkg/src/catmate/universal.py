"""(Co)limits, (co)powers, comma categories and pointwise Kan extensions.

All universal objects are found by brute-force candidate enumeration and
certified by exhaustive factorization search; absence is a value, not an
error, so partially (co)complete categories are first-class.
"""

from itertools import product as iproduct

from .adjunction import Adjunction, verify_adjunction
from .core import (
    DEFAULT_BUDGET, FinCat, Functor, NatTrans, _category_of_diagrams,
    constant_diagram_functor, enumerate_functors, validate_category,
)
from .errors import MissingAdjunction, ShapeMismatch


class Cocone:
    """A cocone under a diagram: apex and one leg per diagram object."""

    def __init__(self, diagram, apex, legs, check=True):
        self.diagram = diagram
        self.apex = apex
        self.legs = dict(legs)
        if check:
            c = diagram.target
            for m in diagram.source.morphisms:
                a, b = diagram.source.dom[m], diagram.source.cod[m]
                if c.comp(self.legs[b], diagram.mor_map[m]) != self.legs[a]:
                    raise ShapeMismatch(f"cocone legs do not commute over {m}")

    def __repr__(self):
        return f"Cocone(apex={self.apex!r})"


class Cone:
    """A cone over a diagram: apex and one leg per diagram object."""

    def __init__(self, diagram, apex, legs, check=True):
        self.diagram = diagram
        self.apex = apex
        self.legs = dict(legs)
        if check:
            c = diagram.target
            for m in diagram.source.morphisms:
                a, b = diagram.source.dom[m], diagram.source.cod[m]
                if c.comp(diagram.mor_map[m], self.legs[a]) != self.legs[b]:
                    raise ShapeMismatch(f"cone legs do not commute over {m}")

    def __repr__(self):
        return f"Cone(apex={self.apex!r})"


def all_cocones(diagram):
    shape, c = diagram.source, diagram.target
    out = []
    for apex in c.objects:
        choices = [c.hom(diagram.obj_map[o], apex) for o in shape.objects]
        for legs in iproduct(*choices):
            table = dict(zip(shape.objects, legs))
            if all(c.comp(table[shape.cod[m]], diagram.mor_map[m]) == table[shape.dom[m]]
                   for m in shape.morphisms):
                out.append(Cocone(diagram, apex, table, check=False))
    return out


def cocone_factorizations(u, other):
    """All h: u.apex -> other.apex with h . leg = leg', the universality data."""
    c = u.diagram.target
    return [h for h in c.hom(u.apex, other.apex)
            if all(c.comp(h, u.legs[o]) == other.legs[o]
                   for o in u.diagram.source.objects)]


def colimit(diagram):
    """The universal cocone, certified by exhaustive factorization search;
    None when no universal cocone exists.  Deterministic pick: least apex id,
    then least leg ids."""
    cocones = all_cocones(diagram)
    universal = [u for u in cocones
                 if all(len(cocone_factorizations(u, c)) == 1 for c in cocones)]
    if not universal:
        return None
    shape = diagram.source
    universal.sort(key=lambda u: (u.apex, tuple(u.legs[o] for o in shape.objects)))
    return universal[0]


def limit(diagram):
    """Dual of colimit, computed in the opposite category."""
    co = colimit(diagram.op())
    if co is None:
        return None
    return Cone(diagram, co.apex, co.legs, check=False)


def copower(labels, c_obj, cat):
    """The coproduct of one copy of c_obj per label, with its coprojections.

    Returns (object, {label: coprojection}) or None; certified universal.
    """
    labels = tuple(labels)
    cocones = []
    for apex in cat.objects:
        for legs in iproduct(cat.hom(c_obj, apex), repeat=len(labels)):
            cocones.append((apex, dict(zip(labels, legs))))

    def mediators(u, other):
        return [h for h in cat.hom(u[0], other[0])
                if all(cat.comp(h, u[1][l]) == other[1][l] for l in labels)]

    universal = [u for u in cocones
                 if all(len(mediators(u, c)) == 1 for c in cocones)]
    if not universal:
        return None
    universal.sort(key=lambda u: (u[0], tuple(u[1][l] for l in labels)))
    return universal[0]


def power(labels, c_obj, cat):
    """The product of one copy of c_obj per label, with its projections."""
    got = copower(labels, c_obj, cat.op())
    return got


class CommaCategory:
    """F down G, with the two projection functors and the object registry."""

    def __init__(self, cat, left_proj, right_proj, obj_data, mor_data):
        self.cat = cat
        self.left = left_proj
        self.right = right_proj
        self.obj_data = obj_data
        self.mor_data = mor_data


def comma_category(f, g, budget=None):
    """The comma category f down g for f: A -> C, g: B -> C."""
    budget = budget or DEFAULT_BUDGET
    if not f.target.same_data(g.target):
        raise ShapeMismatch("comma: functors do not share a target")
    a, b, c = f.source, g.source, f.target
    objs, obj_data = [], {}
    for ao in a.objects:
        for bo in b.objects:
            for h in c.hom(f.obj_map[ao], g.obj_map[bo]):
                oid = f"({ao},{bo},{h})"
                objs.append(oid)
                obj_data[oid] = (ao, bo, h)
    budget.check_objects("comma category", len(objs))
    mors, dom, cod, mor_data, identity = [], {}, {}, {}, {}
    for o1 in objs:
        a1, b1, h1 = obj_data[o1]
        for o2 in objs:
            a2, b2, h2 = obj_data[o2]
            for u in a.hom(a1, a2):
                for v in b.hom(b1, b2):
                    if c.comp(g.mor_map[v], h1) != c.comp(h2, f.mor_map[u]):
                        continue
                    mid = f"[{u},{v}|{o1}>{o2}]"
                    mors.append(mid)
                    dom[mid], cod[mid] = o1, o2
                    mor_data[mid] = (u, v)
                    if o1 == o2 and u == a.id(a1) and v == b.id(b1):
                        identity[o1] = mid
    budget.check_morphisms("comma category", len(mors))
    compose = {}
    for m2 in mors:
        for m1 in mors:
            if dom[m2] != cod[m1]:
                continue
            u2, v2 = mor_data[m2]
            u1, v1 = mor_data[m1]
            compose[(m2, m1)] = f"[{a.comp(u2, u1)},{b.comp(v2, v1)}|{dom[m1]}>{cod[m2]}]"
    cat = validate_category(f"({f.source.name}|{g.source.name})", objs, mors,
                            dom, cod, identity, compose)
    left = Functor(cat, a, {o: obj_data[o][0] for o in objs},
                   {m: mor_data[m][0] for m in mors}, check=False)
    right = Functor(cat, b, {o: obj_data[o][1] for o in objs},
                    {m: mor_data[m][1] for m in mors}, check=False)
    return CommaCategory(cat, left, right, obj_data, mor_data)


def arrow_category_size(c):
    return len(c.morphisms)


# -- pointwise Kan extensions ---------------------------------------------------


def kan_extension(side, along, x, budget=None):
    """Pointwise Kan extension of x: I -> C along along: I -> J.

    Returns (functor J -> C, universal cell) or None when some pointwise
    (co)limit is missing.  side "left": cell is the unit x => L . along;
    side "right": cell is the counit R . along => x.
    """
    if side == "right":
        got = kan_extension("left", along.op(), x.op(), budget)
        if got is None:
            return None
        ran_op, unit_op = got
        ran = Functor(along.target, x.target, ran_op.obj_map, ran_op.mor_map,
                      check=False)
        cell = NatTrans(along.then(ran), x,
                        {o: unit_op.components[o] for o in x.source.objects},
                        check=False)
        return ran, cell
    if side != "left":
        raise ShapeMismatch(f"unknown side {side!r}")
    i_cat, j_cat, c = along.source, along.target, x.target
    apexes, legs_by_j = {}, {}
    commas = {}
    for j in j_cat.objects:
        const_j = Functor(_one_point(), j_cat, {"*": j},
                          {"id_*": j_cat.id(j)}, check=False)
        comma = comma_category(along, const_j, budget)
        commas[j] = comma
        diag = comma.left.then(x)
        co = colimit(diag)
        if co is None:
            return None
        apexes[j] = co.apex
        legs_by_j[j] = {o: co.legs[o] for o in comma.cat.objects}
    mor_map = {}
    for n in j_cat.morphisms:
        j1, j2 = j_cat.dom[n], j_cat.cod[n]
        cands = [h for h in c.hom(apexes[j1], apexes[j2])
                 if _kan_mediates(c, commas[j1], legs_by_j[j1], legs_by_j[j2],
                                  j_cat, n, h, x)]
        if len(cands) != 1:
            return None
        mor_map[n] = cands[0]
    lan = Functor(j_cat, c, apexes, mor_map)
    unit_comps = {}
    for i in i_cat.objects:
        j = along.obj_map[i]
        key = f"({i},*,{j_cat.id(j)})"
        unit_comps[i] = legs_by_j[j][key]
    unit = NatTrans(x, along.then(lan), unit_comps)
    return lan, unit


def _kan_mediates(c, comma, legs1, legs2, j_cat, n, h, x):
    for o, (i, _star, g) in comma.obj_data.items():
        target_key = f"({i},*,{j_cat.comp(n, g)})"
        if c.comp(h, legs1[o]) != legs2[target_key]:
            return False
    return True


def _one_point():
    return validate_category("pt", ["*"], ["id_*"], {"id_*": "*"},
                             {"id_*": "*"}, {"*": "id_*"},
                             {("id_*", "id_*"): "id_*"})


def verify_kan_cell(side, along, x, ext, cell):
    """Check the Kan universal property by full enumeration of candidates.

    For side "left": for every L: J -> C and every t: x => L . along there is
    exactly one tbar: ext => L with (tbar along) . cell = t.
    """
    from .core import enumerate_nats
    j_cat, c = along.target, x.target
    if side == "right":
        return verify_kan_cell("left", along.op(), x.op(), ext.op(),
                               NatTrans(cell.target.op(), cell.source.op(),
                                        cell.components, check=False))
    for cand in enumerate_functors(j_cat, c):
        downstairs = enumerate_nats(x, along.then(cand))
        upstairs = enumerate_nats(ext, cand)
        images = {}
        for tbar in upstairs:
            whisk = {o: tbar.components[along.obj_map[o]] for o in x.source.objects}
            t = {o: c.comp(whisk[o], cell.components[o]) for o in x.source.objects}
            key = tuple(sorted(t.items()))
            if key in images:
                return False
            images[key] = tbar
        for t in downstairs:
            if tuple(sorted(t.components.items())) not in images:
                return False
    return True


# -- evaluation adjoints ---------------------------------------------------------


class EvaluationAdjoints:
    """The chain J_! -| ev_J -| J_*, each side present when its (co)powers are."""

    def __init__(self, fc, j, ev, left, right, left_ff, right_ff):
        self.fc = fc
        self.j = j
        self.ev = ev
        self.left = left
        self.right = right
        self.left_fully_faithful = left_ff
        self.right_fully_faithful = right_ff


def evaluation_adjoints(base, j_cat, j, fc=None, budget=None):
    """Both adjoints of evaluation at j, with fully-faithful flags.

    J_! c has value hom(j, j') . c at j' (a copower); J_* c has value
    c ^ hom(j', j) (a power).  A side is absent when some (co)power is.
    """
    from .core import functor_category
    budget = budget or DEFAULT_BUDGET
    if fc is None:
        fc = functor_category(j_cat, base, budget=budget)
    from .core import evaluation_functor
    ev = evaluation_functor(fc, j)
    left = _shriek_adjunction(base, j_cat, j, fc, ev)
    right = _star_adjunction(base, j_cat, j, fc, ev)
    left_ff = left.left_fully_faithful() if left else None
    right_ff = right.right_fully_faithful() if right else None
    if [m for m in j_cat.hom(j, j)] == [j_cat.id(j)]:
        assert left is None or left_ff
        assert right is None or right_ff
    return EvaluationAdjoints(fc, j, ev, left, right, left_ff, right_ff)


def _unique_mediator(cat, src, tgt, conditions):
    cands = [h for h in cat.hom(src, tgt)
             if all(cat.comp(h, pre) == want for pre, want in conditions)]
    assert len(cands) == 1, "universal property violated"
    return cands[0]


def _shriek_adjunction(base, j_cat, j, fc, ev):
    copowers = {}
    for c in base.objects:
        for j2 in j_cat.objects:
            got = copower(j_cat.hom(j, j2), c, base)
            if got is None:
                return None
            copowers[(c, j2)] = got
    obj_map = {}
    diagrams = {}
    for c in base.objects:
        vals = {j2: copowers[(c, j2)][0] for j2 in j_cat.objects}
        mors = {}
        for n in j_cat.morphisms:
            j1, j2 = j_cat.dom[n], j_cat.cod[n]
            apex1, copr1 = copowers[(c, j1)]
            apex2, copr2 = copowers[(c, j2)]
            mors[n] = _unique_mediator(
                base, apex1, apex2,
                [(copr1[u], copr2[j_cat.comp(n, u)]) for u in j_cat.hom(j, j1)])
        diagrams[c] = Functor(j_cat, base, vals, mors)
        obj_map[c] = fc.obj_id(diagrams[c])
    mor_map = {}
    for m in base.morphisms:
        c1, c2 = base.dom[m], base.cod[m]
        comps = {}
        for j2 in j_cat.objects:
            apex1, copr1 = copowers[(c1, j2)]
            apex2, copr2 = copowers[(c2, j2)]
            comps[j2] = _unique_mediator(
                base, apex1, apex2,
                [(copr1[u], base.comp(copr2[u], m)) for u in j_cat.hom(j, j2)])
        mor_map[m] = fc.mor_id(NatTrans(diagrams[c1], diagrams[c2], comps,
                                        check=False))
    shriek = Functor(base, fc.cat, obj_map, mor_map)
    unit = NatTrans(Functor.identity(base), shriek.then(ev),
                    {c: copowers[(c, j)][1][j_cat.id(j)] for c in base.objects})
    counit_comps = {}
    for d in fc.cat.objects:
        x = fc.functors[d]
        comps = {}
        for j2 in j_cat.objects:
            apex, copr = copowers[(x.obj_map[j], j2)]
            comps[j2] = _unique_mediator(
                base, apex, x.obj_map[j2],
                [(copr[u], x.mor_map[u]) for u in j_cat.hom(j, j2)])
        counit_comps[d] = fc.mor_id(NatTrans(diagrams[x.obj_map[j]], x, comps,
                                             check=False))
    counit = NatTrans(ev.then(shriek), Functor.identity(fc.cat), counit_comps)
    return verify_adjunction(shriek, ev, unit, counit)


def _star_adjunction(base, j_cat, j, fc, ev):
    powers = {}
    for c in base.objects:
        for j2 in j_cat.objects:
            got = power(j_cat.hom(j2, j), c, base)
            if got is None:
                return None
            powers[(c, j2)] = got
    obj_map, diagrams = {}, {}
    for c in base.objects:
        vals = {j2: powers[(c, j2)][0] for j2 in j_cat.objects}
        mors = {}
        for n in j_cat.morphisms:
            j1, j2 = j_cat.dom[n], j_cat.cod[n]
            apex1, proj1 = powers[(c, j1)]
            apex2, proj2 = powers[(c, j2)]
            op = base.op()
            mors[n] = _unique_mediator(
                op, apex2, apex1,
                [(proj2[u], proj1[j_cat.comp(u, n)]) for u in j_cat.hom(j2, j)])
        diagrams[c] = Functor(j_cat, base, vals, mors)
        obj_map[c] = fc.obj_id(diagrams[c])
    mor_map = {}
    for m in base.morphisms:
        c1, c2 = base.dom[m], base.cod[m]
        comps = {}
        op = base.op()
        for j2 in j_cat.objects:
            apex1, proj1 = powers[(c1, j2)]
            apex2, proj2 = powers[(c2, j2)]
            comps[j2] = _unique_mediator(
                op, apex2, apex1,
                [(proj2[u], op.comp(proj1[u], m)) for u in j_cat.hom(j2, j)])
        mor_map[m] = fc.mor_id(NatTrans(diagrams[c1], diagrams[c2], comps,
                                        check=False))
    star = Functor(base, fc.cat, obj_map, mor_map)
    counit = NatTrans(star.then(ev), Functor.identity(base),
                      {c: powers[(c, j)][1][j_cat.id(j)] for c in base.objects})
    unit_comps = {}
    op = base.op()
    for d in fc.cat.objects:
        x = fc.functors[d]
        comps = {}
        for j2 in j_cat.objects:
            apex, proj = powers[(x.obj_map[j], j2)]
            comps[j2] = _unique_mediator(
                op, apex, x.obj_map[j2],
                [(proj[u], x.mor_map[u]) for u in j_cat.hom(j2, j)])
        unit_comps[d] = fc.mor_id(NatTrans(x, diagrams[x.obj_map[j]], comps,
                                           check=False))
    unit = NatTrans(Functor.identity(fc.cat), ev.then(star), unit_comps)
    return verify_adjunction(ev, star, unit, counit)


# -- strict colimit adjunctions ------------------------------------------------


class ColimAdjunction:
    """colim -| Delta on the colimit-admitting part of a diagram category.

    `complete` records whether every diagram was colimit-admitting, in which
    case `fc` is the whole functor category base^shape.
    """

    def __init__(self, shape, base, fc, colim, delta, adjunction, cocones,
                 complete):
        self.shape = shape
        self.base = base
        self.fc = fc
        self.colim = colim
        self.delta = delta
        self.adjunction = adjunction
        self.cocones = cocones
        self.complete = complete


def colimit_adjunction(base, shape, budget=None):
    """Build colim -| Delta, truncating to colimit-admitting diagrams.

    Raises MissingAdjunction when even constant diagrams lack colimits
    (then Delta does not factor through the truncation).
    """
    budget = budget or DEFAULT_BUDGET
    all_diagrams = enumerate_functors(shape, base, budget=budget)
    kept, cocones_list = [], []
    for d in all_diagrams:
        co = colimit(d)
        if co is not None:
            kept.append(d)
            cocones_list.append(co)
    complete = len(kept) == len(all_diagrams)
    kept_sigs = {d.signature() for d in kept}
    for o in base.objects:
        if Functor.constant(shape, base, o).signature() not in kept_sigs:
            raise MissingAdjunction(
                f"constant diagram at {o} has no colimit over {shape.name}")
    name = f"{base.name}^{shape.name}" + ("" if complete else "!colim")
    fc = _category_of_diagrams(shape, base, kept, budget, name)
    cocones = {fc.obj_id(d): co for d, co in zip(kept, cocones_list)}
    colim_obj = {o: cocones[o].apex for o in fc.cat.objects}
    colim_mor = {}
    for m in fc.cat.morphisms:
        t = fc.nats[m]
        u = cocones[fc.cat.dom[m]]
        v = cocones[fc.cat.cod[m]]
        colim_mor[m] = _unique_mediator(
            base, u.apex, v.apex,
            [(u.legs[o], base.comp(v.legs[o], t.components[o]))
             for o in shape.objects])
    colim = Functor(fc.cat, base, colim_obj, colim_mor)
    delta = constant_diagram_functor(fc)
    unit_comps = {}
    for d in fc.cat.objects:
        u = cocones[d]
        unit_comps[d] = fc.mor_id(NatTrans(
            fc.functors[d], fc.functors[delta.obj_map[u.apex]],
            dict(u.legs), check=False))
    unit = NatTrans(Functor.identity(fc.cat), colim.then(delta), unit_comps)
    counit_comps = {}
    for o in base.objects:
        u = cocones[delta.obj_map[o]]
        counit_comps[o] = _unique_mediator(
            base, u.apex, o, [(u.legs[s], base.id(o)) for s in shape.objects])
    counit = NatTrans(delta.then(colim), Functor.identity(base), counit_comps)
    adj = verify_adjunction(colim, delta, unit, counit)
    return ColimAdjunction(shape, base, fc, colim, delta, adj, cocones, complete)
