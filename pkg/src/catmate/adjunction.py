"""Adjunctions with certified triangle identities, and the mate calculus.

A mating square has two adjunction rows (top F -| G between C and D, bottom
F' -| G' between C' and D'), two leg functors X: C -> C', Y: D -> D' and a
2-cell in one of the two positions:

    sigma: F'.X => Y.F        tau: X.G => G'.Y

The mating bijection exchanges the two positions; conjugates are the case
X = Y = id.
"""

from .core import Functor, NatTrans, ShapeMismatch, vertical, whisker_left, whisker_right
from .errors import NotMates, TriangleFailure


class Adjunction:
    """F -| G with unit and counit; triangle identities hold componentwise."""

    def __init__(self, left, right, unit, counit):
        self.left = left
        self.right = right
        self.unit = unit
        self.counit = counit

    @property
    def source(self):
        return self.left.source

    @property
    def target(self):
        return self.left.target

    def hom_bijection(self, c, d):
        """The tuning bijection D(Fc, d) -> C(c, Gd) as a dict, g |-> Gg . eta_c."""
        cc, dd = self.source, self.target
        table = {}
        for g in dd.hom(self.left.obj_map[c], d):
            table[g] = cc.comp(self.right.mor_map[g], self.unit.at(c))
        return table

    def hom_bijection_inverse(self, c, d):
        """f |-> eps_d . Ff for f in C(c, Gd)."""
        cc, dd = self.source, self.target
        return {f: dd.comp(self.counit.at(d), self.left.mor_map[f])
                for f in cc.hom(c, self.right.obj_map[d])}

    def left_fully_faithful(self):
        return self.unit.is_iso()

    def right_fully_faithful(self):
        return self.counit.is_iso()

    def __repr__(self):
        return f"Adjunction({self.left!r} -| {self.right!r})"


def verify_adjunction(f, g, unit, counit):
    """Certify the quadruple (F, G, eta, eps) as an adjunction.

    Checks shapes, both triangle identities on every object, and that the
    tabulated hom-set bijections really are mutually inverse.
    """
    c, d = f.source, f.target
    if not (g.source.same_data(d) and g.target.same_data(c)):
        raise ShapeMismatch("adjunction: right adjoint has wrong endpoints")
    if unit.source != Functor.identity(c) or unit.target != f.then(g):
        raise ShapeMismatch("adjunction: unit has wrong functors")
    if counit.source != g.then(f) or counit.target != Functor.identity(d):
        raise ShapeMismatch("adjunction: counit has wrong functors")
    for o in c.objects:
        lhs = d.comp(counit.at(f.obj_map[o]), f.mor_map[unit.at(o)])
        if lhs != d.id(f.obj_map[o]):
            raise TriangleFailure("eps_F . F eta", o)
    for o in d.objects:
        lhs = c.comp(g.mor_map[counit.at(o)], unit.at(g.obj_map[o]))
        if lhs != c.id(g.obj_map[o]):
            raise TriangleFailure("G eps . eta_G", o)
    adj = Adjunction(f, g, unit, counit)
    for co in c.objects:
        for do in d.objects:
            fwd = adj.hom_bijection(co, do)
            bwd = adj.hom_bijection_inverse(co, do)
            if sorted(fwd.values()) != sorted(bwd.keys()):
                raise TriangleFailure("hom bijection", (co, do))
            for gmor, fmor in fwd.items():
                if bwd[fmor] != gmor:
                    raise TriangleFailure("hom bijection roundtrip", (co, do))
    return adj


def identity_adjunction(c):
    i = Functor.identity(c)
    return Adjunction(i, i, NatTrans.identity(i), NatTrans.identity(i))


def compose_adjunctions(outer, inner):
    """(F2 -| G2) after (F1 -| G1): F2 F1 -| G1 G2."""
    if not inner.target.same_data(outer.source):
        raise ShapeMismatch("adjunction composition: middle categories differ")
    left = inner.left.then(outer.left)
    right = outer.right.then(inner.right)
    unit = vertical(whisker_left(inner.right,
                                 whisker_right(outer.unit, inner.left)),
                    inner.unit)
    counit = vertical(outer.counit,
                      whisker_right(whisker_left(outer.left, inner.counit),
                                    outer.right))
    return Adjunction(left, right, unit, counit)


class MateSquare:
    """Two adjunction rows, two legs, and a cell in sigma or tau position."""

    def __init__(self, top, bottom, x, y, sigma=None, tau=None):
        self.top = top
        self.bottom = bottom
        self.x = x
        self.y = y
        if not (x.source.same_data(top.source) and x.target.same_data(bottom.source)):
            raise ShapeMismatch("mate square: left leg has wrong endpoints")
        if not (y.source.same_data(top.target) and y.target.same_data(bottom.target)):
            raise ShapeMismatch("mate square: right leg has wrong endpoints")
        if sigma is not None:
            if sigma.source != x.then(bottom.left) or sigma.target != top.left.then(y):
                raise ShapeMismatch("mate square: sigma has wrong functors")
        if tau is not None:
            if tau.source != top.right.then(x) or tau.target != y.then(bottom.right):
                raise ShapeMismatch("mate square: tau has wrong functors")
        self.sigma = sigma
        self.tau = tau

    def with_cells(self, sigma=None, tau=None):
        return MateSquare(self.top, self.bottom, self.x, self.y,
                          sigma if sigma is not None else self.sigma,
                          tau if tau is not None else self.tau)


def mate_of_sigma(square):
    """sigma |-> G'Y eps . G' sigma_G . eta'_{XG}."""
    s = square
    if s.sigma is None:
        raise ShapeMismatch("square carries no sigma cell")
    cprime = s.bottom.source
    comps = {}
    for d in s.top.target.objects:
        gd = s.top.right.obj_map[d]
        step1 = s.bottom.unit.at(s.x.obj_map[gd])
        step2 = s.bottom.right.mor_map[s.sigma.at(gd)]
        step3 = s.bottom.right.mor_map[s.y.mor_map[s.top.counit.at(d)]]
        comps[d] = cprime.comp(step3, cprime.comp(step2, step1))
    return NatTrans(s.top.right.then(s.x), s.y.then(s.bottom.right), comps)


def mate_of_tau(square):
    """tau |-> eps'_{YF} . F' tau_F . F' X eta."""
    s = square
    if s.tau is None:
        raise ShapeMismatch("square carries no tau cell")
    dprime = s.bottom.target
    comps = {}
    for c in s.top.source.objects:
        fc = s.top.left.obj_map[c]
        step1 = s.bottom.left.mor_map[s.x.mor_map[s.top.unit.at(c)]]
        step2 = s.bottom.left.mor_map[s.tau.at(fc)]
        step3 = s.bottom.counit.at(s.y.obj_map[fc])
        comps[c] = dprime.comp(step3, dprime.comp(step2, step1))
    return NatTrans(s.x.then(s.bottom.left), s.top.left.then(s.y), comps)


def mate(square):
    """Fill the missing cell of the square with the mate of the present one."""
    if square.sigma is not None and square.tau is None:
        return square.with_cells(tau=mate_of_sigma(square))
    if square.tau is not None and square.sigma is None:
        return square.with_cells(sigma=mate_of_tau(square))
    raise ShapeMismatch("square must carry exactly one cell")


def sigma_sharp(square):
    """G' sigma . eta'_X, the adjunct of sigma along the bottom adjunction."""
    s = square
    cprime = s.bottom.source
    comps = {}
    for c in s.top.source.objects:
        xc = s.x.obj_map[c]
        comps[c] = cprime.comp(s.bottom.right.mor_map[s.sigma.at(c)],
                               s.bottom.unit.at(xc))
    return NatTrans(s.x, s.top.left.then(s.y).then(s.bottom.right), comps,
                    check=False)


def tau_via_unit(square):
    """tau_F . X eta, the same adjunct computed through the top adjunction."""
    s = square
    cprime = s.bottom.source
    comps = {}
    for c in s.top.source.objects:
        comps[c] = cprime.comp(s.tau.at(s.top.left.obj_map[c]),
                               s.x.mor_map[s.top.unit.at(c)])
    return NatTrans(s.x, s.top.left.then(s.y).then(s.bottom.right), comps,
                    check=False)


class MatePairReport:
    def __init__(self, mates, witness=None):
        self.mates = mates
        self.witness = witness

    def __bool__(self):
        return self.mates


def check_mate_pair(square):
    """Decide whether (sigma, tau) are mates, by the adjunct equation and by
    the hom-set rectangle over all object pairs; the two must agree."""
    s = square
    if s.sigma is None or s.tau is None:
        raise ShapeMismatch("both cells are required")
    by_unit = True
    witness = None
    sharp = sigma_sharp(s)
    via = tau_via_unit(s)
    for c in s.top.source.objects:
        if sharp.at(c) != via.at(c):
            by_unit = False
            witness = c
            break
    by_homs = True
    hom_witness = None
    cc, dd = s.top.source, s.top.target
    cp, dp = s.bottom.source, s.bottom.target
    for c in cc.objects:
        for d in dd.objects:
            tuning_top = s.top.hom_bijection(c, d)
            for g, f in tuning_top.items():
                left_path = cp.comp(s.tau.at(d), s.x.mor_map[f])
                right_path = dp.comp(s.y.mor_map[g], s.sigma.at(c))
                tuned = cp.comp(s.bottom.right.mor_map[right_path],
                                s.bottom.unit.at(s.x.obj_map[c]))
                if left_path != tuned:
                    by_homs = False
                    hom_witness = (c, d, g)
                    break
            if not by_homs:
                break
        if not by_homs:
            break
    assert by_unit == by_homs, (witness, hom_witness)
    return MatePairReport(by_unit, witness or hom_witness)


def paste(kind, s1, s2):
    """Paste two squares; the mate of the pasted cell is the pasted mates."""
    if kind == "vertical":
        if not _adjunction_eq(s1.bottom, s2.top):
            raise ShapeMismatch("vertical pasting: middle rows differ")
        sigma = tau = None
        if s1.sigma is not None and s2.sigma is not None:
            sigma = vertical(whisker_left(s2.y, s1.sigma),
                             whisker_right(s2.sigma, s1.x))
        if s1.tau is not None and s2.tau is not None:
            tau = vertical(whisker_right(s2.tau, s1.y),
                           whisker_left(s2.x, s1.tau))
        return MateSquare(s1.top, s2.bottom, s1.x.then(s2.x),
                          s1.y.then(s2.y), sigma, tau)
    if kind == "horizontal":
        if s1.y != s2.x:
            raise ShapeMismatch("horizontal pasting: shared leg differs")
        top = compose_adjunctions(s2.top, s1.top)
        bottom = compose_adjunctions(s2.bottom, s1.bottom)
        sigma = tau = None
        if s1.sigma is not None and s2.sigma is not None:
            sigma = vertical(whisker_right(s2.sigma, s1.top.left),
                             whisker_left(s2.bottom.left, s1.sigma))
        if s1.tau is not None and s2.tau is not None:
            tau = vertical(whisker_left(s1.bottom.right, s2.tau),
                           whisker_right(s1.tau, s2.top.right))
        return MateSquare(top, bottom, s1.x, s2.y, sigma, tau)
    raise ShapeMismatch(f"unknown pasting kind {kind!r}")


def _adjunction_eq(a, b):
    return (a.left == b.left and a.right == b.right
            and a.unit == b.unit and a.counit == b.counit)


def identity_square(adj):
    """The square with identity legs and identity cells on one adjunction."""
    return MateSquare(adj, adj, Functor.identity(adj.source),
                      Functor.identity(adj.target),
                      NatTrans.identity(adj.left), NatTrans.identity(adj.right))


def conjugate_iso_check(square):
    """For X = Y = id and mated cells: sigma is iso iff tau is (report both)."""
    if not (square.x.is_identity_like() and square.y.is_identity_like()):
        raise ShapeMismatch("conjugates need identity legs")
    report = check_mate_pair(square)
    if not report.mates:
        raise NotMates(report.witness)
    flags = (square.sigma.is_iso(), square.tau.is_iso())
    assert flags[0] == flags[1], "conjugate isomorphism invariant broken"
    return flags


def find_left_adjoint(g, budget=None):
    """Search a left adjoint of g: D -> C via initial objects of the comma
    categories c down g; None when some comma category has no initial object.
    """
    dd, cc = g.source, g.target
    obj_choice, unit_comp = {}, {}
    for c in cc.objects:
        objs = [(d, f) for d in dd.objects for f in cc.hom(c, g.obj_map[d])]

        def maps(o1, o2):
            (d1, f1), (d2, f2) = o1, o2
            return [u for u in dd.hom(d1, d2)
                    if cc.comp(g.mor_map[u], f1) == f2]

        initial = None
        for cand in objs:
            if all(len(maps(cand, other)) == 1 for other in objs):
                initial = cand
                break
        if initial is None:
            return None
        obj_choice[c], unit_comp[c] = initial
    f_obj = obj_choice
    f_mor = {}
    for m in cc.morphisms:
        a, b = cc.dom[m], cc.cod[m]
        target_f = cc.comp(unit_comp[b], m)
        us = [u for u in dd.hom(f_obj[a], f_obj[b])
              if cc.comp(g.mor_map[u], unit_comp[a]) == target_f]
        assert len(us) == 1, f"initiality broken at {m}"
        f_mor[m] = us[0]
    f = Functor(cc, dd, f_obj, f_mor)
    unit = NatTrans(Functor.identity(cc), f.then(g), unit_comp)
    eps_comp = {}
    for d in dd.objects:
        gd = g.obj_map[d]
        us = [u for u in dd.hom(f_obj[gd], d)
              if cc.comp(g.mor_map[u], unit_comp[gd]) == cc.id(gd)]
        assert len(us) == 1, f"initiality broken at counit {d}"
        eps_comp[d] = us[0]
    counit = NatTrans(g.then(f), Functor.identity(dd), eps_comp)
    return verify_adjunction(f, g, unit, counit)
