"""Deformation retractions, derived functors and derived adjunctions.

A deformation retraction (C0, Q, q) deforms a functor into a derived one:
LF = Fbar . Qtilde with counit components F q_C.  Certificates carry the
universal cell and are checked against the Kan property by full enumeration;
absoluteness is certified against a finite probe family and a "partial"
status always names the probes that were used.
"""

from .adjunction import Adjunction, MateSquare, check_mate_pair, verify_adjunction
from .core import (
    DEFAULT_BUDGET, Functor, NatTrans, enumerate_functors, enumerate_nats,
    whisker_left,
)
from .errors import (
    CompositionHypothesisFailed, HoQNotFunctorial, NoLeftAdjoint, NoSolution,
    PreconditionFailure, QNotFunctorial, QNotWeq, SizeBudgetExceeded,
    SquareFailure,
)
from .localization import (
    RelCat, base_mor, is_homotopical, is_inv, localize, pointwise_relcat,
)
from .adjunction import find_left_adjoint


class DeformationRetraction:
    """A validated left (or right) deformation retraction of a relative category."""

    def __init__(self, rc, side, sub_objects, q_obj, q_mor, q,
                 sub, incl, rc0, loc0):
        self.rc = rc
        self.side = side
        self.sub_objects = tuple(sub_objects)
        self.q_obj = dict(q_obj)
        self.q_mor = dict(q_mor)
        self.q = dict(q)
        self.sub = sub
        self.incl = incl
        self.rc0 = rc0
        self.loc0 = loc0

    def q_is_functorial(self):
        cat = self.rc.cat
        for o in cat.objects:
            if self.q_mor[cat.id(o)] != cat.id(self.q_obj[o]):
                return False, cat.id(o)
        for (g, f), h in cat.compose.items():
            if self.q_mor[h] != cat.comp(self.q_mor[g], self.q_mor[f]):
                return False, (g, f)
        return True, None

    def h0q_mor(self, m):
        """H0(Qm), a morphism of Ho C0."""
        return self.loc0.h.mor_map[self.q_mor[m]]


def validate_retraction(rc, sub_objects, q_obj, q_mor, q, side="left",
                        bound=None):
    """Check all the retraction laws exhaustively.

    side "left": q_C: QC -> C; side "right": q_C: C -> QC.  Raises QNotWeq,
    SquareFailure or HoQNotFunctorial with a witness.
    """
    cat = rc.cat
    subset = set(sub_objects)
    sub, incl = cat.full_subcategory(sub_objects, name=f"{rc.name}_sub")
    rc0 = RelCat(sub, [w for w in rc.weq if w in set(sub.morphisms)],
                 name=f"{rc.name}_sub")
    for o in cat.objects:
        if q_obj.get(o) not in subset:
            raise SquareFailure(f"Q({o}) is not in the subcategory")
    for m in cat.morphisms:
        qm = q_mor.get(m)
        if qm not in set(sub.morphisms):
            raise SquareFailure(f"Q({m}) is not a subcategory morphism")
        if (sub.dom[qm] != q_obj[cat.dom[m]]
                or sub.cod[qm] != q_obj[cat.cod[m]]):
            raise SquareFailure(f"Q({m}) has wrong endpoints")
    for o in cat.objects:
        qc = q.get(o)
        if qc not in rc.weq:
            raise QNotWeq(o, qc)
        want = (q_obj[o], o) if side == "left" else (o, q_obj[o])
        if (cat.dom[qc], cat.cod[qc]) != want:
            raise SquareFailure(f"q_{o} has wrong endpoints")
    for m in cat.morphisms:
        a, b = cat.dom[m], cat.cod[m]
        if side == "left":
            lhs = cat.comp(q[b], q_mor[m])
            rhs = cat.comp(m, q[a])
        else:
            lhs = cat.comp(q_mor[m], q[a])
            rhs = cat.comp(q[b], m)
        if lhs != rhs:
            raise SquareFailure(m)
    loc0 = localize(rc0, bound=bound)
    loc0.require_exact()
    h0q = {m: loc0.h.mor_map[q_mor[m]] for m in cat.morphisms}
    for o in cat.objects:
        if h0q[cat.id(o)] != loc0.ho.id(q_obj[o]):
            raise HoQNotFunctorial(cat.id(o))
    for (g, f), h in cat.compose.items():
        if h0q[h] != loc0.ho.comp(h0q[g], h0q[f]):
            raise HoQNotFunctorial((g, f))
    for w in rc.weq:
        if not loc0.ho.is_iso(h0q[w]):
            raise HoQNotFunctorial(f"H0 Q does not invert {w}")
    return DeformationRetraction(rc, side, sub_objects, q_obj, q_mor, q,
                                 sub, incl, rc0, loc0)


def trivial_retraction(rc, bound=None):
    cat = rc.cat
    return validate_retraction(
        rc, cat.objects, {o: o for o in cat.objects},
        {m: m for m in cat.morphisms}, {o: cat.id(o) for o in cat.objects},
        side="left", bound=bound)


def q_tilde(ret, loc):
    """Qtilde: Ho C -> Ho C0, the localized replacement functor."""
    loc.require_exact()
    ho0 = ret.loc0.ho
    obj_map = {o: ret.q_obj[o] for o in loc.ho.objects}
    mor_map = {}
    for z, word in loc.normal_forms.items():
        cur = ho0.id(ret.q_obj[loc.ho.dom[z]])
        for letter in reversed(word):
            if is_inv(letter):
                step = ho0.inverse(ret.h0q_mor(base_mor(letter)))
            else:
                step = ret.h0q_mor(letter)
            cur = ho0.comp(step, cur)
        mor_map[z] = cur
    return Functor(loc.ho, ho0, obj_map, mor_map)


class DerivedFunctorCert:
    """A (total) derived functor with its universal 2-cell.

    kind "left":        cell: derived . H  =>  F            (counit)
    kind "right":       cell: F  =>  derived . H            (unit)
    kind "total-left":  cell: derived . H_C  =>  H_D . F
    kind "total-right": cell: H_D . F  =>  derived . H_C
    """

    def __init__(self, kind, base, derived, cell, src_loc, tgt_loc=None,
                 retraction=None):
        self.kind = kind
        self.base = base
        self.derived = derived
        self.cell = cell
        self.src_loc = src_loc
        self.tgt_loc = tgt_loc
        self.retraction = retraction
        self.absolute = None
        self.probes = ()

    @property
    def is_left(self):
        return self.kind in ("left", "total-left")

    @property
    def is_total(self):
        return self.kind in ("total-left", "total-right")

    def target_functor(self):
        """The right-hand functor of the cell: F itself or H_D . F."""
        if self.is_total:
            return self.base.then(self.tgt_loc.h)
        return self.base

    def __repr__(self):
        return f"DerivedFunctorCert({self.kind}, {self.base!r})"


def homotopical_cert(f, src_loc, tgt_loc, kind="total-left"):
    """Ho F with the identity cell: absolute total derived functor of a
    homotopical functor, on both sides."""
    from .localization import ho_functor
    hof = ho_functor(f, src_loc, tgt_loc)
    composite = src_loc.h.then(hof)
    cell = NatTrans(composite, f.then(tgt_loc.h),
                    {o: tgt_loc.ho.id(tgt_loc.h.obj_map[f.obj_map[o]])
                     for o in f.source.objects}, check=False)
    if kind == "total-right":
        cell = NatTrans(f.then(tgt_loc.h), composite, cell.components,
                        check=False)
    return DerivedFunctorCert(kind, f, hof, cell, src_loc, tgt_loc)


def derive_via_retraction(f, ret, loc, total=False, tgt_rc=None, tgt_loc=None):
    """LF = Fbar . Qtilde with cell components F q_C (left retractions), or
    the mirrored right-handed construction for right retractions."""
    cat = ret.rc.cat
    d = f.target
    if total:
        if tgt_rc is None or tgt_loc is None:
            raise PreconditionFailure("total derivation needs the target "
                                      "relative category and localization")
        for w in ret.rc0.weq:
            if f.mor_map[w] not in tgt_rc.weq:
                raise PreconditionFailure(
                    f"restriction of {f!r} is not homotopical", witness=w)
    else:
        for w in ret.rc0.weq:
            if not d.is_iso(f.mor_map[w]):
                raise PreconditionFailure(
                    f"{f!r} does not invert subcategory weak equivalences",
                    witness=w)
    qt = q_tilde(ret, loc)
    fbar = _factor_through_sub_localization(f, ret, total, tgt_loc)
    derived = qt.then(fbar)
    h = loc.h
    if total:
        comp_of = lambda o: tgt_loc.h.mor_map[f.mor_map[ret.q[o]]]
        target = f.then(tgt_loc.h)
    else:
        comp_of = lambda o: f.mor_map[ret.q[o]]
        target = f
    comps = {o: comp_of(o) for o in cat.objects}
    if ret.side == "left":
        kind = "total-left" if total else "left"
        cell = NatTrans(h.then(derived), target, comps)
    else:
        kind = "total-right" if total else "right"
        cell = NatTrans(target, h.then(derived), comps)
    return DerivedFunctorCert(kind, f, derived, cell, loc, tgt_loc, ret)


def _factor_through_sub_localization(f, ret, total, tgt_loc):
    """Fbar: Ho C0 -> D (or Ho D) evaluating representative words under F."""
    ho0 = ret.loc0.ho
    if total:
        target = tgt_loc.ho
        fwd = lambda m: tgt_loc.h.mor_map[f.mor_map[m]]
    else:
        target = f.target
        fwd = lambda m: f.mor_map[m]
    obj_map = {o: f.obj_map[o] for o in ho0.objects}
    mor_map = {}
    for z, word in ret.loc0.normal_forms.items():
        cur = target.id(obj_map[ho0.dom[z]])
        for letter in reversed(word):
            if is_inv(letter):
                step = target.inverse(fwd(base_mor(letter)))
            else:
                step = fwd(letter)
            cur = target.comp(step, cur)
        mor_map[z] = cur
    return Functor(ho0, target, obj_map, mor_map)


# -- Kan certification -----------------------------------------------------------


class KanCertificate:
    """Outcome of a Kan-property check.

    absolute: "certified" when the plain property and every probe pass,
    "partial" when some probe had to be skipped on budget (never silently
    upgraded), "failed" when anything checked is false.
    """

    def __init__(self, plain_ok, probe_results, witness=None):
        self.plain_ok = plain_ok
        self.probe_results = dict(probe_results)   # name -> True/False/None
        self.witness = witness

    @property
    def absolute(self):
        if not self.plain_ok:
            return "failed"
        if any(v is False for v in self.probe_results.values()):
            return "failed"
        if any(v is None for v in self.probe_results.values()):
            return "partial"
        return "certified"

    def all_ok(self):
        return self.absolute == "certified"


def _right_kan_bijection(along, x, ext, cell, cand):
    """Certify tau |-> cell . tau_along : Nat(cand, ext) ~ Nat(cand.along, x)."""
    c = x.target
    upstairs = enumerate_nats(cand, ext)
    downstairs = enumerate_nats(along.then(cand), x)
    images = set()
    for tbar in upstairs:
        t = tuple(c.comp(cell.components[o], tbar.components[along.obj_map[o]])
                  for o in along.source.objects)
        if t in images:
            return False, ("not injective", tbar)
        images.add(t)
    for t in downstairs:
        key = tuple(t.components[o] for o in along.source.objects)
        if key not in images:
            return False, ("not surjective", t)
    return len(upstairs) == len(downstairs), None


def _left_kan_bijection(along, x, ext, cell, cand):
    """Certify tau |-> tau_along . cell : Nat(ext, cand) ~ Nat(x, cand.along)."""
    c = x.target
    upstairs = enumerate_nats(ext, cand)
    downstairs = enumerate_nats(x, along.then(cand))
    images = set()
    for tbar in upstairs:
        t = tuple(c.comp(tbar.components[along.obj_map[o]], cell.components[o])
                  for o in along.source.objects)
        if t in images:
            return False, ("not injective", tbar)
        images.add(t)
    for t in downstairs:
        key = tuple(t.components[o] for o in along.source.objects)
        if key not in images:
            return False, ("not surjective", t)
    return len(upstairs) == len(downstairs), None


def verify_kan_property(along, x, ext, cell, left, budget=None):
    """Full-enumeration Kan check over every candidate functor."""
    budget = budget or DEFAULT_BUDGET
    check = _left_kan_bijection if left else _right_kan_bijection
    for cand in enumerate_functors(along.target, x.target, budget=budget):
        ok, witness = check(along, x, ext, cell, cand)
        if not ok:
            return False, witness
    return True, None


def default_probes(cert):
    from . import fixtures
    probes = [("One", fixtures.one()), ("Arrow", fixtures.arrow()),
              ("WalkingIso", fixtures.walking_iso())]
    codomain = cert.derived.target
    probes.append((f"codomain:{codomain.name}", codomain))
    return probes


def verify_kan(cert, probes=None, budget=None):
    """Check the defining Kan property of a cert and its absoluteness over
    the probe family; updates cert.absolute to "partial" (all probes pass)
    or "failed" and records the probes used."""
    budget = budget or DEFAULT_BUDGET
    along = cert.src_loc.h
    x = cert.target_functor()
    right_kan = cert.is_left      # left derived functors are right Kan extensions
    plain_ok, witness = verify_kan_property(along, x, cert.derived, cert.cell,
                                            left=not right_kan, budget=budget)
    probe_results = {}
    if probes is None:
        probes = default_probes(cert)
    for pname, e in probes:
        try:
            ok = True
            for y in enumerate_functors(cert.derived.target, e, budget=budget):
                cell_y = whisker_left(y, cert.cell)
                got, wit = verify_kan_property(along, x.then(y),
                                               cert.derived.then(y), cell_y,
                                               left=not right_kan, budget=budget)
                if not got:
                    ok = False
                    witness = witness or wit
                    break
        except SizeBudgetExceeded:
            ok = None
        probe_results[pname] = ok
    kc = KanCertificate(plain_ok, probe_results, witness)
    cert.absolute = kc.absolute
    cert.probes = tuple(name for name, _ in probes)
    return kc


# -- functoriality of L and R ------------------------------------------------------


def derived_nat(sigma, cert_f, cert_g):
    """The unique induced transformation between derived functors.

    Left kinds: sigma . cell_f = cell_g . (L sigma)_H; right kinds:
    (R sigma)_H . cell_f = cell_g . sigma.
    """
    if cert_f.kind != cert_g.kind:
        raise NoSolution("derived_nat: certs of different kinds", 0)
    target = cert_f.derived.target
    if cert_f.is_total:
        h_d = cert_f.tgt_loc.h
        sig = {o: h_d.mor_map[sigma.components[o]] for o in sigma.components}
    else:
        sig = dict(sigma.components)
    candidates = enumerate_nats(cert_f.derived, cert_g.derived)
    objs = cert_f.base.source.objects
    sols = []
    for cand in candidates:
        if cert_f.is_left:
            ok = all(target.comp(sig[o], cert_f.cell.components[o])
                     == target.comp(cert_g.cell.components[o], cand.components[o])
                     for o in objs)
        else:
            ok = all(target.comp(cand.components[o], cert_f.cell.components[o])
                     == target.comp(cert_g.cell.components[o], sig[o])
                     for o in objs)
        if ok:
            sols.append(cand)
    if len(sols) != 1:
        raise NoSolution("derived transformation", len(sols))
    return sols[0]


# -- derived adjunctions -------------------------------------------------------------


class DerivedAdjunctionResult:
    def __init__(self, adjunction, unit_solutions, counit_solutions,
                 cert_left, cert_right):
        self.adjunction = adjunction
        self.unit_solutions = unit_solutions
        self.counit_solutions = counit_solutions
        self.cert_left = cert_left
        self.cert_right = cert_right


def derived_adjunction(adj, cert_f, cert_g):
    """Assemble L F -| R G from the two compatibility squares.

    The unit and counit are the unique solutions of

        R G cell_F . unit_H = cell_G_F . H eta
        H eps . cell_F_G    = counit_H . L F cell_G

    solved by enumeration; the solution sets must have size exactly one.
    """
    if cert_f.kind != "total-left" or cert_g.kind != "total-right":
        raise PreconditionFailure("derived_adjunction needs a total-left and "
                                  "a total-right cert")
    loc_c, loc_d = cert_f.src_loc, cert_f.tgt_loc
    lf, rg = cert_f.derived, cert_g.derived
    ho_c, ho_d = loc_c.ho, loc_d.ho
    eta_cands = enumerate_nats(Functor.identity(ho_c), lf.then(rg))
    eta_sols = []
    for cand in eta_cands:
        if all(ho_c.comp(rg.mor_map[cert_f.cell.components[o]], cand.components[o])
               == ho_c.comp(cert_g.cell.components[adj.left.obj_map[o]],
                            loc_c.h.mor_map[adj.unit.components[o]])
               for o in ho_c.objects):
            eta_sols.append(cand)
    if len(eta_sols) != 1:
        raise NoSolution("derived unit", len(eta_sols))
    eps_cands = enumerate_nats(rg.then(lf), Functor.identity(ho_d))
    eps_sols = []
    for cand in eps_cands:
        if all(ho_d.comp(loc_d.h.mor_map[adj.counit.components[o]],
                         cert_f.cell.components[adj.right.obj_map[o]])
               == ho_d.comp(cand.components[o],
                            lf.mor_map[cert_g.cell.components[o]])
               for o in ho_d.objects):
            eps_sols.append(cand)
    if len(eps_sols) != 1:
        raise NoSolution("derived counit", len(eps_sols))
    dadj = verify_adjunction(lf, rg, eta_sols[0], eps_sols[0])
    return DerivedAdjunctionResult(dadj, len(eta_sols), len(eps_sols),
                                   cert_f, cert_g)


def derive_left_from_right_adjoint(adj, cert_g, budget=None):
    """A left adjoint of R G is an absolute total left derived functor of F,
    with counit eps._{H F} . Fdot rho_F . Fdot H eta."""
    if cert_g.kind != "total-right":
        raise PreconditionFailure("needs an absolute total-right cert")
    loc_c, loc_d = cert_g.tgt_loc, cert_g.src_loc
    rg = cert_g.derived
    found = find_left_adjoint(rg, budget=budget)
    if found is None:
        raise NoLeftAdjoint(f"R {adj.right!r} has no left adjoint")
    fdot = found.left
    ho_d = loc_d.ho
    comps = {}
    for o in loc_c.rc.cat.objects:
        step1 = fdot.mor_map[loc_c.h.mor_map[adj.unit.components[o]]]
        step2 = fdot.mor_map[cert_g.cell.components[adj.left.obj_map[o]]]
        step3 = found.counit.components[adj.left.obj_map[o]]
        comps[o] = ho_d.comp(step3, ho_d.comp(step2, step1))
    cell = NatTrans(loc_c.h.then(fdot), adj.left.then(loc_d.h), comps)
    cert = DerivedFunctorCert("total-left", adj.left, fdot, cell,
                              loc_c, loc_d)
    return cert, found


# -- composition ------------------------------------------------------------------


class ComposesReport:
    def __init__(self, composes, route, witness=None):
        self.composes = composes
        self.route = route
        self.witness = witness

    def __bool__(self):
        return self.composes


def composite_cert(cert1, cert2):
    """The candidate composite cert (outer cert2 after inner cert1)."""
    if cert1.kind != cert2.kind or not cert1.is_total:
        raise PreconditionFailure("composite_cert needs matching total kinds")
    derived = cert1.derived.then(cert2.derived)
    base = cert1.base.then(cert2.base)
    ho_e = cert2.derived.target
    comps = {}
    for o in cert1.base.source.objects:
        inner = cert1.cell.components[o]
        outer = cert2.cell.components[cert1.base.obj_map[o]]
        if cert1.is_left:
            comps[o] = ho_e.comp(outer, cert2.derived.mor_map[inner])
        else:
            comps[o] = ho_e.comp(cert2.derived.mor_map[inner], outer)
    h_c = cert1.src_loc.h
    target = base.then(cert2.tgt_loc.h)
    if cert1.is_left:
        cell = NatTrans(h_c.then(derived), target, comps)
    else:
        cell = NatTrans(target, h_c.then(derived), comps)
    return DerivedFunctorCert(cert1.kind, base, derived, cell,
                              cert1.src_loc, cert2.tgt_loc)


def composes_check(cert1, cert2, cert12=None, probes=None, budget=None):
    """Does the composite candidate cell define the derived functor of the
    composite?  Sufficient routes are tried before full enumeration."""
    mid_rc = cert2.src_loc.rc
    out_rc = cert2.tgt_loc.rc
    cand = composite_cert(cert1, cert2)
    if is_homotopical(cert2.base, mid_rc, out_rc):
        return ComposesReport(True, "outer-homotopical"), cand
    r1, r2 = cert1.retraction, cert2.retraction
    if (r1 is not None and r2 is not None
            and all(cert1.base.obj_map[o] in set(r2.sub_objects)
                    for o in r1.sub_objects)):
        return ComposesReport(True, "nested-retractions"), cand
    kc = verify_kan(cand, probes=probes, budget=budget)
    if cert12 is not None:
        kappa = derived_nat(NatTrans.identity(cand.base), cand, cert12) \
            if kc.all_ok() else None
        if kappa is not None and not kappa.is_iso():
            return ComposesReport(False, "enumerated", kappa), cand
    return ComposesReport(kc.all_ok(), "enumerated", kc.witness), cand


# -- derived mates -----------------------------------------------------------------


def derived_mate_check(square, dtop, dbottom, cert_x, cert_y):
    """Mated strict cells induce mated derived cells (when the legs compose).

    square: strict MateSquare with both cells; dtop/dbottom: the two
    DerivedAdjunctionResults; cert_x/cert_y: homotopical certs for the legs.
    """
    rep = check_mate_pair(square)
    if not rep.mates:
        raise PreconditionFailure("strict cells are not mates",
                                  witness=rep.witness)
    comp_x, _ = composes_check(cert_x, dbottom.cert_left)
    comp_y, _ = composes_check(cert_y, dbottom.cert_right)
    if not comp_x:
        raise CompositionHypothesisFailed("Ho X does not compose with L F'")
    if not comp_y:
        raise CompositionHypothesisFailed("Ho Y does not compose with R G'")
    ho_x, ho_y = cert_x.derived, cert_y.derived
    lf, lf2 = dtop.cert_left, dbottom.cert_left
    rg, rg2 = dtop.cert_right, dbottom.cert_right
    ho_dp = lf2.tgt_loc.ho
    h_dp, h_cp = lf2.tgt_loc.h, lf2.src_loc.h
    lsig_cands = enumerate_nats(ho_x.then(lf2.derived), lf.derived.then(ho_y))
    lsig = [cand for cand in lsig_cands
            if all(ho_dp.comp(ho_y.mor_map[lf.cell.components[o]],
                              cand.components[o])
                   == ho_dp.comp(h_dp.mor_map[square.sigma.components[o]],
                                 lf2.cell.components[square.x.obj_map[o]])
                   for o in square.top.source.objects)]
    if len(lsig) != 1:
        raise NoSolution("derived sigma", len(lsig))
    ho_cp = rg2.tgt_loc.ho
    rtau_cands = enumerate_nats(rg.derived.then(ho_x), ho_y.then(rg2.derived))
    rtau = [cand for cand in rtau_cands
            if all(ho_cp.comp(cand.components[d],
                              ho_x.mor_map[rg.cell.components[d]])
                   == ho_cp.comp(rg2.cell.components[square.y.obj_map[d]],
                                 h_cp.mor_map[square.tau.components[d]])
                   for d in square.top.target.objects)]
    if len(rtau) != 1:
        raise NoSolution("derived tau", len(rtau))
    dsquare = MateSquare(dtop.adjunction, dbottom.adjunction, ho_x, ho_y,
                         sigma=lsig[0], tau=rtau[0])
    return check_mate_pair(dsquare), dsquare


# -- pointwise lifting ---------------------------------------------------------------


def lift_retraction_pointwise(ret, shape, budget=None):
    """Lift a retraction with strictly functorial Q to diagram categories."""
    ok, witness = ret.q_is_functorial()
    if not ok:
        raise QNotFunctorial(witness)
    rc_i, fc = pointwise_relcat(ret.rc, shape, budget=budget)
    sub_set = set(ret.sub_objects)
    sub_objs = [o for o in fc.cat.objects
                if all(v in sub_set for v in fc.functors[o].obj_map.values())]
    q_obj, q_mor, q = {}, {}, {}
    for o in fc.cat.objects:
        x = fc.functors[o]
        qx = Functor(shape, ret.rc.cat,
                     {i: ret.q_obj[x.obj_map[i]] for i in shape.objects},
                     {m: ret.q_mor[x.mor_map[m]] for m in shape.morphisms},
                     check=False)
        q_obj[o] = fc.obj_id(qx)
        legs = {i: ret.q[x.obj_map[i]] for i in shape.objects}
        if ret.side == "left":
            q[o] = fc.mor_id(NatTrans(qx, x, legs, check=False))
        else:
            q[o] = fc.mor_id(NatTrans(x, qx, legs, check=False))
    for m in fc.cat.morphisms:
        t = fc.nats[m]
        qt = NatTrans(fc.functors[q_obj[fc.cat.dom[m]]],
                      fc.functors[q_obj[fc.cat.cod[m]]],
                      {i: ret.q_mor[t.components[i]] for i in shape.objects},
                      check=False)
        q_mor[m] = fc.mor_id(qt)
    return validate_retraction(rc_i, sub_objs, q_obj, q_mor, q,
                               side=ret.side), rc_i, fc


def retraction_isos(ret, loc):
    """The natural isomorphisms Ho I . Qtilde ~ id and Qtilde . Ho I ~ id."""
    from .localization import ho_functor
    qt = q_tilde(ret, loc)
    hoi = ho_functor(ret.incl, _as_loc(ret), loc)
    first = NatTrans(qt.then(hoi), Functor.identity(loc.ho),
                     {o: loc.h.mor_map[ret.q[o]] for o in loc.ho.objects})
    second = NatTrans(hoi.then(qt), Functor.identity(ret.loc0.ho),
                      {o: ret.loc0.h.mor_map[ret.q[o]]
                       for o in ret.loc0.ho.objects})
    if ret.side == "right":
        first = NatTrans(Functor.identity(loc.ho), qt.then(hoi),
                         first.components)
        second = NatTrans(Functor.identity(ret.loc0.ho), hoi.then(qt),
                          second.components)
    assert first.is_iso() and second.is_iso()
    return first, second


def _as_loc(ret):
    return ret.loc0
