"""Law suites: every identity the library claims, checked on seeded samples.

A :class:`Law` pairs an input stream with a predicate. Running a suite draws
``ceil(samples * scale)`` inputs per law, stops a law at its first failure and
records the encoded inputs, which :func:`replay` can decode and re-check.
"""

import json
import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Callable, List, Optional

from .. import codec
from ..approximation import (
    UnsupportedTerm,
    alpha,
    center,
    check_comonad_morphism,
    csupp,
    csupp_oracle,
    cube_st,
    homotopy_H,
    oracle_cubes,
    psi,
)
from ..coalgebra import (
    ComonadicStructure,
    SuspensionCoalgebra,
    coend_slice,
    equivariance_residual,
    factorization_residual,
    naturality_residual,
    operad_morphism_residual,
    pinch,
    restriction_residual,
)
from ..comonad import (
    Peaked,
    Threshold,
    Trivial,
    comultiply,
    counit,
    expand_to_sequence,
    functor_map,
    generic_comonad_element,
    property_d_violation,
    sequence_compatible,
)
from ..convolution import FOLD, convolution, may_action, may_via_convolution
from ..codec import KILL2, SWAP12
from ..generators import ELEMENT_KINDS, ELEMENT_KINDS_ND, Sampler, catalogue_configurations, catalogue_pairs
from ..geometry import HALF, ONE, ZERO
from ..operad import (
    LittleCube,
    LittleCubesOperad,
    OnePointOperad,
    act,
    block_permutation,
    block_sum,
    full_compose,
    halves,
    partial_compose,
    restrict,
    unit_configuration,
)
from ..recognition import (
    cosplit_check,
    in_S,
    induced_coalgebra,
    induced_structure,
    pn_membership,
    pushforward_structure,
    retraction,
    retraction_homotopy,
    sphere_instance,
    squared_loop,
    suspension_instance,
)
from ..rng import DEFAULT_DENOM_BITS, DEFAULT_SEED, derive_seed
from ..spaces import (
    BASE,
    ConstantLoop,
    Generator,
    IdentityLoop,
    SpherePoint,
    SuspensionPoint,
    sphere_test_points,
    suspend_map,
    suspension_point,
    wedge_permute,
)


@dataclass(frozen=True)
class SuiteConfig:
    dim: int = 1
    seed: int = DEFAULT_SEED
    samples: int = 100
    denom_bits: int = DEFAULT_DENOM_BITS
    budget: int = 10_000


@dataclass(frozen=True)
class Law:
    name: str
    inputs: Callable  # (config, sampler) -> iterable of argument tuples
    check: Callable  # (*args) -> bool
    scale: Fraction = Fraction(1)

    def count(self, config):
        return max(1, math.ceil(config.samples * self.scale))


@dataclass
class LawResult:
    law: str
    passed: bool
    checked: int
    counterexample: Optional[dict] = None


@dataclass
class LawReport:
    suite: str
    laws: List[LawResult] = field(default_factory=list)
    timing: float = 0.0

    @property
    def passed(self):
        return all(r.passed for r in self.laws)

    def to_json(self, timing=False):
        out = {"suite": self.suite, "passed": self.passed, "laws": [asdict(r) for r in self.laws]}
        if timing:
            out["timing"] = round(self.timing, 6)
        return out


SUITES = {}
EXTRA_SUITES = {}


def suite(name, default=True):
    def wrap(fn):
        (SUITES if default else EXTRA_SUITES)[name] = fn
        return fn

    return wrap


def law(name, scale=1):
    """Decorator turning ``inputs(config, sampler)`` plus a check into a Law factory."""

    def wrap(inputs):
        def make(check):
            return Law(name, inputs, check, Fraction(scale))

        return make

    return wrap


def _sampler(config, suite_name, law_name):
    return Sampler(config.dim, derive_seed(config.seed, f"{suite_name}/{law_name}"), config.denom_bits)


def _run_law(suite_name, lw: Law, config):
    sampler = _sampler(config, suite_name, lw.name)
    count = lw.count(config)
    checked = 0
    for args in islice(lw.inputs(config, sampler), count):
        checked += 1
        try:
            ok = lw.check(*args)
            error = None
        except Exception as exc:  # a raised error is a failed law, with the input kept
            ok, error = False, f"{type(exc).__name__}: {exc}"
        if not ok:
            payload = {"inputs": codec.encode(tuple(args))}
            if error:
                payload["error"] = error
            return LawResult(lw.name, False, checked, payload)
    return LawResult(lw.name, True, checked)


def laws_of(name, config) -> List[Law]:
    factory = SUITES.get(name) or EXTRA_SUITES.get(name)
    if factory is None:
        raise KeyError(f"unknown suite {name!r}")
    return factory(config)


def run_suite(names, config: SuiteConfig) -> List[LawReport]:
    """Run the named suites (all default suites when ``names`` is empty), sorted by name."""
    names = sorted(set(names or SUITES))
    reports = []
    for name in names:
        start = time.perf_counter()
        report = LawReport(name)
        for lw in laws_of(name, config):
            report.laws.append(_run_law(name, lw, config))
        report.timing = time.perf_counter() - start
        reports.append(report)
    return reports


def report_json(reports, config, timing=False):
    data = {
        "config": asdict(config),
        "passed": all(r.passed for r in reports),
        "suites": [r.to_json(timing) for r in reports],
    }
    return json.dumps(data, indent=2, sort_keys=True)


def replay(suite_name, law_name, payload, config=SuiteConfig()) -> bool:
    """Re-run one law on a recorded counterexample; True means it now passes."""
    for lw in laws_of(suite_name, config):
        if lw.name == law_name:
            args = codec.decode(payload["inputs"])
            try:
                return bool(lw.check(*args))
            except Exception:
                return False
    raise KeyError(f"no law {law_name!r} in {suite_name!r}")


# -- helpers ------------------------------------------------------------------------


def _element_kinds(n):
    return ELEMENT_KINDS if n == 1 else ELEMENT_KINDS_ND


# -- operad ----------------------------------------------------------------------------


@suite("operad.laws")
def operad_laws(config):
    def assoc_inputs(cfg, s):
        while True:
            c = s.configuration(s.rng.integer(1, 3))
            d = s.configuration(s.rng.integer(1, 3))
            e = s.configuration(s.rng.integer(0, 2))
            yield c, s.rng.integer(1, c.arity), d, s.rng.integer(1, d.arity), e

    def assoc(c, i, d, j, e):
        lhs = partial_compose(partial_compose(c, i, d), i + j - 1, e)
        rhs = partial_compose(c, i, partial_compose(d, j, e))
        ok = lhs == rhs and lhs.disjointness_violation() is None
        if c.arity >= 2:
            k = i % c.arity + 1  # another slot
            a, b = min(i, k), max(i, k)
            da, db = (d, e) if a == i else (e, d)
            lhs = partial_compose(partial_compose(c, b, db), a, da)
            rhs = partial_compose(partial_compose(c, a, da), b + da.arity - 1, db)
            ok = ok and lhs == rhs
        return ok

    def unit_inputs(cfg, s):
        yield from ((c,) for c in catalogue_configurations(cfg.dim, 2))
        while True:
            yield (s.configuration(s.rng.integer(0, 4)),)

    def unit(c):
        u = unit_configuration(c.dim)
        ok = full_compose(u, [c]) == c and partial_compose(u, 1, c) == c
        for i in range(1, c.arity + 1):
            ok = ok and partial_compose(c, i, u) == c
        return ok

    def equiv_inputs(cfg, s):
        while True:
            r = s.rng.integer(1, 3)
            c = s.configuration(r)
            ds = tuple(s.configuration(s.rng.integer(0, 3)) for _ in range(r))
            taus = tuple(s.permutation(d.arity) for d in ds)
            yield c, s.permutation(r), ds, taus

    def equiv(c, sigma, ds, taus):
        # outer: gamma(c.sigma; ds) = gamma(c; sigma-reindexed ds) . block(sigma)
        moved = tuple(ds[sigma(i) - 1] for i in range(1, c.arity + 1))
        lhs = full_compose(act(c, sigma), ds)
        rhs = act(full_compose(c, moved), block_permutation(sigma, [d.arity for d in moved]))
        # inner: gamma(c; d_i.tau_i) = gamma(c; ds) . (tau_1 + ... + tau_r)
        lhs2 = full_compose(c, [act(d, t) for d, t in zip(ds, taus)])
        rhs2 = act(full_compose(c, ds), block_sum(taus))
        return lhs == rhs and lhs2 == rhs2

    def simp_inputs(cfg, s):
        while True:
            c = s.configuration(s.rng.integer(2, 5))
            i = s.rng.integer(1, c.arity - 1)
            yield c, i, s.rng.integer(i + 1, c.arity)

    def simplicial(c, i, j):
        return restrict(restrict(c, j), i) == restrict(restrict(c, i), j - 1)

    return [
        law("associativity")(assoc_inputs)(assoc),
        law("unit")(unit_inputs)(unit),
        law("equivariance")(equiv_inputs)(equiv),
        law("simplicial")(simp_inputs)(simplicial),
    ]


# -- comonad -----------------------------------------------------------------------------


@suite("comonad.axioms")
def comonad_axioms(config):
    laws = []
    for kind in _element_kinds(config.dim):

        def inputs(cfg, s, kind=kind):
            while True:
                yield s.element(kind), s.cube(), s.cube(), s.cube()

        def coassoc(f, c, d, e):
            nested = comultiply(comultiply(f, c), d).eval(e)
            return nested == comultiply(f, c @ d).eval(e) == f.eval(c @ d @ e)

        def counit_law(f, c, d, e):
            left = counit(comultiply(f, c)) == f.eval(c)
            right = comultiply(f, LittleCube.identity(f.dim)).eval(d) == f.eval(d)
            return left and right

        laws.append(law(f"coassociativity[{kind}]")(inputs)(coassoc))
        laws.append(law(f"counit[{kind}]")(inputs)(counit_law))

    def functor_inputs(cfg, s):
        while True:
            yield s.element(s.rng.choice(["Peaked", "Precomposed"])), s.cube()

    def functoriality(f, c):
        composite = functor_map(SWAP12, functor_map(KILL2, f))
        joint = functor_map(KILL2.then(SWAP12), f)
        ident = functor_map(codec.MAPS["id"], f)
        return composite.eval(c) == joint.eval(c) and ident.eval(c) == f.eval(c)

    def cofree(f, c):
        lift = functor_map(SWAP12, f)
        return counit(lift) == SWAP12(counit(f))

    laws.append(law("functoriality")(functor_inputs)(functoriality))
    laws.append(law("cofree.counit")(functor_inputs)(cofree))
    return laws


@suite("comonad.property_d")
def comonad_property_d(config):
    laws = []
    for kind in _element_kinds(config.dim):

        def inputs(cfg, s, kind=kind):
            for pair in catalogue_pairs(cfg.dim):
                yield s.element(kind), pair[0], pair[1]
            while True:
                f = s.element(kind)
                g = f.simplified()
                if s.rng.coin() and isinstance(g, Peaked):
                    # a pair sharing a face through the peak
                    yield f, *_pair_through(s, g.t)
                else:
                    yield f, *s.disjoint_pair()

        def check(f, c1, c2):
            return property_d_violation(f, [(c1, c2)]) is None

        laws.append(law(f"pairs[{kind}]", scale=Fraction(5, 2))(inputs)(check))

    def seq_inputs(cfg, s):
        while True:
            theta = s.configuration(s.rng.integer(1, 4))
            yield s.element(), theta, s.rng.integer(1, theta.arity), s.permutation(theta.arity)

    def seq(f, theta, i, sigma):
        compat = sequence_compatible(f, theta, i)
        equiv = expand_to_sequence(f, act(theta, sigma)) == wedge_permute(sigma, expand_to_sequence(f, theta))
        return compat and equiv

    laws.append(law("expand_to_sequence")(seq_inputs)(seq))
    return laws


def _pair_through(s, t):
    """Two cubes sharing the face ``x_k = t_k`` for a random axis ``k``."""
    n = len(t)
    k = s.rng.below(n)
    b1, b2 = [], []
    for axis in range(n):
        if axis == k:
            lo = s.between(ZERO, t[axis], closed=True)
            hi = s.between(t[axis], ONE, closed=True)
            if lo == t[axis]:
                lo = ZERO
            if hi == t[axis]:
                hi = ONE
            b1.append((lo, t[axis]))
            b2.append((t[axis], hi))
        else:
            b1.append((ZERO, ONE))
            b2.append((ZERO, ONE))
    return LittleCube.from_image(b1), LittleCube.from_image(b2)


@suite("comonad.broken", default=False)
def comonad_broken(config):
    def inputs(cfg, s):
        while True:
            yield (codec.fixture("broken", dim=cfg.dim), *s.disjoint_pair())

    def check(f, c1, c2):
        return property_d_violation(f, [(c1, c2)]) is None

    return [law("pairs[broken]")(inputs)(check)]


@suite("comonad.reduced")
def comonad_reduced(config):
    point = OnePointOperad()

    def inputs(cfg, s):
        while True:
            yield (s.rng.choice([s.label(), SpherePoint(s.interior_point()), s.rational()]),)

    def rejected(value):
        if generic_comonad_element(point, lambda theta: value) is not None:
            return False
        # the base-valued candidate is the unique survivor
        return generic_comonad_element(point, lambda theta: BASE) is not None

    def cubes_inputs(cfg, s):
        while True:
            yield (Threshold(s.threshold()),)

    def accepted(f):
        # arity-1 configurations are single cubes
        return generic_comonad_element(LittleCubesOperad(1), lambda theta: f.eval(theta.cubes[0]), samples=10) is not None

    laws = [law("one_point.rejects", scale=Fraction(1, 2))(inputs)(rejected)]
    if config.dim == 1:
        laws.append(law("little_cubes.accepts", scale=Fraction(1, 10))(cubes_inputs)(accepted))
    return laws


# -- coalgebras -----------------------------------------------------------------------


def _instances(n):
    return [sphere_instance(n), suspension_instance(n)]


@suite("coalgebra.equivalence")
def coalgebra_equivalence(config):
    laws = []
    for inst in _instances(config.dim):

        def inputs(cfg, s, inst=inst):
            while True:
                yield s.configuration(s.rng.integer(0, 3)), inst.sample(s.rng)

        def coend_round_trip(theta, x, inst=inst):
            back = ComonadicStructure(inst.dim, inst.coend.element)
            return back.delta(theta, x) == inst.coend.delta(theta, x)

        def comonadic_round_trip(theta, x, inst=inst):
            back = ComonadicStructure(inst.dim, inst.coend.element)
            slice_ = coend_slice(back, x)
            return slice_ == inst.coend.element(x) and coend_slice(inst.coend, x) == inst.coend.element(x)

        laws.append(law(f"coend_round_trip[{inst.name}]")(inputs)(coend_round_trip))
        laws.append(law(f"comonadic_round_trip[{inst.name}]")(inputs)(comonadic_round_trip))
    return laws


@suite("coalgebra.suspension")
def coalgebra_suspension(config):
    laws = []
    for inst in _instances(config.dim):

        def morph_inputs(cfg, s, inst=inst):
            while True:
                c = s.configuration(s.rng.integer(1, 3))
                ds = tuple(s.configuration(s.rng.integer(0, 3)) for _ in range(c.arity))
                yield c, ds, inst.sample(s.rng)

        def morphism(c, ds, x, inst=inst):
            return operad_morphism_residual(inst.coend, c, ds, x) is None

        def struct_inputs(cfg, s, inst=inst):
            while True:
                c = s.configuration(s.rng.integer(1, 4))
                yield c, s.permutation(c.arity), s.rng.integer(1, c.arity), inst.sample(s.rng)

        def equivariance(c, sigma, i, x, inst=inst):
            return equivariance_residual(inst.coend, c, sigma, x) is None

        def restriction(c, sigma, i, x, inst=inst):
            return restriction_residual(inst.coend, c, i, x) is None

        laws.append(law(f"operad_morphism[{inst.name}]")(morph_inputs)(morphism))
        laws.append(law(f"equivariance[{inst.name}]")(struct_inputs)(equivariance))
        laws.append(law(f"restriction[{inst.name}]")(struct_inputs)(restriction))

    def nat_inputs(cfg, s):
        inst = suspension_instance(cfg.dim)
        while True:
            yield s.configuration(s.rng.integer(1, 3)), inst.sample(s.rng), s.rng.integer(0, 1)

    def naturality(c, p, which):
        phi = (SWAP12, KILL2)[which]
        return naturality_residual(phi, c, p) is None and factorization_residual(c, p) is None

    def pinch_inputs(cfg, s):
        inst = suspension_instance(cfg.dim)
        while True:
            yield (inst.sample(s.rng),)

    def pinch_law(p):
        return pinch(p) == SuspensionCoalgebra(config.dim).delta(halves(config.dim), p)

    laws.append(law("naturality")(nat_inputs)(naturality))
    laws.append(law("pinch")(pinch_inputs)(pinch_law))
    return laws


# -- approximation ------------------------------------------------------------------


def _alpha_psi(f):
    q = psi(f)
    return Trivial(f.dim) if q is BASE else alpha(q)


@suite("approximation.retract")
def approximation_retract(config):
    def pa_inputs(cfg, s):
        while True:
            yield s.interior_point(), s.loop()

    def psi_alpha(t, loop):
        q = psi(alpha(t, loop))
        if loop.is_constant():
            return q is BASE
        return isinstance(q, SuspensionPoint) and q.t == t and q.x == loop

    laws = [law("psi_alpha", scale=Fraction(5, 2))(pa_inputs)(psi_alpha)]
    for kind in _element_kinds(config.dim):

        def inputs(cfg, s, kind=kind):
            while True:
                yield (s.element(kind),)

        def h0(f):
            return homotopy_H(f, ZERO) == f

        def h1(f):
            return homotopy_H(f, ONE) == _alpha_psi(f)

        def d_inputs(cfg, s, kind=kind):
            while True:
                f = s.element(kind)
                t = center(f)
                times = tuple(s.time() for _ in range(10))
                if t is not None and s.rng.coin():
                    yield f, times, *_pair_through(s, t)
                else:
                    yield f, times, *s.disjoint_pair()

        def h_property_d(f, times, c1, c2):
            return all(property_d_violation(homotopy_H(f, tau), [(c1, c2)]) is None for tau in times)

        laws.append(law(f"H0[{kind}]")(inputs)(h0))
        laws.append(law(f"H1[{kind}]")(inputs)(h1))
        laws.append(law(f"H_property_d[{kind}]", scale=Fraction(1, 2))(d_inputs)(h_property_d))
    return laws


@suite("approximation.morphism")
def approximation_morphism(config):
    def inputs(cfg, s):
        while True:
            t = s.interior_point()
            c = s.cube_containing(t) if s.rng.coin() else s.cube()
            yield t, s.loop(), c, s.cube()

    def check(t, loop, c, d):
        report = check_comonad_morphism([(t, loop, c, d)])
        return not report["counit"]["counterexamples"] and not report["comultiplication"]["counterexamples"]

    return [law("comonad_morphism")(inputs)(check)]


@suite("approximation.support")
def approximation_support(config):
    n = config.dim

    def peak_inputs(cfg, s):
        while True:
            yield s.interior_point(), s.loop()

    def peaked_singleton(t, loop):
        supp = csupp(alpha(t, loop))
        if loop.is_constant():
            return supp is None
        return supp is not None and supp.is_point and supp.los == t

    def susp_inputs(cfg, s):
        inst = suspension_instance(cfg.dim)
        while True:
            p = inst.sample(s.rng)
            if p is not BASE:
                yield (p,)

    def suspension_support(p):
        supp = csupp(SuspensionCoalgebra(n).element(p))
        return supp is not None and supp.is_point and supp.los == p.t

    def st_inputs(cfg, s):
        while True:
            t = s.interior_point()
            s_pt = tuple(s.rng.choice([ZERO, ONE, s.rational(), s.rational()]) for _ in range(n))
            yield s_pt, t

    def st_exact(s_pt, t):
        c = cube_st(s_pt, t)
        touches = all(lo == 0 or hi == 1 for lo, hi in zip(c.los, c.his))
        return c(s_pt) == t and touches

    def oracle_inputs(cfg, s):
        while True:
            yield (s.element(),)

    def oracle_contains(f):
        try:
            exact = csupp(f)
        except UnsupportedTerm:
            return True
        approx = csupp_oracle(f, budget=400)
        if exact is None or approx is None:
            # no live cube among the samples says nothing about thin supports
            return True
        return all(
            a <= lo and hi <= b for a, b, lo, hi in zip(approx.los, approx.his, exact.los, exact.his)
        )

    laws = [
        law("peaked_singleton")(peak_inputs)(peaked_singleton),
        law("suspension_singleton")(susp_inputs)(suspension_support),
        law("cube_st_exact")(st_inputs)(st_exact),
        law("oracle_contains", scale=Fraction(1, 4))(oracle_inputs)(oracle_contains),
    ]
    if n == 1:

        def threshold_inputs(cfg, s):
            yield (Fraction(3, 4),)
            yield (HALF,)
            while True:
                yield (s.threshold(),)

        def threshold_support(a):
            supp = csupp(Threshold(a))
            return supp.los == (ONE - a,) and supp.his == (a,) and center(Threshold(a)) == (HALF,)

        def threshold_oracle(a):
            f = Threshold(a)
            exact = csupp(f)
            approx = csupp_oracle(f, config.budget)
            _, m = oracle_cubes(1, config.budget)
            cell = Fraction(1, m)
            lo, hi = approx.los[0], approx.his[0]
            return lo <= exact.los[0] and exact.his[0] <= hi and exact.los[0] - lo <= cell and hi - exact.his[0] <= cell

        laws.append(law("threshold_support", scale=Fraction(1, 10))(threshold_inputs)(threshold_support))
        laws.append(law("threshold_oracle", scale=Fraction(1, 50))(threshold_inputs)(threshold_oracle))
    return laws


# -- recognition ----------------------------------------------------------------------


@suite("recognition.retract")
def recognition_retract(config):
    laws = []
    for inst in _instances(config.dim):

        def inputs(cfg, s, inst=inst):
            while True:
                yield inst.sample(s.rng), s.time()

        def retract(x, tau, inst=inst):
            A = inst.cn
            member = in_S(x, A)
            return (
                bool(member)
                and member.method == "exact"
                and retraction(x, A) == x
                and retraction_homotopy(x, A, ZERO) == x
                and retraction_homotopy(x, A, ONE) == retraction(x, A)
                and retraction_homotopy(x, A, tau) == x
                and bool(in_S(x, pushforward_structure(inst.sigma_omega)))
            )

        laws.append(law(f"retract[{inst.name}]")(inputs)(retract))
    return laws


@suite("recognition.structure")
def recognition_structure(config):
    laws = []
    for inst in _instances(config.dim):

        def inputs(cfg, s, inst=inst):
            while True:
                yield (inst.sample(s.rng),)

        def induced(x, inst=inst):
            A = inst.cn
            q = induced_structure(x, A)
            if x is BASE:
                return q is BASE
            counit_ok = q.x.at(q.t) == x
            pushed = pushforward_structure(_sigma_omega_of(A))
            push_ok = alpha(q) == A(x) and pushed(x) == A(x)
            closure = all(in_S(q.x(s), A) for s in sphere_test_points(A.dim))
            given = inst.sigma_omega
            agree = given(x) == q and given.counit_residual(x) is None and given.coassociativity_residual(x) is None
            return counit_ok and push_ok and closure and agree

        def coassoc_inputs(cfg, s, inst=inst):
            while True:
                yield inst.sample(s.rng), s.cube()

        def coassoc(x, d, inst=inst):
            A = inst.cn
            return A.counit_residual(x) is None and A.coassociativity_residual(x, d) is None

        laws.append(law(f"induced[{inst.name}]")(inputs)(induced))
        laws.append(law(f"coalgebra_axioms[{inst.name}]")(coassoc_inputs)(coassoc))
    return laws


def _sigma_omega_of(A):
    return induced_coalgebra(A)


@suite("recognition.membership")
def recognition_membership(config):
    n = config.dim

    def inputs(cfg, s):
        while True:
            yield (s.label(),)

    def generators(z):
        g = suspension_instance(n, labels=(1, 2, 3)).sigma_omega
        sphere = sphere_instance(n).sigma_omega
        return (
            pn_membership(Generator(n, z), g)
            and pn_membership(ConstantLoop(n), g)
            and pn_membership(IdentityLoop(n), sphere)
            and not pn_membership(squared_loop(z, n), g)
        )

    def cosplit_inputs(cfg, s):
        while True:
            inst = s.rng.choice(_instances(cfg.dim))
            yield inst.name, inst.sample(s.rng), s.cube()

    def cosplit(name, x, c):
        inst = {i.name: i for i in _instances(n)}[name]
        A = inst.cn
        elements = [A(x), comultiply(A(x), c)]
        q = inst.sigma_omega(x)
        reports = [cosplit_check(A, [x], elements), cosplit_check(inst.sigma_omega, [x], [q])]
        return all(not entry["counterexamples"] for rep in reports for entry in rep.values())

    return [
        law("pn_membership", scale=Fraction(1, 2))(inputs)(generators),
        law("cosplit")(cosplit_inputs)(cosplit),
    ]


# -- convolution -------------------------------------------------------------------------


def _concat(l1, l2):
    """Hand-written loop concatenation in the first coordinate."""

    def at(s):
        s0 = s[0]
        if s0 < HALF:
            return l1.at((2 * s0,) + tuple(s[1:]))
        if s0 > HALF:
            return l2.at((2 * s0 - 1,) + tuple(s[1:]))
        return BASE

    return at


@suite("convolution.may")
def convolution_may(config):
    n = config.dim

    def concat_inputs(cfg, s):
        while True:
            yield s.loop(), s.loop(), s.interior_point()

    def concatenation(l1, l2, pt):
        return may_action(halves(n), [l1, l2]).at(pt) == _concat(l1, l2)(pt)

    def law_inputs(cfg, s):
        while True:
            c = s.configuration(s.rng.integer(1, 3))
            ds = tuple(s.configuration(s.rng.integer(0, 2)) for _ in range(c.arity))
            loops = tuple(s.loop() for _ in range(sum(d.arity for d in ds)))
            yield c, ds, loops, s.permutation(c.arity), SpherePoint(s.interior_point())

    def algebra_laws(c, ds, loops, sigma, pt):
        # unit
        ok = may_action(unit_configuration(n), [loops[0]])(pt) == loops[0](pt) if loops else True
        # associativity: gamma(c; ds) acting on loops = c acting on the d_i-products
        flat = may_action(full_compose(c, ds), loops)(pt)
        blocks, k = [], 0
        for d in ds:
            blocks.append(may_action(d, loops[k:k + d.arity]))
            k += d.arity
        ok = ok and flat == may_action(c, blocks)(pt)
        # equivariance: (c.sigma) acting on l equals c acting on l reindexed by sigma
        moved = tuple(blocks[sigma(i) - 1] for i in range(1, c.arity + 1))
        ok = ok and may_action(act(c, sigma), blocks)(pt) == may_action(c, moved)(pt)
        # convolution on the sphere coalgebra is the same action
        ok = ok and may_via_convolution(c, blocks)(pt) == may_action(c, blocks)(pt)
        return ok

    def pinch_inputs(cfg, s):
        inst = suspension_instance(cfg.dim)
        while True:
            yield inst.sample(s.rng), s.rng.integer(0, 1)

    def pinch_convolution(p, which):
        f1 = suspend_map(SWAP12)
        f2 = suspend_map(KILL2) if which else suspend_map(SWAP12)
        conv = convolution(halves(n), SuspensionCoalgebra(n), [f1, f2])
        if p is BASE:
            return conv(p) is BASE
        t0 = p.t[0]
        if t0 < HALF:
            expect = f1(suspension_point((2 * t0,) + p.t[1:], p.x))
        elif t0 > HALF:
            expect = f2(suspension_point((2 * t0 - 1,) + p.t[1:], p.x))
        else:
            expect = BASE
        unit_ok = FOLD.unit_residual(p, 1, 2) is None
        return conv(p) == expect and unit_ok

    return [
        law("concatenation")(concat_inputs)(concatenation),
        law("algebra_laws")(law_inputs)(algebra_laws),
        law("pinch_convolution")(pinch_inputs)(pinch_convolution),
    ]
