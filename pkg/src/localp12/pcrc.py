"""Change-of-variable maps along the partial resolution chain.

Three coordinate patches: (y0, y1, y2, q1, q2) on the full resolution side,
(z0, z1, z2, q, u) on local P(1,2) with its extension angle u, and
(x0, x1, x2, s1, s2) on the quotient side.  A map moves cohomology
variables by an invertible Cyclo-linear block and sends each quantum
parameter either to a root of unity times another quantum parameter or to
a root of unity times the exponential of a linear form.

Inverting an exponential line takes a logarithm, hence a branch integer b;
the recovered angle constant is pi * principal_angle(phase) + 2 pi b.  The
constant phase is a 12th root of unity and does not depend on b, which is
why no branch choice ever makes the angle constant vanish: the angle line
produced by chaining the two printed maps carries phase zeta^10 (that is,
e^{-i pi/3}) for every b.

`verify_bracket_identity` and `verify_residual_thirdderiv` check the two
series identities that drive the specialization argument; the corollary
suite checks that inverting the first map and composing with the second
reproduces the third, entry by entry in the coefficient field.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclo, I, OMEGA, OMEGA_BAR, ONE, ZERO, zeta_pow
from .mpseries import Series, VarSet, cos, exp, inverse, sin, tan
from .potentials import quantum_sign
from .ratfun import rf
from .reports import CaseResult, SuiteReport

#: i / sqrt(3) = (2 zeta^2 - 1) / 3
I_OVER_SQRT3 = Cyclo(Fraction(-1, 3), 0, Fraction(2, 3), 0)
#: 1 / sqrt(3)
INV_SQRT3 = I_OVER_SQRT3 * -I


def _cyclo(x):
    if isinstance(x, Cyclo):
        return x
    return Cyclo(Fraction(x))


def phase_exponent(c):
    """The k in 0..11 with c = zeta^k; ValueError if there is none."""
    for k in range(12):
        if c == zeta_pow(k):
            return k
    raise ValueError("not a 12th root of unity: %s" % (c,))


def principal_angle(c):
    """Angle of a 12th root of unity, in units of pi, normalized to (-1, 1]."""
    k = phase_exponent(c)
    return Fraction(k, 6) if k <= 6 else Fraction(k - 12, 6)


# --------------------------------------------------------------------------
# line types


@dataclass(frozen=True)
class LinearForm:
    """Cyclo-linear combination of named variables (sorted, zero-free)."""

    terms: tuple

    @classmethod
    def of(cls, mapping):
        items = []
        for name in sorted(mapping):
            c = _cyclo(mapping[name])
            if c:
                items.append((name, c))
        return cls(tuple(items))

    def coeff(self, name):
        for n, c in self.terms:
            if n == name:
                return c
        return ZERO

    def names(self):
        return tuple(n for n, _ in self.terms)

    def scaled(self, c):
        c = _cyclo(c)
        return LinearForm.of({n: v * c for n, v in self.terms})

    def __add__(self, other):
        acc = {n: c for n, c in self.terms}
        for n, c in other.terms:
            acc[n] = acc.get(n, ZERO) + c
        return LinearForm.of(acc)

    def to_series(self, target):
        out = Series.zero(target)
        for n, c in self.terms:
            out = out + Series.variable(target, n).scale(rf(c))
        return out


@dataclass(frozen=True)
class ScalarLine:
    """q maps to scalar * var: an ordinary quantum parameter."""

    scalar: Cyclo
    var: str


@dataclass(frozen=True)
class ExpLine:
    """q maps to phase * e^(form): a root-of-unity specialization."""

    phase: Cyclo
    form: LinearForm


@dataclass(frozen=True)
class LogLine:
    """v maps to premult * Log_branch(scalar * param).

    The unresolved inverse of an exponential line; composing it over an
    ExpLine resolves it into an AngleLine.
    """

    premult: Cyclo
    scalar: Cyclo
    param: str
    branch: int


@dataclass(frozen=True)
class AngleLine:
    """v maps to an exact angle constant plus a linear form.

    The constant is pi * principal_angle(phase) + 2 pi branch; the phase
    is pinned to a power of zeta so the constant stays symbolic.
    """

    phase: Cyclo
    branch: int
    form: LinearForm

    def constant_in_pi(self):
        return principal_angle(self.phase) + 2 * self.branch


@dataclass(frozen=True)
class CovMap:
    source: tuple
    target: tuple
    lines: tuple  # (source name, line) pairs in source order
    branch: int = 0

    def line(self, name):
        for n, ln in self.lines:
            if n == name:
                return ln
        raise KeyError(name)

    def quantum(self, name):
        ln = self.line(name)
        if isinstance(ln, LinearForm):
            raise ValueError("%r is a cohomology variable of this map" % (name,))
        return ln

    def eval_linear(self, values):
        """Evaluate the cohomology block at exact target-variable values."""
        out = {}
        for n, ln in self.lines:
            if isinstance(ln, LinearForm):
                acc = ZERO
                for v, c in ln.terms:
                    acc = acc + c * _cyclo(values.get(v, 0))
                out[n] = acc
        return out

    def to_json(self):
        return {
            "source": list(self.source),
            "target": list(self.target),
            "branch": self.branch,
            "lines": [[n, _line_json(ln)] for n, ln in self.lines],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            tuple(obj["source"]),
            tuple(obj["target"]),
            tuple((n, _line_from_json(ln)) for n, ln in obj["lines"]),
            int(obj["branch"]),
        )


def _form_json(form):
    return [[n, c.to_strings()] for n, c in form.terms]


def _form_from_json(rows):
    return LinearForm(tuple((r[0], Cyclo.from_strings(r[1])) for r in rows))


def _line_json(ln):
    if isinstance(ln, LinearForm):
        return {"kind": "linear", "form": _form_json(ln)}
    if isinstance(ln, ScalarLine):
        return {"kind": "scalar", "scalar": ln.scalar.to_strings(), "var": ln.var}
    if isinstance(ln, ExpLine):
        return {"kind": "exp", "phase": ln.phase.to_strings(), "form": _form_json(ln.form)}
    if isinstance(ln, LogLine):
        return {
            "kind": "log",
            "premult": ln.premult.to_strings(),
            "scalar": ln.scalar.to_strings(),
            "param": ln.param,
            "branch": ln.branch,
        }
    if isinstance(ln, AngleLine):
        return {
            "kind": "angle",
            "phase": ln.phase.to_strings(),
            "branch": ln.branch,
            "form": _form_json(ln.form),
        }
    raise TypeError("unknown line %r" % (ln,))


def _line_from_json(obj):
    kind = obj["kind"]
    if kind == "linear":
        return _form_from_json(obj["form"])
    if kind == "scalar":
        return ScalarLine(Cyclo.from_strings(obj["scalar"]), obj["var"])
    if kind == "exp":
        return ExpLine(Cyclo.from_strings(obj["phase"]), _form_from_json(obj["form"]))
    if kind == "log":
        return LogLine(
            Cyclo.from_strings(obj["premult"]),
            Cyclo.from_strings(obj["scalar"]),
            obj["param"],
            int(obj["branch"]),
        )
    if kind == "angle":
        return AngleLine(
            Cyclo.from_strings(obj["phase"]),
            int(obj["branch"]),
            _form_from_json(obj["form"]),
        )
    raise ValueError("unknown line kind %r" % (kind,))


# --------------------------------------------------------------------------
# the three printed maps


def build_cov():
    """Resolution-side coordinates in terms of the orbifold line's."""
    return CovMap(
        source=("y0", "y1", "y2", "q1", "q2"),
        target=("z0", "z1", "z2", "q", "u"),
        lines=(
            ("y0", LinearForm.of({"z0": 1})),
            ("y1", LinearForm.of({"z2": I})),
            ("y2", LinearForm.of({"z1": ONE, "z2": I * Fraction(-1, 2)})),
            ("q1", ExpLine(-ONE, LinearForm.of({"u": I}))),
            ("q2", ScalarLine(I, "q")),
        ),
    )


def build_covbgp():
    """Resolution-side coordinates in terms of the quotient side's."""
    c = I_OVER_SQRT3
    return CovMap(
        source=("y0", "y1", "y2", "q1", "q2"),
        target=("x0", "x1", "x2", "s1", "s2"),
        lines=(
            ("y0", LinearForm.of({"x0": 1})),
            ("y1", LinearForm.of({"x1": c * OMEGA, "x2": c * OMEGA_BAR})),
            ("y2", LinearForm.of({"x1": c * OMEGA_BAR, "x2": c * OMEGA})),
            ("q1", ExpLine(OMEGA, LinearForm.of({"s1": c * OMEGA, "s2": c * OMEGA_BAR}))),
            ("q2", ExpLine(OMEGA, LinearForm.of({"s1": c * OMEGA_BAR, "s2": c * OMEGA}))),
        ),
    )


def build_corollary():
    """Orbifold-line coordinates in terms of the quotient side's."""
    c = I_OVER_SQRT3
    h = c * Fraction(1, 2)
    r = INV_SQRT3
    return CovMap(
        source=("z0", "z1", "z2", "q", "u"),
        target=("x0", "x1", "x2", "s1", "s2"),
        lines=(
            ("z0", LinearForm.of({"x0": 1})),
            ("z1", LinearForm.of({"x1": h * (OMEGA_BAR - 1), "x2": h * (OMEGA - 1)})),
            ("z2", LinearForm.of({"x1": r * OMEGA, "x2": r * OMEGA_BAR})),
            ("q", ExpLine(-I * OMEGA, LinearForm.of({"s1": c * OMEGA_BAR, "s2": c * OMEGA}))),
            ("u", AngleLine(zeta_pow(10), 0, LinearForm.of({"s1": r * OMEGA, "s2": r * OMEGA_BAR}))),
        ),
    )


# --------------------------------------------------------------------------
# inversion and composition


def invert(m, branch=0):
    """Inverse map; exponential lines pick up the given logarithm branch."""
    lin_sources = [n for n, ln in m.lines if isinstance(ln, LinearForm)]
    touched = []
    for n in lin_sources:
        for v in m.line(n).names():
            if v not in touched:
                touched.append(v)
    touched.sort(key=m.target.index)
    if len(touched) != len(lin_sources):
        raise ValueError("singular linear part: %d variables for %d lines"
                         % (len(touched), len(lin_sources)))
    inv_rows = _invert_matrix(
        [[m.line(n).coeff(v) for v in touched] for n in lin_sources]
    )

    out = {}
    for j, v in enumerate(touched):
        out[v] = LinearForm.of(
            {lin_sources[i]: inv_rows[j][i] for i in range(len(lin_sources))}
        )
    for n, ln in m.lines:
        if isinstance(ln, ScalarLine):
            if ln.var in out:
                raise ValueError("two lines land on %r" % (ln.var,))
            out[ln.var] = ScalarLine(ln.scalar.inv(), n)
        elif isinstance(ln, ExpLine):
            if len(ln.form.terms) != 1:
                raise ValueError(
                    "cannot invert an exponential of the multi-variable form %r"
                    % (ln.form,)
                )
            v, k = ln.form.terms[0]
            if v in out:
                raise ValueError("two lines land on %r" % (v,))
            out[v] = LogLine(k.inv(), ln.phase.inv(), n, branch)
        elif isinstance(ln, (LogLine, AngleLine)):
            raise ValueError("cannot invert a logarithm or angle line")
    missing = [v for v in m.target if v not in out]
    if missing:
        raise ValueError("target variables never hit: %r" % (missing,))
    return CovMap(m.target, m.source, tuple((v, out[v]) for v in m.target), branch)


def _invert_matrix(rows):
    # Gauss-Jordan over the coefficient field
    n = len(rows)
    aug = [list(rows[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("singular linear part")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    # row j of the inverse expresses variable j in terms of the sources
    return [row[n:] for row in aug]


def compose(a, b):
    """The chain 'a then b'; sources of b must be the targets of a."""
    if a.target != b.source:
        raise ValueError(
            "maps do not chain: %r versus %r" % (a.target, b.source)
        )
    lines = tuple((n, _push(ln, b)) for n, ln in a.lines)
    return CovMap(a.source, b.target, lines, a.branch)


def _push(ln, b):
    if isinstance(ln, LinearForm):
        acc = {}
        for v, c in ln.terms:
            img = b.line(v)
            if not isinstance(img, LinearForm):
                raise ValueError("linear line runs into the quantum line of %r" % (v,))
            for w, cw in img.terms:
                acc[w] = acc.get(w, ZERO) + c * cw
        return LinearForm.of(acc)
    if isinstance(ln, ScalarLine):
        img = b.line(ln.var)
        if isinstance(img, ScalarLine):
            return ScalarLine(ln.scalar * img.scalar, img.var)
        if isinstance(img, ExpLine):
            return ExpLine(ln.scalar * img.phase, img.form)
        raise ValueError("cannot rescale the line of %r" % (ln.var,))
    if isinstance(ln, ExpLine):
        return ExpLine(ln.phase, _push(ln.form, b))
    if isinstance(ln, LogLine):
        img = b.line(ln.param)
        if isinstance(img, ScalarLine):
            return LogLine(ln.premult, ln.scalar * img.scalar, img.var, ln.branch)
        if isinstance(img, ExpLine):
            if ln.premult != -I:
                raise ValueError("angle resolution requires premultiplier -i")
            return AngleLine(ln.scalar * img.phase, ln.branch, img.form.scaled(-I))
        raise ValueError("cannot take the logarithm of the line of %r" % (ln.param,))
    raise ValueError("cannot push %r through a further map" % (ln,))


# --------------------------------------------------------------------------
# substitution into series


def apply(m, f, target):
    """Transform a series through the map, exact to the target caps.

    Every variable of f must have a line in m.  Exponential lines expand
    with the phase handled multiplicatively, so the constant term of the
    substituted form stays zero; logarithm and angle lines carry
    transcendental constants and are rejected.
    """
    images = {}
    for name in f.vs.names:
        try:
            ln = m.line(name)
        except KeyError:
            raise ValueError("variable %r not covered by the map" % (name,))
        images[name] = _line_series(ln, target)
    powers = {n: [Series.constant(target, 1), s] for n, s in images.items()}

    def power(name, e):
        seq = powers[name]
        while len(seq) <= e:
            seq.append(seq[-1] * seq[1])
        return seq[e]

    out = Series.zero(target)
    zero_exp = (0,) * len(target.names)
    for e, c in f.terms():
        term = Series(target, {zero_exp: c})
        for name, ev in zip(f.vs.names, e):
            if ev:
                term = term * power(name, ev)
        out = out + term
    return out


def _line_series(ln, target):
    if isinstance(ln, LinearForm):
        return ln.to_series(target)
    if isinstance(ln, ScalarLine):
        return Series.variable(target, ln.var).scale(rf(ln.scalar))
    if isinstance(ln, ExpLine):
        return exp(ln.form.to_series(target)).scale(rf(ln.phase))
    raise ValueError(
        "line %r has a transcendental constant and is no series substitution"
        % (ln,)
    )


# --------------------------------------------------------------------------
# identity verification


def verify_bracket_identity(qmax=8, order=10):
    """Per-degree check that the specialized exponential bracket closes up.

    For each degree d, the carried bracket

        (q e^{z1})^d / d^3 * i^d * (e^{-i d(z2+u)/2} + (-1)^d e^{i d(z2+u)/2}) / 2

    must equal sign(d) * sin or cos of d(z2+u)/2 on the same carrier, with
    sine for odd d and cosine for even d.
    """
    vs = VarSet(("z1", "z2", "q", "u"), (order, order, qmax, order))
    z1 = Series.variable(vs, "z1")
    theta0 = Series.variable(vs, "z2") + Series.variable(vs, "u")
    cases = []
    for d in range(1, qmax + 1):
        carrier = exp(z1.scale(d)) * Series(
            vs, {(0, 0, d, 0): rf(Fraction(1, d**3))}
        )
        theta = theta0.scale(Fraction(d, 2))
        bracket = (
            exp(theta.scale(-I)) + exp(theta.scale(I)).scale((-1) ** d)
        ).scale(I**d * Fraction(1, 2))
        wave = sin(theta) if d % 2 else cos(theta)
        diff = carrier * (bracket - wave.scale(quantum_sign(d)))
        mismatch = None if not diff else list(_first_exponent(diff))
        cases.append(CaseResult("d=%d" % d, not diff, mismatch))
    return SuiteReport("bracket", cases)


def verify_residual_thirdderiv(order=16):
    """The angle-variable identity -G'''(theta) + i/2 = i e^{i theta}/(1 + e^{i theta}).

    The right side is what the degree sum collapses to after three
    derivatives, which is why no analytic continuation is needed at the
    derivative level; theta stands for z2 + u.
    """
    vs = VarSet(("theta",), (order,))
    theta = Series.variable(vs, "theta")
    third = tan(theta.scale(Fraction(1, 2))).scale(Fraction(1, 2))
    lhs = Series.constant(vs, I * Fraction(1, 2)) - third
    e = exp(theta.scale(I))
    rhs = (e * inverse(Series.constant(vs, 1) + e)).scale(I)
    diff = lhs - rhs
    mismatch = None if not diff else list(_first_exponent(diff))
    case = CaseResult("theta-order=%d" % order, not diff, mismatch)
    return SuiteReport("residual", [case])


def _first_exponent(series):
    return min((e for e, _ in series.terms()), key=lambda e: (sum(e), e))


def verify_corollary_composition():
    """Invert the first printed map, chain the second, compare the third."""
    want = build_corollary()
    got = compose(invert(build_cov(), 0), build_covbgp())
    cases = [
        CaseResult("chain", got.source == want.source and got.target == want.target
                   and got.branch == want.branch)
    ]
    for name in want.source:
        cases.append(CaseResult("line %s" % name, got.line(name) == want.line(name)))
    return SuiteReport("corollary-composition", cases)


def verify_corollary_remark():
    """No logarithm branch makes the angle constant vanish.

    The u-line phase after composition is zeta^10 regardless of the branch
    b, and the constant -pi/3 + 2 pi b is never zero; twelve branches are
    checked explicitly.
    """
    cov = build_cov()
    bgp = build_covbgp()
    cases = []
    for b in range(12):
        m = compose(invert(cov, b), bgp)
        uline = m.line("u")
        ok = (
            isinstance(uline, AngleLine)
            and uline.phase == zeta_pow(10)
            and uline.phase != ONE
            and uline.branch == b
            and uline.constant_in_pi() != 0
        )
        cases.append(
            CaseResult(
                "branch=%d" % b,
                ok,
                None,
                {"phase_exponent": phase_exponent(uline.phase),
                 "angle_over_pi": str(uline.constant_in_pi())},
            )
        )
    return SuiteReport("corollary-remark", cases)


def bracket_suite(qmax=8, order=10):
    return verify_bracket_identity(qmax, order)


def residual_suite(order=16):
    return verify_residual_thirdderiv(order)


def corollary_suite():
    comp = verify_corollary_composition()
    rem = verify_corollary_remark()
    return SuiteReport("corollary", comp.cases + rem.cases)
