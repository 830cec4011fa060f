"""Truncated multivariate power series over RatFun with per-variable caps.

A VarSet fixes an ordered tuple of variable names and one truncation cap
per variable. A Series stores only exponents within the caps; arithmetic
silently discards anything beyond a cap and never corrupts what is kept,
so a result is exact to its caps whenever its inputs were.

Caps are per variable rather than total degree: the curve-degree variable
q wants its own bound independent of the analytic orders in the z and u
directions.

Derivatives lower the differentiated variable's cap by one and integrals
raise it, which keeps the exactness guarantee honest in both directions.
"""

from fractions import Fraction

from .cyclotomic import Cyclo
from .ratfun import RF_ONE, RF_ZERO, RatFun, rf


class VarSet:
    __slots__ = ("names", "caps", "_pos")

    def __init__(self, names, caps):
        self.names = tuple(names)
        self.caps = tuple(int(c) for c in caps)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if len(self.caps) != len(self.names):
            raise ValueError("%d names but %d caps" % (len(self.names), len(self.caps)))
        if any(c < 0 for c in self.caps):
            raise ValueError("negative cap")
        self._pos = {n: i for i, n in enumerate(self.names)}

    def index(self, name):
        try:
            return self._pos[name]
        except KeyError:
            raise ValueError("unknown variable %r" % (name,)) from None

    def cap(self, name):
        return self.caps[self.index(name)]

    def with_cap(self, name, cap):
        caps = list(self.caps)
        caps[self.index(name)] = cap
        return VarSet(self.names, caps)

    def __eq__(self, other):
        if not isinstance(other, VarSet):
            return NotImplemented
        return self.names == other.names and self.caps == other.caps

    def __hash__(self):
        return hash((self.names, self.caps))

    def __repr__(self):
        return "VarSet(%r, %r)" % (self.names, self.caps)


class Series:
    __slots__ = ("vs", "_t")

    def __init__(self, vs, terms=None):
        self.vs = vs
        t = {}
        if terms:
            caps = vs.caps
            n = len(caps)
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, c in items:
                exp = tuple(int(e) for e in exp)
                if len(exp) != n:
                    raise ValueError("exponent arity %d, expected %d" % (len(exp), n))
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent %r" % (exp,))
                if any(e > cap for e, cap in zip(exp, caps)):
                    continue
                if not isinstance(c, RatFun):
                    c = rf(c)
                acc = t.get(exp)
                c = c if acc is None else acc + c
                if c:
                    t[exp] = c
                elif exp in t:
                    del t[exp]
        self._t = t

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, vs):
        return cls(vs)

    @classmethod
    def constant(cls, vs, c):
        return cls(vs, {(0,) * len(vs.names): rf(c)})

    @classmethod
    def variable(cls, vs, name):
        exp = [0] * len(vs.names)
        exp[vs.index(name)] = 1
        return cls(vs, {tuple(exp): RF_ONE})

    # -- ring structure ---------------------------------------------------

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.vs == other.vs and self._t == other._t

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check_vs(other)
        out = dict(self._t)
        for exp, c in other._t.items():
            acc = out.get(exp)
            c = c if acc is None else acc + c
            if c:
                out[exp] = c
            elif exp in out:
                del out[exp]
        return self._wrap(out)

    def __neg__(self):
        return self._wrap({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._check_vs(other)
        caps = self.vs.caps
        out = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if any(e > cap for e, cap in zip(exp, caps)):
                    continue
                c = c1 * c2
                acc = out.get(exp)
                c = c if acc is None else acc + c
                if c:
                    out[exp] = c
                elif exp in out:
                    del out[exp]
        return self._wrap(out)

    def scale(self, c):
        c = rf(c)
        if not c:
            return Series(self.vs)
        return self._wrap({e: v * c for e, v in self._t.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series power wants a non-negative integer")
        out = Series.constant(self.vs, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- calculus -----------------------------------------------------------

    def differentiate(self, name):
        i = self.vs.index(name)
        cap = self.vs.caps[i]
        if cap == 0:
            raise ValueError("cannot differentiate %s below cap 0" % name)
        vs2 = self.vs.with_cap(name, cap - 1)
        out = {}
        for exp, c in self._t.items():
            if exp[i]:
                e2 = exp[:i] + (exp[i] - 1,) + exp[i + 1 :]
                out[e2] = c * exp[i]
        return Series(vs2, out)

    def integrate(self, name):
        """Antiderivative in name with zero constant of integration."""
        i = self.vs.index(name)
        vs2 = self.vs.with_cap(name, self.vs.caps[i] + 1)
        out = {}
        for exp, c in self._t.items():
            e2 = exp[:i] + (exp[i] + 1,) + exp[i + 1 :]
            out[e2] = c * Fraction(1, exp[i] + 1)
        return Series(vs2, out)

    # -- structure maps -------------------------------------------------------

    def substitute(self, images, target):
        """Image under variable -> series, a ring homomorphism to caps.

        Substituted images must have zero constant term; variables without
        an image must exist in the target and map to themselves.
        """
        for name in images:
            if name not in self.vs._pos:
                raise ValueError("image given for unknown variable %r" % (name,))
        imgs = []
        for name in self.vs.names:
            s = images.get(name)
            if s is None:
                s = Series.variable(target, name)
            else:
                if s.vs != target:
                    raise ValueError("image of %s lives on %r, expected %r" % (name, s.vs, target))
                if s.constant_term():
                    raise ValueError("image of %s has a nonzero constant term" % name)
            imgs.append(s)
        one = Series.constant(target, 1)
        cache = {}

        def power(i, e):
            key = (i, e)
            got = cache.get(key)
            if got is None:
                got = one if e == 0 else power(i, e - 1) * imgs[i]
                cache[key] = got
            return got

        acc = {}
        for exp, c in self._t.items():
            prod = one
            for i, e in enumerate(exp):
                if e:
                    prod = prod * power(i, e)
            for pe, pc in prod._t.items():
                v = c * pc
                got = acc.get(pe)
                v = v if got is None else got + v
                if v:
                    acc[pe] = v
                elif pe in acc:
                    del acc[pe]
        return Series(target, acc)

    def into(self, target):
        """Recoordinatize on target: reorder/add variables, prune to its caps.

        Every variable of self must either appear in target or appear in no
        retained term. Dropping caps is allowed and truncates.
        """
        spots = [target._pos.get(n) for n in self.vs.names]
        width = len(target.names)
        out = {}
        for exp, c in self._t.items():
            e2 = [0] * width
            for e, spot, name in zip(exp, spots, self.vs.names):
                if spot is None:
                    if e:
                        raise ValueError("variable %s is absent from the target" % name)
                else:
                    e2[spot] = e
            exp2 = tuple(e2)
            if any(e > cap for e, cap in zip(exp2, target.caps)):
                continue
            out[exp2] = c
        return Series(target, out)

    # -- views ------------------------------------------------------------

    def coeff(self, exp):
        exp = tuple(int(e) for e in exp)
        if len(exp) != len(self.vs.names):
            raise ValueError("exponent arity mismatch")
        if any(e > cap or e < 0 for e, cap in zip(exp, self.vs.caps)):
            raise ValueError("exponent %r outside caps %r" % (exp, self.vs.caps))
        return self._t.get(exp, RF_ZERO)

    def coeff_of(self, **exps):
        """coeff by name, unnamed variables at exponent zero."""
        exp = [0] * len(self.vs.names)
        for name, e in exps.items():
            exp[self.vs.index(name)] = e
        return self.coeff(exp)

    def constant_term(self):
        return self._t.get((0,) * len(self.vs.names), RF_ZERO)

    def terms(self):
        return self._t.items()

    def sorted_terms(self):
        return sorted(self._t.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_json(self):
        return {
            "vars": list(self.vs.names),
            "caps": list(self.vs.caps),
            "terms": [
                {"exp": list(exp), "coeff": c.to_json()}
                for exp, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj):
        vs = VarSet(obj["vars"], obj["caps"])
        return cls(
            vs,
            (
                (tuple(t["exp"]), RatFun.from_json(t["coeff"]))
                for t in obj["terms"]
            ),
        )

    def _check_vs(self, other):
        if other.vs != self.vs:
            raise ValueError("variable sets differ: %r vs %r" % (self.vs, other.vs))

    def _wrap(self, terms):
        s = Series.__new__(Series)
        s.vs = self.vs
        s._t = terms
        return s

    def __repr__(self):
        return "Series(%r, %d terms)" % (self.vs, len(self._t))

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mon = "*".join(
                n if e == 1 else "%s^%d" % (n, e)
                for n, e in zip(self.vs.names, exp)
                if e
            )
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]) or "/" in cs:
                cs = "(%s)" % cs
            parts.append((cs + "*" + mon) if mon else cs)
        return " + ".join(parts)


# -- analytic functions of a series -------------------------------------
#
# Each is a finite Taylor sum: the argument has zero constant term, so its
# powers climb in total degree and die at the caps.


def _require_no_constant(f, what):
    if f.constant_term():
        raise ValueError("%s of a series with a nonzero constant term" % what)


def exp(f):
    _require_no_constant(f, "exp")
    out = Series.constant(f.vs, 1)
    term = out
    k = 0
    while True:
        k += 1
        term = (term * f).scale(Fraction(1, k))
        if not term:
            return out
        out = out + term


def sin(f):
    _require_no_constant(f, "sin")
    f2 = f * f
    out = term = f
    k = 1
    while True:
        term = (term * f2).scale(Fraction(-1, (k + 1) * (k + 2)))
        k += 2
        if not term:
            return out
        out = out + term


def cos(f):
    _require_no_constant(f, "cos")
    f2 = f * f
    out = term = Series.constant(f.vs, 1)
    k = 0
    while True:
        term = (term * f2).scale(Fraction(-1, (k + 1) * (k + 2)))
        k += 2
        if not term:
            return out
        out = out + term


_TAN = {1: Fraction(1)}


def _tan_coeff(m):
    """Taylor coefficient of tan at odd order m, from T' = 1 + T^2."""
    got = _TAN.get(m)
    if got is None:
        top = max(_TAN)
        for n in range(top + 2, m + 1, 2):
            s = sum(_TAN[i] * _TAN[n - 1 - i] for i in range(1, n - 1, 2))
            _TAN[n] = s / n
        got = _TAN[m]
    return got


def tan(f):
    _require_no_constant(f, "tan")
    f2 = f * f
    out = fm = f
    m = 1
    while True:
        fm = fm * f2
        m += 2
        if not fm:
            return out
        out = out + fm.scale(_tan_coeff(m))


def inverse(f):
    """Multiplicative inverse; the constant term must be invertible."""
    c = f.constant_term()
    if not c:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    ci = c.inv()
    one = Series.constant(f.vs, 1)
    h = one - f.scale(ci)
    out = hk = one
    while True:
        hk = hk * h
        if not hk:
            return out.scale(ci)
        out = out + hk
