r"""Exact scalar arithmetic.

Four coefficient types used everywhere downstream:

* ``Rational``       -- arbitrary-precision rationals (``fractions.Fraction``),
* ``QPoly``          -- polynomials in q over the rationals,
* ``QTRational``     -- reduced fractions of polynomials in (q, t),
* ``QSeries``        -- q-power series truncated at an explicit cap.

All arithmetic is exact; there is no floating point anywhere.  A
``QTRational`` is kept in a canonical reduced form (gcd-free, content
normalized, denominator's lexicographically-leading coefficient equal to 1
for the order q < t), so structural equality decides mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ExactError(ArithmeticError):
    pass


class ZeroDenominatorError(ExactError):
    """Raised on division by the zero rational function."""


class DivergentLimitError(ExactError):
    """Raised when a t -> 0 or t -> oo limit does not exist.

    Carries the offending t-valuations (or t-degrees) of numerator and
    denominator so the failure is diagnosable.
    """

    def __init__(self, message, num_val=None, den_val=None):
        super().__init__(message)
        self.num_val = num_val
        self.den_val = den_val


class DivergentPochhammerError(ExactError):
    """Raised for (a; q)_oo when infinitely many factors differ from 1."""


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _coeff(x):
    """Normalize a polynomial coefficient: integers stay machine integers
    (int and Fraction hash and compare consistently), non-integral rationals
    stay Fractions."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _exact_scalar_div(a, b):
    v = Fraction(a.numerator * b.denominator, a.denominator * b.numerator)         if not (isinstance(a, int) and isinstance(b, int)) else Fraction(a, b)
    return v.numerator if v.denominator == 1 else v


# ---------------------------------------------------------------------------
# univariate polynomials in q
# ---------------------------------------------------------------------------

class QPoly:
    """Polynomial in q with rational coefficients, dense representation.

    ``coeffs[i]`` is the coefficient of q^i; no trailing zeros are stored,
    and the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def gen(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def valuation(self):
        if self.is_zero:
            raise ExactError("valuation of zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return QPoly((other,)) - self

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            other = QPoly((other,))
        if self.is_zero or other.is_zero:
            return QPoly(())
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = _coeff(c)
        return QPoly(tuple(x * c for x in self.coeffs))

    def shift(self, k):
        """Multiply by q^k (k >= 0)."""
        if self.is_zero:
            return self
        return QPoly((0,) * k + self.coeffs)

    def divmod(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree(), other.coeffs[-1]
        quo = [0] * max(0, len(rem) - db)
        while len(rem) - 1 >= db and rem:
            if rem[-1] == 0:
                rem.pop()
                continue
            k = len(rem) - 1 - db
            f = rem[-1] if lb == 1 else _exact_scalar_div(rem[-1], lb)
            quo[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return QPoly(quo), QPoly(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ExactError("inexact polynomial division")
        return q

    def gcd(self, other):
        """Monic gcd over the rationals (integer primitive remainders)."""
        a, b = _int_prim(self), _int_prim(other)
        if a is None:
            a = b
            b = None
        if a is None:
            return QPoly.zero()
        while b:
            if len(b) > len(a):
                a, b = b, a
            # primitive pseudo-remainder
            r = list(a)
            lb = b[-1]
            while len(r) >= len(b) and r:
                if r[-1] == 0:
                    r.pop()
                    continue
                lr = r[-1]
                g = _gcd_int(lr, lb)
                m1, m2 = lb // g, lr // g
                k = len(r) - len(b)
                for i in range(len(r)):
                    r[i] *= m1
                for i, c in enumerate(b):
                    r[k + i] -= m2 * c
                while r and r[-1] == 0:
                    r.pop()
            a, b = b, (_prim_int_list(r) if r else None)
        if a[-1] < 0:
            a = [-c for c in a]
        return QPoly(a).scale(Fraction(1, a[-1]) if a[-1] != 1 else 1)

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reversed_q(self):
        """q^deg * p(1/q); the zero polynomial maps to itself."""
        return QPoly(tuple(reversed(self.coeffs)))

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{head}q" + (f"^{i}" if i > 1 else ""))
        return " + ".join(parts).replace("+ -", "- ")


def _gcd_int(a, b):
    import math
    return math.gcd(a, b) or 1


def _prim_int_list(coeffs):
    import math
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    if g == 0:
        return None
    return [c // g for c in coeffs]


def _int_prim(p):
    """Integer primitive coefficient list of a QPoly, or None for zero."""
    if p.is_zero:
        return None
    from math import gcd, lcm
    den = 1
    for c in p.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    return _prim_int_list(ints)


def qq_pochhammer_poly(m):
    """(q; q)_m as a QPoly."""
    p = QPoly.one()
    for i in range(1, m + 1):
        p = p * QPoly((1,) + (0,) * (i - 1) + (-1,))
    return p


def gaussian_binomial(m, a):
    """The Gaussian binomial [m choose a]_q as a QPoly."""
    if a < 0 or a > m:
        return QPoly.zero()
    num = QPoly.one()
    for i in range(m - a + 1, m + 1):
        num = num * QPoly((1,) + (0,) * (i - 1) + (-1,))
    return num.exact_div(qq_pochhammer_poly(a))


# ---------------------------------------------------------------------------
# bivariate polynomials in (q, t): dense in t with QPoly coefficients
# ---------------------------------------------------------------------------

class QTPoly:
    """Polynomial in (q, t) stored as a tuple of QPoly indexed by t-degree."""

    __slots__ = ("tcoeffs",)

    def __init__(self, tcoeffs=()):
        cs = [c if isinstance(c, QPoly) else QPoly((c,)) for c in tcoeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.tcoeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((QPoly.one(),))

    @classmethod
    def q(cls):
        return cls((QPoly.gen(),))

    @classmethod
    def t(cls):
        return cls((QPoly.zero(), QPoly.one()))

    @classmethod
    def from_qpoly(cls, p):
        return cls((p,))

    @classmethod
    def term(cls, c, i, j):
        """c * q^i * t^j."""
        return cls((QPoly.zero(),) * j + (QPoly.monomial(i, c),))

    @classmethod
    def one_minus_qt(cls, a, d):
        """1 - q^a t^d with a >= 0, d >= 0."""
        if d == 0:
            return cls((QPoly.one() - QPoly.monomial(a),))
        return cls((QPoly.one(),) + (QPoly.zero(),) * (d - 1) + (QPoly.monomial(a, -1),))

    @property
    def is_zero(self):
        return not self.tcoeffs

    def tdegree(self):
        return len(self.tcoeffs) - 1

    def qdegree(self):
        return max((c.degree() for c in self.tcoeffs if not c.is_zero), default=-1)

    def tvaluation(self):
        if self.is_zero:
            raise ExactError("t-valuation of zero polynomial")
        for j, c in enumerate(self.tcoeffs):
            if not c.is_zero:
                return j
        raise AssertionError

    def tcoeff(self, j):
        if 0 <= j < len(self.tcoeffs):
            return self.tcoeffs[j]
        return QPoly.zero()

    def __add__(self, other):
        a, b = self.tcoeffs, other.tcoeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return QTPoly(out)

    def __neg__(self):
        return QTPoly(tuple(-c for c in self.tcoeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return QTPoly(())
        a, b = self.tcoeffs, other.tcoeffs
        out = [QPoly.zero()] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca.is_zero:
                continue
            for j, cb in enumerate(b):
                if not cb.is_zero:
                    out[i + j] = out[i + j] + ca * cb
        return QTPoly(out)

    def __pow__(self, n):
        result = QTPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_qpoly(self, p):
        return QTPoly(tuple(c * p for c in self.tcoeffs))

    def scale(self, c):
        c = _coeff(c)
        return QTPoly(tuple(x.scale(c) for x in self.tcoeffs))

    def shift_t(self, k):
        if self.is_zero:
            return self
        return QTPoly((QPoly.zero(),) * k + self.tcoeffs)

    def content_q(self):
        """Monic gcd over Q[q] of all t-coefficients."""
        g = QPoly.zero()
        for c in self.tcoeffs:
            g = g.gcd(c)
            if g.degree() == 0:
                break
        return g

    def primitive_t(self):
        g = self.content_q()
        if g.is_zero or g == QPoly.one():
            return self
        return QTPoly(tuple(c.exact_div(g) for c in self.tcoeffs))

    def exact_div_qpoly(self, p):
        return QTPoly(tuple(c.exact_div(p) for c in self.tcoeffs))

    def exact_div(self, other):
        """Exact division in (Q[q])[t]; raises if not divisible."""
        if other.is_zero:
            raise ZeroDivisionError
        rem = list(self.tcoeffs)
        db = other.tdegree()
        lb = other.tcoeffs[-1]
        quo = [QPoly.zero()] * max(0, len(rem) - db)
        while len(rem) - 1 >= db and rem:
            if rem[-1].is_zero:
                rem.pop()
                continue
            k = len(rem) - 1 - db
            f = rem[-1].exact_div(lb)
            quo[k] = f
            for i, c in enumerate(other.tcoeffs):
                rem[k + i] = rem[k + i] - f * c
            rem.pop()
        if any(not c.is_zero for c in rem):
            raise ExactError("inexact (q,t)-polynomial division")
        return QTPoly(quo)

    def eval_t0(self):
        return self.tcoeff(0)

    def eval_qt(self, qv, tv):
        qv, tv = _frac(qv), _frac(tv)
        acc = Fraction(0)
        for c in reversed(self.tcoeffs):
            acc = acc * tv + c(qv)
        return acc

    def lex_leading(self):
        """(t-degree, q-degree, coefficient) of the lex-leading term, q < t."""
        if self.is_zero:
            raise ExactError("leading term of zero polynomial")
        j = self.tdegree()
        c = self.tcoeffs[j]
        return j, c.degree(), c.coeffs[-1]

    def monomials(self):
        for j, c in enumerate(self.tcoeffs):
            for i, x in enumerate(c.coeffs):
                if x != 0:
                    yield (i, j, x)

    def __eq__(self, other):
        if isinstance(other, QTPoly):
            return self.tcoeffs == other.tcoeffs
        return NotImplemented

    def __hash__(self):
        return hash(("QTPoly", self.tcoeffs))

    def __repr__(self):
        return f"QTPoly({[str(c) for c in self.tcoeffs]})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for j, c in enumerate(self.tcoeffs):
            if c.is_zero:
                continue
            if j == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*t" + (f"^{j}" if j > 1 else ""))
        return " + ".join(parts)


def _pseudo_rem_t(a, b):
    """Pseudo-remainder of a by b in (Q[q])[t]."""
    db = b.tdegree()
    lb = b.tcoeffs[-1]
    r = a
    while not r.is_zero and r.tdegree() >= db:
        s = r.tcoeffs[-1]
        k = r.tdegree() - db
        r = r.scale_qpoly(lb) - b.shift_t(k).scale_qpoly(s)
    return r


def _t_parts_coprime(a, b):
    """True when the t-primitive parts of a, b are provably coprime, by a
    gcd of the specializations at a random rational q (sound: for q0 with a
    nonvanishing t-leading coefficient, the specialized gcd degree bounds
    the true gcd degree from above)."""
    for q0 in (Fraction(3, 2), Fraction(-5, 7), Fraction(11, 4)):
        la = a.tcoeffs[-1](q0)
        lb = b.tcoeffs[-1](q0)
        if la == 0 and lb == 0:
            continue
        fa = QPoly([c(q0) for c in a.tcoeffs])
        fb = QPoly([c(q0) for c in b.tcoeffs])
        if fa.gcd(fb).degree() == 0:
            return True
        return False
    return False


def qtpoly_gcd(a, b):
    """Gcd in Q[q, t] via the Euclidean algorithm in (Q(q))[t].

    Computed fraction-free with primitive pseudo-remainder sequences and a
    separate gcd of q-contents; a coprimality certificate by specialization
    short-circuits the common case.
    """
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    ca, cb = a.content_q(), b.content_q()
    cont = ca.gcd(cb)
    pa, pb = a.primitive_t(), b.primitive_t()
    if pa.tdegree() > 0 and pb.tdegree() > 0 and _t_parts_coprime(pa, pb):
        g = QTPoly.one()
        return g.scale_qpoly(cont) if cont != QPoly.one() else g
    if pa.tdegree() < pb.tdegree():
        pa, pb = pb, pa
    while not pb.is_zero:
        r = _pseudo_rem_t(pa, pb)
        pa, pb = pb, (r.primitive_t() if not r.is_zero else r)
    g = pa.primitive_t()
    # normalize: q-leading coefficient of t-leading QPoly equal to 1
    lead = g.tcoeffs[-1].coeffs[-1]
    if lead != 1:
        g = g.scale(1 / lead)
    return g.scale_qpoly(cont) if cont != QPoly.one() else g


# ---------------------------------------------------------------------------
# rational functions in (q, t)
# ---------------------------------------------------------------------------

class QTRational:
    """Reduced fraction of (q, t)-polynomials.

    Canonical form: num/den gcd-free, denominator's lex-leading coefficient
    (order q < t) equal to 1.  Structural equality then decides mathematical
    equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den, _normalized=False):
        if _normalized:
            self.num = num
            self.den = den
            return
        f = normalize_qt(num, den)
        self.num = f.num
        self.den = f.den

    @classmethod
    def zero(cls):
        return cls(QTPoly.zero(), QTPoly.one(), _normalized=True)

    @classmethod
    def one(cls):
        return cls(QTPoly.one(), QTPoly.one(), _normalized=True)

    @classmethod
    def q(cls):
        return cls(QTPoly.q(), QTPoly.one(), _normalized=True)

    @classmethod
    def t(cls):
        return cls(QTPoly.t(), QTPoly.one(), _normalized=True)

    @classmethod
    def from_int(cls, n):
        return cls(QTPoly((QPoly((n,)),)), QTPoly.one(), _normalized=True)

    @classmethod
    def from_qtpoly(cls, p):
        return cls(p, QTPoly.one())

    @property
    def is_zero(self):
        return self.num.is_zero

    def __add__(self, other):
        other = _coerce_qtr(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        num = self.num * other.den + other.num * self.den
        return QTRational(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QTRational(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-_coerce_qtr(other))

    def __rsub__(self, other):
        return _coerce_qtr(other) + (-self)

    def __mul__(self, other):
        other = _coerce_qtr(other)
        if self.is_zero or other.is_zero:
            return QTRational.zero()
        return QTRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_qtr(other)
        if other.is_zero:
            raise ZeroDenominatorError("division by zero rational function")
        return QTRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_qtr(other) / self

    def inverse(self):
        if self.is_zero:
            raise ZeroDenominatorError("division by zero rational function")
        return QTRational(self.den, self.num)

    def eval_qt(self, qv, tv):
        d = self.den.eval_qt(qv, tv)
        if d == 0:
            raise ZeroDenominatorError("denominator vanishes at evaluation point")
        return self.num.eval_qt(qv, tv) / d

    def subs_t0(self):
        """Substitute t = 0 (denominator must not vanish at t = 0)."""
        d0 = self.den.tcoeff(0)
        if d0.is_zero:
            raise DivergentLimitError("denominator vanishes at t=0",
                                      num_val=None, den_val=self.den.tvaluation())
        return QTRational(QTPoly((self.num.tcoeff(0),)), QTPoly((d0,)))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QTPoly)):
            other = _coerce_qtr(other)
        if isinstance(other, QTRational):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash(("QTRational", self.num.tcoeffs, self.den.tcoeffs))

    def __repr__(self):
        if self.den == QTPoly.one():
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"


def _coerce_qtr(x):
    if isinstance(x, QTRational):
        return x
    if isinstance(x, QTPoly):
        return QTRational.from_qtpoly(x)
    if isinstance(x, QPoly):
        return QTRational.from_qtpoly(QTPoly((x,)))
    if isinstance(x, (int, Fraction)):
        return QTRational(QTPoly((QPoly((x,)),)), QTPoly.one())
    raise TypeError(f"cannot coerce {type(x)} to QTRational")


def normalize_qt(num, den):
    """Canonical reduced representative of num/den in Q(q, t).

    Satisfies normalize_qt(a*c, b*c) == normalize_qt(a, b) for nonzero c.
    """
    if den.is_zero:
        raise ZeroDenominatorError("division by zero rational function")
    if num.is_zero:
        return QTRational(QTPoly.zero(), QTPoly.one(), _normalized=True)
    g = qtpoly_gcd(num, den)
    if g.tdegree() > 0 or g.qdegree() > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    # unit normalization: denominator's lex-leading coefficient = 1
    _, _, lead = den.lex_leading()
    if lead != 1:
        inv = Fraction(1) / _frac(lead)
        num = num.scale(inv)
        den = den.scale(inv)
    return QTRational(num, den, _normalized=True)


def limit_t(f, direction):
    """Exact limit of f in Q(q, t) as t -> 0 ('zero') or t -> oo ('infinity').

    Returns a QTRational free of t.  Raises DivergentLimitError, carrying the
    offending valuations, when the limit does not exist.
    """
    if f.is_zero:
        return QTRational.zero()
    if direction == "zero":
        vn, vd = f.num.tvaluation(), f.den.tvaluation()
        if vn < vd:
            raise DivergentLimitError(
                f"t->0 limit diverges: numerator t-valuation {vn} < denominator {vd}",
                num_val=vn, den_val=vd)
        if vn > vd:
            return QTRational.zero()
        return QTRational(QTPoly((f.num.tcoeff(vn),)), QTPoly((f.den.tcoeff(vd),)))
    if direction == "infinity":
        dn, dd = f.num.tdegree(), f.den.tdegree()
        if dn > dd:
            raise DivergentLimitError(
                f"t->oo limit diverges: numerator t-degree {dn} > denominator {dd}",
                num_val=dn, den_val=dd)
        if dn < dd:
            return QTRational.zero()
        return QTRational(QTPoly((f.num.tcoeff(dn),)), QTPoly((f.den.tcoeff(dd),)))
    raise ValueError(f"unknown limit direction {direction!r}")


def invert_q(f, invert_t=False):
    """Substitute q -> 1/q (and optionally t -> 1/t), clearing negative powers.

    Involutive: invert_q(invert_q(f)) == f.
    """
    if f.is_zero:
        return f

    def rev(p):
        # q-reversal of every t-coefficient against the global q-degree of p
        dq = p.qdegree()
        out = []
        for c in p.tcoeffs:
            if c.is_zero:
                out.append(c)
            else:
                out.append(QPoly(tuple(reversed(c.coeffs)) + (0,) * 0).shift(dq - c.degree()))
        # the reversal of coefficient c of degree d is q^(dq-d) * rev(c)
        return QTPoly(out)

    num, den = f.num, f.den
    n2, d2 = rev(num), rev(den)
    dn, dd = num.qdegree(), den.qdegree()
    # f(1/q) = (q^dd / q^dn) * n2 / d2
    if dd >= dn:
        n2 = n2.scale_qpoly(QPoly.monomial(dd - dn))
    else:
        d2 = d2.scale_qpoly(QPoly.monomial(dn - dd))
    if invert_t:
        tn, td = n2.tdegree(), d2.tdegree()
        n2 = QTPoly(tuple(reversed(n2.tcoeffs)))
        d2 = QTPoly(tuple(reversed(d2.tcoeffs)))
        if td >= tn:
            n2 = n2.shift_t(td - tn)
        else:
            d2 = d2.shift_t(tn - td)
    return QTRational(n2, d2)


# ---------------------------------------------------------------------------
# truncated q-series
# ---------------------------------------------------------------------------

class QSeries:
    """q-power series truncated at cap K: coefficients of q^0 .. q^K.

    Arithmetic between series of caps K1, K2 yields cap min(K1, K2);
    coefficients above the cap are never consulted.
    """

    __slots__ = ("cap", "coeffs")

    def __init__(self, cap, coeffs=()):
        if cap < 0:
            raise ValueError("cap must be >= 0")
        self.cap = cap
        cs = [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c
              for c in list(coeffs)[: cap + 1]]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, cap):
        return cls(cap, ())

    @classmethod
    def one(cls, cap):
        return cls(cap, (1,))

    @classmethod
    def from_qpoly(cls, p, cap):
        return cls(cap, p.coeffs)

    @classmethod
    def from_int(cls, n, cap):
        return cls(cap, (n,))

    @property
    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def _meet(self, other):
        return min(self.cap, other.cap)

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries.from_int(other, self.cap)
        cap = self._meet(other)
        n = cap + 1
        a, b = self.coeffs[:n], other.coeffs[:n]
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QSeries(cap, out)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.cap, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = QSeries.from_int(other, self.cap)
        return self + (-other)

    def __rsub__(self, other):
        return QSeries.from_int(other, self.cap) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.cap, tuple(c * other for c in self.coeffs))
        cap = self._meet(other)
        if self.is_zero or other.is_zero:
            return QSeries.zero(cap)
        out = [0] * (cap + 1)
        for i, ca in enumerate(self.coeffs):
            if i > cap:
                break
            if ca == 0:
                continue
            top = min(len(other.coeffs), cap + 1 - i)
            for j in range(top):
                cb = other.coeffs[j]
                if cb:
                    out[i + j] += ca * cb
        return QSeries(cap, out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by q^k."""
        return QSeries(self.cap, (0,) * k + self.coeffs)

    def inverse(self):
        """Multiplicative inverse; constant term must be a unit (nonzero)."""
        c0 = self[0]
        if c0 == 0:
            raise ExactError("series not invertible: zero constant term")
        inv0 = c0 if isinstance(c0, int) and abs(c0) == 1 else Fraction(1) / c0
        out = [inv0] + [0] * self.cap
        for k in range(1, self.cap + 1):
            s = 0
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                s += self[j] * out[k - j]
            out[k] = -inv0 * s
        return QSeries(self.cap, out)

    def truncate(self, cap):
        return QSeries(cap, self.coeffs)

    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self.cap == other.cap and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == QSeries.from_int(other, self.cap)
        return NotImplemented

    def __hash__(self):
        return hash(("QSeries", self.cap, self.coeffs))

    def __repr__(self):
        return f"QSeries(cap={self.cap}, {list(self.coeffs)})"


def geometric_series(exponent, cap):
    """1 / (1 - q^exponent) truncated at cap; exponent >= 1."""
    if exponent < 1:
        raise ExactError("geometric series needs exponent >= 1")
    out = [0] * (cap + 1)
    for k in range(0, cap + 1, exponent):
        out[k] = 1
    return QSeries(cap, out)


def pochhammer_qq_series(m, cap):
    """(q; q)_m as a truncated series."""
    return QSeries.from_qpoly(qq_pochhammer_poly(m), cap)


def inv_pochhammer_qq(m, cap):
    """1 / (q; q)_m truncated at cap."""
    return pochhammer_qq_series(m, cap).inverse()


def qseries_from_qtrational(f, cap):
    """Expand a t-free QTRational as a truncated q-series."""
    if f.is_zero:
        return QSeries.zero(cap)
    if f.num.tdegree() > 0 or f.den.tdegree() > 0:
        raise ExactError("QTRational involves t; cannot expand as q-series")
    num = QSeries.from_qpoly(f.num.tcoeff(0), cap)
    den = QSeries.from_qpoly(f.den.tcoeff(0), cap)
    if den[0] == 0:
        raise ExactError("q-series expansion needs nonzero constant term in denominator")
    return num * den.inverse()
