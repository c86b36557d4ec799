"""Exact sparse Laurent polynomials in one and two variables.

Exponents are stored as integers counting *quarter units* of the true
exponent: the bracket polynomial lives in integer powers of A, the Jones
polynomial of an even-component link in half-integer powers of t, and the
writhe-correction factor (-t^{-3/4})^{-w} mixes quarter powers.  A common
denominator of 4 keeps all arithmetic in plain (arbitrary-precision)
integers.  Degree accessors convert back to `Fraction`s.

Coefficients are Python ints, so state sums over 2^20 states cannot
overflow.  Values are immutable after construction and all operations are
pure.
"""

from __future__ import annotations

from fractions import Fraction


class VariableMismatch(ValueError):
    """Raised when combining polynomials over different variables."""


class ZeroPolynomialError(ValueError):
    """Raised when asking for the degree of the zero polynomial."""


def _quarters(exp) -> int:
    """Convert an exponent (int, Fraction, float multiple of 1/4) to quarter units."""
    q = exp * 4
    qi = int(q)
    if qi != q:
        raise ValueError(f"exponent {exp!r} is not a multiple of 1/4")
    return qi


class Laurent:
    """A one-variable Laurent polynomial with integer coefficients.

    `terms` maps quarter-unit exponents to nonzero coefficients.
    """

    __slots__ = ("terms", "var")

    def __init__(self, terms=None, var="t"):
        cleaned = {}
        if terms:
            for q, c in terms.items():
                if c:
                    cleaned[q] = cleaned.get(q, 0) + c
                    if not cleaned[q]:
                        del cleaned[q]
        self.terms = cleaned
        self.var = var

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var="t"):
        return cls({}, var)

    @classmethod
    def one(cls, var="t"):
        return cls({0: 1}, var)

    @classmethod
    def mono(cls, coeff, exp=0, var="t"):
        """coeff * var^exp, with exp an int or Fraction multiple of 1/4."""
        return cls({_quarters(exp): coeff}, var)

    # -- ring structure ------------------------------------------------

    def _check(self, other):
        if self.var != other.var:
            raise VariableMismatch(f"cannot combine {self.var!r} with {other.var!r}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent.mono(other, 0, self.var)
        self._check(other)
        terms = dict(self.terms)
        for q, c in other.terms.items():
            s = terms.get(q, 0) + c
            if s:
                terms[q] = s
            elif q in terms:
                del terms[q]
        return Laurent(terms, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({q: -c for q, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent.mono(other, 0, self.var)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent({q: c * other for q, c in self.terms.items()}, self.var)
        self._check(other)
        out = {}
        for qa, ca in self.terms.items():
            for qb, cb in other.terms.items():
                q = qa + qb
                s = out.get(q, 0) + ca * cb
                if s:
                    out[q] = s
                elif q in out:
                    del out[q]
        return Laurent(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = Laurent.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monomial_mul(self, coeff, exp):
        """Multiply by coeff * var^exp (exp in variable units)."""
        dq = _quarters(exp)
        return Laurent({q + dq: c * coeff for q, c in self.terms.items()}, self.var)

    def shift_quarters(self, dq):
        return Laurent({q + dq: c for q, c in self.terms.items()}, self.var)

    # -- predicates and accessors ---------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.mono(other, 0, self.var)
        return isinstance(other, Laurent) and self.var == other.var and self.terms == other.terms

    def __hash__(self):
        return hash((self.var, frozenset(self.terms.items())))

    def min_deg(self) -> Fraction:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return Fraction(min(self.terms), 4)

    def max_deg(self) -> Fraction:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return Fraction(max(self.terms), 4)

    def span(self) -> Fraction:
        return self.max_deg() - self.min_deg()

    def min_cf(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.terms[min(self.terms)]

    def max_cf(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.terms[max(self.terms)]

    def coeff_at(self, exp) -> int:
        return self.terms.get(_quarters(exp), 0)

    def evaluate(self, value: Fraction) -> Fraction:
        """Evaluate at a rational value (exponents must be integers)."""
        total = Fraction(0)
        for q, c in self.terms.items():
            if q % 4:
                raise ValueError("cannot evaluate fractional powers at a rational point")
            total += c * Fraction(value) ** (q // 4)
        return total

    def reciprocal(self) -> "Laurent":
        """The polynomial with var -> 1/var."""
        return Laurent({-q: c for q, c in self.terms.items()}, self.var)

    def div_exact(self, divisor: "Laurent") -> "Laurent":
        """Exact division; raises ValueError if the division has a remainder."""
        self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return Laurent.zero(self.var)
        num = dict(self.terms)
        out = {}
        dq = max(divisor.terms)
        dc = divisor.terms[dq]
        kmin = min(self.terms) - min(divisor.terms)
        while num:
            q = max(num)
            c = num[q]
            k = q - dq
            if c % dc or k < kmin:
                raise ValueError("polynomial division is not exact")
            f = c // dc
            out[k] = f
            for q2, c2 in divisor.terms.items():
                kk = k + q2
                s = num.get(kk, 0) - f * c2
                if s:
                    num[kk] = s
                elif kk in num:
                    del num[kk]
        return Laurent(out, self.var)

    # -- rendering -------------------------------------------------------

    def _exp_step(self):
        """Coarsest unit (in quarters) in which every exponent is integral."""
        qs = list(self.terms)
        if not qs:
            return 4
        for step in (4, 2, 1):
            if all(q % step == 0 for q in qs):
                return step
        return 1

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for q in sorted(self.terms):
            c = self.terms[q]
            e = Fraction(q, 4)
            if e == 0:
                bits.append(f"{c:+d}")
            else:
                es = str(e) if e.denominator == 1 else f"({e})"
                if c == 1:
                    bits.append(f"+{self.var}^{es}")
                elif c == -1:
                    bits.append(f"-{self.var}^{es}")
                else:
                    bits.append(f"{c:+d}{self.var}^{es}")
        s = " ".join(bits)
        return s[1:] if s.startswith("+") else s

    def __repr__(self):
        return f"Laurent({self}, var={self.var!r})"

    def coeff_list_str(self):
        """Coefficient-list notation with the absolute term bracketed: (-3 [1] 2).

        Only defined when the exponents lie on an integer lattice containing 0;
        falls back to the monomial form otherwise.
        """
        if not self.terms:
            return "([0])"
        step = self._exp_step()
        lo, hi = min(self.terms), max(self.terms)
        if any(q % step for q in (lo, hi)) or 0 % step:
            return str(self)
        lo, hi = min(lo, 0), max(hi, 0)
        parts = []
        for q in range(lo, hi + step, step):
            c = self.terms.get(q, 0)
            parts.append(f"[{c}]" if q == 0 else str(c))
        return "(" + " ".join(parts) + ")"

    def to_json(self):
        return [[q, str(self.terms[q])] for q in sorted(self.terms)]

    @classmethod
    def from_json(cls, data, var="t"):
        return cls({int(q): int(c) for q, c in data}, var)


class Laurent2:
    """A two-variable Laurent polynomial; terms map (q_l, q_m) quarter-exponent
    pairs to nonzero integer coefficients."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms=None, vars=("l", "m")):
        cleaned = {}
        if terms:
            for k, c in terms.items():
                if c:
                    cleaned[k] = cleaned.get(k, 0) + c
                    if not cleaned[k]:
                        del cleaned[k]
        self.terms = cleaned
        self.vars = tuple(vars)

    @classmethod
    def zero(cls, vars=("l", "m")):
        return cls({}, vars)

    @classmethod
    def one(cls, vars=("l", "m")):
        return cls({(0, 0): 1}, vars)

    @classmethod
    def mono(cls, coeff, exp1=0, exp2=0, vars=("l", "m")):
        return cls({(_quarters(exp1), _quarters(exp2)): coeff}, vars)

    def _check(self, other):
        if self.vars != other.vars:
            raise VariableMismatch(f"cannot combine {self.vars} with {other.vars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent2.mono(other, 0, 0, self.vars)
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            elif k in terms:
                del terms[k]
        return Laurent2(terms, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return Laurent2({k: -c for k, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent2.mono(other, 0, 0, self.vars)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent2({k: c * other for k, c in self.terms.items()}, self.vars)
        self._check(other)
        out = {}
        for (qa, ra), ca in self.terms.items():
            for (qb, rb), cb in other.terms.items():
                k = (qa + qb, ra + rb)
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return Laurent2(out, self.vars)

    __rmul__ = __mul__

    def monomial_mul(self, coeff, exp1, exp2):
        d1, d2 = _quarters(exp1), _quarters(exp2)
        return Laurent2({(q + d1, r + d2): c * coeff for (q, r), c in self.terms.items()},
                        self.vars)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent2.mono(other, 0, 0, self.vars)
        return (isinstance(other, Laurent2) and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def min_deg(self, which) -> Fraction:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        i = self.vars.index(which)
        return Fraction(min(k[i] for k in self.terms), 4)

    def max_deg(self, which) -> Fraction:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        i = self.vars.index(which)
        return Fraction(max(k[i] for k in self.terms), 4)

    def coeff_at(self, exp1, exp2) -> int:
        return self.terms.get((_quarters(exp1), _quarters(exp2)), 0)

    def __str__(self):
        if not self.terms:
            return "0"
        v1, v2 = self.vars
        bits = []
        for q, r in sorted(self.terms):
            c = self.terms[(q, r)]
            fac = []
            for v, e4 in ((v1, q), (v2, r)):
                if e4:
                    e = Fraction(e4, 4)
                    es = str(e) if e.denominator == 1 else f"({e})"
                    fac.append(f"{v}^{es}")
            mono = "*".join(fac)
            if not mono:
                bits.append(f"{c:+d}")
            elif c == 1:
                bits.append(f"+{mono}")
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c:+d}*{mono}")
        s = " ".join(bits)
        return s[1:] if s.startswith("+") else s

    def __repr__(self):
        return f"Laurent2({self}, vars={self.vars})"

    def to_json(self):
        return [[q, r, str(self.terms[(q, r)])] for q, r in sorted(self.terms)]

    @classmethod
    def from_json(cls, data, vars=("l", "m")):
        return cls({(int(q), int(r)): int(c) for q, r, c in data}, vars)


class ImaginaryResidueError(ValueError):
    """A HOMFLY substitution left a nonzero imaginary part: the input was not
    the skein polynomial of a link."""


def _binomial_power(base_lo_q, base_hi_q, lo_c, hi_c, n, var, _cache={}):
    """(lo_c * var^(base_lo_q/4) + hi_c * var^(base_hi_q/4)) ** n, cached."""
    key = (base_lo_q, base_hi_q, lo_c, hi_c, n, var)
    if key not in _cache:
        base = Laurent({base_lo_q: lo_c, base_hi_q: hi_c}, var)
        _cache[key] = base ** n
    return _cache[key]


def _substitute_imaginary(poly, l_tpow_q, m_lo_q, m_hi_q, m_lo_c, m_hi_c,
                          l_sign_flip, var):
    """Evaluate P(l, m) at l = (unit) * t^(l_tpow_q/4) and
    m = i * u, u = m_lo_c t^(m_lo_q/4) + m_hi_c t^(m_hi_q/4),
    where the l-unit is -i when l_sign_flip else i.

    Powers of i are tracked modulo 4 so all arithmetic stays in integers;
    negative m-powers (present for even-component links) are cleared by
    multiplying through with u^B and dividing back exactly at the end.
    Raises if the imaginary part is nonzero.
    """
    if not poly.terms:
        return Laurent.zero(var)
    bmin = 0
    for (ql, qm) in poly.terms:
        if ql % 4 or qm % 4:
            raise ValueError("HOMFLY input must have integer exponents")
        bmin = min(bmin, qm // 4)
    B = -bmin
    real = {}
    imag = {}
    for (ql, qm), c in poly.terms.items():
        a, b = ql // 4, qm // 4
        ipow = (a + b) % 4
        sign = -1 if (l_sign_flip and a % 2) else 1
        tail = _binomial_power(m_lo_q, m_hi_q, m_lo_c, m_hi_c, b + B, var)
        target, unit = {
            0: (real, 1), 1: (imag, 1), 2: (real, -1), 3: (imag, -1),
        }[ipow]
        shift = a * l_tpow_q
        cc = c * sign * unit
        for q, tc in tail.terms.items():
            k = q + shift
            s = target.get(k, 0) + cc * tc
            if s:
                target[k] = s
            elif k in target:
                del target[k]
    if imag:
        raise ImaginaryResidueError(
            "substitution left imaginary terms; input is not a link polynomial")
    result = Laurent(real, var)
    if B:
        u_B = _binomial_power(m_lo_q, m_hi_q, m_lo_c, m_hi_c, B, var)
        result = result.div_exact(u_B)
    return result


def homfly_to_jones(poly: Laurent2) -> Laurent:
    """V(t) = P(-i t, i (t^{-1/2} - t^{1/2})), evaluated exactly."""
    return _substitute_imaginary(poly, l_tpow_q=4, m_lo_q=-2, m_hi_q=2,
                                 m_lo_c=1, m_hi_c=-1, l_sign_flip=True, var="t")


def homfly_to_alexander(poly: Laurent2) -> Laurent:
    """Delta(t) = P(i, i (t^{1/2} - t^{-1/2})), up to units in Z[t, 1/t].

    The result is returned raw; normalizations live in the skein module.
    """
    return _substitute_imaginary(poly, l_tpow_q=0, m_lo_q=-2, m_hi_q=2,
                                 m_lo_c=-1, m_hi_c=1, l_sign_flip=False, var="t")


# Aliases matching the operation names used throughout the project docs.
substitute_homfly_to_jones = homfly_to_jones
substitute_homfly_to_alexander = homfly_to_alexander
