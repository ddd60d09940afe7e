"""Polynomials in the Tate class L with symbolic integer coefficients.

Coefficients live in the group of integer-linear combinations of
{1, eps, r, eA4}; the three symbols are the unresolved numeric inputs kept
symbolic throughout.  Only multiplication by plain integers is defined, which
is all the ledger ever needs.
"""

from fractions import Fraction

SYMBOLS = ("eps", "r", "eA4")
ONE = "1"


class Coeff:
    """Integer-linear combination of {1, eps, r, eA4}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for k, v in (terms or {}).items():
            if v:
                t[k] = v
        self.terms = t

    @staticmethod
    def of(n):
        if isinstance(n, Coeff):
            return n
        return Coeff({ONE: int(n)})

    @staticmethod
    def sym(name, mult=1):
        if name not in SYMBOLS:
            raise ValueError(f"unknown symbol {name}")
        return Coeff({name: mult})

    def __add__(self, other):
        other = Coeff.of(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return Coeff(t)

    __radd__ = __add__

    def __neg__(self):
        return Coeff({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-Coeff.of(other))

    def __rsub__(self, other):
        return Coeff.of(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, Coeff):
            if other.is_constant():
                other = other.constant()
            elif self.is_constant():
                self, other = other, self.constant()
            else:
                raise ValueError("product of two symbolic coefficients")
        return Coeff({k: v * other for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.terms == Coeff.of(other).terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return set(self.terms) <= {ONE}

    def constant(self):
        return self.terms.get(ONE, 0)

    def substitute(self, **values):
        t = dict(self.terms)
        const = t.pop(ONE, 0)
        left = {}
        for k, v in t.items():
            if k in values:
                const += v * values[k]
            else:
                left[k] = v
        left[ONE] = const
        return Coeff(left)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in (ONE,) + SYMBOLS:
            v = self.terms.get(k, 0)
            if not v:
                continue
            if k == ONE:
                parts.append(f"{v}")
            elif v == 1:
                parts.append(k)
            elif v == -1:
                parts.append(f"-{k}")
            else:
                parts.append(f"{v}*{k}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__


class TatePoly:
    """Finitely supported map L-exponent -> Coeff, with exact arithmetic."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        for k, v in (coeffs or {}).items():
            v = Coeff.of(v)
            if v:
                c[int(k)] = v
        self.coeffs = c

    @staticmethod
    def zero():
        return TatePoly()

    @staticmethod
    def L(power=1, mult=1):
        return TatePoly({power: Coeff.of(mult)})

    @staticmethod
    def const(n):
        return TatePoly({0: Coeff.of(n)})

    def __add__(self, other):
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, Coeff()) + v
        return TatePoly(c)

    def __sub__(self, other):
        return self + other.negate()

    def negate(self):
        return TatePoly({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Coeff)):
            return TatePoly({k: v * other for k, v in self.coeffs.items()})
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, Coeff()) + v1 * v2
        return TatePoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TatePoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted((k, hash(v)) for k, v in self.coeffs.items())))

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def coeff(self, k):
        return self.coeffs.get(k, Coeff())

    def eval_at_one(self):
        out = Coeff()
        for v in self.coeffs.values():
            out = out + v
        return out

    def duality(self, n):
        """Substitution L -> 1/L with degree shift n: coeff of L^k -> L^(n-k)."""
        return TatePoly({n - k: v for k, v in self.coeffs.items()})

    def substitute(self, **values):
        return TatePoly({k: v.substitute(**values) for k, v in self.coeffs.items()})

    def to_json(self):
        return {"coeffs": {str(k): dict(v.terms) for k, v in sorted(self.coeffs.items())}}

    @staticmethod
    def from_json(obj):
        return TatePoly({int(k): Coeff(v) for k, v in obj["coeffs"].items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            v = self.coeffs[k]
            mono = "L" if k == 1 else (f"L^{k}" if k else "")
            if v.is_constant():
                n = v.constant()
                if not mono:
                    parts.append(f"{n}")
                elif n == 1:
                    parts.append(mono)
                elif n == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{n}*{mono}")
            else:
                s = str(v)
                parts.append(f"({s})*{mono}" if mono else f"({s})")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    __repr__ = __str__


def parse_tatepoly(s):
    """Parse strings like 'L^4 + 1', 'L^2 - L', '-L^3 + 2*L'. Constants only."""
    s = s.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    terms = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "^*":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    out = TatePoly()
    for t in terms:
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        if "L" in t:
            coef, _, rest = t.partition("L")
            coef = coef.rstrip("*")
            n = int(coef) if coef else 1
            power = int(rest[1:]) if rest.startswith("^") else (1 if not rest else int(rest))
            out = out + TatePoly.L(power, sign * n)
        else:
            out = out + TatePoly.const(sign * int(t))
    return out
