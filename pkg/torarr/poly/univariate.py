"""
Integer polynomials in one variable t (Poincaré polynomials, Hilbert series numerators).
"""

from typing import Dict, Iterable, Sequence, Tuple, Union


class UniPolyZ:
    """Dense coefficient tuple, lowest degree first, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    @classmethod
    def from_dict(cls, terms: Dict[int, int]) -> "UniPolyZ":
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for k, v in terms.items():
            if k < 0:
                raise ValueError(f"negative exponent {k}")
            c[k] += v
        return cls(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "UniPolyZ":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: Union["UniPolyZ", int]) -> "UniPolyZ":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPolyZ(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPolyZ":
        return UniPolyZ(-x for x in self.coeffs)

    def __sub__(self, other) -> "UniPolyZ":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "UniPolyZ":
        return _coerce(other) - self

    def __mul__(self, other: Union["UniPolyZ", int]) -> "UniPolyZ":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPolyZ()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPolyZ":
        result = UniPolyZ([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, t):
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def shift(self, k: int) -> "UniPolyZ":
        """Multiply by t^k."""
        return UniPolyZ([0] * k + list(self.coeffs)) if self.coeffs else UniPolyZ()

    def divide_by_one_minus_t(self) -> "UniPolyZ":
        """Exact quotient by (1 - t); the caller guarantees p(1) == 0."""
        if self(1) != 0:
            raise ValueError(f"{self} is not divisible by 1 - t")
        # p = (1 - t) q  =>  q_k = sum_{i <= k} p_i
        out, running = [], 0
        for c in self.coeffs[:-1]:
            running += c
            out.append(running)
        return UniPolyZ(out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPolyZ([other])
        if isinstance(other, (list, tuple)):
            other = UniPolyZ(other)
        return isinstance(other, UniPolyZ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPolyZ({list(self.coeffs)})"

    def __str__(self):
        return format_terms(
            ((k,), c) for k, c in reversed(list(enumerate(self.coeffs))) if c
        ) if self.coeffs else "0"

    def to_json(self) -> list:
        return list(self.coeffs)


def _coerce(value) -> UniPolyZ:
    if isinstance(value, UniPolyZ):
        return value
    if isinstance(value, int):
        return UniPolyZ([value])
    raise TypeError(f"cannot combine UniPolyZ with {type(value).__name__}")


def format_terms(terms, names: Sequence[str] = ("t",)) -> str:
    """Render (exponents, coefficient) pairs as '6t^2 + 5t + 1'."""
    pieces = []
    for exps, c in terms:
        mono = "".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exps) if e
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
