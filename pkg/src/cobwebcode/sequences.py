"""Natural-number valued sequences n -> n_F and the factorial-type products built on them.

Every structure in the package is parameterized by an :class:`FSequence`.
Values are exact Python integers; nothing here touches floating point.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .errors import IndexBeyondExplicitList, InvalidRange

__all__ = [
    "FSequence",
    "parse_sequence",
    "value",
    "rising_factorial",
    "f_factorial",
    "falling_factorial",
    "fnomial",
    "is_admissible",
]


class FSequence:
    """A memoized sequence of non-negative integers indexed from 0.

    Use the constructors :meth:`natural`, :meth:`fibonacci`, :meth:`constant`,
    :meth:`gauss` and :meth:`explicit`, or :func:`parse_sequence` for the
    textual form. Built-in sequences report ``0_F = 1`` (the one-point root
    level). An explicit list reports whatever it stores at index 0, and
    ``width(0)`` lifts a stored zero to one.
    """

    __slots__ = ("kind", "param", "_values", "_lock", "_finite", "_spec")

    def __init__(self, kind: str, param=None, values: Iterable[int] | None = None, spec: str | None = None):
        self.kind = kind
        self.param = param
        self._lock = threading.Lock()
        self._finite = kind == "explicit"
        if kind == "explicit":
            vals = [int(v) for v in values]
            for i, v in enumerate(vals):
                if v < 0 or (i > 0 and v < 1):
                    raise ValueError(f"explicit sequence value {v} at index {i} must be positive (index 0 may be 0)")
            self._values = vals
            self._spec = spec or "list:" + ",".join(map(str, vals))
        elif kind == "natural":
            self._values = [1]
            self._spec = "natural"
        elif kind == "fibonacci":
            self._values = [1, 1, 1]
            self._spec = "fibonacci"
        elif kind == "constant":
            if param < 1:
                raise ValueError("constant sequence needs p >= 1")
            self._values = [1]
            self._spec = f"const:{param}"
        elif kind == "gauss":
            if param < 1:
                raise ValueError("gauss sequence needs q >= 1")
            self._values = [1, 1]
            self._spec = f"gauss:{param}"
        else:
            raise ValueError(f"unknown sequence kind {kind!r}")

    # constructors

    @classmethod
    def natural(cls) -> FSequence:
        return cls("natural")

    @classmethod
    def fibonacci(cls) -> FSequence:
        return cls("fibonacci")

    @classmethod
    def constant(cls, p: int) -> FSequence:
        return cls("constant", int(p))

    @classmethod
    def gauss(cls, q: int) -> FSequence:
        return cls("gauss", int(q))

    @classmethod
    def explicit(cls, values: Iterable[int], spec: str | None = None) -> FSequence:
        return cls("explicit", values=values, spec=spec)

    # identity

    @property
    def spec(self) -> str:
        """The textual spec string that :func:`parse_sequence` maps back to this sequence."""
        return self._spec

    @property
    def key(self):
        if self._finite:
            return ("explicit", tuple(self._values))
        return (self.kind, self.param)

    def __eq__(self, other):
        if not isinstance(other, FSequence):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"FSequence({self._spec!r})"

    @property
    def length(self) -> int | None:
        """Number of stored values for explicit lists, ``None`` for infinite sequences."""
        return len(self._values) if self._finite else None

    @property
    def eventually_one(self) -> bool:
        """True when every value beyond index 0 is 1, so no mixed-radix growth is possible."""
        return self.kind == "constant" and self.param == 1

    # values

    def _next(self, n: int) -> int:
        vals = self._values
        if self.kind == "natural":
            return n
        if self.kind == "fibonacci":
            return vals[n - 1] + vals[n - 2]
        if self.kind == "constant":
            return self.param
        # gauss: n_q = 1 + q + ... + q^(n-1)
        return vals[n - 1] * self.param + 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise InvalidRange(f"sequence index must be >= 0, got {n}")
        vals = self._values
        if n < len(vals):
            return vals[n]
        if self._finite:
            raise IndexBeyondExplicitList(n, len(vals))
        with self._lock:
            # append-only; a concurrent filler may already have got here
            while len(vals) <= n:
                vals.append(self._next(len(vals)))
        return vals[n]

    def width(self, n: int) -> int:
        """Level size n_F, reading a stored ``0_F = 0`` as the one-point root."""
        v = self[n]
        return 1 if n == 0 and v == 0 else v


_SPEC_RE = re.compile(r"^(natural|fibonacci|const:(\d+)|gauss:(\d+)|file:(.+)|list:([\d,\s]+))$")


def parse_sequence(spec: str) -> FSequence:
    """Parse ``natural | fibonacci | const:<p> | gauss:<q> | file:<path>``.

    ``list:<v0>,<v1>,...`` is accepted as an inline form of ``file:``.
    """
    text = spec.strip()
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"unrecognised sequence spec {spec!r}")
    if text == "natural":
        return FSequence.natural()
    if text == "fibonacci":
        return FSequence.fibonacci()
    if m.group(2) is not None:
        return FSequence.constant(int(m.group(2)))
    if m.group(3) is not None:
        return FSequence.gauss(int(m.group(3)))
    if m.group(4) is not None:
        raw = Path(m.group(4)).read_text(encoding="utf-8")
        return FSequence.explicit(_split_values(raw), spec=text)
    return FSequence.explicit(_split_values(m.group(5)))


def _split_values(raw: str) -> list[int]:
    tokens = [t for t in re.split(r"[\s,]+", raw) if t]
    if not tokens:
        raise ValueError("explicit sequence is empty")
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer value in explicit sequence: {exc}") from None


def value(F: FSequence, n: int) -> int:
    return F[n]


def rising_factorial(F: FSequence, k: int, s: int) -> int:
    """k_F (k+1)_F ... (k+s-1)_F; the empty product 1 when s == 0."""
    if s < 0:
        raise InvalidRange(f"length must be >= 0, got {s}")
    if s and k < 1:
        raise InvalidRange(f"origin must be >= 1, got {k}")
    out = 1
    for i in range(k, k + s):
        out *= F[i]
    return out


def f_factorial(F: FSequence, n: int) -> int:
    """n_F! = 1_F 2_F ... n_F, with 0_F! = 1."""
    if n < 0:
        raise InvalidRange(f"n must be >= 0, got {n}")
    return rising_factorial(F, 1, n)


def falling_factorial(F: FSequence, n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise InvalidRange(f"need 0 <= k <= n, got n={n}, k={k}")
    out = 1
    for i in range(n - k + 1, n + 1):
        out *= F[i]
    return out


def fnomial(F: FSequence, n: int, k: int) -> Fraction:
    """Exact n_F! / (k_F! (n-k)_F!).

    The result is a :class:`~fractions.Fraction`; it is integral exactly when
    its denominator is 1, which is how non-admissible sequences show up.
    """
    if not 0 <= k <= n:
        raise InvalidRange(f"need 0 <= k <= n, got n={n}, k={k}")
    return Fraction(f_factorial(F, n), f_factorial(F, k) * f_factorial(F, n - k))


def is_admissible(F: FSequence, n_max: int) -> tuple[bool, tuple[int, int] | None]:
    """Check integrality of every F-nomial with 0 <= k <= n <= n_max.

    Returns ``(True, None)`` or ``(False, (n, k))`` for the first failure in
    row-major order.
    """
    if n_max < 0:
        raise InvalidRange(f"n_max must be >= 0, got {n_max}")
    facts = [f_factorial(F, i) for i in range(n_max + 1)]
    for n in range(n_max + 1):
        for k in range(n + 1):
            if facts[n] % (facts[k] * facts[n - k]):
                return False, (n, k)
    return True, None
