"""The base-F positional numeral system.

With origin ``k`` the digit at position ``s`` has radix ``(k+s)_F`` and
weight ``k_F (k+1)_F ... (k+s-1)_F``, so each weight is the previous one
times the previous radix. Digit vectors are stored least significant first
and printed most significant first, e.g. ``(4 2 1 0 0)_F``.
"""

from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass, field

from .errors import (
    DigitOutOfRange,
    IndexBeyondExplicitList,
    NonRepresentable,
    OriginMismatch,
    ParseError,
    SequenceMismatch,
)
from .sequences import FSequence, parse_sequence

__all__ = [
    "FBaseNumeral",
    "LT",
    "EQ",
    "GT",
    "radix",
    "weight",
    "decode",
    "decode_digits",
    "encode",
    "successor",
    "add",
    "compare_lexV",
    "max_prefix_numeral",
    "zeckendorf",
    "zeckendorf_terms",
    "decode_not_upside_down",
    "format_numeral",
    "parse_numeral",
    "numeral_to_json",
    "numeral_from_json",
]

LT, EQ, GT = -1, 0, 1

# encode gives up once this many positions have been scanned without the
# place values passing the target
POSITION_HORIZON = 10**6


class _Weights:
    """Lazily grown table of radices and place values for one (F, k)."""

    def __init__(self, F: FSequence, k: int):
        self.F = F
        self.k = k
        self.radices: list[int] = []
        self.weights: list[int] = [1]
        self.lock = threading.Lock()

    def extend_to(self, count: int) -> None:
        # makes radices[0:count] and weights[0:count+1] available
        if len(self.radices) >= count:
            return
        with self.lock:
            while len(self.radices) < count:
                r = self.F[self.k + len(self.radices)]
                self.radices.append(r)
                self.weights.append(self.weights[-1] * r)


_TABLES: dict[tuple, _Weights] = {}
_TABLES_LOCK = threading.Lock()


def _table(F: FSequence, k: int) -> _Weights:
    key = (F.key, k)
    tab = _TABLES.get(key)
    if tab is None:
        with _TABLES_LOCK:
            tab = _TABLES.setdefault(key, _Weights(F, k))
    return tab


def radix(F: FSequence, k: int, s: int) -> int:
    """Radix of position s: (k+s)_F."""
    tab = _table(F, k)
    tab.extend_to(s + 1)
    return tab.radices[s]


def weight(F: FSequence, k: int, s: int) -> int:
    """Place value of position s: k_F (k+1)_F ... (k+s-1)_F."""
    tab = _table(F, k)
    tab.extend_to(s)
    return tab.weights[s]


@dataclass(frozen=True)
class FBaseNumeral:
    """An immutable base-F numeral.

    Construction checks every digit against its radix and drops trailing
    (most significant) zeros; the empty digit tuple is zero. Radix-1
    positions stay in the vector as zeros.
    """

    digits_lsb: tuple[int, ...]
    origin: int
    sequence: FSequence = field(compare=True)

    def __post_init__(self):
        if self.origin < 1:
            raise ValueError(f"origin must be >= 1, got {self.origin}")
        digits = tuple(int(d) for d in self.digits_lsb)
        end = len(digits)
        while end and digits[end - 1] == 0:
            end -= 1
        digits = digits[:end]
        if digits:
            tab = _table(self.sequence, self.origin)
            try:
                tab.extend_to(len(digits))
            except IndexBeyondExplicitList:
                raise NonRepresentable(
                    f"{self.sequence!r} has no radix for position {len(digits) - 1}"
                ) from None
            for s, (d, r) in enumerate(zip(digits, tab.radices)):
                if d < 0 or d >= r:
                    raise DigitOutOfRange(s, d, r)
        object.__setattr__(self, "digits_lsb", digits)

    @classmethod
    def _trusted(cls, digits: tuple[int, ...], origin: int, sequence: FSequence) -> FBaseNumeral:
        # digits already normalized and bounded by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "digits_lsb", digits)
        object.__setattr__(obj, "origin", origin)
        object.__setattr__(obj, "sequence", sequence)
        return obj

    def __int__(self):
        return decode(self)

    def __str__(self):
        return format_numeral(self)

    def __len__(self):
        return len(self.digits_lsb)


def decode_digits(digits, F: FSequence, k: int = 1) -> int:
    """Value of a raw digit vector, checking each digit against its radix."""
    tab = _table(F, k)
    tab.extend_to(len(digits))
    total = 0
    for s, d in enumerate(digits):
        r = tab.radices[s]
        if d < 0 or d >= r:
            raise DigitOutOfRange(s, d, r)
        total += d * tab.weights[s]
    return total


def decode(x: FBaseNumeral) -> int:
    w = _table(x.sequence, x.origin).weights
    total = 0
    for s, d in enumerate(x.digits_lsb):
        if d:
            total += d * w[s]
    return total


def encode(alpha: int, F: FSequence, k: int = 1) -> FBaseNumeral:
    """Represent ``alpha`` in base F with origin k.

    Finds the least m whose next place value exceeds alpha, then peels
    digits off from the top by repeated division with remainder.
    """
    if alpha < 0:
        raise ValueError(f"cannot encode negative value {alpha}")
    if k < 1:
        raise ValueError(f"origin must be >= 1, got {k}")
    if alpha == 0:
        return FBaseNumeral._trusted((), k, F)
    tab = _table(F, k)
    if F.eventually_one:
        raise NonRepresentable(f"{F!r} has radix 1 everywhere; only 0 is representable")
    w = tab.weights
    if w[-1] <= alpha:
        _grow_past(tab, alpha)
    # first place value above alpha sits at index m + 1
    m = bisect_right(w, alpha) - 1
    digits = [0] * (m + 1)
    rest = alpha
    for s in range(m, -1, -1):
        digits[s], rest = divmod(rest, w[s])
    return FBaseNumeral._trusted(tuple(digits), k, F)


def _grow_past(tab: _Weights, alpha: int) -> None:
    n = len(tab.radices)
    while tab.weights[-1] <= alpha:
        if n >= POSITION_HORIZON:
            raise NonRepresentable(
                f"place values of {tab.F!r} did not exceed {alpha} within {POSITION_HORIZON} positions"
            )
        n += 1
        try:
            tab.extend_to(n)
        except IndexBeyondExplicitList:
            raise NonRepresentable(f"{tab.F!r} is exhausted before reaching {alpha}") from None


def _check_compatible(a: FBaseNumeral, b: FBaseNumeral) -> None:
    if a.origin != b.origin:
        raise OriginMismatch(f"origins differ: {a.origin} vs {b.origin}")
    if a.sequence is not b.sequence and a.sequence != b.sequence:
        raise SequenceMismatch(f"sequences differ: {a.sequence!r} vs {b.sequence!r}")


def _carry_add(a: tuple[int, ...], b: tuple[int, ...], carry: int, F: FSequence, k: int) -> tuple[int, ...]:
    tab = _table(F, k)
    out = []
    s = 0
    n = max(len(a), len(b))
    while s < n or carry:
        if s >= POSITION_HORIZON:
            raise NonRepresentable("carry ran past the position horizon")
        try:
            tab.extend_to(s + 1)
        except IndexBeyondExplicitList:
            raise NonRepresentable(f"{F!r} is exhausted while carrying") from None
        r = tab.radices[s]
        t = (a[s] if s < len(a) else 0) + (b[s] if s < len(b) else 0) + carry
        if r == 1:
            # radix-1 slot keeps digit 0 and hands everything upward
            out.append(0)
            carry = t
        else:
            carry, d = divmod(t, r)
            out.append(d)
        s += 1
        if F.eventually_one and carry and s > n:
            raise NonRepresentable(f"{F!r} has radix 1 everywhere")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def successor(x: FBaseNumeral) -> FBaseNumeral:
    """x + 1 by carrying one ball into position 0."""
    digits = _carry_add(x.digits_lsb, (), 1, x.sequence, x.origin)
    return FBaseNumeral._trusted(digits, x.origin, x.sequence)


def add(a: FBaseNumeral, b: FBaseNumeral) -> FBaseNumeral:
    _check_compatible(a, b)
    digits = _carry_add(a.digits_lsb, b.digits_lsb, 0, a.sequence, a.origin)
    return FBaseNumeral._trusted(digits, a.origin, a.sequence)


def compare_lexV(x: FBaseNumeral, y: FBaseNumeral) -> int:
    """Compare digit vectors from the most significant differing position.

    Returns ``LT``, ``EQ`` or ``GT`` (-1, 0, 1). Both operands are
    normalized, so the longer vector has a nonzero top digit and is larger.
    """
    if x.origin != y.origin or x.sequence is not y.sequence:
        _check_compatible(x, y)
    a, b = x.digits_lsb, y.digits_lsb
    la, lb = len(a), len(b)
    if la != lb:
        return LT if la < lb else GT
    s = la - 1
    while s >= 0:
        da, db = a[s], b[s]
        if da != db:
            return LT if da < db else GT
        s -= 1
    return EQ


def max_prefix_numeral(F: FSequence, k: int, m: int) -> FBaseNumeral:
    """The length-m numeral whose every digit is at its radix maximum."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return FBaseNumeral(tuple(radix(F, k, s) - 1 for s in range(m)), k, F)


def _zeck_basis(alpha: int) -> list[int]:
    basis = [1, 2]
    while basis[-1] <= alpha:
        basis.append(basis[-1] + basis[-2])
    return basis


def zeckendorf(alpha: int) -> list[int]:
    """Greedy Zeckendorf digits, lsb first, over the Fibonacci values 1, 2, 3, 5, 8, ..."""
    if alpha < 0:
        raise ValueError(f"cannot represent negative value {alpha}")
    if alpha == 0:
        return []
    basis = _zeck_basis(alpha)
    digits = [0] * len(basis)
    rest = alpha
    for i in range(len(basis) - 1, -1, -1):
        if basis[i] <= rest:
            digits[i] = 1
            rest -= basis[i]
    while digits and digits[-1] == 0:
        digits.pop()
    return digits


def zeckendorf_terms(alpha: int) -> list[int]:
    """The Fibonacci summands of ``alpha``, largest first."""
    digits = zeckendorf(alpha)
    basis = _zeck_basis(alpha)
    return [basis[i] for i in range(len(digits) - 1, -1, -1) if digits[i]]


def decode_not_upside_down(x: FBaseNumeral) -> int:
    """Evaluate with weights k_F (k_F+1) ... (k_F+s-1) instead of the sequence product.

    Only for comparison with :func:`decode`; the two agree for the natural
    sequence and generally differ otherwise.
    """
    kF = x.sequence[x.origin]
    total = 0
    w = 1
    for s, d in enumerate(x.digits_lsb):
        total += d * w
        w *= kF + s
    return total


def format_numeral(x: FBaseNumeral) -> str:
    if not x.digits_lsb:
        return "(0)_F"
    return "(" + " ".join(str(d) for d in reversed(x.digits_lsb)) + ")_F"


def parse_numeral(text: str, F: FSequence, k: int = 1) -> FBaseNumeral:
    """Parse ``"(" digit (SP digit)* ")_F"``, most significant digit first."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s.startswith("("):
        raise ParseError("expected '('", offset)
    close = s.find(")")
    if close < 0:
        raise ParseError("missing ')'", offset + len(s))
    if s[close:] != ")_F":
        raise ParseError("expected ')_F' terminator", offset + close)
    body = s[1:close]
    if not body:
        raise ParseError("expected a digit", offset + 1)
    digits_msb = []
    pos = 1
    for i, tok in enumerate(body.split(" ")):
        if not tok.isdigit() or not tok.isascii():
            what = "empty digit (double space?)" if not tok else f"invalid digit {tok!r}"
            raise ParseError(what, offset + pos)
        digits_msb.append(int(tok))
        pos += len(tok) + 1
    return FBaseNumeral(tuple(reversed(digits_msb)), k, F)


def numeral_to_json(x: FBaseNumeral) -> dict:
    return {"sequence": x.sequence.spec, "origin": x.origin, "digits_lsb": list(x.digits_lsb)}


def numeral_from_json(obj: dict, F: FSequence | None = None) -> FBaseNumeral:
    try:
        seq = F if F is not None else parse_sequence(obj["sequence"])
        origin = obj["origin"]
        digits = obj["digits_lsb"]
    except KeyError as exc:
        raise ValueError(f"numeral object is missing field {exc}") from None
    if not isinstance(origin, int) or not all(isinstance(d, int) and d >= 0 for d in digits):
        raise ValueError("origin and digits_lsb must be non-negative integers")
    return FBaseNumeral(tuple(digits), origin, seq)
