"""Truncated formal power series in q over exact integers or integers mod 2^w.

A Series holds the coefficients of q^0 .. q^(order-1) and is immutable.
Exact coefficients are arbitrary-precision Python ints; modular coefficients
live in Z/2^w (w <= 64) and are stored as a read-only uint64 numpy array so
large-order congruence scans stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_U64_MASK = (1 << 64) - 1


class RingMismatchError(ValueError):
    """Operands belong to different coefficient rings."""


class NonUnitError(ValueError):
    """Constant term is not invertible in the coefficient ring."""


class OrderError(ValueError):
    """Requested index or comparison order exceeds the known truncation order."""


@dataclass(frozen=True)
class CoefficientRing:
    """Either exact integers or integers modulo 2^width (1 <= width <= 64)."""

    kind: str
    width: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "exact":
            if self.width is not None:
                raise ValueError("exact ring takes no width")
        elif self.kind == "mod2pow":
            if self.width is None or not 1 <= self.width <= 64:
                raise ValueError("mod2pow width must be in 1..64")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @property
    def mask(self) -> int:
        assert self.width is not None
        return (1 << self.width) - 1

    def normalize(self, x: int) -> int:
        return int(x) if self.kind == "exact" else int(x) & self.mask

    def is_unit(self, x: int) -> bool:
        if self.kind == "exact":
            return x in (1, -1)
        return x & 1 == 1

    def unit_inverse(self, x: int) -> int:
        if not self.is_unit(self.normalize(x) if self.kind == "exact" else x):
            raise NonUnitError(f"{x} is not a unit in {self}")
        if self.kind == "exact":
            return x
        return pow(x & self.mask, -1, 1 << self.width)  # type: ignore[operator]

    def __str__(self) -> str:
        return "exact" if self.kind == "exact" else f"mod2pow:{self.width}"


EXACT = CoefficientRing("exact")


def mod2pow(width: int) -> CoefficientRing:
    return CoefficientRing("mod2pow", width)


MOD64 = mod2pow(64)


def _u64(x: int) -> np.uint64:
    return np.uint64(x & _U64_MASK)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class Series:
    """Immutable truncated power series: coefficients of q^0 .. q^(order-1)."""

    __slots__ = ("ring", "order", "_c")

    def __init__(self, ring: CoefficientRing, coeffs) -> None:
        self.ring = ring
        if ring.kind == "exact":
            self._c = tuple(int(x) for x in coeffs)
        else:
            mask = ring.mask
            if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.uint64:
                arr = coeffs & _u64(mask) if mask != _U64_MASK else coeffs.copy()
            else:
                arr = np.array([int(x) & mask for x in coeffs], dtype=np.uint64)
            self._c = _freeze(arr)
        self.order = len(self._c)

    @classmethod
    def _wrap(cls, ring: CoefficientRing, storage) -> "Series":
        # storage must already be canonical (masked for mod rings)
        s = object.__new__(cls)
        object.__setattr__(s, "ring", ring)
        if ring.kind == "exact":
            object.__setattr__(s, "_c", tuple(storage))
        else:
            object.__setattr__(s, "_c", _freeze(np.ascontiguousarray(storage, dtype=np.uint64)))
        object.__setattr__(s, "order", len(s._c))
        return s

    def __setattr__(self, name, value):
        if name in self.__slots__ and hasattr(self, "order"):
            raise AttributeError("Series is immutable")
        object.__setattr__(self, name, value)

    def coefficient(self, n: int) -> int:
        if not 0 <= n < self.order:
            raise OrderError(f"coefficient index {n} outside known range 0..{self.order - 1}")
        return int(self._c[n])

    __getitem__ = coefficient

    def coefficients(self) -> list[int]:
        return [int(x) for x in self._c]

    def truncate(self, n: int) -> "Series":
        if not 0 <= n <= self.order:
            raise OrderError(f"cannot truncate order-{self.order} series to {n}")
        return Series._wrap(self.ring, self._c[:n])

    def is_zero(self) -> bool:
        if self.ring.kind == "exact":
            return all(x == 0 for x in self._c)
        return not self._c.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        if self.ring != other.ring or self.order != other.order:
            return False
        if self.ring.kind == "exact":
            return self._c == other._c
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash((self.ring, self.order, tuple(int(x) for x in self._c[:16])))

    def __repr__(self) -> str:
        head = ", ".join(str(int(x)) for x in self._c[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"Series({self.ring}, order={self.order}, [{head}{tail}])"

    # arithmetic delegates to the module-level functions
    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Series):
            return mul(self, invert(other))
        return NotImplemented

    def __pow__(self, e: int):
        return power(self, e)


def zero_series(ring: CoefficientRing, order: int) -> Series:
    if ring.kind == "exact":
        return Series._wrap(ring, [0] * order)
    return Series._wrap(ring, np.zeros(order, dtype=np.uint64))


def one_series(ring: CoefficientRing, order: int) -> Series:
    return monomial(ring, order, 0, 1)


def constant_series(ring: CoefficientRing, order: int, c: int) -> Series:
    return monomial(ring, order, 0, c)


def monomial(ring: CoefficientRing, order: int, exponent: int, c: int = 1) -> Series:
    """c * q^exponent, truncated to the given order."""
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    if ring.kind == "exact":
        coeffs = [0] * order
        if exponent < order:
            coeffs[exponent] = c
        return Series._wrap(ring, coeffs)
    arr = np.zeros(order, dtype=np.uint64)
    if exponent < order:
        arr[exponent] = _u64(ring.normalize(c))
    return Series._wrap(ring, arr)


def _check_rings(a: Series, b: Series) -> CoefficientRing:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring} vs {b.ring}")
    return a.ring


def add(a: Series, b: Series) -> Series:
    ring = _check_rings(a, b)
    n = min(a.order, b.order)
    if ring.kind == "exact":
        return Series._wrap(ring, [a._c[i] + b._c[i] for i in range(n)])
    out = a._c[:n] + b._c[:n]
    return Series._wrap(ring, _mask_arr(out, ring))


def sub(a: Series, b: Series) -> Series:
    ring = _check_rings(a, b)
    n = min(a.order, b.order)
    if ring.kind == "exact":
        return Series._wrap(ring, [a._c[i] - b._c[i] for i in range(n)])
    out = a._c[:n] - b._c[:n]
    return Series._wrap(ring, _mask_arr(out, ring))


def negate(a: Series) -> Series:
    if a.ring.kind == "exact":
        return Series._wrap(a.ring, [-x for x in a._c])
    out = np.zeros_like(a._c) - a._c
    return Series._wrap(a.ring, _mask_arr(out, a.ring))


def scalar_mul(c: int, a: Series) -> Series:
    if a.ring.kind == "exact":
        return Series._wrap(a.ring, [c * x for x in a._c])
    out = a._c * _u64(a.ring.normalize(c))
    return Series._wrap(a.ring, _mask_arr(out, a.ring))


def _mask_arr(arr: np.ndarray, ring: CoefficientRing) -> np.ndarray:
    if ring.mask != _U64_MASK:
        arr = arr & _u64(ring.mask)
    return arr


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to min(a.order, b.order)."""
    ring = _check_rings(a, b)
    n = min(a.order, b.order)
    if ring.kind == "exact":
        return Series._wrap(ring, _x_conv(a._c, b._c, n))
    if n == 0:
        return zero_series(ring, 0)
    out = np.convolve(a._c[:n], b._c[:n])[:n]
    return Series._wrap(ring, _mask_arr(out, ring))


def _x_conv(a, b, n: int) -> list:
    # skips zero coefficients of the outer operand, so multiplying by a
    # monomial or a sparse theta-type series costs far less than N^2
    if sum(1 for x in a[:n] if x) > sum(1 for x in b[:n] if x):
        a, b = b, a
    out = [0] * n
    for i in range(min(len(a), n)):
        ai = a[i]
        if not ai:
            continue
        lim = n - i
        for j in range(min(len(b), lim)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def invert(a: Series) -> Series:
    """Multiplicative inverse, valid to a.order; constant term must be a unit."""
    if a.order == 0:
        return a
    ring = a.ring
    n = a.order
    if ring.kind == "exact":
        a0 = a._c[0]
        if a0 not in (1, -1):
            raise NonUnitError(f"constant term {a0} is not a unit in the exact ring")
        support = [i for i in range(1, n) if a._c[i]]
        b = [0] * n
        b[0] = a0
        for k in range(1, n):
            s = 0
            for i in support:
                if i > k:
                    break
                bki = b[k - i]
                if bki:
                    s += a._c[i] * bki
            b[k] = -a0 * s
        return Series._wrap(ring, b)
    a0 = int(a._c[0])
    if a0 & 1 == 0:
        raise NonUnitError(f"constant term {a0} is not a unit mod 2^{ring.width}")
    inv0 = _u64(pow(a0, -1, 1 << 64))
    arr = a._c
    b = np.zeros(n, dtype=np.uint64)
    b[0] = inv0
    zero = np.uint64(0)
    with np.errstate(over="ignore"):  # uint64 wraparound is the point here
        for k in range(1, n):
            s = np.dot(arr[1:k + 1], b[k - 1::-1])
            b[k] = inv0 * (zero - s)
    return Series._wrap(ring, _mask_arr(b, ring))


def power(a: Series, e: int) -> Series:
    """a**e by square-and-multiply; e < 0 inverts first; a**0 = 1."""
    if e == 0:
        return one_series(a.ring, a.order)
    if e < 0:
        return power(invert(a), -e)
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def shift(a: Series, j: int) -> Series:
    """Multiply by q^j; the top j coefficients fall outside the window."""
    if j < 0:
        raise ValueError("shift amount must be nonnegative")
    if j == 0:
        return a
    n = a.order
    if a.ring.kind == "exact":
        return Series._wrap(a.ring, [0] * min(j, n) + list(a._c[:max(0, n - j)]))
    out = np.zeros(n, dtype=np.uint64)
    if j < n:
        out[j:] = a._c[:n - j]
    return Series._wrap(a.ring, out)


def mul_sparse_binomial(a: Series, c: int, j: int, direction: str = "multiply") -> Series:
    """Multiply or divide by (1 + c*q^j) in O(order) operations."""
    if j < 1:
        raise ValueError("binomial exponent j must be >= 1")
    if direction not in ("multiply", "divide"):
        raise ValueError(f"direction must be 'multiply' or 'divide', got {direction!r}")
    ring = a.ring
    if ring.kind == "exact":
        fn = _x_mul_binomial if direction == "multiply" else _x_div_binomial
        return Series._wrap(ring, fn(list(a._c), c, j))
    fn = _m_mul_binomial if direction == "multiply" else _m_div_binomial
    return Series._wrap(ring, fn(a._c, ring.normalize(c), j, ring))


def _x_mul_binomial(a: list, c: int, j: int) -> list:
    out = list(a)
    for i in range(j, len(a)):
        ai = a[i - j]
        if ai:
            out[i] += c * ai
    return out


def _x_div_binomial(a: list, c: int, j: int) -> list:
    b = list(a)
    for i in range(j, len(a)):
        bi = b[i - j]
        if bi:
            b[i] -= c * bi
    return b


def _m_mul_binomial(arr: np.ndarray, c: int, j: int, ring: CoefficientRing) -> np.ndarray:
    out = arr.copy()
    if j < len(arr):
        out[j:] += arr[:-j] * _u64(c)
    return _mask_arr(out, ring)


def _m_div_binomial(arr: np.ndarray, c: int, j: int, ring: CoefficientRing) -> np.ndarray:
    n = len(arr)
    if j >= n:
        return arr.copy()
    # b[i] = a[i] - c*b[i-j]: along each residue class mod j this is a scan
    # with weights (-c)^t, so c = +-1 reduces to a (sign-alternating) cumsum.
    if c == 1 or c == ring.mask:
        rows = -(-n // j)
        padded = np.zeros(rows * j, dtype=np.uint64)
        padded[:n] = arr
        mat = padded.reshape(rows, j)
        if c == 1:
            signs = np.where(np.arange(rows) % 2 == 0, _u64(1), _u64(-1))[:, None]
            out = signs * np.cumsum(signs * mat, axis=0)
        else:
            out = np.cumsum(mat, axis=0)
        return _mask_arr(out.reshape(-1)[:n], ring)
    b = [int(x) for x in arr]
    mask = ring.mask
    for i in range(j, n):
        b[i] = (b[i] - c * b[i - j]) & mask
    return np.array(b, dtype=np.uint64)


def substitute_power(a: Series, m: int, sign: int) -> Series:
    """Return a(sign * q^m): coefficient of q^(m*n) is sign^n * a[n]."""
    if m < 1:
        raise ValueError("substitution power m must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n_out = max(0, m * (a.order - 1) + 1)
    if a.ring.kind == "exact":
        out = [0] * n_out
        s = 1
        for i, x in enumerate(a._c):
            out[m * i] = s * x
            s *= sign
        return Series._wrap(a.ring, out)
    out = np.zeros(n_out, dtype=np.uint64)
    if a.order:
        if sign == 1:
            out[::m] = a._c
        else:
            signs = np.where(np.arange(a.order) % 2 == 0, _u64(1), _u64(-1))
            out[::m] = _mask_arr(signs * a._c, a.ring)
    return Series._wrap(a.ring, out)


def dissect(a: Series, m: int, r: int) -> Series:
    """Extract sum over n of a[m*n + r] * q^n."""
    if m < 1:
        raise ValueError("dissection modulus m must be >= 1")
    if not 0 <= r < m:
        raise ValueError(f"dissection residue must satisfy 0 <= r < m, got r={r}, m={m}")
    if a.ring.kind == "exact":
        return Series._wrap(a.ring, a._c[r::m])
    return Series._wrap(a.ring, a._c[r::m].copy())


def truncate(a: Series, n: int) -> Series:
    """Drop coefficients at exponents >= n; n may not exceed the known order."""
    return a.truncate(n)


def reduce_mod(a: Series, modulus: int) -> Series:
    """Reduce every coefficient mod `modulus` (kept in the same ring)."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if a.ring.kind == "exact":
        return Series._wrap(a.ring, [x % modulus for x in a._c])
    _check_mod_divides(a.ring, modulus)
    return Series._wrap(a.ring, a._c & _u64(modulus - 1))


def _check_mod_divides(ring: CoefficientRing, modulus: int) -> None:
    if modulus & (modulus - 1) or modulus > (1 << ring.width):
        raise ValueError(
            f"modulus {modulus} must be a power of 2 dividing 2^{ring.width}")


def change_ring(a: Series, ring: CoefficientRing) -> Series:
    """Apply the reduction homomorphism into `ring` (never a lift)."""
    if ring == a.ring:
        return a
    if ring.kind == "exact":
        raise RingMismatchError("cannot lift modular coefficients back to the exact ring")
    if a.ring.kind == "mod2pow" and a.ring.width < ring.width:
        raise RingMismatchError(
            f"no reduction from mod2pow:{a.ring.width} to wider mod2pow:{ring.width}")
    if a.ring.kind == "exact":
        mask = ring.mask
        return Series._wrap(ring, np.array([x & mask for x in a._c], dtype=np.uint64))
    return Series._wrap(ring, _mask_arr(a._c.copy(), ring))


def equal_to_order(a: Series, b: Series, n: int) -> bool:
    """Coefficientwise equality for exponents 0..n-1."""
    _check_rings(a, b)
    if n > a.order or n > b.order:
        raise OrderError(f"comparison order {n} exceeds operand orders {a.order}, {b.order}")
    if a.ring.kind == "exact":
        return a._c[:n] == b._c[:n]
    return bool(np.array_equal(a._c[:n], b._c[:n]))


def first_incongruence(a: Series, b: Series, modulus: int, n: int) -> int | None:
    """First exponent < n where (a - b) is nonzero mod `modulus`, else None."""
    _check_rings(a, b)
    if n > a.order or n > b.order:
        raise OrderError(f"comparison order {n} exceeds operand orders {a.order}, {b.order}")
    if a.ring.kind == "exact":
        for i in range(n):
            if (a._c[i] - b._c[i]) % modulus:
                return i
        return None
    _check_mod_divides(a.ring, modulus)
    diff = (a._c[:n] - b._c[:n]) & _u64(modulus - 1)
    hits = np.nonzero(diff)[0]
    return int(hits[0]) if len(hits) else None


def congruent_to_order(a: Series, b: Series, modulus: int, n: int) -> bool:
    return first_incongruence(a, b, modulus, n) is None


def dump_text(a: Series) -> str:
    """One line per exponent: 'n<TAB>coefficient'."""
    return "\n".join(f"{i}\t{int(x)}" for i, x in enumerate(a._c))


def dump_json_dict(a: Series) -> dict:
    return {
        "order": a.order,
        "ring": str(a.ring),
        "coeffs": [str(int(x)) for x in a._c],
    }
