"""Exact arithmetic in F_q, q = p^k.

Elements are encoded as integers ``code = c0 + c1*p + ... + c_{k-1}*p^(k-1)``
where ``c0 + c1*a + ...`` is the residue of the generator ``a`` modulo the
defining polynomial. Prime fields use the residue directly. Polynomials and
other hot loops work on codes; :class:`FieldElement` is the public wrapper.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import InvalidInput, NotIrreducible, ResourceLimit

# tables are only built for fields up to this size
TABLE_LIMIT = 1 << 16
ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- helpers on F_p[x] polynomials stored low-to-high as lists of ints ------

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mc) % p
        _trim(a)
    return a


def _monic_polys(deg, p):
    """All monic polynomials of exact degree ``deg`` over F_p, in code order."""
    for n in range(p ** deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(n % p)
            n //= p
        yield coeffs + [1]


def is_irreducible_exhaustive(modulus, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = _trim([c % p for c in modulus])
    deg = len(m) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(d, p):
            if not _polymod(m, f, p):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple:
    for cand in _monic_polys(k, p):
        if cand[0] == 0 and k > 1:
            continue
        if is_irreducible_exhaustive(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """The finite field F_{p^k} with a fixed irreducible modulus."""

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise InvalidInput(f"characteristic {p} is not prime")
        if k < 1:
            raise InvalidInput("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        if modulus is None:
            modulus = smallest_irreducible(p, k) if k > 1 else (0, 1)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise InvalidInput("modulus must be monic of degree k")
            if k > 1 and not is_irreducible_exhaustive(modulus, p):
                raise NotIrreducible(f"{modulus} is reducible over F_{p}")
        self.modulus = modulus
        self._exp = None
        self._log = None
        self._addt = None
        if k > 1:
            if self.q > TABLE_LIMIT:
                raise ResourceLimit(f"F_{p}^{k} exceeds the table limit {TABLE_LIMIT}")
            self._build_tables()

    # -- construction of log tables ------------------------------------
    def _digits(self, code):
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return out

    def _undigits(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    def _slow_mul(self, a, b):
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        red = _polymod(prod, list(self.modulus), p)
        red = red + [0] * (self.k - len(red))
        return self._undigits(red)

    def _slow_add(self, a, b):
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _build_tables(self):
        q = self.q
        order = q - 1
        factors = prime_factors(order)
        gen = None
        for cand in range(2, q):
            ok = True
            for r in factors:
                if self._slow_pow(cand, order // r) == 1:
                    ok = False
                    break
            if ok:
                gen = cand
                break
        exp = [0] * (2 * order)
        log = [None] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log
        self.primitive_code = gen
        if q <= ADD_TABLE_LIMIT:
            self._addt = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]
        p = self.p
        self._negt = [self._undigits([(-d) % p for d in self._digits(a)]) for a in range(q)]

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    # -- code-level arithmetic ------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._addt is not None:
            return self._addt[a][b]
        return self._slow_add(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._negt[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if self.k == 1:
            if e < 0:
                a, e = self.inv(a), -e
            return pow(a, e, self.p)
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Code of the image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def code_of(self, value) -> int:
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise InvalidInput("element belongs to a different field")
            return value.code
        if isinstance(value, bool):
            raise InvalidInput("booleans are not field elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, (list, tuple)):
            return self.from_coords(value).code
        raise InvalidInput(f"cannot coerce {value!r} into F_{self.q}")

    # -- element-level API -------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.code_of(value))

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise InvalidInput(f"code {code} out of range for F_{self.q}")
        return FieldElement(self, code)

    def from_coords(self, coords) -> "FieldElement":
        coords = [int(c) % self.p for c in coords]
        if len(coords) > self.k:
            raise InvalidInput(f"expected at most {self.k} coordinates")
        coords += [0] * (self.k - len(coords))
        return FieldElement(self, self._undigits(coords))

    def coords(self, code: int) -> list[int]:
        return self._digits(code)

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def gen(self):
        """The class of the variable modulo the defining polynomial."""
        if self.k == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def elements(self):
        for c in range(self.q):
            yield FieldElement(self, c)

    def nonzero(self):
        for c in range(1, self.q):
            yield FieldElement(self, c)

    def pth_root_code(self, a: int) -> int:
        # x -> x^(q/p) inverts Frobenius on F_q
        return self.power(a, self.q // self.p)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise InvalidInput("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for r in prime_factors(n):
            while order % r == 0 and self.power(a, order // r) == 1:
                order //= r
        return order

    def elements_of_order(self, n: int) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(1, self.q)
                if self.multiplicative_order(c) == n]

    def root_of_unity(self, n: int) -> "FieldElement | None":
        """Code-order smallest element of exact multiplicative order n."""
        if (self.q - 1) % n:
            return None
        for c in range(1, self.q):
            if self.multiplicative_order(c) == n:
                return FieldElement(self, c)
        return None  # pragma: no cover

    def extension(self, m: int) -> "FieldCtx":
        """The degree-m extension F_{q^m} (as a fresh prime-based field)."""
        return field(self.p, self.k * m)

    def embedding_into(self, other: "FieldCtx"):
        return embedding(self, other)

    def fmt_code(self, code: int) -> str:
        if self.k == 1:
            return str(code)
        digits = self._digits(code)
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = digits[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = "a" if i == 1 else f"a^{i}"
                terms.append(mon if c == 1 else f"{c}{mon}")
        return "+".join(terms) if terms else "0"

    def json_code(self, code: int):
        return code if self.k == 1 else self._digits(code)

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.k == other.k and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.p}^{self.k}, modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> FieldCtx:
    """Cached field with the default (smallest irreducible) modulus."""
    return FieldCtx(p, k)


class Embedding:
    """A field homomorphism F_{p^k} -> F_{p^K}, k | K, sending the generator to
    the code-order smallest root of the source modulus."""

    def __init__(self, src: FieldCtx, dst: FieldCtx):
        if src.p != dst.p or dst.k % src.k:
            raise InvalidInput(f"cannot embed {src} into {dst}")
        self.src = src
        self.dst = dst
        if src == dst:
            self._table = list(range(src.q))
            return
        if src.k == 1:
            self._table = list(range(src.p))
            return
        root = None
        for c in range(dst.q):
            acc = 0
            for coef in reversed(src.modulus):
                acc = dst.add(dst.mul(acc, c), coef)
            if acc == 0:
                root = c
                break
        if root is None:  # pragma: no cover
            raise AssertionError("no root of the modulus in the target")
        table = []
        for code in range(src.q):
            digits = src.coords(code)
            acc = 0
            for d in reversed(digits):
                acc = dst.add(dst.mul(acc, root), d)
            table.append(acc)
        self._table = table

    def code(self, code: int) -> int:
        return self._table[code]

    def __call__(self, x):
        if isinstance(x, FieldElement):
            return FieldElement(self.dst, self._table[x.code])
        return FieldElement(self.dst, self._table[self.src.code_of(x)])


@lru_cache(maxsize=None)
def embedding(src: FieldCtx, dst: FieldCtx) -> Embedding:
    return Embedding(src, dst)


class FieldElement:
    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise InvalidInput("mixing elements of different fields")
            return other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.div(self.code, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.div(o, self.code))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.power(self.code, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def frobenius(self):
        return FieldElement(self.ctx, self.ctx.power(self.code, self.ctx.p))

    def pth_root(self):
        return FieldElement(self.ctx, self.ctx.pth_root_code(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def order(self) -> int:
        return self.ctx.multiplicative_order(self.code)

    def coords(self) -> list[int]:
        return self.ctx.coords(self.code)

    def to_json(self):
        return self.ctx.json_code(self.code)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return self.code == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.k, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"FieldElement({self.ctx.fmt_code(self.code)} in F_{self.ctx.q})"

    def __str__(self):
        return self.ctx.fmt_code(self.code)
