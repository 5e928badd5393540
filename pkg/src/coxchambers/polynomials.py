"""Multivariate polynomials over Q: monomials, degrevlex orders, parsing, printing.

A monomial is a tuple of exponents, a polynomial a dict monomial -> Fraction.
The surface syntax is the one shared with presentation files:
``3*T1^2*T8^2 - T4*T9``, with integer or rational coefficients.
"""

from fractions import Fraction


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


class TermOrder:
    """Degree reverse lexicographic order with a variable permutation.

    ``perm`` lists variable indices from most to least significant; auxiliary
    (saturation) variables go last.
    """

    __slots__ = ("nvars", "perm")

    def __init__(self, nvars, perm=None):
        self.nvars = nvars
        self.perm = tuple(perm) if perm is not None else tuple(range(nvars))
        if sorted(self.perm) != list(range(nvars)):
            raise ValueError("perm must be a permutation of the variables")

    def key(self, mono):
        permuted = [mono[p] for p in self.perm]
        return (sum(mono), tuple(-e for e in reversed(permuted)))

    def max(self, monos):
        return max(monos, key=self.key)

    def sorted(self, monos, reverse=True):
        return sorted(monos, key=self.key, reverse=reverse)


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=()):
        self.nvars = nvars
        clean = {}
        for m, c in (terms.items() if isinstance(terms, dict) else terms):
            if len(m) != nvars:
                raise ValueError("monomial length does not match variable count")
            c = Fraction(c)
            if c:
                acc = clean.get(m, Fraction(0)) + c
                if acc:
                    clean[m] = acc
                else:
                    clean.pop(m, None)
        self.terms = clean

    @staticmethod
    def zero(nvars):
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars, c):
        return Polynomial(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def variable(nvars, i, power=1):
        mono = tuple(power if j == i else 0 for j in range(nvars))
        return Polynomial(nvars, {mono: Fraction(1)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        merged = dict(self.terms)
        for m, c in other.terms.items():
            acc = merged.get(m, Fraction(0)) + c
            if acc:
                merged[m] = acc
            else:
                merged.pop(m, None)
        return Polynomial(self.nvars, merged)

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc = out.get(m, Fraction(0)) + c1 * c2
                if acc:
                    out[m] = acc
                else:
                    out.pop(m, None)
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: c * k for m, k in self.terms.items()})

    def leading_monomial(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return order.max(self.terms)

    def total_degree(self):
        return max((mono_degree(m) for m in self.terms), default=0)

    def support(self):
        """Indices of variables occurring in some term."""
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def substitute_zero(self, var_indices):
        var_indices = set(var_indices)
        kept = {m: c for m, c in self.terms.items()
                if all(m[i] == 0 for i in var_indices)}
        return Polynomial(self.nvars, kept)

    def rename(self, mapping, new_nvars):
        """Reindex variables; every occurring variable must be in the mapping."""
        out = {}
        for m, c in self.terms.items():
            mm = [0] * new_nvars
            for i, e in enumerate(m):
                if e:
                    mm[mapping[i]] = e
            out[tuple(mm)] = c
        return Polynomial(new_nvars, out)

    def format(self, names, order=None):
        if not self.terms:
            return "0"
        order = order or TermOrder(self.nvars)
        pieces = []
        for m in order.sorted(self.terms):
            c = self.terms[m]
            factors = [f"{names[i]}^{e}" if e > 1 else names[i]
                       for i, e in enumerate(m) if e]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.terms!r})"


class PolynomialSyntaxError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (column {pos + 1})")
        self.pos = pos


def parse_polynomial(source, names):
    """Parse the surface syntax into a Polynomial over the named variables."""
    nvars = len(names)
    index = {name: i for i, name in enumerate(names)}
    pos = 0
    n = len(source)

    def skip_ws():
        nonlocal pos
        while pos < n and source[pos] in " \t":
            pos += 1

    def parse_number():
        nonlocal pos
        start = pos
        while pos < n and source[pos].isdigit():
            pos += 1
        if pos == start:
            raise PolynomialSyntaxError("expected a number", pos)
        num = int(source[start:pos])
        if pos < n and source[pos] == "/":
            pos += 1
            dstart = pos
            while pos < n and source[pos].isdigit():
                pos += 1
            if pos == dstart:
                raise PolynomialSyntaxError("expected a denominator", pos)
            return Fraction(num, int(source[dstart:pos]))
        return Fraction(num)

    def parse_name():
        nonlocal pos
        start = pos
        while pos < n and (source[pos].isalnum() or source[pos] == "_"):
            pos += 1
        name = source[start:pos]
        if name not in index:
            raise PolynomialSyntaxError(f"unknown variable {name!r}", start)
        return index[name]

    def parse_term():
        nonlocal pos
        coeff = Fraction(1)
        expo = [0] * nvars
        saw_factor = False
        while True:
            skip_ws()
            if pos < n and source[pos].isdigit():
                coeff *= parse_number()
                saw_factor = True
            elif pos < n and (source[pos].isalpha() or source[pos] == "_"):
                i = parse_name()
                power = 1
                if pos < n and source[pos] == "^":
                    pos += 1
                    power = int(parse_number())
                expo[i] += power
                saw_factor = True
            else:
                raise PolynomialSyntaxError("expected a coefficient or variable", pos)
            skip_ws()
            if pos < n and source[pos] == "*":
                pos += 1
                continue
            break
        if not saw_factor:
            raise PolynomialSyntaxError("empty term", pos)
        return tuple(expo), coeff

    terms = []
    skip_ws()
    sign = Fraction(1)
    if pos < n and source[pos] in "+-":
        if source[pos] == "-":
            sign = Fraction(-1)
        pos += 1
    while True:
        mono, coeff = parse_term()
        terms.append((mono, sign * coeff))
        skip_ws()
        if pos >= n:
            break
        if source[pos] == "+":
            sign = Fraction(1)
        elif source[pos] == "-":
            sign = Fraction(-1)
        else:
            raise PolynomialSyntaxError(f"unexpected character {source[pos]!r}", pos)
        pos += 1
        skip_ws()
    return Polynomial(nvars, terms)
