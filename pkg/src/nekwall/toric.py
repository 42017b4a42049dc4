"""Toric surfaces as fixed-point data: localization, characters, blowups.

A surface is a finite list of torus-fixed points, each carrying its two
tangent weights, together with equivariant restrictions of the divisor
classes.  Everything downstream sees only this data: intersection numbers
come out of the localization sum, holomorphic Euler characters out of
exact Laurent division, and a blowup replaces one point by two.

Weights and restrictions are integer pairs (m, n) standing for the linear
form m*e1 + n*e2.  Restriction tables, whether built in or loaded from a
config, are verified against the full localization constraint system at
construction, so an inconsistent table cannot produce a surface.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from .algebra.mpoly import E1, E2, MPoly, RatFn

# separate ring for characters; t1, t2 track the two weight directions
TRING, T1, T2 = ring("t1,t2", QQ, grlex)
_TDOM = TRING.domain


class LocalizationError(ArithmeticError):
    """A localization sum came out non-polynomial where it must not."""


class CharacterError(ArithmeticError):
    """A character computation contradicts the restriction data."""


def _as_weight(w):
    m, n = w
    if not isinstance(m, int) or not isinstance(n, int):
        raise ValueError("weights need integer coefficients, got %r" % (w,))
    return (m, n)


def _vadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _vsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _vneg(a):
    return (-a[0], -a[1])


def weight_form(w) -> RatFn:
    """The linear form m*e1 + n*e2 of an integer pair, as a RatFn."""
    m, n = _as_weight(w)
    return RatFn.from_poly(MPoly(m * E1 + n * E2))


class FixedPoint:
    """A torus-fixed point: an id and the two tangent weights."""

    __slots__ = ("id", "wx", "wy")

    def __init__(self, pid, wx, wy):
        self.id = str(pid)
        self.wx = _as_weight(wx)
        self.wy = _as_weight(wy)
        if self.wx[0] * self.wy[1] - self.wx[1] * self.wy[0] == 0:
            raise ValueError(
                "tangent weights at %s are linearly dependent" % self.id
            )

    def __eq__(self, other):
        if not isinstance(other, FixedPoint):
            return NotImplemented
        return (self.id, self.wx, self.wy) == (other.id, other.wx, other.wy)

    def __hash__(self):
        return hash((self.id, self.wx, self.wy))

    def __repr__(self):
        return "FixedPoint(%r, %s, %s)" % (self.id, self.wx, self.wy)


class EquivClass:
    """Per-fixed-point restrictions of an equivariant cohomology class.

    Values are rational functions in e1, e2 (in practice polynomials);
    arithmetic is pointwise, so a product of classes restricts to the
    product of the restrictions.
    """

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(values)
        if not values:
            raise ValueError("a class needs at least one fixed point")
        self.values = values

    def _zip(self, other):
        if len(self.values) != len(other.values):
            raise ValueError("classes live on different point sets")
        return zip(self.values, other.values)

    def __add__(self, other):
        return EquivClass(x + y for x, y in self._zip(other))

    def __sub__(self, other):
        return EquivClass(x - y for x, y in self._zip(other))

    def __mul__(self, other):
        return EquivClass(x * y for x, y in self._zip(other))

    def __neg__(self):
        return EquivClass(-x for x in self.values)

    def scale(self, c) -> "EquivClass":
        f = RatFn.from_scalar(c)
        return EquivClass(x * f for x in self.values)

    def __eq__(self, other):
        if not isinstance(other, EquivClass):
            return NotImplemented
        return self.values == other.values

    def __repr__(self):
        return "EquivClass(%s)" % (list(self.values),)


class TwoVarCharacter:
    """A virtual character: finitely many weights with integer multiplicity.

    Keys are integer pairs (m, n) for the weight m*e1 + n*e2; values are
    possibly negative multiplicities.  Zero entries are dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {}
        for key, mult in dict(terms).items():
            mult = int(mult)
            if mult:
                clean[_as_weight(key)] = mult
        self.terms = clean

    def chi_number(self) -> int:
        """The value at t1 = t2 = 1."""
        return sum(self.terms.values())

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TwoVarCharacter):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return "TwoVarCharacter(%s)" % (self.items(),)


class ToricSurface:
    """Immutable fixed-point model of a smooth complete toric surface.

    Construction runs the full localization consistency suite: the
    constant and every divisor class localize to zero, all class pairs
    (including the canonical class) localize to integers, and the derived
    numbers satisfy sigma = (K^2 - 2*chi)/3 in ZZ and (K^2 + chi)/12 = 1.
    A surface failing any check cannot be built, which keeps hand-written
    restriction tables and config files honest.
    """

    __slots__ = ("name", "points", "_classes", "_euler", "_pairing",
                 "_k_pair", "_k_sq")

    def __init__(self, name, points, classes):
        self.name = str(name)
        self.points = tuple(points)
        if not self.points:
            raise ValueError("a surface needs at least one fixed point")
        ids = [p.id for p in self.points]
        if len(set(ids)) != len(ids):
            raise ValueError("fixed point ids must be unique")
        self._classes = {}
        for cname, vals in dict(classes).items():
            vals = tuple(_as_weight(v) for v in vals)
            if len(vals) != len(self.points):
                raise ValueError(
                    "class %s has %d restrictions for %d points"
                    % (cname, len(vals), len(self.points))
                )
            self._classes[str(cname)] = vals
        self._euler = tuple(
            weight_form(p.wx) * weight_form(p.wy) for p in self.points
        )
        self._validate()

    # -- derived data -----------------------------------------------------

    @property
    def chi(self) -> int:
        """Topological Euler number: the number of fixed points."""
        return len(self.points)

    def k_squared(self) -> int:
        return self._k_sq

    def signature(self) -> int:
        return (self._k_sq - 2 * self.chi) // 3

    def chi_o(self) -> int:
        """Holomorphic Euler number (K^2 + chi)/12; always 1 here."""
        return (self._k_sq + self.chi) // 12

    def point_ids(self):
        return tuple(p.id for p in self.points)

    def point_index(self, point_id) -> int:
        for i, p in enumerate(self.points):
            if p.id == point_id:
                return i
        raise ValueError("no fixed point %r on %s" % (point_id, self.name))

    def class_names(self):
        return tuple(self._classes)

    # -- class builders ----------------------------------------------------

    def class_vectors(self, xi):
        """Restriction of a class combination as one integer pair per point."""
        combo = _combo(self, xi)
        out = []
        for i in range(len(self.points)):
            m = n = 0
            for cname, mult in combo.items():
                vec = self._classes[cname][i]
                m += mult * vec[0]
                n += mult * vec[1]
            out.append((m, n))
        return tuple(out)

    def class_values(self, xi) -> EquivClass:
        return EquivClass(weight_form(v) for v in self.class_vectors(xi))

    def constant_class(self, value) -> EquivClass:
        return EquivClass([RatFn.from_scalar(value)] * len(self.points))

    def euler_class(self) -> EquivClass:
        """Per-point product of the tangent weights; a c2 representative."""
        return EquivClass(self._euler)

    def c1_class(self) -> EquivClass:
        """Anticanonical representative; see canonical_class for the sign."""
        return EquivClass(
            weight_form(_vneg(_vadd(p.wx, p.wy))) for p in self.points
        )

    def canonical_class(self) -> EquivClass:
        """Representative of K, restricting to +(wx + wy) per point.

        The sign pairs with the restriction-table convention used for the
        named classes (tables are moment-polytope vertices): on the plane
        the pairing of the hyperplane table with +(wx + wy) localizes to
        -3, which is H.K.  Quadratic quantities do not see the sign.
        """
        return EquivClass(
            weight_form(_vadd(p.wx, p.wy)) for p in self.points
        )

    def canonical_vectors(self):
        return tuple(_vadd(p.wx, p.wy) for p in self.points)

    def todd2_class(self) -> EquivClass:
        """Per-point ((wx+wy)^2 + wx*wy)/12; localizes to 1."""
        twelfth = RatFn.from_scalar(Fraction(1, 12))
        out = []
        for i, p in enumerate(self.points):
            c1 = weight_form(_vadd(p.wx, p.wy))
            out.append((c1 * c1 + self._euler[i]) * twelfth)
        return EquivClass(out)

    def point_class(self, point_id) -> EquivClass:
        """A point-class representative supported at one fixed point."""
        idx = self.point_index(point_id)
        vals = [RatFn.zero()] * len(self.points)
        vals[idx] = self._euler[idx]
        return EquivClass(vals)

    # -- validation ---------------------------------------------------------

    def _validate(self):
        if not localize(self, self.constant_class(1)).is_zero():
            raise ValueError("localize(1) != 0 on %s" % self.name)
        if not localize(self, self.canonical_class()).is_zero():
            raise ValueError("localize(K) != 0 on %s" % self.name)
        for cname in self._classes:
            if not localize(self, self.class_values({cname: 1})).is_zero():
                raise ValueError(
                    "localize(%s) != 0 on %s" % (cname, self.name)
                )
        self._pairing = {}
        self._k_pair = {}
        names = list(self._classes)
        kclass = self.canonical_class()
        for i, a in enumerate(names):
            ca = self.class_values({a: 1})
            self._k_pair[a] = _integer_pairing(
                self, ca * kclass, "%s*K" % a
            )
            for b in names[i:]:
                val = _integer_pairing(
                    self, ca * self.class_values({b: 1}), "%s*%s" % (a, b)
                )
                self._pairing[(a, b)] = val
                self._pairing[(b, a)] = val
        self._k_sq = _integer_pairing(self, kclass * kclass, "K*K")
        chi = self.chi
        if (self._k_sq - 2 * chi) % 3:
            raise ValueError(
                "signature (K^2 - 2*chi)/3 = (%d - %d)/3 is not an integer"
                % (self._k_sq, 2 * chi)
            )
        noether = localize(self, self.todd2_class())
        if noether != RatFn.one() or self._k_sq + chi != 12:
            raise ValueError(
                "localize(todd2) = %s with K^2 + chi = %d, expected 1 and 12"
                % (noether.to_text(), self._k_sq + chi)
            )
        euler_sum = localize(self, self.euler_class())
        if euler_sum != RatFn.from_scalar(chi):
            raise ValueError(
                "localize(euler) = %s, expected chi = %d"
                % (euler_sum.to_text(), chi)
            )

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ToricSurface):
            return NotImplemented
        return (
            self.name == other.name
            and self.points == other.points
            and self._classes == other._classes
        )

    def __repr__(self):
        return "ToricSurface(%s: %d points, classes %s)" % (
            self.name,
            len(self.points),
            ",".join(self._classes) or "-",
        )


def _integer_pairing(surface, gamma, label) -> int:
    val = localize(surface, gamma)
    try:
        num = val.as_scalar()
    except ValueError:
        raise ValueError(
            "localize(%s) = %s is not a number" % (label, val.to_text())
        )
    if num.im or num.re.denominator != 1:
        raise ValueError(
            "localize(%s) = %s is not an integer" % (label, num.to_text())
        )
    return int(num.re)


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*([A-Za-z_][A-Za-z_0-9]*)")


def parse_class_combo(text) -> dict:
    """Parse a class combination like "H-2E" or "-3H+4E" into {name: int}.

    Every term needs a class name; coefficients default to 1; signs are
    required between terms; a name may appear only once.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty class combination")
    out = {}
    pos = 0
    first = True
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        if match is None:
            raise ValueError("cannot parse class combination %r" % text)
        sign, digits, name = match.groups()
        if not first and not sign:
            raise ValueError(
                "missing sign before %r in %r" % (name, text)
            )
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if name in out:
            raise ValueError("class %s appears twice in %r" % (name, text))
        out[name] = coeff
        pos = match.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        first = False
    return out


def _combo(surface, xi) -> dict:
    """Normalize a class combination (string or mapping) against a surface."""
    if isinstance(xi, str):
        xi = parse_class_combo(xi)
    out = {}
    for name, mult in xi.items():
        if name not in surface._classes:
            raise ValueError("unknown class %r on %s" % (name, surface.name))
        mult = int(mult)
        if mult:
            out[name] = mult
    return out


def localize(surface, gamma) -> RatFn:
    """Sum of restrictions divided by the tangent-weight products.

    INPUT:
    - ``gamma``: EquivClass, or a scalar which is broadcast to every point

    OUTPUT:
    - The exact rational function sum_i gamma_i / (wx_i * wy_i).  When
      every restriction is a polynomial all of whose terms have total
      degree >= 2 the sum must be a polynomial, and when the terms all
      have degree exactly 2 it must be a number; both are checked, and a
      failure (LocalizationError) means inconsistent restriction data.
    """
    if not isinstance(gamma, EquivClass):
        gamma = surface.constant_class(gamma)
    if len(gamma.values) != len(surface.points):
        raise ValueError(
            "class has %d restrictions for %d points"
            % (len(gamma.values), len(surface.points))
        )
    total = RatFn.zero()
    degrees = set()
    all_poly = True
    for value, euler in zip(gamma.values, surface._euler):
        total = total + value / euler
        if value.is_zero():
            continue
        if not value.is_poly():
            all_poly = False
            continue
        for side in (value.num.re, value.num.im):
            for mono, _ in side.terms():
                degrees.add(sum(mono))
    if all_poly and degrees and min(degrees) >= 2:
        if not total.is_poly():
            raise LocalizationError(
                "localize: non-polynomial sum %s for restrictions of degree"
                " >= 2 (inconsistent restriction data)" % total.to_text()
            )
        if max(degrees) == 2 and not total.is_zero():
            if any(any(m) for m, _ in total.num.re.terms()) or any(
                any(m) for m, _ in total.num.im.terms()
            ):
                raise LocalizationError(
                    "localize: degree-2 product gave %s, not a number"
                    % total.to_text()
                )
    return total


def intersection(surface, first, second) -> int:
    """Intersection number of two class combinations, an exact integer."""
    a = _combo(surface, first)
    b = _combo(surface, second)
    total = 0
    for na, ca in a.items():
        for nb, cb in b.items():
            total += ca * cb * surface._pairing[(na, nb)]
    return total


def intersection_matrix(surface) -> dict:
    """{(name, name): integer} over all ordered pairs of named classes."""
    return dict(surface._pairing)


def xi_numbers(surface, xi):
    """(xi^2, xi.K) of a class combination, both exact integers."""
    combo = _combo(surface, xi)
    xi_sq = intersection(surface, combo, combo)
    xi_k = sum(
        mult * surface._k_pair[name] for name, mult in combo.items()
    )
    return xi_sq, xi_k


def _one_minus_t(w):
    """(poly, shift) with 1 - t^w = t^shift * poly, poly a true polynomial."""
    m, n = w
    sm, sn = min(m, 0), min(n, 0)
    poly = TRING.from_dict({(-sm, -sn): 1, (m - sm, n - sn): -1})
    return poly, (sm, sn)


def chi_character(surface, xi) -> TwoVarCharacter:
    """Holomorphic Euler character of the line bundle of a class combination.

    The fixed-point sum of t^restriction over (1 - t^wx)(1 - t^wy) is
    cleared to a single fraction of Laurent polynomials and divided out;
    an inexact division means the restriction table is not the lift of a
    line bundle.  The value at t1 = t2 = 1 is checked against the closed
    intersection-number expression 1 + (xi^2 - xi.K)/2.
    """
    combo = _combo(surface, xi)
    restr = surface.class_vectors(combo)
    factors = []
    for p in surface.points:
        fx, sx = _one_minus_t(p.wx)
        fy, sy = _one_minus_t(p.wy)
        factors.append((fx * fy, _vadd(sx, sy)))
    den = TRING.one
    den_shift = (0, 0)
    for poly, sh in factors:
        den = den * poly
        den_shift = _vadd(den_shift, sh)
    offsets = []
    partials = []
    for i in range(len(factors)):
        prod = TRING.one
        off = restr[i]
        for j, (poly, sh) in enumerate(factors):
            if j == i:
                continue
            prod = prod * poly
            off = _vadd(off, sh)
        partials.append(prod)
        offsets.append(off)
    base = (min(o[0] for o in offsets), min(o[1] for o in offsets))
    num = TRING.zero
    for prod, off in zip(partials, offsets):
        rel = _vsub(off, base)
        num = num + prod * TRING.from_dict({rel: 1})
    quot, rem = divmod(num, den)
    if rem:
        raise CharacterError(
            "chi_character: inexact Laurent division for %s on %s"
            % (_combo_text(combo), surface.name)
        )
    shift = _vsub(base, den_shift)
    terms = {}
    for mono, coeff in quot.terms():
        f = Fraction(int(_TDOM.numer(coeff)), int(_TDOM.denom(coeff)))
        if f.denominator != 1:
            raise CharacterError(
                "chi_character: non-integer multiplicity %s for %s on %s"
                % (f, _combo_text(combo), surface.name)
            )
        terms[_vadd(mono, shift)] = int(f)
    char = TwoVarCharacter(terms)
    xi_sq, xi_k = xi_numbers(surface, combo)
    expected = Fraction(xi_sq - xi_k, 2) + 1
    if char.chi_number() != expected:
        raise CharacterError(
            "chi_character: value at t=1 is %d for %s on %s, intersection"
            " numbers give %s"
            % (char.chi_number(), _combo_text(combo), surface.name, expected)
        )
    return char


def _combo_text(combo) -> str:
    if not combo:
        return "0"
    parts = []
    for name, mult in combo.items():
        if mult == 1:
            term = name
        elif mult == -1:
            term = "-" + name
        else:
            term = "%d%s" % (mult, name)
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts)


def h1_weights(surface, xi):
    """Weight multisets of the two first-cohomology groups at a wall.

    OUTPUT:
    - (alphas, alpha_primes): sorted lists of integer pairs, the weights
      of H^1 of the wall bundle and of its dual.  Both characters must
      have no positive multiplicity (cohomology in degree one only);
      otherwise the wall is rejected.
    """
    combo = _combo(surface, xi)
    negated = {name: -mult for name, mult in combo.items()}
    out = []
    for side in (combo, negated):
        char = chi_character(surface, side)
        if any(mult > 0 for mult in char.terms.values()):
            raise ValueError("wall not good for this computation")
        weights = []
        for key, mult in char.items():
            weights.extend([key] * (-mult))
        out.append(weights)
    return out[0], out[1]


def blowup(surface, point_id, new_class_name, name=None) -> ToricSurface:
    """Replace one fixed point by two and add the exceptional class.

    The blown point with tangent weights (u, v) becomes points ``<id>1``
    and ``<id>2`` with weights (u, v-u) and (u-v, v).  Existing classes
    keep their restrictions and inherit the blown point's value at both
    new points; the new class restricts to -u and -v there and to zero
    elsewhere.  The result revalidates like any other surface.
    """
    idx = surface.point_index(point_id)
    old = surface.points[idx]
    id1, id2 = old.id + "1", old.id + "2"
    taken = set(surface.point_ids())
    if id1 in taken or id2 in taken:
        raise ValueError("blowup ids %s, %s collide on %s"
                         % (id1, id2, surface.name))
    if str(new_class_name) in surface._classes:
        raise ValueError("class %s already exists on %s"
                         % (new_class_name, surface.name))
    u, v = old.wx, old.wy
    points = []
    for i, p in enumerate(surface.points):
        if i == idx:
            points.append(FixedPoint(id1, u, _vsub(v, u)))
            points.append(FixedPoint(id2, _vsub(u, v), v))
        else:
            points.append(p)
    classes = {}
    for cname, vals in surface._classes.items():
        spread = []
        for i, val in enumerate(vals):
            if i == idx:
                spread.extend([val, val])
            else:
                spread.append(val)
        classes[cname] = spread
    exceptional = []
    for i in range(len(surface.points)):
        if i == idx:
            exceptional.extend([_vneg(u), _vneg(v)])
        else:
            exceptional.append((0, 0))
    classes[str(new_class_name)] = exceptional
    if name is None:
        name = "%s_bl_%s" % (surface.name, old.id)
    return ToricSurface(name, points, classes)


@lru_cache(maxsize=None)
def builtin(name) -> ToricSurface:
    """One of the stock surfaces P2, P1xP1, or F1 (P2 blown up once)."""
    if name == "P2":
        points = [
            FixedPoint("p_z", (1, 0), (0, 1)),
            FixedPoint("p_x", (-1, 0), (-1, 1)),
            FixedPoint("p_y", (1, -1), (0, -1)),
        ]
        return ToricSurface("P2", points, {"H": [(0, 0), (1, 0), (0, 1)]})
    if name == "P1xP1":
        points = [
            FixedPoint("v00", (1, 0), (0, 1)),
            FixedPoint("v10", (-1, 0), (0, 1)),
            FixedPoint("v01", (1, 0), (0, -1)),
            FixedPoint("v11", (-1, 0), (0, -1)),
        ]
        classes = {
            "F": [(0, 0), (1, 0), (0, 0), (1, 0)],
            "G": [(0, 0), (0, 0), (0, 1), (0, 1)],
        }
        return ToricSurface("P1xP1", points, classes)
    if name == "F1":
        return blowup(builtin("P2"), "p_z", "E", name="F1")
    raise ValueError("unknown builtin surface %r" % (name,))


def to_config(surface) -> dict:
    """Plain-data form of a surface: {name, fixed_points, classes}."""
    return {
        "name": surface.name,
        "fixed_points": [
            {"id": p.id, "wx": list(p.wx), "wy": list(p.wy)}
            for p in surface.points
        ],
        "classes": {
            cname: {p.id: list(v) for p, v in zip(surface.points, vals)}
            for cname, vals in surface._classes.items()
        },
    }


def from_config(doc) -> ToricSurface:
    """Build and validate a surface from its plain-data form.

    Unknown keys, missing fields, non-integer coefficients, unknown point
    ids in a class table, and every localization failure all reject the
    document; class entries may omit points, which restrict to zero.
    """
    if not isinstance(doc, dict):
        raise ValueError("surface config must be a mapping")
    extra = set(doc) - {"name", "fixed_points", "classes"}
    if extra:
        raise ValueError("unknown config keys: %s" % ", ".join(sorted(extra)))
    if "name" not in doc or "fixed_points" not in doc:
        raise ValueError("surface config needs 'name' and 'fixed_points'")
    points = []
    for entry in doc["fixed_points"]:
        if not isinstance(entry, dict):
            raise ValueError("each fixed point must be a mapping")
        bad = set(entry) - {"id", "wx", "wy"}
        if bad:
            raise ValueError(
                "unknown fixed point keys: %s" % ", ".join(sorted(bad))
            )
        if set(entry) != {"id", "wx", "wy"}:
            raise ValueError("each fixed point needs id, wx and wy")
        points.append(FixedPoint(entry["id"], entry["wx"], entry["wy"]))
    ids = [p.id for p in points]
    classes = {}
    for cname, table in dict(doc.get("classes", {})).items():
        if not isinstance(table, dict):
            raise ValueError("class %s must map point ids to pairs" % cname)
        unknown = set(table) - set(ids)
        if unknown:
            raise ValueError(
                "class %s names unknown points: %s"
                % (cname, ", ".join(sorted(unknown)))
            )
        classes[cname] = [
            _as_weight(table.get(pid, (0, 0))) for pid in ids
        ]
    return ToricSurface(doc["name"], points, classes)
