"""Command line front end.

Subcommands: normalize, multiply, star, algebra-eval, basis-convert,
act, solve-matrix, solve-setmap, verify, demo.  Exit status is 0 on
success, 1 when a verification fails, 2 on a usage or parse error.
"""

import argparse
import json
import sys

from . import algebra, basis, congruence, linear_solver, representation, set_solver
from .fields import field_from_name
from .linalg import Matrix, from_envelope, inverse
from .monoid import ParseError, parse_monomial, parse_word, reduce_word


def _monomial_arg(text: str):
    """A word over {x,y} or a triple "(i,j,k)"."""
    stripped = text.strip()
    if stripped.startswith("("):
        return parse_monomial(stripped)
    return reduce_word(stripped)


def _emit(args, payload: dict, text_lines: list[str]):
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_normalize(args) -> int:
    m = _monomial_arg(args.word)
    _emit(args, {"input": args.word, "canonical": str(m), "word": m.word()}, [str(m)])
    return 0


def cmd_multiply(args) -> int:
    product = _monomial_arg(args.left) * _monomial_arg(args.right)
    _emit(args, {"product": str(product)}, [str(product)])
    return 0


def cmd_star(args) -> int:
    result = _monomial_arg(args.word).star()
    _emit(args, {"star": str(result)}, [str(result)])
    return 0


def cmd_algebra_eval(args) -> int:
    field = field_from_name(args.field)
    value = algebra.parse_element(args.expression, field)
    _emit(args, {"field": field.name, "value": str(value)}, [str(value)])
    return 0


def cmd_basis_convert(args) -> int:
    field = field_from_name(args.field)
    value = algebra.parse_element(args.expression, field)
    coords = basis.to_projection_basis(value)
    payload = {
        "field": field.name,
        "coordinates": [{"coefficient": str(c), "term": str(t)} for c, t in coords],
    }
    _emit(args, payload, [f"{c} * {t}" for c, t in coords] or ["0"])
    return 0


def _parse_vector(text: str, field) -> representation.SupportedVector:
    """Sums of [coeff*]b(n,h) terms, e.g. "b(3,1) + 2*b(2,2)"."""
    items = []
    pos = 0
    n = len(text)

    def skip_ws(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise ParseError(f"expected '+' or '-', found {text[pos]!r}", pos)
        first = False
        coeff = field.one
        if text[pos] != "b":
            start = pos
            while pos < n and (text[pos].isdigit() or text[pos] == "/"):
                pos += 1
            if pos == start:
                raise ParseError(f"expected a coefficient or 'b', found {text[pos]!r}", pos)
            try:
                coeff = field.parse(text[start:pos])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad coefficient {text[start:pos]!r}", start) from None
            pos = skip_ws(pos)
            if pos < n and text[pos] == "*":
                pos = skip_ws(pos + 1)
        if pos >= n or text[pos] != "b":
            found = repr(text[pos]) if pos < n else "end of input"
            raise ParseError(f"expected a basis term b(n,h), found {found}", pos)
        pos += 1
        pos_open = skip_ws(pos)
        if pos_open >= n or text[pos_open] != "(":
            raise ParseError("expected '(' after b", pos_open)
        close = text.find(")", pos_open)
        if close == -1:
            raise ParseError("unclosed basis index", pos_open)
        inner = text[pos_open + 1 : close].split(",")
        if len(inner) != 2:
            raise ParseError("basis index must be b(n,h)", pos_open)
        try:
            idx = (int(inner[0]), int(inner[1]))
        except ValueError:
            raise ParseError(f"bad basis index b({text[pos_open + 1:close]})", pos_open) from None
        pos = skip_ws(close + 1)
        items.append((idx, -coeff if sign < 0 else coeff))
    return representation.SupportedVector.from_items(field, items, allow_plus=False)


def cmd_act(args) -> int:
    field = field_from_name(args.field)
    element = algebra.parse_element(args.expression, field)
    vector = _parse_vector(args.vector, field)
    result = representation.act(element, vector)
    _emit(args, {"field": field.name, "result": str(result)}, [str(result)])
    return 0


def cmd_solve_matrix(args) -> int:
    with open(args.infile, "r", encoding="utf-8") as handle:
        envelope = json.load(handle)
    a = from_envelope(envelope)
    if args.field is not None and field_from_name(args.field) != a.field:
        raise ParseError(f"--field {args.field} does not match the file's field {a.field.name}", 0)
    y = linear_solver.strong_inner_inverse(a)
    jmax = args.bound if args.bound is not None else a.nrows + 5
    report = linear_solver.verify_strong(a, y, jmax)
    properties = linear_solver.inner_inverse_properties_hold(a, y, jmax)
    payload = {
        "y": y.to_envelope(),
        "report": {
            "jmax": jmax,
            "relations_ok": report.ok,
            "witness": list(report.witness) if report.witness else None,
            "properties_ok": properties,
        },
    }
    print(json.dumps(payload))
    return 0 if report.ok and properties else 1


def cmd_solve_setmap(args) -> int:
    x = set_solver.parse_endomap(args.map)
    y = set_solver.build_strong_inner_inverse(x)
    jmax = args.bound if args.bound is not None else x.size + 1
    witness = set_solver.verify_relations(x, y, jmax)
    depths = set_solver.depth_profile(x)
    payload = {
        "y": str(y),
        "depth": [None if d == float("inf") else d for d in depths],
        "jmax": jmax,
        "relations_ok": witness is None,
        "witness": str(witness) if witness else None,
        "bigcap": set_solver.bigcap_condition(x),
    }
    lines = [
        f"y = {y}",
        "depth = " + ",".join("inf" if d == float("inf") else str(d) for d in depths),
        f"relations ok for j <= {jmax}: {'yes' if witness is None else f'NO ({witness})'}",
        f"eventual image maps onto itself: {'yes' if payload['bigcap'] else 'no'}",
    ]
    _emit(args, payload, lines)
    return 0 if witness is None else 1


def _verify_normal_form(args) -> list[tuple[str, bool, str]]:
    bound = args.bound if args.bound is not None else 6
    report = congruence.compare(bound)
    return [
        (
            f"normal-form classes at length {report.length_bound}",
            report.equal,
            f"{report.embedding_class_count} classes, "
            f"{report.element_count} representable elements",
        )
    ]


def _verify_monoid_laws(args) -> list[tuple[str, bool, str]]:
    from .monoid import enumerate_monomials

    bound = args.bound if args.bound is not None else 4
    monos = list(enumerate_monomials(max_j=bound))
    ok_inverse = all(m * m.star() * m == m and m.star() * m * m.star() == m.star() for m in monos)
    ok_invol = all(m.star().star() == m for m in monos)
    ok_anti = all((a * b).star() == b.star() * a.star() for a in monos for b in monos)
    idems = [m for m in monos if m.is_idempotent()]
    ok_comm = all(e * f == f * e for e in idems for f in idems)
    return [
        (f"inverse-monoid laws, j <= {bound}", ok_inverse, f"{len(monos)} elements"),
        (f"involution laws, j <= {bound}", ok_invol and ok_anti, "star is an anti-automorphism"),
        (f"idempotent commutation, j <= {bound}", ok_comm, f"{len(idems)} idempotents"),
    ]


def _verify_algebra(args) -> list[tuple[str, bool, str]]:
    field = field_from_name(args.field)
    x, y = algebra.gen_x(field), algebra.gen_y(field)
    one = algebra.one(field)
    zero = algebra.zero(field)

    def lz(i):
        return algebra.ell(field, i) if i >= 1 else zero

    def rz(i):
        return algebra.rr(field, i) if i >= 1 else zero

    ok_xyyx = x * y == one - lz(1) and y * x == one - rz(1)
    ok_shift = all(
        lz(i) * x == x * lz(i - 1)
        and rz(i - 1) * x == x * rz(i)
        and lz(i - 1) * y == y * lz(i)
        and rz(i) * y == y * rz(i - 1)
        for i in range(1, 7)
    )
    ok_kill = all(
        algebra.xpow(field, i) * rz(i) == zero and algebra.ypow(field, i) * lz(i) == zero
        for i in range(1, 7)
    )
    ok_orth = all(
        lz(i) * lz(j) == (lz(i) if i == j else zero)
        and rz(i) * rz(j) == (rz(i) if i == j else zero)
        and lz(i) * rz(j) == rz(j) * lz(i)
        for i in range(1, 6)
        for j in range(1, 6)
    )
    ps = [algebra.p_n(field, n) for n in range(1, 7)]
    ok_central = all(p * p == p and p * x == x * p and p * y == y * p for p in ps)
    ok_porth = all(
        ps[a] * ps[b] == zero for a in range(6) for b in range(6) if a != b
    )
    return [
        ("xy = 1 - l1 and yx = 1 - r1", ok_xyyx, field.name),
        ("shift identities l_i x = x l_(i-1) etc., i <= 6", ok_shift, field.name),
        ("x^i r_i = 0 and y^i l_i = 0, i <= 6", ok_kill, field.name),
        ("orthogonal idempotents l, r, i,j <= 5", ok_orth, field.name),
        ("p_n idempotent and central, n <= 6", ok_central, field.name),
        ("p_n p_m = 0 for n != m", ok_porth, field.name),
    ]


def _verify_basis(args) -> list[tuple[str, bool, str]]:
    import random

    from .monoid import enumerate_monomials

    field = field_from_name(args.field)
    terms = [t for t in basis.terms_with_parameters(4)]
    ok_indep = representation.independence_check(
        list(enumerate_monomials(max_j=2)), 3, field
    )
    rng = random.Random(args.seed if args.seed is not None else 7)
    monos = list(enumerate_monomials(max_j=4))
    count = 50
    ok_round = True
    for _ in range(count):
        items = [
            (rng.choice(monos), field.from_int(rng.randint(-5, 5)))
            for _ in range(rng.randint(1, 6))
        ]
        element = algebra.AlgebraElement.from_items(field, items)
        try:
            basis.to_projection_basis(element)
        except RuntimeError:
            ok_round = False
            break
    return [
        ("monomials j <= 2 independent on 3 blocks", ok_indep, field.name),
        (
            f"projection-basis round trip, {count} random elements",
            ok_round,
            f"{len(terms)} candidate terms at bound 4",
        ),
    ]


def _verify_matrices(args) -> list[tuple[str, bool, str]]:
    from .fields import QQ, PrimeField

    count = 50
    seed = args.seed if args.seed is not None else linear_solver.DEFAULT_SUITE_SEED
    ok = True
    for field in (QQ, PrimeField(5)):
        for a in linear_solver.suite_matrices(count, field, seed=seed):
            y = linear_solver.strong_inner_inverse(a)
            if not linear_solver.inner_inverse_properties_hold(a, y, a.nrows + 5):
                ok = False
                break
    return [(f"matrix solver, {count} matrices per field", ok, "fields q and fp:5")]


def _verify_set_maps(args) -> list[tuple[str, bool, str]]:
    size = args.bound if args.bound is not None else 4
    ok = True
    checked = 0
    for x in set_solver.all_endomaps(size):
        y = set_solver.build_strong_inner_inverse(x)
        if set_solver.verify_relations(x, y, size + 1) is not None:
            ok = False
            break
        if not set_solver.bigcap_condition(x):
            ok = False
            break
        checked += 1
    return [(f"set solver, all {checked} endomaps of a {size}-set", ok, f"jmax = {size + 1}")]


def _verify_gallery(args) -> list[tuple[str, bool, str]]:
    violation = representation.find_relation_violation(
        representation.x_ceg, representation.y_ceg, jmax=3, max_block=4
    )
    expected = violation is not None and (
        violation.family,
        violation.j,
        violation.index,
    ) == (1, 2, (2, 1))
    powers_ok = representation.power_relations_hold(
        representation.x_ceg, representation.y_ceg, 6, 12
    )
    repair_ok = representation.relations_hold(
        representation.x_ceg * representation.u_perm, representation.z_xu, 6, 10
    )
    return [
        ("twisted shift satisfies all power relations", powers_ok, "n <= 6, blocks <= 12"),
        ("twisted shift breaks the full family at the known spot", expected, "family 1, j = 2, b(2,1)"),
        ("composite with the unit has the strong inner inverse z", repair_ok, "j <= 6, blocks <= 10"),
    ]


def _verify_faithfulness(args) -> list[tuple[str, bool, str]]:
    field = field_from_name(args.field)
    xmat = representation.truncation_matrix(algebra.gen_x(field), 3)
    first = representation.faithfulness_first_failure(xmat)
    ok_lxr = all(representation.lxr_image_check(i, 4, field) for i in range(1, 4))
    return [
        ("first faithfulness failure on 3 blocks is i = 4", first == 4, f"found i = {first}"),
        ("projection complements for i <= 3 on 4 blocks", ok_lxr, field.name),
    ]


_SUITES = {
    "normal-form": _verify_normal_form,
    "monoid-laws": _verify_monoid_laws,
    "algebra": _verify_algebra,
    "basis": _verify_basis,
    "matrices": _verify_matrices,
    "set-maps": _verify_set_maps,
    "gallery": _verify_gallery,
    "faithfulness": _verify_faithfulness,
}


def cmd_verify(args) -> int:
    names = args.suites or list(_SUITES)
    for name in names:
        if name not in _SUITES:
            raise ParseError(f"unknown suite {name!r} (choose from {', '.join(_SUITES)})", 0)
    failures = 0
    results = []
    for name in names:
        for label, ok, detail in _SUITES[name](args):
            results.append({"suite": name, "check": label, "ok": ok, "detail": detail})
            if not ok:
                failures += 1
    if getattr(args, "json", False):
        print(json.dumps({"results": results, "failures": failures}))
    else:
        for r in results:
            print(f"{'ok  ' if r['ok'] else 'FAIL'} {r['check']} ({r['detail']})")
    return 0 if failures == 0 else 1


def _demo_counterexample() -> list[str]:
    v = representation.find_relation_violation(
        representation.x_ceg, representation.y_ceg, jmax=3, max_block=4
    )
    name = "b+" if v.index == representation.PLUS else f"b({v.index[0]},{v.index[1]})"

    def side(d):
        return " + ".join(
            ("b+" if i == representation.PLUS else f"b({i[0]},{i[1]})")
            + (f"*{c}" if c != 1 else "")
            for i, c in d.items()
        ) or "0"

    return [
        "One extra basis vector breaks everything:",
        "  x b(n,n) = b+ for every block n, x b+ = 0,",
        "  y b(n,1) = b(n+1,1), y b+ = b(1,1).",
        "This pair satisfies x^n y^n x^n = x^n and y^n x^n y^n = y^n for all n,",
        "but the full defining family fails:",
        f"  family {v.family}, j = {v.j}, on {name}: left side gives {side(v.left)}, "
        f"right side gives {side(v.right)}.",
        "No strong inner inverse of this x exists at all.",
    ]


def _demo_repair() -> list[str]:
    ok = representation.relations_hold(
        representation.x_ceg * representation.u_perm, representation.z_xu, 6, 10
    )
    return [
        "Multiplying by a unit can repair the defect:",
        "  u cycles each block (b(n,1) -> b(n,n), otherwise a back shift) and fixes b+.",
        "  x∘u fixes b(n,i) for i > 1, sends every b(n,1) to b+, kills b+.",
        "  z with z b(n,i) = b(n,i) for i > 1, z b(n,1) = 0, z b+ = b(1,1)",
        f"  is a strong inner inverse of x∘u: relations j <= 6 on blocks <= 10: "
        f"{'verified' if ok else 'FAILED'}.",
    ]


def _demo_yprime(field) -> list[str]:
    x = algebra.gen_x(field)
    yp = algebra.y_prime(field, 2)
    lines = [
        "The twisted inner inverse y' = y + x l_1 r_2 (block size m = 2):",
        f"  x y' x = x: {x * yp * x == x}",
        f"  (y')^2 x^2 = y^2 x^2: {yp**2 * algebra.xpow(field, 2) == algebra.ypow(field, 2) * algebra.xpow(field, 2)}",
        f"  y' = y' x y' fails: {yp != yp * x * yp}",
        f"  (y')^2 p_2 = p_2: {yp**2 * algebra.p_n(field, 2) == algebra.p_n(field, 2)}",
        f"  y^2 p_2 = 0: {algebra.ypow(field, 2) * algebra.p_n(field, 2) == algebra.zero(field)}",
    ]
    return lines


def _demo_nonuniqueness(field) -> list[str]:
    xmat, ymat, conj = representation.conjugated_inner_inverse(3, field)
    report = linear_solver.verify_strong(xmat, conj, 5)
    return [
        "Strong inner inverses are not unique:",
        "  on 3 blocks, x is nilpotent, so 1+x is invertible and fixes x under conjugation;",
        f"  (1+x)^-1 y (1+x) differs from y: {conj != ymat},",
        f"  yet still satisfies the relations with x (j <= 5): {report.ok}.",
    ]


def _demo_small_images(field) -> list[str]:
    x, y = algebra.gen_x(field), algebra.gen_y(field)
    combo = algebra.one(field) + x * y * y * x - x * y - y * x
    l1r1 = algebra.ell(field, 1) * algebra.rr(field, 1)
    coords = basis.to_projection_basis(combo)
    return [
        "Why 1 + xyyx = xy + yx is almost, but not quite, a relation:",
        "  on every block of size n > 1 both sides agree, but on the 1-dimensional",
        "  block the left side acts as 1 and the right side as 0.",
        f"  1 + xyyx - xy - yx = l_1 r_1: {combo == l1r1}",
        "  projection-basis coordinates: "
        + ", ".join(f"{c} * {t}" for c, t in coords),
    ]


def cmd_demo(args) -> int:
    field = field_from_name(args.field)
    demos = {
        "counterexample": lambda: _demo_counterexample(),
        "repair": lambda: _demo_repair(),
        "y-prime": lambda: _demo_yprime(field),
        "non-uniqueness": lambda: _demo_nonuniqueness(field),
        "small-images": lambda: _demo_small_images(field),
    }
    if args.name not in demos:
        raise ParseError(f"unknown demo {args.name!r} (choose from {', '.join(demos)})", 0)
    for line in demos[args.name]():
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fim",
        description="Exact computation in the free inverse monoid on one generator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--field", default="q", help="scalar field: q or fp:<p>")
        p.add_argument("--bound", type=int, default=None, help="length/relation bound")
        p.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
        return p

    p = add("normalize", cmd_normalize, "canonical form of a word or triple")
    p.add_argument("word")
    p = add("multiply", cmd_multiply, "product of two monoid elements")
    p.add_argument("left")
    p.add_argument("right")
    p = add("star", cmd_star, "the involution of a monoid element")
    p.add_argument("word")
    p = add("algebra-eval", cmd_algebra_eval, "evaluate an algebra expression")
    p.add_argument("expression")
    p = add("basis-convert", cmd_basis_convert, "projection-basis coordinates of an expression")
    p.add_argument("expression")
    p = add("act", cmd_act, "apply an algebra element to a vector on the standard space")
    p.add_argument("expression")
    p.add_argument("--vector", required=True, help='e.g. "b(3,1) + 2*b(2,2)"')
    p = add("solve-matrix", cmd_solve_matrix, "strong inner inverse of a square matrix")
    p.add_argument("--in", dest="infile", required=True, help="JSON matrix envelope")
    p = add("solve-setmap", cmd_solve_setmap, "strong inner inverse of a finite set endomap")
    p.add_argument("--map", required=True, help='comma-separated images, e.g. "1,0,0"')
    p = add("verify", cmd_verify, "run verification suites")
    p.add_argument("suites", nargs="*", help=f"suites: {', '.join(_SUITES)} (default all)")
    p = add("demo", cmd_demo, "print one of the worked counterexamples")
    p.add_argument(
        "name",
        help="counterexample | repair | y-prime | non-uniqueness | small-images",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
