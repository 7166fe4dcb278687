"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 semantic error, 3 verdict undecided
at the requested bound.  Output is deterministic; --emit data switches the
relevant commands to a stable JSON rendering.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .aalpha import (
    decide_form_congruence,
    iso_aalpha,
    iso_witness,
    orbit_sample,
    search_iso_degree2,
)
from .morita import (
    DegreeBudgetError,
    corner_filtered_dims,
    is_full_idempotent,
    matrix_presentation,
    verify_fullness_certificate,
    verify_idempotent,
)
from .presentation import (
    Presentation,
    canonicalize,
    transcendental_support,
    twist,
)
from .rewrite import (
    graded_dimension,
    groebner,
    ideal_membership,
    is_generating,
    normal_form,
)
from .scalars import FieldSpec, MismatchError
from .syntax import (
    ParseError,
    parse_automorphism,
    parse_poly,
    parse_presentation,
    parse_scalar,
    poly_to_data,
    presentation_to_data,
    presentation_to_text,
)

PARSE_ERROR = 1
SEMANTIC_ERROR = 2
UNDECIDED = 3


def _add_input_options(sub, required=True):
    group = sub.add_mutually_exclusive_group(required=required)
    group.add_argument("--file", help="presentation file")
    group.add_argument("--pres", help="inline presentation text")


def _add_base_options(sub):
    # the base presentation of a matrix construction; rational base when absent
    group = sub.add_mutually_exclusive_group(required=False)
    group.add_argument("--base", dest="file", help="base presentation file")
    group.add_argument("--pres", help="inline base presentation text")


def _add_emit(sub):
    sub.add_argument("--emit", choices=("text", "data"), default="text")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fpalg",
        description="Exact workbench for finitely presented associative algebras",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    for verb, doc in (
        ("parse", "validate a presentation and report its shape"),
        ("print", "canonical form of a presentation"),
        ("support", "transcendentals occurring in the coefficients"),
        ("canonicalize", "rename the occurring transcendentals onto t1..tr"),
    ):
        sub = subs.add_parser(verb, help=doc)
        _add_input_options(sub)
        _add_emit(sub)

    sub = subs.add_parser("twist", help="twist by a field automorphism")
    _add_input_options(sub)
    sub.add_argument("--auto", required=True, help="automorphism clauses")
    _add_emit(sub)

    sub = subs.add_parser("gb", help="truncated Groebner basis")
    _add_input_options(sub)
    sub.add_argument("--maxdeg", type=int, required=True)
    _add_emit(sub)

    sub = subs.add_parser("nf", help="normal form of a polynomial")
    _add_input_options(sub)
    sub.add_argument("--maxdeg", type=int, required=True)
    sub.add_argument("--expr", required=True)
    _add_emit(sub)

    sub = subs.add_parser("hilbert", help="graded dimensions up to a degree")
    _add_input_options(sub)
    sub.add_argument("--upto", type=int, required=True)
    sub.add_argument("--maxdeg", type=int, default=None)
    _add_emit(sub)

    sub = subs.add_parser("member", help="ideal membership of a polynomial")
    _add_input_options(sub)
    sub.add_argument("--expr", required=True)
    sub.add_argument("--maxdeg", type=int, required=True)
    _add_emit(sub)

    sub = subs.add_parser("generates", help="do the elements generate the quotient")
    _add_input_options(sub)
    sub.add_argument("--elems", required=True, help="semicolon-separated polynomials")
    sub.add_argument("--maxdeg", type=int, required=True)
    _add_emit(sub)

    sub = subs.add_parser("aalpha-iso", help="isomorphism within the quadratic family")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--beta", required=True)
    sub.add_argument("--k", type=int, default=None, help="transcendental count")
    _add_emit(sub)

    sub = subs.add_parser("aalpha-oracle", help="finite-field congruence search")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--alpha", type=int, required=True)
    sub.add_argument("--beta", type=int, required=True)
    _add_emit(sub)

    sub = subs.add_parser("aalpha-orbit", help="parameter orbit under automorphisms")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--autos", required=True, help="semicolon-separated automorphisms")
    sub.add_argument("--k", type=int, default=None)
    _add_emit(sub)

    sub = subs.add_parser("matrix", help="matrix presentation over a base")
    _add_base_options(sub)
    sub.add_argument("--n", type=int, required=True)
    _add_emit(sub)

    sub = subs.add_parser("idem", help="verify an idempotent")
    _add_base_options(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--check", required=True)
    sub.add_argument("--maxdeg", type=int, required=True)
    _add_emit(sub)

    sub = subs.add_parser("full", help="full-idempotent semidecision")
    _add_base_options(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--elem", required=True)
    sub.add_argument("--maxdeg", type=int, required=True)
    _add_emit(sub)

    sub = subs.add_parser("corner", help="corner algebra dimension fingerprint")
    _add_base_options(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--elem", required=True)
    sub.add_argument("--upto", type=int, required=True)
    _add_emit(sub)

    return parser


def _load_presentation(args):
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as handle:
            return parse_presentation(handle.read())
    if getattr(args, "pres", None):
        return parse_presentation(args.pres)
    return None


def _load_base(args):
    P = _load_presentation(args)
    if P is None:
        return Presentation(FieldSpec(0), (), (), name="B")
    return P


def _detect_field(texts, override):
    if override is not None:
        return FieldSpec(override)
    k = 0
    for text in texts:
        for m in re.finditer(r"\bt([0-9]*)\b", text):
            k = max(k, int(m.group(1)) if m.group(1) else 1)
    return FieldSpec(k)


def _emit_data(payload):
    print(json.dumps(payload, sort_keys=True))


def _print_presentation(P, emit):
    if emit == "data":
        _emit_data(presentation_to_data(P))
    else:
        print(presentation_to_text(P))


def _certificate_text(certificate, names):
    pieces = []
    for (u, v), coeff in certificate:
        factors = [*(names[g] for g in u), "e", *(names[g] for g in v)]
        body = "*".join(factors)
        n = coeff.as_integer()
        if n == 1:
            pieces.append(body)
        elif n == -1:
            pieces.append("-" + body)
        elif n is not None:
            pieces.append(f"{n}*{body}")
        else:
            pieces.append(f"({coeff})*{body}")
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += " - " + piece[1:]
        else:
            text += " + " + piece
    return text


# -- handlers ----------------------------------------------------------------


def _cmd_parse(args):
    P = _load_presentation(args)
    if args.emit == "data":
        _emit_data(presentation_to_data(P))
    else:
        print(
            f"ok: {P.name} field={P.field} generators={P.num_gens} "
            f"relations={len(P.relations)}"
        )
    return 0


def _cmd_print(args):
    _print_presentation(_load_presentation(args), args.emit)
    return 0


def _cmd_support(args):
    P = _load_presentation(args)
    support = transcendental_support(P)
    if args.emit == "data":
        _emit_data({"support": [i + 1 for i in support]})
    else:
        print(" ".join(f"t{i + 1}" for i in support) if support else "none")
    return 0


def _cmd_canonicalize(args):
    P = _load_presentation(args)
    P0, sigma = canonicalize(P)
    if args.emit == "data":
        _emit_data(
            {"presentation": presentation_to_data(P0), "sigma": str(sigma)}
        )
    else:
        print(presentation_to_text(P0))
        print(f"sigma: {sigma}")
    return 0


def _cmd_twist(args):
    P = _load_presentation(args)
    sigma = parse_automorphism(args.auto, P.field)
    _print_presentation(twist(P, sigma), args.emit)
    return 0


def _cmd_gb(args):
    P = _load_presentation(args)
    gb = groebner(P, args.maxdeg)
    if args.emit == "data":
        _emit_data(
            {
                "complete_to": gb.complete_to,
                "basis": [poly_to_data(g) for g in gb.basis],
            }
        )
        return 0
    print(f"complete_to: {gb.complete_to}")
    for g in gb.basis:
        print(g.to_text(P.generators))
    return 0


def _cmd_nf(args):
    P = _load_presentation(args)
    f = parse_poly(args.expr, P.field, P.generators)
    gb = groebner(P, args.maxdeg)
    result = normal_form(f, gb)
    if args.emit == "data":
        _emit_data(
            {"normal_form": poly_to_data(result.poly), "verified": result.verified}
        )
    else:
        print(result.poly.to_text(P.generators))
        if not result.verified:
            print(f"unverified: degree exceeds complete_to {gb.complete_to}")
    return 0 if result.verified else UNDECIDED


def _cmd_hilbert(args):
    P = _load_presentation(args)
    maxdeg = args.maxdeg if args.maxdeg is not None else max(
        args.upto, P.max_relation_degree()
    )
    dims = [graded_dimension(P, n, maxdeg) for n in range(args.upto + 1)]
    if args.emit == "data":
        _emit_data({"dims": dims})
    else:
        for n, dim in enumerate(dims):
            print(f"{n} {dim}")
    return 0


def _cmd_member(args):
    P = _load_presentation(args)
    f = parse_poly(args.expr, P.field, P.generators)
    verdict = ideal_membership(f, P, args.maxdeg)
    if args.emit == "data":
        _emit_data(
            {"member": verdict.member, "exact": verdict.exact, "bound": verdict.bound}
        )
    else:
        print(str(verdict))
    return 0 if verdict.member or verdict.exact else UNDECIDED


def _cmd_generates(args):
    P = _load_presentation(args)
    elems = [
        parse_poly(part, P.field, P.generators)
        for part in args.elems.split(";")
        if part.strip()
    ]
    verdict = is_generating(elems, P, args.maxdeg)
    if args.emit == "data":
        _emit_data({"generating": verdict.generating, "bound": verdict.bound})
    else:
        print(str(verdict))
    return 0 if verdict.generating else UNDECIDED


def _cmd_aalpha_iso(args):
    field = _detect_field([args.alpha, args.beta], args.k)
    alpha = parse_scalar(args.alpha, field)
    beta = parse_scalar(args.beta, field)
    isomorphic = iso_aalpha(alpha, beta)
    decision = decide_form_congruence(alpha, beta)
    if isomorphic:
        images = iso_witness(alpha, beta)
        witness = ", ".join(
            f"x{i + 1} -> {img.to_text(('x1', 'x2'))}" for i, img in enumerate(images)
        )
        if args.emit == "data":
            _emit_data({"iso": True, "witness": witness})
        else:
            print("ISO")
            print(f"witness: {witness}")
    else:
        beta2, alpha2 = decision.certificate
        if args.emit == "data":
            _emit_data(
                {"iso": False, "certificate": f"{beta2} != {alpha2}"}
            )
        else:
            print("NOT-ISO")
            print(f"certificate: beta^2 != alpha^2: {beta2} != {alpha2}")
    return 0


def _cmd_aalpha_oracle(args):
    witness = search_iso_degree2(args.alpha, args.beta, args.p)
    if args.emit == "data":
        if witness is None:
            _emit_data({"found": False})
        else:
            q = [[witness.q[i][j].value for j in range(2)] for i in range(2)]
            _emit_data({"found": True, "q": q, "gamma": witness.gamma.value})
        return 0
    if witness is None:
        print("absent")
    else:
        q = witness.q
        print(
            f"congruent Q = [[{q[0][0]}, {q[0][1]}], [{q[1][0]}, {q[1][1]}]] "
            f"gamma = {witness.gamma}"
        )
    return 0


def _cmd_aalpha_orbit(args):
    auto_texts = [part for part in args.autos.split(";") if part.strip()]
    field = _detect_field([args.alpha, *auto_texts], args.k)
    alpha = parse_scalar(args.alpha, field)
    autos = [parse_automorphism(text, field) for text in auto_texts]
    sample = orbit_sample(alpha, autos)
    if args.emit == "data":
        _emit_data({"orbit": [str(s) for s in sample]})
    else:
        for s in sample:
            print(s)
    return 0


def _cmd_matrix(args):
    MP = matrix_presentation(_load_base(args), args.n)
    _print_presentation(MP.pres, args.emit)
    return 0


def _cmd_idem(args):
    MP = matrix_presentation(_load_base(args), args.n)
    e = parse_poly(args.check, MP.pres.field, MP.pres.generators)
    ok = verify_idempotent(e, MP, args.maxdeg)
    if args.emit == "data":
        _emit_data({"idempotent": ok, "bound": args.maxdeg})
    else:
        print("idempotent" if ok else f"not-idempotent (tested to degree {args.maxdeg})")
    return 0


def _cmd_full(args):
    MP = matrix_presentation(_load_base(args), args.n)
    e = parse_poly(args.elem, MP.pres.field, MP.pres.generators)
    verdict = is_full_idempotent(e, MP, args.maxdeg)
    if verdict.full:
        reverified = verify_fullness_certificate(e, MP, verdict.certificate, args.maxdeg)
        text = _certificate_text(verdict.certificate, MP.pres.generators)
        if args.emit == "data":
            _emit_data(
                {
                    "full": True,
                    "bound": verdict.bound,
                    "certificate": text,
                    "reverified": reverified,
                }
            )
        else:
            print(f"full at {verdict.bound}")
            print(f"certificate: {text}")
            print(f"re-verified: {'ok' if reverified else 'FAILED'}")
        return 0 if reverified else SEMANTIC_ERROR
    if args.emit == "data":
        _emit_data({"full": False, "bound": verdict.bound})
    else:
        print(str(verdict))
    return UNDECIDED


def _cmd_corner(args):
    MP = matrix_presentation(_load_base(args), args.n)
    e = parse_poly(args.elem, MP.pres.field, MP.pres.generators)
    dims = corner_filtered_dims(e, MP, args.upto)
    if args.emit == "data":
        _emit_data({"dims": dims})
    else:
        for c, dim in enumerate(dims):
            print(f"{c} {dim}")
    return 0


_HANDLERS = {
    "parse": _cmd_parse,
    "print": _cmd_print,
    "support": _cmd_support,
    "canonicalize": _cmd_canonicalize,
    "twist": _cmd_twist,
    "gb": _cmd_gb,
    "nf": _cmd_nf,
    "hilbert": _cmd_hilbert,
    "member": _cmd_member,
    "generates": _cmd_generates,
    "aalpha-iso": _cmd_aalpha_iso,
    "aalpha-oracle": _cmd_aalpha_oracle,
    "aalpha-orbit": _cmd_aalpha_orbit,
    "matrix": _cmd_matrix,
    "idem": _cmd_idem,
    "full": _cmd_full,
    "corner": _cmd_corner,
}


def run(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.verb](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SEMANTIC_ERROR
    except DegreeBudgetError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return UNDECIDED
    except (ValueError, MismatchError, ZeroDivisionError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SEMANTIC_ERROR


def main(argv=None):
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
