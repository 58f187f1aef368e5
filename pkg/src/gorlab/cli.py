"""Text-format parser for algebra presentations, command dispatcher, and
JSON report emitter.

The .alg grammar (UTF-8, line oriented, # comments):

    field Q            or    field F <p>
    vars <id> <id> ...
    rel <polynomial>                      (repeatable)
    orient <monomial> : <scalar>, ...     (against the standard-monomial basis)
    aug <id> = <scalar>, ...
    family                                (reserves the name t)

Polynomials use + - * ^ with integer or rational literals; juxtaposition is
forbidden.  Reports are JSON objects tagged "schema": "gorlab/1"; identical
invocations produce byte-identical output.  Exit codes: 0 success, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FiniteAlgebra
from .errors import (
    DuplicateClause,
    GorlabError,
    IOFailure,
    NotIsotropicUnit,
    ParseError,
    UnknownMonomial,
    UnknownVariable,
)
from .families import homotopy_families, robber_family, specialize
from .forms import BilinearForm, hyp_embed, hyperbolic_form, gro_member, witt_invariants
from .frobenius import (
    Augmented,
    OrientedAlgebra,
    augmentation_check,
    connected_sum,
    gorenstein_test,
    isotropy_check,
    rees_family,
    socle_generator,
)
from .algebra import Subspace
from .poly import MultiPoly, grevlex_key, groebner_basis, mono_label, standard_monomials
from .poly import quotient_algebra as compile_quotient
from .scalar import GF, QQ, Field, Scalar
from .tensors import (
    cw_tensor,
    degeneration_to_cw,
    one_generic,
    reduced_degeneration,
    strassen_commuting,
    structure_tensor,
)

SCHEMA = "gorlab/1"


# ---------------------------------------------------------------------------
# tokenizing and parsing


@dataclass
class _Token:
    kind: str  # IDENT NUMBER OP NEWLINE EOF
    text: str
    line: int
    col: int


def _tokenize(text: str):
    tokens = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        n = len(line)
        while col < n:
            ch = line[col]
            if ch in " \t":
                col += 1
                continue
            start = col
            if ch.isalpha() or ch == "_":
                while col < n and (line[col].isalnum() or line[col] == "_"):
                    col += 1
                tokens.append(_Token("IDENT", line[start:col], ln, start + 1))
            elif ch.isdigit():
                while col < n and line[col].isdigit():
                    col += 1
                if col < n and line[col] == "/" and col + 1 < n and line[col + 1].isdigit():
                    col += 1
                    while col < n and line[col].isdigit():
                        col += 1
                tokens.append(_Token("NUMBER", line[start:col], ln, start + 1))
            elif ch in "+-*^:=,()":
                tokens.append(_Token("OP", ch, ln, start + 1))
                col += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", ln, start + 1)
        tokens.append(_Token("NEWLINE", "", ln, n + 1))
    tokens.append(_Token("EOF", "", len(text.splitlines()) + 1, 1))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def next(self) -> _Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind, text=None) -> _Token:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            raise ParseError(
                f"expected {want}, found {t.text or t.kind!r}",
                t.line,
                t.col,
                expected=want,
            )
        return self.next()

    def at_line_end(self) -> bool:
        return self.peek().kind in ("NEWLINE", "EOF")


@dataclass
class PresentationDocument:
    """A parsed .alg file, before compilation."""

    field: Field
    variables: tuple
    relations: tuple  # of MultiPoly
    orient: tuple | None  # of (monomial exponent tuple, Scalar)
    aug: tuple | None  # of (variable name, Scalar)
    family: bool = False

    def serialize(self) -> str:
        lines = []
        if self.field.characteristic == 0:
            lines.append("field Q")
        else:
            lines.append(f"field F {self.field.characteristic}")
        lines.append("vars " + " ".join(self.variables))
        if self.family:
            lines.append("family")
        for r in self.relations:
            lines.append("rel " + _poly_source(r))
        if self.orient is not None:
            pairs = ", ".join(
                f"{mono_label(m, self.variables)} : {_scalar_source(c)}"
                for m, c in self.orient
            )
            lines.append("orient " + pairs)
        if self.aug is not None:
            pairs = ", ".join(f"{v} = {_scalar_source(c)}" for v, c in self.aug)
            lines.append("aug " + pairs)
        return "\n".join(lines) + "\n"


def _scalar_source(c: Scalar) -> str:
    if c.field.characteristic == 0:
        return str(c.value)
    return str(c.value)


def _poly_source(p: MultiPoly) -> str:
    if not p:
        return "0"
    parts = []
    for m in sorted(p.terms, key=grevlex_key, reverse=True):
        c = p.terms[m]
        lbl = mono_label(m, p.variables)
        neg = c.field.characteristic == 0 and c.value < 0
        mag = -c if neg else c
        if lbl == "1":
            chunk = _scalar_source(mag)
        elif mag == 1:
            chunk = lbl
        else:
            chunk = f"{_scalar_source(mag)}*{lbl}"
        if not parts:
            parts.append(("-" if neg else "") + chunk)
        else:
            parts.append(("- " if neg else "+ ") + chunk)
    return " ".join(parts)


def _parse_scalar(p: _Parser, field: Field) -> Scalar:
    neg = False
    if p.peek().kind == "OP" and p.peek().text == "-":
        p.next()
        neg = True
    t = p.expect("NUMBER")
    val = Fraction(t.text)
    s = field.scalar(-val if neg else val)
    return s


def _parse_poly(p: _Parser, field: Field, variables) -> MultiPoly:
    var_index = {v: i for i, v in enumerate(variables)}

    def parse_atom() -> MultiPoly:
        t = p.peek()
        if t.kind == "OP" and t.text == "(":
            p.next()
            e = parse_expr()
            p.expect("OP", ")")
            return e
        if t.kind == "OP" and t.text == "-":
            p.next()
            return -parse_atom_pow()
        if t.kind == "NUMBER":
            p.next()
            return MultiPoly.constant(field, variables, field.scalar(Fraction(t.text)))
        if t.kind == "IDENT":
            if t.text not in var_index:
                raise UnknownVariable(
                    f"unknown variable {t.text!r} at line {t.line}, column {t.col}"
                )
            p.next()
            return MultiPoly.variable(field, variables, var_index[t.text])
        raise ParseError(
            f"expected a term, found {t.text or t.kind!r}", t.line, t.col,
            expected="term",
        )

    def parse_atom_pow() -> MultiPoly:
        base = parse_atom()
        t = p.peek()
        if t.kind == "OP" and t.text == "^":
            p.next()
            ex = p.expect("NUMBER")
            if "/" in ex.text:
                raise ParseError("exponent must be an integer", ex.line, ex.col)
            base = base ** int(ex.text)
        # juxtaposition is forbidden: the next token must be an operator
        nxt = p.peek()
        if nxt.kind in ("IDENT", "NUMBER") or (nxt.kind == "OP" and nxt.text == "("):
            raise ParseError(
                "juxtaposition is not allowed; use '*'", nxt.line, nxt.col,
                expected="operator",
            )
        return base

    def parse_term() -> MultiPoly:
        out = parse_atom_pow()
        while p.peek().kind == "OP" and p.peek().text == "*":
            p.next()
            out = out * parse_atom_pow()
        return out

    def parse_expr() -> MultiPoly:
        out = parse_term()
        while p.peek().kind == "OP" and p.peek().text in "+-":
            op = p.next().text
            rhs = parse_term()
            out = out + rhs if op == "+" else out - rhs
        return out

    return parse_expr()


def _parse_monomial_text(p: _Parser, variables):
    """Monomial in an orient clause: products of powers of variables, or 1."""
    var_index = {v: i for i, v in enumerate(variables)}
    expo = [0] * len(variables)
    t = p.peek()
    if t.kind == "NUMBER" and t.text == "1":
        p.next()
        return tuple(expo)
    while True:
        t = p.expect("IDENT")
        if t.text not in var_index:
            raise UnknownVariable(
                f"unknown variable {t.text!r} at line {t.line}, column {t.col}"
            )
        e = 1
        if p.peek().kind == "OP" and p.peek().text == "^":
            p.next()
            ex = p.expect("NUMBER")
            e = int(ex.text)
        expo[var_index[t.text]] += e
        if p.peek().kind == "OP" and p.peek().text == "*":
            p.next()
            continue
        return tuple(expo)


def parse_presentation(text: str) -> PresentationDocument:
    """Parse the .alg grammar; errors carry line and column."""
    p = _Parser(_tokenize(text))
    fld: Field | None = None
    variables: tuple | None = None
    relations = []
    orient = None
    aug = None
    family = False

    while p.peek().kind != "EOF":
        if p.peek().kind == "NEWLINE":
            p.next()
            continue
        head = p.expect("IDENT")
        if head.text == "field":
            if fld is not None:
                raise DuplicateClause(f"duplicate field clause at line {head.line}")
            t = p.expect("IDENT")
            if t.text == "Q":
                fld = QQ
            elif t.text == "F":
                num = p.expect("NUMBER")
                fld = GF(int(num.text))
            else:
                raise ParseError("expected Q or F <p>", t.line, t.col, expected="Q|F")
        elif head.text == "vars":
            if variables is not None:
                raise DuplicateClause(f"duplicate vars clause at line {head.line}")
            names = []
            while not p.at_line_end():
                t = p.expect("IDENT")
                if t.text in names:
                    raise DuplicateClause(
                        f"duplicate variable {t.text!r} at line {t.line}"
                    )
                names.append(t.text)
            if not names:
                raise ParseError("vars needs at least one name", head.line, head.col)
            variables = tuple(names)
        elif head.text == "family":
            family = True
        elif head.text == "rel":
            if fld is None or variables is None:
                raise ParseError(
                    "rel before field/vars clauses", head.line, head.col
                )
            relations.append(_parse_poly(p, fld, variables))
        elif head.text == "orient":
            if orient is not None:
                raise DuplicateClause(f"duplicate orient clause at line {head.line}")
            if fld is None or variables is None:
                raise ParseError("orient before field/vars", head.line, head.col)
            orient = []
            while True:
                m = _parse_monomial_text(p, variables)
                p.expect("OP", ":")
                c = _parse_scalar(p, fld)
                orient.append((m, c))
                if p.peek().kind == "OP" and p.peek().text == ",":
                    p.next()
                    continue
                break
            orient = tuple(orient)
        elif head.text == "aug":
            if aug is not None:
                raise DuplicateClause(f"duplicate aug clause at line {head.line}")
            if fld is None or variables is None:
                raise ParseError("aug before field/vars", head.line, head.col)
            aug = []
            while True:
                v = p.expect("IDENT")
                if v.text not in variables:
                    raise UnknownVariable(
                        f"unknown variable {v.text!r} at line {v.line}, column {v.col}"
                    )
                p.expect("OP", "=")
                c = _parse_scalar(p, fld)
                aug.append((v.text, c))
                if p.peek().kind == "OP" and p.peek().text == ",":
                    p.next()
                    continue
                break
            aug = tuple(aug)
        else:
            raise ParseError(
                f"unknown clause {head.text!r}", head.line, head.col,
                expected="field|vars|rel|orient|aug|family",
            )
        if not p.at_line_end():
            t = p.peek()
            raise ParseError(
                f"trailing input {t.text!r}", t.line, t.col, expected="end of line"
            )
    if fld is None:
        raise ParseError("missing field clause", 1, 1, expected="field")
    if variables is None:
        raise ParseError("missing vars clause", 1, 1, expected="vars")
    if family and "t" in variables:
        raise DuplicateClause("the name t is reserved by the family flag")
    return PresentationDocument(
        fld, variables, tuple(relations), orient, aug, family
    )


# ---------------------------------------------------------------------------
# compilation


@dataclass
class CompiledDocument:
    doc: PresentationDocument
    algebra: FiniteAlgebra
    phi: tuple | None
    e: tuple | None

    def oriented(self) -> OrientedAlgebra:
        if self.phi is None:
            raise UnknownMonomial("document has no orient clause")
        return OrientedAlgebra(self.algebra, self.phi)

    def augmented(self) -> Augmented:
        if self.e is None:
            raise UnknownVariable("document has no aug clause")
        return Augmented(self.oriented(), self.e)


def compile_presentation(doc: PresentationDocument) -> CompiledDocument:
    """Quotient compilation plus resolution of orient/aug clauses against
    the standard-monomial basis."""
    A = compile_quotient(list(doc.relations))
    gb = groebner_basis(list(doc.relations))
    monos = standard_monomials(gb)
    index = {m: i for i, m in enumerate(monos)}
    phi = None
    if doc.orient is not None:
        vec = [doc.field.zero] * A.dim
        for m, c in doc.orient:
            if m not in index:
                raise UnknownMonomial(
                    f"{mono_label(m, doc.variables)} is not a standard monomial"
                )
            vec[index[m]] = vec[index[m]] + c
        phi = tuple(vec)
    e = None
    if doc.aug is not None:
        values = {v: doc.field.zero for v in doc.variables}
        for v, c in doc.aug:
            values[v] = c
        vec = []
        for m in monos:
            val = doc.field.one
            for name, expo in zip(doc.variables, m):
                for _ in range(expo):
                    val = val * values[name]
            vec.append(val)
        e = tuple(vec)
        if not augmentation_check(A, e):
            raise UnknownVariable("aug clause does not define an algebra map")
    return CompiledDocument(doc, A, phi, e)


def load_algebra_file(path: str) -> CompiledDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as ex:
        raise IOFailure(f"cannot read {path}: {ex.strerror or ex}") from ex
    return compile_presentation(parse_presentation(text))


def load_form_file(path: str) -> BilinearForm:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as ex:
        raise IOFailure(f"cannot read {path}: {ex.strerror or ex}") from ex
    except json.JSONDecodeError as ex:
        raise IOFailure(f"{path} is not valid JSON: {ex}") from ex
    try:
        fdesc = data["field"]
        fld = QQ if fdesc["characteristic"] == 0 else GF(fdesc["characteristic"])
        gram = [[fld.parse(x) for x in row] for row in data["gram"]]
    except (KeyError, TypeError) as ex:
        raise IOFailure(f"{path} is not a form file (field + gram): {ex}") from ex
    return BilinearForm(fld, gram)


# ---------------------------------------------------------------------------
# command implementations


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        out = json.dumps(payload, sort_keys=True, indent=2)
    else:
        out = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(out + "\n")


def _labelled(labels, vec) -> dict:
    return {l: str(x) for l, x in zip(labels, vec)}


def _augmented_payload(t: Augmented) -> dict:
    out = t.oa.serialize()
    out["augmentation"] = _labelled(t.algebra.labels, t.e)
    return out


def _cmd_check(args) -> dict:
    cd = load_algebra_file(args.file)
    out = {
        "command": "check",
        "valid": True,
        "dim": cd.algebra.dim,
        "labels": list(cd.algebra.labels),
    }
    if cd.phi is not None:
        oa = cd.oriented()  # raises Degenerate if the clause is no orientation
        out["gorenstein"] = "yes"
        out["witness"] = _labelled(cd.algebra.labels, oa.phi)
    else:
        rep = gorenstein_test(cd.algebra, seed=0)
        out["gorenstein"] = {
            "oriented": "yes",
            "not_gorenstein": "no",
            "inconclusive": "inconclusive",
        }[rep.status]
        if rep.witness is not None:
            out["witness"] = _labelled(cd.algebra.labels, rep.witness)
    if cd.e is not None:
        out["augmentation"] = _labelled(cd.algebra.labels, cd.e)
        if cd.phi is not None:
            out["isotropic"] = isotropy_check(cd.oriented(), cd.e)
    return out


def _cmd_orient(args) -> dict:
    cd = load_algebra_file(args.file)
    rep = gorenstein_test(
        cd.algebra,
        seed=args.seed,
        trials=args.trials,
        symbolic_max_dim=args.symbolic_max_dim,
    )
    return {"command": "orient", **rep.serialize(cd.algebra.labels)}


def _cmd_socle(args) -> dict:
    cd = load_algebra_file(args.file)
    t = cd.augmented()
    x = socle_generator(t.oa, t.e)
    return {
        "command": "socle",
        "socle_generator": _labelled(cd.algebra.labels, x),
        "isotropic": isotropy_check(t.oa, t.e),
    }


def _cmd_consum(args) -> dict:
    t1 = load_algebra_file(args.file1).augmented()
    t2 = load_algebra_file(args.file2).augmented()
    s = connected_sum(t1, t2)
    return {"command": "consum", "result": _augmented_payload(s)}


def _cmd_rees(args) -> dict:
    cd = load_algebra_file(args.file)
    oa = cd.oriented()
    if oa.phi_of(oa.algebra.unit):
        raise NotIsotropicUnit("rees needs phi(1) = 0")
    rr = rees_family(oa)
    return {
        "command": "rees",
        "family": rr.family.serialize(),
        "gram": rr.gram.serialize(),
        "adapted_basis": [[str(x) for x in row] for row in rr.adapted_basis],
    }


def _parse_at(text: str):
    if not text.startswith("t="):
        raise GorlabError("expected --at t=VALUE")
    try:
        return Fraction(text[2:])
    except (ValueError, ZeroDivisionError) as ex:
        raise GorlabError(f"bad value in --at: {ex}") from ex


def _field_arg(text: str):
    if text == "Q":
        return QQ
    try:
        return GF(int(text))
    except ValueError as ex:
        raise GorlabError(f"--field expects Q or a prime: {text!r}") from ex


def _fiber_payload(fiber) -> dict:
    out = fiber.algebra.serialize()
    if fiber.orientation is not None:
        out["orientation"] = _labelled(fiber.algebra.labels, fiber.orientation)
    for name, vec in fiber.augmentations.items():
        out.setdefault("augmentations", {})[name] = _labelled(
            fiber.algebra.labels, vec
        )
    return out


def _cmd_robber(args) -> dict:
    fld = _field_arg(args.field)
    fam = robber_family(fld)
    if args.at is not None:
        fiber = specialize(fam, fld.scalar(_parse_at(args.at)))
        return {"command": "robber", "fiber": _fiber_payload(fiber)}
    return {"command": "robber", "family": fam.serialize()}


def _cmd_homotopy(args) -> dict:
    cd = load_algebra_file(args.file)
    t = cd.augmented()
    hf = homotopy_families(t)
    fam = hf.h_const if args.which == "const" else hf.h_mv
    if args.at is not None:
        fiber = specialize(fam, cd.doc.field.scalar(_parse_at(args.at)))
        return {"command": "homotopy", "which": args.which, "fiber": _fiber_payload(fiber)}
    return {"command": "homotopy", "which": args.which, "family": fam.serialize()}


def _cmd_degenerate(args) -> dict:
    cd = load_algebra_file(args.file)
    t = cd.augmented()
    rep = degeneration_to_cw(t)
    out = {
        "command": "degenerate",
        "family": rep.family.serialize(),
        "v_form": rep.v_form.serialize(),
        "invariants": rep.invariants.serialize(),
        "closed_fiber_is_aq": rep.closed_fiber_is_aq,
    }
    if args.at is not None:
        fiber = specialize(rep.family, cd.doc.field.scalar(_parse_at(args.at)))
        out["fiber"] = _fiber_payload(fiber)
    return out


def _cmd_points_degenerate(args) -> dict:
    rep = reduced_degeneration(args.q, args.seed)
    return {"command": "points-degenerate", **rep.serialize()}


def _cmd_tensor(args) -> dict:
    cd = load_algebra_file(args.file)
    T = structure_tensor(cd.algebra)
    checks = args.check.split(",") if args.check else []
    unknown = set(checks) - {"1generic", "commute"}
    if unknown:
        raise GorlabError(f"unknown checks: {', '.join(sorted(unknown))}")
    out = {"command": "tensor", "dims": list(T.dims)}
    witness = None
    if "1generic" in checks:
        rep = one_generic(T)
        out["one_generic"] = rep.serialize()
        witness = rep.witness
    if "commute" in checks:
        if witness is None:
            witness = cd.algebra.unit
        out["strassen_commuting"] = strassen_commuting(T, witness)
    if not checks:
        out["tensor"] = T.serialize()
    return out


def _cmd_cw(args) -> dict:
    fld = _field_arg(args.field)
    return {"command": "cw", "tensor": cw_tensor(fld, args.q).serialize()}


def _cmd_witt(args) -> dict:
    cd = load_algebra_file(args.file)
    oa = cd.oriented()
    inv = witt_invariants(oa.form)
    return {"command": "witt", **inv.serialize()}


def _cmd_embed_hyp(args) -> dict:
    B = load_form_file(args.formfile)
    E = hyp_embed(B)
    return {
        "command": "embed-hyp",
        "n": B.dim,
        "embedding": [[str(x) for x in row] for row in E],
    }


def _cmd_gro(args) -> dict:
    B = load_form_file(args.formfile)
    if B.dim % 2:
        raise GorlabError("ambient form must be hyperbolic of even dimension")
    n = B.dim // 2
    if B != hyperbolic_form(B.field, n):
        raise GorlabError("ambient form must be the standard hyperbolic form")
    rows = []
    for chunk in args.subspace.split(";"):
        rows.append([B.field.parse(x) for x in chunk.split(",")])
    W = Subspace(2 * n, rows)
    return {"command": "gro", "member": gro_member(W, n), "subspace_dim": W.dim}


# ---------------------------------------------------------------------------
# dispatcher


class _Parser2(argparse.ArgumentParser):
    def error(self, message):  # exit code 2 with a JSON usage error
        _emit({"schema": SCHEMA, "kind": "UsageError", "message": message}, False)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser2(prog="gorlab", description=__doc__)
    sub = top.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        p.add_argument("--pretty", action="store_true")
        return p

    p = add("check", _cmd_check)
    p.add_argument("file")
    p = add("orient", _cmd_orient)
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=64)
    p.add_argument("--symbolic-max-dim", type=int, default=8, dest="symbolic_max_dim")
    p = add("socle", _cmd_socle)
    p.add_argument("file")
    p = add("consum", _cmd_consum)
    p.add_argument("file1")
    p.add_argument("file2")
    p = add("rees", _cmd_rees)
    p.add_argument("file")
    p = add("robber", _cmd_robber)
    p.add_argument("--at", default=None)
    p.add_argument("--field", default="Q")
    p = add("homotopy", _cmd_homotopy)
    p.add_argument("file")
    p.add_argument("--which", choices=("const", "mv"), required=True)
    p.add_argument("--at", default=None)
    p = add("degenerate", _cmd_degenerate)
    p.add_argument("file")
    p.add_argument("--at", default=None)
    p = add("points-degenerate", _cmd_points_degenerate)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = add("tensor", _cmd_tensor)
    p.add_argument("file")
    p.add_argument("--check", default="")
    p = add("cw", _cmd_cw)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--field", default="Q")
    p = add("witt", _cmd_witt)
    p.add_argument("file")
    p = add("embed-hyp", _cmd_embed_hyp)
    p.add_argument("formfile")
    p = add("gro", _cmd_gro)
    p.add_argument("formfile")
    p.add_argument("--subspace", required=True)
    return top


def run_command(argv) -> int:
    """Dispatch one CLI invocation; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)
    try:
        payload = args.fn(args)
    except GorlabError as ex:
        err = {"schema": SCHEMA, "kind": ex.kind, "message": str(ex)}
        if isinstance(ex, ParseError):
            err["location"] = {"line": ex.line, "col": ex.col}
            if ex.expected:
                err["expected"] = ex.expected
        _emit(err, getattr(args, "pretty", False))
        return 1
    _emit({"schema": SCHEMA, **payload}, args.pretty)
    return 0


def main() -> None:
    raise SystemExit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
