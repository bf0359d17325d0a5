"""Command-line interface.

Exit codes: 0 when a verdict was produced (including a negative one), 1 for
input and parse errors, 2 when an operation's precondition fails.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import formats
from .core import (
    Code,
    constant_zero_neuron,
    format_index_set,
    format_subset,
    format_word,
    redundant_neuron,
    trunk,
)
from .errors import GuardError, NeuralCodeError, PreconditionError
from .factor import factor_linear_monomial, factor_monomial, factor_monomial_iso, is_monomial_iso, replay
from .maps import check_H_conditions, classify, defining_vector, describe_h_report, hom_to_code_map
from .poly import MultilinearPoly, ideal_witness, lagrange, max_variable, parse_poly
from .ring import (
    PowerSetRing,
    STCandidate,
    check_ring_axioms,
    construct_code_from_ring,
    describe_n_report,
    search_ST,
    verify_N_conditions,
)

EXIT_INPUT = 1
EXIT_PRECONDITION = 2


class Report:
    """Ordered ``key: value`` lines."""

    def __init__(self):
        self.items = []

    def add(self, key, value):
        self.items.append((key, value))
        return self

    def render(self, fmt="text") -> str:
        sep = "\t" if fmt == "tsv" else ": "
        return "".join(f"{k}{sep}{_render_value(v)}\n" for k, v in self.items)


def _render_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


class _Cli(click.Group):
    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.exceptions.Exit as exc:
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("aborted", err=True)
            sys.exit(EXIT_INPUT)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_INPUT)
        except PreconditionError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_PRECONDITION)
        except (NeuralCodeError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
        sys.exit(rv if isinstance(rv, int) else 0)


def _emit(ctx, report: Report, code: int = 0) -> int:
    click.echo(report.render(ctx.obj["format"]), nl=False)
    return code


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_code(path) -> Code:
    return formats.parse_code(_read(path))


existing = click.Path(exists=True, dir_okay=False)


@click.group(cls=_Cli)
@click.option("--max-n", default=20, show_default=True, help="Bound on neuron count for 2^n enumerations.")
@click.option("--max-ring", default=65536, show_default=True, help="Bound on ring order for recognition.")
@click.option("--format", "fmt", type=click.Choice(["text", "tsv"]), default="text", show_default=True)
@click.pass_context
def cli(ctx, max_n, max_ring, fmt):
    """Neural codes, neural rings and monomial maps."""
    ctx.obj = {"max_n": max_n, "max_ring": max_ring, "format": fmt}


# -- code ---------------------------------------------------------------------


@cli.group()
def code():
    """Inspect codes."""


@code.command("info")
@click.argument("path", type=existing)
@click.pass_context
def code_info(ctx, path):
    c = _load_code(path)
    r = Report().add("n", c.n).add("size", len(c))
    r.add("words", c)
    for i in c.indices:
        r.add(f"trunk.{i}", format_subset(trunk(c, {i})))
    r.add("constant_zero", format_index_set(i for i in c.indices if constant_zero_neuron(c, i)))
    for i in c.indices:
        alpha = redundant_neuron(c, i)
        if alpha is not None:
            r.add(f"redundant.{i}", format_index_set(alpha))
    return _emit(ctx, r)


# -- map ----------------------------------------------------------------------


@cli.group("map")
def map_():
    """Classify and factor code maps."""


def _load_map(a, b, m):
    dom, cod = _load_code(a), _load_code(b)
    return formats.parse_map(_read(m), dom, cod)


def _classification(r: Report, q):
    mc = classify(q)
    r.add("class", mc.kind.value)
    for e in mc.evidence:
        r.add(f"coord.{e.index}", f"{format_subset(e.preimage)} {e.describe()}")
    return mc


@map_.command("classify")
@click.argument("a", type=existing)
@click.argument("b", type=existing)
@click.argument("m", type=existing)
@click.pass_context
def map_classify(ctx, a, b, m):
    q = _load_map(a, b, m)
    r = Report()
    _classification(r, q)
    for i, part in enumerate(defining_vector(q).parts, start=1):
        r.add(f"defining_vector.{i}", format_subset(part))
    return _emit(ctx, r)


@map_.command("factor")
@click.option("--linear", is_flag=True, help="Use only basic linear monomial maps.")
@click.argument("a", type=existing)
@click.argument("b", type=existing)
@click.argument("m", type=existing)
@click.pass_context
def map_factor(ctx, linear, a, b, m):
    q = _load_map(a, b, m)
    r = Report()
    mc = _classification(r, q)
    ok = mc.is_linear_monomial if linear else mc.is_monomial
    if not ok:
        r.add("error", "not linear monomial" if linear else "not monomial")
        return _emit(ctx, r, EXIT_PRECONDITION)
    f = factor_linear_monomial(q) if linear else factor_monomial(q)
    _trace(r, f, q)
    return _emit(ctx, r)


def _trace(r: Report, f, q):
    r.add("code.0", f.codes[0])
    for k, step in enumerate(f.steps, start=1):
        r.add(f"step.{k}", step)
        r.add(f"code.{k}", f.codes[k])
    r.add("replay", "ok" if replay(f, q.domain) == q else "MISMATCH")


@map_.command("iso")
@click.argument("a", type=existing)
@click.argument("b", type=existing)
@click.argument("m", type=existing)
@click.pass_context
def map_iso(ctx, a, b, m):
    q = _load_map(a, b, m)
    verdict = is_monomial_iso(q)
    r = Report().add("iso", verdict.iso).add("reason", verdict.reason)
    if verdict.iso:
        _trace(r, factor_monomial_iso(q), q)
    return _emit(ctx, r)


# -- hom ----------------------------------------------------------------------


@cli.group()
def hom():
    """Check neural ring homomorphisms."""


@hom.command("check")
@click.argument("a", type=existing)
@click.argument("b", type=existing)
@click.argument("h", type=existing)
@click.pass_context
def hom_check(ctx, a, b, h):
    """Check phi: P(B) -> P(A) given by file H."""
    c, d = _load_code(a), _load_code(b)
    phi = formats.parse_hom(_read(h), d, c)
    rep = check_H_conditions(phi)
    r = Report()
    r.add("H1", rep.h1)
    r.add("H2", "structural" if rep.h2_structural else rep.h2)
    r.add("H3", rep.h3)
    if not rep.ok:
        r.add("witness", describe_h_report(rep))
        return _emit(ctx, r)
    q = hom_to_code_map(phi)
    for u, v in q.items():
        r.add(f"map.{format_word(u)}", format_word(v))
    return _emit(ctx, r)


# -- ring ---------------------------------------------------------------------


@cli.group()
def ring():
    """Neural rings and the recognizer."""


def _n_lines(r: Report, ring_, rep):
    r.add("N1", rep.n1).add("N2", rep.n2).add("N3", rep.n3)
    if not rep.ok:
        r.add("witness", describe_n_report(ring_, rep))
    for note in rep.notes:
        r.add("note", note)


@ring.command("info")
@click.argument("path", type=existing)
@click.pass_context
def ring_info(ctx, path):
    c = _load_code(path)
    if len(c) > ctx.obj["max_n"]:
        raise GuardError(f"|C|={len(c)} exceeds the bound {ctx.obj['max_n']}")
    r = Report().add("ring_size", 2 ** len(c))
    if not c.words:
        r.add("note", "empty code: P(C) is the zero ring")
        return _emit(ctx, r)
    abstract = PowerSetRing(c).to_abstract()
    S = tuple(abstract.index(format_subset([w])) for w in c)
    T = tuple(abstract.index(format_subset(trunk(c, {i}))) for i in c.indices)
    _n_lines(r, abstract, verify_N_conditions(abstract, STCandidate(S, T), max_s=ctx.obj["max_n"]))
    return _emit(ctx, r)


@ring.command("recognize")
@click.argument("path", type=existing)
@click.pass_context
def ring_recognize(ctx, path):
    R = formats.parse_ring(_read(path))
    r = Report().add("order", R.order)
    axioms = check_ring_axioms(R)
    r.add("axioms", "ok" if axioms.ok else f"{len(axioms.violations)} violations")
    if not axioms.ok:
        for axiom, witness in axioms.violations[:20]:
            r.add("violation", f"{axiom} at ({', '.join(witness)})")
        return _emit(ctx, r, EXIT_PRECONDITION)
    if R.order == 1:
        r.add("neural", False).add("reason", "zero ring")
        return _emit(ctx, r)
    cand = search_ST(R, max_ring=ctx.obj["max_ring"], max_s=ctx.obj["max_n"])
    if cand is None:
        r.add("neural", False)
        r.add("reason", "no S, T satisfy N1-N3")
        return _emit(ctx, r)
    c, words, phi = construct_code_from_ring(R, cand)
    r.add("neural", True)
    r.add("S", " ".join(R.label(s) for s in cand.S))
    r.add("T", " ".join(R.label(t) for t in cand.T))
    r.add("n", c.n).add("code", c)
    for x in range(R.order):
        r.add(f"phi.{R.label(x)}", format_subset(phi[x]))
    return _emit(ctx, r)


# -- poly ---------------------------------------------------------------------


@cli.group()
def poly():
    """Multilinear polynomials over F2."""


@poly.command("lagrange")
@click.argument("word")
@click.pass_context
def poly_lagrange(ctx, word):
    w = "" if word == "-" else word
    if any(ch not in "01" for ch in w):
        raise NeuralCodeError(f"not a 0/1 word: {word!r}")
    return _emit(ctx, Report().add("lagrange", lagrange(w, ctx.obj["max_n"])))


@poly.command("member")
@click.argument("path", type=existing)
@click.argument("expr")
@click.pass_context
def poly_member(ctx, path, expr):
    c = _load_code(path)
    f = parse_poly(expr, c.n)
    w = ideal_witness(c, f)
    r = Report().add("normal_form", f).add("member", w is None)
    if w is not None:
        r.add("witness", format_word(w))
    return _emit(ctx, r)


@poly.command("reduce")
@click.argument("expr")
@click.pass_context
def poly_reduce(ctx, expr):
    f: MultilinearPoly = parse_poly(expr, max_variable(expr))
    return _emit(ctx, Report().add("normal_form", f))


def main():
    cli()


if __name__ == "__main__":
    main()
