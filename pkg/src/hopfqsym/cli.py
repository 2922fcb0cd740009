"""Command-line front end.

Subcommands: psi, specialize, ehrhart, hilbert, invert-character, check.
Species files are JSON (see the from_dict schemas in species.py); anywhere a
file is expected, ``builtin:<name>`` resolves a fixture from the built-in
corpus.  Output is deterministic JSON (sorted keys, canonical term order)
unless ``--format pretty`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import checks, corpus
from .combinat import BoundExceededError
from .ehrhart import ehrhart_qsym, lattice_count_box, lattice_count_simplex
from .hilbert import hilbert_q, hilbert_unigraded
from .hopf import invert, psi
from .qseries import ps, ps1, ps_gaussian, sps, to_qbinomial_basis
from .qsym import QSym
from .species import Graph, Matroid, Poset, RelComplex

DEFAULT_MAX_GROUND = 8
DEFAULT_MAX_N = 16
DEFAULT_MAX_CUTOFF = 64


@dataclass
class RunConfig:
    """Validated bounds shared by the commands."""

    n: int | None = None
    m: int | None = None
    cutoff: int | None = None
    force: bool = False
    fmt: str = "json"
    jobs: int = 1

    def check_ground(self, element):
        if len(element.ground) > DEFAULT_MAX_GROUND and not self.force:
            raise BoundExceededError(
                "ground set size %d exceeds %d; pass --force to override"
                % (len(element.ground), DEFAULT_MAX_GROUND)
            )

    def check_n(self, n):
        if n is not None and n > DEFAULT_MAX_N and not self.force:
            raise BoundExceededError(
                "n=%d exceeds %d; pass --force to override" % (n, DEFAULT_MAX_N)
            )

    def check_cutoff(self, cutoff):
        if cutoff is not None and cutoff > DEFAULT_MAX_CUTOFF and not self.force:
            raise BoundExceededError(
                "cutoff=%d exceeds %d; pass --force to override" % (cutoff, DEFAULT_MAX_CUTOFF)
            )


class CliError(Exception):
    pass


def load_species_file(path, expect=None):
    """Load a species JSON file, or a builtin fixture via builtin:<name>."""
    if path.startswith("builtin:"):
        name = path[len("builtin:"):]
        pool = {}
        pool.update(corpus.hopf_elements())
        pool.update(corpus.builtin_complexes())
        try:
            element = pool[name]
        except KeyError:
            raise CliError(
                "unknown builtin %r (known: %s)" % (name, ", ".join(sorted(pool)))
            )
    else:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise CliError("cannot read %s: %s" % (path, exc))
        except json.JSONDecodeError as exc:
            raise CliError(
                "parse error in %s at line %d column %d: %s"
                % (path, exc.lineno, exc.colno, exc.msg)
            )
        element = species_from_dict(data, path)
    if expect is not None and not isinstance(element, expect):
        raise CliError(
            "%s holds a %s, expected %s" % (path, type(element).__name__, expect.__name__)
        )
    return element


def species_from_dict(data, origin="<input>"):
    try:
        if "vertices" in data:
            return Graph.from_dict(data)
        if "elements" in data:
            return Poset.from_dict(data)
        if "bases" in data:
            return Matroid.from_dict(data)
        if "delta_facets" in data:
            return RelComplex.from_dict(data)
    except (ValueError, KeyError) as exc:
        raise CliError("invalid species data in %s: %s" % (origin, exc))
    raise CliError(
        "%s: cannot tell the species (expected keys: vertices / elements / bases / delta_facets)"
        % origin
    )


def _element_from_args(args, config):
    picks = [
        (args.graph, Graph),
        (args.poset, Poset),
        (args.matroid, Matroid),
        (getattr(args, "complex"), RelComplex),
    ]
    given = [(path, kind) for path, kind in picks if path]
    if len(given) != 1:
        raise CliError("exactly one of --graph/--poset/--matroid/--complex is required")
    path, kind = given[0]
    element = load_species_file(path, expect=kind)
    config.check_ground(element)
    return element


def _character_from_args(args):
    try:
        return corpus.character_by_name(args.character)
    except ValueError as exc:
        raise CliError(str(exc))


def _emit(payload, config, pretty_text=None):
    if config.fmt == "pretty" and pretty_text is not None:
        print(pretty_text)
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


# --- commands -------------------------------------------------------------


def cmd_psi(args, config):
    element = _element_from_args(args, config)
    if isinstance(element, RelComplex):
        raise CliError(
            "composition complexes carry no restriction/contraction; "
            "use the ehrhart command for their invariant"
        )
    phi = _character_from_args(args)
    result = psi(phi, element, force=config.force)
    _emit(result.to_json_dict(), config, str(result))
    return 0


def _qsym_from_args(args, config):
    if args.qsym:
        try:
            with open(args.qsym) as fh:
                return QSym.from_json_dict(json.load(fh))
        except OSError as exc:
            raise CliError("cannot read %s: %s" % (args.qsym, exc))
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise CliError("invalid qsym file %s: %s" % (args.qsym, exc))
    element = _element_from_args(args, config)
    if isinstance(element, RelComplex):
        return ehrhart_qsym(element)
    phi = _character_from_args(args)
    return psi(phi, element, force=config.force)


def cmd_specialize(args, config):
    q = _qsym_from_args(args, config)
    config.check_n(args.n)
    config.check_cutoff(args.cutoff)
    if args.mode == "ps":
        if args.q_binomial:
            form = to_qbinomial_basis(ps_gaussian(q))
            _emit(form.to_json(), config, repr(form))
        elif args.n is not None:
            value = ps(q, args.n)
            _emit(value.to_json(), config, str(value))
        else:
            fn = ps_gaussian(q)
            _emit(fn.to_json(), config, repr(fn))
    elif args.mode == "ps1":
        poly = ps1(q)
        if args.n is not None:
            _emit(poly.eval(args.n), config, str(poly.eval(args.n)))
        else:
            _emit(poly.to_json(), config, repr(poly))
    else:  # sps
        cutoff = args.cutoff if args.cutoff is not None else 20
        series = sps(q, cutoff)
        _emit(series.to_json(), config, repr(series))
    return 0


def cmd_ehrhart(args, config):
    element = load_species_file(getattr(args, "complex"), expect=RelComplex)
    config.check_ground(element)
    if args.box is not None:
        config.check_n(args.box)
        counts = []
        for n in range(args.box + 1):
            if args.weighted:
                counts.append({"n": n, "count": lattice_count_box(element, n, True).to_json()})
            else:
                counts.append({"n": n, "count": lattice_count_box(element, n)})
        _emit(counts, config)
        return 0
    if args.simplex is not None:
        config.check_n(args.simplex)
        counts = [
            {"m": m, "count": lattice_count_simplex(element, m)}
            for m in range(args.simplex + 1)
        ]
        _emit(counts, config)
        return 0
    result = ehrhart_qsym(element)
    _emit(result.to_json_dict(), config, str(result))
    return 0


def cmd_hilbert(args, config):
    element = load_species_file(getattr(args, "complex"), expect=RelComplex)
    n_max = args.n if args.n is not None else 4
    config.check_n(n_max)
    payload = {"n": n_max, "values": [hilbert_unigraded(element, n) for n in range(n_max + 1)]}
    if args.q:
        payload["q_rows"] = [hilbert_q(element, n).to_json() for n in range(n_max + 1)]
    _emit(payload, config)
    return 0


def cmd_invert_character(args, config):
    element = _element_from_args(args, config)
    phi = _character_from_args(args)
    value = invert(phi)(element)
    _emit({"character": "inverse:%s" % phi.name, "value": value}, config, str(value))
    return 0


def cmd_check(args, config):
    elements = None
    if args.corpus != "builtin":
        elements = _load_corpus_dir(args.corpus)
        if not elements:
            payload = {
                "suite": args.suite,
                "warning": "corpus %r is empty; vacuous pass" % args.corpus,
                "passed": True,
                "results": [],
            }
            _emit(payload, config)
            return 0
    results = checks.run_suite(args.suite, elements=elements, jobs=config.jobs)
    payload = {
        "suite": args.suite,
        "passed": all(r.passed for r in results),
        "results": [r.to_json() for r in results],
    }
    lines = ["%-45s %s" % (r.name, "PASS" if r.passed else "FAIL: " + r.detail) for r in results]
    _emit(payload, config, "\n".join(lines))
    return 0 if payload["passed"] else 1


def _load_corpus_dir(path):
    import os

    if not os.path.isdir(path):
        raise CliError("corpus %r is not a directory" % path)
    out = {}
    for fname in sorted(os.listdir(path)):
        if not fname.endswith(".json"):
            continue
        full = os.path.join(path, fname)
        with open(full) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise CliError("parse error in %s at line %d: %s" % (full, exc.lineno, exc.msg))
        element = species_from_dict(data, full)
        if not isinstance(element, RelComplex):
            out[fname[: -len(".json")]] = element
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfqsym",
        description="Exact quasisymmetric invariants of Hopf species, with "
        "lattice-point and Hilbert-function cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, species=True, character=False):
        p.add_argument("--format", choices=("json", "pretty"), default="json")
        p.add_argument("--force", action="store_true", help="lift the size caps")
        p.add_argument("--jobs", type=int, default=1)
        if species:
            p.add_argument("--graph")
            p.add_argument("--poset")
            p.add_argument("--matroid")
            p.add_argument("--complex")
        if character:
            p.add_argument("--character", default="zeta")

    p_psi = sub.add_parser("psi", help="the quasisymmetric invariant of an element")
    add_common(p_psi, character=True)
    p_psi.set_defaults(fn=cmd_psi)

    p_spec = sub.add_parser("specialize", help="ps / ps1 / sps of an invariant")
    add_common(p_spec, character=True)
    p_spec.add_argument("--qsym", help="JSON file with a quasisymmetric function")
    p_spec.add_argument("--mode", choices=("ps", "ps1", "sps"), required=True)
    p_spec.add_argument("--n", type=int)
    p_spec.add_argument("--cutoff", type=int)
    p_spec.add_argument("--q-binomial", action="store_true", dest="q_binomial")
    p_spec.set_defaults(fn=cmd_specialize)

    p_ehr = sub.add_parser("ehrhart", help="cone-point generating function of a complex")
    p_ehr.add_argument("--complex", required=True)
    p_ehr.add_argument("--box", type=int, help="also count box lattice points for n=0..BOX")
    p_ehr.add_argument("--weighted", action="store_true")
    p_ehr.add_argument(
        "--simplex",
        "--m",
        type=int,
        dest="simplex",
        help="count coordinate-sum lattice points for m=0..M",
    )
    add_common(p_ehr, species=False)
    p_ehr.set_defaults(fn=cmd_ehrhart)

    p_hil = sub.add_parser("hilbert", help="Hilbert function of the double-coned module")
    p_hil.add_argument("--complex", required=True)
    p_hil.add_argument("--n", type=int)
    p_hil.add_argument("--q", action="store_true", help="include the q-graded rows")
    add_common(p_hil, species=False)
    p_hil.set_defaults(fn=cmd_hilbert)

    p_inv = sub.add_parser("invert-character", help="inverse-character value on an element")
    add_common(p_inv, character=True)
    p_inv.set_defaults(fn=cmd_invert_character)

    p_chk = sub.add_parser("check", help="run a verification suite")
    p_chk.add_argument("--suite", choices=sorted(checks.SUITES), required=True)
    p_chk.add_argument("--corpus", default="builtin")
    add_common(p_chk, species=False)
    p_chk.set_defaults(fn=cmd_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        n=getattr(args, "n", None),
        m=getattr(args, "m", None),
        cutoff=getattr(args, "cutoff", None),
        force=args.force,
        fmt=args.format,
        jobs=args.jobs,
    )
    try:
        return args.fn(args, config)
    except (CliError, BoundExceededError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
