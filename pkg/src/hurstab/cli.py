"""Command-line front end: configuration, result cache, report emission.

Exit codes: 0 success, 2 assertion failure, 3 resource refusal,
64 usage error, 65 validation error, 74 cache IO error.

Braid words are serialized as signed integer lists, e.g. [1, -2, 1]
for sigma_1 sigma_2^-1 sigma_1, with the LEFTMOST letter acting LAST
(letters compose as left actions, rightmost first).  Reports embed the
fully resolved configuration and the code version, carry no timestamps,
and are byte-identical across reruns; the cache never changes a single
output byte.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from . import coeffsys as cs
from . import experiments as xp
from . import homology as hm
from . import monodromy as md
from .braid import BraidError, OrbitSizeError, orbits
from .groups import ClassSet, FiniteGroup, GroupError, conjugacy_closure

EXIT_OK = 0
EXIT_ASSERTION = 2
EXIT_RESOURCE = 3
EXIT_USAGE = 64
EXIT_VALIDATION = 65
EXIT_IO = 74

MODEL_VERSION = __version__


class UsageError(ValueError):
    pass


def parse_group(spec):
    """sym:N | cyclic:N | dihedral:N | quaternion | @file.json | JSON."""
    if spec.startswith("@"):
        with open(spec[1:], encoding="utf-8") as fh:
            return FiniteGroup.from_json(json.load(fh))
    if spec.startswith("{"):
        return FiniteGroup.from_json(spec)
    if spec == "quaternion":
        return FiniteGroup.quaternion()
    if ":" in spec:
        family, _, n = spec.partition(":")
        builders = {
            "sym": FiniteGroup.symmetric,
            "symmetric": FiniteGroup.symmetric,
            "cyclic": FiniteGroup.cyclic,
            "dihedral": FiniteGroup.dihedral,
        }
        if family in builders:
            return builders[family](int(n))
    raise UsageError(f"cannot parse group spec {spec!r}")


def _element_by_name(group, name):
    if name.isdigit() or (name.startswith("-") and name[1:].isdigit()):
        idx = int(name)
        if not 0 <= idx < group.order:
            raise UsageError(f"element index {idx} out of range")
        return idx
    if name == "transposition":
        candidates = [
            i for i, nm in enumerate(group.element_names) if nm.count("(") == 1
            and len(nm.split()) == 2
        ]
        if candidates:
            return candidates[0]
    if group.element_names and name in group.element_names:
        return group.element_names.index(name)
    raise UsageError(f"unknown element name {name!r} for group {group.name}")


def parse_class(spec, group):
    """rep:<element> | elems:[i,...] | JSON per the groups schema."""
    if spec.startswith("{"):
        return ClassSet.from_json(spec, group)
    if spec.startswith("rep:"):
        return conjugacy_closure({_element_by_name(group, spec[4:])}, group)
    if spec.startswith("elems:"):
        elems = json.loads(spec[6:])
        return ClassSet(group, tuple(sorted(set(int(x) for x in elems))))
    raise UsageError(f"cannot parse class spec {spec!r}")


def require_group_class(args):
    if not getattr(args, "group", None) or not getattr(args, "class_spec", None):
        raise UsageError("--group and --class are required (flags or --config)")


def resolve_grid(args, classes):
    """Fill in the desk-scale default grid when flags are omitted:
    i_max = 2, k_max = 9 for a singleton class; i_max = 1, k_max = 6 for
    |c| <= 3; larger classes need explicit flags."""
    if args.kmax is None:
        if len(classes) == 1:
            args.kmax = 9
        elif len(classes) <= 3:
            args.kmax = 6
        else:
            raise UsageError("--kmax is required when |c| > 3")
    if args.imax is None:
        args.imax = 2 if len(classes) == 1 else 1
    return args.imax, args.kmax


def parse_k_range(spec):
    """'3' -> [3]; '1..4' -> [1, 2, 3, 4]."""
    if ".." in spec:
        lo, _, hi = spec.partition("..")
        lo, hi = int(lo), int(hi)
        if lo < 1 or hi < lo:
            raise UsageError(f"bad k range {spec!r}")
        return list(range(lo, hi + 1))
    k = int(spec)
    if k < 1:
        raise UsageError("k must be >= 1")
    return [k]


# ---------------------------------------------------------------------------
# cache


class ResultCache:
    """Write-once JSON cache keyed by content hash; corrupted entries
    are detected by checksum and recomputed."""

    def __init__(self, root, enabled=True):
        self.root = root
        self.enabled = enabled

    @staticmethod
    def default_root():
        env = os.environ.get("HURSTAB_CACHE")
        if env:
            return env
        base = os.environ.get("XDG_CACHE_HOME", os.path.expanduser("~/.cache"))
        return os.path.join(base, "hurstab")

    def _path(self, key):
        return os.path.join(self.root, f"{key}.json")

    @staticmethod
    def key_of(payload):
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, key):
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            with open(path, encoding="utf-8") as fh:
                wrapped = json.load(fh)
            blob = json.dumps(
                wrapped["payload"], sort_keys=True, separators=(",", ":")
            )
            if hashlib.sha256(blob.encode()).hexdigest() != wrapped["checksum"]:
                return None
            return wrapped["payload"]
        except (OSError, ValueError, KeyError):
            return None

    def put(self, key, payload):
        if not self.enabled:
            return
        path = self._path(key)
        if os.path.exists(path) and self.get(key) is not None:
            return  # write-once
        os.makedirs(self.root, exist_ok=True)
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        wrapped = {
            "checksum": hashlib.sha256(blob.encode()).hexdigest(),
            "payload": payload,
        }
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(wrapped, fh, sort_keys=True)
        os.replace(tmp, path)


# ---------------------------------------------------------------------------
# report emission


def emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def resolved_config(args, keys):
    cfg = {"version": MODEL_VERSION}
    for key in keys:
        cfg[key] = getattr(args, key, None)
    return cfg


# ---------------------------------------------------------------------------
# subcommands


def cmd_orbits(args):
    require_group_class(args)
    group = parse_group(args.group)
    classes = parse_class(args.class_spec, group)
    ks = parse_k_range(args.k)
    rows = ["k\torbits\tsizes"]
    payload = {}
    for k in ks:
        part = orbits(classes, k, max_tuples=args.mem_limit)
        rows.append(f"{k}\t{len(part)}\t{','.join(map(str, part.sizes))}")
        payload[str(k)] = {"count": len(part), "sizes": part.sizes}
    if args.format == "json":
        doc = {
            "config": resolved_config(args, ["group", "class_spec", "k"]),
            "orbits": payload,
        }
        emit(render_json(doc), args.out)
    else:
        emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK


def cmd_homology(args):
    require_group_class(args)
    group = parse_group(args.group)
    classes = parse_class(args.class_spec, group)
    g_hat = (
        _element_by_name(group, args.stabiliser)
        if args.stabiliser
        else classes.elements[0]
    )
    coeff = hm.Coeff.parse(args.coeff)
    i_max, k_max = resolve_grid(args, classes)
    report = xp.stability_table(
        group,
        classes,
        g_hat,
        i_max=i_max,
        k_max=k_max,
        coeff=coeff,
        max_dim=args.mem_limit,
        workers=args.workers,
    )
    doc = {
        "config": resolved_config(
            args, ["group", "class_spec", "stabiliser", "imax", "kmax", "coeff"]
        ),
        "report": report.to_json(),
    }
    if args.format == "json":
        emit(render_json(doc), args.out)
    else:
        emit(report.to_tsv(), args.out)
    return EXIT_OK


def cmd_stability(args):
    require_group_class(args)
    group = parse_group(args.group)
    classes = parse_class(args.class_spec, group)
    g_hat = (
        _element_by_name(group, args.stabiliser)
        if args.stabiliser
        else classes.elements[0]
    )
    coeff = hm.Coeff.parse(args.coeff)
    resolve_grid(args, classes)
    cache = ResultCache(args.cache_dir or ResultCache.default_root(),
                        enabled=args.cache)
    key = ResultCache.key_of(
        {
            "kind": "stability",
            "table": [list(r) for r in group.table],
            "class": list(classes.elements),
            "g_hat": g_hat,
            "imax": args.imax,
            "kmax": args.kmax,
            "coeff": str(coeff),
            "version": MODEL_VERSION,
        }
    )
    cached = cache.get(key)
    if cached is not None:
        report_json = cached
    else:
        report = xp.stability_table(
            group,
            classes,
            g_hat,
            i_max=args.imax,
            k_max=args.kmax,
            coeff=coeff,
            max_dim=args.mem_limit,
            workers=args.workers,
        )
        report_json = report.to_json()
        cache.put(key, report_json)
    doc = {
        "config": resolved_config(
            args,
            ["group", "class_spec", "stabiliser", "imax", "kmax", "coeff",
             "cache"],
        ),
        "report": report_json,
    }
    if args.format == "json":
        emit(render_json(doc), args.out)
    else:
        emit(_tsv_from_report_json(report_json), args.out)
    if report_json["asserted"] and not report_json["assertion_passed"]:
        return EXIT_ASSERTION
    return EXIT_OK


def _tsv_from_report_json(rj):
    lines = ["k\ti\thomology\tmap_iso\tmap_surj\tmap_inj\tmap_split"]
    for key in sorted(rj["cells"], key=lambda s: tuple(map(int, s.split(",")))):
        k, i = key.split(",")
        cell = rj["cells"][key]
        group = hm.HomologyGroup(cell["free"], tuple(cell["torsion"]))
        mp = rj["maps"].get(key)
        flags = (
            [str(mp["iso"]), str(mp["surj"]), str(mp["inj"]), str(mp["split"])]
            if mp
            else ["-", "-", "-", "-"]
        )
        lines.append(
            "\t".join([k, i, xp.cell_str(group, rj["coeff"])] + flags)
        )
    return "\n".join(lines) + "\n"


def cmd_degree(args):
    if args.system:
        with open(args.system, encoding="utf-8") as fh:
            spec = json.load(fh)
        system = _system_from_json(spec, args.kmax)
    else:
        if not args.group or not args.class_spec:
            raise UsageError("degree needs either --system or --group/--class")
        group = parse_group(args.group)
        classes = parse_class(args.class_spec, group)
        g_hat = (
            _element_by_name(group, args.stabiliser)
            if args.stabiliser
            else classes.elements[0]
        )
        system = cs.build_hurwitz_system(group, classes, g_hat, args.kmax)
    report = cs.degree(system, args.cutoff)
    if args.format == "tsv":
        lines = ["delta_step\tranks"]
        for step, ranks in enumerate(report.delta_ranks):
            lines.append(f"{step}\t{','.join(map(str, ranks))}")
        lines.append(f"degree\t{report.value}")
        emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    doc = {
        "config": resolved_config(
            args, ["group", "class_spec", "stabiliser", "kmax", "cutoff"]
        ),
        "system": system.to_json(),
        "degree": report.to_json(),
    }
    emit(render_json(doc), args.out)
    return EXIT_OK


def _system_from_json(spec, k_max):
    """Synthetic Kunneth system from JSON graded ranks and optional
    automorphism matrices."""
    HY = cs.GradedModule.from_rank_list(spec.get("HY", [1]))
    HZ = cs.GradedModule.from_rank_list(spec["HZ"])
    cZ = {int(d): M for d, M in spec.get("cZ", {}).items()}
    return cs.build_kunneth_system(HY, HZ, spec["i"], k_max, cZ=cZ or None)


def cmd_monodromy_check(args):
    if args.model:
        with open(args.model, encoding="utf-8") as fh:
            spec = json.load(fh)
        group = FiniteGroup.from_json(spec["group"])
        model = md.MonodromyModel.from_json(spec, group)
    else:
        group = FiniteGroup.cyclic(2)
        model = md.MonodromyModel(
            group=group,
            states=3,
            action=((0, 1, 2), (0, 2, 1)),
            sign=(1, -1),
            reflection=(0, 2, 1),
        )
    import random

    rng = random.Random(args.seed)
    checks = {"composition_identity": 0, "composition_assoc": 0,
              "act_functorial": 0, "blank_fill": 0}
    failures = []
    morphs = _all_labeled_injections(group, 2)
    for psi in morphs:
        ident_l = md.LabeledInjection.identity(psi.n)
        ident_r = md.LabeledInjection.identity(psi.m)
        if md.compose(ident_l, psi, group) != psi or \
                md.compose(psi, ident_r, group) != psi:
            failures.append({"kind": "identity", "psi": str(psi)})
        checks["composition_identity"] += 1
    for _ in range(args.samples):
        chi, psi, phi = _random_composable_triple(rng, group, 3)
        lhs = md.compose(md.compose(chi, psi, group), phi, group)
        rhs = md.compose(chi, md.compose(psi, phi, group), group)
        if lhs != rhs:
            failures.append({"kind": "assoc"})
        checks["composition_assoc"] += 1
        state = tuple(rng.randrange(model.states) for _ in range(chi.n))
        one = md.act(model, md.compose(chi, psi, group), state)
        two = md.act(model, psi, md.act(model, chi, state))
        if one != two:
            failures.append({"kind": "functoriality"})
        checks["act_functorial"] += 1
    for n in range(0, 4):
        for m in range(0, 4):
            mu = md.LabeledInjection.make(m, n, {})
            for state in _all_states(model, n):
                if md.act(model, mu, state) != (model.basepoint,) * m:
                    failures.append({"kind": "blank_fill", "m": m, "n": n})
                checks["blank_fill"] += 1
    doc = {
        "config": resolved_config(args, ["model", "seed", "samples"]),
        "checks": checks,
        "failures": failures,
        "passed": not failures,
    }
    emit(render_json(doc), args.out)
    return EXIT_OK if not failures else EXIT_ASSERTION


def _all_states(model, n):
    import itertools

    return itertools.product(range(model.states), repeat=n)


def _all_labeled_injections(group, max_n):
    import itertools

    out = []
    for m in range(0, max_n + 1):
        for n in range(0, max_n + 1):
            for dom_size in range(0, min(m, n) + 1):
                for dom in itertools.combinations(range(1, m + 1), dom_size):
                    for img in itertools.permutations(range(1, n + 1), dom_size):
                        for labels in itertools.product(
                            range(group.order), repeat=dom_size
                        ):
                            out.append(
                                md.LabeledInjection.make(
                                    m,
                                    n,
                                    dict(zip(dom, img)),
                                    dict(zip(dom, labels)),
                                )
                            )
    return out


def _random_labeled_injection(rng, group, m, n):
    dom_size = rng.randint(0, min(m, n))
    dom = sorted(rng.sample(range(1, m + 1), dom_size))
    img = rng.sample(range(1, n + 1), dom_size)
    labels = {i: rng.randrange(group.order) for i in dom}
    return md.LabeledInjection.make(m, n, dict(zip(dom, img)), labels)


def _random_composable_triple(rng, group, max_n):
    a, b, c, d = (rng.randint(0, max_n) for _ in range(4))
    phi = _random_labeled_injection(rng, group, a, b)
    psi = _random_labeled_injection(rng, group, b, c)
    chi = _random_labeled_injection(rng, group, c, d)
    return chi, psi, phi


def cmd_selftest(args):
    """Direct oracle checks of the documented examples; exit 0 iff all
    hold."""
    from .braid import BraidWord, HurwitzTuple, hurwitz_act, total_product
    from . import garside

    failures = []

    def check(name, cond):
        if not cond:
            failures.append(name)

    s3 = FiniteGroup.symmetric(3)
    names = s3.element_names
    i12, i13, i23 = (names.index(x) for x in ("(1 2)", "(1 3)", "(2 3)"))
    check("mul-(12)(13)", names[s3.mul(i12, i13)] == "(1 3 2)")
    check("identity-law", all(s3.mul(0, g) == g for g in s3.elements()))
    check("inverse-law", all(s3.mul(g, s3.inv(g)) == 0 for g in s3.elements()))
    c = conjugacy_closure({i12}, s3)
    check("closure-(12)", set(c.elements) == {i12, i13, i23})
    check("closure-identity",
          conjugacy_closure({0}, s3).elements == (0,))
    z4 = FiniteGroup.cyclic(4)
    check("closure-abelian", conjugacy_closure({1}, z4).elements == (1,))
    check("central-abelian", conjugacy_closure({1}, z4).is_central())
    check("central-transpositions", not c.is_central())
    check("inversion-closed", c.is_inversion_closed())
    check("inversion-z3",
          not conjugacy_closure({1}, FiniteGroup.cyclic(3)).is_inversion_closed())
    check("generates", c.generates())
    check("generates-identity",
          not conjugacy_closure({0}, s3).generates())
    check("generates-z4", conjugacy_closure({1}, z4).generates())
    t = HurwitzTuple(c, (i12, i13))
    moved = hurwitz_act(BraidWord.from_signed(2, [1]), t)
    check("hurwitz-move", moved.entries == (i23, i12))
    back = hurwitz_act(BraidWord.from_signed(2, [-1]), moved)
    check("hurwitz-inverse", back.entries == t.entries)
    check("hurwitz-empty",
          hurwitz_act(BraidWord(2, ()), t).entries == t.entries)
    check("total-product", total_product(t) == total_product(moved))
    part1 = orbits(c, 1)
    part2 = orbits(c, 2)
    check("orbits-k1", len(part1) == 3)
    check("orbits-k2", len(part2) == 5)
    nf1 = garside.normal_form(3, [(1, 1), (2, 1), (1, 1)])
    nf2 = garside.normal_form(3, [(2, 1), (1, 1), (2, 1)])
    check("garside-braid-relation", nf1 == nf2)
    check("garside-reduction",
          garside.normal_form(2, [(1, 1), (1, -1)]).is_identity())
    check("garside-distinct",
          garside.normal_form(3, [(1, 1), (2, 1)])
          != garside.normal_form(3, [(2, 1), (1, 1)]))
    snf = hm.smith_normal_form([[2, 4], [6, 8]])
    check("snf-example", snf.invariant_factors == [2, 4])
    check("snf-identity",
          hm.smith_normal_form([[1, 0], [0, 1]]).invariant_factors == [1, 1])
    check("snf-zero", hm.smith_normal_form([[0]]).invariant_factors == [])
    check("split-z1z", hm.is_split_injective([0], [0], [[1]]))
    check("split-z2z", not hm.is_split_injective([0], [0], [[2]]))
    check("split-torsion", not hm.is_split_injective([2], [4], [[2]]))
    doc = {
        "config": {"version": MODEL_VERSION},
        "failures": failures,
        "passed": not failures,
    }
    emit(render_json(doc), args.out)
    return EXIT_OK if not failures else EXIT_ASSERTION


# ---------------------------------------------------------------------------
# argument wiring


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hurstab",
        description=(
            "Exact homology of Hurwitz spaces and twisted braid-group "
            "homology, with homological-stability verdicts."
        ),
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_group=True):
        p.add_argument("--config", default=None,
                       help="JSON file of flag defaults; explicit flags win")
        if needs_group:
            p.add_argument("--group", default=None,
                           help="sym:N | cyclic:N | dihedral:N | quaternion | JSON")
            p.add_argument("--class", dest="class_spec", default=None,
                           help="rep:<elt> | elems:[...] | JSON")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        p.add_argument("--mem-limit", type=int, default=10_000_000,
                       help="size bound on enumerated state (tuples/chain dims)")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("orbits", help="Hurwitz orbit counts")
    common(p)
    p.add_argument("--k", required=True, help="single k or range a..b")
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("homology", help="homology grid without cache")
    common(p)
    p.add_argument("--stabiliser", default=None)
    p.add_argument("--kmax", type=int, default=None,
                   help="default: 9 when |c| = 1, 6 when |c| <= 3")
    p.add_argument("--imax", type=int, default=None,
                   help="default: 2 when |c| = 1, 1 when |c| <= 3")
    p.add_argument("--coeff", default="Z", help="Z | Q | Fp:<p>")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("stability", help="stability report with assertions")
    common(p)
    p.add_argument("--stabiliser", default=None)
    p.add_argument("--kmax", type=int, default=None,
                   help="default: 9 when |c| = 1, 6 when |c| <= 3")
    p.add_argument("--imax", type=int, default=None,
                   help="default: 2 when |c| = 1, 1 when |c| <= 3")
    p.add_argument("--coeff", default="Z", help="Z | Q | Fp:<p>")
    p.add_argument("--cache", dest="cache", action="store_true", default=True)
    p.add_argument("--no-cache", dest="cache", action="store_false")
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(fn=cmd_stability)

    p = sub.add_parser("degree", help="degree of a coefficient system")
    p.add_argument("--config", default=None)
    p.add_argument("--group", default=None)
    p.add_argument("--class", dest="class_spec", default=None)
    p.add_argument("--stabiliser", default=None)
    p.add_argument("--system", default=None,
                   help="JSON file for a synthetic system (overrides --group)")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=4)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("tsv", "json"), default="json")
    p.set_defaults(fn=cmd_degree)

    p = sub.add_parser("monodromy-check", help="labeled-injection validation")
    p.add_argument("--model", default=None, help="JSON model file")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_monodromy_check)

    p = sub.add_parser("selftest", help="run the documented oracle checks")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_selftest)
    # subparsers parse into a fresh namespace, so config-file defaults
    # must be installed on each of them individually
    ap._subcommand_parsers = list(sub.choices.values())
    return ap


def _config_defaults(argv):
    """Load the JSON config named by --config, if any; its entries act
    as parser defaults, so explicit flags always win."""
    for i, token in enumerate(argv):
        if token == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif token.startswith("--config="):
            path = token.split("=", 1)[1]
        else:
            continue
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        out = {}
        for key, value in raw.items():
            key = key.replace("-", "_")
            out["class_spec" if key == "class" else key] = value
        return out
    return {}


def run(argv):
    ap = build_parser()
    try:
        defaults = _config_defaults(argv)
        if defaults:
            for sp in ap._subcommand_parsers:
                sp.set_defaults(**defaults)
        args = ap.parse_args(argv)
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return EXIT_IO
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupError, BraidError, hm.HomologyError, cs.CoeffSystemError,
            md.MonodromyError) as e:
        print(f"validation error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except (xp.ResourceRefusal, OrbitSizeError) as e:
        print(f"resource refusal: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return EXIT_IO


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
