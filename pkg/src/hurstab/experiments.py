"""End-to-end stability experiments and verdict tables.

A stability run computes the homology grid H_i(B_k; Z[c^k]) for
i <= i_max, k <= k_max together with all stabilisation-induced maps,
evaluates the expected stability ranges when their hypothesis (a single central
charge, |c| = 1) holds, and reports empirical iso onsets.  The asserted
ranges are sufficient conditions only; earlier onset is reported, never
treated as failure.

Reports are deterministic: identical inputs produce identical report
dictionaries, and the TSV/JSON writers iterate in sorted order.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import homology as hm
from . import resolution as rs
from .braid import orbits
from .groups import GroupError

# stability ranges: over Z isomorphisms from k >= 2i+4 and surjections from
# k >= 2i+2; over a field both bounds improve by two
ISO_OFFSET = {"Z": 4, "field": 2}
SURJ_OFFSET = {"Z": 2, "field": 0}


class ResourceRefusal(RuntimeError):
    pass


@dataclass
class StabilityReport:
    group_name: str
    class_elements: list
    g_hat: int
    coeff: str
    i_max: int
    k_max: int
    hypothesis: dict
    cells: dict  # (k, i) -> HomologyGroup
    maps: dict  # (k, i) -> InducedHomologyMap (map k -> k+1)
    iso_onsets: dict  # i -> least k with all later maps iso, or None
    range_violations: list
    asserted: bool  # whether the range predicate was asserted (|c| = 1)

    @property
    def assertion_passed(self):
        return not self.range_violations if self.asserted else None

    def to_json(self):
        return {
            "group": self.group_name,
            "class": list(self.class_elements),
            "stabiliser": self.g_hat,
            "coeff": self.coeff,
            "i_max": self.i_max,
            "k_max": self.k_max,
            "hypothesis": self.hypothesis,
            "cells": {
                f"{k},{i}": g.to_json() for (k, i), g in sorted(self.cells.items())
            },
            "maps": {
                f"{k},{i}": m.to_json() for (k, i), m in sorted(self.maps.items())
            },
            "iso_onsets": {str(i): v for i, v in sorted(self.iso_onsets.items())},
            "range_violations": self.range_violations,
            "asserted": self.asserted,
            "assertion_passed": self.assertion_passed,
        }

    def to_tsv(self):
        lines = ["k\ti\thomology\tmap_iso\tmap_surj\tmap_inj\tmap_split"]
        for (k, i), g in sorted(self.cells.items()):
            m = self.maps.get((k, i))
            flags = (
                [str(m.is_iso), str(m.is_surjective), str(m.is_injective),
                 str(m.is_split_injective)]
                if m is not None
                else ["-", "-", "-", "-"]
            )
            lines.append(
                "\t".join([str(k), str(i), cell_str(g, self.coeff)] + flags)
            )
        return "\n".join(lines) + "\n"


def cell_str(group, coeff):
    """Render a homology group for a TSV cell; field cells show the
    field and dimension rather than Z-flavored names."""
    if coeff == "Z":
        return str(group)
    if group.free_rank == 0:
        return "0"
    base = "Q" if coeff == "Q" else f"F{coeff.split(':')[1]}"
    return base if group.free_rank == 1 else f"{base}^{group.free_rank}"


def hypothesis_flags(classes):
    flags = {
        "size": len(classes),
        "is_central": classes.is_central(),
        "generates": classes.generates(),
        "is_inversion_closed": classes.is_inversion_closed(),
    }
    try:
        flags["is_non_splitting"] = classes.is_non_splitting()
    except GroupError:
        flags["is_non_splitting"] = None
    return flags


def _complex_for(classes, g_hat, k, i_max, max_dim):
    """Specialised Salvetti complex for B_k at depth min(i_max+1, k-1)."""
    module = rs.HurwitzModule(classes, k, g_hat)
    if k == 1:
        return module, rs.point_complex(module)
    d_max = min(i_max + 1, k - 1)
    free = rs.salvetti_complex(k, d_max)
    total = sum(r * module.dim for r in free.ranks)
    if total > max_dim:
        raise ResourceRefusal(
            f"chain size {total} at k={k} exceeds the bound {max_dim}"
        )
    return module, rs.specialize(free, module)


def _grid_job(args):
    """One worker job: homology cells at k, and the induced maps
    k -> k+1 when the successor data is supplied."""
    k, i_max, coeff, complex_k, complex_k1, module_k, module_k1 = args
    cells = {}
    for i in range(0, i_max + 1):
        cells[(k, i)] = hm.homology(complex_k, i, coeff)
    maps = {}
    if complex_k1 is not None:
        cm = rs.stabilisation_chain_map(complex_k, complex_k1, module_k, module_k1)
        for i in range(0, i_max + 1):
            maps[(k, i)] = hm.induced_map(cm, i, coeff)
    return k, cells, maps


def stability_table(
    group,
    classes,
    g_hat,
    i_max,
    k_max,
    coeff=hm.Z,
    max_dim=2_000_000,
    workers=1,
    progress=None,
):
    """Compute the (k, i) homology grid and stabilisation maps, and
    evaluate the stability ranges.

    When |c| = 1 the range predicate is asserted: over Z every map with
    k >= 2i+4 must be an isomorphism and k >= 2i+2 surjective; over a
    field the bounds improve to 2i+2 and 2i.  Violations are collected,
    never silently dropped.  ``workers`` > 1 distributes grid columns
    over a process pool; the assembled report does not depend on
    scheduling.
    """
    if g_hat not in classes:
        raise GroupError("stabiliser must lie in the class set")
    flags = hypothesis_flags(classes)
    modules = {}
    complexes = {}
    for k in range(1, k_max + 1):
        modules[k], complexes[k] = _complex_for(classes, g_hat, k, i_max, max_dim)
        if progress:
            progress(f"built complex k={k}")
    jobs = [
        (
            k,
            i_max,
            coeff,
            complexes[k],
            complexes.get(k + 1),
            modules[k],
            modules.get(k + 1),
        )
        for k in range(1, k_max + 1)
    ]
    cells = {}
    maps = {}
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_grid_job, jobs))
    else:
        results = [_grid_job(j) for j in jobs]
    for k, job_cells, job_maps in sorted(results):
        cells.update(job_cells)
        maps.update(job_maps)
        if progress:
            progress(f"grid column k={k} done")

    regime = "Z" if coeff.kind == "Z" else "field"
    asserted = len(classes) == 1
    violations = []
    if asserted:
        for (k, i), m in sorted(maps.items()):
            if k >= 2 * i + ISO_OFFSET[regime] and not m.is_iso:
                violations.append(
                    {"k": k, "i": i, "expected": "iso", "flags": m.to_json()}
                )
            if k >= 2 * i + SURJ_OFFSET[regime] and not m.is_surjective:
                violations.append(
                    {"k": k, "i": i, "expected": "surjective", "flags": m.to_json()}
                )
    onsets = {}
    for i in range(0, i_max + 1):
        onset = None
        for k in range(k_max - 1, 0, -1):
            if maps[(k, i)].is_iso:
                onset = k
            else:
                break
        onsets[i] = onset
    return StabilityReport(
        group_name=group.name,
        class_elements=list(classes.elements),
        g_hat=g_hat,
        coeff=str(coeff),
        i_max=i_max,
        k_max=k_max,
        hypothesis=flags,
        cells=cells,
        maps=maps,
        iso_onsets=onsets,
        range_violations=violations,
        asserted=asserted,
    )


@dataclass
class H0Table:
    group_name: str
    class_elements: list
    g_hat: int
    counts: dict  # k -> orbit count
    map_surjective: dict  # k -> bool (orbit map k -> k+1)
    map_injective: dict

    def to_json(self):
        return {
            "group": self.group_name,
            "class": list(self.class_elements),
            "stabiliser": self.g_hat,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "map_surjective": {
                str(k): v for k, v in sorted(self.map_surjective.items())
            },
            "map_injective": {
                str(k): v for k, v in sorted(self.map_injective.items())
            },
        }

    def to_tsv(self):
        lines = ["k\torbits\tmap_surjective\tmap_injective"]
        for k in sorted(self.counts):
            surj = self.map_surjective.get(k, "-")
            inj = self.map_injective.get(k, "-")
            lines.append(f"{k}\t{self.counts[k]}\t{surj}\t{inj}")
        return "\n".join(lines) + "\n"


def h0_table(group, classes, g_hat, k_max, max_tuples=10_000_000):
    """Orbit counts (H_0 is free on the orbit set) and the flags of the
    append-induced orbit maps."""
    parts = {}
    counts = {}
    for k in range(1, k_max + 1):
        parts[k] = orbits(classes, k, max_tuples=max_tuples)
        counts[k] = len(parts[k])
    surj = {}
    inj = {}
    for k in range(1, k_max):
        src, tgt = parts[k], parts[k + 1]
        images = set()
        injective = True
        seen = {}
        for rep_code in src.reps:
            entries = src.decode(rep_code)
            target_idx = tgt.orbit_index_of(entries + (g_hat,))
            if target_idx in seen:
                injective = False
            seen[target_idx] = rep_code
            images.add(target_idx)
        surj[k] = len(images) == len(tgt)
        inj[k] = injective
    return H0Table(
        group_name=group.name,
        class_elements=list(classes.elements),
        g_hat=g_hat,
        counts=counts,
        map_surjective=surj,
        map_injective=inj,
    )


@dataclass
class SplitAudit:
    flags: dict  # (k, i) -> bool
    asserted: bool
    violations: list

    def to_json(self):
        return {
            "flags": {f"{k},{i}": v for (k, i), v in sorted(self.flags.items())},
            "asserted": self.asserted,
            "violations": self.violations,
        }


def split_audit(report):
    """Split-injectivity flags for every map in a Z-grid report.

    Asserted (violations collected) when |c| = 1, where the classical
    split-injectivity claim applies; reported without assertion
    otherwise.
    """
    if report.coeff != "Z":
        raise ValueError("split audit requires a Z-coefficient report")
    flags = {}
    violations = []
    asserted = len(report.class_elements) == 1
    for (k, i), m in sorted(report.maps.items()):
        flags[(k, i)] = m.is_split_injective
        if asserted and not m.is_split_injective:
            violations.append({"k": k, "i": i})
    return SplitAudit(flags=flags, asserted=asserted, violations=violations)


def universal_coefficient_check(z_report, f_report, p):
    """The rank identity dim_Fp H_i = rank H_i + #{p | torsion of H_i}
    + #{p | torsion of H_{i-1}}, asserted cellwise."""
    failures = []
    for (k, i), fp_group in f_report.cells.items():
        z_i = z_report.cells.get((k, i))
        if z_i is None:
            continue
        expected = z_i.free_rank + sum(1 for d in z_i.torsion if d % p == 0)
        z_prev = z_report.cells.get((k, i - 1))
        if z_prev is not None:
            expected += sum(1 for d in z_prev.torsion if d % p == 0)
        if fp_group.free_rank != expected:
            failures.append(
                {
                    "k": k,
                    "i": i,
                    "dim_Fp": fp_group.free_rank,
                    "expected": expected,
                }
            )
    return failures
