"""Post-interview analysis: categorize constructs, map them to aesthetics,
and compute per-study usage and reproducibility reports.

Constructs fall into four categories: visual_mapping and composition cover
aesthetics proper (use of visual primitives, and layout/alignment/density);
data_related constructs describe the underlying data rather than the
drawing; visual_experience constructs describe hedonic quality.  Only the
first two categories may be mapped to an aesthetic: either one of the 31
catalog entries or a free-text name for a newly proposed aesthetic.

Reports count participants, not construct instances: an aesthetic's count
for a study is the number of distinct participants with at least one
construct mapped to it.  Multiple analysts can tag and map independently;
reports use a designated analyst and a disagreement listing is available
to surface diverging categorizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .catalog import MetricId, catalog
from .rgt import RgtError, UnknownConstructError

CATEGORIES = ("visual_mapping", "composition", "data_related", "visual_experience")
MAPPABLE_CATEGORIES = ("visual_mapping", "composition")
DEFAULT_ANALYST = "primary"


class MappingNotAllowedError(RgtError):
    code = "mapping_not_allowed"


class InvalidCategoryError(RgtError):
    code = "invalid_category"


@dataclass(frozen=True)
class CategoryTag:
    construct_id: str
    category: str
    analyst: str

    def to_dict(self) -> dict[str, Any]:
        return {"construct": self.construct_id, "category": self.category, "analyst": self.analyst}


@dataclass(frozen=True)
class AestheticMapping:
    construct_id: str
    aesthetic: str  # catalog metric id value, or free text for a new aesthetic
    analyst: str

    @property
    def is_catalog(self) -> bool:
        return self.aesthetic in set(m.value for m in MetricId)

    def to_dict(self) -> dict[str, Any]:
        return {"construct": self.construct_id, "aesthetic": self.aesthetic, "analyst": self.analyst}


@dataclass(frozen=True)
class _ConstructRef:
    construct_id: str  # globally unique: "<session>:<construct>"
    session_id: str
    study_id: str
    participant: str
    pole_a: str
    pole_b: str
    ladder_parent: str | None


class AnalysisWorkspace:
    """Holds session exports plus analyst tags and mappings; reports are pure
    functions of this state and recomputing them is idempotent."""

    def __init__(self) -> None:
        self._constructs: dict[str, _ConstructRef] = {}
        self._studies: dict[str, list[str]] = {}  # study -> participant labels
        self._tags: dict[tuple[str, str], CategoryTag] = {}  # (construct, analyst)
        self._mappings: dict[tuple[str, str], AestheticMapping] = {}

    # -- ingest --------------------------------------------------------------

    def add_session_export(self, export: dict[str, Any]) -> None:
        study_id = export["study"]
        participant = export["participant"]
        self._studies.setdefault(study_id, [])
        if participant not in self._studies[study_id]:
            self._studies[study_id].append(participant)
        session_id = export["session"]
        for construct in export["constructs"]:
            global_id = f"{session_id}:{construct['id']}"
            parent = construct.get("ladder_parent")
            self._constructs[global_id] = _ConstructRef(
                construct_id=global_id,
                session_id=session_id,
                study_id=study_id,
                participant=participant,
                pole_a=construct["pole_a"],
                pole_b=construct["pole_b"],
                ladder_parent=f"{session_id}:{parent}" if parent else None,
            )

    @property
    def studies(self) -> list[str]:
        return sorted(self._studies)

    def participants(self, study_id: str) -> list[str]:
        return list(self._studies.get(study_id, []))

    def constructs(self, study_id: str | None = None) -> list[_ConstructRef]:
        refs = sorted(self._constructs.values(), key=lambda r: r.construct_id)
        if study_id is None:
            return refs
        return [r for r in refs if r.study_id == study_id]

    def construct(self, construct_id: str) -> _ConstructRef:
        try:
            return self._constructs[construct_id]
        except KeyError:
            raise UnknownConstructError(f"unknown construct {construct_id}") from None

    # -- tagging -------------------------------------------------------------

    def tag_construct(
        self, construct_id: str, category: str, analyst: str = DEFAULT_ANALYST
    ) -> CategoryTag:
        """Assign a category; re-tagging by the same analyst replaces.

        Changing the category away from a mappable one drops that analyst's
        mapping for the construct.
        """
        self.construct(construct_id)
        if category not in CATEGORIES:
            raise InvalidCategoryError(f"unknown category {category!r}")
        tag = CategoryTag(construct_id, category, analyst)
        self._tags[(construct_id, analyst)] = tag
        if category not in MAPPABLE_CATEGORIES:
            self._mappings.pop((construct_id, analyst), None)
        return tag

    def tag_of(self, construct_id: str, analyst: str = DEFAULT_ANALYST) -> CategoryTag | None:
        return self._tags.get((construct_id, analyst))

    def map_construct(
        self,
        construct_id: str,
        aesthetic: MetricId | str,
        analyst: str = DEFAULT_ANALYST,
    ) -> AestheticMapping:
        """Map a construct to a catalog aesthetic or a new free-text one.

        Only constructs the analyst tagged visual_mapping or composition can
        be mapped; the other two categories do not describe aesthetics.
        """
        self.construct(construct_id)
        tag = self.tag_of(construct_id, analyst)
        if tag is None or tag.category not in MAPPABLE_CATEGORIES:
            raise MappingNotAllowedError(
                "construct must be tagged visual_mapping or composition before mapping"
            )
        name = aesthetic.value if isinstance(aesthetic, MetricId) else str(aesthetic).strip()
        if not name:
            raise MappingNotAllowedError("aesthetic name must be non-empty")
        mapping = AestheticMapping(construct_id, name, analyst)
        self._mappings[(construct_id, analyst)] = mapping
        return mapping

    def mapping_of(
        self, construct_id: str, analyst: str = DEFAULT_ANALYST
    ) -> AestheticMapping | None:
        return self._mappings.get((construct_id, analyst))

    # -- reports ---------------------------------------------------------------

    def category_distribution(self, analyst: str = DEFAULT_ANALYST) -> dict[str, int]:
        """Construct counts per category (sums to the tagged construct count)."""
        counts = {c: 0 for c in CATEGORIES}
        for (_, tag_analyst), tag in self._tags.items():
            if tag_analyst == analyst:
                counts[tag.category] += 1
        return counts

    def usage_report(
        self,
        studies: Iterable[str] | None = None,
        analyst: str = DEFAULT_ANALYST,
    ) -> dict[str, Any]:
        """Distinct-participant usage counts per aesthetic and study.

        ``catalog`` maps every catalog id to per-study counts (0 = unused);
        ``new_aesthetics`` collects free-text mappings the same way.
        """
        study_ids = list(studies) if studies is not None else self.studies
        users: dict[str, dict[str, set[str]]] = {}
        for (construct_id, map_analyst), mapping in sorted(self._mappings.items()):
            if map_analyst != analyst:
                continue
            ref = self._constructs[construct_id]
            if ref.study_id not in study_ids:
                continue
            users.setdefault(mapping.aesthetic, {}).setdefault(ref.study_id, set()).add(
                ref.participant
            )
        catalog_ids = [entry.id.value for entry in catalog()]

        def counts_for(name: str) -> dict[str, int]:
            per_study = users.get(name, {})
            return {sid: len(per_study.get(sid, ())) for sid in study_ids}

        return {
            "studies": study_ids,
            "participants": {sid: len(self.participants(sid)) for sid in study_ids},
            "catalog": {mid: counts_for(mid) for mid in catalog_ids},
            "new_aesthetics": {
                name: counts_for(name)
                for name in sorted(users)
                if name not in catalog_ids
            },
        }

    def reproducibility_report(
        self,
        studies: Iterable[str] | None = None,
        analyst: str = DEFAULT_ANALYST,
    ) -> dict[str, Any]:
        """Catalog coverage per study plus cross-study agreement.

        mean_usage_rate averages, over catalog aesthetics used at least
        once, the fraction of all participants who used each: unused
        aesthetics do not dilute the mean.
        """
        usage = self.usage_report(studies, analyst)
        study_ids = usage["studies"]
        if not study_ids:
            raise RgtError("reproducibility report needs at least one study")
        entries = catalog()
        evaluated = [e.id.value for e in entries if e.evaluated]
        per_study: dict[str, Any] = {}
        for sid in study_ids:
            used = [mid for mid, counts in usage["catalog"].items() if counts[sid] > 0]
            per_study[sid] = {
                "used": used,
                "catalog_coverage": len(used) / len(entries),
                "evaluated_coverage": sum(1 for mid in used if mid in evaluated)
                / len(evaluated),
            }
        used_sets = [set(per_study[sid]["used"]) for sid in study_ids]
        used_by_all = sorted(set.intersection(*used_sets))
        used_by_some = sorted(set.union(*used_sets))
        used_by_none = sorted(
            e.id.value for e in entries if e.id.value not in used_by_some
        )
        total_participants = sum(usage["participants"][sid] for sid in study_ids)
        rates = []
        for mid, counts in usage["catalog"].items():
            users = sum(counts.values())
            if users > 0 and total_participants > 0:
                rates.append(users / total_participants)
        mean_usage = sum(rates) / len(rates) if rates else 0.0
        return {
            "per_study": per_study,
            "used_by_all": used_by_all,
            "used_by_some": used_by_some,
            "used_by_none": used_by_none,
            "mean_usage_rate": mean_usage,
        }

    def disagreements(self) -> list[dict[str, Any]]:
        """Constructs whose category differs between analysts."""
        by_construct: dict[str, dict[str, str]] = {}
        for (construct_id, analyst), tag in self._tags.items():
            by_construct.setdefault(construct_id, {})[analyst] = tag.category
        out = []
        for construct_id in sorted(by_construct):
            tags = by_construct[construct_id]
            if len(set(tags.values())) > 1:
                out.append({"construct": construct_id, "tags": dict(sorted(tags.items()))})
        return out


def render_usage_table(report: dict[str, Any]) -> str:
    """Plain-text usage table: name | evaluated | one count column per study.

    Zero counts print as a dash.  Novel catalog rows and free-text new
    aesthetics are listed in their own sections.
    """
    study_ids = report["studies"]
    entries = catalog()
    name_width = max(
        [len(e.display_name) for e in entries]
        + [len(n) for n in report["new_aesthetics"]]
        + [len("Name")]
    )
    col_width = max([len(sid) for sid in study_ids] + [5]) if study_ids else 5

    def row(name: str, evaluated: str, counts: list[str]) -> str:
        cells = [name.ljust(name_width), evaluated.ljust(9)]
        cells.extend(c.rjust(col_width) for c in counts)
        return " | ".join(cells)

    def count_cells(counts: dict[str, int]) -> list[str]:
        return [str(counts[sid]) if counts[sid] > 0 else "-" for sid in study_ids]

    lines = [row("Name", "Evaluated", list(study_ids))]
    lines.append("-" * len(lines[0]))
    for entry in entries:
        if entry.novel:
            continue
        lines.append(
            row(
                entry.display_name,
                "yes" if entry.evaluated else "",
                count_cells(report["catalog"][entry.id.value]),
            )
        )
    lines.append("")
    lines.append("Novel (catalog)")
    for entry in entries:
        if entry.novel:
            lines.append(
                row(entry.display_name, "", count_cells(report["catalog"][entry.id.value]))
            )
    if report["new_aesthetics"]:
        lines.append("")
        lines.append("New aesthetics")
        for name in sorted(report["new_aesthetics"]):
            lines.append(row(name, "", count_cells(report["new_aesthetics"][name])))
    return "\n".join(lines) + "\n"
