"""Configuration registry for the eight untwisted lowest-weight modules.

The registry JSON lists each module with its lowest weights (h, k), its
file of singular vectors, the generator truncation used in fusion
bounds, its contragredient, and its sector data (which stable set of
the group action it comes from, and the eigenvalue exponent of the
group generator on its top level).  The companion group configuration
describes the cyclic group, its action on the underlying module labels,
and the underlying fusion triples used for lower bounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from .exprparse import load_records, parse_vector
from .orbifold import (
    FiniteGroup,
    GroupSetAlgebra,
    SimpleModule,
    StableSet,
    intertwiner_module,
    lower_bound,
    simple_modules,
)
from .pbw import ModeAlgebra, ModuleParams, PbwVector
from .scalars import ONE, OMEGA, QuadScalar, parse_scalar
from .zhu import FusionBounder


def data_path(name: str) -> Path:
    return Path(resources.files("wfusion").joinpath("data", name))


@dataclass(frozen=True)
class ModuleSpec:
    name: str
    h: QuadScalar
    k: QuadScalar
    corpus: Optional[str]
    flip: bool
    flip_augment: Tuple[int, ...]
    truncation: Optional[int]
    contragredient: str
    sector: Mapping[str, object]

    @property
    def params(self) -> ModuleParams:
        return ModuleParams(self.h, self.k)

    @property
    def weights(self) -> Tuple[QuadScalar, QuadScalar]:
        return (self.h, self.k)


class ModuleRegistry:
    """Loaded registry plus lazily built computational objects."""

    def __init__(self, config: dict, base_dir: Path):
        self.base_dir = base_dir
        self.modules: Dict[str, ModuleSpec] = {}
        for entry in config["modules"]:
            spec = ModuleSpec(
                name=entry["name"],
                h=parse_scalar(entry["h"]),
                k=parse_scalar(entry["k"]),
                corpus=entry.get("corpus"),
                flip=entry.get("flip", False),
                flip_augment=tuple(entry.get("flip_augment", ())),
                truncation=entry.get("truncation"),
                contragredient=entry["contragredient"],
                sector=entry["sector"],
            )
            self.modules[spec.name] = spec
        group_cfg = json.loads((base_dir / config["group_config"]).read_text())
        self._load_group(group_cfg)
        self._corpus_cache: Dict[str, List[PbwVector]] = {}
        self._bounder_cache: Dict[str, FusionBounder] = {}

    @classmethod
    def load(cls, path: Optional[Path] = None) -> "ModuleRegistry":
        if path is None:
            path = data_path("registry.json")
        path = Path(path)
        return cls(json.loads(path.read_text()), path.parent)

    # -- group side ---------------------------------------------------------

    def _load_group(self, cfg: dict):
        gspec = cfg["group"]
        if gspec.get("type") != "cyclic":
            raise ValueError("only cyclic group configurations are shipped")
        self.group = FiniteGroup.cyclic(gspec["order"], gspec.get("generator", "t"))
        self.generator = self.group.elements[1]
        gen_action: Mapping[str, str] = cfg["generator_action"]

        def make_action(labels):
            action = {}
            for lab in labels:
                current = lab
                for elem in self.group.elements:  # ordered as e, t, t^2, ...
                    action[(lab, elem)] = current
                    current = gen_action[current]
            return action

        self.stable_sets: Dict[str, StableSet] = {}
        self.algebras: Dict[str, GroupSetAlgebra] = {}
        self.simples: Dict[str, List[SimpleModule]] = {}
        for name, labels in cfg["stable_sets"].items():
            sset = StableSet(name, tuple(labels), self.group, make_action(labels))
            self.stable_sets[name] = sset
            algebra = GroupSetAlgebra(self.group, sset)
            self.algebras[name] = algebra
            self.simples[name] = simple_modules(algebra)
        self.fusion_triples: FrozenSet[Tuple[str, str, str]] = frozenset(
            tuple(t) for t in cfg["fusion_triples"]
        )
        self.iso_scalars = {
            # config maps "a|L1|L2|L3" -> scalar string
            (key.split("|")[0], tuple(key.split("|")[1:])): parse_scalar(value)
            for key, value in cfg.get("iso_scalars", {}).items()
        }

    def simple_for(self, name: str) -> SimpleModule:
        spec = self.modules[name]
        sset = spec.sector["stable_set"]
        exponent = spec.sector.get("tau_exponent")
        candidates = self.simples[sset]
        if exponent is None:
            if len(candidates) != 1:
                raise ValueError(
                    f"module {name} needs a tau_exponent to pick among "
                    f"{len(candidates)} simples"
                )
            return candidates[0]
        target = OMEGA**exponent if exponent else ONE
        for simple in candidates:
            if simple.character.get(self.generator) == target:
                return simple
        raise ValueError(f"no simple module with generator eigenvalue {target}")

    # -- module side --------------------------------------------------------

    def names(self) -> List[str]:
        return list(self.modules)

    def algebra(self, name: str) -> ModeAlgebra:
        return ModeAlgebra(self.modules[name].params)

    def corpus_vectors(self, name: str) -> List[PbwVector]:
        if name in self._corpus_cache:
            return self._corpus_cache[name]
        spec = self.modules[name]
        if spec.corpus is None:
            return []
        algebra = self.algebra(name)
        vectors = [
            parse_vector(rec, algebra)
            for rec in load_records(self.base_dir / spec.corpus)
        ]
        if spec.flip:
            vectors = [v.flip_j() for v in vectors]
        vectors += [vectors[i].flip_j() for i in spec.flip_augment]
        self._corpus_cache[name] = vectors
        return vectors

    def bounder(self, name: str) -> FusionBounder:
        if name not in self._bounder_cache:
            spec = self.modules[name]
            if spec.truncation is None:
                raise ValueError(f"module {name} has no fusion-bound configuration")
            self._bounder_cache[name] = FusionBounder(
                spec.params, self.corpus_vectors(name), spec.truncation
            )
        return self._bounder_cache[name]

    def upper_bound(self, l1: str, l2: str, left: Tuple[QuadScalar, QuadScalar]) -> int:
        """Zhu upper bound for the multiplicity of weights ``left`` in l1 x l2.

        The first factor being the whole algebra is handled by
        simplicity: the only target is l2 itself.
        """
        spec1 = self.modules[l1]
        if spec1.truncation is None:
            return 1 if self.modules[l2].weights == left else 0
        return self.bounder(l1).bound(self.modules[l2].weights, left)

    def lower_bound(self, l1: str, l2: str, l3: str) -> int:
        s1 = self.simple_for(l1)
        s2 = self.simple_for(l2)
        algebra3 = self.algebras[self.modules[l3].sector["stable_set"]]
        module = intertwiner_module(
            s1, s2, algebra3, self.fusion_triples, self.iso_scalars
        )
        return lower_bound(module, self.simple_for(l3))
