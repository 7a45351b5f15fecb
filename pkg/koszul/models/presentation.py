"""E(n)R-module presentations: generators plus the dual differential."""

from dataclasses import dataclass
from enum import Enum

from koszul.models.base import BaseModel


class TermKind(Enum):
    """Operator carried by a differential term."""

    R = 'R'
    V = 'v'


@dataclass(frozen=True)
class DifferentialTerm(BaseModel):
    """One summand R^index y or v_index y of d on a generator."""

    kind: TermKind
    index: int
    target: str

    def to_dict(self):
        return {self.kind.value: self.index, 'gen': self.target}

    def __str__(self):
        op = 'R' if self.kind is TermKind.R else 'v'
        return f'{op}{self.index} {self.target}'


@dataclass(frozen=True)
class ModulePresentation(BaseModel):
    """Generators with Adams degrees and the differential on each generator."""

    name: str
    generators: tuple
    differential: tuple = ()

    @property
    def generator_map(self):
        return {g.id: g for g in self.generators}

    def generator(self, generator_id):
        return self.generator_map[generator_id]

    def terms_for(self, generator_id):
        for gid, terms in self.differential:
            if gid == generator_id:
                return terms
        return ()

    def restricted(self, min_degree):
        """Presentation on the generators of degree >= min_degree."""
        kept = tuple(g for g in self.generators if g.degree >= min_degree)
        ids = {g.id for g in kept}
        differential = tuple((gid, terms) for gid, terms in self.differential if gid in ids)
        return ModulePresentation(self.name, kept, differential)

    def to_dict(self):
        return {
            'format': 1,
            'name': self.name,
            'generators': [{'id': g.id, 'degree': g.degree} for g in self.generators],
            'differential': {
                gid: [t.to_dict() for t in terms] for gid, terms in self.differential if terms
            },
        }

    def __repr__(self):
        return f'<ModulePresentation({self.name}, {len(self.generators)} generators)>'
