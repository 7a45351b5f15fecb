"""Chart documents: classes placed in Adams grading with v-lines and differential arrows."""

from dataclasses import dataclass, field

from koszul.models.base import BaseModel
from koszul.utils.constants import FORMAT_VERSIONS


@dataclass
class ChartClass(BaseModel):
    id: str
    x: int
    s: int
    weight: int
    label: str


@dataclass
class ChartLine(BaseModel):
    kind: str
    from_id: str
    to_id: str

    @property
    def index(self):
        return int(self.kind[1:])

    def to_dict(self):
        return {'kind': self.kind, 'from': self.from_id, 'to': self.to_id}


@dataclass
class ChartDifferential(BaseModel):
    page: int
    from_id: str
    to_id: str

    def to_dict(self):
        return {'page': self.page, 'from': self.from_id, 'to': self.to_id}


@dataclass
class ChartDocument(BaseModel):
    """Serializable chart; the JSON form carries "chart-format": 1."""

    classes: list = field(default_factory=list)
    lines: list = field(default_factory=list)
    differentials: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def class_ids(self):
        return {c.id for c in self.classes}

    def classes_at(self, x, s):
        return [c for c in self.classes if c.x == x and c.s == s]

    def dangling(self):
        """Endpoint ids of lines and arrows that name no class."""
        ids = self.class_ids()
        edges = [(e.from_id, e.to_id) for e in self.lines + self.differentials]
        return sorted({end for edge in edges for end in edge if end not in ids})

    def to_dict(self):
        return {
            'chart-format': FORMAT_VERSIONS['CHART'],
            'classes': [c.to_dict() for c in self.classes],
            'lines': [line.to_dict() for line in self.lines],
            'differentials': [d.to_dict() for d in self.differentials],
            'metadata': dict(self.metadata),
        }

    def __repr__(self):
        counts = f'{len(self.classes)} classes, {len(self.lines)} lines, {len(self.differentials)} arrows'
        return f'<ChartDocument({counts})>'
