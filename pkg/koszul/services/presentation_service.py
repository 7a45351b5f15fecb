"""Module presentations: the BP preset and the JSON module file format."""

import json
import logging

from koszul.models.monomial import Generator
from koszul.models.presentation import DifferentialTerm, ModulePresentation, TermKind
from koszul.utils.constants import PRESETS
from koszul.utils.exceptions import PresentationError
from koszul.utils.validators import validate_module_document

logger = logging.getLogger(__name__)


def bp_generator_degree(k):
    """Adams degree of y_k in the BP presentation."""
    return -((1 << (k + 1)) - 2)


class PresentationService:
    """Service for building, parsing and rendering module presentations."""

    @staticmethod
    def bp_preset(k_max):
        """Indecomposables of H_*BP: y_1..y_kmax with d y_k = sum_{j<k} R^{2^{k+1}-2^{j+1}+1} y_j."""
        if k_max < 1:
            raise PresentationError(f"k_max must be at least 1, got {k_max}")
        generators = tuple(Generator(f'y{k}', bp_generator_degree(k), k) for k in range(1, k_max + 1))
        differential = []
        for k in range(1, k_max + 1):
            terms = tuple(
                DifferentialTerm(TermKind.R, (1 << (k + 1)) - (1 << (j + 1)) + 1, f'y{j}')
                for j in range(1, k)
            )
            differential.append((f'y{k}', terms))
        return ModulePresentation('bp', generators, tuple(differential))

    @staticmethod
    def bp_k_max_for(min_degree):
        """Largest k with deg(y_k) >= min_degree (at least 1)."""
        k = 1
        while bp_generator_degree(k + 1) >= min_degree:
            k += 1
        return k

    @staticmethod
    def parse_module(text):
        """Parse a module document (JSON text or already-decoded dict)."""
        if isinstance(text, (str, bytes)):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise PresentationError("module file is not valid JSON", [str(e)])
        else:
            data = text

        valid, errors, loaded = validate_module_document(data)
        if not valid:
            logger.error(f"Rejected module presentation: {len(errors)} problem(s)")
            raise PresentationError("invalid module presentation", errors)

        generators = tuple(
            Generator(g['id'], g['degree'], index)
            for index, g in enumerate(loaded['generators'], start=1)
        )
        differential = []
        for generator in generators:
            terms = tuple(
                DifferentialTerm(TermKind.R, t['R'], t['gen']) if 'R' in t
                else DifferentialTerm(TermKind.V, t['v'], t['gen'])
                for t in loaded['differential'].get(generator.id, [])
            )
            differential.append((generator.id, terms))
        presentation = ModulePresentation(loaded['name'], generators, tuple(differential))
        logger.info(f"Loaded module presentation {presentation.name} with {len(generators)} generators")
        return presentation

    @staticmethod
    def render_module(presentation):
        """Serialize a presentation to module-file JSON."""
        return json.dumps(presentation.to_dict(), indent=2, sort_keys=True)

    @staticmethod
    def load(source, min_degree=None):
        """Resolve a ``--module`` value: a preset name or a path to a module file."""
        if source.lower() == PRESETS['BP']:
            k_max = PresentationService.bp_k_max_for(min_degree) if min_degree is not None else 8
            return PresentationService.bp_preset(k_max)
        try:
            with open(source, encoding='utf-8') as handle:
                text = handle.read()
        except OSError as e:
            logger.error(f"Cannot read module file {source}: {e}")
            raise PresentationError(f"cannot read module file '{source}'", [str(e)])
        presentation = PresentationService.parse_module(text)
        if min_degree is not None:
            presentation = presentation.restricted(min_degree)
        return presentation


bp_preset = PresentationService.bp_preset
parse_module = PresentationService.parse_module
