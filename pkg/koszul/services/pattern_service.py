"""Module-structure annotation and closed-form predictions for the BP complexes."""

import logging

from koszul.models.matrix import Gf2Vector
from koszul.models.monomial import v_degree
from koszul.services.cohomology_service import CohomologyService
from koszul.services.complex_service import admissible_words
from koszul.utils.constants import LABEL_CORRECTIONS

logger = logging.getLogger(__name__)

Y1_DEGREE = -2


def killed_suffixes(max_length):
    """Suffixes R^5, R^9 R^4, R^17 R^8 R^4, ... of words that are boundaries at n = -1."""
    out = []
    for j in range(1, max_length + 1):
        out.append(((1 << (j + 1)) + 1,) + tuple(1 << i for i in range(j, 1, -1)))
    return out


def tower_word(j):
    """(), (4,), (8, 4), (16, 8, 4), ..."""
    return tuple(1 << i for i in range(j + 1, 1, -1))


def _y1_words(x_min, x_max, s_max):
    for m in range(s_max + 1):
        for total in range(-x_max + Y1_DEGREE, -x_min + Y1_DEGREE + 1):
            if total < 0:
                continue
            for word in admissible_words(m, total, 4):
                yield word


def _ends_in_killed(word):
    return any(word[-len(t):] == t for t in killed_suffixes(len(word)) if len(t) <= len(word))


def _label(word, v=''):
    parts = ([v] if v else []) + [f'R{a}' for a in word] + ['y1']
    return ' '.join(parts)


class PatternService:
    """Predictions stated for the BP complexes, and an annotator for v_i-structure."""

    @staticmethod
    def n_minus_one_basis(x_min, x_max, s_max):
        """Cell -> labels of the level -1 cohomology basis: y1-words not ending in a killed suffix."""
        out = {}
        for word in _y1_words(x_min, x_max, s_max):
            if _ends_in_killed(word):
                continue
            cell = (Y1_DEGREE - sum(word), len(word))
            out.setdefault(cell, set()).add(_label(word))
        return out

    @staticmethod
    def n_zero_torsion(x_min, x_max, s_max):
        """Cell -> labels of the v_0-torsion classes at level 0 (odd leading index)."""
        out = {}
        for word in _y1_words(x_min, x_max, s_max):
            if word and word[0] % 2 == 1 and not _ends_in_killed(word):
                cell = (Y1_DEGREE - sum(word), len(word))
                out.setdefault(cell, set()).add(_label(word))
        return out

    @staticmethod
    def n_zero_towers(x_min, s_max):
        """Bottom cells of the v_0-towers at level 0: y1, R4 y1, R8 R4 y1, ..."""
        out = []
        j = 0
        while True:
            word = tower_word(j)
            x = Y1_DEGREE - sum(word)
            if x < x_min or j > s_max:
                return out
            out.append(((x, j), _label(word)))
            j += 1

    @staticmethod
    def n_zero_dimension(x, s, x_min, s_max):
        """Predicted dim H at level 0."""
        towers = sum(1 for (tx, ts), _ in PatternService.n_zero_towers(x_min, s_max) if tx == x and ts <= s)
        torsion = len(PatternService.n_zero_torsion(x, x, s_max).get((x, s), ()))
        return towers + torsion

    @staticmethod
    def critical_classes(n):
        """v0^3 y1 and v_i R^a R^b y1 with 3 <= i <= n, a, b odd, b >= 7, a > 2b, a + b = 2^{i+1} - 2."""
        labels = ['v0^3 y1']
        for i in range(3, n + 1):
            total = v_degree(i)
            for b in range(7, total, 2):
                a = total - b
                if a > 2 * b and a % 2 == 1:
                    labels.append(f'v{i} R{a} R{b} y1')
        return labels

    @staticmethod
    def weight_two_generators(x_min, x_max):
        """(a, b) with a, b odd, b >= 7, a > 2b and x = -a - b - 2 in range."""
        out = []
        for total in range(max(0, -x_max - 2), -x_min - 1):
            for b in range(7, total // 3 + 1, 2):
                a = total - b
                if a % 2 == 1 and a > 2 * b:
                    out.append((a, b))
        return out

    @staticmethod
    def predicted_n_zero_differential(word, k=0):
        """d(v0^k R^{a_1}... y1) at level 0 as (exponent, word), or None when it vanishes."""
        if not word or word[0] % 2 == 1:
            return None
        return (k + 1, (word[0] + 1,) + tuple(word[1:]))

    @staticmethod
    def corrected_label(label):
        return LABEL_CORRECTIONS.get(label, label)

    @staticmethod
    def correction_notes(labels):
        """Notes for computed labels that published charts print differently."""
        misprints = {correct: printed for printed, correct in LABEL_CORRECTIONS.items()}
        return [
            f"{label} is printed as {misprints[label]} in published charts"
            for label in sorted({text.split(' + ')[0] for text in labels} & set(misprints))
        ]

    @staticmethod
    def annotate(report):
        """Label v_0-towers, v_0-torsion and (v_0, v_k)-sawtooth relations; other structure stays raw."""
        n = report.n
        if n < 0:
            return []
        for i in range(n + 1):
            if i not in report.v_actions:
                CohomologyService.v_action(i, report)
        v0 = report.v_actions[0]
        notes = []
        for (x, s), data in sorted(report.cells.items()):
            for record in data.classes:
                note = {'id': record.id, 'label': record.label, 'kind': 'raw', 'relations': []}
                action = v0.get((x, s))
                if action is None:
                    notes.append(note)
                    continue
                image = Gf2Vector(action.rows, action.column_bits(record.index))
                if image.is_zero():
                    note['kind'] = 'v0-torsion'
                else:
                    note['kind'] = 'v0-tower' if PatternService._tower(report, (x, s + 1), image) else 'raw'
                    for k in range(1, n + 1):
                        for other in report.classes_at(x - v_degree(k), s):
                            vk = report.v_actions[k].get(other.cell)
                            if vk is None:
                                continue
                            if vk.column_bits(other.index) == image.bits:
                                note['relations'].append(f'v0 [{record.label}] = v{k} [{other.label}]')
                                note['kind'] = f'(v0,v{k})-sawtooth'
                notes.append(note)
        return notes

    @staticmethod
    def _tower(report, cell, vector):
        action = report.v_actions[0]
        while vector.bits:
            matrix = action.get(cell)
            if matrix is None:
                return True
            vector = matrix.apply(vector)
            cell = (cell[0], cell[1] + 1)
        return False
