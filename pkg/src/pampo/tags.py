"""The closed POS tag set (a subset of the Bosque/Floresta tags)."""

from __future__ import annotations

import enum
import logging

logger = logging.getLogger(__name__)


class PosTag(str, enum.Enum):
    PROP = "prop"
    N = "n"
    ADJ = "adj"
    V_FI = "v-fi"
    V_INF = "v-inf"
    V_PCP = "v-pcp"
    ADV = "adv"
    PRON_DET = "pron-det"
    PRON_PERS = "pron-pers"
    PRP = "prp"
    ART = "art"
    NUM = "num"
    CONJ = "conj"
    PUNC = "punc"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


_BY_NAME = {t.value: t for t in PosTag}


def parse_tag(name: str, *, strict: bool = False) -> PosTag:
    """Map an external tag string onto :class:`PosTag`.

    Unknown names become ``PosTag.OTHER`` with a logged warning, or raise
    ``ValueError`` when ``strict`` is set.
    """
    tag = _BY_NAME.get(name.strip())
    if tag is not None:
        return tag
    if strict:
        raise ValueError(f"unknown POS tag {name!r}")
    logger.warning("unknown POS tag %r mapped to 'other'", name)
    return PosTag.OTHER
