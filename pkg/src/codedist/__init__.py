"""Code distances of linear codes: best sub- and supercode minimum distances."""

from .budget import Budget
from .code import (
    AmbientSpace,
    LinearCode,
    dual,
    extend_code,
    is_sld,
    max_weight,
    min_distance,
    min_distance_via_parity,
    min_ld_card,
    min_sld_card,
    parity_check,
    puncture,
    shorten,
    sld_set,
    sld_set_via_parity,
)
from .codefile import code_digest, format_code, parse_code, read_code, write_code
from .constructions import (
    builtin,
    builtin_names,
    evaluation_code,
    even_weight,
    full_space,
    gabidulin,
    hadamard_rank,
    reed_solomon,
    simplex,
    twisted_reed_solomon,
)
from .errors import *  # noqa: F401,F403
from .field import GF, Embedding, Field, embed, extension_field, field_new
from .invariants import *  # noqa: F401,F403
from .linalg import SubspaceEnumerator, VectorSpace, enumerate_subspaces, gaussian_binomial, kernel, rank, rref
from .report import Report, RunConfig, build_report

__version__ = "0.1.0"
